//! Decorated partitions and indexed compositions.
//!
//! Decorations are class indices into a [`crate::groups::ConjugacyClassTable`]
//! (or any other finite index set). Integer partitions use decoration `0`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// A part `(decoration, size)`.
pub type Part = (usize, usize);

/// A finite formal sum of parts. Zero multiplicities are never stored, so
/// equality is structural. Parts are ordered by `(decoration, size)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPartition {
    parts: BTreeMap<Part, usize>,
}

impl DecoratedPartition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The single part `(x, m)`.
    pub fn single(x: usize, m: usize) -> Self {
        Self::from_parts(&[(x, m, 1)])
    }

    /// From `(decoration, size, multiplicity)` triples. Panics on size 0.
    pub fn from_parts(triples: &[(usize, usize, usize)]) -> Self {
        let mut p = Self::empty();
        for &(x, m, k) in triples {
            p.insert(x, m, k);
        }
        p
    }

    /// An integer partition from its parts, e.g. `[2, 1, 1]`.
    pub fn integer(sizes: &[usize]) -> Self {
        let mut p = Self::empty();
        for &m in sizes {
            p.insert(0, m, 1);
        }
        p
    }

    /// Adds `k` copies of `(x, m)`.
    pub fn insert(&mut self, x: usize, m: usize, k: usize) {
        assert!(m >= 1, "parts have positive size");
        if k > 0 {
            *self.parts.entry((x, m)).or_default() += k;
        }
    }

    /// `λ_{x,m}`.
    pub fn mult(&self, x: usize, m: usize) -> usize {
        self.parts.get(&(x, m)).copied().unwrap_or(0)
    }

    /// `((x, m), λ_{x,m})` for the nonzero entries, in canonical order.
    pub fn parts(&self) -> impl Iterator<Item = (Part, usize)> + '_ {
        self.parts.iter().map(|(&p, &k)| (p, k))
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(x, m), &k) in &other.parts {
            out.insert(x, m, k);
        }
        out
    }

    /// `self − other` if `other ≤ self` part by part.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut out = self.clone();
        for (&key, &k) in &other.parts {
            let have = out.parts.get_mut(&key)?;
            match (*have).cmp(&k) {
                std::cmp::Ordering::Less => return None,
                std::cmp::Ordering::Equal => {
                    out.parts.remove(&key);
                }
                std::cmp::Ordering::Greater => *have -= k,
            }
        }
        Some(out)
    }

    /// `|λ| = Σ λ_{x,m}`.
    pub fn length(&self) -> usize {
        self.parts.values().sum()
    }

    /// `‖λ‖ = Σ λ_{x,m} · m`.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|(&(_, m), &k)| m * k).sum()
    }

    /// `λ! = ∏ λ_{x,m}!`.
    pub fn factorial(&self) -> BigInt {
        self.parts.values().map(|&k| factorial(k)).product()
    }

    /// `∏ (m!)^{λ_{x,m}}`.
    pub fn multifactorial(&self) -> BigInt {
        self.parts
            .iter()
            .map(|(&(_, m), &k)| factorial(m).pow(k as u32))
            .product()
    }

    /// `f_*λ`, summing multiplicities over fibers.
    pub fn pushforward(&self, f: impl Fn(usize) -> usize) -> Self {
        let mut out = Self::empty();
        for (&(x, m), &k) in &self.parts {
            out.insert(f(x), m, k);
        }
        out
    }

    /// `λ^♯`, the underlying integer partition.
    pub fn undecorate(&self) -> Self {
        self.pushforward(|_| 0)
    }

    /// All `κ` with `κ ≤ λ` part by part, in canonical order.
    pub fn sub_partitions(&self) -> Vec<Self> {
        let entries: Vec<(Part, usize)> = self.parts().collect();
        let mut out = vec![Self::empty()];
        for &((x, m), k) in &entries {
            let mut next = Vec::with_capacity(out.len() * (k + 1));
            for p in &out {
                for j in 0..=k {
                    let mut q = p.clone();
                    q.insert(x, m, j);
                    next.push(q);
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// `c(λ)`: every part listed `λ_{x,m}` times in canonical order.
    pub fn canonical_composition(&self) -> Composition {
        let mut parts = Vec::with_capacity(self.length());
        for (&p, &k) in &self.parts {
            parts.extend(std::iter::repeat_n(p, k));
        }
        Composition(parts)
    }

    /// Renders as `2·([e],1)+([C2],3)` using the given decoration labels.
    pub fn render(&self, label: impl Fn(usize) -> String) -> String {
        if self.is_empty() {
            return "0".into();
        }
        self.parts
            .iter()
            .map(|(&(x, m), &k)| {
                let term = format!("([{}],{m})", label(x));
                if k == 1 {
                    term
                } else {
                    format!("{k}·{term}")
                }
            })
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Parses the [`Self::render`] form. `*` is accepted for `·`, the
    /// brackets around labels are optional and `0` is the empty partition.
    pub fn parse(text: &str, lookup: impl Fn(&str) -> Option<usize>) -> Result<Self> {
        let bad = |why: &str| Error::Invalid(format!("partition `{text}`: {why}"));
        let text = text.trim();
        let mut out = Self::empty();
        if text.is_empty() || text == "0" {
            return Ok(out);
        }
        for term in split_terms(text) {
            let term = term.trim();
            let (k, body) = match term.find(['·', '*']) {
                Some(pos) => {
                    let sep = term[pos..].chars().next().unwrap().len_utf8();
                    let k: usize = term[..pos]
                        .trim()
                        .parse()
                        .map_err(|_| bad("bad multiplicity"))?;
                    (k, term[pos + sep..].trim())
                }
                None => (1, term),
            };
            let inner = body
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .ok_or_else(|| bad("expected `(class,size)`"))?;
            let (label, size) = inner
                .rsplit_once(',')
                .ok_or_else(|| bad("expected `(class,size)`"))?;
            let label = label.trim().trim_start_matches('[').trim_end_matches(']');
            let x = lookup(label).ok_or_else(|| bad(&format!("unknown class `{label}`")))?;
            let m: usize = size.trim().parse().map_err(|_| bad("bad size"))?;
            if m == 0 {
                return Err(bad("parts have positive size"));
            }
            out.insert(x, m, k);
        }
        Ok(out)
    }
}

/// Splits on `+` outside parentheses.
fn split_terms(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

impl fmt::Debug for DecoratedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(|x| x.to_string()))
    }
}

/// `Parts(X, n)` for `X = {0, …, decorations−1}`, sorted.
pub fn enumerate_parts(decorations: usize, n: usize) -> Vec<DecoratedPartition> {
    let kinds: Vec<Part> = (0..decorations)
        .flat_map(|x| (1..=n).map(move |m| (x, m)))
        .collect();
    let mut out = Vec::new();
    let mut current = DecoratedPartition::empty();
    fill(&kinds, 0, n, &mut current, &mut out);
    out.sort();
    out
}

fn fill(
    kinds: &[Part],
    from: usize,
    remaining: usize,
    current: &mut DecoratedPartition,
    out: &mut Vec<DecoratedPartition>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for idx in from..kinds.len() {
        let (x, m) = kinds[idx];
        if m > remaining {
            continue;
        }
        current.insert(x, m, 1);
        fill(kinds, idx, remaining - m, current, out);
        let k = current.parts.get_mut(&(x, m)).unwrap();
        *k -= 1;
        if *k == 0 {
            current.parts.remove(&(x, m));
        }
    }
}

/// An indexed list of parts over `[k]`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<Part>);

impl Composition {
    pub fn parts(&self) -> &[Part] {
        &self.0
    }

    /// `|c|`.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// `‖c‖`.
    pub fn size(&self) -> usize {
        self.0.iter().map(|&(_, m)| m).sum()
    }

    /// `u c`, the underlying partition.
    pub fn unindex(&self) -> DecoratedPartition {
        let mut p = DecoratedPartition::empty();
        for &(x, m) in &self.0 {
            p.insert(x, m, 1);
        }
        p
    }

    /// `c|_J` for the indices in `j`, kept in the given order.
    pub fn restrict(&self, j: &[usize]) -> Self {
        Composition(j.iter().map(|&i| self.0[i]).collect())
    }

    /// Concatenation `c + d`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    /// `f_* c`.
    pub fn pushforward(&self, f: impl Fn(usize) -> usize) -> Self {
        Composition(self.0.iter().map(|&(x, m)| (f(x), m)).collect())
    }

    /// `c^♯` as the list of sizes.
    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(|&(_, m)| m).collect()
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(x, m)| format!("({x},{m})")).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `C(λ)`: every distinct ordering of `c(λ)`, in lexicographic order.
pub fn compositions_of(lambda: &DecoratedPartition) -> Vec<Composition> {
    let mut v = lambda.canonical_composition().0;
    let mut out = vec![Composition(v.clone())];
    while next_permutation(&mut v) {
        out.push(Composition(v.clone()));
    }
    out
}

/// `|C(λ)| = |λ|! / λ!`.
pub fn count_compositions(lambda: &DecoratedPartition) -> BigInt {
    factorial(lambda.length()) / lambda.factorial()
}

/// `‖λ‖! / ∏ (m!)^{λ_m}`.
pub fn multinomial(lambda: &DecoratedPartition) -> BigInt {
    factorial(lambda.size()) / lambda.multifactorial()
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics() {
        let lam = DecoratedPartition::from_parts(&[(0, 1, 2), (1, 3, 1)]);
        assert_eq!(lam.length(), 3);
        assert_eq!(lam.size(), 5);
        assert_eq!(lam.factorial(), BigInt::from(2));
        assert_eq!(lam.multifactorial(), BigInt::from(6));
        let z = DecoratedPartition::empty();
        assert_eq!((z.length(), z.size()), (0, 0));
        assert!(z.factorial().is_one() && z.multifactorial().is_one());
        assert_eq!(lam.undecorate().size(), lam.size());
        assert_eq!(lam.undecorate().multifactorial(), lam.multifactorial());
    }

    #[test]
    fn pushforward_examples() {
        let p = DecoratedPartition::from_parts(&[(0, 1, 1), (1, 1, 1)]);
        let flat = p.undecorate();
        assert_eq!(flat, DecoratedPartition::integer(&[1, 1]));
        assert_eq!(flat.factorial(), BigInt::from(2));
        assert_eq!(p.factorial(), BigInt::one());
        assert_eq!(p.pushforward(|x| x + 5).factorial(), p.factorial());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_parts(1, 4).len(), 5);
        let c2 = enumerate_parts(2, 2);
        assert_eq!(c2.len(), 5);
        assert!(c2.contains(&DecoratedPartition::from_parts(&[(0, 1, 1), (1, 1, 1)])));
        assert_eq!(enumerate_parts(3, 0), vec![DecoratedPartition::empty()]);
    }

    #[test]
    fn composition_counts() {
        let lam = DecoratedPartition::from_parts(&[(0, 1, 2), (1, 1, 1)]);
        assert_eq!(compositions_of(&lam).len(), 3);
        assert_eq!(count_compositions(&lam), BigInt::from(3));
        assert_eq!(compositions_of(&DecoratedPartition::single(2, 4)).len(), 1);
        assert_eq!(
            compositions_of(&DecoratedPartition::empty()),
            vec![Composition::default()]
        );
        for c in compositions_of(&lam) {
            assert_eq!(c.unindex(), lam);
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(
            multinomial(&DecoratedPartition::integer(&[1, 1])),
            BigInt::from(2)
        );
        assert_eq!(
            multinomial(&DecoratedPartition::integer(&[2, 1])),
            BigInt::from(3)
        );
        assert_eq!(
            multinomial(&DecoratedPartition::integer(&[2, 2])),
            BigInt::from(6)
        );
    }

    #[test]
    fn render_and_parse() {
        let labels = ["e", "C2"];
        let lam = DecoratedPartition::from_parts(&[(0, 1, 2), (1, 3, 1)]);
        let text = lam.render(|x| labels[x].to_string());
        assert_eq!(text, "2·([e],1)+([C2],3)");
        let look = |s: &str| labels.iter().position(|l| *l == s);
        assert_eq!(DecoratedPartition::parse(&text, look).unwrap(), lam);
        assert_eq!(
            DecoratedPartition::parse("2*(e,1) + (C2,3)", look).unwrap(),
            lam
        );
        assert!(DecoratedPartition::parse("(C5,1)", look).is_err());
        assert_eq!(
            DecoratedPartition::parse("0", look).unwrap(),
            DecoratedPartition::empty()
        );
    }

    #[test]
    fn sub_partitions_split() {
        let mu = DecoratedPartition::from_parts(&[(0, 1, 2), (1, 2, 1)]);
        let subs = mu.sub_partitions();
        assert_eq!(subs.len(), 6);
        for k in &subs {
            assert_eq!(k.add(&mu.checked_sub(k).unwrap()), mu);
        }
    }
}
