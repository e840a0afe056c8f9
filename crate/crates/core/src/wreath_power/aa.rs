use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::groups::TableRef;
use crate::partitions::{enumerate_parts, factorial, DecoratedPartition};

/// An element of `𝔸(G, n)` in the basis indexed by `Parts(G, n)`.
#[derive(Clone)]
pub struct AAElement {
    table: TableRef,
    n: usize,
    coords: BTreeMap<DecoratedPartition, BigInt>,
}

impl AAElement {
    pub fn zero(table: TableRef, n: usize) -> Self {
        AAElement {
            table,
            n,
            coords: BTreeMap::new(),
        }
    }

    /// The unit, the empty partition in degree 0.
    pub fn one(table: TableRef) -> Self {
        Self::basis(table, DecoratedPartition::empty())
    }

    /// `[(G≀Σₙ)/α(λ)]` with `n = ‖λ‖`.
    pub fn basis(table: TableRef, lambda: DecoratedPartition) -> Self {
        let n = lambda.size();
        let mut x = Self::zero(table, n);
        x.coords.insert(lambda, BigInt::one());
        x
    }

    /// From `(λ, coefficient)` pairs, all of size `n`.
    pub fn from_terms(
        table: TableRef,
        n: usize,
        terms: impl IntoIterator<Item = (DecoratedPartition, BigInt)>,
    ) -> Result<Self> {
        let mut x = Self::zero(table, n);
        for (lam, c) in terms {
            if lam.size() != n {
                return Err(Error::DegreeMismatch {
                    expected: n,
                    found: lam.size(),
                });
            }
            x.add_term(lam, c);
        }
        Ok(x)
    }

    fn add_term(&mut self, lam: DecoratedPartition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coords.entry(lam.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&lam);
        }
    }

    pub fn table(&self) -> &TableRef {
        &self.table
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, lambda: &DecoratedPartition) -> BigInt {
        self.coords.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero `(λ, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&DecoratedPartition, &BigInt)> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coords.values().all(|c| !c.is_negative())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !self.table.group().same_group(other.table.group()) {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut out = self.clone();
        for (lam, c) in &other.coords {
            out.add_term(lam.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.table.clone(), self.n);
        for (lam, c) in &self.coords {
            out.add_term(lam.clone(), c * k);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    /// The transfer product: on basis elements `κ ★ λ = κ + λ`.
    pub fn star(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.table.clone(), self.n + other.n);
        for (k, a) in &self.coords {
            for (l, b) in &other.coords {
                out.add_term(k.add(l), a * b);
            }
        }
        Ok(out)
    }

    /// `x^{★k}`.
    pub fn star_power(&self, k: usize) -> Result<Self> {
        let mut out = Self::one(self.table.clone());
        for _ in 0..k {
            out = out.star(self)?;
        }
        Ok(out)
    }

    /// The partition of a basis element in the text notation.
    pub fn render_partition(&self, lambda: &DecoratedPartition) -> String {
        lambda.render(|x| self.table.label(x).to_string())
    }
}

impl PartialEq for AAElement {
    fn eq(&self, other: &Self) -> bool {
        self.table.group().same_group(other.table.group())
            && self.n == other.n
            && self.coords == other.coords
    }
}

impl Eq for AAElement {}

impl fmt::Display for AAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (i, (lam, c)) in self.coords.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "⟨{}⟩", self.render_partition(lam))?;
        }
        Ok(())
    }
}

impl fmt::Debug for AAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (degree {})", self, self.n)
    }
}

/// `Pₙ([G/H]) = [(G/H)^{×n}]`, the basis element `([H], n)`.
pub fn power_op_basis(table: &TableRef, class: usize, n: usize) -> AAElement {
    if n == 0 {
        AAElement::one(table.clone())
    } else {
        AAElement::basis(table.clone(), DecoratedPartition::single(class, n))
    }
}

fn series_star(a: &[AAElement], b: &[AAElement], table: &TableRef) -> Result<Vec<AAElement>> {
    let n = a.len().min(b.len());
    let mut out: Vec<AAElement> = (0..n).map(|k| AAElement::zero(table.clone(), k)).collect();
    for i in 0..n {
        for j in 0..n - i {
            if a[i].is_zero() || b[j].is_zero() {
                continue;
            }
            out[i + j] = out[i + j].checked_add(&a[i].star(&b[j])?)?;
        }
    }
    Ok(out)
}

/// `P₀(x), …, Pₙ(x)` for effective `x`, multiplying out
/// `Pₖ(x + y) = Σ_{i+j=k} Pᵢ(x) ★ Pⱼ(y)` over the transitive summands.
fn effective_series(x: &BurnsideElement, n: usize) -> Result<Vec<AAElement>> {
    let table = x.table();
    let mut series: Vec<AAElement> = (0..=n).map(|k| AAElement::zero(table.clone(), k)).collect();
    series[0] = AAElement::one(table.clone());
    for (class, c) in x.coords().iter().enumerate() {
        let copies: usize = c.try_into().map_err(|_| {
            Error::Invalid("power operations need an effective element here".into())
        })?;
        let t: Vec<AAElement> = (0..=n).map(|m| power_op_basis(table, class, m)).collect();
        for _ in 0..copies {
            series = series_star(&series, &t, table)?;
        }
    }
    Ok(series)
}

fn split(x: &BurnsideElement) -> (BurnsideElement, BurnsideElement) {
    let pos: Vec<BigInt> = x
        .coords()
        .iter()
        .map(|c| c.max(&BigInt::zero()).clone())
        .collect();
    let neg: Vec<BigInt> = x
        .coords()
        .iter()
        .map(|c| (-c).max(BigInt::zero()))
        .collect();
    (
        BurnsideElement::from_big(x.table().clone(), pos),
        BurnsideElement::from_big(x.table().clone(), neg),
    )
}

/// `Pₖ(x − y)` for `k ≤ n` by the closed form
/// `Σ_{i+‖λ‖=k} (−1)^{|λ|} (|λ|!/λ!) Pᵢ(x) ★ P_λ(y)`, with `λ` running over
/// integer partitions and `P_λ(y) = ★ₘ Pₘ(y)^{★λₘ}`. Both arguments must be
/// effective.
pub fn power_op_closed_form(
    x: &BurnsideElement,
    y: &BurnsideElement,
    n: usize,
) -> Result<Vec<AAElement>> {
    let table = x.table().clone();
    let px = effective_series(x, n)?;
    let py = effective_series(y, n)?;
    let mut neg_y = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = AAElement::zero(table.clone(), k);
        for lam in enumerate_parts(1, k) {
            let mut term = AAElement::one(table.clone());
            for ((_, m), mult) in lam.parts() {
                term = term.star(&py[m].star_power(mult)?)?;
            }
            let mut coeff = factorial(lam.length()) / lam.factorial();
            if lam.length() % 2 == 1 {
                coeff = -coeff;
            }
            acc = acc.checked_add(&term.scale(&coeff))?;
        }
        neg_y.push(acc);
    }
    series_star(&px, &neg_y, &table)
}

/// `Pₖ(x − y)` for `k ≤ n` by the recursion
/// `Pₖ(x) = Pₖ(x − y) + Σ_{i+j=k, j>0} Pᵢ(x − y) ★ Pⱼ(y)`.
pub fn power_op_inductive(
    x: &BurnsideElement,
    y: &BurnsideElement,
    n: usize,
) -> Result<Vec<AAElement>> {
    let px = effective_series(x, n)?;
    let py = effective_series(y, n)?;
    let mut q: Vec<AAElement> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc = px[k].clone();
        for j in 1..=k {
            acc = acc.checked_sub(&q[k - j].star(&py[j])?)?;
        }
        q.push(acc);
    }
    Ok(q)
}

/// `P₀(x), …, Pₙ(x)` for any virtual `x`, splitting it into its positive and
/// negative parts.
pub fn power_series(x: &BurnsideElement, n: usize) -> Result<Vec<AAElement>> {
    let (pos, neg) = split(x);
    if neg.is_zero() {
        effective_series(&pos, n)
    } else {
        power_op_closed_form(&pos, &neg, n)
    }
}

/// `Pₙ(x)`.
pub fn power_op(x: &BurnsideElement, n: usize) -> Result<AAElement> {
    Ok(power_series(x, n)?.pop().expect("series has n + 1 terms"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{Caps, ConjugacyClassTable, PermGroup};
    use std::sync::Arc;

    fn table(spec: &str) -> TableRef {
        let caps = Caps::default();
        let g = Arc::new(PermGroup::from_spec(spec, &caps).unwrap());
        Arc::new(ConjugacyClassTable::new(g, &caps).unwrap())
    }

    #[test]
    fn star_examples() {
        let t = table("C2");
        let e1 = AAElement::basis(t.clone(), DecoratedPartition::single(0, 1));
        let c1 = AAElement::basis(t.clone(), DecoratedPartition::single(1, 1));
        assert_eq!(AAElement::one(t.clone()).star(&e1).unwrap(), e1);
        assert_eq!(
            e1.star(&c1).unwrap(),
            AAElement::basis(
                t.clone(),
                DecoratedPartition::from_parts(&[(0, 1, 1), (1, 1, 1)])
            )
        );
        let two = e1.scale(&BigInt::from(2));
        assert_eq!(
            two.star(&e1).unwrap(),
            AAElement::basis(t, DecoratedPartition::from_parts(&[(0, 1, 2)]))
                .scale(&BigInt::from(2))
        );
    }

    #[test]
    fn power_of_two_points() {
        let t = table("e");
        let two = BurnsideElement::from_coords(t.clone(), &[2]);
        let p2 = power_op(&two, 2).unwrap();
        let expect = AAElement::from_terms(
            t.clone(),
            2,
            [
                (DecoratedPartition::integer(&[2]), BigInt::from(2)),
                (DecoratedPartition::integer(&[1, 1]), BigInt::from(1)),
            ],
        )
        .unwrap();
        assert_eq!(p2, expect);
        assert_eq!(p2.to_string(), "⟨2·([e],1)⟩ + 2⟨([e],2)⟩");
    }

    #[test]
    fn power_of_negative_point() {
        let t = table("e");
        let minus = BurnsideElement::from_coords(t.clone(), &[-1]);
        let expect = AAElement::from_terms(
            t.clone(),
            2,
            [
                (DecoratedPartition::integer(&[2]), BigInt::from(-1)),
                (DecoratedPartition::integer(&[1, 1]), BigInt::from(1)),
            ],
        )
        .unwrap();
        assert_eq!(power_op(&minus, 2).unwrap(), expect);
        let one = BurnsideElement::one(t.clone());
        let zero = BurnsideElement::zero(t.clone());
        assert_eq!(power_op_inductive(&zero, &one, 2).unwrap()[2], expect);
    }

    #[test]
    fn transitive_and_trivial_cases() {
        let t = table("S3");
        for class in 0..t.len() {
            let x = BurnsideElement::basis(t.clone(), class);
            for n in 1..4 {
                assert_eq!(
                    power_op(&x, n).unwrap(),
                    AAElement::basis(t.clone(), DecoratedPartition::single(class, n))
                );
            }
        }
        let zero = BurnsideElement::zero(t.clone());
        assert_eq!(power_op(&zero, 0).unwrap(), AAElement::one(t.clone()));
        assert!(power_op(&zero, 2).unwrap().is_zero());
    }
}
