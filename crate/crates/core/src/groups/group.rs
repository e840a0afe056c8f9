use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use super::permutation::Permutation;
use super::Caps;
use crate::error::{Error, Result};

/// Names accepted by [`PermGroup::from_spec`] besides explicit generators.
pub const CATALOG: &[&str] = &[
    "e", "C2", "C3", "C4", "C6", "V4", "S3", "D4", "Q8", "A4", "S4",
];

/// Above this order products are computed by composing and hashing instead
/// of through a Cayley table.
const CAYLEY_LIMIT: usize = 512;

/// A finite permutation group with its full element list.
///
/// Elements are stored sorted by their image arrays, so index 0 is the
/// identity and element indices give a fixed total order used for canonical
/// choices (class representatives, coset sections).
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    generators: Vec<u32>,
    inverses: Vec<u32>,
    name: Option<String>,
    fingerprint: u64,
    cayley: OnceLock<Option<Vec<u32>>>,
}

impl PermGroup {
    /// Closes `generators` under composition.
    pub fn generate(degree: usize, generators: &[Permutation], caps: &Caps) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::Invalid(format!(
                    "generator {g} has degree {} but the domain has {degree} points",
                    g.degree()
                )));
            }
        }
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = g.compose(&x);
                if !seen.contains_key(&y) {
                    if seen.len() >= caps.max_elements {
                        return Err(Error::CapExceeded {
                            what: "group element enumeration",
                            needed: seen.len() as u128 + 1,
                            cap: caps.max_elements,
                        });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_keys().collect();
        elements.sort();
        Ok(Self::from_sorted_elements(degree, elements, generators))
    }

    fn from_sorted_elements(
        degree: usize,
        elements: Vec<Permutation>,
        generators: &[Permutation],
    ) -> Self {
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut gens: Vec<u32> = generators
            .iter()
            .map(|g| index[g])
            .filter(|&i| i != 0)
            .collect();
        gens.sort_unstable();
        gens.dedup();
        let mut hasher = DefaultHasher::new();
        degree.hash(&mut hasher);
        elements.hash(&mut hasher);
        PermGroup {
            degree,
            elements,
            index,
            generators: gens,
            inverses,
            name: None,
            fingerprint: hasher.finish(),
            cayley: OnceLock::new(),
        }
    }

    /// Parses a catalog name or a generator list such as `(1 2 3),(1 2)`,
    /// optionally prefixed by `domain=n:`.
    pub fn from_spec(spec: &str, caps: &Caps) -> Result<Self> {
        let trimmed = spec.trim();
        if let Some(group) = Self::catalog(trimmed, caps)? {
            return Ok(group);
        }
        let (degree, gens) = parse_generators(trimmed)?;
        let mut g = Self::generate(degree, &gens, caps)?;
        g.name = Some(trimmed.to_string());
        Ok(g)
    }

    fn catalog(name: &str, caps: &Caps) -> Result<Option<Self>> {
        let cyc = |d: usize, c: &[&[usize]]| {
            Permutation::from_cycles(d, &c.iter().map(|x| x.to_vec()).collect::<Vec<_>>())
                .expect("catalog generators are valid")
        };
        let (degree, gens) = match name {
            "e" => (1, vec![]),
            "C2" => (2, vec![cyc(2, &[&[0, 1]])]),
            "C3" => (3, vec![cyc(3, &[&[0, 1, 2]])]),
            "C4" => (4, vec![cyc(4, &[&[0, 1, 2, 3]])]),
            "C6" => (6, vec![cyc(6, &[&[0, 1, 2, 3, 4, 5]])]),
            "V4" => (4, vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[2, 3]])]),
            "S3" => (3, vec![cyc(3, &[&[0, 1, 2]]), cyc(3, &[&[0, 1]])]),
            "D4" => (4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])]),
            // Left-regular representation on 1, i, j, k, -1, -i, -j, -k.
            "Q8" => (
                8,
                vec![
                    Permutation::from_images(vec![1, 4, 3, 6, 5, 0, 7, 2]).unwrap(),
                    Permutation::from_images(vec![2, 7, 4, 1, 6, 3, 0, 5]).unwrap(),
                ],
            ),
            "A4" => (4, vec![cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[0, 1], &[2, 3]])]),
            "S4" => (4, vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])]),
            _ => {
                if name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                    && !name.starts_with("domain")
                {
                    return Err(Error::UnknownCatalogName(name.to_string()));
                }
                return Ok(None);
            }
        };
        let mut g = Self::generate(degree, &gens, caps)?;
        g.name = Some(name.to_string());
        Ok(Some(g))
    }

    pub fn trivial() -> Self {
        let mut g = Self::generate(1, &[], &Caps::default()).expect("trivial group");
        g.name = Some("e".into());
        g
    }

    /// The cyclic group of order `m` acting regularly on `m` points.
    pub fn cyclic(m: usize, caps: &Caps) -> Result<Self> {
        let m = m.max(1);
        let gen = Permutation::from_images((0..m).map(|i| (i + 1) % m).collect()).unwrap();
        let mut g = Self::generate(m, &[gen], caps)?;
        g.name = Some(format!("C{m}"));
        Ok(g)
    }

    pub fn symmetric(n: usize, caps: &Caps) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![0, 1]]).unwrap());
            gens.push(Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap());
        }
        let mut g = Self::generate(n, &gens, caps)?;
        g.name = Some(format!("S{n}"));
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// Index of `a * b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self.cayley_table() {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])] as usize,
        }
    }

    /// `b⁻¹ a b`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.inverse(b), self.mul(a, b))
    }

    fn cayley_table(&self) -> Option<&Vec<u32>> {
        self.cayley
            .get_or_init(|| {
                let n = self.order();
                if n > CAYLEY_LIMIT {
                    return None;
                }
                let mut t = Vec::with_capacity(n * n);
                for a in &self.elements {
                    for b in &self.elements {
                        t.push(self.index[&a.compose(b)]);
                    }
                }
                Some(t)
            })
            .as_ref()
    }

    /// Identity check used to tie tables and elements to the group they came from.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.fingerprint == other.fingerprint
            && self.degree == other.degree
            && self.order() == other.order()
    }

    /// Order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(a, x);
            k += 1;
        }
        k
    }

    /// A short label: the catalog name when known, else the generators.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => self.spec_string(),
        }
    }

    /// A spec string that parses back to this group.
    pub fn spec_string(&self) -> String {
        if let Some(n) = &self.name {
            if CATALOG.contains(&n.as_str()) {
                return n.clone();
            }
        }
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|&g| self.elements[g as usize].to_string())
            .collect();
        format!("domain={}:{}", self.degree, gens.join(","))
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup({}, order {})", self.label(), self.order())
    }
}

pub type GroupRef = Arc<PermGroup>;

fn malformed(spec: &str, reason: impl Into<String>) -> Error {
    Error::MalformedSpec {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

/// Parses `[domain=n:](a b c)(d e),(a b)` into 0-based permutations.
fn parse_generators(spec: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut body = spec;
    let mut declared: Option<usize> = None;
    if let Some(rest) = spec.strip_prefix("domain=") {
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let n: usize = rest[..end]
            .parse()
            .map_err(|_| malformed(spec, "expected a number after `domain=`"))?;
        declared = Some(n);
        body = rest[end..].trim_start_matches([':', ';', ' ']);
    }
    // Split generators at top-level commas.
    let mut gens_text = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                gens_text.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if !(0..=1).contains(&depth) {
            return Err(malformed(spec, "unbalanced or nested parentheses"));
        }
    }
    if depth != 0 {
        return Err(malformed(spec, "unbalanced parentheses"));
    }
    gens_text.push(&body[start..]);

    let mut cycle_lists: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut max_point = 0usize;
    for text in gens_text {
        let text = text.trim();
        if text.is_empty() {
            if body.trim().is_empty() {
                continue;
            }
            return Err(malformed(spec, "empty generator"));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            if !rest_trim.starts_with('(') {
                return Err(malformed(spec, format!("expected `(` at `{rest_trim}`")));
            }
            let close = rest_trim
                .find(')')
                .ok_or_else(|| malformed(spec, "missing `)`"))?;
            let inner = &rest_trim[1..close];
            let mut cycle = Vec::new();
            for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok
                    .parse()
                    .map_err(|_| malformed(spec, format!("bad point `{tok}`")))?;
                if p == 0 {
                    return Err(malformed(spec, "points are 1-based"));
                }
                max_point = max_point.max(p);
                cycle.push(p - 1);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
            rest = rest_trim[close + 1..].trim_start();
        }
        cycle_lists.push(cycles);
    }
    let degree = match declared {
        Some(n) if n < max_point => {
            return Err(malformed(
                spec,
                format!("point {max_point} outside domain {n}"),
            ))
        }
        Some(n) => n,
        None => max_point.max(1),
    };
    let gens = cycle_lists
        .into_iter()
        .map(|cycles| {
            Permutation::from_cycles(degree, &cycles)
                .ok_or_else(|| malformed(spec, "cycles are not disjoint"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((degree, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn catalog_orders() {
        let expect = [
            ("e", 1),
            ("C2", 2),
            ("C3", 3),
            ("C4", 4),
            ("C6", 6),
            ("V4", 4),
            ("S3", 6),
            ("D4", 8),
            ("Q8", 8),
            ("A4", 12),
            ("S4", 24),
        ];
        for (name, order) in expect {
            let g = PermGroup::from_spec(name, &caps()).unwrap();
            assert_eq!(g.order(), order, "{name}");
        }
        assert_eq!(PermGroup::from_spec("C2", &caps()).unwrap().degree(), 2);
    }

    #[test]
    fn q8_has_one_involution() {
        let g = PermGroup::from_spec("Q8", &caps()).unwrap();
        let inv = (0..8).filter(|&a| g.element_order(a) == 2).count();
        assert_eq!(inv, 1);
        let order4 = (0..8).filter(|&a| g.element_order(a) == 4).count();
        assert_eq!(order4, 6);
    }

    #[test]
    fn cycle_notation_generates_s3() {
        let g = PermGroup::from_spec("(1 2 3),(1 2)", &caps()).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.degree(), 3);
        let g = PermGroup::from_spec("domain=5:(1 2)", &caps()).unwrap();
        assert_eq!((g.order(), g.degree()), (2, 5));
        let g = PermGroup::from_spec("(1,2,3)", &caps()).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn spec_errors() {
        assert!(matches!(
            PermGroup::from_spec("Z7", &caps()),
            Err(Error::UnknownCatalogName(_))
        ));
        assert!(matches!(
            PermGroup::from_spec("(1 2", &caps()),
            Err(Error::MalformedSpec { .. })
        ));
        assert!(matches!(
            PermGroup::from_spec("domain=2:(1 3)", &caps()),
            Err(Error::MalformedSpec { .. })
        ));
        assert!(matches!(
            PermGroup::from_spec("(1 2)(2 3)", &caps()),
            Err(Error::MalformedSpec { .. })
        ));
        let tight = Caps {
            max_elements: 10,
            ..Caps::default()
        };
        assert!(matches!(
            PermGroup::from_spec("S4", &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn identity_first_and_inverses() {
        let g = PermGroup::from_spec("S4", &caps()).unwrap();
        assert!(g.element(0).is_identity());
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inverse(a)), 0);
        }
        // Lagrange: |G| divides 4!.
        assert_eq!(24 % g.order(), 0);
    }

    #[test]
    fn spec_string_round_trips() {
        let g = PermGroup::from_spec("(1 2 3 4 5)", &caps()).unwrap();
        let h = PermGroup::from_spec(&g.spec_string(), &caps()).unwrap();
        assert!(g.same_group(&h));
        let s3 = PermGroup::from_spec("S3", &caps()).unwrap();
        assert_eq!(s3.spec_string(), "S3");
    }
}
