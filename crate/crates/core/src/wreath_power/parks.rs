use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::aa::AAElement;
use crate::burnside::MarksVector;
use crate::error::{Error, Result};
use crate::groups::TableRef;
use crate::linalg::{self, Rational};
use crate::partitions::{enumerate_parts, DecoratedPartition};

/// A rational function on `Parts(G, n)`. Missing partitions are zero.
#[derive(Clone)]
pub struct ParksVector {
    table: TableRef,
    n: usize,
    values: BTreeMap<DecoratedPartition, Rational>,
}

impl ParksVector {
    pub fn zero(table: TableRef, n: usize) -> Self {
        ParksVector {
            table,
            n,
            values: BTreeMap::new(),
        }
    }

    /// `𝟙_∅`, the unit for `★`.
    pub fn one(table: TableRef) -> Self {
        Self::indicator(table, DecoratedPartition::empty())
    }

    /// The constant function `1` on `Parts(G, n)`, the unit for the pointwise product.
    pub fn ones(table: TableRef, n: usize) -> Self {
        let mut f = Self::zero(table.clone(), n);
        for lam in enumerate_parts(table.len(), n) {
            f.values.insert(lam, Rational::one());
        }
        f
    }

    /// `𝟙_λ`.
    pub fn indicator(table: TableRef, lambda: DecoratedPartition) -> Self {
        let mut f = Self::zero(table, lambda.size());
        f.values.insert(lambda, Rational::one());
        f
    }

    /// From a function evaluated on all of `Parts(G, n)`.
    pub fn from_fn(table: TableRef, n: usize, f: impl Fn(&DecoratedPartition) -> Rational) -> Self {
        let mut out = Self::zero(table.clone(), n);
        for lam in enumerate_parts(table.len(), n) {
            let v = f(&lam);
            out.set(lam, v);
        }
        out
    }

    pub fn set(&mut self, lambda: DecoratedPartition, v: Rational) {
        assert_eq!(lambda.size(), self.n, "partition of the wrong size");
        if v.is_zero() {
            self.values.remove(&lambda);
        } else {
            self.values.insert(lambda, v);
        }
    }

    pub fn table(&self) -> &TableRef {
        &self.table
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn value(&self, lambda: &DecoratedPartition) -> Rational {
        self.values
            .get(lambda)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero values in canonical order.
    pub fn support(&self) -> impl Iterator<Item = (&DecoratedPartition, &Rational)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if !self.table.group().same_group(other.table.group()) {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        self.check(other)?;
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (lam, v) in &other.values {
            let cur = out.value(lam);
            out.set(lam.clone(), cur + v);
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = Self::zero(self.table.clone(), self.n);
        for (lam, v) in &self.values {
            out.set(lam.clone(), v * k);
        }
        out
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-Rational::one()))
    }

    /// Pointwise product within one degree.
    pub fn pointwise(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.table.clone(), self.n);
        for (lam, v) in &self.values {
            if let Some(w) = other.values.get(lam) {
                out.set(lam.clone(), v * w);
            }
        }
        Ok(out)
    }

    /// `(f★g)(μ) = Σ_{κ+λ=μ} μ!/(κ!λ!) f(κ) g(λ)`.
    pub fn star(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.table.clone(), self.n + other.n);
        for (k, a) in &self.values {
            for (l, b) in &other.values {
                let mu = k.add(l);
                let c = Rational::from_integer(mu.factorial() / (k.factorial() * l.factorial()));
                let cur = out.value(&mu);
                out.set(mu, cur + c * a * b);
            }
        }
        Ok(out)
    }

    /// The same product summed over splittings of an indexed composition:
    /// `(f★g)(μ) = Σ_{I ⊔ J = [|μ|]} f(u c(μ)|_I) g(u c(μ)|_J)`.
    pub fn star_by_compositions(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.n + other.n;
        Ok(Self::from_fn(self.table.clone(), n, |mu| {
            let c = mu.canonical_composition();
            let len = c.length();
            let mut acc = Rational::zero();
            for mask in 0u32..(1 << len) {
                let (i, j): (Vec<usize>, Vec<usize>) =
                    (0..len).partition(|&b| mask & (1 << b) != 0);
                let ci = c.restrict(&i).unindex();
                if ci.size() != self.n {
                    continue;
                }
                let a = self.value(&ci);
                if a.is_zero() {
                    continue;
                }
                acc += a * other.value(&c.restrict(&j).unindex());
            }
            acc
        }))
    }

    /// `f^{★k}`.
    pub fn star_power(&self, k: usize) -> Result<Self> {
        let mut out = Self::one(self.table.clone());
        for _ in 0..k {
            out = out.star(self)?;
        }
        Ok(out)
    }
}

impl PartialEq for ParksVector {
    fn eq(&self, other: &Self) -> bool {
        self.table.group().same_group(other.table.group())
            && self.n == other.n
            && self.values == other.values
    }
}

impl Eq for ParksVector {}

impl fmt::Debug for ParksVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Parks({}, {}) {{", self.table.group().label(), self.n)?;
        for (i, (lam, v)) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(
                f,
                " {}: {v}",
                lam.render(|x| self.table.label(x).to_string())
            )?;
        }
        write!(f, " }}")
    }
}

/// `Pₙ(f)(λ) = ∏ f([H])^{λ_{[H],m}}`.
pub fn parks_power_char(f: &MarksVector, n: usize) -> ParksVector {
    ParksVector::from_fn(f.table().clone(), n, |lam| {
        let mut v = Rational::one();
        for ((x, _), k) in lam.parts() {
            v *= num_traits::pow(f.value(x).clone(), k);
        }
        v
    })
}

/// `χ` of the basis element `λ`, the `★`-product over the parts `([H], m)`
/// of `Pₘ(χ([G/H]))`.
pub fn parks_char_basis(table: &TableRef, lambda: &DecoratedPartition) -> ParksVector {
    let marks = table.marks();
    let mut out = ParksVector::one(table.clone());
    for ((x, m), k) in lambda.parts() {
        let row = MarksVector::new(
            table.clone(),
            marks[x].iter().map(|&v| linalg::rat(v as i64)).collect(),
        );
        let p = parks_power_char(&row, m);
        for _ in 0..k {
            out = out.star(&p).expect("same table");
        }
    }
    out
}

/// The parks homomorphism `χ: 𝔸(G, n) → Parks(G, n)`.
pub fn parks_char(x: &AAElement) -> ParksVector {
    let table = x.table();
    let mut out = ParksVector::zero(table.clone(), x.degree());
    for (lam, c) in x.terms() {
        let term = parks_char_basis(table, lam).scale(&Rational::from_integer(c.clone()));
        out = out.checked_add(&term).expect("same degree");
    }
    out
}

/// The unique `x ∈ 𝔸(G, n)` with `χ(x) = f`, if its coordinates are integers.
pub fn from_parks(f: &ParksVector) -> Result<AAElement> {
    let table = f.table();
    let parts = enumerate_parts(table.len(), f.degree());
    let chars: Vec<ParksVector> = parts.iter().map(|l| parks_char_basis(table, l)).collect();
    // Row κ, column λ: χ(λ)(κ).
    let a: Vec<Vec<Rational>> = parts
        .iter()
        .map(|k| chars.iter().map(|c| c.value(k)).collect())
        .collect();
    let b: Vec<Rational> = parts.iter().map(|k| f.value(k)).collect();
    let x = linalg::solve(&a, &b)?;
    let mut terms = Vec::new();
    for (lam, q) in parts.into_iter().zip(x) {
        terms.push((lam, linalg::to_integer(&q).ok_or(Error::NotInImage)?));
    }
    AAElement::from_terms(table.clone(), f.degree(), terms)
}

/// `μ!/(κ!(μ−κ)!)`, or `None` unless `κ ≤ μ`.
pub fn split_weight(mu: &DecoratedPartition, kappa: &DecoratedPartition) -> Option<Rational> {
    let lam = mu.checked_sub(kappa)?;
    Some(Rational::new(
        mu.factorial(),
        kappa.factorial() * lam.factorial(),
    ))
}
