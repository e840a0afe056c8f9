//! The Burnside ring `A(G)`, its marks, and additive maps between marks.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groups::{
    double_cosets, Caps, ConjugacyClassTable, DirectProduct, GroupHom, SubgroupRef, TableRef,
};
use crate::gsets::FiniteGSet;
use crate::linalg::{self, Rational};

pub(crate) fn same_table(a: &TableRef, b: &TableRef) -> bool {
    Arc::ptr_eq(a, b) || a.group().same_group(b.group())
}

/// An integer combination of the transitive sets `[G/H]`, one coordinate per
/// class of subgroups.
#[derive(Clone)]
pub struct BurnsideElement {
    table: TableRef,
    coords: Vec<BigInt>,
}

impl BurnsideElement {
    pub fn from_big(table: TableRef, coords: Vec<BigInt>) -> Self {
        assert_eq!(coords.len(), table.len(), "one coordinate per class");
        BurnsideElement { table, coords }
    }

    pub fn from_coords(table: TableRef, coords: &[i64]) -> Self {
        Self::from_big(table, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(table: TableRef) -> Self {
        let c = table.len();
        Self::from_big(table, vec![BigInt::zero(); c])
    }

    /// `[G/G]`.
    pub fn one(table: TableRef) -> Self {
        let top = table.whole_class();
        Self::basis(table, top)
    }

    /// `[G/H]` for the class with index `class`.
    pub fn basis(table: TableRef, class: usize) -> Self {
        let mut x = Self::zero(table);
        x.coords[class] = BigInt::one();
        x
    }

    pub fn table(&self) -> &TableRef {
        &self.table
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn coeff(&self, class: usize) -> &BigInt {
        &self.coords[class]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// All coordinates nonnegative, i.e. the class of an actual G-set.
    pub fn is_effective(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// `Σ coeff · |G/H|`.
    pub fn cardinality(&self) -> BigInt {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c * BigInt::from(self.table.group().order() / self.table.subgroup_order(i))
            })
            .sum()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_big(
            self.table.clone(),
            self.coords.iter().map(|c| c * k).collect(),
        )
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_big(
            self.table.clone(),
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// Product by the double coset formula
    /// `[G/H]·[G/K] = Σ_{HgK} [G/(H^g ∩ K)]`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let t = &self.table;
        let mut out = vec![BigInt::zero(); t.len()];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (class, mult) in basis_product(t, i, j) {
                    out[class] += &ab * mult;
                }
            }
        }
        Ok(Self::from_big(t.clone(), out))
    }

    /// The marks `χ(x)([K]) = |x^K|`.
    pub fn chi(&self) -> MarksVector {
        let m = self.table.marks();
        let c = self.table.len();
        let mut values = vec![BigInt::zero(); c];
        for (h, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, v) in values.iter_mut().enumerate().take(h + 1) {
                if m[h][k] != 0 {
                    *v += a * BigInt::from(m[h][k]);
                }
            }
        }
        MarksVector::from_big(self.table.clone(), values)
    }

    /// The unique element with the given marks, if it is integral.
    pub fn from_marks(f: &MarksVector) -> Result<Self> {
        let x = linalg::solve_row_lower_triangular(f.table.marks(), &f.values)?;
        let coords = x
            .iter()
            .map(|q| linalg::to_integer(q).ok_or(Error::NotInImage))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_big(f.table.clone(), coords))
    }

    /// The rational combination of `[G/H]` with the given marks.
    pub fn rational_from_marks(f: &MarksVector) -> Result<Vec<Rational>> {
        linalg::solve_row_lower_triangular(f.table.marks(), &f.values)
    }

    /// An explicit G-set in this class, orbits in class order. Requires an
    /// effective element.
    pub fn to_gset(&self, caps: &Caps) -> Result<FiniteGSet> {
        if !self.is_effective() {
            return Err(Error::Invalid("only effective elements are G-sets".into()));
        }
        let mut x = FiniteGSet::trivial(self.table.group().clone(), 0);
        for (i, c) in self.coords.iter().enumerate() {
            let copies = c.to_usize().expect("small coefficient");
            for _ in 0..copies {
                x = x.disjoint_union(&FiniteGSet::coset_space(self.table.rep(i)))?;
            }
        }
        x.tabulate(caps)
    }
}

/// `[G/Hᵢ]·[G/Hⱼ]` as (class, multiplicity) pairs.
pub fn basis_product(t: &ConjugacyClassTable, i: usize, j: usize) -> Vec<(usize, usize)> {
    let h = t.rep(i);
    let k = t.rep(j);
    let mut acc: Vec<(usize, usize)> = Vec::new();
    for (g, _) in double_cosets(h, k).expect("same ambient group") {
        let class = t.class_of_intersection(&h.conjugate(g), k);
        match acc.iter_mut().find(|(c, _)| *c == class) {
            Some(e) => e.1 += 1,
            None => acc.push((class, 1)),
        }
    }
    acc.sort_unstable();
    acc
}

impl PartialEq for BurnsideElement {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.coords == other.coords
    }
}

impl Eq for BurnsideElement {}

impl Add for &BurnsideElement {
    type Output = BurnsideElement;
    fn add(self, rhs: Self) -> BurnsideElement {
        self.checked_add(rhs)
            .expect("elements of the same Burnside ring")
    }
}

impl Sub for &BurnsideElement {
    type Output = BurnsideElement;
    fn sub(self, rhs: Self) -> BurnsideElement {
        self + &(-rhs)
    }
}

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        BurnsideElement::from_big(self.table.clone(), self.coords.iter().map(|c| -c).collect())
    }
}

impl Mul for &BurnsideElement {
    type Output = BurnsideElement;
    fn mul(self, rhs: Self) -> BurnsideElement {
        self.multiply(rhs)
            .expect("elements of the same Burnside ring")
    }
}

/// Largest classes first, e.g. `3[S3/C2] - [S3/e]`.
impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.table.group().label();
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "[{g}/{}]", self.table.label(i))?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A rational function on `Conj(G)`.
#[derive(Clone)]
pub struct MarksVector {
    table: TableRef,
    values: Vec<Rational>,
}

impl MarksVector {
    pub fn new(table: TableRef, values: Vec<Rational>) -> Self {
        assert_eq!(values.len(), table.len(), "one value per class");
        MarksVector { table, values }
    }

    pub fn from_big(table: TableRef, values: Vec<BigInt>) -> Self {
        Self::new(
            table,
            values.into_iter().map(Rational::from_integer).collect(),
        )
    }

    pub fn from_ints(table: TableRef, values: &[i64]) -> Self {
        Self::new(table, values.iter().map(|&v| linalg::rat(v)).collect())
    }

    pub fn zero(table: TableRef) -> Self {
        let c = table.len();
        Self::new(table, vec![Rational::zero(); c])
    }

    pub fn ones(table: TableRef) -> Self {
        let c = table.len();
        Self::new(table, vec![Rational::one(); c])
    }

    /// `𝟙_[H]`.
    pub fn indicator(table: TableRef, class: usize) -> Self {
        let mut f = Self::zero(table);
        f.values[class] = Rational::one();
        f
    }

    pub fn table(&self) -> &TableRef {
        &self.table
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Rational {
        &self.values[class]
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(
            self.table.clone(),
            self.values.iter().map(|v| v * k).collect(),
        )
    }

    fn zip(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if !same_table(&self.table, &other.table) {
            return Err(Error::GroupMismatch);
        }
        Ok(Self::new(
            self.table.clone(),
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| op(a, b))
                .collect(),
        ))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }
}

impl PartialEq for MarksVector {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.values == other.values
    }
}

impl Eq for MarksVector {}

impl Add for &MarksVector {
    type Output = MarksVector;
    fn add(self, rhs: Self) -> MarksVector {
        self.checked_add(rhs).expect("marks over the same group")
    }
}

impl Sub for &MarksVector {
    type Output = MarksVector;
    fn sub(self, rhs: Self) -> MarksVector {
        self.zip(rhs, |a, b| a - b)
            .expect("marks over the same group")
    }
}

impl Mul for &MarksVector {
    type Output = MarksVector;
    fn mul(self, rhs: Self) -> MarksVector {
        self.checked_mul(rhs).expect("marks over the same group")
    }
}

impl fmt::Debug for MarksVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", vals.join(", "))
    }
}

/// Product computed by decomposing the explicit Cartesian product.
pub fn oracle_multiply(
    x: &BurnsideElement,
    y: &BurnsideElement,
    caps: &Caps,
) -> Result<BurnsideElement> {
    x.check(y)?;
    let t = &x.table;
    let mut out = BurnsideElement::zero(t.clone());
    for (i, a) in x.coords.iter().enumerate() {
        for (j, b) in y.coords.iter().enumerate() {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let prod = FiniteGSet::coset_space(t.rep(i))
                .product(&FiniteGSet::coset_space(t.rep(j)), caps)?
                .decompose(t)?;
            out = &out + &prod.scale(&(a * b));
        }
    }
    Ok(out)
}

/// `Res_φ` for `φ: H → G`, by restricting explicit coset spaces.
pub fn restriction(
    phi: &GroupHom,
    x: &BurnsideElement,
    source_table: &TableRef,
) -> Result<BurnsideElement> {
    let images = (0..x.table.len())
        .map(|l| {
            FiniteGSet::coset_space(x.table.rep(l))
                .restrict(phi)?
                .decompose(source_table)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(linear_combination(source_table, x, &images))
}

/// `Tr_φ` for `φ: H → G`, by inducing explicit coset spaces.
pub fn transfer(
    phi: &GroupHom,
    x: &BurnsideElement,
    target_table: &TableRef,
    caps: &Caps,
) -> Result<BurnsideElement> {
    let images = transfer_images(phi, &x.table, target_table, caps)?;
    Ok(linear_combination(target_table, x, &images))
}

/// `Tr_φ([H/L])` for every class `L`.
pub fn transfer_images(
    phi: &GroupHom,
    source_table: &TableRef,
    target_table: &TableRef,
    caps: &Caps,
) -> Result<Vec<BurnsideElement>> {
    (0..source_table.len())
        .map(|l| {
            FiniteGSet::coset_space(source_table.rep(l))
                .induce(phi, caps)?
                .decompose(target_table)
        })
        .collect()
}

/// `Res_φ([G/L])` for every class `L`.
pub fn restriction_images(
    phi: &GroupHom,
    source_table: &TableRef,
    target_table: &TableRef,
) -> Result<Vec<BurnsideElement>> {
    (0..target_table.len())
        .map(|l| {
            FiniteGSet::coset_space(target_table.rep(l))
                .restrict(phi)?
                .decompose(source_table)
        })
        .collect()
}

fn linear_combination(
    table: &TableRef,
    x: &BurnsideElement,
    images: &[BurnsideElement],
) -> BurnsideElement {
    let mut out = BurnsideElement::zero(table.clone());
    for (c, img) in x.coords.iter().zip(images) {
        if !c.is_zero() {
            out = &out + &img.scale(c);
        }
    }
    out
}

/// `Res_φ(f)([K]) = f([φ(K)])`, given the class map `[K] ↦ [φ(K)]`.
pub fn restrict_marks(
    f: &MarksVector,
    class_map: &[usize],
    source_table: &TableRef,
) -> MarksVector {
    MarksVector::new(
        source_table.clone(),
        class_map.iter().map(|&k| f.values[k].clone()).collect(),
    )
}

/// Subgroup of `H` (as a standalone group) matching a subgroup of `G` that it
/// contains, via the inclusion `φ: H ↪ G`.
pub(crate) fn pull_back_class(
    phi: &GroupHom,
    source_table: &TableRef,
    sub: &SubgroupRef,
) -> Result<usize> {
    let h = phi.source();
    let mut els: Vec<u32> = (0..h.order())
        .filter(|&a| sub.contains(phi.apply(a)))
        .map(|a| a as u32)
        .collect();
    els.sort_unstable();
    if els.len() != sub.order() {
        return Err(Error::NotASubgroup);
    }
    source_table.class_of_elements(&els)
}

/// Transfer along an inclusion on marks:
/// `Tr(f)([K]) = Σ_{gH : K^g ⊆ H} f([K^g])`.
pub fn transfer_marks_inclusion(
    phi: &GroupHom,
    f: &MarksVector,
    target_table: &TableRef,
) -> Result<MarksVector> {
    if !phi.is_injective() {
        return Err(Error::Invalid(
            "transfer on marks needs an inclusion".into(),
        ));
    }
    let g = phi.target();
    let image = SubgroupRef::from_elements(
        g.clone(),
        (0..phi.source().order()).map(|a| phi.apply(a)).collect(),
    )?;
    let reps = image.left_coset_reps();
    let values = target_table
        .reps()
        .map(|k| {
            let mut acc = Rational::zero();
            for &a in &reps {
                let kg = k.conjugate(a);
                if kg.is_subgroup_of(&image) {
                    acc += &f.values[pull_back_class(phi, &f.table, &kg)?];
                }
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MarksVector::new(target_table.clone(), values))
}

/// Burnside's lemma on marks: `Tr_{G→e}(f) = (1/|G|) Σ_g f([⟨g⟩])`.
pub fn transfer_marks_trivial(f: &MarksVector) -> Rational {
    let t = &f.table;
    let g = t.group();
    let mut acc = Rational::zero();
    for a in 0..g.order() {
        acc += &f.values[t.class_of_generated(&[a])];
    }
    acc / linalg::rat(g.order() as i64)
}

/// `x ⊠ y` over `G × H` from `(f ⊠ g)([K]) = f([π₁K]) · g([π₂K])`.
pub fn external_product(
    x: &BurnsideElement,
    y: &BurnsideElement,
    dp: &DirectProduct,
    product_table: &TableRef,
) -> Result<BurnsideElement> {
    if !x.table.group().same_group(dp.left()) || !y.table.group().same_group(dp.right()) {
        return Err(Error::GroupMismatch);
    }
    let (fx, fy) = (x.chi(), y.chi());
    let (p1, p2) = (dp.projection_left(), dp.projection_right());
    let values = product_table
        .reps()
        .map(|k| {
            let a = x.table.class_of_elements(p1.image(k).elements())?;
            let b = y.table.class_of_elements(p2.image(k).elements())?;
            Ok(&fx.values[a] * &fy.values[b])
        })
        .collect::<Result<Vec<_>>>()?;
    BurnsideElement::from_marks(&MarksVector::new(product_table.clone(), values))
}

/// `x ⊠ y` by decomposing the explicit product set.
pub fn oracle_external_product(
    x: &BurnsideElement,
    y: &BurnsideElement,
    dp: &DirectProduct,
    product_table: &TableRef,
    caps: &Caps,
) -> Result<BurnsideElement> {
    x.to_gset(caps)?
        .external_product(&y.to_gset(caps)?, dp, caps)?
        .decompose(product_table)
}

/// An additive map `A(H) → A(G)` on marks:
/// `F(𝟙_[L]) = Σ_[K] M^{[K]}_{[L]} 𝟙_[K]`, stored as `entries[K][L]`.
#[derive(Clone)]
pub struct AdditiveMapMatrix {
    source: TableRef,
    target: TableRef,
    entries: Vec<Vec<Rational>>,
}

impl AdditiveMapMatrix {
    pub fn new(source: TableRef, target: TableRef, entries: Vec<Vec<Rational>>) -> Self {
        assert_eq!(entries.len(), target.len());
        assert!(entries.iter().all(|r| r.len() == source.len()));
        AdditiveMapMatrix {
            source,
            target,
            entries,
        }
    }

    /// `M(F)` from the images `F([H/L])` of all basis elements.
    ///
    /// `𝟙_[L]` is the rational element `Σ_{L'} x_{L'} [H/L']` solving
    /// `χ(x) = 𝟙_[L]`, so `M^K_L = Σ_{L'} x_{L'} χ(F([H/L']))([K])`.
    pub fn from_basis_images(
        source: TableRef,
        target: TableRef,
        images: &[BurnsideElement],
    ) -> Result<Self> {
        if images.len() != source.len() || images.iter().any(|i| !same_table(&i.table, &target)) {
            return Err(Error::GroupMismatch);
        }
        let image_marks: Vec<MarksVector> = images.iter().map(|i| i.chi()).collect();
        let mut entries = vec![vec![Rational::zero(); source.len()]; target.len()];
        for l in 0..source.len() {
            let x =
                BurnsideElement::rational_from_marks(&MarksVector::indicator(source.clone(), l))?;
            for (lp, coeff) in x.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for (k, row) in entries.iter_mut().enumerate() {
                    row[l] += coeff * &image_marks[lp].values[k];
                }
            }
        }
        Ok(Self::new(source, target, entries))
    }

    pub fn identity(table: TableRef) -> Self {
        let c = table.len();
        Self::new(table.clone(), table, linalg::identity(c))
    }

    /// Precomposition with `ψ: Conj(G) → Conj(H)`, i.e. `F(f)([K]) = f(ψ[K])`,
    /// for `f` over the source `H` and `K` in the target `G`.
    pub fn from_class_map(source: TableRef, target: TableRef, psi: &[usize]) -> Self {
        let entries = (0..target.len())
            .map(|k| {
                (0..source.len())
                    .map(|l| {
                        if psi[k] == l {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(source, target, entries)
    }

    pub fn source(&self) -> &TableRef {
        &self.source
    }

    pub fn target(&self) -> &TableRef {
        &self.target
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// `M^K_L`.
    pub fn entry(&self, k: usize, l: usize) -> &Rational {
        &self.entries[k][l]
    }

    pub fn apply(&self, f: &MarksVector) -> Result<MarksVector> {
        if !same_table(&f.table, &self.source) {
            return Err(Error::GroupMismatch);
        }
        Ok(MarksVector::new(
            self.target.clone(),
            linalg::mat_vec(&self.entries, &f.values),
        ))
    }

    /// Applies the map to a Burnside element, failing if the result is not integral.
    pub fn apply_burnside(&self, x: &BurnsideElement) -> Result<BurnsideElement> {
        BurnsideElement::from_marks(&self.apply(&x.chi())?)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &AdditiveMapMatrix) -> Result<Self> {
        if !same_table(&first.target, &self.source) {
            return Err(Error::GroupMismatch);
        }
        Ok(Self::new(
            first.source.clone(),
            self.target.clone(),
            linalg::mat_mul(&self.entries, &first.entries),
        ))
    }
}

impl PartialEq for AdditiveMapMatrix {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.source, &other.source)
            && same_table(&self.target, &other.target)
            && self.entries == other.entries
    }
}

impl fmt::Debug for AdditiveMapMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "M: A({}) -> A({})",
            self.source.group().label(),
            self.target.group().label()
        )?;
        for row in &self.entries {
            let r: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::PermGroup;

    fn table(spec: &str) -> TableRef {
        let caps = Caps::default();
        let g = Arc::new(PermGroup::from_spec(spec, &caps).unwrap());
        Arc::new(ConjugacyClassTable::new(g, &caps).unwrap())
    }

    #[test]
    fn tables_of_marks() {
        assert_eq!(table("e").marks(), &vec![vec![1]]);
        assert_eq!(table("C2").marks(), &vec![vec![2, 0], vec![1, 1]]);
        assert_eq!(
            table("S3").marks(),
            &vec![
                vec![6, 0, 0, 0],
                vec![3, 1, 0, 0],
                vec![2, 0, 2, 0],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(table("(1 2 3)").marks(), &vec![vec![3, 0], vec![1, 1]]);
    }

    #[test]
    fn chi_and_from_marks() {
        let t = table("S3");
        let c2 = BurnsideElement::basis(t.clone(), 1);
        assert_eq!(c2.chi(), MarksVector::from_ints(t.clone(), &[3, 1, 0, 0]));
        assert_eq!(
            BurnsideElement::zero(t.clone()).chi(),
            MarksVector::zero(t.clone())
        );
        assert_eq!(
            BurnsideElement::one(t.clone()).chi(),
            MarksVector::ones(t.clone())
        );
        assert_eq!(BurnsideElement::from_marks(&c2.chi()).unwrap(), c2);
        assert_eq!(
            BurnsideElement::from_marks(&MarksVector::ones(t.clone())).unwrap(),
            BurnsideElement::one(t.clone())
        );
        assert_eq!(
            BurnsideElement::from_marks(&MarksVector::from_ints(t, &[1, 0, 0, 0])).unwrap_err(),
            Error::NotInImage
        );
    }

    #[test]
    fn multiplication_examples() {
        let t = table("S3");
        let c2 = BurnsideElement::basis(t.clone(), 1);
        assert_eq!(
            &c2 * &c2,
            BurnsideElement::from_coords(t.clone(), &[1, 1, 0, 0])
        );
        assert_eq!(&c2 * &BurnsideElement::one(t.clone()), c2);
        let t2 = table("C2");
        let free = BurnsideElement::basis(t2.clone(), 0);
        assert_eq!(&free * &free, BurnsideElement::from_coords(t2, &[2, 0]));
        assert_eq!(c2.to_string(), "[S3/C2]");
        let w = BurnsideElement::from_coords(t, &[-1, 3, 0, 0]);
        assert_eq!(w.to_string(), "3[S3/C2] - [S3/e]");
    }

    #[test]
    fn transfer_examples() {
        let caps = Caps::default();
        let t = table("S3");
        let c2 = Arc::new(t.rep(1).as_group(&caps).unwrap());
        let tc2 = Arc::new(ConjugacyClassTable::new(c2.clone(), &caps).unwrap());
        let inc = GroupHom::inclusion(c2, t.group().clone()).unwrap();
        let point = BurnsideElement::one(tc2.clone());
        assert_eq!(
            transfer(&inc, &point, &t, &caps).unwrap(),
            BurnsideElement::basis(t.clone(), 1)
        );
        let te = table("e");
        let to_e = GroupHom::to_trivial(t.group().clone(), te.group().clone());
        let free = BurnsideElement::basis(t.clone(), 0);
        assert_eq!(
            transfer(&to_e, &free, &te, &caps).unwrap(),
            BurnsideElement::one(te.clone())
        );
        let id = GroupHom::identity(t.group().clone());
        let x = BurnsideElement::from_coords(t.clone(), &[1, 2, 0, 1]);
        assert_eq!(restriction(&id, &x, &t).unwrap(), x);
    }

    #[test]
    fn trivial_transfer_matrix() {
        let t = table("C2");
        let te = table("e");
        let images: Vec<BurnsideElement> =
            (0..2).map(|_| BurnsideElement::one(te.clone())).collect();
        let m = AdditiveMapMatrix::from_basis_images(t, te, &images).unwrap();
        assert_eq!(m.entry(0, 0), &linalg::rat_frac(1, 2));
        assert_eq!(m.entry(0, 1), &linalg::rat_frac(1, 2));
    }
}
