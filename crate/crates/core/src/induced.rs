//! Maps `ŘF: Parks(H) → Parks(G)` induced by additive maps `F: A(H) → A(G)`,
//! with the transfer and restriction specializations, the Frobenius–Wielandt
//! map and norms.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::burnside::{
    pull_back_class, restrict_marks, same_table, AdditiveMapMatrix, BurnsideElement, MarksVector,
};
use crate::error::{Error, Result};
use crate::groups::{
    double_cosets, induced_class_map, monomial_representation, Caps, ConjugacyClassTable, GroupHom,
    PermGroup, SubgroupRef, TableRef, WreathProduct,
};
use crate::gsets::FiniteGSet;
use crate::linalg::{self, Rational};
use crate::partitions::{compositions_of, enumerate_parts, Composition, DecoratedPartition};
use crate::wreath_power::{from_parks, parks_char, AAElement, Level, ParksVector};

/// The matrix `ŘM^κ_λ` of a map `Parks(H, n) → Parks(G, n)`, rows indexed by
/// `Parts(G, n)` and columns by `Parts(H, n)`, both in canonical order.
#[derive(Clone)]
pub struct ParksMapMatrix {
    source: TableRef,
    target: TableRef,
    n: usize,
    rows: Vec<DecoratedPartition>,
    cols: Vec<DecoratedPartition>,
    col_index: HashMap<DecoratedPartition, usize>,
    entries: Vec<Vec<Rational>>,
}

impl ParksMapMatrix {
    pub fn zero(source: TableRef, target: TableRef, n: usize) -> Self {
        let rows = enumerate_parts(target.len(), n);
        let cols = enumerate_parts(source.len(), n);
        let col_index = cols
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let entries = vec![vec![Rational::zero(); cols.len()]; rows.len()];
        ParksMapMatrix {
            source,
            target,
            n,
            rows,
            cols,
            col_index,
            entries,
        }
    }

    fn from_entry_fn(
        source: TableRef,
        target: TableRef,
        n: usize,
        f: impl Fn(&DecoratedPartition, &DecoratedPartition) -> Rational,
    ) -> Self {
        let mut m = Self::zero(source, target, n);
        for (r, kappa) in m.rows.iter().enumerate() {
            for (c, lambda) in m.cols.iter().enumerate() {
                m.entries[r][c] = f(kappa, lambda);
            }
        }
        m
    }

    pub fn identity(table: TableRef, n: usize) -> Self {
        Self::from_entry_fn(table.clone(), table, n, |k, l| {
            if k == l {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn source(&self) -> &TableRef {
        &self.source
    }

    pub fn target(&self) -> &TableRef {
        &self.target
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `Parts(G, n)`.
    pub fn rows(&self) -> &[DecoratedPartition] {
        &self.rows
    }

    /// `Parts(H, n)`.
    pub fn cols(&self) -> &[DecoratedPartition] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// `ŘM^κ_λ`.
    pub fn entry(&self, kappa: &DecoratedPartition, lambda: &DecoratedPartition) -> Rational {
        match (self.rows.binary_search(kappa), self.col_index.get(lambda)) {
            (Ok(r), Some(&c)) => self.entries[r][c].clone(),
            _ => Rational::zero(),
        }
    }

    fn add_to(&mut self, kappa: &DecoratedPartition, lambda: &DecoratedPartition, v: &Rational) {
        let r = self.rows.binary_search(kappa).expect("row partition");
        let c = self.col_index[lambda];
        self.entries[r][c] += v;
    }

    /// `ŘF(f)(κ) = Σ_λ ŘM^κ_λ f(λ)`.
    pub fn apply(&self, f: &ParksVector) -> Result<ParksVector> {
        if !same_table(f.table(), &self.source) {
            return Err(Error::GroupMismatch);
        }
        if f.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: f.degree(),
            });
        }
        let support: Vec<(usize, &Rational)> =
            f.support().map(|(l, v)| (self.col_index[l], v)).collect();
        let mut out = ParksVector::zero(self.target.clone(), self.n);
        for (r, kappa) in self.rows.iter().enumerate() {
            let mut acc = Rational::zero();
            for &(c, v) in &support {
                let e = &self.entries[r][c];
                if !e.is_zero() {
                    acc += e * v;
                }
            }
            out.set(kappa.clone(), acc);
        }
        Ok(out)
    }

    /// `ŘF` on `𝔸(H, n)`, through the parks character. Fails if the image is
    /// not integral.
    pub fn apply_aa(&self, x: &AAElement) -> Result<AAElement> {
        from_parks(&self.apply(&parks_char(x))?)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ParksMapMatrix) -> Result<Self> {
        if !same_table(&first.target, &self.source) {
            return Err(Error::GroupMismatch);
        }
        if first.n != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: first.n,
            });
        }
        let mut out = Self::zero(first.source.clone(), self.target.clone(), self.n);
        out.entries = linalg::mat_mul(&self.entries, &first.entries);
        Ok(out)
    }

    /// True when `ŘM^κ_λ = 0` whenever `λ^♯ ≠ κ^♯`.
    pub fn respects_shapes(&self) -> bool {
        self.rows.iter().enumerate().all(|(r, kappa)| {
            let shape = kappa.undecorate();
            self.cols
                .iter()
                .enumerate()
                .all(|(c, lambda)| self.entries[r][c].is_zero() || lambda.undecorate() == shape)
        })
    }
}

impl PartialEq for ParksMapMatrix {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.source, &other.source)
            && same_table(&self.target, &other.target)
            && self.n == other.n
            && self.entries == other.entries
    }
}

impl fmt::Debug for ParksMapMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "ParksMap({} -> {}, n={})",
            self.source.group().label(),
            self.target.group().label(),
            self.n
        )?;
        for (r, kappa) in self.rows.iter().enumerate() {
            let row: Vec<String> = self.entries[r].iter().map(|v| v.to_string()).collect();
            writeln!(
                f,
                "  {}: [{}]",
                kappa.render(|x| self.target.label(x).to_string()),
                row.join(", ")
            )?;
        }
        Ok(())
    }
}

/// `Σ_{ℓ ∈ C(λ), ℓ^♯ = c^♯} ∏ᵢ M^{cᵢ^♭}_{ℓᵢ^♭}` for a composition `c` of `κ`.
/// The value does not depend on which composition of `κ` is used.
pub fn lift_entry(m: &AdditiveMapMatrix, c: &Composition, lambda: &DecoratedPartition) -> Rational {
    if lambda.length() != c.length() || lambda.undecorate() != c.unindex().undecorate() {
        return Rational::zero();
    }
    let sizes = c.sizes();
    let mut acc = Rational::zero();
    for l in compositions_of(lambda) {
        if l.sizes() != sizes {
            continue;
        }
        let mut prod = Rational::one();
        for (&(k, _), &(x, _)) in c.parts().iter().zip(l.parts()) {
            prod *= m.entry(k, x);
            if prod.is_zero() {
                break;
            }
        }
        acc += prod;
    }
    acc
}

/// `ŘM(F)` for `F` with matrix `M(F)` on marks.
pub fn lift_map(m: &AdditiveMapMatrix, n: usize) -> ParksMapMatrix {
    ParksMapMatrix::from_entry_fn(
        m.source().clone(),
        m.target().clone(),
        n,
        |kappa, lambda| lift_entry(m, &kappa.canonical_composition(), lambda),
    )
}

/// `ŘF` for `F(f)([K]) = f(ψ[K])`, `ψ: Conj(G) → Conj(H)`:
/// `ŘF(f)(κ) = f(ψ_*κ)`.
pub fn restriction_parks(
    source: &TableRef,
    target: &TableRef,
    psi: &[usize],
    n: usize,
) -> ParksMapMatrix {
    let mut m = ParksMapMatrix::zero(source.clone(), target.clone(), n);
    for r in 0..m.rows.len() {
        let image = m.rows[r].pushforward(|x| psi[x]);
        let c = m.col_index[&image];
        m.entries[r][c] = Rational::one();
    }
    m
}

/// `Res_φ` on parks for `φ: G → H`, with `H` the source of the map on parks.
pub fn restriction_parks_hom(
    phi: &GroupHom,
    g_table: &TableRef,
    h_table: &TableRef,
    n: usize,
) -> Result<ParksMapMatrix> {
    let psi = induced_class_map(phi, g_table, h_table)?;
    Ok(restriction_parks(h_table, g_table, &psi, n))
}

/// `ŘF(𝟙_λ) = (ψ_*λ)!/λ! · ∏ M_{[L]}^{λ_{[L],m}} · 𝟙_{ψ_*λ}` for `F` whose
/// marks matrix has the single nonzero entry `M_{[L]}` in column `[L]`, at
/// row `ψ[L]`.
pub fn lift_monomial(
    source: &TableRef,
    target: &TableRef,
    psi: &[usize],
    coefficients: &[Rational],
    n: usize,
) -> ParksMapMatrix {
    let mut m = ParksMapMatrix::zero(source.clone(), target.clone(), n);
    for lambda in m.cols.clone() {
        let kappa = lambda.pushforward(|x| psi[x]);
        let mut v = Rational::new(kappa.factorial(), lambda.factorial());
        for ((x, _), k) in lambda.parts() {
            v *= num_traits::pow(coefficients[x].clone(), k);
        }
        if !v.is_zero() {
            m.add_to(&kappa, &lambda, &v);
        }
    }
    m
}

/// Reads `ψ` and the coefficients `M_{[L]}` off a marks matrix with at most
/// one nonzero entry per column. Zero columns map to class `0`.
pub fn monomial_form(m: &AdditiveMapMatrix) -> Option<(Vec<usize>, Vec<Rational>)> {
    let mut psi = Vec::with_capacity(m.source().len());
    let mut coefs = Vec::with_capacity(m.source().len());
    for l in 0..m.source().len() {
        let nonzero: Vec<usize> = (0..m.target().len())
            .filter(|&k| !m.entry(k, l).is_zero())
            .collect();
        match nonzero.as_slice() {
            [] => {
                psi.push(0);
                coefs.push(Rational::zero());
            }
            [k] => {
                psi.push(*k);
                coefs.push(m.entry(*k, l).clone());
            }
            _ => return None,
        }
    }
    Some((psi, coefs))
}

/// `M(Tr_φ)` for an arbitrary homomorphism, from explicit induction of the
/// basis sets.
pub fn transfer_matrix(
    phi: &GroupHom,
    source: &TableRef,
    target: &TableRef,
    caps: &Caps,
) -> Result<AdditiveMapMatrix> {
    let images = crate::burnside::transfer_images(phi, source, target, caps)?;
    AdditiveMapMatrix::from_basis_images(source.clone(), target.clone(), &images)
}

/// `M(Res_φ)` for `φ: G → H`, from explicit restriction of the basis sets.
pub fn restriction_matrix(
    phi: &GroupHom,
    g_table: &TableRef,
    h_table: &TableRef,
) -> Result<AdditiveMapMatrix> {
    let images = crate::burnside::restriction_images(phi, g_table, h_table)?;
    AdditiveMapMatrix::from_basis_images(h_table.clone(), g_table.clone(), &images)
}

/// `Tr_φ` on parks along any homomorphism, using the monomial shape of
/// the transfer matrix with `ψ` the induced map on classes.
pub fn transfer_parks(
    phi: &GroupHom,
    source: &TableRef,
    target: &TableRef,
    n: usize,
    caps: &Caps,
) -> Result<ParksMapMatrix> {
    let m = transfer_matrix(phi, source, target, caps)?;
    let psi = induced_class_map(phi, source, target)?;
    let coefs = (0..source.len())
        .map(|l| m.entry(psi[l], l).clone())
        .collect::<Vec<_>>();
    Ok(lift_monomial(source, target, &psi, &coefs, n))
}

/// `M(Tr_{H⊆G})_{[L]} = [N_G(L) : N_H(L)]`.
pub fn inclusion_coefficients(phi: &GroupHom, source: &TableRef) -> Vec<Rational> {
    (0..source.len())
        .map(|l| {
            let rep = source.rep(l);
            let ng = phi.image(rep).normalizer().order();
            linalg::rat_frac(ng as i64, source.normalizer_order(l) as i64)
        })
        .collect()
}

fn check_inclusion(phi: &GroupHom, source: &TableRef, target: &TableRef) -> Result<()> {
    if !phi.source().same_group(source.group()) || !phi.target().same_group(target.group()) {
        return Err(Error::GroupMismatch);
    }
    if !phi.is_injective() {
        return Err(Error::Invalid("expected a subgroup inclusion".into()));
    }
    Ok(())
}

/// `Tr_{H⊆G}` on parks from the normalizer-index coefficients.
pub fn transfer_parks_inclusion(
    phi: &GroupHom,
    source: &TableRef,
    target: &TableRef,
    n: usize,
) -> Result<ParksMapMatrix> {
    check_inclusion(phi, source, target)?;
    let psi = induced_class_map(phi, source, target)?;
    Ok(lift_monomial(
        source,
        target,
        &psi,
        &inclusion_coefficients(phi, source),
        n,
    ))
}

/// `Tr_{H⊆G}` on parks by the coset sum: for `κ` with parts ordered and
/// decorated by representatives `Kᵢ`, `Tr(f)(κ)` adds `f(Σ ([Kᵢ^{gᵢ}]_H, mᵢ))`
/// over all tuples of cosets `gᵢH` with every `Kᵢ^{gᵢ} ⊆ H`.
pub fn transfer_parks_inclusion_cosets(
    phi: &GroupHom,
    source: &TableRef,
    target: &TableRef,
    n: usize,
) -> Result<ParksMapMatrix> {
    check_inclusion(phi, source, target)?;
    let image = phi.image(&SubgroupRef::whole(phi.source().clone()));
    let reps = image.left_coset_reps();
    // For each class of G, the H-classes of the admissible conjugates, one per coset.
    let landing = (0..target.len())
        .map(|k| {
            let rep = target.rep(k);
            reps.iter()
                .filter_map(|&a| {
                    let kg = rep.conjugate(a);
                    kg.is_subgroup_of(&image)
                        .then(|| pull_back_class(phi, source, &kg))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut m = ParksMapMatrix::zero(source.clone(), target.clone(), n);
    let one = Rational::one();
    for kappa in m.rows.clone() {
        let c = kappa.canonical_composition();
        if c.length() == 0 {
            m.add_to(&kappa, &DecoratedPartition::empty(), &one);
            continue;
        }
        let choices: Vec<&Vec<usize>> = c.parts().iter().map(|&(k, _)| &landing[k]).collect();
        if choices.iter().any(|v| v.is_empty()) {
            continue;
        }
        for pick in choices.iter().map(|v| v.iter()).multi_cartesian_product() {
            let mut lambda = DecoratedPartition::empty();
            for (&&l, &(_, size)) in pick.iter().zip(c.parts()) {
                lambda.insert(l, size, 1);
            }
            m.add_to(&kappa, &lambda, &one);
        }
    }
    Ok(m)
}

/// `H` as a standalone group with its class table and inclusion into `G`.
pub fn subgroup_table(h: &SubgroupRef, caps: &Caps) -> Result<(TableRef, GroupHom)> {
    let hg = Arc::new(h.as_group(caps)?);
    let table = Arc::new(ConjugacyClassTable::new(hg.clone(), caps)?);
    let inc = GroupHom::inclusion(hg, h.ambient().clone())?;
    Ok((table, inc))
}

/// Parks of `(G≀Σₙ) ×_{H≀Σₙ} Y` for an explicit `H≀Σₙ`-set `Y`, with `φ: H → G`.
pub fn oracle_transfer_parks(
    phi: &GroupHom,
    source: &Level,
    target: &Level,
    y: &FiniteGSet,
) -> Result<ParksVector> {
    let hom = WreathProduct::wreath_map(phi, source.wreath(), target.wreath())?;
    target.parks_of_gset(&y.induce(&hom, target.caps())?)
}

/// Parks of the restriction of an explicit `H≀Σₙ`-set `Y` along
/// `φ≀Σₙ` for `φ: G → H`.
pub fn oracle_restriction_parks(
    phi: &GroupHom,
    g_level: &Level,
    h_level: &Level,
    y: &FiniteGSet,
) -> Result<ParksVector> {
    let hom = WreathProduct::wreath_map(phi, g_level.wreath(), h_level.wreath())?;
    g_level.parks_of_gset(&y.restrict(&hom)?)
}

fn check_trivial(target: &TableRef) -> Result<()> {
    if target.group().order() != 1 {
        return Err(Error::Invalid(
            "the target of a transfer to e must be trivial".into(),
        ));
    }
    Ok(())
}

fn euler_phi(m: usize) -> usize {
    (1..=m).filter(|&a| a.gcd(&m) == 1).count()
}

/// `M(Tr_{G→e})_{[K]} = φ(|K|)/|N_G(K)|` for cyclic `K`, else `0`.
pub fn trivial_transfer_coefficients(source: &TableRef) -> Vec<Rational> {
    (0..source.len())
        .map(|k| {
            if source.is_cyclic(k) {
                linalg::rat_frac(
                    euler_phi(source.subgroup_order(k)) as i64,
                    source.normalizer_order(k) as i64,
                )
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// `Tr_{G→e}` on parks from the cyclic-subgroup coefficients.
pub fn transfer_parks_trivial(
    source: &TableRef,
    target: &TableRef,
    n: usize,
) -> Result<ParksMapMatrix> {
    check_trivial(target)?;
    let psi = vec![0; source.len()];
    Ok(lift_monomial(
        source,
        target,
        &psi,
        &trivial_transfer_coefficients(source),
        n,
    ))
}

/// `Tr_{G→e}` on parks by the orbit-counting sum:
/// `Tr(f)(λ) = |G|^{-|λ|} Σ_{(g₁,…,g_ℓ) ∈ G^ℓ} f(Σ ([⟨gᵢ⟩], mᵢ))`.
pub fn transfer_parks_trivial_tuples(
    source: &TableRef,
    target: &TableRef,
    n: usize,
) -> Result<ParksMapMatrix> {
    check_trivial(target)?;
    let g = source.group();
    let cyclic_class: Vec<usize> = (0..g.order())
        .map(|a| source.class_of_generated(&[a]))
        .collect();
    let mut m = ParksMapMatrix::zero(source.clone(), target.clone(), n);
    for lambda in m.rows.clone() {
        let sizes = lambda.canonical_composition().sizes();
        let weight = Rational::new(
            BigInt::one(),
            BigInt::from(g.order()).pow(sizes.len() as u32),
        );
        let mut tuple = vec![0usize; sizes.len()];
        loop {
            let mut kappa = DecoratedPartition::empty();
            for (&a, &size) in tuple.iter().zip(&sizes) {
                kappa.insert(cyclic_class[a], size, 1);
            }
            m.add_to(&lambda, &kappa, &weight);
            let mut i = 0;
            while i < tuple.len() {
                tuple[i] += 1;
                if tuple[i] < g.order() {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if i == tuple.len() {
                break;
            }
        }
    }
    Ok(m)
}

/// The Frobenius–Wielandt map `w: A(C_{|G|}) → A(G)`, given on marks by
/// precomposition with `Cyc: [H] ↦ [C_{|H|}]`.
pub struct FrobeniusWielandt {
    cyclic: TableRef,
    target: TableRef,
    cyc: Vec<usize>,
}

impl FrobeniusWielandt {
    pub fn new(target: TableRef, caps: &Caps) -> Result<Self> {
        let m = target.group().order();
        let cg = Arc::new(PermGroup::cyclic(m, caps)?);
        let cyclic = Arc::new(ConjugacyClassTable::new(cg, caps)?);
        Self::with_cyclic(target, cyclic)
    }

    /// Uses a given class table of `C_{|G|}`.
    pub fn with_cyclic(target: TableRef, cyclic: TableRef) -> Result<Self> {
        if cyclic.group().order() != target.group().order()
            || cyclic.len() != num_divisors(cyclic.group().order())
        {
            return Err(Error::Invalid(
                "expected the cyclic group of order |G|".into(),
            ));
        }
        let cyc = (0..target.len())
            .map(|k| {
                let order = target.subgroup_order(k);
                (0..cyclic.len())
                    .find(|&c| cyclic.subgroup_order(c) == order)
                    .ok_or(Error::ClassNotFound)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FrobeniusWielandt {
            cyclic,
            target,
            cyc,
        })
    }

    /// Class table of `C_{|G|}`.
    pub fn cyclic(&self) -> &TableRef {
        &self.cyclic
    }

    pub fn target(&self) -> &TableRef {
        &self.target
    }

    /// `Cyc: Conj(G) → Conj(C_{|G|})`.
    pub fn cyc_map(&self) -> &[usize] {
        &self.cyc
    }

    /// `M(w)`, the 0/1 matrix of precomposition with `Cyc`.
    pub fn matrix(&self) -> AdditiveMapMatrix {
        AdditiveMapMatrix::from_class_map(self.cyclic.clone(), self.target.clone(), &self.cyc)
    }

    /// `w(x) = χ⁻¹(χ(x) ∘ Cyc)`. A non-integral result is reported as
    /// `NotInImage`.
    pub fn apply(&self, x: &BurnsideElement) -> Result<BurnsideElement> {
        if !same_table(x.table(), &self.cyclic) {
            return Err(Error::GroupMismatch);
        }
        BurnsideElement::from_marks(&restrict_marks(&x.chi(), &self.cyc, &self.target))
    }

    /// `w̌` on parks in degree `n`: `w̌(f)(κ) = f(Cyc_*κ)`.
    pub fn lift(&self, n: usize) -> ParksMapMatrix {
        restriction_parks(&self.cyclic, &self.target, &self.cyc, n)
    }

    /// `w̌: 𝔸(C_{|G|}, n) → 𝔸(G, n)`.
    pub fn apply_aa(&self, x: &AAElement) -> Result<AAElement> {
        self.lift(x.degree()).apply_aa(x)
    }

    /// `wₙ = embed ∘ w̌ ∘ r: A(C_{|G|}≀Σₙ) → A(G≀Σₙ)`.
    pub fn apply_wreath(
        &self,
        source: &Level,
        target: &Level,
        x: &BurnsideElement,
    ) -> Result<BurnsideElement> {
        self.check_levels(source, target)?;
        target.embed(&self.apply_aa(&source.r_map(x)?)?)
    }

    fn check_levels(&self, source: &Level, target: &Level) -> Result<()> {
        if !same_table(source.table(), &self.cyclic) || !same_table(target.table(), &self.target) {
            return Err(Error::GroupMismatch);
        }
        if source.n() != target.n() {
            return Err(Error::DegreeMismatch {
                expected: source.n(),
                found: target.n(),
            });
        }
        Ok(())
    }

    /// Tests `wₙ(xy) = wₙ(x)wₙ(y)` on every pair of basis elements of
    /// `A(C_{|G|}≀Σₙ)`. Returns the first failing pair of class indices.
    pub fn wreath_multiplicativity(
        &self,
        source: &Level,
        target: &Level,
    ) -> Result<Option<(usize, usize)>> {
        self.check_levels(source, target)?;
        let st = source.wreath_table()?;
        let images = (0..st.len())
            .map(|i| self.apply_wreath(source, target, &BurnsideElement::basis(st.clone(), i)))
            .collect::<Result<Vec<_>>>()?;
        let tt = target.wreath_table()?;
        for i in 0..st.len() {
            for j in i..st.len() {
                let mut lhs = BurnsideElement::zero(tt.clone());
                for (class, mult) in crate::burnside::basis_product(&st, i, j) {
                    lhs = &lhs + &images[class].scale(&BigInt::from(mult));
                }
                if lhs != images[i].multiply(&images[j])? {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }
}

fn num_divisors(m: usize) -> usize {
    (1..=m).filter(|&d| m.is_multiple_of(d)).count()
}

/// `βφ[K] = Σ_{KaH ∈ K\G/H} ([K^a ∩ H], |KaH|/|H|)` for the monomial
/// representation `φ: G → H≀Σ_{[G:H]}`.
pub fn norm_partition(
    phi: &GroupHom,
    source: &TableRef,
    k: &SubgroupRef,
) -> Result<DecoratedPartition> {
    let image = phi.image(&SubgroupRef::whole(phi.source().clone()));
    let mut out = DecoratedPartition::empty();
    for (a, size) in double_cosets(k, &image)? {
        let meet = k.conjugate(a).intersect(&image);
        out.insert(
            pull_back_class(phi, source, &meet)?,
            size / image.order(),
            1,
        );
    }
    Ok(out)
}

/// `R_G^H: Parks(H, [G:H]) → Marks(G)`, `R(f)([K]) = f(βφ[K])`.
pub fn norm_restriction(
    phi: &GroupHom,
    source: &TableRef,
    target: &TableRef,
    f: &ParksVector,
) -> Result<MarksVector> {
    check_inclusion(phi, source, target)?;
    let n = phi.target().order() / phi.source().order();
    if f.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: f.degree(),
        });
    }
    if !same_table(f.table(), source) {
        return Err(Error::GroupMismatch);
    }
    let values = target
        .reps()
        .map(|k| Ok(f.value(&norm_partition(phi, source, k)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(MarksVector::new(target.clone(), values))
}

/// The norm on marks, `Nm(f)([K]) = ∏_{KgH} f([K^g ∩ H])`.
pub fn norm_marks(
    phi: &GroupHom,
    source: &TableRef,
    target: &TableRef,
    f: &MarksVector,
) -> Result<MarksVector> {
    check_inclusion(phi, source, target)?;
    let image = phi.image(&SubgroupRef::whole(phi.source().clone()));
    let values = target
        .reps()
        .map(|k| {
            let mut v = Rational::one();
            for (a, _) in double_cosets(k, &image)? {
                let meet = k.conjugate(a).intersect(&image);
                v *= f.value(pull_back_class(phi, source, &meet)?);
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MarksVector::new(target.clone(), values))
}

/// `β(φ(K))` for every class `K` of `G`, with `φ` the explicit monomial
/// representation into the wreath product of `level`. The level must be
/// built on `H` as a standalone group.
pub fn monomial_partitions(
    phi: &GroupHom,
    level: &Level,
    target: &TableRef,
    caps: &Caps,
) -> Result<Vec<DecoratedPartition>> {
    check_inclusion(phi, level.table(), target)?;
    let image = phi.image(&SubgroupRef::whole(phi.source().clone()));
    let mono = monomial_representation(&image, caps)?;
    if !mono.wreath.group().same_group(level.wreath().group()) {
        return Err(Error::GroupMismatch);
    }
    target
        .reps()
        .map(|k| {
            let els = k.iter().map(|a| mono.hom.apply(a)).collect();
            level.beta(&SubgroupRef::from_elements(
                level.wreath().group().clone(),
                els,
            )?)
        })
        .collect()
}

/// `|K ∩ H| = gcd(|K|, |H|)` for every subgroup `K ≤ G`.
pub fn gcd_property(h: &SubgroupRef, table: &TableRef) -> bool {
    (0..table.len()).all(|k| {
        table
            .conjugates(k)
            .all(|kg| kg.intersect(h).order() == kg.order().gcd(&h.order()))
    })
}

/// Checks, for every class `K`,
/// `Σ_{KaH} ([C_{K^a∩H}], |KaH|/|H|) = (|G|/l)·([C_d], l/|H|)` with
/// `d = gcd(|K|,|H|)` and `l = lcm(|K|,|H|)`. Cyclic decorations are
/// recorded by their order.
pub fn romero_commutes(h: &SubgroupRef, table: &TableRef) -> Result<bool> {
    let g = table.group().order();
    for k in table.reps() {
        let mut lhs = DecoratedPartition::empty();
        for (a, size) in double_cosets(k, h)? {
            lhs.insert(k.conjugate(a).intersect(h).order(), size / h.order(), 1);
        }
        let (d, l) = (k.order().gcd(&h.order()), k.order().lcm(&h.order()));
        let rhs = DecoratedPartition::from_parts(&[(d, l / h.order(), g / l)]);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Permutation;
    use crate::wreath_power::{parks_power_char, power_op};

    fn group(spec: &str) -> Arc<PermGroup> {
        Arc::new(PermGroup::from_spec(spec, &Caps::default()).unwrap())
    }

    fn table_of(g: Arc<PermGroup>) -> TableRef {
        Arc::new(ConjugacyClassTable::new(g, &Caps::default()).unwrap())
    }

    fn transposition(g: &Arc<PermGroup>) -> SubgroupRef {
        let t = g
            .index_of(&Permutation::from_cycles(3, &[vec![0, 1]]).unwrap())
            .unwrap();
        SubgroupRef::generated_by(g.clone(), &[t])
    }

    fn s3_and_c2() -> (TableRef, TableRef, GroupHom, SubgroupRef) {
        let g = group("S3");
        let h = transposition(&g);
        let hg = Arc::new(h.as_group(&Caps::default()).unwrap());
        let phi = GroupHom::inclusion(hg.clone(), g.clone()).unwrap();
        (table_of(hg), table_of(g), phi, h)
    }

    #[test]
    fn identity_lifts_to_identity() {
        let t = table_of(group("S3"));
        for n in 0..=3 {
            assert_eq!(
                lift_map(&AdditiveMapMatrix::identity(t.clone()), n),
                ParksMapMatrix::identity(t.clone(), n)
            );
        }
    }

    #[test]
    fn trivial_transfer_of_c2_in_degree_two() {
        let c2 = table_of(group("C2"));
        let e = table_of(group("e"));
        let half = linalg::rat_frac(1, 2);
        let m = transfer_parks_trivial(&c2, &e, 2).unwrap();
        let two = DecoratedPartition::integer(&[2]);
        assert_eq!(m.entry(&two, &DecoratedPartition::single(0, 2)), half);
        assert_eq!(m.entry(&two, &DecoratedPartition::single(1, 2)), half);
        let pairs = DecoratedPartition::integer(&[1, 1]);
        let quarter = linalg::rat_frac(1, 4);
        assert_eq!(
            m.entry(&pairs, &DecoratedPartition::from_parts(&[(0, 1, 2)])),
            quarter
        );
        assert_eq!(
            m.entry(
                &pairs,
                &DecoratedPartition::from_parts(&[(0, 1, 1), (1, 1, 1)])
            ),
            half
        );
        assert_eq!(m, transfer_parks_trivial_tuples(&c2, &e, 2).unwrap());
        let phi = GroupHom::to_trivial(c2.group().clone(), e.group().clone());
        let caps = Caps::default();
        assert_eq!(
            lift_map(&transfer_matrix(&phi, &c2, &e, &caps).unwrap(), 2),
            m
        );
        assert_eq!(transfer_parks(&phi, &c2, &e, 2, &caps).unwrap(), m);
    }

    #[test]
    fn inclusion_paths_agree() {
        let (ht, gt, phi, _) = s3_and_c2();
        let caps = Caps::default();
        let matrix = transfer_matrix(&phi, &ht, &gt, &caps).unwrap();
        for n in 0..=2 {
            let a = transfer_parks_inclusion(&phi, &ht, &gt, n).unwrap();
            assert_eq!(
                a,
                transfer_parks_inclusion_cosets(&phi, &ht, &gt, n).unwrap()
            );
            assert_eq!(a, lift_map(&matrix, n));
            assert!(a.respects_shapes());
        }
        let same = GroupHom::identity(gt.group().clone());
        assert_eq!(
            transfer_parks_inclusion(&same, &gt, &gt, 2).unwrap(),
            ParksMapMatrix::identity(gt.clone(), 2)
        );
    }

    #[test]
    fn transfer_of_power_matches_power_of_transfer() {
        let (ht, gt, phi, _) = s3_and_c2();
        let caps = Caps::default();
        let m = transfer_parks_inclusion(&phi, &ht, &gt, 2).unwrap();
        for l in 0..ht.len() {
            let x = BurnsideElement::basis(ht.clone(), l);
            let tx = crate::burnside::transfer(&phi, &x, &gt, &caps).unwrap();
            assert_eq!(
                m.apply(&parks_char(&power_op(&x, 2).unwrap())).unwrap(),
                parks_char(&power_op(&tx, 2).unwrap())
            );
        }
    }

    #[test]
    fn restriction_is_pushforward() {
        let (ht, gt, phi, _) = s3_and_c2();
        let m = restriction_parks_hom(&phi, &ht, &gt, 2).unwrap();
        assert_eq!(m, lift_map(&restriction_matrix(&phi, &ht, &gt).unwrap(), 2));
        let psi = vec![0; gt.len()];
        let collapse = restriction_parks(&ht, &gt, &psi, 2);
        let f = ParksVector::from_fn(ht.clone(), 2, |l| {
            linalg::rat(l.length() as i64 + 7 * l.mult(0, 2) as i64)
        });
        let out = collapse.apply(&f).unwrap();
        for kappa in enumerate_parts(gt.len(), 2) {
            assert_eq!(out.value(&kappa), f.value(&kappa.pushforward(|_| 0)));
        }
    }

    #[test]
    fn frobenius_wielandt_examples() {
        let caps = Caps::default();
        let st = table_of(group("S3"));
        let fw = FrobeniusWielandt::new(st.clone(), &caps).unwrap();
        let c = fw.cyclic().clone();
        let c2 = (0..c.len()).find(|&i| c.subgroup_order(i) == 2).unwrap();
        let w = fw.apply(&BurnsideElement::basis(c.clone(), c2)).unwrap();
        assert_eq!(w.to_string(), "3[S3/C2] - [S3/e]");
        assert_eq!(
            fw.apply(&BurnsideElement::one(c.clone())).unwrap(),
            BurnsideElement::one(st.clone())
        );
        assert_eq!(
            fw.apply(&BurnsideElement::basis(c.clone(), c.trivial_class()))
                .unwrap(),
            BurnsideElement::basis(st.clone(), st.trivial_class())
        );
        for n in 1..=2 {
            assert_eq!(fw.lift(n), lift_map(&fw.matrix(), n));
        }
        for l in 0..c.len() {
            let x = BurnsideElement::basis(c.clone(), l);
            assert_eq!(
                fw.apply_aa(&power_op(&x, 2).unwrap()).unwrap(),
                power_op(&fw.apply(&x).unwrap(), 2).unwrap()
            );
        }
    }

    #[test]
    fn norm_examples() {
        let (ht, gt, phi, h) = s3_and_c2();
        let free = BurnsideElement::basis(ht.clone(), ht.trivial_class());
        let f = free.chi();
        let nm = norm_marks(&phi, &ht, &gt, &f).unwrap();
        let c3 = (0..gt.len()).find(|&i| gt.subgroup_order(i) == 3).unwrap();
        assert_eq!(nm.value(c3), &linalg::rat(2));
        assert_eq!(nm.value(gt.trivial_class()), &linalg::rat(8));
        let chi = parks_char(&power_op(&free, 3).unwrap());
        assert_eq!(norm_restriction(&phi, &ht, &gt, &chi).unwrap(), nm);
        let lv = Level::new(ht.clone(), 3, &Caps::default()).unwrap();
        let via_monomial = monomial_partitions(&phi, &lv, &gt, &Caps::default()).unwrap();
        for (k, rep) in gt.reps().enumerate() {
            assert_eq!(via_monomial[k], norm_partition(&phi, &ht, rep).unwrap());
        }
        assert!(!gcd_property(&h, &gt));
        assert!(!romero_commutes(&h, &gt).unwrap());
        let whole = SubgroupRef::whole(gt.group().clone());
        assert!(gcd_property(&whole, &gt) && romero_commutes(&whole, &gt).unwrap());
        let a3 = gt.rep(c3).clone();
        assert!(gcd_property(&a3, &gt) && romero_commutes(&a3, &gt).unwrap());
    }

    #[test]
    fn power_char_survives_lift() {
        let (ht, gt, phi, _) = s3_and_c2();
        let m = restriction_matrix(&phi, &ht, &gt).unwrap();
        let lifted = lift_map(&m, 3);
        for x in 0..gt.len() {
            let f = BurnsideElement::basis(gt.clone(), x).chi();
            assert_eq!(
                lifted.apply(&parks_power_char(&f, 3)).unwrap(),
                parks_power_char(&m.apply(&f).unwrap(), 3)
            );
        }
    }
}
