use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::aa::AAElement;
use super::parks::ParksVector;
use crate::burnside::{BurnsideElement, MarksVector};
use crate::error::{Error, Result};
use crate::groups::{
    Caps, ConjugacyClassTable, DirectProduct, GroupHom, SubgroupRef, TableRef, WreathProduct,
};
use crate::gsets::FiniteGSet;
use crate::linalg::Rational;
use crate::partitions::{enumerate_parts, DecoratedPartition};

/// Orbit data of a subgroup `H ≤ G≀Σₙ`: the orbits `H\[n]` (each led by its
/// least index `i`) and, per orbit, the pair `([H_ii], |Hi|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTypeRecord {
    pub orbits: Vec<Vec<usize>>,
    pub parts: Vec<(usize, usize)>,
}

impl OrbitTypeRecord {
    pub fn partition(&self) -> DecoratedPartition {
        let mut p = DecoratedPartition::empty();
        for &(x, m) in &self.parts {
            p.insert(x, m, 1);
        }
        p
    }
}

/// One degree `n` over a fixed `G`: the wreath product `G≀Σₙ`, the basis
/// `Parts(G, n)` and the explicit-group constructions `α`, `β` and the hull.
pub struct Level {
    table: TableRef,
    n: usize,
    caps: Caps,
    wreath: Arc<WreathProduct>,
    parts: Vec<DecoratedPartition>,
    part_index: HashMap<DecoratedPartition, usize>,
    alphas: OnceLock<Vec<SubgroupRef>>,
    wreath_table: OnceLock<Result<TableRef>>,
}

impl Level {
    pub fn new(table: TableRef, n: usize, caps: &Caps) -> Result<Self> {
        let wreath = Arc::new(WreathProduct::new(table.group().clone(), n, caps)?);
        let parts = enumerate_parts(table.len(), n);
        let part_index = parts
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Ok(Level {
            table,
            n,
            caps: *caps,
            wreath,
            parts,
            part_index,
            alphas: OnceLock::new(),
            wreath_table: OnceLock::new(),
        })
    }

    pub fn table(&self) -> &TableRef {
        &self.table
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn wreath(&self) -> &Arc<WreathProduct> {
        &self.wreath
    }

    /// `Parts(G, n)` in canonical order.
    pub fn parts(&self) -> &[DecoratedPartition] {
        &self.parts
    }

    pub fn part_index(&self, lambda: &DecoratedPartition) -> Option<usize> {
        self.part_index.get(lambda).copied()
    }

    /// `Conj(G≀Σₙ)`, enumerated on first use within the subgroup cap.
    pub fn wreath_table(&self) -> Result<TableRef> {
        self.wreath_table
            .get_or_init(|| {
                ConjugacyClassTable::new(self.wreath.group().clone(), &self.caps).map(Arc::new)
            })
            .clone()
    }

    fn build_alpha(&self, lambda: &DecoratedPartition) -> SubgroupRef {
        let mut blocks = Vec::with_capacity(lambda.length());
        for ((x, m), k) in lambda.parts() {
            for _ in 0..k {
                blocks.push((self.table.rep(x), m));
            }
        }
        self.wreath.block_subgroup(&blocks)
    }

    /// `α(λ) = ∏ (H≀Σₘ)^{λ_{[H],m}}`, blocks placed left to right in
    /// canonical part order.
    pub fn alpha(&self, lambda: &DecoratedPartition) -> Result<SubgroupRef> {
        let i = self.part_index(lambda).ok_or(Error::DegreeMismatch {
            expected: self.n,
            found: lambda.size(),
        })?;
        let alphas = self
            .alphas
            .get_or_init(|| self.parts.iter().map(|l| self.build_alpha(l)).collect());
        Ok(alphas[i].clone())
    }

    fn check_subgroup(&self, h: &SubgroupRef) -> Result<()> {
        if !h.ambient().same_group(self.wreath.group()) {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// Orbits of `H` on `[n]` and the classes `[H_ii]` of the orbit leaders.
    pub fn orbit_type(&self, h: &SubgroupRef) -> Result<OrbitTypeRecord> {
        self.check_subgroup(h)?;
        let w = &self.wreath;
        let n = self.n;
        let gens = h.generators();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut k = 0;
            while k < orbit.len() {
                let i = orbit[k];
                for &g in gens {
                    let j = w.sigma(g as usize)[i] as usize;
                    if !seen[j] {
                        seen[j] = true;
                        orbit.push(j);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let mut parts = Vec::with_capacity(orbits.len());
        for orbit in &orbits {
            let i = orbit[0];
            let mut hii: Vec<u32> = h
                .iter()
                .filter(|&el| w.sigma(el)[i] as usize == i)
                .map(|el| w.components(el)[i])
                .collect();
            hii.sort_unstable();
            hii.dedup();
            parts.push((self.table.class_of_elements(&hii)?, orbit.len()));
        }
        Ok(OrbitTypeRecord { orbits, parts })
    }

    /// `β(H) = Σ_{Hi} ([H_ii], |Hi|)`.
    pub fn beta(&self, h: &SubgroupRef) -> Result<DecoratedPartition> {
        Ok(self.orbit_type(h)?.partition())
    }

    /// `H_ij = {ḡ_j : (ḡ, σ) ∈ H, σ(i) = j}` for all `i, j`, as sorted base
    /// element lists (empty when `i` and `j` lie in different orbits).
    pub fn transfer_sets(&self, h: &SubgroupRef) -> Result<Vec<Vec<Vec<u32>>>> {
        self.check_subgroup(h)?;
        let n = self.n;
        let w = &self.wreath;
        let mut sets = vec![vec![Vec::new(); n]; n];
        for el in h.iter() {
            let (gbar, sigma) = (w.components(el), w.sigma(el));
            for i in 0..n {
                let j = sigma[i] as usize;
                sets[i][j].push(gbar[j]);
            }
        }
        for row in &mut sets {
            for s in row.iter_mut() {
                s.sort_unstable();
                s.dedup();
            }
        }
        Ok(sets)
    }

    /// Checks `e ∈ H_ii`, `H_jk · H_ij ⊆ H_ik` and `H_ij⁻¹ = H_ji`.
    pub fn groupoid_laws_hold(&self, h: &SubgroupRef) -> Result<bool> {
        let sets = self.transfer_sets(h)?;
        let g = self.wreath.base();
        let n = self.n;
        for i in 0..n {
            if sets[i][i].binary_search(&0).is_err() {
                return Ok(false);
            }
            for j in 0..n {
                let mut inv: Vec<u32> = sets[i][j]
                    .iter()
                    .map(|&a| g.inverse(a as usize) as u32)
                    .collect();
                inv.sort_unstable();
                if inv != sets[j][i] {
                    return Ok(false);
                }
                for k in 0..n {
                    for &b in &sets[j][k] {
                        for &a in &sets[i][j] {
                            let c = g.mul(b as usize, a as usize) as u32;
                            if sets[i][k].binary_search(&c).is_err() {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// `H' = {(ḡ, σ) : ḡ_{σ(i)} ∈ H_{iσ(i)} for all i}`.
    pub fn hull(&self, h: &SubgroupRef) -> Result<SubgroupRef> {
        let sets = self.transfer_sets(h)?;
        let w = &self.wreath;
        let els: Vec<usize> = (0..w.order())
            .filter(|&el| {
                let (gbar, sigma) = (w.components(el), w.sigma(el));
                (0..self.n).all(|i| {
                    let j = sigma[i] as usize;
                    sets[i][j].binary_search(&gbar[j]).is_ok()
                })
            })
            .collect();
        SubgroupRef::from_elements(w.group().clone(), els)
    }

    /// `X^{×n}` for a `G`-set `X`.
    pub fn power_gset(&self, x: &FiniteGSet) -> Result<FiniteGSet> {
        x.power(&self.wreath, &self.caps)
    }

    /// `r([X]) = Σ_{orbits} β(Stab)`, read off an explicit `G≀Σₙ`-set.
    pub fn r_of_gset(&self, x: &FiniteGSet) -> Result<AAElement> {
        let mut out = AAElement::zero(self.table.clone(), self.n);
        for (_, _, stab) in x.orbit_stabilizers() {
            out = out.checked_add(&AAElement::basis(self.table.clone(), self.beta(&stab)?))?;
        }
        Ok(out)
    }

    /// `r: A(G≀Σₙ) → 𝔸(G, n)`, `[(G≀Σₙ)/H] ↦ β([H])`.
    pub fn r_map(&self, x: &BurnsideElement) -> Result<AAElement> {
        let wt = x.table();
        if !wt.group().same_group(self.wreath.group()) {
            return Err(Error::GroupMismatch);
        }
        let mut terms: Vec<(DecoratedPartition, BigInt)> = Vec::new();
        for (i, c) in x.coords().iter().enumerate() {
            if !c.is_zero() {
                terms.push((self.beta(wt.rep(i))?, c.clone()));
            }
        }
        AAElement::from_terms(self.table.clone(), self.n, terms)
    }

    /// The inclusion `𝔸(G, n) ↪ A(G≀Σₙ)`, `λ ↦ [(G≀Σₙ)/α(λ)]`.
    pub fn embed(&self, x: &AAElement) -> Result<BurnsideElement> {
        let wt = self.wreath_table()?;
        let mut coords = vec![BigInt::zero(); wt.len()];
        for (lam, c) in x.terms() {
            coords[wt.class_of(&self.alpha(lam)?)?] += c;
        }
        Ok(BurnsideElement::from_big(wt, coords))
    }

    /// `(β^*f)([H]) = f(β[H])` on `Conj(G≀Σₙ)`.
    pub fn beta_pullback(&self, f: &ParksVector) -> Result<MarksVector> {
        if f.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: f.degree(),
            });
        }
        let wt = self.wreath_table()?;
        let values = wt
            .reps()
            .map(|h| Ok(f.value(&self.beta(h)?)))
            .collect::<Result<Vec<Rational>>>()?;
        Ok(MarksVector::new(wt, values))
    }

    /// The internal (Cartesian) product of `𝔸(G, n)`, computed on explicit
    /// sets `(G≀Σₙ)/α(λ) × (G≀Σₙ)/α(μ)` and read back through `β`.
    pub fn internal_product(&self, x: &AAElement, y: &AAElement) -> Result<AAElement> {
        let mut out = AAElement::zero(self.table.clone(), self.n);
        for (l, a) in x.terms() {
            for (m, b) in y.terms() {
                let prod = FiniteGSet::coset_space(&self.alpha(l)?)
                    .product(&FiniteGSet::coset_space(&self.alpha(m)?), &self.caps)?;
                out = out.checked_add(&self.r_of_gset(&prod)?.scale(&(a * b)))?;
            }
        }
        Ok(out)
    }

    /// `κ ↦ |((G≀Σₙ)/α(λ))^{α(κ)}|`, counted on the explicit coset space.
    pub fn oracle_char_basis(&self, lambda: &DecoratedPartition) -> Result<ParksVector> {
        self.parks_of_gset(&FiniteGSet::coset_space(&self.alpha(lambda)?))
    }

    /// `κ ↦ |Y^{α(κ)}|` for an explicit `G≀Σₙ`-set `Y`.
    pub fn parks_of_gset(&self, y: &FiniteGSet) -> Result<ParksVector> {
        if !y.group().same_group(self.wreath.group()) {
            return Err(Error::GroupMismatch);
        }
        let mut out = ParksVector::zero(self.table.clone(), self.n);
        for kappa in &self.parts {
            let count = y.fixed_point_count(&self.alpha(kappa)?)?;
            out.set(kappa.clone(), Rational::from_integer(BigInt::from(count)));
        }
        Ok(out)
    }

    /// `Pₙ(x)` for effective `x`, by decomposing the explicit power set.
    pub fn oracle_power_op(&self, x: &BurnsideElement) -> Result<AAElement> {
        self.r_of_gset(&self.power_gset(&x.to_gset(&self.caps)?)?)
    }
}

/// The homomorphism `(G≀Σᵢ) × (G≀Σⱼ) → G≀Σ_{i+j}` placing blocks side by side.
fn juxtapose_hom(li: &Level, lj: &Level, ln: &Level, dp: &DirectProduct) -> Result<GroupHom> {
    let map = (0..dp.group().order())
        .map(|d| {
            let (a, b) = dp.split(d);
            ln.wreath.juxtapose(&li.wreath, a, &lj.wreath, b)
        })
        .collect();
    GroupHom::from_element_map(dp.group().clone(), ln.wreath.group().clone(), map)
}

/// `Tr(x ⊠ y)` along `G≀Σᵢ × G≀Σⱼ ⊆ G≀Σ_{i+j}`, on explicit sets.
pub fn oracle_transfer_product(
    x: &BurnsideElement,
    y: &BurnsideElement,
    li: &Level,
    lj: &Level,
    ln: &Level,
) -> Result<BurnsideElement> {
    let caps = &ln.caps;
    let dp = DirectProduct::new(li.wreath.group().clone(), lj.wreath.group().clone(), caps)?;
    let hom = juxtapose_hom(li, lj, ln, &dp)?;
    x.to_gset(caps)?
        .external_product(&y.to_gset(caps)?, &dp, caps)?
        .induce(&hom, caps)?
        .decompose(&ln.wreath_table()?)
}

/// The transfer product on marks:
/// `(f★g)([H]) = Σ f(π_{[i]}[H^σ]) · g(π_{[j]}[H^σ])` over the `i`-subsets
/// `S ⊆ [n]` preserved by `H`, where `σ` is the order-preserving shuffle
/// sending `[i]` onto `S`.
pub fn marks_transfer_product(
    f: &MarksVector,
    g: &MarksVector,
    li: &Level,
    lj: &Level,
    ln: &Level,
) -> Result<MarksVector> {
    let (i, j, n) = (li.n, lj.n, ln.n);
    if i + j != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: i + j,
        });
    }
    let (ti, tj, tn) = (li.wreath_table()?, lj.wreath_table()?, ln.wreath_table()?);
    let w = &ln.wreath;
    let mut values = Vec::with_capacity(tn.len());
    for h in tn.reps() {
        let mut acc = Rational::zero();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != i {
                continue;
            }
            let inside = |k: usize| mask & (1 << k) != 0;
            let preserved = h
                .generators()
                .iter()
                .all(|&el| (0..n).all(|k| inside(k) == inside(w.sigma(el as usize)[k] as usize)));
            if !preserved {
                continue;
            }
            let shuffle: Vec<usize> = (0..n)
                .filter(|&k| inside(k))
                .chain((0..n).filter(|&k| !inside(k)))
                .collect();
            let s = w.element(&vec![0; n], &shuffle);
            let hs = h.conjugate(s);
            let mut left = Vec::new();
            let mut right = Vec::new();
            for el in hs.iter() {
                let (gbar, sigma) = (w.components(el), w.sigma(el));
                let gb: Vec<usize> = gbar.iter().map(|&x| x as usize).collect();
                let sg: Vec<usize> = sigma.iter().map(|&x| x as usize).collect();
                left.push(li.wreath.element(&gb[..i], &sg[..i]) as u32);
                let sr: Vec<usize> = sg[i..].iter().map(|&x| x - i).collect();
                right.push(lj.wreath.element(&gb[i..], &sr) as u32);
            }
            for v in [&mut left, &mut right] {
                v.sort_unstable();
                v.dedup();
            }
            acc += f.value(ti.class_of_elements(&left)?) * g.value(tj.class_of_elements(&right)?);
        }
        values.push(acc);
    }
    Ok(MarksVector::new(tn, values))
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
    fn alpha_examples() {
        let t = table("C2");
        let caps = Caps::default();
        let lv = Level::new(t.clone(), 3, &caps).unwrap();
        let whole = lv.alpha(&DecoratedPartition::single(1, 3)).unwrap();
        assert_eq!(whole.order(), 48);
        assert!(lv
            .alpha(&DecoratedPartition::from_parts(&[(0, 1, 3)]))
            .unwrap()
            .is_trivial());
        assert_eq!(
            lv.alpha(&DecoratedPartition::single(0, 3)).unwrap().order(),
            6
        );
    }

    #[test]
    fn beta_examples() {
        let t = table("C2");
        let caps = Caps::default();
        let lv = Level::new(t.clone(), 2, &caps).unwrap();
        let w = lv.wreath().clone();
        let triv = SubgroupRef::trivial(w.group().clone());
        assert_eq!(
            lv.beta(&triv).unwrap(),
            DecoratedPartition::from_parts(&[(0, 1, 2)])
        );
        assert_eq!(
            lv.beta(&SubgroupRef::whole(w.group().clone())).unwrap(),
            DecoratedPartition::single(1, 2)
        );
        let swap = w.element(&[0, 0], &[1, 0]);
        let sigma2 = SubgroupRef::generated_by(w.group().clone(), &[swap]);
        assert_eq!(lv.beta(&sigma2).unwrap(), DecoratedPartition::single(0, 2));
        for lam in lv.parts() {
            assert_eq!(&lv.beta(&lv.alpha(lam).unwrap()).unwrap(), lam);
        }
    }

    #[test]
    fn hull_of_diagonal() {
        let t = table("C2");
        let caps = Caps::default();
        let lv = Level::new(t.clone(), 2, &caps).unwrap();
        let w = lv.wreath().clone();
        let diag = SubgroupRef::generated_by(w.group().clone(), &[w.element(&[1, 1], &[0, 1])]);
        let hull = lv.hull(&diag).unwrap();
        assert_eq!(hull.order(), 4);
        assert_eq!(
            hull,
            lv.alpha(&DecoratedPartition::from_parts(&[(1, 1, 2)]))
                .unwrap()
        );
        assert!(lv.groupoid_laws_hold(&diag).unwrap());
        let triv = SubgroupRef::trivial(w.group().clone());
        assert_eq!(lv.hull(&triv).unwrap(), triv);
        let wt = lv.wreath_table().unwrap();
        let x = BurnsideElement::basis(wt.clone(), wt.class_of(&diag).unwrap());
        assert_eq!(
            lv.r_map(&x).unwrap(),
            AAElement::basis(t.clone(), DecoratedPartition::from_parts(&[(1, 1, 2)]))
        );
    }
}
