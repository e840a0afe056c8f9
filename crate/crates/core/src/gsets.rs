//! Explicit finite G-sets.
//!
//! Everything here works point by point, with no use of the formulas in the
//! rest of the crate, so it serves as the reference the formulas are checked
//! against.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::groups::{
    Caps, DirectProduct, GroupHom, GroupRef, SubgroupRef, TableRef, WreathProduct,
};

type Action = Arc<dyn Fn(usize, usize) -> usize + Send + Sync>;

/// A group acting on the points `0..size`.
#[derive(Clone)]
pub struct FiniteGSet {
    group: GroupRef,
    size: usize,
    action: Action,
}

fn check_points(needed: u128, caps: &Caps) -> Result<usize> {
    if needed > caps.max_points as u128 {
        return Err(Error::CapExceeded {
            what: "explicit G-set",
            needed,
            cap: caps.max_points,
        });
    }
    Ok(needed as usize)
}

impl FiniteGSet {
    /// Wraps an arbitrary action. Use [`Self::is_valid_action`] to check it.
    pub fn from_fn(
        group: GroupRef,
        size: usize,
        action: impl Fn(usize, usize) -> usize + Send + Sync + 'static,
    ) -> Self {
        FiniteGSet {
            group,
            size,
            action: Arc::new(action),
        }
    }

    /// `G/H`, cosets numbered in the order of their minimal elements.
    pub fn coset_space(h: &SubgroupRef) -> Self {
        let g = h.ambient().clone();
        let reps = h.left_coset_reps();
        let table = h.left_coset_table();
        let size = reps.len();
        let grp = g.clone();
        Self::from_fn(g, size, move |x, p| table[grp.mul(x, reps[p])])
    }

    pub fn trivial(group: GroupRef, size: usize) -> Self {
        Self::from_fn(group, size, |_, p| p)
    }

    pub fn regular(group: GroupRef) -> Self {
        Self::coset_space(&SubgroupRef::trivial(group))
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, g: usize, p: usize) -> usize {
        (self.action)(g, p)
    }

    /// Checks `e·x = x` and `s·(h·x) = (sh)·x` for generators `s` and all `h`, `x`.
    pub fn is_valid_action(&self) -> bool {
        let g = &self.group;
        (0..self.size).all(|x| self.act(g.identity(), x) == x)
            && g.generators().iter().all(|&s| {
                let s = s as usize;
                (0..g.order()).all(|h| {
                    let sh = g.mul(s, h);
                    (0..self.size).all(|x| self.act(s, self.act(h, x)) == self.act(sh, x))
                })
            })
    }

    /// The same action stored as a `|G| × |X|` lookup table.
    pub fn tabulate(&self, caps: &Caps) -> Result<Self> {
        let n = self.size;
        check_points(self.group.order() as u128 * n as u128, caps)?;
        let table: Vec<u32> = (0..self.group.order())
            .flat_map(|g| (0..n).map(move |p| (g, p)))
            .map(|(g, p)| self.act(g, p) as u32)
            .collect();
        Ok(Self::from_fn(self.group.clone(), n, move |g, p| {
            table[g * n + p] as usize
        }))
    }

    /// `X ⊔ Y`, the points of `Y` placed after those of `X`.
    pub fn disjoint_union(&self, other: &FiniteGSet) -> Result<Self> {
        if !self.group.same_group(&other.group) {
            return Err(Error::GroupMismatch);
        }
        let (a, b) = (self.clone(), other.clone());
        let n = a.size;
        Ok(Self::from_fn(
            self.group.clone(),
            a.size + b.size,
            move |g, p| {
                if p < n {
                    a.act(g, p)
                } else {
                    n + b.act(g, p - n)
                }
            },
        ))
    }

    /// `X × Y` with the point `(a, b)` numbered `a·|Y| + b`.
    pub fn product(&self, other: &FiniteGSet, caps: &Caps) -> Result<Self> {
        if !self.group.same_group(&other.group) {
            return Err(Error::GroupMismatch);
        }
        let size = check_points(self.size as u128 * other.size as u128, caps)?;
        let (a, b) = (self.clone(), other.clone());
        let m = b.size;
        Ok(Self::from_fn(self.group.clone(), size, move |g, p| {
            a.act(g, p / m) * m + b.act(g, p % m)
        }))
    }

    /// `X ⊠ Y` over `G × H`, numbered as in [`Self::product`].
    pub fn external_product(
        &self,
        other: &FiniteGSet,
        dp: &DirectProduct,
        caps: &Caps,
    ) -> Result<Self> {
        if !self.group.same_group(dp.left()) || !other.group.same_group(dp.right()) {
            return Err(Error::GroupMismatch);
        }
        let size = check_points(self.size as u128 * other.size as u128, caps)?;
        let (a, b) = (self.clone(), other.clone());
        let m = b.size;
        let pairs: Vec<(usize, usize)> = (0..dp.group().order()).map(|x| dp.split(x)).collect();
        Ok(Self::from_fn(dp.group().clone(), size, move |x, p| {
            let (g, h) = pairs[x];
            a.act(g, p / m) * m + b.act(h, p % m)
        }))
    }

    /// `X^{×n}` as a `G≀Σₙ`-set with `((ḡ,σ)x)_i = ḡ_i · x_{σ⁻¹(i)}`.
    ///
    /// Tuples are numbered in mixed radix with the first coordinate most
    /// significant, so point order is lexicographic tuple order.
    pub fn power(&self, w: &Arc<WreathProduct>, caps: &Caps) -> Result<Self> {
        if !self.group.same_group(w.base()) {
            return Err(Error::GroupMismatch);
        }
        let n = w.n();
        let size = check_points((self.size as u128).saturating_pow(n as u32), caps)?;
        let x = self.clone();
        let wp = w.clone();
        let base = self.size;
        Ok(Self::from_fn(w.group().clone(), size, move |el, p| {
            let (gbar, sigma) = (wp.components(el), wp.sigma(el));
            let mut digits = vec![0usize; n];
            let mut rest = p;
            for j in (0..n).rev() {
                digits[j] = rest % base;
                rest /= base;
            }
            let mut out = vec![0usize; n];
            for j in 0..n {
                let i = sigma[j] as usize;
                out[i] = x.act(gbar[i] as usize, digits[j]);
            }
            out.iter().fold(0, |acc, &d| acc * base + d)
        }))
    }

    /// The tuple encoded by a point of [`Self::power`].
    pub fn power_digits(base: usize, n: usize, mut p: usize) -> Vec<usize> {
        let mut digits = vec![0; n];
        for j in (0..n).rev() {
            digits[j] = p % base;
            p /= base;
        }
        digits
    }

    /// Restriction along `φ: H → G`.
    pub fn restrict(&self, phi: &GroupHom) -> Result<Self> {
        if !phi.target().same_group(&self.group) {
            return Err(Error::GroupMismatch);
        }
        let x = self.clone();
        let phi = phi.clone();
        Ok(Self::from_fn(
            phi.source().clone(),
            self.size,
            move |h, p| x.act(phi.apply(h), p),
        ))
    }

    /// `G ×_H X` for `φ: H → G`.
    ///
    /// Pairs `(g, x)` are glued along `(g·φ(h), x) ~ (g, h·x)` for generators
    /// `h`. Classes are numbered by their least pair and `G` acts on the left.
    pub fn induce(&self, phi: &GroupHom, caps: &Caps) -> Result<Self> {
        if !phi.source().same_group(&self.group) {
            return Err(Error::GroupMismatch);
        }
        let g = phi.target().clone();
        let h = &self.group;
        let nx = self.size;
        let total = check_points(g.order() as u128 * nx as u128, caps)?;
        let mut parent: Vec<u32> = (0..total as u32).collect();
        fn find(parent: &mut [u32], mut a: usize) -> usize {
            while parent[a] as usize != a {
                parent[a] = parent[parent[a] as usize];
                a = parent[a] as usize;
            }
            a
        }
        for &s in h.generators() {
            let s = s as usize;
            let ps = phi.apply(s);
            for a in 0..g.order() {
                let ga = g.mul(a, ps);
                for x in 0..nx {
                    let u = find(&mut parent, ga * nx + x);
                    let v = find(&mut parent, a * nx + self.act(s, x));
                    if u != v {
                        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
                        parent[hi] = lo as u32;
                    }
                }
            }
        }
        let mut class = vec![u32::MAX; total];
        let mut reps: Vec<usize> = Vec::new();
        for p in 0..total {
            let r = find(&mut parent, p);
            if class[r] == u32::MAX {
                class[r] = reps.len() as u32;
                reps.push(p);
            }
            class[p] = class[r];
        }
        let size = reps.len();
        let grp = g.clone();
        Ok(Self::from_fn(g, size, move |a, c| {
            let p = reps[c];
            class[grp.mul(a, p / nx) * nx + p % nx] as usize
        }))
    }

    /// Orbits as sorted point lists, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let gens: Vec<usize> = self
            .group
            .generators()
            .iter()
            .map(|&s| s as usize)
            .collect();
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let p = orbit[i];
                for &s in &gens {
                    let q = self.act(s, p);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits().len()
    }

    /// `{g : g·x = x}`.
    pub fn stabilizer(&self, x: usize) -> SubgroupRef {
        let els: Vec<u32> = (0..self.group.order())
            .filter(|&g| self.act(g, x) == x)
            .map(|g| g as u32)
            .collect();
        SubgroupRef::from_sorted_unchecked(self.group.clone(), els.into())
    }

    /// `(least point, orbit size, stabilizer of that point)` for every orbit.
    pub fn orbit_stabilizers(&self) -> Vec<(usize, usize, SubgroupRef)> {
        self.orbits()
            .into_iter()
            .map(|o| (o[0], o.len(), self.stabilizer(o[0])))
            .collect()
    }

    /// `|X^H|`.
    pub fn fixed_point_count(&self, sub: &SubgroupRef) -> Result<usize> {
        if !sub.ambient().same_group(&self.group) {
            return Err(Error::GroupMismatch);
        }
        let gens = sub.generators();
        Ok((0..self.size)
            .filter(|&x| gens.iter().all(|&h| self.act(h as usize, x) == x))
            .count())
    }

    /// `|X^g|` for a single element.
    pub fn fixed_points_of(&self, g: usize) -> usize {
        (0..self.size).filter(|&x| self.act(g, x) == x).count()
    }

    /// Fixed-point counts at every class representative.
    pub fn marks(&self, table: &TableRef) -> Result<Vec<u64>> {
        table
            .reps()
            .map(|k| self.fixed_point_count(k).map(|c| c as u64))
            .collect()
    }

    /// The class in `A(G)`: one `[G/Stab(x)]` per orbit.
    pub fn decompose(&self, table: &TableRef) -> Result<BurnsideElement> {
        if !table.group().same_group(&self.group) {
            return Err(Error::GroupMismatch);
        }
        let mut coords = vec![BigInt::from(0); table.len()];
        for (_, _, stab) in self.orbit_stabilizers() {
            coords[table.class_of(&stab)?] += 1;
        }
        Ok(BurnsideElement::from_big(table.clone(), coords))
    }
}

impl fmt::Debug for FiniteGSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-set on {} points", self.group.label(), self.size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{ConjugacyClassTable, PermGroup, Permutation};

    fn group(spec: &str) -> GroupRef {
        Arc::new(PermGroup::from_spec(spec, &Caps::default()).unwrap())
    }

    fn transposition(g: &GroupRef) -> SubgroupRef {
        let t = g
            .index_of(&Permutation::from_cycles(3, &[vec![0, 1]]).unwrap())
            .unwrap();
        SubgroupRef::generated_by(g.clone(), &[t])
    }

    #[test]
    fn orbit_examples() {
        let c2 = group("C2");
        assert_eq!(FiniteGSet::regular(c2.clone()).orbits(), vec![vec![0, 1]]);
        assert_eq!(FiniteGSet::trivial(c2, 3).orbit_count(), 3);
        let s3 = group("S3");
        let pairs: Vec<(usize, usize)> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .filter(|(a, b)| a != b)
            .collect();
        let g = s3.clone();
        let lookup = pairs.clone();
        let x = FiniteGSet::from_fn(s3, 6, move |el, p| {
            let (a, b) = lookup[p];
            let q = g.element(el);
            lookup
                .iter()
                .position(|&t| t == (q.apply(a), q.apply(b)))
                .unwrap()
        });
        assert!(x.is_valid_action());
        assert_eq!(x.orbits(), vec![(0..6).collect::<Vec<_>>()]);
    }

    #[test]
    fn stabilizers_and_fixed_points() {
        let s3 = group("S3");
        let c2 = transposition(&s3);
        let x = FiniteGSet::coset_space(&c2);
        assert!(x.is_valid_action());
        assert_eq!(x.stabilizer(0), c2);
        assert!(FiniteGSet::regular(s3.clone()).stabilizer(4).is_trivial());
        assert_eq!(FiniteGSet::trivial(s3.clone(), 2).stabilizer(1).order(), 6);
        let table = ConjugacyClassTable::new(s3.clone(), &Caps::default()).unwrap();
        let c3 = table.rep(2);
        assert_eq!(x.fixed_point_count(c3).unwrap(), 0);
        assert_eq!(x.fixed_point_count(&c2).unwrap(), 1);
        assert_eq!(x.fixed_point_count(&SubgroupRef::trivial(s3)).unwrap(), 3);
    }

    #[test]
    fn power_examples() {
        let caps = Caps::default();
        let c2 = group("C2");
        let w = Arc::new(WreathProduct::new(c2.clone(), 2, &caps).unwrap());
        let p = FiniteGSet::regular(c2.clone()).power(&w, &caps).unwrap();
        assert_eq!(p.size(), 4);
        assert!(p.is_valid_action());
        assert_eq!(p.orbit_count(), 1);
        let w1 = Arc::new(WreathProduct::new(c2.clone(), 1, &caps).unwrap());
        let p1 = FiniteGSet::regular(c2).power(&w1, &caps).unwrap();
        assert_eq!(p1.size(), 2);
        assert_eq!(p1.orbit_count(), 1);
    }

    #[test]
    fn induce_and_restrict() {
        let caps = Caps::default();
        let s3 = group("S3");
        let c2 = transposition(&s3);
        let c2g = Arc::new(c2.as_group(&caps).unwrap());
        let inc = GroupHom::inclusion(c2g.clone(), s3.clone()).unwrap();
        let ind = FiniteGSet::regular(c2g.clone())
            .induce(&inc, &caps)
            .unwrap();
        assert!(ind.is_valid_action());
        assert_eq!(ind.size(), 6);
        assert_eq!(ind.orbit_count(), 1);
        assert!(ind.stabilizer(0).is_trivial());

        let e = group("e");
        let to_e = GroupHom::to_trivial(s3.clone(), e.clone());
        let defl = FiniteGSet::coset_space(&c2).induce(&to_e, &caps).unwrap();
        assert_eq!(defl.size(), 1);
        let from_e = GroupHom::from_trivial(e.clone(), s3.clone());
        let pt = FiniteGSet::trivial(e, 1).induce(&from_e, &caps).unwrap();
        assert_eq!(pt.size(), 6);
        assert_eq!(pt.orbit_count(), 1);

        let table = ConjugacyClassTable::new(s3.clone(), &caps).unwrap();
        let c3 = Arc::new(table.rep(2).as_group(&caps).unwrap());
        let inc3 = GroupHom::inclusion(c3, s3.clone()).unwrap();
        let res = FiniteGSet::regular(s3).restrict(&inc3).unwrap();
        let orbits = res.orbits();
        assert_eq!(orbits.len(), 2);
        assert!(orbits.iter().all(|o| o.len() == 3));
    }

    #[test]
    fn induce_is_cap_checked() {
        let caps = Caps {
            max_points: 5,
            ..Caps::default()
        };
        let s3 = group("S3");
        let e = group("e");
        let from_e = GroupHom::from_trivial(e.clone(), s3);
        assert!(matches!(
            FiniteGSet::trivial(e, 1).induce(&from_e, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }
}
