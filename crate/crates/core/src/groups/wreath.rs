use std::fmt;
use std::sync::Arc;

use super::group::{GroupRef, PermGroup};
use super::hom::GroupHom;
use super::permutation::Permutation;
use super::subgroup::SubgroupRef;
use super::Caps;
use crate::error::{Error, Result};

/// `G ≀ Σₙ` acting on `[n] × dom(G)`, the point `(i, p)` numbered `i·d + p`.
///
/// The element `(ḡ, σ)` sends `(j, p)` to `(σ(j), ḡ_{σ(j)} p)`, so products are
/// `(ḡ, σ)(h̄, τ) = (ḡ · σh̄, στ)` with `(σh̄)_k = h̄_{σ⁻¹(k)}`.
pub struct WreathProduct {
    base: GroupRef,
    n: usize,
    group: GroupRef,
    components: Vec<Box<[u32]>>,
    sigmas: Vec<Box<[u16]>>,
}

/// `|G|ⁿ · n!`, saturating.
pub fn wreath_order(base_order: usize, n: usize) -> u128 {
    let mut total: u128 = 1;
    for k in 1..=n {
        total = total
            .saturating_mul(base_order as u128)
            .saturating_mul(k as u128);
    }
    total
}

impl WreathProduct {
    pub fn new(base: GroupRef, n: usize, caps: &Caps) -> Result<Self> {
        let needed = wreath_order(base.order(), n);
        if needed > caps.max_elements as u128 {
            return Err(Error::CapExceeded {
                what: "wreath product enumeration",
                needed,
                cap: caps.max_elements,
            });
        }
        let d = base.degree();
        let mut gens = Vec::new();
        if n > 0 {
            for &g in base.generators() {
                let mut gbar = vec![0usize; n];
                gbar[0] = g as usize;
                gens.push(raw_element(&base, &gbar, &(0..n).collect::<Vec<_>>()));
            }
        }
        if n >= 2 {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            gens.push(raw_element(&base, &vec![0; n], &swap));
            if n >= 3 {
                let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
                gens.push(raw_element(&base, &vec![0; n], &cycle));
            }
        }
        let name = match base.name() {
            Some(b) => format!("{b}≀Σ{n}"),
            None => format!("G≀Σ{n}"),
        };
        let group = Arc::new(PermGroup::generate(n * d, &gens, caps)?.with_name(name));
        let mut components = Vec::with_capacity(group.order());
        let mut sigmas = Vec::with_capacity(group.order());
        for p in group.elements() {
            let mut gbar = vec![0u32; n];
            let mut sigma = vec![0u16; n];
            for (j, s) in sigma.iter_mut().enumerate() {
                let b = p.apply(j * d) / d;
                *s = b as u16;
                let local: Vec<usize> = (0..d).map(|q| p.apply(j * d + q) - b * d).collect();
                let local = Permutation::from_images(local).expect("block image is a bijection");
                gbar[b] = base
                    .index_of(&local)
                    .expect("block component lies in the base") as u32;
            }
            components.push(gbar.into_boxed_slice());
            sigmas.push(sigma.into_boxed_slice());
        }
        Ok(WreathProduct {
            base,
            n,
            group,
            components,
            sigmas,
        })
    }

    pub fn base(&self) -> &GroupRef {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// `ḡ` of the element `w = (ḡ, σ)`.
    pub fn components(&self, w: usize) -> &[u32] {
        &self.components[w]
    }

    /// `σ` of `w = (ḡ, σ)` as an image array.
    pub fn sigma(&self, w: usize) -> &[u16] {
        &self.sigmas[w]
    }

    /// Index of `(ḡ, σ)`.
    pub fn element(&self, gbar: &[usize], sigma: &[usize]) -> usize {
        let p = raw_element(&self.base, gbar, sigma);
        self.group
            .index_of(&p)
            .expect("(ḡ, σ) lies in the wreath product")
    }

    /// `((ḡ,σ)x)_i = ḡ_i · x_{σ⁻¹(i)}` for a G-set given by `act(g, point)`.
    pub fn act_on_tuple(
        &self,
        w: usize,
        x: &[usize],
        act: impl Fn(usize, usize) -> usize,
    ) -> Vec<usize> {
        let (gbar, sigma) = (self.components(w), self.sigma(w));
        let mut out = vec![0; self.n];
        for j in 0..self.n {
            let i = sigma[j] as usize;
            out[i] = act(gbar[i] as usize, x[j]);
        }
        out
    }

    /// `G^×ⁿ ↪ G≀Σₙ`, returning the base group as a standalone group.
    pub fn base_embedding(&self, caps: &Caps) -> Result<GroupHom> {
        let els: Vec<usize> = (0..self.order())
            .filter(|&w| {
                self.sigma(w)
                    .iter()
                    .enumerate()
                    .all(|(i, &s)| i == s as usize)
            })
            .collect();
        let sub = SubgroupRef::from_elements(self.group.clone(), els)?;
        let base_power = Arc::new(sub.as_group(caps)?.with_name(format!(
            "{}^{}",
            self.base.label(),
            self.n
        )));
        GroupHom::inclusion(base_power, self.group.clone())
    }

    /// The quotient `G≀Σₙ → Σₙ`.
    pub fn sigma_projection(&self, caps: &Caps) -> Result<GroupHom> {
        let sym = Arc::new(PermGroup::symmetric(self.n, caps)?);
        let map = (0..self.order())
            .map(|w| {
                let p =
                    Permutation::from_images(self.sigma(w).iter().map(|&s| s as usize).collect())
                        .unwrap();
                sym.index_of(&p).unwrap()
            })
            .collect();
        GroupHom::from_element_map(self.group.clone(), sym, map)
    }

    /// Combines `a ∈ A≀Σᵢ` and `b ∈ A≀Σⱼ` into `A≀Σ_{i+j}` along the
    /// order-preserving embedding `Σᵢ × Σⱼ ⊆ Σ_{i+j}`.
    pub fn juxtapose(
        &self,
        left: &WreathProduct,
        a: usize,
        right: &WreathProduct,
        b: usize,
    ) -> usize {
        debug_assert_eq!(left.n + right.n, self.n);
        let i = left.n;
        let mut gbar: Vec<usize> = left.components(a).iter().map(|&g| g as usize).collect();
        gbar.extend(right.components(b).iter().map(|&g| g as usize));
        let mut sigma: Vec<usize> = left.sigma(a).iter().map(|&s| s as usize).collect();
        sigma.extend(right.sigma(b).iter().map(|&s| s as usize + i));
        self.element(&gbar, &sigma)
    }

    /// `∏ₖ Hₖ ≀ Σ_{mₖ}` with blocks placed consecutively from the left.
    pub fn block_subgroup(&self, blocks: &[(&SubgroupRef, usize)]) -> SubgroupRef {
        let n = self.n;
        let ident: Vec<usize> = (0..n).collect();
        let mut gens = Vec::new();
        let mut offset = 0;
        for &(h, m) in blocks {
            for &g in h.generators() {
                let mut gbar = vec![0; n];
                gbar[offset] = g as usize;
                gens.push(self.element(&gbar, &ident));
            }
            if m >= 2 {
                let mut swap = ident.clone();
                swap.swap(offset, offset + 1);
                gens.push(self.element(&vec![0; n], &swap));
            }
            if m >= 3 {
                let mut cycle = ident.clone();
                for k in 0..m {
                    cycle[offset + k] = offset + (k + 1) % m;
                }
                gens.push(self.element(&vec![0; n], &cycle));
            }
            offset += m;
        }
        assert_eq!(offset, n, "blocks must cover [n]");
        SubgroupRef::generated_by(self.group.clone(), &gens)
    }

    /// `(ḡ, σ) ↦ (φ(ḡ), σ)` for `φ: G → H`.
    pub fn wreath_map(
        phi: &GroupHom,
        src: &WreathProduct,
        tgt: &WreathProduct,
    ) -> Result<GroupHom> {
        if src.n != tgt.n
            || !phi.source().same_group(&src.base)
            || !phi.target().same_group(&tgt.base)
        {
            return Err(Error::GroupMismatch);
        }
        let map = (0..src.order())
            .map(|w| {
                let gbar: Vec<usize> = src
                    .components(w)
                    .iter()
                    .map(|&g| phi.apply(g as usize))
                    .collect();
                let sigma: Vec<usize> = src.sigma(w).iter().map(|&s| s as usize).collect();
                tgt.element(&gbar, &sigma)
            })
            .collect();
        GroupHom::from_element_map(src.group.clone(), tgt.group.clone(), map)
    }
}

impl fmt::Debug for WreathProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}≀Σ{} (order {})",
            self.base.label(),
            self.n,
            self.order()
        )
    }
}

fn raw_element(base: &PermGroup, gbar: &[usize], sigma: &[usize]) -> Permutation {
    let d = base.degree();
    let mut images = vec![0usize; gbar.len() * d];
    for (j, &s) in sigma.iter().enumerate() {
        let g = base.element(gbar[s]);
        for p in 0..d {
            images[j * d + p] = s * d + g.apply(p);
        }
    }
    Permutation::from_images(images).expect("wreath element is a bijection")
}

/// `G × H` on the disjoint union of the two domains.
pub struct DirectProduct {
    left: GroupRef,
    right: GroupRef,
    group: GroupRef,
    pairs: Vec<(u32, u32)>,
}

impl DirectProduct {
    pub fn new(left: GroupRef, right: GroupRef, caps: &Caps) -> Result<Self> {
        let needed = left.order() as u128 * right.order() as u128;
        if needed > caps.max_elements as u128 {
            return Err(Error::CapExceeded {
                what: "direct product enumeration",
                needed,
                cap: caps.max_elements,
            });
        }
        let (dl, dr) = (left.degree(), right.degree());
        let lift = |p: &Permutation, shift: usize, own: usize| {
            let mut images: Vec<usize> = (0..dl + dr).collect();
            for q in 0..own {
                images[shift + q] = shift + p.apply(q);
            }
            Permutation::from_images(images).unwrap()
        };
        let mut gens: Vec<Permutation> = left
            .generators()
            .iter()
            .map(|&g| lift(left.element(g as usize), 0, dl))
            .collect();
        gens.extend(
            right
                .generators()
                .iter()
                .map(|&g| lift(right.element(g as usize), dl, dr)),
        );
        let name = format!("{}×{}", left.label(), right.label());
        let group = Arc::new(PermGroup::generate(dl + dr, &gens, caps)?.with_name(name));
        let pairs = group
            .elements()
            .iter()
            .map(|p| {
                let l: Vec<usize> = (0..dl).map(|q| p.apply(q)).collect();
                let r: Vec<usize> = (0..dr).map(|q| p.apply(dl + q) - dl).collect();
                let li = left
                    .index_of(&Permutation::from_images(l).unwrap())
                    .unwrap();
                let ri = right
                    .index_of(&Permutation::from_images(r).unwrap())
                    .unwrap();
                (li as u32, ri as u32)
            })
            .collect();
        Ok(DirectProduct {
            left,
            right,
            group,
            pairs,
        })
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn left(&self) -> &GroupRef {
        &self.left
    }

    pub fn right(&self) -> &GroupRef {
        &self.right
    }

    pub fn split(&self, x: usize) -> (usize, usize) {
        let (a, b) = self.pairs[x];
        (a as usize, b as usize)
    }

    pub fn projection_left(&self) -> GroupHom {
        let map = (0..self.group.order()).map(|x| self.split(x).0).collect();
        GroupHom::from_element_map(self.group.clone(), self.left.clone(), map).unwrap()
    }

    pub fn projection_right(&self) -> GroupHom {
        let map = (0..self.group.order()).map(|x| self.split(x).1).collect();
        GroupHom::from_element_map(self.group.clone(), self.right.clone(), map).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(spec: &str) -> GroupRef {
        Arc::new(PermGroup::from_spec(spec, &Caps::default()).unwrap())
    }

    #[test]
    fn orders() {
        let caps = Caps::default();
        assert_eq!(
            WreathProduct::new(group("C2"), 2, &caps).unwrap().order(),
            8
        );
        assert_eq!(
            WreathProduct::new(group("S3"), 2, &caps).unwrap().order(),
            72
        );
        assert_eq!(
            WreathProduct::new(group("S3"), 0, &caps).unwrap().order(),
            1
        );
        assert_eq!(WreathProduct::new(group("e"), 3, &caps).unwrap().order(), 6);
        assert_eq!(
            WreathProduct::new(group("C3"), 1, &caps).unwrap().order(),
            3
        );
        assert!(matches!(
            WreathProduct::new(group("S3"), 4, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn element_round_trip() {
        let w = WreathProduct::new(group("S3"), 2, &Caps::default()).unwrap();
        for x in 0..w.order() {
            let gbar: Vec<usize> = w.components(x).iter().map(|&g| g as usize).collect();
            let sigma: Vec<usize> = w.sigma(x).iter().map(|&s| s as usize).collect();
            assert_eq!(w.element(&gbar, &sigma), x);
        }
    }

    #[test]
    fn product_rule() {
        let w = WreathProduct::new(group("S3"), 2, &Caps::default()).unwrap();
        let g = w.base().clone();
        for a in 0..w.order() {
            for b in (0..w.order()).step_by(5) {
                let ab = w.group().mul(a, b);
                let (ga, sa) = (w.components(a), w.sigma(a));
                let (gb, sb) = (w.components(b), w.sigma(b));
                for k in 0..2 {
                    // (σh̄)_k = h̄_{σ⁻¹(k)}
                    let sinv = sa.iter().position(|&s| s as usize == k).unwrap();
                    let expect = g.mul(ga[k] as usize, gb[sinv] as usize);
                    assert_eq!(w.components(ab)[k] as usize, expect);
                    assert_eq!(w.sigma(ab)[k], sa[sb[k] as usize]);
                }
            }
        }
    }

    #[test]
    fn projections_are_homomorphisms() {
        let caps = Caps::default();
        let w = WreathProduct::new(group("C3"), 3, &caps).unwrap();
        let p = w.sigma_projection(&caps).unwrap();
        assert!(p.is_surjective());
        assert_eq!(p.kernel().order(), 27);
        let b = w.base_embedding(&caps).unwrap();
        assert_eq!(b.source().order(), 27);
        assert!(b.is_injective());
    }

    #[test]
    fn direct_product_projections() {
        let caps = Caps::default();
        let d = DirectProduct::new(group("C2"), group("S3"), &caps).unwrap();
        assert_eq!(d.group().order(), 12);
        assert!(d.projection_left().is_homomorphism_exhaustive());
        assert!(d.projection_right().is_homomorphism_exhaustive());
    }
}
