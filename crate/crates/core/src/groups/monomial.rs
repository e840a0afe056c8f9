use std::sync::Arc;

use super::group::GroupRef;
use super::hom::GroupHom;
use super::subgroup::SubgroupRef;
use super::wreath::WreathProduct;
use super::Caps;
use crate::error::Result;

/// The monomial representation `G → H ≀ Σ_{[G:H]}` together with the groups it
/// is built from.
pub struct MonomialRepresentation {
    pub subgroup: SubgroupRef,
    pub wreath: WreathProduct,
    pub hom: GroupHom,
    /// Minimal element of each left coset, in increasing order.
    pub coset_reps: Vec<usize>,
}

/// Uses the section `s(aH) = min aH`. Then `g` permutes cosets by left
/// multiplication and `φ_H(g)_{aH} = s(a)⁻¹ g s(g⁻¹a)`.
pub fn monomial_representation(h: &SubgroupRef, caps: &Caps) -> Result<MonomialRepresentation> {
    let g: &GroupRef = h.ambient();
    let base = Arc::new(h.as_group(caps)?);
    let reps = h.left_coset_reps();
    let table = h.left_coset_table();
    let k = reps.len();
    let wreath = WreathProduct::new(base, k, caps)?;
    let to_base = |x: usize| {
        h.elements()
            .binary_search(&(x as u32))
            .expect("element of H")
    };
    let map = (0..g.order())
        .map(|x| {
            let sigma: Vec<usize> = reps.iter().map(|&a| table[g.mul(x, a)]).collect();
            let ginv = g.inverse(x);
            let gbar: Vec<usize> = reps
                .iter()
                .map(|&a| {
                    let s_pre = reps[table[g.mul(ginv, a)]];
                    to_base(g.mul(g.inverse(a), g.mul(x, s_pre)))
                })
                .collect();
            wreath.element(&gbar, &sigma)
        })
        .collect();
    let hom = GroupHom::from_element_map(g.clone(), wreath.group().clone(), map)?;
    Ok(MonomialRepresentation {
        subgroup: h.clone(),
        wreath,
        hom,
        coset_reps: reps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{PermGroup, Permutation};

    #[test]
    fn s3_into_c2_wreath() {
        let caps = Caps::default();
        let g = Arc::new(PermGroup::from_spec("S3", &caps).unwrap());
        let t = g
            .index_of(&Permutation::from_cycles(3, &[vec![0, 1]]).unwrap())
            .unwrap();
        let h = SubgroupRef::generated_by(g.clone(), &[t]);
        let m = monomial_representation(&h, &caps).unwrap();
        assert_eq!(m.wreath.order(), 48);
        assert!(m.hom.is_homomorphism_exhaustive());
        assert!(m.hom.is_injective());
    }

    #[test]
    fn degenerate_cases() {
        let caps = Caps::default();
        let c2 = Arc::new(PermGroup::from_spec("C2", &caps).unwrap());
        let m = monomial_representation(&SubgroupRef::trivial(c2.clone()), &caps).unwrap();
        assert_eq!(m.wreath.order(), 2);
        assert!(m.hom.is_injective());
        let m = monomial_representation(&SubgroupRef::whole(c2.clone()), &caps).unwrap();
        assert_eq!(m.wreath.n(), 1);
        assert!(m.hom.is_injective() && m.hom.is_surjective());
    }
}
