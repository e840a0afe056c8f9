use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use super::group::GroupRef;
use super::subgroup::SubgroupRef;
use crate::error::{Error, Result};

/// A homomorphism between permutation groups, stored as its full element map.
#[derive(Clone)]
pub struct GroupHom {
    source: GroupRef,
    target: GroupRef,
    map: Arc<[u32]>,
}

impl GroupHom {
    /// Extends generator images multiplicatively. `images[i]` is the image of
    /// `source.generators()[i]`.
    pub fn from_generator_images(
        source: GroupRef,
        target: GroupRef,
        images: &[usize],
    ) -> Result<Self> {
        let gens = source.generators();
        if images.len() != gens.len() {
            return Err(Error::Invalid(format!(
                "{} generator images given for {} generators",
                images.len(),
                gens.len()
            )));
        }
        let mut map = vec![u32::MAX; source.order()];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let fx = map[x] as usize;
            for (k, &s) in gens.iter().enumerate() {
                let y = source.mul(s as usize, x);
                let fy = target.mul(images[k], fx) as u32;
                if map[y] == u32::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return Err(Error::NotAHomomorphism);
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            map: map.into(),
        })
    }

    /// Wraps a full element map after checking it on generators.
    pub fn from_element_map(source: GroupRef, target: GroupRef, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() || map.iter().any(|&y| y >= target.order()) {
            return Err(Error::NotAHomomorphism);
        }
        for x in 0..source.order() {
            for &s in source.generators() {
                let s = s as usize;
                if map[source.mul(s, x)] != target.mul(map[s], map[x]) {
                    return Err(Error::NotAHomomorphism);
                }
            }
        }
        if map[0] != 0 {
            return Err(Error::NotAHomomorphism);
        }
        Ok(GroupHom {
            source,
            target,
            map: map.into_iter().map(|y| y as u32).collect(),
        })
    }

    pub fn identity(group: GroupRef) -> Self {
        GroupHom {
            map: (0..group.order() as u32).collect(),
            source: group.clone(),
            target: group,
        }
    }

    /// The inclusion of a subgroup, given as a standalone group whose elements
    /// are permutations of the ambient domain.
    pub fn inclusion(sub: GroupRef, ambient: GroupRef) -> Result<Self> {
        if sub.degree() != ambient.degree() {
            return Err(Error::NotASubgroup);
        }
        let map = sub
            .elements()
            .iter()
            .map(|p| ambient.index_of(p).map(|i| i as u32))
            .collect::<Option<Arc<[u32]>>>()
            .ok_or(Error::NotASubgroup)?;
        Ok(GroupHom {
            source: sub,
            target: ambient,
            map,
        })
    }

    /// The map to the trivial group.
    pub fn to_trivial(source: GroupRef, trivial: GroupRef) -> Self {
        GroupHom {
            map: vec![0u32; source.order()].into(),
            source,
            target: trivial,
        }
    }

    /// The map from the trivial group.
    pub fn from_trivial(trivial: GroupRef, target: GroupRef) -> Self {
        GroupHom {
            map: Arc::from(vec![0u32]),
            source: trivial,
            target,
        }
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if !self.target.same_group(&other.source) {
            return Err(Error::GroupMismatch);
        }
        Ok(GroupHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&x| other.map[x as usize]).collect(),
        })
    }

    pub fn image(&self, sub: &SubgroupRef) -> SubgroupRef {
        let mut els: Vec<u32> = sub.iter().map(|x| self.map[x]).collect();
        els.sort_unstable();
        els.dedup();
        SubgroupRef::from_sorted_unchecked(self.target.clone(), els.into())
    }

    pub fn kernel(&self) -> SubgroupRef {
        let els: Vec<u32> = (0..self.source.order() as u32)
            .filter(|&x| self.map[x as usize] == 0)
            .collect();
        SubgroupRef::from_sorted_unchecked(self.source.clone(), els.into())
    }

    pub fn preimage(&self, sub: &SubgroupRef) -> SubgroupRef {
        let els: Vec<u32> = (0..self.source.order() as u32)
            .filter(|&x| sub.contains(self.map[x as usize] as usize))
            .collect();
        SubgroupRef::from_sorted_unchecked(self.source.clone(), els.into())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&SubgroupRef::whole(self.source.clone())).order() == self.target.order()
    }

    /// Checks `f(xy) = f(x)f(y)` on every pair.
    pub fn is_homomorphism_exhaustive(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        (0..s.order()).all(|x| {
            (0..s.order()).all(|y| self.apply(s.mul(x, y)) == t.mul(self.apply(x), self.apply(y)))
        })
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupHom({} -> {})",
            self.source.label(),
            self.target.label()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{Caps, PermGroup, Permutation};

    #[test]
    fn sign_map() {
        let caps = Caps::default();
        let s3 = Arc::new(PermGroup::from_spec("S3", &caps).unwrap());
        let c2 = Arc::new(PermGroup::from_spec("C2", &caps).unwrap());
        let images: Vec<usize> = s3
            .generators()
            .iter()
            .map(|&g| {
                if s3
                    .element(g as usize)
                    .cycles()
                    .iter()
                    .map(|c| c.len() - 1)
                    .sum::<usize>()
                    % 2
                    == 0
                {
                    0
                } else {
                    1
                }
            })
            .collect();
        let sign = GroupHom::from_generator_images(s3.clone(), c2, &images).unwrap();
        assert!(sign.is_homomorphism_exhaustive());
        assert_eq!(sign.kernel().order(), 3);
        assert!(sign.is_surjective());
    }

    #[test]
    fn bad_images_rejected() {
        let caps = Caps::default();
        let c3 = Arc::new(PermGroup::from_spec("C3", &caps).unwrap());
        let c2 = Arc::new(PermGroup::from_spec("C2", &caps).unwrap());
        assert_eq!(
            GroupHom::from_generator_images(c3, c2, &[1]).unwrap_err(),
            Error::NotAHomomorphism
        );
    }

    #[test]
    fn inclusion_of_subgroup() {
        let caps = Caps::default();
        let s3 = Arc::new(PermGroup::from_spec("S3", &caps).unwrap());
        let t = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let h = Arc::new(PermGroup::generate(3, &[t], &caps).unwrap());
        let inc = GroupHom::inclusion(h, s3).unwrap();
        assert!(inc.is_injective());
        assert!(inc.is_homomorphism_exhaustive());
    }
}
