use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use super::group::{GroupRef, PermGroup};
use super::Caps;
use crate::error::{Error, Result};

/// A subgroup of a [`PermGroup`], held as a sorted list of element indices.
#[derive(Clone)]
pub struct SubgroupRef {
    ambient: GroupRef,
    elements: Arc<[u32]>,
    generators: Arc<OnceLock<Vec<u32>>>,
}

/// Closes a set of element indices under multiplication, returning the sorted
/// element list of the generated subgroup.
pub fn closure(group: &PermGroup, gens: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; group.order()];
    seen[0] = true;
    let mut out = vec![0u32];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = group.mul(g, x);
            if !seen[y] {
                seen[y] = true;
                out.push(y as u32);
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

impl SubgroupRef {
    /// Wraps a sorted, closed element list without checking it.
    pub(crate) fn from_sorted_unchecked(ambient: GroupRef, elements: Arc<[u32]>) -> Self {
        SubgroupRef {
            ambient,
            elements,
            generators: Arc::new(OnceLock::new()),
        }
    }

    /// Checks closure of `elements` and wraps it.
    pub fn from_elements(ambient: GroupRef, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let n = ambient.order();
        if elements.first() != Some(&0) || elements.iter().any(|&e| e >= n) {
            return Err(Error::NotASubgroup);
        }
        let mut member = vec![false; n];
        for &e in &elements {
            member[e] = true;
        }
        for &a in &elements {
            if !member[ambient.inverse(a)] {
                return Err(Error::NotASubgroup);
            }
            for &b in &elements {
                if !member[ambient.mul(a, b)] {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        let elements: Arc<[u32]> = elements.into_iter().map(|e| e as u32).collect();
        Ok(Self::from_sorted_unchecked(ambient, elements))
    }

    pub fn generated_by(ambient: GroupRef, gens: &[usize]) -> Self {
        let elements: Arc<[u32]> = closure(&ambient, gens).into();
        let sub = Self::from_sorted_unchecked(ambient, elements);
        let mut g: Vec<u32> = gens
            .iter()
            .filter(|&&g| g != 0)
            .map(|&g| g as u32)
            .collect();
        g.sort_unstable();
        g.dedup();
        let _ = sub.generators.set(g);
        sub
    }

    pub fn whole(ambient: GroupRef) -> Self {
        let elements: Arc<[u32]> = (0..ambient.order() as u32).collect();
        let gens = ambient.generators().to_vec();
        let sub = Self::from_sorted_unchecked(ambient, elements);
        let _ = sub.generators.set(gens);
        sub
    }

    pub fn trivial(ambient: GroupRef) -> Self {
        Self::from_sorted_unchecked(ambient, Arc::from(vec![0u32]))
    }

    pub fn ambient(&self) -> &GroupRef {
        &self.ambient
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.ambient.order() / self.order()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.iter().map(|&e| e as usize)
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&(a as u32)).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &SubgroupRef) -> bool {
        self.order() <= other.order() && self.iter().all(|a| other.contains(a))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// A small generating set, found greedily in element order.
    pub fn generators(&self) -> &[u32] {
        self.generators.get_or_init(|| {
            let mut gens: Vec<usize> = Vec::new();
            let mut current = vec![0u32];
            for a in self.iter() {
                if current.binary_search(&(a as u32)).is_err() {
                    gens.push(a);
                    current = closure(&self.ambient, &gens);
                    if current.len() == self.order() {
                        break;
                    }
                }
            }
            gens.into_iter().map(|g| g as u32).collect()
        })
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators().iter().map(|&g| g as usize).collect()
    }

    pub fn is_cyclic(&self) -> bool {
        self.iter()
            .any(|a| self.ambient.element_order(a) == self.order())
    }

    /// `H^g = g⁻¹ H g`.
    pub fn conjugate(&self, g: usize) -> SubgroupRef {
        let mut els: Vec<u32> = self
            .iter()
            .map(|h| self.ambient.conjugate(h, g) as u32)
            .collect();
        els.sort_unstable();
        Self::from_sorted_unchecked(self.ambient.clone(), els.into())
    }

    pub fn intersect(&self, other: &SubgroupRef) -> SubgroupRef {
        let mut out = Vec::new();
        let (a, b) = (self.elements(), other.elements());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Self::from_sorted_unchecked(self.ambient.clone(), out.into())
    }

    /// `{g : H^g = H}` inside the ambient group.
    pub fn normalizer(&self) -> SubgroupRef {
        let g = &self.ambient;
        let gens = self.generators();
        let els: Vec<u32> = (0..g.order())
            .filter(|&x| {
                gens.iter()
                    .all(|&h| self.contains(g.conjugate(h as usize, x)))
            })
            .map(|x| x as u32)
            .collect();
        Self::from_sorted_unchecked(g.clone(), els.into())
    }

    /// The subgroup as a standalone permutation group on the ambient domain.
    ///
    /// Both groups sort elements by their image arrays, so element `i` of the
    /// result is `self.elements()[i]` of the ambient group.
    pub fn as_group(&self, caps: &Caps) -> Result<PermGroup> {
        let gens: Vec<_> = self
            .generators()
            .iter()
            .map(|&g| self.ambient.element(g as usize).clone())
            .collect();
        PermGroup::generate(self.ambient.degree(), &gens, caps)
    }

    /// Left cosets `aH`, each listed by its minimal element, in increasing order.
    pub fn left_coset_reps(&self) -> Vec<usize> {
        let g = &self.ambient;
        let mut seen = vec![false; g.order()];
        let mut reps = Vec::with_capacity(self.index());
        for a in 0..g.order() {
            if seen[a] {
                continue;
            }
            reps.push(a);
            for h in self.iter() {
                seen[g.mul(a, h)] = true;
            }
        }
        reps
    }

    /// Label of the coset `aH` as a position in [`Self::left_coset_reps`].
    pub fn left_coset_table(&self) -> Vec<usize> {
        let g = &self.ambient;
        let mut table = vec![usize::MAX; g.order()];
        let mut next = 0;
        for a in 0..g.order() {
            if table[a] != usize::MAX {
                continue;
            }
            for h in self.iter() {
                table[g.mul(a, h)] = next;
            }
            next += 1;
        }
        table
    }
}

impl PartialEq for SubgroupRef {
    fn eq(&self, other: &Self) -> bool {
        self.ambient.fingerprint() == other.ambient.fingerprint() && self.elements == other.elements
    }
}

impl Eq for SubgroupRef {}

impl Hash for SubgroupRef {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl fmt::Debug for SubgroupRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators()
            .iter()
            .map(|&g| self.ambient.element(g as usize).to_string())
            .collect();
        write!(f, "<{}> (order {})", gens.join(", "), self.order())
    }
}

/// Double cosets `H g K`, each as (minimal element, size), in increasing order.
pub fn double_cosets(h: &SubgroupRef, k: &SubgroupRef) -> Result<Vec<(usize, usize)>> {
    if h.ambient().fingerprint() != k.ambient().fingerprint() {
        return Err(Error::GroupMismatch);
    }
    let g = h.ambient();
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for a in 0..g.order() {
        if seen[a] {
            continue;
        }
        let mut size = 0;
        for x in h.iter() {
            let xa = g.mul(x, a);
            for y in k.iter() {
                let z = g.mul(xa, y);
                if !seen[z] {
                    seen[z] = true;
                    size += 1;
                }
            }
        }
        out.push((a, size));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> GroupRef {
        Arc::new(PermGroup::from_spec("S3", &Caps::default()).unwrap())
    }

    fn transposition(g: &GroupRef, a: usize, b: usize) -> usize {
        let p = crate::groups::Permutation::from_cycles(g.degree(), &[vec![a, b]]).unwrap();
        g.index_of(&p).unwrap()
    }

    #[test]
    fn normalizers_in_s3() {
        let g = s3();
        let t = transposition(&g, 0, 1);
        let c2 = SubgroupRef::generated_by(g.clone(), &[t]);
        assert_eq!(c2.normalizer(), c2);
        let r = g
            .index_of(&crate::groups::Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap())
            .unwrap();
        let c3 = SubgroupRef::generated_by(g.clone(), &[r]);
        assert_eq!(c3.normalizer().order(), 6);
        let whole = SubgroupRef::whole(g.clone());
        assert_eq!(whole.normalizer(), whole);
    }

    #[test]
    fn double_coset_sizes() {
        let g = s3();
        let t = transposition(&g, 0, 1);
        let c2 = SubgroupRef::generated_by(g.clone(), &[t]);
        let mut sizes: Vec<usize> = double_cosets(&c2, &c2)
            .unwrap()
            .iter()
            .map(|d| d.1)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 4]);
        let e = SubgroupRef::trivial(g.clone());
        assert_eq!(double_cosets(&e, &e).unwrap().len(), 6);
        let w = SubgroupRef::whole(g.clone());
        assert_eq!(double_cosets(&w, &w).unwrap(), vec![(0, 6)]);
    }

    #[test]
    fn rejects_non_subgroups() {
        let g = s3();
        let t = transposition(&g, 0, 1);
        let u = transposition(&g, 1, 2);
        assert_eq!(
            SubgroupRef::from_elements(g.clone(), vec![0, t, u]).unwrap_err(),
            Error::NotASubgroup
        );
        assert!(SubgroupRef::from_elements(g, vec![0, t]).is_ok());
    }

    #[test]
    fn as_group_preserves_element_order() {
        let g = s3();
        let t = transposition(&g, 0, 2);
        let h = SubgroupRef::generated_by(g.clone(), &[t]);
        let hg = h.as_group(&Caps::default()).unwrap();
        for (i, &a) in h.elements().iter().enumerate() {
            assert_eq!(hg.element(i), g.element(a as usize));
        }
    }

    #[test]
    fn cosets() {
        let g = s3();
        let t = transposition(&g, 0, 1);
        let h = SubgroupRef::generated_by(g.clone(), &[t]);
        let reps = h.left_coset_reps();
        assert_eq!(reps.len(), 3);
        assert_eq!(reps[0], 0);
        let table = h.left_coset_table();
        for (i, &r) in reps.iter().enumerate() {
            assert_eq!(table[r], i);
        }
    }
}
