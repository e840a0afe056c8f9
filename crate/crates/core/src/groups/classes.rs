use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::group::GroupRef;
use super::hom::GroupHom;
use super::subgroup::{closure, SubgroupRef};
use super::Caps;
use crate::error::{Error, Result};

struct ClassInfo {
    rep: SubgroupRef,
    conjugates: Vec<Arc<[u32]>>,
    label: String,
    cyclic: bool,
}

/// Elements, generators and conjugates of one class found so far.
type Found = (Arc<[u32]>, Vec<usize>, Conjugates);
type Conjugates = Vec<Arc<[u32]>>;

/// The conjugacy classes of subgroups of a group, in canonical order.
///
/// Classes are sorted by subgroup order and then by the sorted element-index
/// list of their lexicographically least member, which is also the stored
/// representative. With this order the table of marks is lower triangular.
pub struct ConjugacyClassTable {
    group: GroupRef,
    classes: Vec<ClassInfo>,
    lookup: HashMap<Arc<[u32]>, usize>,
    marks: OnceLock<Vec<Vec<u64>>>,
}

pub type TableRef = Arc<ConjugacyClassTable>;

impl ConjugacyClassTable {
    pub fn new(group: GroupRef, caps: &Caps) -> Result<Self> {
        let n = group.order();
        if n > caps.max_subgroup_order {
            return Err(Error::CapExceeded {
                what: "subgroup class enumeration",
                needed: n as u128,
                cap: caps.max_subgroup_order,
            });
        }

        let mut cyclic_gens = Vec::new();
        let mut cyclic_seen: HashSet<Vec<u32>> = HashSet::new();
        for a in 1..n {
            if cyclic_seen.insert(closure(&group, &[a])) {
                cyclic_gens.push(a);
            }
        }

        let mut found: Vec<Found> = Vec::new();
        let mut lookup: HashMap<Arc<[u32]>, usize> = HashMap::new();
        let register = |els: Vec<u32>,
                        gens: Vec<usize>,
                        found: &mut Vec<Found>,
                        lookup: &mut HashMap<Arc<[u32]>, usize>| {
            let els: Arc<[u32]> = els.into();
            if lookup.contains_key(&els) {
                return;
            }
            let id = found.len();
            let mut conjugates = Vec::new();
            for g in 0..n {
                let mut c: Vec<u32> = els
                    .iter()
                    .map(|&h| group.conjugate(h as usize, g) as u32)
                    .collect();
                c.sort_unstable();
                let c: Arc<[u32]> = c.into();
                if !lookup.contains_key(&c) {
                    lookup.insert(c.clone(), id);
                    conjugates.push(c);
                }
            }
            found.push((els, gens, conjugates));
        };

        register(vec![0], vec![], &mut found, &mut lookup);
        for &a in &cyclic_gens {
            register(closure(&group, &[a]), vec![a], &mut found, &mut lookup);
        }
        let mut next = 0;
        while next < found.len() {
            let (els, gens) = (found[next].0.clone(), found[next].1.clone());
            for &z in &cyclic_gens {
                if els.binary_search(&(z as u32)).is_ok() {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(z);
                let k = closure(&group, &g2);
                if !lookup.contains_key(k.as_slice()) {
                    register(k, g2, &mut found, &mut lookup);
                }
            }
            next += 1;
        }

        // Canonical order and representatives.
        let mut keyed: Vec<(usize, Arc<[u32]>, Conjugates)> = found
            .into_iter()
            .map(|(els, _, conjugates)| {
                let min = conjugates.iter().min().cloned().unwrap_or(els);
                (min.len(), min, conjugates)
            })
            .collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

        let mut lookup = HashMap::new();
        let mut classes = Vec::with_capacity(keyed.len());
        for (id, (_, min, conjugates)) in keyed.into_iter().enumerate() {
            for c in &conjugates {
                lookup.insert(c.clone(), id);
            }
            let rep = SubgroupRef::from_sorted_unchecked(group.clone(), min);
            let cyclic = rep.is_cyclic();
            classes.push(ClassInfo {
                label: structure_name(&rep, cyclic),
                rep,
                conjugates,
                cyclic,
            });
        }
        disambiguate_labels(&mut classes);

        Ok(ConjugacyClassTable {
            group,
            classes,
            lookup,
            marks: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn rep(&self, i: usize) -> &SubgroupRef {
        &self.classes[i].rep
    }

    pub fn reps(&self) -> impl Iterator<Item = &SubgroupRef> {
        self.classes.iter().map(|c| &c.rep)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.classes[i].label
    }

    pub fn labels(&self) -> Vec<&str> {
        self.classes.iter().map(|c| c.label.as_str()).collect()
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        let label = label.trim().trim_start_matches('[').trim_end_matches(']');
        self.classes.iter().position(|c| c.label == label)
    }

    pub fn subgroup_order(&self, i: usize) -> usize {
        self.classes[i].rep.order()
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        self.classes[i].cyclic
    }

    pub fn num_conjugates(&self, i: usize) -> usize {
        self.classes[i].conjugates.len()
    }

    pub fn normalizer_order(&self, i: usize) -> usize {
        self.group.order() / self.num_conjugates(i)
    }

    pub fn conjugates(&self, i: usize) -> impl Iterator<Item = SubgroupRef> + '_ {
        self.classes[i]
            .conjugates
            .iter()
            .map(|c| SubgroupRef::from_sorted_unchecked(self.group.clone(), c.clone()))
    }

    pub fn trivial_class(&self) -> usize {
        0
    }

    pub fn whole_class(&self) -> usize {
        self.classes.len() - 1
    }

    /// Total number of subgroups.
    pub fn subgroup_count(&self) -> usize {
        self.lookup.len()
    }

    pub fn class_of(&self, sub: &SubgroupRef) -> Result<usize> {
        if sub.ambient().fingerprint() != self.group.fingerprint() {
            return Err(Error::ClassNotFound);
        }
        self.class_of_elements(sub.elements())
    }

    pub fn class_of_elements(&self, elements: &[u32]) -> Result<usize> {
        self.lookup
            .get(elements)
            .copied()
            .ok_or(Error::ClassNotFound)
    }

    /// Class of the subgroup generated by the given elements.
    pub fn class_of_generated(&self, gens: &[usize]) -> usize {
        self.lookup[closure(&self.group, gens).as_slice()]
    }

    /// `M[H][K] = |(G/H)^K|`, the number of conjugates of `K` inside `H`
    /// times `|N_G(K)| / |H|`.
    pub fn marks(&self) -> &Vec<Vec<u64>> {
        self.marks.get_or_init(|| {
            let c = self.len();
            let mut m = vec![vec![0u64; c]; c];
            for (h, row) in m.iter_mut().enumerate() {
                let hs = &self.classes[h].rep;
                for (k, entry) in row.iter_mut().enumerate().take(h + 1) {
                    if !hs.order().is_multiple_of(self.subgroup_order(k)) {
                        continue;
                    }
                    let inside = self.classes[k]
                        .conjugates
                        .iter()
                        .filter(|kc| kc.iter().all(|&x| hs.contains(x as usize)))
                        .count();
                    *entry = (inside * self.normalizer_order(k) / hs.order()) as u64;
                }
            }
            m
        })
    }

    /// Class of `K^g ∩ H` style intersections.
    pub fn class_of_intersection(&self, a: &SubgroupRef, b: &SubgroupRef) -> usize {
        self.lookup[a.intersect(b).elements()]
    }
}

impl fmt::Debug for ConjugacyClassTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Conj({}): [{}]",
            self.group.label(),
            self.labels().join(", ")
        )
    }
}

/// `[K] ↦ [φ(K)]`.
pub fn induced_class_map(
    phi: &GroupHom,
    src: &ConjugacyClassTable,
    tgt: &ConjugacyClassTable,
) -> Result<Vec<usize>> {
    if !phi.source().same_group(src.group()) || !phi.target().same_group(tgt.group()) {
        return Err(Error::GroupMismatch);
    }
    src.reps()
        .map(|k| tgt.class_of_elements(phi.image(k).elements()))
        .collect()
}

fn structure_name(sub: &SubgroupRef, cyclic: bool) -> String {
    let n = sub.order();
    if n == 1 {
        return "e".into();
    }
    if cyclic {
        return format!("C{n}");
    }
    let g = sub.ambient();
    let mut orders: BTreeMap<usize, usize> = BTreeMap::new();
    for a in sub.iter() {
        *orders.entry(g.element_order(a)).or_default() += 1;
    }
    let gens = sub.generators();
    let abelian = gens.iter().all(|&a| {
        gens.iter()
            .all(|&b| g.mul(a as usize, b as usize) == g.mul(b as usize, a as usize))
    });
    let count = |k: usize| orders.get(&k).copied().unwrap_or(0);
    let exponent = orders.keys().copied().max().unwrap_or(1);
    match n {
        4 => "V4".into(),
        6 => "S3".into(),
        8 if abelian && exponent == 2 => "C2^3".into(),
        8 if abelian => "C4xC2".into(),
        8 if count(2) == 1 => "Q8".into(),
        8 => "D4".into(),
        9 => "C3^2".into(),
        12 if abelian => "C6xC2".into(),
        12 if count(6) == 0 => "A4".into(),
        12 if count(2) == 1 => "Dic3".into(),
        12 => "D6".into(),
        16 if abelian && exponent == 2 => "C2^4".into(),
        24 if count(2) == 9 && count(3) == 8 && count(4) == 6 => "S4".into(),
        _ if abelian && exponent == 2 => format!("C2^{}", n.trailing_zeros()),
        _ => format!("G{n}"),
    }
}

fn disambiguate_labels(classes: &mut [ClassInfo]) {
    let mut counts: HashMap<String, usize> = HashMap::new();
    for c in classes.iter() {
        *counts.entry(c.label.clone()).or_default() += 1;
    }
    let mut seen: HashMap<String, usize> = HashMap::new();
    for c in classes.iter_mut() {
        if counts[&c.label] > 1 {
            let k = seen.entry(c.label.clone()).or_default();
            c.label = format!("{}{}", c.label, suffix(*k));
            *k += 1;
        }
    }
}

fn suffix(mut k: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (k % 26) as u8);
        k /= 26;
        if k == 0 {
            break;
        }
        k -= 1;
    }
    s.reverse();
    String::from_utf8(s).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::PermGroup;

    fn table(spec: &str) -> ConjugacyClassTable {
        let caps = Caps::default();
        let g = Arc::new(PermGroup::from_spec(spec, &caps).unwrap());
        ConjugacyClassTable::new(g, &caps).unwrap()
    }

    #[test]
    fn class_counts() {
        for (spec, count, total) in [
            ("e", 1, 1),
            ("C2", 2, 2),
            ("S3", 4, 6),
            ("V4", 5, 5),
            ("D4", 8, 10),
            ("Q8", 6, 6),
            ("A4", 5, 10),
            ("S4", 11, 30),
        ] {
            let t = table(spec);
            assert_eq!(t.len(), count, "{spec}");
            assert_eq!(t.subgroup_count(), total, "{spec}");
        }
    }

    #[test]
    fn s3_labels_and_marks() {
        let t = table("S3");
        assert_eq!(t.labels(), vec!["e", "C2", "C3", "S3"]);
        let m = t.marks();
        assert_eq!(m[0], vec![6, 0, 0, 0]);
        assert_eq!(m[1], vec![3, 1, 0, 0]);
        assert_eq!(m[2], vec![2, 0, 2, 0]);
        assert_eq!(m[3], vec![1, 1, 1, 1]);
    }

    #[test]
    fn labels_are_unique() {
        for spec in ["D4", "S4", "V4", "C6"] {
            let t = table(spec);
            let labels: HashSet<&str> = t.labels().into_iter().collect();
            assert_eq!(labels.len(), t.len(), "{spec}");
        }
        assert_eq!(table("V4").labels(), vec!["e", "C2a", "C2b", "C2c", "V4"]);
    }

    #[test]
    fn sign_map_on_classes() {
        let caps = Caps::default();
        let s3 = Arc::new(PermGroup::from_spec("S3", &caps).unwrap());
        let c2 = Arc::new(PermGroup::from_spec("C2", &caps).unwrap());
        let images: Vec<usize> = s3
            .generators()
            .iter()
            .map(|&g| usize::from(s3.element(g as usize).cycles().iter().any(|c| c.len() == 2)))
            .collect();
        let sign = GroupHom::from_generator_images(s3.clone(), c2.clone(), &images).unwrap();
        let ts = ConjugacyClassTable::new(s3, &caps).unwrap();
        let tc = ConjugacyClassTable::new(c2, &caps).unwrap();
        assert_eq!(
            induced_class_map(&sign, &ts, &tc).unwrap(),
            vec![0, 1, 0, 1]
        );
    }
}
