use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exchange::{augment_unchecked_path, check_common_independent, check_same_ground, ExchangeDigraph};
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// Largest ground set for which exhaustive enumeration is attempted.
pub const ENUMERATION_LIMIT: usize = 14;

pub(crate) fn check_enumeration(m: &Matroid, n: &Matroid) -> Result<()> {
    check_same_ground(m, n)?;
    if m.ground_size() > ENUMERATION_LIMIT {
        Err(Error::Capacity {
            size: m.ground_size(),
            limit: ENUMERATION_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// All common independent sets in lexicographic order.
pub fn enumerate_common_independents(m: &Matroid, n: &Matroid) -> Result<Vec<ElementSet>> {
    check_enumeration(m, n)?;
    let mut out = Vec::new();
    // Pre-order DFS, extending by increasing elements, visits sets in
    // lexicographic order; both families are downward closed so pruning is
    // exact.
    fn visit(m: &Matroid, n: &Matroid, cur: ElementSet, from: usize, out: &mut Vec<ElementSet>) {
        out.push(cur);
        for e in from..m.ground_size() {
            let next = cur.with(e);
            if m.indep(next) && n.indep(next) {
                visit(m, n, next, e + 1, out);
            }
        }
    }
    visit(m, n, ElementSet::EMPTY, 0, &mut out);
    Ok(out)
}

/// Identity of an equivalence class: the pair of spans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Fingerprint {
    pub m_span: ElementSet,
    pub n_span: ElementSet,
}

impl Fingerprint {
    /// Whether every set with fingerprint `self` is below every set with
    /// fingerprint `other`.
    pub fn leq(&self, other: &Fingerprint) -> bool {
        self.m_span.is_subset(other.m_span) && self.n_span.is_subset(other.n_span)
    }
}

pub(crate) fn fingerprint_unchecked(m: &Matroid, n: &Matroid, i: ElementSet) -> Fingerprint {
    Fingerprint {
        m_span: m.span(i),
        n_span: n.span(i),
    }
}

pub fn fingerprint(m: &Matroid, n: &Matroid, i: ElementSet) -> Result<Fingerprint> {
    check_common_independent(m, n, i)?;
    Ok(fingerprint_unchecked(m, n, i))
}

/// `I` is below `J` iff `I` lies in both spans of `J`.
pub fn preorder_leq(m: &Matroid, n: &Matroid, i: ElementSet, j: ElementSet) -> Result<bool> {
    check_common_independent(m, n, i)?;
    check_common_independent(m, n, j)?;
    Ok(i.is_subset(m.span(j) & n.span(j)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct ClassId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    pub fingerprint: Fingerprint,
    /// Lexicographically least member.
    pub representative: ElementSet,
    /// All members, in lexicographic order.
    pub members: Vec<ElementSet>,
}

/// The partial order induced on equivalence classes of common independent
/// sets.
///
/// Class ids follow a fixed topological order: by representative size, then
/// by total span size, then by representative.
#[derive(Clone, Debug)]
pub struct ClassPoset {
    classes: Vec<Class>,
    index: BTreeMap<Fingerprint, ClassId>,
}

impl ClassPoset {
    pub fn build(m: &Matroid, n: &Matroid) -> Result<ClassPoset> {
        let sets = enumerate_common_independents(m, n)?;
        let mut grouped: BTreeMap<Fingerprint, Vec<ElementSet>> = BTreeMap::new();
        for s in sets {
            grouped.entry(fingerprint_unchecked(m, n, s)).or_default().push(s);
        }
        let mut classes: Vec<Class> = grouped
            .into_iter()
            .map(|(fingerprint, members)| Class {
                fingerprint,
                representative: members[0],
                members,
            })
            .collect();
        classes.sort_by_key(|c| {
            (
                c.representative.len(),
                c.fingerprint.m_span.len() + c.fingerprint.n_span.len(),
                c.representative,
            )
        });
        let index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.fingerprint, ClassId(i)))
            .collect();
        Ok(ClassPoset { classes, index })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Class] {
        &self.classes
    }

    pub fn ids(&self) -> impl Iterator<Item = ClassId> {
        (0..self.classes.len()).map(ClassId)
    }

    pub fn class(&self, id: ClassId) -> &Class {
        &self.classes[id.0]
    }

    pub fn representative(&self, id: ClassId) -> ElementSet {
        self.classes[id.0].representative
    }

    pub fn class_of_fingerprint(&self, fp: &Fingerprint) -> Option<ClassId> {
        self.index.get(fp).copied()
    }

    /// Class of a common independent set.
    pub fn class_of(&self, m: &Matroid, n: &Matroid, set: ElementSet) -> Result<ClassId> {
        let fp = fingerprint(m, n, set)?;
        self.class_of_fingerprint(&fp)
            .ok_or_else(|| Error::PropertyViolation(alloc::format!("{set} has no class")))
    }

    pub fn leq(&self, a: ClassId, b: ClassId) -> bool {
        self.classes[a.0].fingerprint.leq(&self.classes[b.0].fingerprint)
    }

    pub fn up_set(&self, a: ClassId) -> Vec<ClassId> {
        self.ids().filter(|&b| self.leq(a, b)).collect()
    }

    pub fn down_set(&self, a: ClassId) -> Vec<ClassId> {
        self.ids().filter(|&b| self.leq(b, a)).collect()
    }

    pub fn maximal(&self) -> Vec<ClassId> {
        self.ids()
            .filter(|&a| self.ids().all(|b| b == a || !self.leq(a, b)))
            .collect()
    }

    /// The maximal class with the lexicographically least representative.
    pub fn default_maximal(&self) -> Option<ClassId> {
        self.maximal().into_iter().min_by_key(|&c| self.representative(c))
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(ClassId, ClassId)> {
        let mut out = Vec::new();
        for a in self.ids() {
            for b in self.ids() {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let between = self
                    .ids()
                    .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Classes reachable from the class of `set` by iterated augmentations.
    pub fn augmentation_closure(
        &self,
        m: &Matroid,
        n: &Matroid,
        set: ElementSet,
    ) -> Result<BTreeSet<ClassId>> {
        augmentation_closure_sets(m, n, set)?
            .into_iter()
            .map(|s| self.class_of(m, n, s))
            .collect()
    }
}

pub fn build_class_poset(m: &Matroid, n: &Matroid) -> Result<ClassPoset> {
    ClassPoset::build(m, n)
}

/// Every set obtainable from `start` by applying a finite sequence of
/// augmenting paths (any augmenting path, not only shortest ones).
pub fn augmentation_closure_sets(
    m: &Matroid,
    n: &Matroid,
    start: ElementSet,
) -> Result<BTreeSet<ElementSet>> {
    check_enumeration(m, n)?;
    check_common_independent(m, n, start)?;
    let mut seen = BTreeSet::new();
    seen.insert(start);
    let mut stack = alloc::vec![start];
    while let Some(s) = stack.pop() {
        let d = ExchangeDigraph::build(m, n, s)?;
        for p in d.augmenting_paths(None) {
            let next = augment_unchecked_path(m, n, s, &p)?;
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    Ok(seen)
}

/// Class-level augmentation closure of the class of `set`.
pub fn augmentation_closure(m: &Matroid, n: &Matroid, set: ElementSet) -> Result<BTreeSet<ClassId>> {
    ClassPoset::build(m, n)?.augmentation_closure(m, n, set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::unit_partition;
    use alloc::vec;

    fn pair_u() -> (Matroid, Matroid) {
        let u = Matroid::uniform(2, 1).unwrap();
        (u.clone(), u)
    }

    fn star2() -> (Matroid, Matroid) {
        (Matroid::uniform(2, 1).unwrap(), Matroid::free(2).unwrap())
    }

    fn loop1() -> (Matroid, Matroid) {
        let l = Matroid::uniform(1, 0).unwrap();
        (l.clone(), l)
    }

    fn p3match() -> (Matroid, Matroid) {
        (
            unit_partition(&[vec![0], vec![1, 2]]).unwrap(),
            unit_partition(&[vec![0, 1], vec![2]]).unwrap(),
        )
    }

    fn sets(v: &[&[usize]]) -> Vec<ElementSet> {
        v.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn enumerate_examples() {
        let (m, n) = pair_u();
        assert_eq!(enumerate_common_independents(&m, &n).unwrap(), sets(&[&[], &[0], &[1]]));
        let (m, n) = star2();
        assert_eq!(enumerate_common_independents(&m, &n).unwrap(), sets(&[&[], &[0], &[1]]));
        let (m, n) = loop1();
        assert_eq!(enumerate_common_independents(&m, &n).unwrap(), sets(&[&[]]));
    }

    #[test]
    fn enumeration_guard() {
        let f = Matroid::free(15).unwrap();
        assert_eq!(
            enumerate_common_independents(&f, &f),
            Err(Error::Capacity { size: 15, limit: 14 })
        );
    }

    #[test]
    fn preorder_examples() {
        let (m, n) = pair_u();
        let (a, b) = (ElementSet::from([0]), ElementSet::from([1]));
        assert!(preorder_leq(&m, &n, a, b).unwrap());
        assert!(preorder_leq(&m, &n, b, a).unwrap());
        assert!(preorder_leq(&m, &n, ElementSet::EMPTY, a).unwrap());
        let (m, n) = star2();
        assert!(!preorder_leq(&m, &n, a, b).unwrap());
        assert!(preorder_leq(&m, &n, ElementSet::from([0, 1]), a).is_err());
    }

    #[test]
    fn poset_examples() {
        let (m, n) = pair_u();
        let p = ClassPoset::build(&m, &n).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.leq(ClassId(0), ClassId(1)) && !p.leq(ClassId(1), ClassId(0)));
        assert_eq!(p.class(ClassId(1)).members, sets(&[&[0], &[1]]));

        let (m, n) = star2();
        let p = ClassPoset::build(&m, &n).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.representative(ClassId(0)), ElementSet::EMPTY);
        assert_eq!(p.maximal(), vec![ClassId(1), ClassId(2)]);
        assert!(!p.leq(ClassId(1), ClassId(2)) && !p.leq(ClassId(2), ClassId(1)));
        assert_eq!(p.default_maximal(), Some(ClassId(1)));
        assert_eq!(p.covers(), vec![(ClassId(0), ClassId(1)), (ClassId(0), ClassId(2))]);

        let (m, n) = loop1();
        assert_eq!(ClassPoset::build(&m, &n).unwrap().len(), 1);
    }

    #[test]
    fn closure_examples() {
        let (m, n) = p3match();
        let p = ClassPoset::build(&m, &n).unwrap();
        let all: BTreeSet<ClassId> = p.ids().collect();
        assert_eq!(p.augmentation_closure(&m, &n, ElementSet::EMPTY).unwrap(), all);

        let (m, n) = star2();
        let p = ClassPoset::build(&m, &n).unwrap();
        let c = p.class_of(&m, &n, ElementSet::from([0])).unwrap();
        assert_eq!(
            augmentation_closure(&m, &n, ElementSet::from([0])).unwrap(),
            BTreeSet::from([c])
        );
    }
}
