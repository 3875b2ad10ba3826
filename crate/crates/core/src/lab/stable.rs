use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exchange::check_common_independent;
use crate::lab::classes::{check_enumeration, enumerate_common_independents};
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// A common independent `I` is stable if every `J` disjoint from `I` with
/// `I + J` `M`-independent and `J` `N`-independent also has `I + J`
/// `N`-independent.
pub fn is_stable(m: &Matroid, n: &Matroid, i: ElementSet) -> Result<bool> {
    check_common_independent(m, n, i)?;
    Ok(stable_unchecked(m, n, i))
}

pub(crate) fn stable_unchecked(m: &Matroid, n: &Matroid, i: ElementSet) -> bool {
    // Both hypotheses on J are downward closed, so a DFS over J that keeps
    // them covers every candidate.
    fn visit(m: &Matroid, n: &Matroid, i: ElementSet, j: ElementSet, from: usize) -> bool {
        if !n.indep(i | j) {
            return false;
        }
        for e in from..m.ground_size() {
            if i.contains(e) {
                continue;
            }
            let next = j.with(e);
            if m.indep(i | next) && n.indep(next) && !visit(m, n, i, next, e + 1) {
                return false;
            }
        }
        true
    }
    visit(m, n, i, ElementSet::EMPTY, 0)
}

/// Every stable set, in lexicographic order.
pub fn stable_sets(m: &Matroid, n: &Matroid) -> Result<Vec<ElementSet>> {
    check_enumeration(m, n)?;
    Ok(enumerate_common_independents(m, n)?
        .into_iter()
        .filter(|&s| stable_unchecked(m, n, s))
        .collect())
}

/// A single stable set inside the union of `family` that `M`-spans it.
///
/// Starting from the empty set, each member in turn is used to extend the
/// current set to a maximal `M`-independent subset of the current set plus
/// that member.
pub fn merge_stable(m: &Matroid, n: &Matroid, family: &[ElementSet]) -> Result<ElementSet> {
    for &s in family {
        check_common_independent(m, n, s)?;
        if !stable_unchecked(m, n, s) {
            return Err(Error::NotStable { set: s });
        }
    }
    let mut merged = ElementSet::EMPTY;
    for &s in family {
        for e in s - merged {
            if m.indep(merged.with(e)) {
                merged.insert(e);
            }
        }
    }
    let union = family.iter().fold(ElementSet::EMPTY, |acc, &s| acc | s);
    if !(m.indep(merged) && n.indep(merged) && stable_unchecked(m, n, merged)) {
        return Err(Error::PropertyViolation(format!(
            "merged set {merged} is not stable"
        )));
    }
    if !union.is_subset(m.span(merged)) {
        return Err(Error::PropertyViolation(format!(
            "merged set {merged} does not M-span {union}"
        )));
    }
    Ok(merged)
}
