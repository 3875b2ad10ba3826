use alloc::vec::Vec;

use crate::error::Result;
use crate::exchange::check_same_ground;
use crate::lab::classes::check_enumeration;
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// `G` is negligible if for all `X` inside `G` and `Y` outside it some
/// `M/Y`-independent set `N`-spans `X`.
///
/// Contracting more only shrinks the independent sets and spanning a larger
/// target implies spanning a smaller one, so the single pair
/// `X = G \ loops(N)`, `Y = E \ G` decides the question. The witness is then
/// searched among `N`-independent subsets `T` of `G`.
pub fn is_negligible(m: &Matroid, n: &Matroid, g: ElementSet) -> Result<bool> {
    check_same_ground(m, n)?;
    m.check_subset(g)?;
    Ok(negligible_witness(m, n, g).is_some())
}

/// A set `T` that proves negligibility of `g`, if one exists.
pub fn negligible_witness(m: &Matroid, n: &Matroid, g: ElementSet) -> Option<ElementSet> {
    let target = g - n.loops();
    let outside_base = m.greedy_base(m.ground() - g);
    let candidates: Vec<usize> = g.iter().collect();

    fn search(
        m: &Matroid,
        n: &Matroid,
        t: ElementSet,
        rest: &[usize],
        target: ElementSet,
        outside_base: ElementSet,
    ) -> Option<ElementSet> {
        if target.is_subset(n.span(t)) {
            return Some(t);
        }
        for (k, &e) in rest.iter().enumerate() {
            let next = t.with(e);
            if n.indep(next) && m.indep(next | outside_base) {
                if let Some(found) = search(m, n, next, &rest[k + 1..], target, outside_base) {
                    return Some(found);
                }
            }
        }
        None
    }
    search(m, n, ElementSet::EMPTY, &candidates, target, outside_base)
}

/// A maximal negligible set: the lexicographically first among the largest
/// negligible sets (any larger set was checked and rejected, so it is
/// maximal under inclusion).
pub fn maximal_negligible(m: &Matroid, n: &Matroid) -> Result<ElementSet> {
    check_enumeration(m, n)?;
    let mut all: Vec<ElementSet> = m.ground().subsets().collect();
    all.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    Ok(all
        .into_iter()
        .find(|&g| negligible_witness(m, n, g).is_some())
        .unwrap_or(ElementSet::EMPTY))
}
