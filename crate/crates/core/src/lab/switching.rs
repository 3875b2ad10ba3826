use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exchange::{check_common_independent, ExchangeDigraph};
use crate::lab::classes::{check_enumeration, fingerprint_unchecked};
use crate::matroid::Matroid;
use crate::set::{Element, ElementSet};

/// A chordless directed cycle `x_0, .., x_{2n+1}` of an exchange digraph with
/// `x_0` outside the base set and `x_{2n+1}` inside it.
///
/// Cycles produced here start at their least element outside the base set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct SwitchingCycle(pub Vec<Element>);

impl SwitchingCycle {
    pub fn elements(&self) -> &[Element] {
        &self.0
    }

    pub fn as_set(&self) -> ElementSet {
        self.0.iter().copied().collect()
    }
}

/// All chordless directed cycles of `d`.
pub fn switching_cycles(d: &ExchangeDigraph) -> Vec<SwitchingCycle> {
    let base = d.base();
    let outside = ElementSet::full(d.ground_size()) - base;
    let mut found = Vec::new();
    for start in outside {
        // Other elements outside the base must be larger than `start`.
        let allowed = base | (outside - ElementSet::full(start + 1));
        let mut path = vec![start];
        extend(d, &mut path, ElementSet::singleton(start), ElementSet::EMPTY, allowed, &mut found);
    }
    found
}

/// `earlier_out` is the union of out-neighbourhoods of every path element but
/// the last.
fn extend(
    d: &ExchangeDigraph,
    path: &mut Vec<Element>,
    on_path: ElementSet,
    earlier_out: ElementSet,
    allowed: ElementSet,
    found: &mut Vec<SwitchingCycle>,
) {
    let last = *path.last().expect("non-empty path");
    let start = path[0];
    // Path elements other than the start; an arc from the new element back
    // into these would be a chord.
    let inner = on_path.without(start);
    let next_earlier = earlier_out | d.out_neighbors(last);
    for v in (d.out_neighbors(last) & allowed) - on_path - earlier_out {
        if !(d.out_neighbors(v) & inner).is_empty() {
            continue;
        }
        path.push(v);
        if d.has_arc(v, start) {
            found.push(SwitchingCycle(path.clone()));
        } else {
            extend(d, path, on_path.with(v), next_earlier, allowed, found);
        }
        path.pop();
    }
}

pub fn find_switching_cycles(m: &Matroid, n: &Matroid, i: ElementSet) -> Result<Vec<SwitchingCycle>> {
    Ok(switching_cycles(&ExchangeDigraph::build(m, n, i)?))
}

pub fn validate_cycle(d: &ExchangeDigraph, cycle: &SwitchingCycle) -> Result<()> {
    let c = cycle.elements();
    if c.len() < 2 || !c.len().is_multiple_of(2) {
        return Err(Error::InvalidCycle(format!(
            "length {} is not a positive even number",
            c.len()
        )));
    }
    let mut seen = ElementSet::EMPTY;
    for &x in c {
        if x >= d.ground_size() {
            return Err(Error::ElementOutOfRange {
                element: x,
                ground_size: d.ground_size(),
            });
        }
        if seen.contains(x) {
            return Err(Error::InvalidCycle(format!("element {x} repeats")));
        }
        seen.insert(x);
    }
    if !d.base().contains(c[c.len() - 1]) || d.base().contains(c[0]) {
        return Err(Error::InvalidCycle("must start outside and end inside the base set".into()));
    }
    let len = c.len();
    for (i, &x) in c.iter().enumerate() {
        for (j, &y) in c.iter().enumerate() {
            if i == j {
                continue;
            }
            let consecutive = j == (i + 1) % len;
            if d.has_arc(x, y) != consecutive {
                return Err(Error::InvalidCycle(if consecutive {
                    format!("missing arc {x} -> {y}")
                } else {
                    format!("chord {x} -> {y}")
                }));
            }
        }
    }
    Ok(())
}

/// Returns `I xor O`, checking that it is common independent and equivalent
/// to `I`.
pub fn apply_switching_cycle(
    m: &Matroid,
    n: &Matroid,
    i: ElementSet,
    cycle: &SwitchingCycle,
) -> Result<ElementSet> {
    let d = ExchangeDigraph::build(m, n, i)?;
    validate_cycle(&d, cycle)?;
    switch_unchecked(m, n, i, cycle)
}

fn switch_unchecked(m: &Matroid, n: &Matroid, i: ElementSet, cycle: &SwitchingCycle) -> Result<ElementSet> {
    let result = i ^ cycle.as_set();
    if !(m.indep(result) && n.indep(result)) {
        return Err(Error::PropertyViolation(format!(
            "{i} xor {cycle:?} is not common independent"
        )));
    }
    if fingerprint_unchecked(m, n, result) != fingerprint_unchecked(m, n, i) {
        return Err(Error::PropertyViolation(format!(
            "{i} xor {cycle:?} changes the class"
        )));
    }
    Ok(result)
}

/// Closure of `{I}` under switching-cycle moves.
pub fn switching_component(m: &Matroid, n: &Matroid, i: ElementSet) -> Result<BTreeSet<ElementSet>> {
    check_enumeration(m, n)?;
    check_common_independent(m, n, i)?;
    let mut seen = BTreeSet::from([i]);
    let mut stack = vec![i];
    while let Some(s) = stack.pop() {
        let d = ExchangeDigraph::build(m, n, s)?;
        for c in switching_cycles(&d) {
            let next = switch_unchecked(m, n, s, &c)?;
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    Ok(seen)
}
