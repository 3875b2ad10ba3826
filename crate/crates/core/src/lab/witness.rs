//! Witness structures attached to a maximal directed set of classes.
//!
//! On a finite poset a directed set has a greatest element, so the maximal
//! directed sets are exactly the down-sets of maximal classes. Given such a
//! down-set `D` this module computes, for every `x` outside `span_N(D)`, a set
//! `I_x` in `D` none of whose `D`-upper classes has an `x`-augmenting path,
//! and from those the sets `W`, `S = W & span_N(D)` and `G = E \ W`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exchange::ExchangeDigraph;
use crate::lab::classes::{ClassId, ClassPoset};
use crate::matroid::Matroid;
use crate::set::{Element, ElementSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessStructures {
    /// The maximal class whose down-set is the directed set.
    pub top: ClassId,
    pub directed_set: Vec<ClassId>,
    /// Union of the `M`-spans over the directed set.
    pub span_m: ElementSet,
    /// Union of the `N`-spans over the directed set.
    pub span_n: ElementSet,
    pub i_x: BTreeMap<Element, ElementSet>,
    pub i_x_class: BTreeMap<Element, ClassId>,
    /// `y -> (x_y, J_y)` with `y` reachable from `x_y` in `D(J_y)`.
    pub pairs: BTreeMap<Element, (Element, ElementSet)>,
    pub w: ElementSet,
    pub s: ElementSet,
    pub g: ElementSet,
}

impl WitnessStructures {
    /// Elements outside `span_N(D)`, i.e. the domain of `I_x`.
    pub fn free_elements(&self, ground_size: usize) -> ElementSet {
        ElementSet::full(ground_size) - self.span_n
    }

    pub fn contains_class(&self, c: ClassId) -> bool {
        self.directed_set.binary_search(&c).is_ok()
    }
}

/// Classes of the directed set that lie above `c`.
pub fn up_in(poset: &ClassPoset, directed_set: &[ClassId], c: ClassId) -> Vec<ClassId> {
    directed_set
        .iter()
        .copied()
        .filter(|&d| poset.leq(c, d))
        .collect()
}

pub fn compute_witnesses(
    m: &Matroid,
    n: &Matroid,
    class_choice: Option<ClassId>,
) -> Result<WitnessStructures> {
    let poset = ClassPoset::build(m, n)?;
    compute_witnesses_in(m, n, &poset, class_choice)
}

/// As [`compute_witnesses`] with a prebuilt poset. `class_choice` must be a
/// maximal class; it defaults to the one with the least representative.
pub fn compute_witnesses_in(
    m: &Matroid,
    n: &Matroid,
    poset: &ClassPoset,
    class_choice: Option<ClassId>,
) -> Result<WitnessStructures> {
    let maximal = poset.maximal();
    let top = match class_choice {
        Some(c) if maximal.contains(&c) => c,
        Some(c) => return Err(Error::InvalidClass(c.0)),
        None => poset
            .default_maximal()
            .ok_or_else(|| Error::PropertyViolation("poset has no classes".into()))?,
    };
    let directed_set = poset.down_set(top);
    let top_fp = poset.class(top).fingerprint;
    let (span_m, span_n) = (top_fp.m_span, top_fp.n_span);

    let digraphs: BTreeMap<ClassId, ExchangeDigraph> = directed_set
        .iter()
        .map(|&c| Ok((c, ExchangeDigraph::build(m, n, poset.representative(c))?)))
        .collect::<Result<_>>()?;

    let free = m.ground() - span_n;
    let mut i_x = BTreeMap::new();
    let mut i_x_class = BTreeMap::new();
    for x in free {
        let source = Some(ElementSet::singleton(x));
        let has_aug: BTreeMap<ClassId, bool> = digraphs
            .iter()
            .map(|(&c, d)| (c, d.shortest_augmenting_path(source, None).is_some()))
            .collect();
        let chosen = directed_set
            .iter()
            .copied()
            .find(|&c| up_in(poset, &directed_set, c).iter().all(|d| !has_aug[d]))
            .ok_or_else(|| {
                Error::PropertyViolation(format!("no I_x exists for x = {x}"))
            })?;
        i_x.insert(x, poset.representative(chosen));
        i_x_class.insert(x, chosen);
    }

    let mut w = ElementSet::EMPTY;
    for (&x, &c) in &i_x_class {
        for d in up_in(poset, &directed_set, c) {
            w |= digraphs[&d].reachable_from(ElementSet::singleton(x));
        }
    }
    let s = w & span_n;
    let g = m.ground() - w;

    let mut pairs = BTreeMap::new();
    'outer: for y in s {
        for (&x, &c) in &i_x_class {
            for d in up_in(poset, &directed_set, c) {
                if digraphs[&d].reachable_from(ElementSet::singleton(x)).contains(y) {
                    pairs.insert(y, (x, poset.representative(d)));
                    continue 'outer;
                }
            }
        }
        return Err(Error::PropertyViolation(format!(
            "no witness pair for {y} in S"
        )));
    }

    Ok(WitnessStructures {
        top,
        directed_set,
        span_m,
        span_n,
        i_x,
        i_x_class,
        pairs,
        w,
        s,
        g,
    })
}
