//! The exchange digraph of a common independent set and augmenting paths.
//!
//! For a common independent `I` of `(M, N)` the digraph has an arc `x -> y`
//! (first kind) for `x` outside `I` that is `M`-spanned by `I` and `y` on
//! `C_M(x, I)`, and an arc `y -> x` (second kind) for `x` outside `I` that is
//! `N`-spanned by `I` and `y` on `C_N(x, I)`. Sources are the elements not
//! `N`-spanned by `I`, sinks those not `M`-spanned by `I`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{Element, ElementSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcKind {
    /// Enters the base set; from an `M`-fundamental circuit.
    First,
    /// Leaves the base set; from an `N`-fundamental circuit.
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExchangeArc {
    pub from: Element,
    pub to: Element,
    pub kind: ArcKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeDigraph {
    ground_size: usize,
    base: ElementSet,
    out: Vec<ElementSet>,
    span_m: ElementSet,
    span_n: ElementSet,
}

/// Checks that both matroids share a ground set and `set` is independent in
/// both.
pub fn check_common_independent(m: &Matroid, n: &Matroid, set: ElementSet) -> Result<()> {
    check_same_ground(m, n)?;
    m.check_subset(set)?;
    if m.indep(set) && n.indep(set) {
        Ok(())
    } else {
        Err(Error::NotCommonIndependent { set })
    }
}

pub fn check_same_ground(m: &Matroid, n: &Matroid) -> Result<()> {
    if m.ground_size() == n.ground_size() {
        Ok(())
    } else {
        Err(Error::GroundMismatch {
            left: m.ground_size(),
            right: n.ground_size(),
        })
    }
}

impl ExchangeDigraph {
    pub fn build(m: &Matroid, n: &Matroid, base: ElementSet) -> Result<Self> {
        check_common_independent(m, n, base)?;
        let ground_size = m.ground_size();
        let mut out = vec![ElementSet::EMPTY; ground_size];
        let span_m = m.span(base);
        let span_n = n.span(base);
        for x in m.ground() - base {
            if span_m.contains(x) {
                out[x] |= m.circuit(x, base).without(x);
            }
            if span_n.contains(x) {
                for y in n.circuit(x, base).without(x) {
                    out[y].insert(x);
                }
            }
        }
        Ok(ExchangeDigraph {
            ground_size,
            base,
            out,
            span_m,
            span_n,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// The common independent set this digraph was built from.
    pub fn base(&self) -> ElementSet {
        self.base
    }

    pub fn span_m(&self) -> ElementSet {
        self.span_m
    }

    pub fn span_n(&self) -> ElementSet {
        self.span_n
    }

    /// `E \ span_N(I)`.
    pub fn sources(&self) -> ElementSet {
        ElementSet::full(self.ground_size) - self.span_n
    }

    /// `E \ span_M(I)`.
    pub fn sinks(&self) -> ElementSet {
        ElementSet::full(self.ground_size) - self.span_m
    }

    pub fn out_neighbors(&self, x: Element) -> ElementSet {
        self.out[x]
    }

    pub fn has_arc(&self, from: Element, to: Element) -> bool {
        self.out[from].contains(to)
    }

    pub fn arc_kind(&self, from: Element) -> ArcKind {
        if self.base.contains(from) {
            ArcKind::Second
        } else {
            ArcKind::First
        }
    }

    /// All arcs, ordered by `(from, to)`.
    pub fn arcs(&self) -> impl Iterator<Item = ExchangeArc> + '_ {
        (0..self.ground_size).flat_map(move |from| {
            let kind = self.arc_kind(from);
            self.out[from]
                .iter()
                .map(move |to| ExchangeArc { from, to, kind })
        })
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    /// Everything reachable from `from` by a directed path, including `from`
    /// itself.
    pub fn reachable_from(&self, from: ElementSet) -> ElementSet {
        let from = from & ElementSet::full(self.ground_size);
        let mut seen = from;
        let mut frontier = from;
        while !frontier.is_empty() {
            let mut next = ElementSet::EMPTY;
            for x in frontier {
                next |= self.out[x];
            }
            frontier = next - seen;
            seen |= frontier;
        }
        seen
    }

    /// The lexicographically first among the shortest augmenting paths whose
    /// start lies in `source_filter` and end in `target_filter`.
    pub fn shortest_augmenting_path(
        &self,
        source_filter: Option<ElementSet>,
        target_filter: Option<ElementSet>,
    ) -> Option<AugmentingPath> {
        let full = ElementSet::full(self.ground_size);
        let sources = self.sources() & source_filter.unwrap_or(full);
        let sinks = self.sinks() & target_filter.unwrap_or(full);
        if sources.is_empty() || sinks.is_empty() {
            return None;
        }

        let mut incoming = vec![ElementSet::EMPTY; self.ground_size];
        for (x, outs) in self.out.iter().enumerate() {
            for y in *outs {
                incoming[y].insert(x);
            }
        }
        // Distance to the nearest admissible sink, by backward BFS.
        let mut dist = vec![usize::MAX; self.ground_size];
        let mut queue = VecDeque::new();
        for t in sinks {
            dist[t] = 0;
            queue.push_back(t);
        }
        while let Some(v) = queue.pop_front() {
            for u in incoming[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }

        let start = sources
            .iter()
            .filter(|&s| dist[s] != usize::MAX)
            .min_by_key(|&s| (dist[s], s))?;
        let mut path = vec![start];
        let mut cur = start;
        while dist[cur] > 0 {
            cur = self.out[cur]
                .iter()
                .find(|&v| dist[v] == dist[cur] - 1)
                .expect("BFS layer has a successor");
            path.push(cur);
        }
        Some(AugmentingPath(path))
    }

    /// Every augmenting path (chordless in the forward direction) from a
    /// source in `source_filter`.
    pub fn augmenting_paths(&self, source_filter: Option<ElementSet>) -> Vec<AugmentingPath> {
        let full = ElementSet::full(self.ground_size);
        let sources = self.sources() & source_filter.unwrap_or(full);
        let sinks = self.sinks();
        let mut found = Vec::new();
        let mut path = Vec::new();
        for s in sources {
            path.push(s);
            self.extend_paths(&mut path, ElementSet::singleton(s), ElementSet::EMPTY, sinks, &mut found);
            path.pop();
        }
        found
    }

    /// `forbidden` holds the out-neighbours of every path element except the
    /// last; re-entering those would create a jumping arc.
    fn extend_paths(
        &self,
        path: &mut Vec<Element>,
        on_path: ElementSet,
        forbidden: ElementSet,
        sinks: ElementSet,
        found: &mut Vec<AugmentingPath>,
    ) {
        let last = *path.last().expect("non-empty path");
        if sinks.contains(last) {
            found.push(AugmentingPath(path.clone()));
        }
        let next_forbidden = forbidden | self.out[last];
        for v in self.out[last] - on_path - forbidden {
            path.push(v);
            self.extend_paths(path, on_path.with(v), next_forbidden, sinks, found);
            path.pop();
        }
    }

    /// Checks the four defining conditions of an augmenting path.
    pub fn validate_path(&self, path: &AugmentingPath) -> Result<()> {
        let p = path.elements();
        let Some((&first, &last)) = p.first().zip(p.last()) else {
            return Err(Error::InvalidPath("empty sequence".into()));
        };
        let mut seen = ElementSet::EMPTY;
        for &x in p {
            if x >= self.ground_size {
                return Err(Error::ElementOutOfRange {
                    element: x,
                    ground_size: self.ground_size,
                });
            }
            if seen.contains(x) {
                return Err(Error::InvalidPath(format!("element {x} repeats")));
            }
            seen.insert(x);
        }
        if !self.sources().contains(first) {
            return Err(Error::InvalidPath(format!(
                "start {first} is N-spanned by the base set"
            )));
        }
        if !self.sinks().contains(last) {
            return Err(Error::InvalidPath(format!(
                "end {last} is M-spanned by the base set"
            )));
        }
        for w in p.windows(2) {
            if !self.has_arc(w[0], w[1]) {
                return Err(Error::InvalidPath(format!("missing arc {} -> {}", w[0], w[1])));
            }
        }
        for (i, &x) in p.iter().enumerate() {
            for &y in p.iter().skip(i + 2) {
                if self.has_arc(x, y) {
                    return Err(Error::InvalidPath(format!("jumping arc {x} -> {y}")));
                }
            }
        }
        Ok(())
    }
}

/// A sequence `x_0, .., x_2n` of elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct AugmentingPath(pub Vec<Element>);

impl AugmentingPath {
    pub fn elements(&self) -> &[Element] {
        &self.0
    }

    pub fn start(&self) -> Element {
        self.0[0]
    }

    pub fn end(&self) -> Element {
        self.0[self.0.len() - 1]
    }

    pub fn as_set(&self) -> ElementSet {
        self.0.iter().copied().collect()
    }
}

pub fn build_exchange_digraph(m: &Matroid, n: &Matroid, base: ElementSet) -> Result<ExchangeDigraph> {
    ExchangeDigraph::build(m, n, base)
}

pub fn find_augmenting_path(
    m: &Matroid,
    n: &Matroid,
    base: ElementSet,
    source_filter: Option<ElementSet>,
    target_filter: Option<ElementSet>,
) -> Result<Option<AugmentingPath>> {
    if let Some(f) = source_filter {
        m.check_subset(f)?;
    }
    if let Some(f) = target_filter {
        m.check_subset(f)?;
    }
    let d = ExchangeDigraph::build(m, n, base)?;
    let path = d.shortest_augmenting_path(source_filter, target_filter);
    if let Some(p) = &path {
        // Re-check against a fresh digraph.
        ExchangeDigraph::build(m, n, base)?
            .validate_path(p)
            .map_err(|e| Error::PropertyViolation(format!("path search returned {p:?}: {e}")))?;
    }
    Ok(path)
}

/// Returns `I xor P` after verifying that it is common independent, one
/// larger, and has `span_M(I + x_2n)` and `span_N(I + x_0)` as spans.
pub fn apply_augmentation(
    m: &Matroid,
    n: &Matroid,
    base: ElementSet,
    path: &AugmentingPath,
) -> Result<ElementSet> {
    let d = ExchangeDigraph::build(m, n, base)?;
    d.validate_path(path)?;
    augment_unchecked_path(m, n, base, path)
}

/// Applies a path already known to be valid for `base`, still checking every
/// postcondition.
pub(crate) fn augment_unchecked_path(
    m: &Matroid,
    n: &Matroid,
    base: ElementSet,
    path: &AugmentingPath,
) -> Result<ElementSet> {
    let result = base ^ path.as_set();
    if !(m.indep(result) && n.indep(result)) {
        return Err(Error::PropertyViolation(format!(
            "{base} xor {path:?} = {result} is not common independent"
        )));
    }
    if result.len() != base.len() + 1 {
        return Err(Error::PropertyViolation(format!(
            "{base} xor {path:?} does not grow by one"
        )));
    }
    if m.span(result) != m.span(base.with(path.end())) {
        return Err(Error::PropertyViolation(format!(
            "M-span of {result} differs from M-span of {base} + {}",
            path.end()
        )));
    }
    if n.span(result) != n.span(base.with(path.start())) {
        return Err(Error::PropertyViolation(format!(
            "N-span of {result} differs from N-span of {base} + {}",
            path.start()
        )));
    }
    Ok(result)
}
