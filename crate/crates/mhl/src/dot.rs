//! Graphviz export.

use std::fmt::Write;

use mhl_core::lab::ClassPoset;
use mhl_core::{ArcKind, ExchangeDigraph};

use crate::instance::Instance;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// First-kind arcs are solid, second-kind arcs dashed. Members of the base
/// set are boxes; sources and sinks carry `src` / `snk` in their label.
pub fn exchange_digraph_dot(inst: &Instance, d: &ExchangeDigraph) -> String {
    let mut out = String::from("digraph exchange {\n  rankdir=LR;\n");
    let (sources, sinks) = (d.sources(), d.sinks());
    for e in 0..d.ground_size() {
        let mut label = inst.label(e);
        if sources.contains(e) {
            label.push_str(" src");
        }
        if sinks.contains(e) {
            label.push_str(" snk");
        }
        let shape = if d.base().contains(e) { "box" } else { "ellipse" };
        writeln!(out, "  n{e} [label={}, shape={shape}];", quote(&label)).unwrap();
    }
    for arc in d.arcs() {
        let style = match arc.kind {
            ArcKind::First => "solid",
            ArcKind::Second => "dashed",
        };
        writeln!(out, "  n{} -> n{} [style={style}];", arc.from, arc.to).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the class poset, arrows pointing upwards.
pub fn class_poset_dot(inst: &Instance, poset: &ClassPoset) -> String {
    let mut out = String::from("digraph classes {\n  rankdir=BT;\n");
    let maximal = poset.maximal();
    for id in poset.ids() {
        let rep = inst.fmt_set(poset.representative(id));
        let label = format!("[{rep}] ({})", poset.class(id).members.len());
        let periph = if maximal.contains(&id) { 2 } else { 1 };
        writeln!(out, "  c{} [label={}, peripheries={periph}];", id.0, quote(&label)).unwrap();
    }
    for (a, b) in poset.covers() {
        writeln!(out, "  c{} -> c{};", a.0, b.0).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use mhl_core::ElementSet;

    #[test]
    fn p3match_digraph() {
        let inst = fixtures::p3match().resolve().unwrap();
        let d = ExchangeDigraph::build(&inst.m, &inst.n, ElementSet::from([0, 2])).unwrap();
        let dot = exchange_digraph_dot(&inst, &d);
        assert!(dot.contains("n1 -> n2 [style=solid];"), "{dot}");
        assert!(dot.contains("n0 -> n1 [style=dashed];"), "{dot}");
        assert!(dot.contains("label=\"e1\""), "{dot}");
        assert_eq!(dot.matches("->").count(), 2);
    }

    #[test]
    fn source_and_sink_annotations() {
        let inst = fixtures::star2().resolve().unwrap();
        let d = ExchangeDigraph::build(&inst.m, &inst.n, ElementSet::EMPTY).unwrap();
        let dot = exchange_digraph_dot(&inst, &d);
        assert!(dot.contains("label=\"e0 src snk\""), "{dot}");
    }

    #[test]
    fn hasse() {
        let inst = fixtures::pair_u().resolve().unwrap();
        let poset = ClassPoset::build(&inst.m, &inst.n).unwrap();
        let dot = class_poset_dot(&inst, &poset);
        assert!(dot.contains("c0 -> c1;"), "{dot}");
        assert!(dot.contains("peripheries=2"), "{dot}");
    }
}
