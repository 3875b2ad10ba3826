//! One function per group of statements. Each records its outcome in a
//! [`Checker`] under a fixed lemma key.

use std::collections::{BTreeMap, BTreeSet};

use mhl_core::lab::{self, ClassId, ClassPoset};
use mhl_core::{ElementSet, ExchangeDigraph, HallCertificate, Matroid};

use super::oracle::{self, RankTable};
use crate::generate::BipartiteGraph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Tally {
    pub checked: u64,
    pub violations: u64,
}

#[derive(Default)]
pub struct Checker {
    pub tallies: BTreeMap<&'static str, Tally>,
    pub first: Option<(&'static str, String)>,
}

impl Checker {
    pub fn record(&mut self, lemma: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let t = self.tallies.entry(lemma).or_default();
        t.checked += 1;
        if !ok {
            t.violations += 1;
            if self.first.is_none() {
                self.first = Some((lemma, detail()));
            }
        }
    }

    /// A library error where none is expected counts as a violation.
    pub fn ok<T>(&mut self, lemma: &'static str, r: mhl_core::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.record(lemma, false, || format!("library error: {e}"));
                None
            }
        }
    }

    pub fn violations(&self) -> u64 {
        self.tallies.values().map(|t| t.violations).sum()
    }
}

/// Both matroids with their rank tables.
pub struct Pair<'a> {
    pub m: &'a Matroid,
    pub n: &'a Matroid,
    pub tm: &'a RankTable,
    pub tn: &'a RankTable,
}

impl Pair<'_> {
    fn ground(&self) -> ElementSet {
        self.m.ground()
    }

    fn common(&self, s: ElementSet) -> bool {
        self.tm.indep(s) && self.tn.indep(s)
    }

    fn reach(&self, i: ElementSet, x: usize) -> ElementSet {
        ExchangeDigraph::build(self.m, self.n, i)
            .expect("common independent")
            .reachable_from(ElementSet::singleton(x))
    }
}

pub fn matroid_axioms(c: &mut Checker, which: &str, m: &Matroid) {
    let ground = m.ground();
    let indep: Vec<ElementSet> = ground.subsets().filter(|&s| m.is_independent(s).unwrap()).collect();
    c.record("matroid_axioms", m.is_independent(ElementSet::EMPTY).unwrap(), || {
        format!("{which}: empty set is dependent")
    });
    for &s in &indep {
        for e in s {
            c.record("matroid_axioms", m.is_independent(s.without(e)).unwrap(), || {
                format!("{which}: {s} independent but {} is not", s.without(e))
            });
        }
    }
    for &i in &indep {
        for &j in &indep {
            if i.len() < j.len() {
                let ok = (j - i).iter().any(|e| m.is_independent(i.with(e)).unwrap());
                c.record("matroid_axioms", ok, || {
                    format!("{which}: no element of {j} extends {i}")
                });
            }
        }
    }
}

pub fn rank_and_closure(c: &mut Checker, which: &str, m: &Matroid, t: &RankTable) {
    for s in m.ground().subsets() {
        let r = m.rank(s).unwrap();
        let b = m.base_of(s).unwrap();
        c.record(
            "rank_greedy",
            r == t.rank(s) && b.is_subset(s) && b.len() == r && t.indep(b),
            || format!("{which}: rank({s}) = {r}, base {b}, exhaustive rank {}", t.rank(s)),
        );
        let cl = m.closure(s).unwrap();
        let ok = cl == t.closure(s)
            && s.is_subset(cl)
            && m.closure(cl).unwrap() == cl
            && (m.ground() - s).iter().all(|e| cl.is_subset(m.closure(s.with(e)).unwrap()));
        c.record("closure_operator", ok, || format!("{which}: closure of {s} is {cl}"));
    }
}

pub fn circuits(c: &mut Checker, which: &str, m: &Matroid, t: &RankTable) {
    for i in m.ground().subsets().filter(|&s| t.indep(s)) {
        for e in m.ground() - i {
            let dependent = !t.indep(i.with(e));
            match m.fundamental_circuit(e, i) {
                Ok(circ) => {
                    // Unique circuit: every dependent subset of I + e contains it.
                    let ok = dependent
                        && circ.contains(e)
                        && circ.is_subset(i.with(e))
                        && !t.indep(circ)
                        && circ.iter().all(|y| t.indep(circ.without(y)))
                        && i.with(e)
                            .subsets()
                            .filter(|&d| !t.indep(d))
                            .all(|d| circ.is_subset(d));
                    c.record("fundamental_circuit", ok, || {
                        format!("{which}: circuit of {e} in {i} reported as {circ}")
                    });
                }
                Err(_) => c.record("fundamental_circuit", !dependent, || {
                    format!("{which}: {i} + {e} is dependent but no circuit was returned")
                }),
            }
        }
    }
}

/// Minors against the rank-based definitions, and contraction against every
/// base of the contracted set.
pub fn minors(c: &mut Checker, which: &str, m: &Matroid, t: &RankTable) {
    let ground = m.ground();
    for x in ground.subsets() {
        let rest = ground - x;
        let (Some(con), Some(del), Some(res), Some(dot)) = (
            c.ok("contraction_well_defined", m.contract(x)),
            c.ok("contraction_well_defined", m.delete(x)),
            c.ok("contraction_well_defined", m.restrict(x)),
            c.ok("contraction_well_defined", m.dot(x)),
        ) else {
            continue;
        };
        let bases: Vec<ElementSet> = x
            .subsets()
            .filter(|&b| b.len() == t.rank(x) && t.indep(b))
            .collect();
        for i in rest.subsets() {
            let got = con.is_independent(i.compress(rest)).unwrap();
            let ok = bases.iter().all(|&b| t.indep(i | b) == got)
                && got == t.contract_indep(x, i)
                && del.is_independent(i.compress(rest)).unwrap() == t.indep(i);
            c.record("contraction_well_defined", ok, || {
                format!("{which}: {i} in contraction by {x}: oracle says {got}")
            });
        }
        for i in x.subsets() {
            let ok = res.is_independent(i.compress(x)).unwrap() == t.indep(i)
                && dot.is_independent(i.compress(x)).unwrap() == t.contract_indep(rest, i);
            c.record("contraction_well_defined", ok, || {
                format!("{which}: {i} in restriction or dot minor on {x}")
            });
        }
    }
}

/// Checks every augmentation of a solver run: postconditions recomputed from
/// the rank tables, and the chosen path is a shortest augmenting path.
fn check_run(c: &mut Checker, p: &Pair, run: &mhl_core::IntersectionRun, enumerate_paths: bool) {
    for aug in &run.augmentations {
        let (before, after) = (aug.before, aug.after);
        let (start, end) = (aug.path.start(), aug.path.end());
        let ok = after == before ^ aug.path.as_set()
            && after.len() == before.len() + 1
            && p.common(after)
            && p.tm.closure(after) == p.tm.closure(before.with(end))
            && p.tn.closure(after) == p.tn.closure(before.with(start));
        c.record("augmentation_spans", ok, || {
            format!("augmenting {before} along {:?} gave {after}", aug.path.elements())
        });
        if enumerate_paths {
            let d = ExchangeDigraph::build(p.m, p.n, before).unwrap();
            let all = d.augmenting_paths(None);
            let shortest = all.iter().map(|q| q.elements().len()).min();
            let ok = d.validate_path(&aug.path).is_ok()
                && all.contains(&aug.path)
                && shortest == Some(aug.path.elements().len());
            c.record("path_validity", ok, || {
                format!("path {:?} for {before} is not a shortest augmenting path", aug.path.elements())
            });
        }
    }
}

pub fn solver(c: &mut Checker, p: &Pair, enumerate_paths: bool) {
    let Some(run) = c.ok("oracle_equivalence", mhl_core::run_intersection(p.m, p.n)) else {
        return;
    };
    let best = oracle::max_common(p.tm, p.tn);
    c.record("oracle_equivalence", run.set.len() == best && p.common(run.set), || {
        format!("solver found {} of size {}, exhaustive maximum {best}", run.set, run.set.len())
    });
    check_run(c, p, &run, enumerate_paths);

    let bound = oracle::min_max(p.tm, p.tn);
    if let Some(cert) = c.ok("min_max", mhl_core::min_max_certificate(p.m, p.n)) {
        let value = p.tm.rank(cert.cut) + p.tn.rank(p.ground() - cert.cut);
        c.record("min_max", cert.size == bound && value == cert.size, || {
            format!(
                "size {}, cut {} with value {value}, exhaustive minimum {bound}",
                cert.size, cert.cut
            )
        });
    }

    let hall = c.ok("main_theorem", mhl_core::check_hall(p.m, p.n));
    let verdict = c.ok("main_theorem", mhl_core::is_matchable(p.m, p.n));
    let (Some(hall), Some(verdict)) = (hall, verdict) else {
        return;
    };
    let brute_hall = oracle::hall_holds(p.tm, p.tn);
    let brute_matchable = oracle::matchable(p.tm, p.tn);
    c.record(
        "main_theorem",
        hall.is_none() == verdict.is_matchable()
            && hall.is_none() == brute_hall
            && verdict.is_matchable() == brute_matchable,
        || {
            format!(
                "check_hall {hall:?}, verdict {verdict:?}, exhaustive Hall {brute_hall}, exhaustive matchable {brute_matchable}"
            )
        },
    );
    if let Some(x) = hall {
        c.record(
            "certificate_soundness",
            oracle::violates_hall(p.tm, p.tn, x) && p.tm.rank(x) < p.tn.dot_rank(x),
            || format!("reported Hall violator {x} does not violate"),
        );
    }
    match verdict {
        HallCertificate::Matchable { base } => c.record(
            "certificate_soundness",
            p.common(base) && base.len() == p.tn.rank(p.ground()),
            || format!("matchable base {base} is not an M-independent N-base"),
        ),
        HallCertificate::Blocked {
            cut,
            rank_m,
            rank_n_dot,
        } => c.record(
            "certificate_soundness",
            rank_m == p.tm.rank(cut) && rank_n_dot == p.tn.dot_rank(cut) && rank_m < rank_n_dot,
            || format!("blocked cut {cut}: reported {rank_m} < {rank_n_dot}"),
        ),
    }
}

pub fn bipartite(c: &mut Checker, g: &BipartiteGraph) {
    let inst = g.to_instance().resolve().expect("bipartite instance resolves");
    let Some(run) = c.ok("bipartite_reduction", mhl_core::run_intersection(&inst.m, &inst.n)) else {
        return;
    };
    let best = oracle::max_matching(&g.edges);
    c.record("bipartite_reduction", run.set.len() == best, || {
        format!("solver size {} on {:?}, maximum matching {best}", run.set.len(), g)
    });
    let (tm, tn) = (RankTable::new(&inst.m), RankTable::new(&inst.n));
    let p = Pair {
        m: &inst.m,
        n: &inst.n,
        tm: &tm,
        tn: &tn,
    };
    check_run(c, &p, &run, false);
}

pub fn hereditariness(c: &mut Checker, p: &Pair) {
    if mhl_core::check_hall(p.m, p.n).unwrap().is_some() {
        return;
    }
    for x in p.ground().subsets() {
        let minor = p.m.delete(x).and_then(|m| Ok((m, p.n.contract(x)?)));
        let Some((m, n)) = c.ok("hereditariness", minor) else {
            continue;
        };
        let kept = mhl_core::check_hall(&m, &n).unwrap();
        c.record("hereditariness", kept.is_none(), || {
            format!("Hall fails after deleting and contracting {x}: violator {kept:?} in minor coordinates")
        });
    }
}

pub fn arc_preservation(c: &mut Checker, p: &Pair) {
    let sets = lab::enumerate_common_independents(p.m, p.n).unwrap();
    for i in sets {
        let d = ExchangeDigraph::build(p.m, p.n, i).unwrap();
        for path in d.augmenting_paths(None) {
            let Some(j) = c.ok("arc_preservation", mhl_core::apply_augmentation(p.m, p.n, i, &path)) else {
                continue;
            };
            let d2 = ExchangeDigraph::build(p.m, p.n, j).unwrap();
            let ps = path.as_set();
            for x in p.ground() {
                let out = d.out_neighbors(x);
                if !(out.with(x) & ps).is_empty() {
                    continue;
                }
                c.record("arc_preservation", out.is_subset(d2.out_neighbors(x)), || {
                    format!(
                        "out-arcs of {x} in D({i}) are {out}, in D({j}) after {:?} they are {}",
                        path.elements(),
                        d2.out_neighbors(x)
                    )
                });
            }
        }
    }
}

/// Equal fingerprints exactly when each set lies in both spans of the other.
pub fn fingerprint_law(c: &mut Checker, p: &Pair) {
    let sets = lab::enumerate_common_independents(p.m, p.n).unwrap();
    let brute_leq = |i: ElementSet, j: ElementSet| i.is_subset(p.tm.closure(j)) && i.is_subset(p.tn.closure(j));
    for &i in &sets {
        for &j in &sets {
            let same = lab::fingerprint(p.m, p.n, i).unwrap() == lab::fingerprint(p.m, p.n, j).unwrap();
            let leq = lab::preorder_leq(p.m, p.n, i, j).unwrap();
            c.record(
                "fingerprint_law",
                same == (brute_leq(i, j) && brute_leq(j, i)) && leq == brute_leq(i, j),
                || format!("{i} vs {j}: same fingerprint {same}, preorder {leq}"),
            );
        }
    }
}

/// Switching components, reachability and augmentation closure per class.
pub fn classes(c: &mut Checker, p: &Pair, poset: &ClassPoset) {
    let full = p.ground();
    for id in poset.ids() {
        let class = poset.class(id);
        let rep = class.representative;
        let members: BTreeSet<ElementSet> = class.members.iter().copied().collect();
        if let Some(comp) = c.ok("switching_characterization", lab::switching_component(p.m, p.n, rep)) {
            c.record("switching_characterization", comp == members, || {
                format!("switching component of {rep} is {comp:?}, class is {members:?}")
            });
        }

        let d_rep = ExchangeDigraph::build(p.m, p.n, rep).unwrap();
        let rep_aug = xy_augmentations(p, &d_rep);
        for &j in &members {
            let d_j = ExchangeDigraph::build(p.m, p.n, j).unwrap();
            for x in full {
                let (a, b) = (d_rep.reachable_from(ElementSet::singleton(x)), d_j.reachable_from(ElementSet::singleton(x)));
                c.record("reachability_invariance", a == b, || {
                    format!("E({x}, {rep}) = {a} but E({x}, {j}) = {b}")
                });
            }
            let j_aug = xy_augmentations(p, &d_j);
            c.record("augmentation_class_invariance", j_aug == rep_aug, || {
                format!("xy-augmentations of {rep} and {j} lead to different classes")
            });
        }

        if let Some(reached) = c.ok("reach_by_augmentation", poset.augmentation_closure(p.m, p.n, rep)) {
            let up: BTreeSet<ClassId> = poset.up_set(id).into_iter().collect();
            c.record("reach_by_augmentation", reached == up, || {
                format!("augmentation closure of {rep} is {reached:?}, up-set is {up:?}")
            });
        }
    }
}

/// For every pair `(x, y)`, the fingerprint reached by the first
/// `xy`-augmenting path, if any.
fn xy_augmentations(p: &Pair, d: &ExchangeDigraph) -> BTreeMap<(usize, usize), (ElementSet, ElementSet)> {
    let mut out = BTreeMap::new();
    for x in d.sources() {
        for y in d.sinks() {
            let path = d.shortest_augmenting_path(Some(ElementSet::singleton(x)), Some(ElementSet::singleton(y)));
            if let Some(path) = path {
                let j = d.base() ^ path.as_set();
                out.insert((x, y), (p.tm.closure(j), p.tn.closure(j)));
            }
        }
    }
    out
}

/// Exhaustive form of the definition: every `X` inside `g` and `Y` outside
/// it admit an `M/Y`-independent set that `N`-spans `X`.
pub fn negligible_by_definition(p: &Pair, g: ElementSet) -> bool {
    let outside = p.ground() - g;
    let witnesses: Vec<(ElementSet, ElementSet)> = p
        .ground()
        .subsets()
        .map(|t| (t, p.tn.closure(t)))
        .collect();
    outside.subsets().all(|y| {
        let spans: Vec<ElementSet> = witnesses
            .iter()
            .filter(|(t, _)| p.tm.contract_indep(y, *t))
            .map(|&(_, cl)| cl)
            .collect();
        g.subsets().all(|x| spans.iter().any(|cl| x.is_subset(*cl)))
    })
}

pub fn witnesses(c: &mut Checker, p: &Pair, poset: &ClassPoset, hall: bool) {
    let negligible_key = if hall {
        "witness_negligible_hall"
    } else {
        "witness_negligible_non_hall"
    };
    for top in poset.maximal() {
        let Some(ws) = c.ok("witness_i_x", lab::compute_witnesses_in(p.m, p.n, poset, Some(top))) else {
            continue;
        };
        let up = |cls: ClassId| lab::up_in(poset, &ws.directed_set, cls);
        let members = |cls: ClassId| poset.class(cls).members.clone();

        // The down-set is closed downwards and its top spans are unions.
        let down_ok = poset.ids().all(|d| poset.leq(d, top) == ws.contains_class(d));
        c.record("witness_i_x", down_ok, || format!("directed set of {top:?} is not its down-set"));

        for (&x, &cls) in &ws.i_x_class {
            let no_aug = up(cls).into_iter().all(|d| {
                members(d).iter().all(|&i| {
                    let dg = ExchangeDigraph::build(p.m, p.n, i).unwrap();
                    dg.augmenting_paths(Some(ElementSet::singleton(x))).is_empty()
                })
            });
            c.record("witness_i_x", no_aug && !ws.span_n.contains(x), || {
                format!("I_{x} = {} admits an {x}-augmentation above it", ws.i_x[&x])
            });
        }

        let g_neg = lab::is_negligible(p.m, p.n, ws.g).unwrap();
        let by_def = negligible_by_definition(p, ws.g);
        c.record(negligible_key, g_neg && by_def, || {
            format!("G = {} for {top:?}: negligible {g_neg}, by definition {by_def}", ws.g)
        });

        c.record("witness_s_spans_w", ws.w.is_subset(p.tm.closure(ws.s)), || {
            format!("W = {} not spanned by S = {}", ws.w, ws.s)
        });

        for (&x, &cls) in &ws.i_x_class {
            let above = up(cls);
            for &d in &above {
                for i in members(d) {
                    let r = p.reach(i, x);
                    c.record("witness_reach_spanned", r.is_subset(p.tm.closure(i & r)), || {
                        format!("E({x}, {i}) = {r} not spanned by its part in {i}")
                    });
                }
            }
            for &a in &above {
                for &b in &above {
                    if poset.leq(a, b) {
                        let (ra, rb) = (p.reach(poset.representative(a), x), p.reach(poset.representative(b), x));
                        c.record("witness_monotone", ra.is_subset(rb), || {
                            format!("E({x}, .) shrinks from {ra} to {rb} along the preorder")
                        });
                    }
                }
                // Single augmentations staying inside the up-set.
                for i in members(a) {
                    let r = p.reach(i, x);
                    let dg = ExchangeDigraph::build(p.m, p.n, i).unwrap();
                    for path in dg.augmenting_paths(None) {
                        let j = i ^ path.as_set();
                        let jc = poset.class_of(p.m, p.n, j).unwrap();
                        if !above.contains(&jc) {
                            continue;
                        }
                        let rj = p.reach(j, x);
                        c.record("witness_monotone", r.is_subset(rj) && (r & i) == (r & j), || {
                            format!("E({x}, {i}) = {r}, E({x}, {j}) = {rj}")
                        });
                    }
                }
            }
        }

        for y in ws.s {
            let Some(&(x, j)) = ws.pairs.get(&y) else {
                c.record("witness_reach_from_s", false, || format!("no pair recorded for {y}"));
                continue;
            };
            let jc = poset.class_of(p.m, p.n, j).unwrap();
            let mut ok = p.reach(j, x).contains(y) && ws.contains_class(jc);
            for d in up(jc) {
                for k in members(d) {
                    ok &= p.reach(k, y).is_subset(ws.w);
                }
            }
            c.record("witness_reach_from_s", ok, || {
                format!("pair ({x}, {j}) for {y}: reach check failed against W = {}", ws.w)
            });
        }
    }
}

fn stable_by_definition(p: &Pair, i: ElementSet) -> bool {
    (p.ground() - i)
        .subsets()
        .filter(|&j| p.tm.contract_indep(i, j) && p.tn.indep(j))
        .all(|j| p.tn.contract_indep(i, j))
}

pub fn stable(c: &mut Checker, p: &Pair) {
    let Some(all) = c.ok("stable_merge", lab::stable_sets(p.m, p.n)) else {
        return;
    };
    let brute: Vec<ElementSet> = lab::enumerate_common_independents(p.m, p.n)
        .unwrap()
        .into_iter()
        .filter(|&i| stable_by_definition(p, i))
        .collect();
    c.record("stable_merge", all == brute, || {
        format!("stable sets {all:?}, by definition {brute:?}")
    });
    let mut families: Vec<Vec<ElementSet>> = vec![all.clone()];
    for (k, &a) in all.iter().enumerate() {
        for &b in &all[k..] {
            families.push(vec![a, b]);
        }
    }
    for family in families {
        let union = family.iter().fold(ElementSet::EMPTY, |u, &s| u | s);
        if let Some(merged) = c.ok("stable_merge", lab::merge_stable(p.m, p.n, &family)) {
            let ok = merged.is_subset(union)
                && p.common(merged)
                && stable_by_definition(p, merged)
                && union.is_subset(p.tm.closure(merged));
            c.record("stable_merge", ok, || format!("merging {family:?} gave {merged}"));
        }
    }
    for &a in &all {
        for &b in &all {
            if a.is_subset(b) {
                c.record("stable_chain_union", stable_by_definition(p, a | b), || {
                    format!("union of the chain {a} <= {b} is not stable")
                });
            }
        }
    }
}

pub fn negligible(c: &mut Checker, p: &Pair) {
    let ground = p.ground();
    let matchable = oracle::matchable(p.tm, p.tn);
    let negligible: Vec<ElementSet> = ground
        .subsets()
        .filter(|&g| lab::is_negligible(p.m, p.n, g).unwrap())
        .collect();
    for g in ground.subsets() {
        let fast = negligible.contains(&g);
        let by_def = negligible_by_definition(p, g);
        // Dual form: M.G has an independent set spanning N | G.
        let dual = {
            let (mg, ng) = (p.m.dot(g).unwrap(), p.n.restrict(g).unwrap());
            mhl_core::is_matchable(&mg, &ng).unwrap().is_matchable()
        };
        c.record("negligible_definition", fast == by_def && fast == dual, || {
            format!("{g}: extreme check {fast}, definition {by_def}, matchable dot/restriction {dual}")
        });
    }

    let max = lab::maximal_negligible(p.m, p.n).unwrap();
    let maximal = negligible.contains(&max) && (ground - max).iter().all(|e| !negligible.contains(&max.with(e)));
    c.record("negligible_definition", maximal, || format!("{max} is not a maximal negligible set"));

    for &g in &negligible {
        let rest = ground - g;
        let (mg, ng) = (p.m.delete(g).unwrap(), p.n.contract(g).unwrap());
        let minor_matchable = mhl_core::is_matchable(&mg, &ng).unwrap().is_matchable();
        if minor_matchable {
            c.record("negligible_matchable", matchable, || {
                format!("{g} negligible, minor matchable, but the pair is not")
            });
        }
        for g2 in rest.subsets() {
            if lab::is_negligible(&mg, &ng, g2.compress(rest)).unwrap() {
                let union = g | g2;
                c.record("negligible_composition", negligible.contains(&union), || {
                    format!("{g} then {g2} negligible, union is not")
                });
            }
        }
    }
}

/// On instances whose only negligible set is empty, the witness `S` spans
/// `E` and is covered by spans of stable sets of the restrictions to `S`.
pub fn stable_reduction(c: &mut Checker, p: &Pair, poset: &ClassPoset) {
    if lab::maximal_negligible(p.m, p.n).unwrap() != ElementSet::EMPTY {
        return;
    }
    for top in poset.maximal() {
        let ws = lab::compute_witnesses_in(p.m, p.n, poset, Some(top)).unwrap();
        let s = ws.s;
        let spanning = p.tm.closure(s) == p.ground();
        let (ms, ns) = (p.m.restrict(s).unwrap(), p.n.restrict(s).unwrap());
        let covered = lab::stable_sets(&ms, &ns)
            .unwrap()
            .into_iter()
            .fold(ElementSet::EMPTY, |acc, i| acc | p.tm.closure(i.expand(s)));
        c.record("stable_reduction", spanning && s.is_subset(covered), || {
            format!("S = {s} for {top:?}: M-spanning {spanning}, covered by stable spans {covered}")
        });
    }
}
