mod common;

use std::collections::BTreeSet;

use common::{common_independents, config, pair, reach, Ranks};
use mhl_core::lab::{self, ClassPoset};
use mhl_core::{ElementSet, ExchangeDigraph, Matroid};
use proptest::prelude::*;

fn leq(tm: &Ranks, tn: &Ranks, i: ElementSet, j: ElementSet) -> bool {
    i.is_subset(tm.closure(j)) && i.is_subset(tn.closure(j))
}

fn negligible_by_definition(tm: &Ranks, tn: &Ranks, g: ElementSet) -> bool {
    let e = tm.ground();
    (e - g).subsets().all(|y| {
        let spans: Vec<ElementSet> = e
            .subsets()
            .filter(|&t| tm.contract_indep(y, t))
            .map(|t| tn.closure(t))
            .collect();
        g.subsets().all(|x| spans.iter().any(|&cl| x.is_subset(cl)))
    })
}

fn stable_by_definition(tm: &Ranks, tn: &Ranks, i: ElementSet) -> bool {
    (tm.ground() - i)
        .subsets()
        .filter(|&j| tm.contract_indep(i, j) && tn.indep(j))
        .all(|j| tn.contract_indep(i, j))
}

fn matchable(m: &Matroid, n: &Matroid) -> bool {
    let (tm, tn) = (Ranks::new(m), Ranks::new(n));
    let r = tn.rank(tn.ground());
    tm.ground().subsets().any(|s| s.len() == r && tm.indep(s) && tn.indep(s))
}

proptest! {
    #![proptest_config(config(100, 41))]

    #[test]
    fn fingerprint_law((m, n) in pair(7)) {
        let (tm, tn) = (Ranks::new(&m), Ranks::new(&n));
        let sets = common_independents(&tm, &tn);
        for &i in &sets {
            for &j in &sets {
                let same = lab::fingerprint(&m, &n, i).unwrap() == lab::fingerprint(&m, &n, j).unwrap();
                prop_assert_eq!(same, leq(&tm, &tn, i, j) && leq(&tm, &tn, j, i));
                prop_assert_eq!(lab::preorder_leq(&m, &n, i, j).unwrap(), leq(&tm, &tn, i, j));
            }
        }
    }

    #[test]
    fn classes_switching_and_reachability((m, n) in pair(6)) {
        let (tm, tn) = (Ranks::new(&m), Ranks::new(&n));
        let poset = ClassPoset::build(&m, &n).unwrap();
        let sets = common_independents(&tm, &tn);
        prop_assert_eq!(poset.classes().iter().map(|c| c.members.len()).sum::<usize>(), sets.len());
        for id in poset.ids() {
            let class = poset.class(id);
            let members: BTreeSet<ElementSet> = class.members.iter().copied().collect();
            for &i in &sets {
                let same = leq(&tm, &tn, i, class.representative) && leq(&tm, &tn, class.representative, i);
                prop_assert_eq!(members.contains(&i), same);
            }
            for &i in &members {
                prop_assert_eq!(&lab::switching_component(&m, &n, i).unwrap(), &members);
                for x in m.ground() {
                    let s = ElementSet::singleton(x);
                    prop_assert_eq!(reach(&tm, &tn, i, s), reach(&tm, &tn, class.representative, s));
                }
            }
            let up: BTreeSet<_> = poset.ids().filter(|&d| leq(&tm, &tn, class.representative, poset.representative(d))).collect();
            prop_assert_eq!(lab::augmentation_closure(&m, &n, class.representative).unwrap(), up);
        }
    }

    #[test]
    fn switching_cycles_keep_class((m, n) in pair(6)) {
        let (tm, tn) = (Ranks::new(&m), Ranks::new(&n));
        for i in common_independents(&tm, &tn) {
            for cycle in lab::find_switching_cycles(&m, &n, i).unwrap() {
                let j = lab::apply_switching_cycle(&m, &n, i, &cycle).unwrap();
                prop_assert!(tm.indep(j) && tn.indep(j));
                prop_assert_eq!((tm.closure(j), tn.closure(j)), (tm.closure(i), tn.closure(i)));
                prop_assert!(!i.contains(cycle.elements()[0]));
            }
        }
    }

    #[test]
    fn witness_soundness((m, n) in pair(6)) {
        let (tm, tn) = (Ranks::new(&m), Ranks::new(&n));
        let poset = ClassPoset::build(&m, &n).unwrap();
        for top in poset.maximal() {
            let ws = lab::compute_witnesses_in(&m, &n, &poset, Some(top)).unwrap();
            let up = |c| lab::up_in(&poset, &ws.directed_set, c);
            prop_assert!(negligible_by_definition(&tm, &tn, ws.g));
            prop_assert!(lab::is_negligible(&m, &n, ws.g).unwrap());
            prop_assert!(ws.w.is_subset(tm.closure(ws.s)));
            prop_assert_eq!(ws.s, ws.w & ws.span_n);
            for (&x, &cls) in &ws.i_x_class {
                for d in up(cls) {
                    for &i in &poset.class(d).members {
                        let r = reach(&tm, &tn, i, ElementSet::singleton(x));
                        prop_assert!(r.is_subset(tm.closure(i & r)));
                        prop_assert!(r.is_subset(ws.w));
                        let dg = ExchangeDigraph::build(&m, &n, i).unwrap();
                        prop_assert!(dg.augmenting_paths(Some(ElementSet::singleton(x))).is_empty());
                    }
                    for e in up(d) {
                        let (rd, re) = (
                            reach(&tm, &tn, poset.representative(d), ElementSet::singleton(x)),
                            reach(&tm, &tn, poset.representative(e), ElementSet::singleton(x)),
                        );
                        prop_assert!(rd.is_subset(re));
                    }
                }
            }
            for (&y, &(x, j)) in &ws.pairs {
                prop_assert!(reach(&tm, &tn, j, ElementSet::singleton(x)).contains(y));
                let jc = poset.class_of(&m, &n, j).unwrap();
                for d in up(jc) {
                    prop_assert!(reach(&tm, &tn, poset.representative(d), ElementSet::singleton(y)).is_subset(ws.w));
                }
            }
        }
    }

    #[test]
    fn stable_sets_and_merge((m, n) in pair(6)) {
        let (tm, tn) = (Ranks::new(&m), Ranks::new(&n));
        let expected: Vec<ElementSet> = common_independents(&tm, &tn)
            .into_iter()
            .filter(|&i| stable_by_definition(&tm, &tn, i))
            .collect();
        let mut all = lab::stable_sets(&m, &n).unwrap();
        all.sort();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        prop_assert_eq!(&all, &expected_sorted);
        let merged = lab::merge_stable(&m, &n, &all).unwrap();
        let union = all.iter().fold(ElementSet::EMPTY, |u, &s| u | s);
        prop_assert!(stable_by_definition(&tm, &tn, merged));
        prop_assert!(merged.is_subset(union) && union.is_subset(tm.closure(merged)));
    }

    #[test]
    fn negligible_sets((m, n) in pair(5)) {
        let (tm, tn) = (Ranks::new(&m), Ranks::new(&n));
        let e = m.ground();
        let negligible: Vec<ElementSet> = e.subsets().filter(|&g| negligible_by_definition(&tm, &tn, g)).collect();
        for g in e.subsets() {
            prop_assert_eq!(lab::is_negligible(&m, &n, g).unwrap(), negligible.contains(&g), "G = {}", g);
        }
        let max = lab::maximal_negligible(&m, &n).unwrap();
        prop_assert!(negligible.contains(&max));
        prop_assert!((e - max).iter().all(|x| !negligible.contains(&max.with(x))));
        let whole = matchable(&m, &n);
        for &g in &negligible {
            let rest = e - g;
            let (mg, ng) = (m.delete(g).unwrap(), n.contract(g).unwrap());
            if matchable(&mg, &ng) {
                prop_assert!(whole, "G = {}", g);
            }
            for g2 in rest.subsets() {
                if lab::is_negligible(&mg, &ng, g2.compress(rest)).unwrap() {
                    prop_assert!(negligible.contains(&(g | g2)), "G = {}, G' = {}", g, g2);
                }
            }
        }
    }
}

#[test]
fn examples() {
    let u = Matroid::uniform(2, 1).unwrap();
    assert_eq!(lab::maximal_negligible(&u, &u).unwrap(), ElementSet::full(2));
    assert!(lab::is_stable(&u, &u, ElementSet::from([0])).unwrap());
    let free = Matroid::free(2).unwrap();
    assert!(!lab::is_stable(&free, &u, ElementSet::from([0])).unwrap());
    assert_eq!(
        lab::merge_stable(&u, &u, &[ElementSet::from([0]), ElementSet::from([1])]).unwrap(),
        ElementSet::from([0])
    );
}
