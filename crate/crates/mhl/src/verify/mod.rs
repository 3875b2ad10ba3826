//! The verification suite: every statement checked exhaustively on a seeded
//! corpus, with one pass/fail counter per statement.

pub mod checks;
pub mod oracle;

use std::collections::BTreeMap;

use rand::{Rng, RngCore};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::generate::{generate_instance, rng_from_seed, BipartiteGraph, Family};
use crate::instance::InstanceFile;
use checks::{Checker, Pair, Tally};
use oracle::RankTable;

/// Ground-size limits above which a group of checks is skipped.
pub const AXIOM_LIMIT: usize = 8;
pub const MINOR_LIMIT: usize = 6;
pub const BRUTE_LIMIT: usize = 10;
pub const PATH_LIMIT: usize = 8;
pub const ARC_LIMIT: usize = 7;
pub const LAB_LIMIT: usize = 6;

/// Every lemma key the suite can report, so that a key with no applicable
/// instance still shows up with zero checks.
pub const LEMMAS: &[&str] = &[
    "matroid_axioms",
    "rank_greedy",
    "closure_operator",
    "fundamental_circuit",
    "contraction_well_defined",
    "oracle_equivalence",
    "min_max",
    "main_theorem",
    "certificate_soundness",
    "bipartite_reduction",
    "augmentation_spans",
    "path_validity",
    "hereditariness",
    "arc_preservation",
    "fingerprint_law",
    "switching_characterization",
    "reachability_invariance",
    "augmentation_class_invariance",
    "reach_by_augmentation",
    "witness_i_x",
    "witness_negligible_hall",
    "witness_negligible_non_hall",
    "witness_s_spans_w",
    "witness_reach_spanned",
    "witness_monotone",
    "witness_reach_from_s",
    "stable_merge",
    "stable_chain_union",
    "negligible_definition",
    "negligible_matchable",
    "negligible_composition",
    "stable_reduction",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    pub max_ground: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub index: usize,
    pub seed: u64,
    pub family: Family,
    pub instance: InstanceFile,
    pub bipartite_seed: u64,
}

/// Instance `i` uses family `i mod 4`; its seed and ground size (uniform in
/// `0..=max_ground`) are drawn in order from the suite seed.
pub fn corpus(seed: u64, count: usize, max_ground: usize) -> Vec<CorpusEntry> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|index| {
            let family = Family::ALL[index % Family::ALL.len()];
            let ground = rng.random_range(0..=max_ground);
            let instance_seed = rng.next_u64();
            let bipartite_seed = rng.next_u64();
            CorpusEntry {
                index,
                seed: instance_seed,
                family,
                instance: generate_instance(instance_seed, family, ground).expect("ground within bounds"),
                bipartite_seed,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub lemma: String,
    pub instance_index: usize,
    pub instance: InstanceFile,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub lemmas: BTreeMap<String, Tally>,
    pub first_counterexample: Option<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.lemmas.values().all(|t| t.violations == 0)
    }
}

/// Runs every applicable check on one instance.
pub fn check_instance(file: &InstanceFile, bipartite_seed: Option<u64>) -> Checker {
    let mut c = Checker::default();
    let inst = file.resolve().expect("corpus instances resolve");
    let size = inst.ground_size();
    if let Some(seed) = bipartite_seed {
        checks::bipartite(&mut c, &BipartiteGraph::random(seed, 6, 12));
    }
    if size > BRUTE_LIMIT {
        return c;
    }
    let (tm, tn) = (RankTable::new(&inst.m), RankTable::new(&inst.n));
    let p = Pair {
        m: &inst.m,
        n: &inst.n,
        tm: &tm,
        tn: &tn,
    };
    if size <= AXIOM_LIMIT {
        for (which, m, t) in [("M", &inst.m, &tm), ("N", &inst.n, &tn)] {
            checks::matroid_axioms(&mut c, which, m);
            checks::rank_and_closure(&mut c, which, m, t);
            checks::circuits(&mut c, which, m, t);
            if size <= MINOR_LIMIT {
                checks::minors(&mut c, which, m, t);
            }
        }
    }
    checks::solver(&mut c, &p, size <= PATH_LIMIT);
    if size <= ARC_LIMIT {
        checks::arc_preservation(&mut c, &p);
        checks::fingerprint_law(&mut c, &p);
    }
    if size <= LAB_LIMIT {
        checks::hereditariness(&mut c, &p);
        let poset = mhl_core::lab::ClassPoset::build(&inst.m, &inst.n).expect("within enumeration limit");
        let hall = mhl_core::check_hall(&inst.m, &inst.n).unwrap().is_none();
        checks::classes(&mut c, &p, &poset);
        checks::witnesses(&mut c, &p, &poset, hall);
        checks::stable(&mut c, &p);
        checks::negligible(&mut c, &p);
        checks::stable_reduction(&mut c, &p, &poset);
    }
    c
}

/// Instances are checked in parallel; counters and the first counterexample
/// are merged in instance order, so the report depends only on the config.
pub fn run_suite(config: SuiteConfig) -> SuiteReport {
    let entries = corpus(config.seed, config.count, config.max_ground);
    let results: Vec<Checker> = entries
        .par_iter()
        .map(|e| check_instance(&e.instance, Some(e.bipartite_seed)))
        .collect();
    let mut lemmas: BTreeMap<String, Tally> = LEMMAS.iter().map(|&k| (k.to_string(), Tally::default())).collect();
    let mut first_counterexample = None;
    for (entry, result) in entries.iter().zip(results) {
        for (k, t) in result.tallies {
            let total = lemmas.entry(k.to_string()).or_default();
            total.checked += t.checked;
            total.violations += t.violations;
        }
        if first_counterexample.is_none() {
            if let Some((lemma, detail)) = result.first {
                first_counterexample = Some(Counterexample {
                    lemma: lemma.to_string(),
                    instance_index: entry.index,
                    instance: entry.instance.clone(),
                    detail,
                });
            }
        }
    }
    SuiteReport {
        config,
        lemmas,
        first_counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic() {
        assert_eq!(corpus(3, 12, 6), corpus(3, 12, 6));
        assert_ne!(corpus(3, 12, 6), corpus(4, 12, 6));
        assert!(corpus(3, 40, 6).iter().all(|e| e.instance.ground_size <= 6));
    }

    #[test]
    fn fixtures_pass_every_check() {
        for name in crate::fixtures::NAMES {
            let c = check_instance(&crate::fixtures::by_name(name).unwrap(), None);
            assert_eq!(c.violations(), 0, "{name}: {:?}", c.first);
        }
    }
}
