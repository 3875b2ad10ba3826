#![allow(dead_code)]

use mhl_core::{BitVector, ElementSet, Matroid, MatroidSpec, MinorKind};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn uniform(n: usize) -> BoxedStrategy<MatroidSpec> {
    (0..=n).prop_map(move |r| MatroidSpec::Uniform { n, r }).boxed()
}

fn partition(n: usize) -> BoxedStrategy<MatroidSpec> {
    (
        proptest::collection::vec(0..n.max(1), n),
        proptest::collection::vec(0..=3usize, n),
    )
        .prop_map(move |(block_of, caps)| {
            let mut blocks = vec![Vec::new(); n];
            for (e, &b) in block_of.iter().enumerate() {
                blocks[b].push(e);
            }
            let (blocks, capacities): (Vec<_>, Vec<_>) = blocks
                .into_iter()
                .zip(caps)
                .filter(|(b, _)| !b.is_empty())
                .map(|(b, c)| {
                    let c = c.min(b.len());
                    (b, c)
                })
                .unzip();
            MatroidSpec::Partition { blocks, capacities }
        })
        .boxed()
}

fn graphic(n: usize) -> BoxedStrategy<MatroidSpec> {
    (1..=n + 1)
        .prop_flat_map(move |v| {
            proptest::collection::vec((0..v, 0..v), n)
                .prop_map(move |edges| MatroidSpec::Graphic { vertex_count: v, edges })
        })
        .boxed()
}

fn gf2(n: usize) -> BoxedStrategy<MatroidSpec> {
    (1..=4usize)
        .prop_flat_map(move |dim| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), dim), n).prop_map(|cols| {
                MatroidSpec::LinearGf2 {
                    columns: cols.iter().map(|c| BitVector::from_bools(c)).collect(),
                }
            })
        })
        .boxed()
}

fn leaf(n: usize) -> BoxedStrategy<MatroidSpec> {
    prop_oneof![uniform(n), partition(n), graphic(n), gf2(n)].boxed()
}

/// Any spec on exactly `n` elements, minors and direct sums included.
pub fn spec(n: usize, depth: u32) -> BoxedStrategy<MatroidSpec> {
    if depth == 0 {
        return leaf(n);
    }
    let minor = (spec(n + 1, depth - 1), 0..=n, 0..4usize)
        .prop_map(move |(base, pick, kind)| {
            let kind = [MinorKind::Restrict, MinorKind::Delete, MinorKind::Contract, MinorKind::Dot][kind];
            let subset = match kind {
                MinorKind::Delete | MinorKind::Contract => vec![pick],
                MinorKind::Restrict | MinorKind::Dot => (0..=n).filter(|&e| e != pick).collect(),
            };
            MatroidSpec::Minor {
                base: Box::new(base),
                kind,
                subset,
            }
        })
        .boxed();
    if n >= 2 {
        let sum = (1..n)
            .prop_flat_map(move |k| (spec(k, depth - 1), spec(n - k, depth - 1)))
            .prop_map(|(l, r)| MatroidSpec::DirectSum {
                left: Box::new(l),
                right: Box::new(r),
            })
            .boxed();
        prop_oneof![3 => leaf(n), 1 => minor, 1 => sum].boxed()
    } else {
        prop_oneof![3 => leaf(n), 1 => minor].boxed()
    }
}

pub fn matroid(max_n: usize) -> impl Strategy<Value = Matroid> {
    (0..=max_n).prop_flat_map(|n| spec(n, 1)).prop_map(|s| Matroid::build(&s).expect("generated spec builds"))
}

pub fn pair(max_n: usize) -> impl Strategy<Value = (Matroid, Matroid)> {
    (0..=max_n)
        .prop_flat_map(|n| (spec(n, 1), spec(n, 1)))
        .prop_map(|(a, b)| (Matroid::build(&a).unwrap(), Matroid::build(&b).unwrap()))
}

/// Exhaustive rank of every subset, computed only from the independence
/// predicate.
pub struct Ranks {
    n: usize,
    r: Vec<u8>,
}

impl Ranks {
    pub fn new(m: &Matroid) -> Ranks {
        let n = m.ground_size();
        let mut r = vec![0u8; 1 << n];
        for mask in 1..(1u64 << n) {
            let s = ElementSet::from_bits(mask);
            r[mask as usize] = if m.is_independent(s).unwrap() {
                s.len() as u8
            } else {
                s.iter().map(|e| r[s.without(e).bits() as usize]).max().unwrap()
            };
        }
        Ranks { n, r }
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn rank(&self, s: ElementSet) -> usize {
        self.r[s.bits() as usize] as usize
    }

    pub fn indep(&self, s: ElementSet) -> bool {
        self.rank(s) == s.len()
    }

    pub fn closure(&self, s: ElementSet) -> ElementSet {
        self.ground().iter().filter(|&e| self.rank(s.with(e)) == self.rank(s)).collect()
    }

    pub fn contract_indep(&self, x: ElementSet, b: ElementSet) -> bool {
        b.is_disjoint(x) && self.rank(b | x) == b.len() + self.rank(x)
    }
}

pub fn common_independents(m: &Ranks, n: &Ranks) -> Vec<ElementSet> {
    m.ground().subsets().filter(|&s| m.indep(s) && n.indep(s)).collect()
}

/// Out-neighbourhood of `x` in the exchange digraph, from the definition.
pub fn out_arcs(m: &Ranks, n: &Ranks, i: ElementSet, x: usize) -> ElementSet {
    let circuit_members = |t: &Ranks, x: usize| -> ElementSet {
        // y is in C(x, I) iff I + x - y is independent.
        i.iter().filter(|&y| t.indep(i.with(x).without(y))).collect()
    };
    if !i.contains(x) {
        if m.closure(i).contains(x) {
            circuit_members(m, x)
        } else {
            ElementSet::EMPTY
        }
    } else {
        (m.ground() - i)
            .iter()
            .filter(|&z| n.closure(i).contains(z) && !n.indep(i.with(z)) && circuit_members(n, z).contains(x))
            .collect()
    }
}

pub fn reach(m: &Ranks, n: &Ranks, i: ElementSet, from: ElementSet) -> ElementSet {
    let mut seen = from;
    loop {
        let next = seen.iter().fold(seen, |acc, x| acc | out_arcs(m, n, i, x));
        if next == seen {
            return seen;
        }
        seen = next;
    }
}
