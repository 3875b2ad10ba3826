//! Seeded random instances.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha),
//! so a `(seed, family, ground_size)` triple always yields the same instance.

use mhl_core::{BitVector, MatroidSpec, MinorKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::InputError;
use crate::instance::InstanceFile;

pub const MAX_GENERATED_GROUND: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PartitionPair,
    GraphicPair,
    Gf2Pair,
    Mixed,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::PartitionPair,
        Family::GraphicPair,
        Family::Gf2Pair,
        Family::Mixed,
    ];
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn generate_instance(seed: u64, family: Family, ground_size: usize) -> Result<InstanceFile, InputError> {
    if ground_size > MAX_GENERATED_GROUND {
        return Err(InputError::Generator(format!(
            "ground size {ground_size} exceeds {MAX_GENERATED_GROUND}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let (m, n) = match family {
        Family::PartitionPair => (partition(&mut rng, ground_size), partition(&mut rng, ground_size)),
        Family::GraphicPair => (graphic(&mut rng, ground_size), graphic(&mut rng, ground_size)),
        Family::Gf2Pair => (gf2(&mut rng, ground_size), gf2(&mut rng, ground_size)),
        Family::Mixed => (mixed(&mut rng, ground_size, 2), mixed(&mut rng, ground_size, 2)),
    };
    Ok(InstanceFile {
        ground_size,
        labels: None,
        m,
        n,
    })
}

fn partition(rng: &mut ChaCha8Rng, n: usize) -> MatroidSpec {
    if n == 0 {
        return MatroidSpec::Partition {
            blocks: Vec::new(),
            capacities: Vec::new(),
        };
    }
    let k = rng.random_range(1..=n);
    let mut blocks = vec![Vec::new(); k];
    for e in 0..n {
        blocks[rng.random_range(0..k)].push(e);
    }
    blocks.retain(|b| !b.is_empty());
    let capacities = blocks
        .iter()
        .map(|b| {
            if rng.random_bool(0.1) {
                0
            } else {
                rng.random_range(1..=b.len())
            }
        })
        .collect();
    MatroidSpec::Partition { blocks, capacities }
}

fn graphic(rng: &mut ChaCha8Rng, n: usize) -> MatroidSpec {
    let vertex_count = if n == 0 { 1 } else { rng.random_range(2..=n + 1) };
    let edges = (0..n)
        .map(|_| (rng.random_range(0..vertex_count), rng.random_range(0..vertex_count)))
        .collect();
    MatroidSpec::Graphic { vertex_count, edges }
}

fn gf2(rng: &mut ChaCha8Rng, n: usize) -> MatroidSpec {
    let dim = rng.random_range(1..=n.clamp(1, 5));
    let columns = (0..n)
        .map(|_| {
            let bits: Vec<bool> = (0..dim).map(|_| rng.random_bool(0.5)).collect();
            BitVector::from_bools(&bits)
        })
        .collect();
    MatroidSpec::LinearGf2 { columns }
}

fn uniform(rng: &mut ChaCha8Rng, n: usize) -> MatroidSpec {
    MatroidSpec::Uniform {
        n,
        r: rng.random_range(0..=n),
    }
}

fn simple(rng: &mut ChaCha8Rng, n: usize) -> MatroidSpec {
    match rng.random_range(0..4) {
        0 => uniform(rng, n),
        1 => partition(rng, n),
        2 => graphic(rng, n),
        _ => gf2(rng, n),
    }
}

/// Random spec of any kind, including direct sums and minors, on exactly `n`
/// elements.
fn mixed(rng: &mut ChaCha8Rng, n: usize, depth: u32) -> MatroidSpec {
    let choice = if depth == 0 { 0 } else { rng.random_range(0..4) };
    match choice {
        1 if n >= 2 => {
            let split = rng.random_range(1..n);
            MatroidSpec::DirectSum {
                left: Box::new(mixed(rng, split, depth - 1)),
                right: Box::new(mixed(rng, n - split, depth - 1)),
            }
        }
        2 | 3 => {
            let extra = rng.random_range(1..=2);
            let base = mixed(rng, n + extra, depth - 1);
            let mut ids: Vec<usize> = (0..n + extra).collect();
            ids.shuffle(rng);
            let kind = [MinorKind::Restrict, MinorKind::Delete, MinorKind::Contract, MinorKind::Dot]
                [rng.random_range(0..4)];
            let mut subset = match kind {
                MinorKind::Restrict | MinorKind::Dot => ids[..n].to_vec(),
                MinorKind::Delete | MinorKind::Contract => ids[..extra].to_vec(),
            };
            subset.sort_unstable();
            MatroidSpec::Minor {
                base: Box::new(base),
                kind,
                subset,
            }
        }
        _ => simple(rng, n),
    }
}

/// A bipartite multigraph with `left` and `right` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    pub left: usize,
    pub right: usize,
    pub edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn random(seed: u64, max_side: usize, max_edges: usize) -> BipartiteGraph {
        let mut rng = rng_from_seed(seed);
        let left = rng.random_range(1..=max_side);
        let right = rng.random_range(1..=max_side);
        let count = rng.random_range(0..=max_edges);
        let edges = (0..count)
            .map(|_| (rng.random_range(0..left), rng.random_range(0..right)))
            .collect();
        BipartiteGraph { left, right, edges }
    }

    /// Edges as elements; `m` groups them by left endpoint, `n` by right.
    pub fn to_instance(&self) -> InstanceFile {
        let side = |count: usize, pick: fn(&(usize, usize)) -> usize| {
            let mut blocks = vec![Vec::new(); count];
            for (e, edge) in self.edges.iter().enumerate() {
                blocks[pick(edge)].push(e);
            }
            blocks.retain(|b: &Vec<usize>| !b.is_empty());
            let capacities = vec![1; blocks.len()];
            MatroidSpec::Partition { blocks, capacities }
        };
        InstanceFile {
            ground_size: self.edges.len(),
            labels: None,
            m: side(self.left, |e| e.0),
            n: side(self.right, |e| e.1),
        }
    }
}
