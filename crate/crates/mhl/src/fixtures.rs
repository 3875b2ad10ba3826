//! Named instances usable in place of a file path on the command line.

use mhl_core::MatroidSpec;

use crate::instance::InstanceFile;

fn labels(n: usize) -> Option<Vec<String>> {
    Some((0..n).map(|i| format!("e{i}")).collect())
}

fn unit_partition(blocks: Vec<Vec<usize>>) -> MatroidSpec {
    let capacities = vec![1; blocks.len()];
    MatroidSpec::Partition { blocks, capacities }
}

/// `M` has blocks `{e0},{e1,e2}`, `N` has blocks `{e0,e1},{e2}`, capacity one.
pub fn p3match() -> InstanceFile {
    InstanceFile {
        ground_size: 3,
        labels: labels(3),
        m: unit_partition(vec![vec![0], vec![1, 2]]),
        n: unit_partition(vec![vec![0, 1], vec![2]]),
    }
}

/// `M = U_{1,2}`, `N` free on two elements.
pub fn star2() -> InstanceFile {
    InstanceFile {
        ground_size: 2,
        labels: labels(2),
        m: MatroidSpec::Uniform { n: 2, r: 1 },
        n: MatroidSpec::Uniform { n: 2, r: 2 },
    }
}

/// `M = N = U_{1,2}`.
pub fn pair_u() -> InstanceFile {
    InstanceFile {
        ground_size: 2,
        labels: None,
        m: MatroidSpec::Uniform { n: 2, r: 1 },
        n: MatroidSpec::Uniform { n: 2, r: 1 },
    }
}

pub fn by_name(name: &str) -> Option<InstanceFile> {
    match name {
        "P3MATCH" => Some(p3match()),
        "STAR2" => Some(star2()),
        "PAIR-U" => Some(pair_u()),
        _ => None,
    }
}

pub const NAMES: &[&str] = &["P3MATCH", "STAR2", "PAIR-U"];
