#![allow(dead_code)]

use mhl_core::{ElementSet, Matroid};

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

pub fn dot_rank(n: &Ranks, x: ElementSet) -> usize {
    let outside = n.ground() - x;
    x.subsets()
        .filter(|&t| n.contract_indep(outside, t))
        .map(ElementSet::len)
        .max()
        .unwrap_or(0)
}

pub fn violates_hall(m: &Ranks, n: &Ranks, x: ElementSet) -> bool {
    let outside = n.ground() - x;
    let both = |t: ElementSet| m.indep(t) && n.contract_indep(outside, t);
    let m_side = x.subsets().any(|t| both(t) && t.len() == m.rank(x));
    let n_side = x.subsets().any(|t| both(t) && t.len() == dot_rank(n, x));
    m_side && !n_side
}

pub fn matchable(m: &Ranks, n: &Ranks) -> bool {
    let r = n.rank(n.ground());
    m.ground().subsets().any(|s| s.len() == r && m.indep(s) && n.indep(s))
}

pub fn negligible(m: &Ranks, n: &Ranks, g: ElementSet) -> bool {
    let e = m.ground();
    (e - g).subsets().all(|y| {
        let spans: Vec<ElementSet> = e
            .subsets()
            .filter(|&t| m.contract_indep(y, t))
            .map(|t| n.closure(t))
            .collect();
        g.subsets().all(|x| spans.iter().any(|&cl| x.is_subset(cl)))
    })
}

pub fn stable(m: &Ranks, n: &Ranks, i: ElementSet) -> bool {
    (m.ground() - i)
        .subsets()
        .filter(|&j| m.contract_indep(i, j) && n.indep(j))
        .all(|j| n.contract_indep(i, j))
}

pub fn max_matching(edges: &[(usize, usize)]) -> usize {
    let k = edges.len();
    (0u64..1 << k)
        .filter(|&mask| {
            let chosen: Vec<_> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            chosen
                .iter()
                .enumerate()
                .all(|(a, p)| chosen[a + 1..].iter().all(|q| p.0 != q.0 && p.1 != q.1))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
