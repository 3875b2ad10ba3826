//! Brute-force reference computations. Nothing here goes through the greedy
//! rank, the exchange digraph or the solver; everything is derived from the
//! independence predicate by exhaustive search.

use mhl_core::{ElementSet, Matroid};

/// Rank of every subset, from `r(S) = |S|` if `S` is independent and
/// `max_e r(S - e)` otherwise.
pub struct RankTable {
    ground_size: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    pub fn new(m: &Matroid) -> RankTable {
        let n = m.ground_size();
        assert!(n <= 20, "rank table over {n} elements");
        let mut ranks = vec![0u8; 1 << n];
        for mask in 1..(1u64 << n) {
            let s = ElementSet::from_bits(mask);
            ranks[mask as usize] = if m.is_independent(s).expect("in range") {
                s.len() as u8
            } else {
                s.iter().map(|e| ranks[s.without(e).bits() as usize]).max().unwrap_or(0)
            };
        }
        RankTable { ground_size: n, ranks }
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.ground_size)
    }

    pub fn rank(&self, s: ElementSet) -> usize {
        self.ranks[s.bits() as usize] as usize
    }

    pub fn indep(&self, s: ElementSet) -> bool {
        self.rank(s) == s.len()
    }

    pub fn closure(&self, s: ElementSet) -> ElementSet {
        let r = self.rank(s);
        self.ground().iter().filter(|&e| self.rank(s.with(e)) == r).collect()
    }

    /// Independence of `b` in the contraction by `x`, via rank: `b` is
    /// independent in `M / X` iff `r(B | X) = |B| + r(X)`.
    pub fn contract_indep(&self, x: ElementSet, b: ElementSet) -> bool {
        b.is_disjoint(x) && self.rank(b | x) == b.len() + self.rank(x)
    }

    /// Rank of `x` in `M . X`, i.e. the largest `M / (E \ X)`-independent
    /// subset of `x`.
    pub fn dot_rank(&self, x: ElementSet) -> usize {
        let outside = self.ground() - x;
        x.subsets()
            .filter(|&t| self.contract_indep(outside, t))
            .map(ElementSet::len)
            .max()
            .unwrap_or(0)
    }
}

pub fn max_common(m: &RankTable, n: &RankTable) -> usize {
    m.ground()
        .subsets()
        .filter(|&s| m.indep(s) && n.indep(s))
        .map(ElementSet::len)
        .max()
        .unwrap_or(0)
}

pub fn min_max(m: &RankTable, n: &RankTable) -> usize {
    let e = m.ground();
    e.subsets().map(|x| m.rank(x) + n.rank(e - x)).min().unwrap_or(0)
}

/// Whether some `M`-independent set is a base of `N`.
pub fn matchable(m: &RankTable, n: &RankTable) -> bool {
    let r = n.rank(n.ground());
    m.ground()
        .subsets()
        .any(|s| s.len() == r && m.indep(s) && n.indep(s))
}

/// `X` violates Hall's condition when `M | X` has an `N . X`-independent base
/// but `N . X` has no `M | X`-independent base.
pub fn violates_hall(m: &RankTable, n: &RankTable, x: ElementSet) -> bool {
    let outside = n.ground() - x;
    let rm = m.rank(x);
    let rn_dot = n.dot_rank(x);
    let mut m_base_ok = false;
    let mut n_base_ok = false;
    for t in x.subsets() {
        let in_m = m.indep(t);
        let in_n_dot = n.contract_indep(outside, t);
        if in_m && in_n_dot {
            m_base_ok |= t.len() == rm;
            n_base_ok |= t.len() == rn_dot;
        }
    }
    m_base_ok && !n_base_ok
}

pub fn hall_holds(m: &RankTable, n: &RankTable) -> bool {
    m.ground().subsets().all(|x| !violates_hall(m, n, x))
}

/// Maximum matching of a bipartite multigraph by exhaustive search.
pub fn max_matching(edges: &[(usize, usize)]) -> usize {
    fn go(edges: &[(usize, usize)], used_l: u64, used_r: u64) -> usize {
        let Some((&(l, r), rest)) = edges.split_first() else {
            return 0;
        };
        let skip = go(rest, used_l, used_r);
        if used_l & (1 << l) == 0 && used_r & (1 << r) == 0 {
            skip.max(1 + go(rest, used_l | 1 << l, used_r | 1 << r))
        } else {
            skip
        }
    }
    go(edges, 0, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_table() {
        let t = RankTable::new(&Matroid::uniform(4, 2).unwrap());
        assert_eq!(t.rank(ElementSet::full(4)), 2);
        assert_eq!(t.rank(ElementSet::from([3])), 1);
        assert_eq!(t.closure(ElementSet::from([0])), ElementSet::from([0]));
        assert_eq!(t.closure(ElementSet::from([0, 1])), ElementSet::full(4));
        assert!(t.contract_indep(ElementSet::from([0]), ElementSet::from([1])));
        assert!(!t.contract_indep(ElementSet::from([0]), ElementSet::from([1, 2])));
        // U_{2,4} . {0,1} = U_{2,4} / {2,3}: everything is a loop.
        assert_eq!(t.dot_rank(ElementSet::from([0, 1])), 0);
    }

    #[test]
    fn star2_hall() {
        let m = RankTable::new(&Matroid::uniform(2, 1).unwrap());
        let n = RankTable::new(&Matroid::free(2).unwrap());
        assert!(violates_hall(&m, &n, ElementSet::full(2)));
        assert!(!violates_hall(&m, &n, ElementSet::from([0])));
        assert!(!hall_holds(&m, &n));
        assert!(!matchable(&m, &n));
        assert_eq!(max_common(&m, &n), 1);
        assert_eq!(min_max(&m, &n), 1);
    }

    #[test]
    fn matching() {
        assert_eq!(max_matching(&[]), 0);
        assert_eq!(max_matching(&[(0, 0), (0, 1), (1, 0)]), 2);
        assert_eq!(max_matching(&[(0, 0), (0, 0), (0, 1)]), 1);
    }
}
