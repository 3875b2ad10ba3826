//! Maximum common independent sets, min-max certificates and Hall checks.

use alloc::vec::Vec;

use crate::error::Result;
use crate::exchange::{augment_unchecked_path, check_same_ground, AugmentingPath, ExchangeDigraph};
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// One augmentation executed by the solver.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Augmentation {
    pub before: ElementSet,
    pub path: AugmentingPath,
    pub after: ElementSet,
}

/// Full trace of an augmenting-path run from the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionRun {
    pub set: ElementSet,
    pub augmentations: Vec<Augmentation>,
    /// Elements reachable from the sources of the final exchange digraph.
    pub reachable: ElementSet,
}

impl IntersectionRun {
    pub fn iterations(&self) -> usize {
        self.augmentations.len()
    }
}

/// Repeatedly applies the lexicographically first shortest augmenting path,
/// starting from the empty set, until none remains.
pub fn run_intersection(m: &Matroid, n: &Matroid) -> Result<IntersectionRun> {
    run_intersection_from(m, n, ElementSet::EMPTY)
}

/// As [`run_intersection`] but starting from a given common independent set.
pub fn run_intersection_from(m: &Matroid, n: &Matroid, start: ElementSet) -> Result<IntersectionRun> {
    check_same_ground(m, n)?;
    let mut set = start;
    let mut augmentations = Vec::new();
    loop {
        let d = ExchangeDigraph::build(m, n, set)?;
        let Some(path) = d.shortest_augmenting_path(None, None) else {
            let reachable = d.reachable_from(d.sources());
            return Ok(IntersectionRun {
                set,
                augmentations,
                reachable,
            });
        };
        d.validate_path(&path)?;
        let after = augment_unchecked_path(m, n, set, &path)?;
        augmentations.push(Augmentation {
            before: set,
            path,
            after,
        });
        set = after;
    }
}

pub fn max_common_independent(m: &Matroid, n: &Matroid) -> Result<ElementSet> {
    Ok(run_intersection(m, n)?.set)
}

/// `size = |I|` for a maximum `I`, and a cut with
/// `r_M(cut) + r_N(E \ cut) = size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MinMaxCertificate {
    pub size: usize,
    pub cut: ElementSet,
}

/// The cut is the set of elements reachable from the sources when no
/// augmenting path is left.
pub fn min_max_certificate(m: &Matroid, n: &Matroid) -> Result<MinMaxCertificate> {
    let run = run_intersection(m, n)?;
    Ok(MinMaxCertificate {
        size: run.set.len(),
        cut: run.reachable,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum HallCertificate {
    /// `base` is `M`-independent and a base of `N`.
    Matchable { base: ElementSet },
    /// `r_M(cut) < r_{N.cut}(cut)`.
    Blocked {
        cut: ElementSet,
        rank_m: usize,
        rank_n_dot: usize,
    },
}

impl HallCertificate {
    pub fn is_matchable(&self) -> bool {
        matches!(self, HallCertificate::Matchable { .. })
    }
}

/// `r_{N.X}(X) = r_N(E) - r_N(E \ X)`.
pub fn dot_rank(n: &Matroid, x: ElementSet) -> usize {
    let full = n.ground();
    n.rank_of(full) - n.rank_of(full - x)
}

pub fn is_matchable(m: &Matroid, n: &Matroid) -> Result<HallCertificate> {
    let run = run_intersection(m, n)?;
    if run.set.len() == n.rank_of(n.ground()) {
        return Ok(HallCertificate::Matchable { base: run.set });
    }
    let cut = run.reachable;
    Ok(HallCertificate::Blocked {
        cut,
        rank_m: m.rank_of(cut),
        rank_n_dot: dot_rank(n, cut),
    })
}

/// On finite ground sets finite matchability coincides with matchability.
pub fn is_finitely_matchable(m: &Matroid, n: &Matroid) -> Result<bool> {
    Ok(is_matchable(m, n)?.is_matchable())
}

/// Whether `X` violates the matroidal Hall condition: `M | X` has an
/// `N.X`-independent base but `N.X` has no `M | X`-independent base.
pub fn violates_hall(m: &Matroid, n: &Matroid, x: ElementSet) -> Result<bool> {
    check_same_ground(m, n)?;
    m.check_subset(x)?;
    let restricted = m.restrict(x)?;
    let dotted = n.dot(x)?;
    let nu = max_common_independent(&restricted, &dotted)?.len();
    Ok(nu == restricted.rank_of(restricted.ground()) && nu < dotted.rank_of(dotted.ground()))
}

/// The lexicographically first Hall violator, if any. Scans every subset.
pub fn check_hall(m: &Matroid, n: &Matroid) -> Result<Option<ElementSet>> {
    check_same_ground(m, n)?;
    for x in lex_subsets(m.ground()) {
        if violates_hall(m, n, x)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// All subsets of `within` in lexicographic order.
pub fn lex_subsets(within: ElementSet) -> Vec<ElementSet> {
    let mut v: Vec<ElementSet> = within.subsets().collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::unit_partition;
    use alloc::vec;

    fn p3match() -> (Matroid, Matroid) {
        (
            unit_partition(&[vec![0], vec![1, 2]]).unwrap(),
            unit_partition(&[vec![0, 1], vec![2]]).unwrap(),
        )
    }

    fn star2() -> (Matroid, Matroid) {
        (Matroid::uniform(2, 1).unwrap(), Matroid::free(2).unwrap())
    }

    fn empty() -> (Matroid, Matroid) {
        (Matroid::free(0).unwrap(), Matroid::free(0).unwrap())
    }

    #[test]
    fn max_common_examples() {
        let (m, n) = p3match();
        assert_eq!(max_common_independent(&m, &n).unwrap(), ElementSet::from([0, 2]));
        let (m, n) = star2();
        assert_eq!(max_common_independent(&m, &n).unwrap().len(), 1);
        let u24 = Matroid::uniform(4, 2).unwrap();
        assert_eq!(max_common_independent(&u24, &u24).unwrap().len(), 2);
    }

    #[test]
    fn min_max_examples() {
        let (m, n) = star2();
        assert_eq!(
            min_max_certificate(&m, &n).unwrap(),
            MinMaxCertificate {
                size: 1,
                cut: ElementSet::from([0, 1])
            }
        );
        let (m, n) = p3match();
        assert_eq!(
            min_max_certificate(&m, &n).unwrap(),
            MinMaxCertificate {
                size: 2,
                cut: ElementSet::EMPTY
            }
        );
        let (m, n) = empty();
        assert_eq!(
            min_max_certificate(&m, &n).unwrap(),
            MinMaxCertificate {
                size: 0,
                cut: ElementSet::EMPTY
            }
        );
    }

    #[test]
    fn matchable_examples() {
        let (m, n) = p3match();
        assert_eq!(
            is_matchable(&m, &n).unwrap(),
            HallCertificate::Matchable {
                base: ElementSet::from([0, 2])
            }
        );
        let (m, n) = star2();
        assert_eq!(
            is_matchable(&m, &n).unwrap(),
            HallCertificate::Blocked {
                cut: ElementSet::from([0, 1]),
                rank_m: 1,
                rank_n_dot: 2
            }
        );
        let (m, n) = empty();
        assert_eq!(
            is_matchable(&m, &n).unwrap(),
            HallCertificate::Matchable {
                base: ElementSet::EMPTY
            }
        );
    }

    #[test]
    fn hall_examples() {
        let (m, n) = star2();
        assert_eq!(check_hall(&m, &n).unwrap(), Some(ElementSet::from([0, 1])));
        let (m, n) = p3match();
        assert_eq!(check_hall(&m, &n).unwrap(), None);
        let (m, n) = empty();
        assert_eq!(check_hall(&m, &n).unwrap(), None);
    }

    #[test]
    fn finitely_matchable_examples() {
        let (m, n) = p3match();
        assert!(is_finitely_matchable(&m, &n).unwrap());
        let (m, n) = star2();
        assert!(!is_finitely_matchable(&m, &n).unwrap());
        let (m, n) = empty();
        assert!(is_finitely_matchable(&m, &n).unwrap());
    }

    #[test]
    fn ground_mismatch() {
        let a = Matroid::free(2).unwrap();
        let b = Matroid::free(3).unwrap();
        assert!(max_common_independent(&a, &b).is_err());
    }
}
