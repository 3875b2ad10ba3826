//! Finite matroids given by independence oracles.
//!
//! A [`Matroid`] is built from a declarative [`MatroidSpec`] (or one of the
//! constructors) and is immutable afterwards. Everything else (rank, closure,
//! fundamental circuits, minors) is derived from the independence predicate.

use alloc::boxed::Box;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf2::{BitVector, EchelonBasis};
use crate::set::{Element, ElementSet, MAX_GROUND};

/// How a minor is taken from its base matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum MinorKind {
    /// `M | X`, ground set `X`.
    Restrict,
    /// `M - X`, ground set `E \ X`.
    Delete,
    /// `M / X`, ground set `E \ X`.
    Contract,
    /// `M . X = M / (E \ X)`, ground set `X`.
    Dot,
}

/// Declarative description of a matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case", deny_unknown_fields))]
pub enum MatroidSpec {
    Uniform {
        n: usize,
        r: usize,
    },
    Partition {
        blocks: Vec<Vec<Element>>,
        capacities: Vec<usize>,
    },
    Graphic {
        vertex_count: usize,
        #[cfg_attr(feature = "serde", serde(rename = "edge_endpoints"))]
        edges: Vec<(usize, usize)>,
    },
    LinearGf2 {
        columns: Vec<BitVector>,
    },
    DirectSum {
        left: Box<MatroidSpec>,
        right: Box<MatroidSpec>,
    },
    Minor {
        base: Box<MatroidSpec>,
        kind: MinorKind,
        subset: Vec<Element>,
    },
}

impl MatroidSpec {
    /// Ground size the spec resolves to, without building any oracle.
    pub fn ground_size(&self) -> Result<usize> {
        Ok(match self {
            MatroidSpec::Uniform { n, .. } => *n,
            MatroidSpec::Partition { blocks, .. } => blocks.iter().map(Vec::len).sum(),
            MatroidSpec::Graphic { edges, .. } => edges.len(),
            MatroidSpec::LinearGf2 { columns } => columns.len(),
            MatroidSpec::DirectSum { left, right } => left.ground_size()? + right.ground_size()?,
            MatroidSpec::Minor { base, kind, subset } => {
                let n = base.ground_size()?;
                let k = distinct_in_range(subset, n)?.len();
                match kind {
                    MinorKind::Restrict | MinorKind::Dot => k,
                    MinorKind::Delete | MinorKind::Contract => n - k,
                }
            }
        })
    }
}

fn distinct_in_range(elements: &[Element], ground_size: usize) -> Result<ElementSet> {
    let mut set = ElementSet::EMPTY;
    for &e in elements {
        if e >= ground_size {
            return Err(Error::ElementOutOfRange {
                element: e,
                ground_size,
            });
        }
        if set.contains(e) {
            return Err(Error::MalformedSpec(format!("element {e} listed twice")));
        }
        set.insert(e);
    }
    Ok(set)
}

#[derive(Clone, Debug)]
enum Repr {
    Uniform {
        rank: usize,
    },
    Partition {
        blocks: Vec<ElementSet>,
        capacities: Vec<usize>,
    },
    Graphic {
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
    },
    LinearGf2 {
        columns: Vec<BitVector>,
    },
    DirectSum {
        left: Arc<Matroid>,
        right: Arc<Matroid>,
    },
    /// Elements of the minor are the elements of `kept` (base coordinates),
    /// re-indexed in ascending order. `contracted` is a fixed base of the
    /// contracted part, in base coordinates.
    Minor {
        base: Arc<Matroid>,
        kept: ElementSet,
        contracted: ElementSet,
    },
}

/// An immutable independence oracle over the ground set `0..ground_size`.
#[derive(Clone, Debug)]
pub struct Matroid {
    ground_size: usize,
    repr: Repr,
}

fn check_ground(size: usize) -> Result<()> {
    if size > MAX_GROUND {
        Err(Error::GroundTooLarge {
            size,
            max: MAX_GROUND,
        })
    } else {
        Ok(())
    }
}

impl Matroid {
    /// Builds the oracle described by `spec`.
    pub fn build(spec: &MatroidSpec) -> Result<Matroid> {
        match spec {
            MatroidSpec::Uniform { n, r } => Matroid::uniform(*n, *r),
            MatroidSpec::Partition { blocks, capacities } => Matroid::partition(blocks, capacities),
            MatroidSpec::Graphic {
                vertex_count,
                edges,
            } => Matroid::graphic(*vertex_count, edges),
            MatroidSpec::LinearGf2 { columns } => Matroid::linear_gf2(columns.clone()),
            MatroidSpec::DirectSum { left, right } => {
                Matroid::direct_sum(&Matroid::build(left)?, &Matroid::build(right)?)
            }
            MatroidSpec::Minor { base, kind, subset } => {
                let base = Matroid::build(base)?;
                let subset = distinct_in_range(subset, base.ground_size)?;
                base.minor(*kind, subset)
            }
        }
    }

    pub fn uniform(n: usize, r: usize) -> Result<Matroid> {
        check_ground(n)?;
        if r > n {
            return Err(Error::MalformedSpec(format!(
                "uniform rank {r} exceeds ground size {n}"
            )));
        }
        Ok(Matroid {
            ground_size: n,
            repr: Repr::Uniform { rank: r },
        })
    }

    /// The free matroid: every subset is independent.
    pub fn free(n: usize) -> Result<Matroid> {
        Matroid::uniform(n, n)
    }

    /// Partition matroid. The blocks must partition `0..n` where `n` is the
    /// total number of listed elements.
    pub fn partition(blocks: &[Vec<Element>], capacities: &[usize]) -> Result<Matroid> {
        if blocks.len() != capacities.len() {
            return Err(Error::MalformedSpec(format!(
                "{} blocks but {} capacities",
                blocks.len(),
                capacities.len()
            )));
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        check_ground(n)?;
        let mut seen = ElementSet::EMPTY;
        let mut masks = Vec::with_capacity(blocks.len());
        for block in blocks {
            let mut mask = ElementSet::EMPTY;
            for &e in block {
                if e >= n {
                    return Err(Error::MalformedSpec(format!(
                        "partition element {e} outside the dense range 0..{n}"
                    )));
                }
                if seen.contains(e) {
                    return Err(Error::MalformedSpec(format!(
                        "partition blocks overlap at element {e}"
                    )));
                }
                seen.insert(e);
                mask.insert(e);
            }
            masks.push(mask);
        }
        Ok(Matroid {
            ground_size: n,
            repr: Repr::Partition {
                blocks: masks,
                capacities: capacities.to_vec(),
            },
        })
    }

    /// Cycle matroid of a multigraph; element `i` is edge `i`.
    pub fn graphic(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
        check_ground(edges.len())?;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::MalformedSpec(format!(
                    "edge {i} = ({u},{v}) references a vertex outside 0..{vertex_count}"
                )));
            }
        }
        Ok(Matroid {
            ground_size: edges.len(),
            repr: Repr::Graphic {
                vertex_count,
                edges: edges.to_vec(),
            },
        })
    }

    /// Column matroid of a GF(2) matrix; element `i` is column `i`.
    pub fn linear_gf2(columns: Vec<BitVector>) -> Result<Matroid> {
        check_ground(columns.len())?;
        if let Some(first) = columns.first() {
            if let Some((i, c)) = columns.iter().enumerate().find(|(_, c)| c.len() != first.len()) {
                return Err(Error::MalformedSpec(format!(
                    "column {i} has length {} but column 0 has length {}",
                    c.len(),
                    first.len()
                )));
            }
        }
        Ok(Matroid {
            ground_size: columns.len(),
            repr: Repr::LinearGf2 { columns },
        })
    }

    /// Direct sum; elements of `right` are shifted past those of `left`.
    pub fn direct_sum(left: &Matroid, right: &Matroid) -> Result<Matroid> {
        let n = left.ground_size + right.ground_size;
        check_ground(n)?;
        Ok(Matroid {
            ground_size: n,
            repr: Repr::DirectSum {
                left: Arc::new(left.clone()),
                right: Arc::new(right.clone()),
            },
        })
    }

    /// The minor of the given kind. The result's elements are the surviving
    /// elements of `self`, re-indexed in ascending order (see
    /// [`Matroid::minor_ground`]).
    pub fn minor(&self, kind: MinorKind, subset: ElementSet) -> Result<Matroid> {
        self.check_subset(subset)?;
        let full = self.ground();
        let (kept, contracted) = match kind {
            MinorKind::Restrict => (subset, ElementSet::EMPTY),
            MinorKind::Delete => (full - subset, ElementSet::EMPTY),
            MinorKind::Contract => (full - subset, self.greedy_base(subset)),
            MinorKind::Dot => (subset, self.greedy_base(full - subset)),
        };
        Ok(Matroid {
            ground_size: kept.len(),
            repr: Repr::Minor {
                base: Arc::new(self.clone()),
                kept,
                contracted,
            },
        })
    }

    /// Elements of `self` that survive as the ground set of the minor.
    pub fn minor_ground(&self, kind: MinorKind, subset: ElementSet) -> ElementSet {
        match kind {
            MinorKind::Restrict | MinorKind::Dot => subset,
            MinorKind::Delete | MinorKind::Contract => self.ground() - subset,
        }
    }

    pub fn restrict(&self, subset: ElementSet) -> Result<Matroid> {
        self.minor(MinorKind::Restrict, subset)
    }

    pub fn delete(&self, subset: ElementSet) -> Result<Matroid> {
        self.minor(MinorKind::Delete, subset)
    }

    pub fn contract(&self, subset: ElementSet) -> Result<Matroid> {
        self.minor(MinorKind::Contract, subset)
    }

    pub fn dot(&self, subset: ElementSet) -> Result<Matroid> {
        self.minor(MinorKind::Dot, subset)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn ground(&self) -> ElementSet {
        ElementSet::full(self.ground_size)
    }

    pub fn check_subset(&self, s: ElementSet) -> Result<()> {
        match (s - self.ground()).min() {
            Some(element) => Err(Error::ElementOutOfRange {
                element,
                ground_size: self.ground_size,
            }),
            None => Ok(()),
        }
    }

    pub fn check_element(&self, e: Element) -> Result<()> {
        if e < self.ground_size {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: e,
                ground_size: self.ground_size,
            })
        }
    }

    pub fn is_independent(&self, s: ElementSet) -> Result<bool> {
        self.check_subset(s)?;
        Ok(self.indep(s))
    }

    /// Size of a maximal independent subset of `s`.
    pub fn rank(&self, s: ElementSet) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.rank_of(s))
    }

    /// `span(s) = { e : rank(s + e) = rank(s) }`.
    pub fn closure(&self, s: ElementSet) -> Result<ElementSet> {
        self.check_subset(s)?;
        Ok(self.span(s))
    }

    /// Greedy base of `s`, inserting elements in ascending order.
    pub fn base_of(&self, s: ElementSet) -> Result<ElementSet> {
        self.check_subset(s)?;
        Ok(self.greedy_base(s))
    }

    /// The unique circuit inside `i + e`, given `i` independent and `i + e`
    /// dependent.
    pub fn fundamental_circuit(&self, e: Element, i: ElementSet) -> Result<ElementSet> {
        self.check_element(e)?;
        self.check_subset(i)?;
        if !self.indep(i) {
            return Err(Error::Dependent { set: i });
        }
        let with = i.with(e);
        if self.indep(with) {
            return Err(Error::NoCircuit { element: e, set: i });
        }
        Ok(self.circuit(e, i))
    }

    pub fn is_loop(&self, e: Element) -> bool {
        e < self.ground_size && !self.indep(ElementSet::singleton(e))
    }

    pub fn loops(&self) -> ElementSet {
        self.ground().iter().filter(|&e| self.is_loop(e)).collect()
    }

    pub(crate) fn indep(&self, s: ElementSet) -> bool {
        match &self.repr {
            Repr::Uniform { rank } => s.len() <= *rank,
            Repr::Partition { blocks, capacities } => blocks
                .iter()
                .zip(capacities)
                .all(|(b, &cap)| (s & *b).len() <= cap),
            Repr::Graphic {
                vertex_count,
                edges,
            } => {
                let mut dsu = Dsu::new(*vertex_count);
                s.iter().all(|e| {
                    let (u, v) = edges[e];
                    dsu.union(u, v)
                })
            }
            Repr::LinearGf2 { columns } => {
                let mut basis = EchelonBasis::new();
                s.iter().all(|e| basis.insert(&columns[e]))
            }
            Repr::DirectSum { left, right } => {
                let split = left.ground_size;
                let l = s & ElementSet::full(split);
                let r = if split >= 64 {
                    ElementSet::EMPTY
                } else {
                    ElementSet::from_bits(s.bits() >> split)
                };
                left.indep(l) && right.indep(r)
            }
            Repr::Minor {
                base,
                kept,
                contracted,
            } => base.indep(s.expand(*kept) | *contracted),
        }
    }

    pub(crate) fn greedy_base(&self, s: ElementSet) -> ElementSet {
        let mut b = ElementSet::EMPTY;
        for e in s {
            let next = b.with(e);
            if self.indep(next) {
                b = next;
            }
        }
        b
    }

    pub(crate) fn rank_of(&self, s: ElementSet) -> usize {
        self.greedy_base(s).len()
    }

    pub(crate) fn span(&self, s: ElementSet) -> ElementSet {
        let b = self.greedy_base(s);
        let mut out = s;
        for e in self.ground() - s {
            if !self.indep(b.with(e)) {
                out.insert(e);
            }
        }
        out
    }

    /// Caller guarantees `i` independent, `i + e` dependent.
    pub(crate) fn circuit(&self, e: Element, i: ElementSet) -> ElementSet {
        let with = i.with(e);
        let mut c = ElementSet::singleton(e);
        for y in i - ElementSet::singleton(e) {
            if self.indep(with.without(y)) {
                c.insert(y);
            }
        }
        c
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` if `u` and `v` were already connected.
    fn union(&mut self, u: usize, v: usize) -> bool {
        let (a, b) = (self.find(u), self.find(v));
        if a == b {
            return false;
        }
        self.parent[a] = b;
        true
    }
}

/// Convenience for tests and fixtures: a partition matroid where every block
/// has capacity one.
pub fn unit_partition(blocks: &[Vec<Element>]) -> Result<Matroid> {
    Matroid::partition(blocks, &vec![1; blocks.len()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn k3() -> Matroid {
        Matroid::graphic(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn set<const N: usize>(e: [Element; N]) -> ElementSet {
        ElementSet::from(e)
    }

    #[test]
    fn uniform_basics() {
        let u24 = Matroid::uniform(4, 2).unwrap();
        assert_eq!(u24.rank(u24.ground()).unwrap(), 2);
        assert!(u24.is_independent(set([0, 1])).unwrap());
        assert_eq!(u24.rank(set([0, 1, 2])).unwrap(), 2);
        assert!(Matroid::uniform(2, 3).is_err());
    }

    #[test]
    fn triangle() {
        let m = k3();
        assert!(!m.is_independent(set([0, 1, 2])).unwrap());
        assert_eq!(m.rank(m.ground()).unwrap(), 2);
        assert_eq!(m.closure(set([0, 1])).unwrap(), set([0, 1, 2]));
        assert_eq!(m.fundamental_circuit(2, set([0, 1])).unwrap(), set([0, 1, 2]));
    }

    #[test]
    fn empty_set_independent_everywhere() {
        for m in [
            k3(),
            Matroid::uniform(1, 0).unwrap(),
            Matroid::linear_gf2(vec![BitVector::parse("00").unwrap()]).unwrap(),
        ] {
            assert!(m.is_independent(ElementSet::EMPTY).unwrap());
        }
    }

    #[test]
    fn loops_and_free() {
        let loop1 = Matroid::uniform(1, 0).unwrap();
        assert_eq!(loop1.rank(set([0])).unwrap(), 0);
        assert_eq!(loop1.loops(), set([0]));
        let free2 = Matroid::free(2).unwrap();
        assert_eq!(free2.closure(ElementSet::EMPTY).unwrap(), ElementSet::EMPTY);
        let u12 = Matroid::uniform(2, 1).unwrap();
        assert_eq!(u12.closure(set([0])).unwrap(), set([0, 1]));
    }

    #[test]
    fn circuits_in_uniform() {
        let u12 = Matroid::uniform(2, 1).unwrap();
        assert_eq!(u12.fundamental_circuit(1, set([0])).unwrap(), set([0, 1]));
        let u24 = Matroid::uniform(4, 2).unwrap();
        assert_eq!(u24.fundamental_circuit(3, set([0, 1])).unwrap(), set([0, 1, 3]));
    }

    #[test]
    fn circuit_errors() {
        let u24 = Matroid::uniform(4, 2).unwrap();
        assert_eq!(
            u24.fundamental_circuit(3, set([0, 1, 2])),
            Err(Error::Dependent { set: set([0, 1, 2]) })
        );
        assert!(matches!(
            u24.fundamental_circuit(3, set([0])),
            Err(Error::NoCircuit { .. })
        ));
    }

    #[test]
    fn out_of_range() {
        let u24 = Matroid::uniform(4, 2).unwrap();
        assert!(matches!(
            u24.is_independent(set([4])),
            Err(Error::ElementOutOfRange { element: 4, ground_size: 4 })
        ));
    }

    #[test]
    fn direct_sum_blocks() {
        let u12 = Matroid::uniform(2, 1).unwrap();
        let s = Matroid::direct_sum(&u12, &u12).unwrap();
        assert!(s.is_independent(set([0, 2])).unwrap());
        assert!(!s.is_independent(set([0, 1])).unwrap());
        let empty = Matroid::free(0).unwrap();
        let same = Matroid::direct_sum(&u12, &empty).unwrap();
        for x in u12.ground().subsets() {
            assert_eq!(same.indep(x), u12.indep(x));
        }
    }

    #[test]
    fn star_partition_is_u12() {
        // One S-vertex with two incident edges.
        let m = unit_partition(&[vec![0, 1]]).unwrap();
        let u12 = Matroid::uniform(2, 1).unwrap();
        for x in m.ground().subsets() {
            assert_eq!(m.indep(x), u12.indep(x));
        }
    }

    #[test]
    fn partition_errors() {
        assert!(Matroid::partition(&[vec![0, 1], vec![1]], &[1, 1]).is_err());
        assert!(Matroid::partition(&[vec![0, 1]], &[1, 1]).is_err());
        assert!(Matroid::partition(&[vec![0, 3]], &[1]).is_err());
    }

    #[test]
    fn minor_dot_full_is_identity() {
        let u12 = Matroid::uniform(2, 1).unwrap();
        let d = u12.dot(u12.ground()).unwrap();
        assert_eq!(d.ground_size(), 2);
        for x in u12.ground().subsets() {
            assert_eq!(d.indep(x), u12.indep(x));
        }
    }

    #[test]
    fn contraction_of_triangle_edge() {
        // K3 / {2}: two parallel edges, rank 1.
        let c = k3().contract(set([2])).unwrap();
        assert_eq!(c.ground_size(), 2);
        assert_eq!(c.rank(c.ground()).unwrap(), 1);
        assert!(!c.is_independent(set([0, 1])).unwrap());
    }

    #[test]
    fn spec_minor_subset_out_of_range() {
        let spec = MatroidSpec::Minor {
            base: Box::new(MatroidSpec::Uniform { n: 2, r: 1 }),
            kind: MinorKind::Restrict,
            subset: vec![0, 5],
        };
        assert!(matches!(
            Matroid::build(&spec),
            Err(Error::ElementOutOfRange { element: 5, .. })
        ));
        assert!(spec.ground_size().is_err());
    }

    #[test]
    fn gf2_dependent_triple() {
        let cols = ["10", "01", "11"].map(|s| BitVector::parse(s).unwrap());
        let m = Matroid::linear_gf2(cols.to_vec()).unwrap();
        assert!(!m.is_independent(set([0, 1, 2])).unwrap());
        assert!(m.is_independent(set([0, 2])).unwrap());
        assert!(Matroid::linear_gf2(vec![
            BitVector::parse("1").unwrap(),
            BitVector::parse("10").unwrap()
        ])
        .is_err());
    }

    #[test]
    fn ground_size_of_specs() {
        let spec = MatroidSpec::DirectSum {
            left: Box::new(MatroidSpec::Uniform { n: 2, r: 1 }),
            right: Box::new(MatroidSpec::Minor {
                base: Box::new(MatroidSpec::Uniform { n: 4, r: 2 }),
                kind: MinorKind::Contract,
                subset: vec![0],
            }),
        };
        assert_eq!(spec.ground_size().unwrap(), 5);
        assert_eq!(Matroid::build(&spec).unwrap().ground_size(), 5);
    }
}
