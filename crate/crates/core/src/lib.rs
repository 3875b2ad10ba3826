//! Finite matroid intersection machinery.
//!
//! Matroids are immutable independence oracles over dense ground sets
//! `0..n` with `n <= 64`. On top of them the crate provides the exchange
//! digraph of a common independent set, Edmonds-style augmentation, Hall
//! checks with certificates, and an exhaustive [`lab`] for the class
//! preorder, switching cycles, stable and negligible sets.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod error;
pub mod exchange;
pub mod gf2;
pub mod lab;
pub mod matroid;
pub mod set;
pub mod solver;

pub use error::{Error, Result};
pub use exchange::{
    apply_augmentation, build_exchange_digraph, find_augmenting_path, ArcKind, AugmentingPath, ExchangeArc,
    ExchangeDigraph,
};
pub use gf2::BitVector;
pub use matroid::{Matroid, MatroidSpec, MinorKind};
pub use set::{Element, ElementSet, MAX_GROUND};
pub use solver::{
    check_hall, is_finitely_matchable, is_matchable, max_common_independent, min_max_certificate,
    run_intersection, HallCertificate, IntersectionRun, MinMaxCertificate,
};
