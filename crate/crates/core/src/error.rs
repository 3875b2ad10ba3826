use alloc::string::String;

use crate::set::{Element, ElementSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("element {element} is outside the ground set of size {ground_size}")]
    ElementOutOfRange { element: Element, ground_size: usize },

    #[error("ground set of size {size} exceeds the supported maximum of {max}")]
    GroundTooLarge { size: usize, max: usize },

    #[error("matroids have different ground sizes ({left} vs {right})")]
    GroundMismatch { left: usize, right: usize },

    #[error("malformed matroid spec: {0}")]
    MalformedSpec(String),

    #[error("{set} is not independent")]
    Dependent { set: ElementSet },

    #[error("{set} is not a common independent set")]
    NotCommonIndependent { set: ElementSet },

    #[error("{set} + {element} is independent, so there is no circuit")]
    NoCircuit { element: Element, set: ElementSet },

    #[error("invalid augmenting path: {0}")]
    InvalidPath(String),

    #[error("invalid switching cycle: {0}")]
    InvalidCycle(String),

    #[error("{set} is not stable")]
    NotStable { set: ElementSet },

    #[error("class {0} does not exist or is not maximal")]
    InvalidClass(usize),

    #[error("ground set of size {size} exceeds the enumeration limit of {limit}")]
    Capacity { size: usize, limit: usize },

    #[error("property violated: {0}")]
    PropertyViolation(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
