//! Class preorder, switching cycles, stable and negligible sets, and the
//! witness structures built over a maximal directed set of classes.
//!
//! Everything here enumerates exhaustively and is meant for ground sets of
//! at most [`ENUMERATION_LIMIT`] elements.

mod classes;
mod negligible;
mod stable;
mod switching;
mod witness;

pub use classes::{
    augmentation_closure, augmentation_closure_sets, build_class_poset, enumerate_common_independents,
    fingerprint, preorder_leq, Class, ClassId, ClassPoset, Fingerprint, ENUMERATION_LIMIT,
};
pub use negligible::{is_negligible, maximal_negligible, negligible_witness};
pub use stable::{is_stable, merge_stable, stable_sets};
pub use switching::{
    apply_switching_cycle, find_switching_cycles, switching_component, switching_cycles, validate_cycle,
    SwitchingCycle,
};
pub use witness::{compute_witnesses, compute_witnesses_in, up_in, WitnessStructures};
