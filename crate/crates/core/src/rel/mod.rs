//! The relational model: sets and relations with the finite multiset
//! exponential.
//!
//! Every equation is checked exactly on bounded windows. An element's rank
//! measures its nesting and multiplicity (see [`Elem::rank`]); a check at
//! degree `D` compares the two relations on every input of rank at most `D`
//! and every output of rank at most `D`.

mod axioms;
mod check;
mod cokleisli;
mod dea;
mod elem;
mod mor;
mod object;

pub use axioms::{
    add_storage_axiom_parts, check_storage_axioms, sample_relations, storage_equations, Equation, STORAGE_FAMILIES,
};
pub use check::{assert_rel_equal, RelCheck};
pub use cokleisli::{
    add_cokleisli_parts, check_cokleisli_axioms, sample_chains, sample_maps, second_differential_formula, CoKleisli,
    COKLEISLI_AXIOMS,
};
pub use dea::{
    add_bang_dea_parts, add_copy_dual_parts, add_mu_dea_parts, add_roundtrip_parts, check_bang_dea, dea_candidates,
    dea_roundtrip, DeaVerdicts, RelMonoid,
};
pub use elem::{multichoose, Elem, MSet};
pub use mor::{RelMor, Structure, IMAGE_CAP};
pub use object::{universe, RelObj, UNIVERSE_CAP};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum RelError {
    #[error("enumeration of {what} has {size} elements, above the cap of {cap}")]
    EnumerationBoundExceeded { what: String, size: usize, cap: usize },
    #[error("no finite bound on the intermediate elements of {what}")]
    Unbounded { what: String },
    #[error("type mismatch in {context}: expected {expected}, found {found}")]
    TypeMismatch { context: String, expected: String, found: String },
}
