//! Fox free calculus, elementary ideals and twisted Alexander invariants.

pub mod catalog;
pub mod error;
pub mod fox;
pub mod ideal;
pub mod invariants;
pub mod maps;
pub mod presentation;
pub mod ring;
pub mod verify;

pub use catalog::{lookup, parse_alpha, CatalogEntry};
pub use error::{Error, Result};
pub use fox::{fox_derive, GroupRingElement};
pub use ideal::{Ideal, IdealEquality, NormalForm, Probe};
pub use invariants::{
    alexander_matrix, alexander_polynomial, elementary_ideal, elementary_ideals,
    handlebody_invariant, surfacelink_invariant, twisted_matrix, InvariantTable, TableKind,
};
pub use maps::{AbelianMap, MatrixGroup, MatrixRep, ZpMatrix};
pub use presentation::{parse_presentation, parse_word, Presentation, Word};
pub use ring::{RingElement, RingMatrix, RingSpec, Variable};
