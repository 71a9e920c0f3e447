//! Homomorphisms out of presented groups: abelianizations and matrix representations.

mod abelian;
mod enumerate;
mod lemma36;
mod matrep;

pub use abelian::AbelianMap;
pub use enumerate::{
    conjugacy_classes, enumerate_epis, enumerate_homs, enumerate_homs_with_cap, ConjugacyClass,
    MAX_EPI_ASSIGNMENTS,
};
pub use lemma36::{lemma36_images, lemma36_rho, rotation, shear, swap};
pub use matrep::{GroupKind, MatrixGroup, MatrixRep, ZpMatrix, DEFAULT_GROUP_CAP};
