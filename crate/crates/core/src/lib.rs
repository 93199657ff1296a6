//! Cordial labelings of paths and cycles over finite abelian groups.
//!
//! A vertex labeling by elements of an abelian group `A` induces edge labels
//! by summing endpoint labels. The labeling is *A-cordial* when vertex labels
//! and edge labels are both evenly distributed over `A`. This crate verifies
//! such labelings ([`labeling`]), builds them from smaller pieces
//! ([`constructors`]), and decides existence by exhaustive search
//! ([`search`]).

pub mod constructors;
pub mod error;
pub mod format;
pub mod group;
pub mod labeling;
pub mod search;

pub use error::{CordialError, ParseError};
pub use group::{GroupElement, GroupSpec};
pub use labeling::{
    check_cordial, count_partition, is_almost_rectangular, is_almost_rectangular_loose,
    CordialityReport, CountPartition, GraphKind, GraphLabeling,
};
