//! Exact-arithmetic engines for determinant identities on deformed Pascal
//! triangles.
//!
//! The crate computes Catalan numbers through the determinant of a banded
//! Hessenberg matrix of binomials and through the Ming Antu recurrence,
//! counts lattice paths between two nondecreasing height boundaries as a
//! binomial determinant, and relates the principal minors of a binomial
//! Toeplitz-Hessenberg matrix to the reciprocal of `(1 + z)^n`.
//!
//! Every routine has an independent oracle in the crate (closed forms,
//! fraction-free elimination, dynamic programming, series convolution) so the
//! identities can be checked against each other at any size.
//!
//! All scalars are [`ExactInt`]s; nothing here touches floating point.

pub mod builders;
pub mod catalan;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod hessmat;
pub mod lattice;
pub mod report;
pub mod sampling;
pub mod series;

pub use builders::{
    build_deformed_pascal, build_path_matrix, build_toeplitz_hessenberg, pascal_table, PascalTable,
};
pub use catalan::{catalan_det, catalan_mingantu, catalan_mingantu_prefix};
pub use combinat::{binomial, catalan_closed, ExactInt};
pub use error::{Error, Result};
pub use hessmat::{
    det_bareiss, det_hessenberg_recurrence, principal_minors, DenseIntMatrix, HessenbergMatrix,
    Orientation,
};
pub use lattice::{
    count_dyck, count_paths_det, count_paths_dp, enumerate_paths, BoundaryPair,
    DEFAULT_ENUMERATION_CAP,
};
pub use report::{IdentityId, VerificationReport};
pub use series::{
    binomial_power, reciprocal, reciprocal_via_minors, verify_convolution_identity,
    verify_recurrence_identity, RecurrenceCheck, TruncatedSeries,
};
