//! Exact rational graded linear algebra.
//!
//! Spaces are finite-dimensional and integer-graded; maps are
//! degree-homogeneous and stored as sparse columns of exact rationals.
//! [`homology_with_contraction`] splits a complex into homology plus
//! contraction data `(p, i, h)` satisfying the side conditions exactly.

mod elim;
mod homology;
mod map;
mod scalar;
mod space;

pub(crate) use map::weighted_inversions;

pub use elim::Mat;
pub use homology::{homology_with_contraction, Contraction};
pub use map::{permutation_map, tensor_power_map, GradedMap};
pub use scalar::Scalar;
pub use space::GradedSpace;
