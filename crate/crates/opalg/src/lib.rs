//! Exact symbolic computation for operadic homotopy algebra.
//!
//! The crate builds the free differential graded operads governing strongly
//! homotopy associative and strongly homotopy Lie algebras, verifies their
//! defining identities exactly over the rationals, checks concrete algebra
//! structures on finite-dimensional chain complexes, and constructively
//! transfers structure onto homology.
//!
//! The main pieces:
//!
//! * [`exactlin`] — exact rational scalars, graded vector spaces, graded
//!   maps with Koszul-signed tensor products, homology with contraction data.
//! * [`trees`] — planar rooted trees with decorated vertices and labeled
//!   leaves, grafting, enumeration, unshuffles, and permutation signs.
//! * [`operad`] — free dg-operads: the generator differentials for both
//!   families, derivation extension, square-zero checking, minimality,
//!   quotient presentations, and the augmentation onto them.
//! * [`halg`] — homotopy algebra structures on concrete complexes: axiom
//!   checkers, operad-action evaluation, and morphisms between structures.
//! * [`transfer`] — constructive transfer of structure onto homology
//!   through a contraction, with an independent verifier.
//! * [`cli`] — the text document format and command-line driver.
//!
//! Everything is exact: scalars are arbitrary-precision rationals and no
//! floating point appears anywhere in the engine. Values are immutable
//! after construction and every operation is a pure function, so
//! independent checks may run concurrently without shared state.

pub mod cli;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod halg;
pub mod operad;
pub mod report;
pub mod transfer;
pub mod trees;

pub use error::{Error, Result};
pub use exactlin::{Contraction, GradedMap, GradedSpace, Scalar};
pub use operad::{DgFreeOperad, FreeElement, Generator, Symmetry};
pub use trees::DecoratedTree;
