//! Exact-arithmetic structure-constant toolkit for hom-Lie algebras:
//! algebras with a twisted Jacobi identity, their representations and
//! cohomology, bialgebras and Manin triples, r-matrices, and the operator
//! constructions that produce them.
//!
//! Everything is computed over arbitrary-precision rationals, so every
//! identity check is exact. All values are immutable after construction and
//! all operations are pure functions.

pub mod algebra;
pub mod bialgebra;
pub mod cohomology;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod operators;
pub mod rational;
pub mod rep;
pub mod rmatrix;
pub mod validation;

pub use algebra::{Classification, HomLieAlgebra};
pub use bialgebra::{HomLieBialgebra, LagrangianReport, MatchedPair};
pub use cohomology::Cochain;
pub use exterior::{Multivector, Side};
pub use operators::{HomLeftSymmetricAlgebra, OOperator};
pub use rep::Representation;
pub use error::{Error, Result};
pub use linalg::{Matrix, Vector};
pub use rational::Rational;
pub use validation::{AxiomFailure, ValidationReport};
