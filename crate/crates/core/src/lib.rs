//! Closed-form invariants of Seifert fibered three-manifolds with a
//! Sasakian structure: integral homology and the moduli space of flat
//! torus connections, Dedekind sums and the adiabatic eta invariant,
//! Hurwitz zeta regularized torsion functions, the abelian analytic
//! torsion, and abelian Chern-Simons partition-function magnitudes.

pub mod cli;
pub mod dedekind;
pub mod error;
pub mod homology;
pub mod matrix;
pub mod partition;
pub mod seifert;
pub mod torsion;
pub mod zeta;

pub use error::{Error, ErrorKind, Result, Warned, Warning};
pub use matrix::IntegerMatrix;
pub use seifert::{ExactRational, RawSeifert, SeifertData};
