//! Exact symbolic construction of Casimir elements for the symplectic Lie
//! algebra sp(m).
//!
//! Everything is computed over exact rationals (or Gaussian rationals for the
//! matrix realization); there is no floating point anywhere. The main pieces:
//!
//! * [`lie`] — the basis of the complexified algebra, its bracket table, the
//!   invariant bilinear form, the dual basis, and the faithful 2m x 2m matrix
//!   realization used as ground truth.
//! * [`envelope`] — noncommutative polynomials with exact coefficients and
//!   PBW straightening to a canonical normal form, modelling the universal
//!   enveloping algebra.
//! * [`words`] — enumeration of admissible words over {E+, E-, B, B*}, the
//!   sign exponent L(w), and expansion of formal traces.
//! * [`casimir`] — the Casimir elements built two independent ways (word sum
//!   and dual-basis reference formula) plus centrality and identity checks.
//! * [`ktype`] — highest/lowest-weight evaluation on U(k) and reduction of
//!   central elements against a scalar K-type.
//! * [`json`], [`render`] — serialization and text/LaTeX emission.

pub mod casimir;
pub mod envelope;
pub mod error;
pub mod json;
pub mod ktype;
pub mod lambda;
pub mod lie;
mod linalg;
pub mod matrix;
pub mod render;
pub mod scalar;
pub mod verify;
pub mod words;

pub use envelope::{NcMonomial, NcPoly, PbwOrder, SymbolPoly};
pub use error::Error;
pub use lambda::LambdaPoly;
pub use lie::{GenKind, GeneratorId};
pub use matrix::GaussMatrix;
pub use scalar::{GaussRational, Rat};
pub use words::{Letter, LetterWord};
