//! Exact certification of Lorentzian-type positivity properties of
//! multivariate polynomials.
//!
//! The crate decides, with exact rational arithmetic and machine-checkable
//! witnesses, whether a homogeneous polynomial is Lorentzian, strictly
//! Lorentzian, dually Lorentzian, or Lorentzian relative to a finitely
//! generated cone. On top of the certifiers it provides the operator
//! calculus connecting these classes (duals, wedges, constant-coefficient
//! differential operators, truncations, polarizations), constructors for
//! Schur and Schubert polynomials, log-concavity certification for derived
//! polynomial sequences, and generalized Alexandrov-Fenchel verifiers for
//! mixed discriminants and mixed volumes of axis-parallel boxes.

pub mod derived;
pub mod dualize;
pub mod error;
pub mod combinatorics;
pub mod geom;
pub mod jsonio;
pub mod lorentz;
pub mod parse;
pub mod poly;
pub mod symfunc;

pub use error::{Error, Result};
pub use poly::{ExpVec, Partition, Polynomial, Rational};
