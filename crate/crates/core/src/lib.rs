//! Combinatorial evaluation of quantum sl(n) webs.
//!
//! Closed sl(n) webs, presented as ladder programs of divided-power moves,
//! evaluate to integer Laurent polynomials in `q` through standard
//! n-multitableaux: every flow on the web corresponds to a standard filling,
//! the flow's weight equals the filling's Brundan-Kleshchev-Wang degree, and
//! the evaluation is the generating function `sum q^degree`. On top of the
//! evaluation sit a dual-canonicality test for web basis elements and the
//! colored Reshetikhin-Turaev link polynomial, obtained by expanding
//! crossings into signed, q-shifted ladder strings.
//!
//! The modules follow the pipeline:
//!
//! - [`qlaurent`]: exact Laurent arithmetic, quantum integers and binomials;
//! - [`tableaux`]: partitions, multipartitions, multitableaux, degrees and
//!   dominance orders;
//! - [`webs`]: ladder programs, flows and the two growth algorithms;
//! - [`evaluation`]: the shape dynamic program, its flow-enumeration oracle,
//!   and the Kuperberg pairing;
//! - [`canonical`]: the greedy canonical filling and dual-canonicality;
//! - [`links`]: crossings, link evaluation, normalization, and a braid
//!   closure compiler.
//!
//! All polynomial-valued entry points are generic over the coefficient
//! integer type (any signed integer with checked arithmetic); the aliases
//! below fix the default `i64` used by the command-line tool.

pub mod canonical;
pub mod error;
pub mod evaluation;
pub mod links;
pub mod qlaurent;
pub mod tableaux;
pub mod webs;

pub use error::{Error, Result};
pub use qlaurent::Sign;

/// The default Laurent polynomial type: `i64` coefficients with checked
/// arithmetic.
pub type LaurentPoly = qlaurent::Laurent<i64>;

/// Shape-indexed evaluation results over the default coefficients.
pub type ShapePolyMap = evaluation::ShapePolyMap<i64>;
