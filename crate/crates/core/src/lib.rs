//! Exact engine for finite-dimensional Hopf algebras given by structure
//! constants.
//!
//! Everything is computed over ℚ or GF(p) with no floating point and no
//! tolerances: checks either hold entrywise or fail with a counterexample.
//!
//! Module map:
//! - [`scalar`]: the two coefficient fields and their literal syntax
//! - [`matrix`]: dense exact matrices (RREF, rank, inverse, nullspace)
//! - [`hopf`]: algebras as structure constants, axiom checks, builtins,
//!   duals and op/cop variants, the JSON file format
//! - [`endo`]: endomorphism calculus (left/right multiplication, harpoon
//!   actions, convolution, tensor products, partial traces)
//! - [`integrals`]: integral and cointegral spaces, the Kuperberg
//!   endomorphisms P and Q, the trace map E, ladder maps, Frobenius maps,
//!   and the aggregated identity suite
//! - [`diagram`]: a textual tensor-diagram language with a greedy
//!   contraction planner and two independent evaluators
//! - [`crosscheck`]: diagram-vs-algebra agreement checks

// The numeric kernels intentionally use indexed loops: the indices are
// basis labels that appear verbatim in the structure-constant formulas
// each function documents, and iterator rewrites would obscure that.
#![allow(clippy::needless_range_loop)]

pub mod crosscheck;
pub mod diagram;
pub mod endo;
pub mod hopf;
pub mod integrals;
pub mod matrix;
pub(crate) mod par;
pub mod report;
pub mod scalar;
