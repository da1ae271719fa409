//! Exact-arithmetic toolkit for Fourier expansions of genus-2 Siegel modular
//! forms.
//!
//! The crate provides:
//! - sparse expansion arithmetic over exact rationals or residues mod p
//!   ([`siegel`]), with the Witt restriction, the determinant operator,
//!   Atkin-style U(p), slice orders and mod-p reduction;
//! - the classical generator constructions ([`forms`]): Eisenstein series and
//!   the weight-10/12 cusp forms through a Maass-style lift of index-1 Jacobi
//!   forms, the weight-20 combination, sharpness products, and quaternary
//!   theta series at levels 11 and 19 via exact lattice enumeration;
//! - Sturm-type congruence gates, mod-p membership solves, filtration
//!   evidence and the U(p) dichotomy driver ([`congruence`]);
//! - canonical persistence formats and a content-addressed disk cache
//!   ([`io`]).
//!
//! Everything is exact: no floating point is used anywhere. The hot loops
//! (expansion products, theta enumeration) run data-parallel under the
//! default `parallel` feature and fall back to sequential code without it;
//! both paths produce bit-identical results.

pub mod congruence;
mod error;
pub mod forms;
pub mod io;
pub mod jacobi;
pub mod lattice;
pub mod qseries;
pub mod scalars;
pub mod siegel;

pub use error::{Error, Result};
