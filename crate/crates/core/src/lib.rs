//! Lefschetz numbers of Hecke operators acting on the kernels of twisted Dirac
//! operators over rank-one locally symmetric spaces `Γ\G/K`.
//!
//! The crate is organized bottom-up:
//!
//! - [`rootsys`]: root data, weights and Weyl groups of the equal-rank real-rank-one
//!   families `su(n,1)`, `so(2n,1)` and `sp(n,1)`, in exact rational arithmetic.
//! - [`chars`]: discrete-series characters on the compact and noncompact Cartan
//!   subgroups, formal degrees, central characters and elliptic orbital terms.
//! - [`epstein`]: Hurwitz zeta continuation and constant terms of the cusp zeta
//!   functions.
//! - [`lefschetz`]: the geometric data schema and the assembler that sums the
//!   central, elliptic, unipotent, weighted and residue contributions.
//! - [`sl2`]: the `SL(2,ℤ)` instantiation (Hecke cosets, conjugacy classes,
//!   geometric presets) and the classical modular-forms oracles it is checked
//!   against.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod chars;
pub mod epstein;
mod error;
pub mod lefschetz;
pub mod rootsys;
pub mod sl2;

pub use error::{Error, Result};
