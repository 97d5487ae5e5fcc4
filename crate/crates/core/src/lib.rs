//! Speed limits for unitary operator flows and the thermal quantities they
//! bound.
//!
//! Everything works in the energy eigenbasis: an operator flow
//! `O_t = e^{iHt} O e^{-iHt}` reduces to a weighted distribution of Bohr
//! frequencies, and overlaps, autocorrelations, susceptibilities and Fisher
//! information are weighted sums over it. Units have `ħ = k_B = 1`.
//!
//! Runnable walkthroughs live in `examples/`; the `opflow` binary drives
//! reproducible scenarios from INI files (see [`scenario`]).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod autocorr;
pub mod ensembles;
pub mod error;
pub mod gapdist;
pub mod grid;
pub mod linops;
pub mod qfi;
pub mod qsl;
pub mod response;
pub mod scenario;
pub mod states;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
