//! Deciding convex cocompactness for linear reflection groups.
//!
//! This crate classifies Coxeter diagrams, checks Cartan matrices for
//! (weak) compatibility with a Coxeter group, builds the associated
//! reflection representations, and decides whether the resulting
//! reflection group is naively / plainly / strongly convex cocompact in
//! projective space. It also computes the pruned fundamental domain and
//! word-indexed orbit tilings for rendering.
//!
//! The crate is `no_std` (with `alloc`); all float transcendentals go
//! through [`libm`]. IO, file formats and the CLI live in the companion
//! `coxcc` crate.
//!
//! ```
//! use coxcc_core::cartan::generic_cc_cartan;
//! use coxcc_core::coxeter::parse_coxeter;
//! use coxcc_core::decision::decide;
//! use coxcc_core::reflection::{build_rep, verify_rep};
//!
//! // Two ∞-edges and one commuting pair: a word-hyperbolic triangle group.
//! let w = parse_coxeter("3\n1 2 inf\n2 3 inf\n")?;
//! let a = generic_cc_cartan(&w)?; // strict ∞-products, skewed 3-edges
//! let verdict = decide(&w, &a)?;  // both decision routes must agree
//! assert!(verdict.cc && verdict.scc && verdict.anosov);
//! let rep = build_rep(&a, 3)?;    // semisimple model in dimension 3
//! assert!(verify_rep(&rep, &w).passed());
//! # Ok::<(), Box<dyn core::error::Error>>(())
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cartan;
pub mod coxeter;
pub mod decision;
pub mod geometry;
pub mod linalg;
pub mod reflection;
pub mod tol;

pub use cartan::{CartanMatrix, EquivalenceInvariants, MatrixType, TypeReport};
pub use coxeter::{CoxLabel, CoxeterMatrix, DiagramComponent, GroupClass, StandardSubgroup};
pub use decision::{decide, decide_affine, exists_verdict, CCVerdict, Witness};
pub use geometry::{hilbert_distance, orbit, sigma_boundary_test, PrunedDomain, Tiling};
pub use reflection::ReflectionRep;
