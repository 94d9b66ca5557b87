//! Conformal invariants of space curves through the light-cone model of
//! Moebius geometry.
//!
//! A curve in R^3 is lifted to the light cone of the Minkowski space R^5_1.
//! Its osculating circles become points of the circle space Theta(1,3), a
//! six-dimensional pseudo-Riemannian quadric of index 2 sitting inside the
//! Pluecker coordinate space R^10_4, and the family of osculating circles
//! traces a *lightlike* curve there. The half-dimensional measure of that
//! lightlike curve reproduces the classical conformal arc-length
//! `d rho = (kappa'^2 + kappa^2 tau^2)^(1/4) ds`, which this crate computes
//! and cross-validates along three independent routes:
//!
//! * polygonal/quadrature half-measure of the osculating-circle curve
//!   ([`halfmeasure`], [`osculating`]),
//! * asymptotics of the conformal angle between nearby tangent circles
//!   ([`confangle`]),
//! * the theta-average of half-measures of sphere families built from the
//!   osculating-sphere curve in de Sitter space ([`sphereavg`]).
//!
//! The building blocks are deliberately small: [`minkowski`] holds the
//! indefinite linear algebra and the light-cone charts, [`grassmann`] the
//! exterior algebra of R^5_1 with the index-4 inner product, [`desitter`]
//! the sphere space, [`curve`] the curve model with exact derivative jets.
//!
//! Run `cargo run -- --help` for the command-line frontend and see the
//! `examples/` directory for one runnable walkthrough per capability.

#![forbid(unsafe_code)]

pub mod cli;
pub mod confangle;
pub mod curve;
pub mod desitter;
pub mod grassmann;
pub mod halfmeasure;
pub mod minkowski;
pub mod numeric;
pub mod osculating;
pub mod sphereavg;

mod error;

pub use error::{Error, Result};
