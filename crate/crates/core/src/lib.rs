//! Retarded light-cone evaluation of electromagnetic fields generated by
//! relativistic charged beams in the half space above a perfectly
//! conducting wall.
//!
//! The field at an observation point `(t, x)` is assembled from integrals
//! over the backward light cone: Kirchhoff data terms on the sphere
//! `|y - x| = t`, source terms over the solid ball `|y - x| < t`, and -- for
//! the half-space problem -- image-reflected twins of each term plus
//! integrals over the disk where the cone meets the wall. The construction
//! follows the Glassey-Strauss splitting of space-time derivatives into a
//! cone-tangential part and a kinetic transport part, extended to the half
//! space by the method of images.
//!
//! The crate is `no_std`-compatible (with `alloc`); everything that touches
//! files or the command line lives in the companion CLI crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod distribution;
pub mod geometry;
pub mod kernels;
mod math;
pub mod oracle;
pub mod quadrature;
pub mod representation;
mod rng;

pub use distribution::{BeamComponent, Distribution};
pub use geometry::{Axis, Vec3};
pub use quadrature::{QuadratureSpec, QuadratureTables};
pub use representation::{FieldSample, Scenario};
