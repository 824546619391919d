//! # hypcap
//!
//! Hyperbolic geometry of planar simply connected domains and conformal
//! capacities of condensers `(G, E)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`hyperbolic`]: closed-form geometry of the Poincaré disk (distances,
//!   hyperbolic balls, geodesics, diameters of point sets).
//! - [`special`]: complete elliptic integrals, the Grötzsch modulus `μ(r)` and
//!   the Grötzsch/Teichmüller capacities `γ₂`, `τ₂`.
//! - [`bounds`]: closed-form capacity bounds in terms of the hyperbolic
//!   diameter, Jung radius estimates and the quasiconformal distortion bound.
//! - [`boundary`] and [`shapes`]: piecewise smooth Jordan curves and the test
//!   bodies (hyperbolic disks, Euclidean and hyperbolic Reuleaux triangles,
//!   polygons).
//! - [`mesh`]: corner-graded periodic discretisation of a boundary.
//! - [`capacity`]: Nyström solver for the capacity of a ring domain.
//! - [`conformal`]: numerical Riemann map onto the unit disk and the induced
//!   hyperbolic distance `ρ_G`.
//! - [`experiments`] and [`cli`]: table sweeps, CSV/JSON output and the
//!   command-line front end.
//!
//! ```
//! use hypcap::{bounds, hyperbolic, Point};
//!
//! let t = hyperbolic::rho_disk(Point::new(0.0, 0.0), Point::new(0.5, 0.0)).unwrap();
//! assert!((t - 3f64.ln()).abs() < 1e-14);
//! let report = bounds::BoundsReport::new(t, &[2, 3]).unwrap();
//! assert!(report.cap_seg <= report.b1 && report.b1 <= report.b2);
//! ```

// `!(x > 0.0)` style guards are used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod boundary;
pub mod bounds;
pub mod capacity;
pub mod cli;
pub mod conformal;
mod error;
pub mod experiments;
pub mod hyperbolic;
pub mod io;
pub mod mesh;
pub mod shapes;
pub mod special;

pub use error::{Error, Result};

/// A point of the complex plane.
pub type Point = num_complex::Complex64;

/// Library version recorded in every CLI output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
