//! Finite convex geometries on up to five elements and their representation
//! by circles in the plane.
//!
//! Combinatorics (sets, implications, dimension, obstructions) work on bit
//! masks; the circle kernel is generic over `f32`/`f64` through [`Scalar`].

pub mod catalog;
pub mod config;
pub mod derive;
pub mod dimension;
pub mod disk;
pub mod enumerate;
pub mod error;
pub mod hull;
pub mod implications;
pub mod obstruction;
pub mod scalar;
pub mod sets;
pub mod tikz;
pub mod triangle;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use sets::{ConvexGeometry, FamilyMask, GroundSet, SubsetMask};

pub type Circle = disk::Circle<f64>;
pub type Configuration = config::Configuration<f64>;
pub type Containment = disk::Containment<f64>;
pub type HullBoundary = hull::HullBoundary<f64>;
pub type VerificationReport = verify::VerificationReport<f64>;

pub type Circle32 = disk::Circle<f32>;
pub type Configuration32 = config::Configuration<f32>;
pub type Containment32 = disk::Containment<f32>;
pub type HullBoundary32 = hull::HullBoundary<f32>;
