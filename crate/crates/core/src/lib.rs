//! Exact computations with Fano lattice polygons: duals, edge cones,
//! combinatorial mutation, symmetry and Kähler–Einstein checks, barycentric
//! transformations and explicit constructions.

pub mod barycentric;
pub mod constructions;
pub mod edges;
pub mod ehrhart;
pub mod error;
pub mod lattice;
pub mod mutation;
pub mod polygon;
pub mod rational;
pub mod reference;
pub mod report;
pub mod symmetry;

pub use error::{FanoError, Result};
pub use lattice::{det, DualVector, LatticePoint, Mat2, Orientation, UnimodularMap};
pub use polygon::{LatticePolygon, RationalPolygon};
pub use rational::{Rational, RationalPoint};
