//! Crossing-critical graph constructions: special graphs with uncrossable
//! thick edges, drawing certificates, a family of crossing-critical graphs
//! with a vertex of large degree, an exact crossing-number solver for small
//! inputs, and the reductions that turn special graphs into ordinary ones.

pub mod critical;
pub mod drawing;
pub mod family;
pub mod geometry;
pub mod graph;
pub mod solver;

use num_rational::{BigRational, Ratio};

pub use drawing::layout::Layout;
pub use geometry::Point;

pub type Point64 = Point<f64>;
pub type Point32 = Point<f32>;
pub type RationalPoint = Point<Ratio<i128>>;
pub type ExactPoint = Point<BigRational>;
pub type Layout64 = Layout<f64>;
pub type Layout32 = Layout<f32>;
