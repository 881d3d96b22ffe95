//! Counting locally flat-foldable mountain/valley assignments of crease
//! patterns through self-avoiding-walk (SAW) graphs and their proper
//! 3-colorings.
//!
//! The pipeline is:
//!
//! * [`pattern`]: exact planar crease patterns with faces and sector angles.
//! * [`single_vertex`]: Kawasaki, Maekawa, Big-Little-Big and the crimp recursion.
//! * [`oracle`]: brute-force enumeration of locally valid assignments.
//! * [`saw`]: SAW-graph gadgets, surgery and whole-pattern tiling.
//! * [`coloring`]: pre-colored 3-coloring counts and the coloring/assignment bijection.
//! * [`generators`]: Miura-ori, snake, triangle twists and the bird base.
//! * [`io`]: JSON pattern files, SVG rendering and FOLD export.

pub mod coloring;
pub mod cone;
pub mod generators;
pub mod geometry;
pub mod io;
pub mod oracle;
pub mod pattern;
pub mod saw;
pub mod scalar;
pub mod single_vertex;

pub use cone::{ConeVertex, Mv, MvAssignment};
pub use geometry::Point;
pub use pattern::{Crease, CreasePattern, PatternError, PatternInput};
pub use scalar::Scalar;

/// Arbitrary-precision exact rational, the default scalar.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision counts.
pub type Count = num_bigint::BigUint;

pub type CreaseId = u32;
pub type VertexId = u32;
pub type FaceId = usize;

/// Crease pattern over exact rationals.
pub type ExactPattern = CreasePattern<Rational>;
/// Crease pattern over `f64` (no exact angle equality).
pub type FloatPattern = CreasePattern<f64>;
pub type ExactCone = ConeVertex<Rational>;
pub type FloatCone = ConeVertex<f64>;
