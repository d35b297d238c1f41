//! Grouping and recognition of 2D dot patterns.
//!
//! The pipeline connects the dots of a pattern into a Euclidean minimum
//! spanning tree, wraps the tree in a zero-width "sliver" polygon, and lets
//! that polygon offset outward under the straight polygon transformation.
//! Every polygon generated by the resulting edge and split events is traced
//! back to the original dots, yielding a set of polygonal grouping
//! hypotheses. A saliency/overlap-based selection keeps a handful of
//! representatives, which can finally be matched against a shape database.
//!
//! All geometry is generic over the scalar type (`f32` or `f64`) via
//! [`scalar::Scalar`]; the aliases at the crate root fix `f64` for the
//! pipeline and file formats.

pub mod error;
pub mod geom;
pub mod kinetic;
pub mod mst;
pub mod pattern;
pub mod scalar;

pub use error::Error;
pub use scalar::Scalar;

/// Concrete scalar used by the pipeline and the file formats.
pub type Real = f64;
/// Point in pattern coordinates.
pub type Point = geom::Point2<Real>;
/// Displacement in pattern coordinates.
pub type Vector = geom::Vector2<Real>;
/// Simple polygon over pattern coordinates.
pub type Polygon = geom::SimplePolygon<Real>;
