//! Foundational 2D geometry: points, simple polygons, angles, and
//! area-based polygon similarity.

mod overlap;
mod point;
mod polygon;

pub use overlap::{area_overlap, matching_score};
pub use point::{Point2, Vector2};
pub use polygon::{signed_area, SimplePolygon};
