//! Weighted geodesic farthest-point Voronoi diagrams in simple polygons.
//!
//! Sites sit at polygon vertices and carry non-negative weights; the distance
//! from a site to a point is its weight plus the Euclidean length of the
//! geodesic (shortest path inside the polygon). This crate computes the
//! farthest-point Voronoi diagram of such sites, the geodesic center and
//! diameter, and ships a brute-force oracle, instance generators and
//! JSON/SVG emitters.
//!
//! The construction is a recursive prune-and-insert scheme: the boundary
//! diagram is computed first, the instance is rebuilt on the geodesic hull of
//! apex sites and leaves, a random subset of sites is solved recursively in a
//! pruned polygon, and the remaining sites are inserted one by one into a
//! refined envelope of distance functions.

pub mod geom;
pub mod polygon;
pub mod triangulate;
pub mod geodesic;
pub mod spm;
pub mod boundary;
pub mod transform;
pub mod bisector;
pub mod envelope;
pub mod engine;
pub mod oracle;
pub mod io;
pub mod gen;
pub mod cli;

pub use geom::{Point, Tolerance};
pub use polygon::{BoundaryWalk, VertexOccurrence};
pub use engine::{compute_fvd, Config, FvdResult};
