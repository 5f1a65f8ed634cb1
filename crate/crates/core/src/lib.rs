//! Exact integer arithmetic for curves on the boundary torus of a solid
//! torus, and for the one-sided surfaces they bound.
//!
//! The crate has four layers:
//!
//! - [`slope`]: primitive `(longitude, meridian)` pairs, canonicalisation,
//!   intersection numbers, and first-quadrant projection;
//! - [`tree`]: the tree of boundary slopes of geometrically incompressible
//!   one-sided surfaces in a solid torus, with genus given by root-path
//!   length;
//! - [`fig8`]: classification of the geometrically incompressible one-sided
//!   splitting surfaces of the `(2p,q)` Dehn fillings of figure-eight knot
//!   space, driven by the tree;
//! - [`oracle`]: brute-force reference constructions over machine integers,
//!   sharing no arithmetic with the fast paths, used to validate the
//!   structural claims the other layers rely on.
//!
//! Everything is deterministic and pure; values are immutable and safe to
//! share across threads.
//!
//! ```
//! use mbtree::{tree, FillingSpec, QuadrantSlope, Verdict};
//!
//! // the (10,3) curve bounds a genus-3 surface in the solid torus
//! let s = QuadrantSlope::new(10, 3)?;
//! assert_eq!(tree::genus(&s)?, 3u32.into());
//!
//! // the (10,3) filling of figure-eight knot space splits along a unique
//! // geometrically incompressible one-sided surface
//! let report = mbtree::classify(&FillingSpec::new(5, 3)?)?;
//! assert!(matches!(report.verdict, Verdict::UniqueIncompressible(_)));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

// Error variants carry the offending coefficients as big integers; errors are
// cold paths here and the context is worth the bytes.
#![allow(clippy::result_large_err)]

pub mod fig8;
pub mod oracle;
pub mod slope;
pub mod tree;

pub use fig8::{classify, FillingReport, FillingSpec, Fig8Error, SurfaceTag, TransitionMatrix, Verdict};
pub use slope::{intersection_number, QuadrantSlope, Slope, SlopeError};
pub use tree::{
    children, export_tree, genus, is_vertex, parent, passes_through_41, path_to_root,
    ratio_exceeds_three, TreeError, TreeFormat, TreePath, TreeVertex,
};
