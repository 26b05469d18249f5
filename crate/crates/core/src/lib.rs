//! Linear-time decomposition of connected grid graphs.
//!
//! A grid graph is a finite set of integer lattice points with implicit edges
//! between points at Manhattan distance one. This crate partitions the
//! bounding box of such a graph into column-aligned rectangles (an
//! *RCL-cover*) whose vertex sets each hold between `sqrt(n)` and
//! `6 sqrt(n)` vertices, and whose prefix unions have boundaries of at most
//! `5 sqrt(n)` vertices. The cover is computed in `O(n)` time from two
//! bucket-sorted vertex lists scanned by forward-only cursors, and can be
//! turned into a path decomposition of width `O(sqrt(n))`.
//!
//! Every definitional property is re-checked by the brute-force verifiers in
//! [`verify`], which never look at pipeline bookkeeping.
//!
//! ```
//! use gridcarve::{GridGraph, VertexCoord, compute_rcl_cover, build_path_decomposition};
//!
//! let raw: Vec<VertexCoord> = (0..9)
//!     .flat_map(|r| (0..9).map(move |c| VertexCoord::new(r, c)))
//!     .collect();
//! let g = GridGraph::normalize(&raw).unwrap();
//! let cover = compute_rcl_cover(&g).unwrap();
//! assert!(gridcarve::verify::verify_rcl_cover(&g, &cover).ok);
//! let pd = build_path_decomposition(&g, &cover).unwrap();
//! assert!(pd.width() + 1 <= 99);
//! ```

pub mod bench;
pub mod cli;
pub mod cover;
mod error;
pub mod gen;
pub mod grid;
pub mod io;
pub mod pathdecomp;
pub mod sorting;
pub mod svg;
pub mod verify;

pub use cover::{compute_rcl_cover, RclCover, RclRectangle, SqrtGate};
pub use error::{Error, Result};
pub use grid::{GridGraph, VertexCoord, VertexSet};
pub use pathdecomp::{build_path_decomposition, PathDecomposition};
pub use sorting::{build_sclv, build_srlv, ScanCursor, SortOrder, SortedVertexList};
