//! Cone-based multiscale analysis of finite atomic measures in `R^n`.
//!
//! The crate decides, at finite dyadic scale, which part of a weighted point
//! set is carried by `m`-dimensional Lipschitz graphs and which part is
//! singular to them. The machinery is built from a handful of pieces:
//!
//! * [`geometry`] — subspaces, double cones around their orthogonal
//!   complements, and a certified box/cone intersection test;
//! * [`dyadic`] — the half-open dyadic cube lattice;
//! * [`measure`] — finite atomic measures with an exact per-generation mass
//!   index;
//! * [`annulus`] — the discretized conical annulus around a cube and its dual;
//! * [`defect`] — the conical defect of a cube and truncated Dini sums;
//! * [`tree`] — trees of dyadic cubes, bad-cube detection, localization, and
//!   the graph-extraction algorithm;
//! * [`lipgraph`] — the pairwise cone condition, McShane extension, and graph
//!   sampling;
//! * [`conefamily`] — finite direction/opening grids of cones;
//! * [`analysis`] — fixture generators, the decomposition pipeline, and the
//!   graph/off-graph integral diagnostic.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI live in
//! the companion `conedini-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod annulus;
pub mod conefamily;
pub mod defect;
pub mod dyadic;
pub mod geometry;
pub mod lipgraph;
pub mod measure;
pub mod tree;

pub use annulus::{annulus_cubes, dual_annulus_cubes, AnnulusSpec, AnnulusTester};
pub use conefamily::ConeGrid;
pub use defect::{defect, dini_truncated, normalized_sum, DiniProfile};
pub use dyadic::DyadicCube;
pub use geometry::{AxisBox, Cone, CubeConeRelation, Subspace};
pub use lipgraph::LipGraphPatch;
pub use measure::{Atom, AtomicMeasure};
pub use tree::{CubeTree, GoodBadPartition, GraphExtraction};
