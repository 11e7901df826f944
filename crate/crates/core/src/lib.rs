//! Polygonal approximation of closed digital curves by iterative
//! dominant-point elimination.
//!
//! The pipeline: [`segmentation`] finds the break points of a curve,
//! [`approximator`] repeatedly removes the break point of least
//! [`significance`], and [`metrics`] scores the resulting polygon. An RDP
//! baseline lives in [`rdp`]; [`ingest`] reads curve files and traces
//! boundaries out of PBM/PGM masks.

pub mod approximator;
pub mod curve;
pub mod error;
pub mod geometry;
pub mod ingest;
pub mod metrics;
pub mod rdp;
pub mod segmentation;
pub mod significance;

pub use approximator::{
    eliminate_to_count, eliminate_to_error, Approximation, EliminationStep, Eliminator,
};
pub use curve::{build_curve, chain_code, ChainCode, DigitalCurve, DominantPointSet};
pub use error::{Error, Result};
pub use geometry::Point;
pub use metrics::{
    metrics_report, per_point_deviations, rotation_report, MetricsReport, RotationRow,
};
pub use rdp::{rdp, rdp_to_count};
pub use segmentation::{break_points_real, initial_dominant_points, InitialSegmentation};
pub use significance::{point_contribution, significance, SignificanceTable};
