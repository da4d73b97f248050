//! Matching, bounded-degree and domination complexes of graphs, discrete
//! Morse matchings built from element-matching schedules, and exact integral
//! simplicial homology.
//!
//! The usual pipeline is: build a [`Graph`], enumerate a [`Complex`] on its
//! edge set, then either run a [`Schedule`] through [`run_schedule`] to get a
//! [`MorseMatching`] or compute [`reduced_homology`] directly. The
//! [`theorems`] module binds both routes together into verification reports.

pub mod complex;
pub mod error;
pub mod face;
pub mod graph;
pub mod homology;
pub mod io;
pub mod morse;
pub mod theorems;

pub use complex::{Complex, ComplexStats, DegreeBoundVector};
pub use error::{Error, Result};
pub use face::Face;
pub use graph::{Graph, VertexDegreeVector};
pub use homology::{betti_over_rationals, reduced_homology, HomologyProfile};
pub use morse::{is_acyclic, run_schedule, Acyclicity, MorseMatching, MorseSummary, Schedule};
pub use theorems::{ConnectivityBound, VerificationReport};
