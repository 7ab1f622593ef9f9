//! Graph comparison toolkit: distance measures, random graph ensembles, and
//! the population-separation experiment protocol built on top of them.
//!
//! The crate is `no_std` + `alloc`; everything here is pure computation over
//! immutable inputs. File formats, parallelism, and the command-line surface
//! live in the companion `netdist` crate.
//!
//! Overview of the main modules:
//!
//! - [`graph`]: undirected weighted graphs, matrix representations, and
//!   ingestion helpers (correlation matrices, timestamped contact events).
//! - [`linalg`]: symmetric eigendecomposition, Laplacian pseudoinverse,
//!   effective resistance, and belief-propagation affinity matrices.
//! - [`distances`]: the eight graph distances (three spectral, edit,
//!   resistance and its renormalized variant, DeltaCon, NetSimile).
//! - [`generators`]: seeded samplers for six random-graph ensembles with
//!   connectedness conditioning and volume matching.
//! - [`experiment`]: the null-vs-alternative protocol with scaled distances
//!   and boxplot statistics.
//! - [`anomaly`]: consecutive-timestep distance series over dynamic graphs.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod anomaly;
pub mod distances;
pub mod error;
pub mod experiment;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod matrix;
pub mod netsimile;
pub mod rng;
pub mod stats;

pub use error::{Error, Result};
pub use graph::Graph;
pub use matrix::Matrix;
pub use rng::Seed;
