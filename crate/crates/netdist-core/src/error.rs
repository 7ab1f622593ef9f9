//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors produced by graph construction, linear algebra, sampling, and the
/// experiment protocol.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Edge with identical endpoints.
    SelfLoop(usize),
    /// Vertex id outside `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// Edge weight not strictly positive.
    NonpositiveWeight { i: usize, j: usize, weight: f64 },
    /// Input matrix expected to be symmetric was not.
    AsymmetricInput,
    /// Contact event timestamp outside the bucketing window.
    EventOutOfRange { t: f64 },
    /// Matrix handed to the eigensolver is not symmetric.
    NotSymmetric,
    /// Requested eigenvalue count outside `1..=n`.
    KOutOfRange { k: usize, n: usize },
    /// Operation requires a connected graph.
    Disconnected,
    /// Factorization hit a non-positive pivot.
    SingularSystem,
    /// Matrix distances require equal vertex counts.
    SizeMismatch { n1: usize, n2: usize },
    /// Affinity matrix entries below the clamping guard.
    NegativeAffinity { count: usize, min: f64 },
    /// Connectedness rejection sampling gave up.
    RetriesExhausted { attempts: u32 },
    /// Ensemble or distance parameters out of range.
    InvalidParams(String),
    /// Volume matching is only defined for some ensembles.
    UnsupportedModel,
    /// Null distance population has (numerically) zero spread.
    DegenerateNull { sigma: f64 },
    /// Statistics of an empty sample set.
    EmptySample,
    /// Distance series needs at least two graphs.
    SeriesTooShort,
    /// Mean of the raw distance series is zero; normalization undefined.
    ZeroMean,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SelfLoop(i) => write!(f, "SelfLoop: edge ({i}, {i}) is a self-loop"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "VertexOutOfRange: vertex {vertex} not in 0..{n}")
            }
            Error::NonpositiveWeight { i, j, weight } => {
                write!(f, "NonpositiveWeight: edge ({i}, {j}) has weight {weight}")
            }
            Error::AsymmetricInput => write!(f, "AsymmetricInput: matrix is not symmetric"),
            Error::EventOutOfRange { t } => {
                write!(f, "EventOutOfRange: event at t={t} outside the bucketing window")
            }
            Error::NotSymmetric => write!(f, "NotSymmetric: matrix is not symmetric"),
            Error::KOutOfRange { k, n } => write!(f, "KOutOfRange: k={k} not in 1..={n}"),
            Error::Disconnected => write!(f, "Disconnected: graph is not connected"),
            Error::SingularSystem => write!(f, "SingularSystem: non-positive pivot"),
            Error::SizeMismatch { n1, n2 } => {
                write!(f, "SizeMismatch: graphs have {n1} and {n2} vertices")
            }
            Error::NegativeAffinity { count, min } => write!(
                f,
                "NegativeAffinity: {count} affinity entries below clamp guard (min {min:e})"
            ),
            Error::RetriesExhausted { attempts } => {
                write!(f, "RetriesExhausted: no connected draw in {attempts} attempts")
            }
            Error::InvalidParams(msg) => write!(f, "InvalidParams: {msg}"),
            Error::UnsupportedModel => {
                write!(f, "UnsupportedModel: volume matching needs a pa or sbm2 spec")
            }
            Error::DegenerateNull { sigma } => {
                write!(f, "DegenerateNull: null standard deviation {sigma:e} too small")
            }
            Error::EmptySample => write!(f, "EmptySample: statistics of an empty sample"),
            Error::SeriesTooShort => write!(f, "SeriesTooShort: need at least two graphs"),
            Error::ZeroMean => write!(f, "ZeroMean: distance series mean is zero"),
        }
    }
}

impl core::error::Error for Error {}
