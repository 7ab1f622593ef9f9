//! Dynamic-graph anomaly detection.
//!
//! Given an ordered sequence of graphs over a shared vertex set, the
//! distance between consecutive timesteps forms a series; dividing by its
//! sample mean puts different distances on one scale, and the peaks of the
//! normalized series mark the anomalous transitions.

use alloc::string::String;
use alloc::vec::Vec;

use crate::distances::{self, DistanceKind, DistanceSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::stats;

/// Ordered graphs over one vertex set (vertex ids correspond across time).
#[derive(Debug, Clone)]
pub struct GraphSequence {
    graphs: Vec<Graph>,
    /// Optional timestamp per graph (e.g. interval start times).
    pub interval_labels: Option<Vec<f64>>,
}

impl GraphSequence {
    /// All graphs must share the same vertex count.
    pub fn new(graphs: Vec<Graph>) -> Result<Self> {
        if let Some(first) = graphs.first() {
            let n = first.n();
            for g in &graphs {
                if g.n() != n {
                    return Err(Error::SizeMismatch { n1: n, n2: g.n() });
                }
            }
        }
        Ok(GraphSequence {
            graphs,
            interval_labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<f64>) -> Result<Self> {
        if labels.len() != self.graphs.len() {
            return Err(Error::InvalidParams(
                "label count does not match graph count".into(),
            ));
        }
        self.interval_labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }
}

/// Consecutive-timestep distances, raw and mean-normalized.
///
/// Entry `i` of the series compares graphs `i` and `i + 1`; its natural
/// timestep label is `i + 1`, the time of the later graph.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DistanceSeries {
    pub distance_id: String,
    pub raw: Vec<f64>,
    /// `raw / mean(raw)`; its mean is 1 by construction.
    pub normalized: Vec<f64>,
    /// Set when a plain resistance request was switched to the renormalized
    /// variant because the sequence contains a disconnected graph.
    pub auto_renormalized: bool,
}

/// Distance between each pair of consecutive graphs, normalized by the
/// series mean.
///
/// A plain-resistance request on a sequence containing any disconnected
/// graph is evaluated as the renormalized variant with penalty `n` instead
/// (flagged on the result), since the exact resistance is undefined there.
pub fn consecutive_distances(seq: &GraphSequence, spec: &DistanceSpec) -> Result<DistanceSeries> {
    if seq.len() < 2 {
        return Err(Error::SeriesTooShort);
    }
    spec.validate()?;

    let mut spec = spec.clone();
    let mut auto_renormalized = false;
    if spec.kind == DistanceKind::Resistance
        && seq.graphs().iter().any(|g| !g.is_connected())
    {
        spec.kind = DistanceKind::ResistanceRenormalized;
        auto_renormalized = true;
    }

    let graphs = seq.graphs();
    let mut raw = Vec::with_capacity(graphs.len() - 1);
    for pair in graphs.windows(2) {
        raw.push(distances::evaluate(&spec, &pair[0], &pair[1])?);
    }

    let mean = stats::mean(&raw);
    if mean < 1e-14 {
        return Err(Error::ZeroMean);
    }
    let normalized = raw.iter().map(|x| x / mean).collect();
    Ok(DistanceSeries {
        distance_id: spec.describe(),
        raw,
        normalized,
        auto_renormalized,
    })
}

/// Positions of the `top_k` largest normalized values, descending, ties
/// broken toward the earlier position. `top_k` is clamped to the series
/// length.
pub fn top_anomalies(series: &DistanceSeries, top_k: usize) -> Vec<(usize, f64)> {
    let mut order: Vec<usize> = (0..series.normalized.len()).collect();
    order.sort_by(|&a, &b| {
        series.normalized[b]
            .partial_cmp(&series.normalized[a])
            .expect("non-finite normalized distance")
            .then(a.cmp(&b))
    });
    order
        .into_iter()
        .take(top_k)
        .map(|i| (i, series.normalized[i]))
        .collect()
}
