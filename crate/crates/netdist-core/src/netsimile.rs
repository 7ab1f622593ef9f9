//! Feature-based graph signatures.
//!
//! Seven per-vertex features built from degrees, clustering, and egonets,
//! each aggregated into five moments (mean, median, sample standard
//! deviation, skewness, excess kurtosis), giving a 35-entry signature vector
//! that is independent of graph size and vertex labeling. Weights are
//! ignored; a flag on the signature records when that happened.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::stats;

pub const FEATURE_COUNT: usize = 7;
pub const AGGREGATE_COUNT: usize = 5;
pub const SIGNATURE_LEN: usize = FEATURE_COUNT * AGGREGATE_COUNT;

/// Names of the per-vertex features, in signature order.
pub const FEATURE_NAMES: [&str; FEATURE_COUNT] = [
    "degree",
    "clustering",
    "neighbor_mean_degree",
    "neighbor_mean_clustering",
    "egonet_edges",
    "egonet_outgoing_edges",
    "egonet_external_neighbors",
];

/// 35-entry signature: for each feature in order, its
/// (mean, median, std, skewness, kurtosis).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Signature {
    values: Vec<f64>,
    /// Set when the input graph carried non-unit weights, which this
    /// feature set ignores.
    pub weights_ignored: bool,
}

impl Signature {
    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

/// Per-vertex feature columns, in the order of [`FEATURE_NAMES`]:
///
/// 1. degree (neighbor count)
/// 2. local clustering coefficient (0 when degree < 2)
/// 3. mean degree of neighbors (0 for isolated vertices)
/// 4. mean clustering of neighbors (0 for isolated vertices)
/// 5. edge count of the egonet (the vertex, its neighbors, induced edges)
/// 6. edges leaving the egonet (exactly one endpoint inside)
/// 7. distinct external vertices adjacent to the egonet
pub fn vertex_features(g: &Graph) -> [Vec<f64>; FEATURE_COUNT] {
    let n = g.n();
    let degrees: Vec<f64> = (0..n).map(|i| g.unweighted_degree(i) as f64).collect();

    // clustering needs the count of edges among each vertex's neighbors
    let mut clustering = vec![0.0f64; n];
    let mut neighbor_edges = vec![0usize; n];
    for i in 0..n {
        let nbrs = g.neighbors(i);
        let deg = nbrs.len();
        if deg < 2 {
            continue;
        }
        let mut among = 0usize;
        for (a_idx, &(a, _)) in nbrs.iter().enumerate() {
            for &(b, _) in &nbrs[(a_idx + 1)..] {
                if g.has_edge(a as usize, b as usize) {
                    among += 1;
                }
            }
        }
        neighbor_edges[i] = among;
        clustering[i] = among as f64 / (deg * (deg - 1) / 2) as f64;
    }

    let mut nbr_mean_degree = vec![0.0f64; n];
    let mut nbr_mean_clustering = vec![0.0f64; n];
    for i in 0..n {
        let nbrs = g.neighbors(i);
        if nbrs.is_empty() {
            continue;
        }
        let inv = 1.0 / nbrs.len() as f64;
        nbr_mean_degree[i] = nbrs.iter().map(|&(j, _)| degrees[j as usize]).sum::<f64>() * inv;
        nbr_mean_clustering[i] =
            nbrs.iter().map(|&(j, _)| clustering[j as usize]).sum::<f64>() * inv;
    }

    let mut ego_edges = vec![0.0f64; n];
    let mut ego_out = vec![0.0f64; n];
    let mut ego_ext = vec![0.0f64; n];
    let mut in_ego = vec![false; n];
    let mut ext_seen = vec![false; n];
    for i in 0..n {
        let nbrs = g.neighbors(i);
        in_ego[i] = true;
        for &(j, _) in nbrs {
            in_ego[j as usize] = true;
        }

        // edges inside: i's own spokes plus edges among neighbors
        ego_edges[i] = (nbrs.len() + neighbor_edges[i]) as f64;

        let mut out_edges = 0usize;
        let mut externals = Vec::new();
        let mut scan = |u: usize, g: &Graph| {
            for &(w, _) in g.neighbors(u) {
                let w = w as usize;
                if !in_ego[w] {
                    out_edges += 1;
                    if !ext_seen[w] {
                        ext_seen[w] = true;
                        externals.push(w);
                    }
                }
            }
        };
        scan(i, g);
        for &(j, _) in nbrs {
            scan(j as usize, g);
        }
        ego_out[i] = out_edges as f64;
        ego_ext[i] = externals.len() as f64;

        // reset scratch
        in_ego[i] = false;
        for &(j, _) in nbrs {
            in_ego[j as usize] = false;
        }
        for w in externals {
            ext_seen[w] = false;
        }
    }

    [
        degrees,
        clustering,
        nbr_mean_degree,
        nbr_mean_clustering,
        ego_edges,
        ego_out,
        ego_ext,
    ]
}

/// Aggregate the feature columns into the signature vector.
pub fn netsimile_signature(g: &Graph) -> Signature {
    let features = vertex_features(g);
    let mut values = Vec::with_capacity(SIGNATURE_LEN);
    for column in &features {
        if column.is_empty() {
            values.extend_from_slice(&[0.0; AGGREGATE_COUNT]);
            continue;
        }
        values.push(stats::mean(column));
        values.push(stats::median(column));
        values.push(stats::sample_std(column));
        values.push(stats::skewness(column));
        values.push(stats::kurtosis(column));
    }
    Signature {
        values,
        weights_ignored: g.is_weighted(),
    }
}
