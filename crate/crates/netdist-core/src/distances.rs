//! Graph distance measures.
//!
//! Three spectral distances (adjacency, Laplacian, normalized Laplacian)
//! with eigenvalue truncation, and the matrix-style distances that compare
//! vertex-affinity matrices entry by entry: edit, effective resistance (plus
//! a renormalized variant for disconnected graphs), DeltaCon, and the
//! feature-based NetSimile.
//!
//! All distances are symmetric in their arguments. The matrix distances
//! require node correspondence (equal vertex counts, ids aligned); the
//! spectral and NetSimile distances do not.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
#[allow(unused_imports)] use num_traits::Float; // float math in no_std builds

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{self, KCount, Representation, Spectrum};
use crate::netsimile;

/// Which distance to compute, plus its hyperparameters.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DistanceSpec {
    pub kind: DistanceKind,
    /// Eigenvalue truncation; spectral kinds only.
    #[cfg_attr(feature = "serde", serde(default = "defaults::k"))]
    pub k: KCount,
    /// Exponent of the l_p comparison of spectra, in `[1, inf]`.
    #[cfg_attr(feature = "serde", serde(default = "defaults::p_norm"))]
    pub p_norm: f64,
    /// DeltaCon epsilon; `None` means `1 / (1 + max degree)` shared by the
    /// two graphs under comparison.
    #[cfg_attr(feature = "serde", serde(default))]
    pub eps: Option<f64>,
    /// Cross-component value for the renormalized resistance; `None` means
    /// the vertex count.
    #[cfg_attr(feature = "serde", serde(default))]
    pub penalty: Option<f64>,
}

#[cfg(feature = "serde")]
mod defaults {
    use crate::linalg::KCount;

    pub fn k() -> KCount {
        KCount::All
    }

    pub fn p_norm() -> f64 {
        2.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum DistanceKind {
    SpectralAdjacency,
    SpectralLaplacian,
    SpectralNormalizedLaplacian,
    Edit,
    Resistance,
    ResistanceRenormalized,
    DeltaCon,
    NetSimile,
}

impl DistanceKind {
    pub const ALL: [DistanceKind; 8] = [
        DistanceKind::SpectralAdjacency,
        DistanceKind::SpectralLaplacian,
        DistanceKind::SpectralNormalizedLaplacian,
        DistanceKind::Edit,
        DistanceKind::Resistance,
        DistanceKind::ResistanceRenormalized,
        DistanceKind::DeltaCon,
        DistanceKind::NetSimile,
    ];

    pub fn id(self) -> &'static str {
        match self {
            DistanceKind::SpectralAdjacency => "adjacency",
            DistanceKind::SpectralLaplacian => "laplacian",
            DistanceKind::SpectralNormalizedLaplacian => "normalized_laplacian",
            DistanceKind::Edit => "edit",
            DistanceKind::Resistance => "resistance",
            DistanceKind::ResistanceRenormalized => "resistance_renormalized",
            DistanceKind::DeltaCon => "deltacon",
            DistanceKind::NetSimile => "netsimile",
        }
    }

    pub fn from_id(id: &str) -> Option<DistanceKind> {
        DistanceKind::ALL.iter().copied().find(|k| k.id() == id)
    }

    pub fn representation(self) -> Option<Representation> {
        match self {
            DistanceKind::SpectralAdjacency => Some(Representation::Adjacency),
            DistanceKind::SpectralLaplacian => Some(Representation::Laplacian),
            DistanceKind::SpectralNormalizedLaplacian => Some(Representation::NormalizedLaplacian),
            _ => None,
        }
    }

    pub fn is_spectral(self) -> bool {
        self.representation().is_some()
    }

    /// Matrix distances assume node correspondence and therefore equal
    /// vertex counts.
    pub fn requires_equal_size(self) -> bool {
        matches!(
            self,
            DistanceKind::Edit
                | DistanceKind::Resistance
                | DistanceKind::ResistanceRenormalized
                | DistanceKind::DeltaCon
        )
    }
}

impl DistanceSpec {
    pub fn new(kind: DistanceKind) -> Self {
        DistanceSpec {
            kind,
            k: KCount::All,
            p_norm: 2.0,
            eps: None,
            penalty: None,
        }
    }

    pub fn with_k(mut self, k: KCount) -> Self {
        self.k = k;
        self
    }

    pub fn with_p_norm(mut self, p: f64) -> Self {
        self.p_norm = p;
        self
    }

    pub fn with_eps(mut self, eps: f64) -> Self {
        self.eps = Some(eps);
        self
    }

    pub fn with_penalty(mut self, penalty: f64) -> Self {
        self.penalty = Some(penalty);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let KCount::First(k) = self.k {
            if k < 1 {
                return Err(Error::InvalidParams("k must be at least 1".into()));
            }
        }
        if !(self.p_norm >= 1.0) {
            return Err(Error::InvalidParams(
                "p_norm must be at least 1 (values below 1 are not true metrics)".into(),
            ));
        }
        if let Some(eps) = self.eps {
            if !(eps > 0.0) || !eps.is_finite() {
                return Err(Error::InvalidParams("eps must be positive and finite".into()));
            }
        }
        if let Some(p) = self.penalty {
            if !(p > 0.0) || !p.is_finite() {
                return Err(Error::InvalidParams("penalty must be positive and finite".into()));
            }
        }
        Ok(())
    }

    pub fn id(&self) -> &'static str {
        self.kind.id()
    }

    /// Human-readable id including the parameters that matter for the kind.
    pub fn describe(&self) -> String {
        use fmt::Write;
        let mut s = String::from(self.id());
        if self.kind.is_spectral() {
            match self.k {
                KCount::All => s.push_str("[k=all"),
                KCount::First(k) => {
                    let _ = write!(s, "[k={k}");
                }
            }
            if self.p_norm == f64::INFINITY {
                s.push_str(",p=inf]");
            } else {
                let _ = write!(s, ",p={}]", self.p_norm);
            }
        } else if self.kind == DistanceKind::DeltaCon {
            match self.eps {
                Some(e) => {
                    let _ = write!(s, "[eps={e}]");
                }
                None => s.push_str("[eps=auto]"),
            }
        } else if self.kind == DistanceKind::ResistanceRenormalized {
            match self.penalty {
                Some(p) => {
                    let _ = write!(s, "[penalty={p}]");
                }
                None => s.push_str("[penalty=auto]"),
            }
        }
        s
    }
}

/// Evaluate a distance spec on a pair of graphs.
pub fn evaluate(spec: &DistanceSpec, g1: &Graph, g2: &Graph) -> Result<f64> {
    spec.validate()?;
    match spec.kind {
        DistanceKind::SpectralAdjacency
        | DistanceKind::SpectralLaplacian
        | DistanceKind::SpectralNormalizedLaplacian => {
            let repr = spec.kind.representation().expect("spectral kind");
            Ok(spectral_distance(g1, g2, repr, spec.k, spec.p_norm))
        }
        DistanceKind::Edit => edit_distance(g1, g2),
        DistanceKind::Resistance => resistance_distance(g1, g2, false, spec.penalty),
        DistanceKind::ResistanceRenormalized => resistance_distance(g1, g2, true, spec.penalty),
        DistanceKind::DeltaCon => deltacon_distance(g1, g2, spec.eps),
        DistanceKind::NetSimile => Ok(netsimile_distance(g1, g2)),
    }
}

/// l_p distance between the k-prefix spectra of a matrix representation.
///
/// The prefix is the largest k eigenvalues for the adjacency representation
/// and the smallest k for the Laplacians. When the graphs differ in size (or
/// k exceeds a spectrum length) the shorter spectrum is zero-padded at its
/// tail, the end away from the comparison prefix. `p = inf` gives the
/// largest entrywise difference. Total: any pair of graphs has a distance.
pub fn spectral_distance(
    g1: &Graph,
    g2: &Graph,
    representation: Representation,
    k: KCount,
    p_norm: f64,
) -> f64 {
    let k = k.resolve(g1.n().max(g2.n()));
    if big_graph_prefix_applies(g1, k) || big_graph_prefix_applies(g2, k) {
        let s1 = linalg::graph_spectrum_prefix(g1, representation, k);
        let s2 = linalg::graph_spectrum_prefix(g2, representation, k);
        let padded = |s: &[f64], i: usize| s.get(i).copied().unwrap_or(0.0);
        return lp_distance(
            (0..k).map(|i| padded(&s1, i) - padded(&s2, i)),
            p_norm,
        );
    }
    let s1 = Spectrum::compute(g1, representation);
    let s2 = Spectrum::compute(g2, representation);
    spectral_distance_from(&s1, &s2, KCount::First(k), p_norm)
}

fn big_graph_prefix_applies(g: &Graph, k: usize) -> bool {
    g.n() > linalg::DENSE_LIMIT && 4 * k < g.n()
}

/// Spectral distance from precomputed full spectra; the cache-friendly path
/// used by the experiment driver.
pub fn spectral_distance_from(s1: &Spectrum, s2: &Spectrum, k: KCount, p_norm: f64) -> f64 {
    debug_assert_eq!(s1.representation(), s2.representation());
    let k = k.resolve(s1.values().len().max(s2.values().len()));
    lp_distance(
        s1.prefix_padded(k)
            .zip(s2.prefix_padded(k))
            .map(|(a, b)| a - b),
        p_norm,
    )
}

fn lp_distance(diffs: impl Iterator<Item = f64>, p: f64) -> f64 {
    if p == f64::INFINITY {
        return diffs.fold(0.0f64, |m, d| m.max(d.abs()));
    }
    if p == 2.0 {
        return diffs.map(|d| d * d).sum::<f64>().sqrt();
    }
    if p == 1.0 {
        return diffs.map(|d| d.abs()).sum();
    }
    diffs.map(|d| d.abs().powf(p)).sum::<f64>().powf(1.0 / p)
}

/// Entrywise l1 difference of the adjacency matrices, summed over all
/// ordered pairs, so each differing undirected edge counts twice.
pub fn edit_distance(g1: &Graph, g2: &Graph) -> Result<f64> {
    check_sizes(g1, g2)?;
    let mut sum = 0.0;
    for (i, j, w1) in g1.edges() {
        match g2.weight(i, j) {
            Some(w2) => sum += (w1 - w2).abs(),
            None => sum += w1,
        }
    }
    for (i, j, w2) in g2.edges() {
        if !g1.has_edge(i, j) {
            sum += w2;
        }
    }
    Ok(2.0 * sum)
}

/// Entrywise l1 difference of the pairwise-resistance matrices over all
/// ordered pairs. The plain variant requires both graphs connected; the
/// renormalized variant accepts any graphs and scores cross-component pairs
/// with `penalty` (default: the vertex count).
pub fn resistance_distance(
    g1: &Graph,
    g2: &Graph,
    renormalized: bool,
    penalty: Option<f64>,
) -> Result<f64> {
    check_sizes(g1, g2)?;
    let (r1, r2) = if renormalized {
        let penalty = penalty.unwrap_or(g1.n() as f64);
        (
            linalg::renormalized_resistance_matrix(g1, penalty),
            linalg::renormalized_resistance_matrix(g2, penalty),
        )
    } else {
        (linalg::resistance_matrix(g1)?, linalg::resistance_matrix(g2)?)
    };
    let mut sum = 0.0;
    for i in 0..g1.n() {
        for j in 0..g1.n() {
            sum += (r1.get(i, j) - r2.get(i, j)).abs();
        }
    }
    Ok(sum)
}

/// Entrywise l1 difference from precomputed resistance matrices.
pub fn resistance_distance_from(
    r1: &linalg::ResistanceMatrix,
    r2: &linalg::ResistanceMatrix,
) -> Result<f64> {
    if r1.n() != r2.n() {
        return Err(Error::SizeMismatch { n1: r1.n(), n2: r2.n() });
    }
    let sum = r1
        .matrix()
        .data()
        .iter()
        .zip(r2.matrix().data())
        .map(|(a, b)| (a - b).abs())
        .sum();
    Ok(sum)
}

// Entries of an affinity matrix this far below zero are a diagnostic error
// rather than rounding noise.
const AFFINITY_CLAMP: f64 = -1e-12;

/// Matusita difference of the two belief-propagation affinity matrices:
/// `sqrt( sum_ij (sqrt(S_ij) - sqrt(S'_ij))^2 )`.
///
/// `eps = None` uses `1 / (1 + max degree)` over both graphs, which keeps
/// the affinity entries non-negative; tiny negative entries (above -1e-12)
/// from rounding are clamped to zero before the square roots.
pub fn deltacon_distance(g1: &Graph, g2: &Graph, eps: Option<f64>) -> Result<f64> {
    check_sizes(g1, g2)?;
    let eps = eps.unwrap_or_else(|| linalg::default_fbp_eps(g1, g2));
    let s1 = linalg::fbp_matrix(g1, eps)?;
    let s2 = linalg::fbp_matrix(g2, eps)?;
    deltacon_from_affinities(&s1, &s2)
}

/// Matusita difference from precomputed affinity matrices.
pub fn deltacon_from_affinities(
    s1: &crate::matrix::Matrix,
    s2: &crate::matrix::Matrix,
) -> Result<f64> {
    if s1.n() != s2.n() {
        return Err(Error::SizeMismatch { n1: s1.n(), n2: s2.n() });
    }
    let r1 = sqrt_entries_clamped(s1.data())?;
    let r2 = sqrt_entries_clamped(s2.data())?;
    let sum: f64 = r1
        .iter()
        .zip(&r2)
        .map(|(a, b)| (a - b) * (a - b))
        .sum();
    Ok(sum.sqrt())
}

/// Entrywise square roots with the rounding guard: negatives above the
/// clamp threshold become 0, anything lower is reported.
fn sqrt_entries_clamped(data: &[f64]) -> Result<Vec<f64>> {
    let mut bad = 0usize;
    let mut worst = 0.0f64;
    let mut out = Vec::with_capacity(data.len());
    for &x in data {
        if x >= 0.0 {
            out.push(x.sqrt());
        } else {
            if x < AFFINITY_CLAMP {
                bad += 1;
                worst = worst.min(x);
            }
            out.push(0.0);
        }
    }
    if bad > 0 {
        return Err(Error::NegativeAffinity { count: bad, min: worst });
    }
    Ok(out)
}

/// Canberra distance between the NetSimile signature vectors:
/// `sum_i |x_i - y_i| / (|x_i| + |y_i|)` with 0/0 terms contributing zero.
/// Signatures are size-independent, so the graphs may differ in size.
pub fn netsimile_distance(g1: &Graph, g2: &Graph) -> f64 {
    let s1 = netsimile::netsimile_signature(g1);
    let s2 = netsimile::netsimile_signature(g2);
    netsimile_distance_from(&s1, &s2)
}

/// Canberra comparison of precomputed signatures.
pub fn netsimile_distance_from(s1: &netsimile::Signature, s2: &netsimile::Signature) -> f64 {
    canberra(s1.values(), s2.values())
}

pub(crate) fn canberra(x: &[f64], y: &[f64]) -> f64 {
    debug_assert_eq!(x.len(), y.len());
    x.iter()
        .zip(y)
        .map(|(a, b)| {
            let denom = a.abs() + b.abs();
            if denom == 0.0 {
                0.0
            } else {
                (a - b).abs() / denom
            }
        })
        .sum()
}

fn check_sizes(g1: &Graph, g2: &Graph) -> Result<()> {
    if g1.n() != g2.n() {
        return Err(Error::SizeMismatch { n1: g1.n(), n2: g2.n() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn k3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn spectral_distance_identical_graphs_is_zero() {
        let d = spectral_distance(&k3(), &k3(), Representation::Adjacency, KCount::All, 2.0);
        assert!(d < 1e-12);
    }

    #[test]
    fn laplacian_distance_k3_vs_p3() {
        // L spectra: (0, 3, 3) vs (0, 1, 3) ascending; l2 difference is 2
        let d = spectral_distance(&k3(), &p3(), Representation::Laplacian, KCount::All, 2.0);
        assert!((d - 2.0).abs() < 1e-10);
    }

    #[test]
    fn adjacency_distance_leading_eigenvalue() {
        // |2 - sqrt(2)| from the K3 and P3 leading eigenvalues
        let d = spectral_distance(
            &k3(),
            &p3(),
            Representation::Adjacency,
            KCount::First(1),
            2.0,
        );
        assert!((d - (2.0 - 2.0f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn spectral_distance_permutation_invariant() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]).unwrap();
        let p = g.permute(&[3, 0, 4, 1, 2]).unwrap();
        for repr in [
            Representation::Adjacency,
            Representation::Laplacian,
            Representation::NormalizedLaplacian,
        ] {
            let d = spectral_distance(&g, &p, repr, KCount::All, 2.0);
            assert!(d <= 1e-8, "{repr:?} changed under permutation: {d}");
        }
    }

    #[test]
    fn spectral_distance_size_mismatch_pads() {
        // K3 vs K2: adjacency spectra (2, -1, -1) vs (1, -1) padded to
        // (1, -1, 0); l2 diff = sqrt(1 + 0 + 1) = sqrt(2)
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let d = spectral_distance(&k3(), &k2, Representation::Adjacency, KCount::All, 2.0);
        assert!((d - 2.0f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn lp_variants() {
        // L spectra diff of K3 vs P3 is (0, 2, 0)
        let d1 = spectral_distance(&k3(), &p3(), Representation::Laplacian, KCount::All, 1.0);
        assert!((d1 - 2.0).abs() < 1e-10);
        let dinf = spectral_distance(
            &k3(),
            &p3(),
            Representation::Laplacian,
            KCount::All,
            f64::INFINITY,
        );
        assert!((dinf - 2.0).abs() < 1e-10);
        let d3 = spectral_distance(&k3(), &p3(), Representation::Laplacian, KCount::All, 3.0);
        assert!((d3 - 2.0).abs() < 1e-10);
    }

    #[test]
    fn lambda_k_nesting_nondecreasing() {
        let g1 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)]).unwrap();
        let g2 = Graph::new(6, &[(0, 2), (2, 4), (4, 0), (1, 3), (3, 5), (1, 5)]).unwrap();
        let mut last = 0.0;
        for k in 1..=6 {
            let d = spectral_distance(&g1, &g2, Representation::Adjacency, KCount::First(k), 2.0);
            assert!(d >= last - 1e-12, "prefix sums of squares must not shrink");
            last = d;
        }
    }

    #[test]
    fn edit_distance_examples() {
        assert_eq!(edit_distance(&k3(), &k3()).unwrap(), 0.0);
        // one undirected edge differs, counted at (0,2) and (2,0)
        assert_eq!(edit_distance(&k3(), &p3()).unwrap(), 2.0);
        let empty = Graph::new(3, &[]).unwrap();
        assert_eq!(edit_distance(&k3(), &empty).unwrap(), 6.0);

        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            edit_distance(&k3(), &k2),
            Err(Error::SizeMismatch { n1: 3, n2: 2 })
        ));
    }

    #[test]
    fn edit_distance_weighted() {
        let g1 = Graph::weighted(2, &[(0, 1, 2.0)]).unwrap();
        let g2 = Graph::weighted(2, &[(0, 1, 0.5)]).unwrap();
        assert!((edit_distance(&g1, &g2).unwrap() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn edit_distance_requires_node_correspondence() {
        // Isomorphic graphs at different labelings give different distances
        // to a fixed third graph.
        let g = Graph::new(4, &[(0, 1)]).unwrap();
        let g_iso = g.permute(&[2, 3, 0, 1]).unwrap(); // the edge moves to (2, 3)
        let h = Graph::new(4, &[(0, 1)]).unwrap();
        let d1 = edit_distance(&g, &h).unwrap();
        let d2 = edit_distance(&g_iso, &h).unwrap();
        assert_eq!(d1, 0.0);
        assert_eq!(d2, 4.0);
    }

    #[test]
    fn resistance_distance_k3_vs_p3() {
        // P3 resistances: R(0,1) = R(1,2) = 1, R(0,2) = 2; K3: all 2/3.
        // Summed over both triangles: 2 * (1/3 + 4/3 + 1/3) = 4.
        let d = resistance_distance(&k3(), &p3(), false, None).unwrap();
        assert!((d - 4.0).abs() < 1e-9);
        assert_eq!(resistance_distance(&k3(), &k3(), false, None).unwrap(), 0.0);
    }

    #[test]
    fn resistance_distance_disconnected_contract() {
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(matches!(
            resistance_distance(&two_k2, &p4, false, None),
            Err(Error::Disconnected)
        ));
        let d = resistance_distance(&two_k2, &p4, true, Some(4.0)).unwrap();
        assert!(d.is_finite() && d > 0.0);
    }

    #[test]
    fn deltacon_self_distance_zero() {
        assert!(deltacon_distance(&k3(), &k3(), None).unwrap() < 1e-12);
    }

    #[test]
    fn deltacon_k2_vs_empty_hand_value() {
        // S(K2) at eps = 1/2 is [[0.95238, 0.38095], [...]], S(empty) = I;
        // Matusita difference worked by hand from the 2x2 inverse.
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let empty = Graph::new(2, &[]).unwrap();
        let d = deltacon_distance(&k2, &empty, Some(0.5)).unwrap();
        let diag = (1.25f64 / 1.3125).sqrt() - 1.0;
        let off = (0.5f64 / 1.3125).sqrt();
        let expect = (2.0 * diag * diag + 2.0 * off * off).sqrt();
        assert!((d - expect).abs() < 1e-10);
        // frozen from the closed form above: sqrt(2*(sqrt(20/21)-1)^2 + 16/21)
        assert!((d - 0.8735367).abs() < 5e-7);
    }

    #[test]
    fn deltacon_symmetry() {
        let g1 = Graph::new(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let g2 = Graph::new(5, &[(0, 2), (2, 4), (1, 3)]).unwrap();
        let d12 = deltacon_distance(&g1, &g2, None).unwrap();
        let d21 = deltacon_distance(&g2, &g1, None).unwrap();
        assert!((d12 - d21).abs() < 1e-12);
    }

    #[test]
    fn netsimile_self_and_permutation_invariance() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 3)]).unwrap();
        assert_eq!(netsimile_distance(&g, &g), 0.0);
        let p = g.permute(&[5, 3, 1, 0, 2, 4]).unwrap();
        assert!(netsimile_distance(&g, &p) < 1e-12);
    }

    #[test]
    fn describe_ids() {
        let spec = DistanceSpec::new(DistanceKind::SpectralAdjacency).with_k(KCount::First(2));
        assert_eq!(spec.describe(), "adjacency[k=2,p=2]");
        assert_eq!(spec.id(), "adjacency");
        let spec = DistanceSpec::new(DistanceKind::DeltaCon);
        assert_eq!(spec.describe(), "deltacon[eps=auto]");
    }

    #[test]
    fn validation_rejects_bad_params() {
        let mut spec = DistanceSpec::new(DistanceKind::SpectralAdjacency);
        spec.p_norm = 0.5;
        assert!(spec.validate().is_err());
        let mut spec = DistanceSpec::new(DistanceKind::DeltaCon);
        spec.eps = Some(-0.1);
        assert!(spec.validate().is_err());
        let spec = DistanceSpec::new(DistanceKind::SpectralAdjacency).with_k(KCount::First(0));
        assert!(spec.validate().is_err());
    }

    #[test]
    fn evaluate_dispatch_covers_all_kinds() {
        let g1 = k3();
        let g2 = p3();
        for kind in DistanceKind::ALL {
            let spec = DistanceSpec::new(kind);
            let d = evaluate(&spec, &g1, &g2).unwrap();
            assert!(d.is_finite() && d >= 0.0, "{kind:?}");
            let d_rev = evaluate(&spec, &g2, &g1).unwrap();
            assert!((d - d_rev).abs() < 1e-12, "{kind:?} not symmetric");
            let d_self = evaluate(&spec, &g1, &g1).unwrap();
            assert!(d_self <= 1e-10, "{kind:?} self-distance {d_self}");
        }
    }

    #[test]
    fn canberra_zero_terms() {
        assert_eq!(canberra(&[0.0, 1.0], &[0.0, 3.0]), 0.5);
        assert_eq!(canberra(&vec![0.0; 4], &vec![0.0; 4]), 0.0);
    }
}
