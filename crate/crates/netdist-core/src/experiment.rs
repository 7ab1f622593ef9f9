//! The null-vs-alternative population protocol.
//!
//! For each sample index, two independent graphs G0, G0' are drawn from the
//! null ensemble and one graph G1 from the alternative. D0 collects
//! d(G0, G0'), D1 collects d(G0, G1), and the scaled samples standardize D1
//! by the null moments: `d1_hat = (D1 - mu0) / sigma0`. A distance separates
//! the populations when the scaled distribution sits well away from zero.
//!
//! The same graph draws at an index are reused for every distance in the
//! config (and for every k in an eigenvalue sweep), so the per-distance
//! results are paired and directly comparable. Draws depend only on
//! `(seed, index, role)`, never on the distance list or the evaluation
//! order, and sample indices are independent work units: the driver here
//! runs them serially, and callers may fan [`sample_distances`] out across
//! threads and feed the outcomes to [`aggregate`] for identical results.

use alloc::string::String;
use alloc::vec::Vec;

use crate::distances::{self, DistanceKind, DistanceSpec};
use crate::error::{Error, Result};
use crate::generators::{self, EnsembleSpec, Model};
use crate::graph::Graph;
use crate::linalg::{KCount, Representation, ResistanceMatrix, Spectrum};
use crate::matrix::Matrix;
use crate::netsimile::{netsimile_signature, Signature};
use crate::rng::Seed;
use crate::stats;

/// Where the null population comes from.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum NullModel {
    /// A fixed ensemble.
    Ensemble { spec: EnsembleSpec },
    /// Per-sample degree matching: each index first draws its alternative
    /// graph, then draws both null graphs from the random degree-sequence
    /// ensemble targeting that alternative's degrees.
    DegreeMatchedRds {
        #[cfg_attr(feature = "serde", serde(default = "crate::experiment::default_true"))]
        require_connected: bool,
        #[cfg_attr(feature = "serde", serde(default = "crate::experiment::default_retries"))]
        max_retries: u32,
    },
}

pub(crate) fn default_true() -> bool {
    true
}

pub(crate) fn default_retries() -> u32 {
    1000
}

impl NullModel {
    pub fn ensemble(spec: EnsembleSpec) -> Self {
        NullModel::Ensemble { spec }
    }

    pub fn degree_matched() -> Self {
        NullModel::DegreeMatchedRds {
            require_connected: true,
            max_retries: default_retries(),
        }
    }
}

/// Full description of one population-separation experiment.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExperimentConfig {
    pub null_model: NullModel,
    pub alt_spec: EnsembleSpec,
    pub distances: Vec<DistanceSpec>,
    #[cfg_attr(feature = "serde", serde(default = "default_samples"))]
    pub n_samples: usize,
    pub seed: Seed,
}

fn default_samples() -> usize {
    500
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_samples < 2 {
            return Err(Error::InvalidParams(
                "n_samples must be at least 2 for the null standard deviation".into(),
            ));
        }
        if self.distances.is_empty() {
            return Err(Error::InvalidParams("no distances configured".into()));
        }
        for d in &self.distances {
            d.validate()?;
        }
        self.alt_spec.validate()?;
        if let NullModel::Ensemble { spec } = &self.null_model {
            spec.validate()?;
            let needs_equal = self.distances.iter().any(|d| d.kind.requires_equal_size());
            if needs_equal && spec.n != self.alt_spec.n {
                return Err(Error::SizeMismatch {
                    n1: spec.n,
                    n2: self.alt_spec.n,
                });
            }
        }
        Ok(())
    }
}

/// Raw and scaled distance samples for one configured distance.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScaledSampleSet {
    pub distance_id: String,
    pub spec: DistanceSpec,
    /// d(G0, G0') per sample index.
    pub d0: Vec<f64>,
    /// d(G0, G1) per sample index.
    pub d1: Vec<f64>,
    pub mu0: f64,
    pub sigma0: f64,
    /// `(d1 - mu0) / sigma0` per sample index.
    pub d1_hat: Vec<f64>,
    /// Digest of the (G0, G0', G1) triple per index; identical across all
    /// sets of one run because the draws are shared.
    pub fingerprints: Vec<u64>,
}

/// Boxplot statistics: median, quartiles, and the 5th/95th percentiles used
/// as whiskers, plus the mean.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoxStats {
    pub median: f64,
    pub q1: f64,
    pub q3: f64,
    pub p5: f64,
    pub p95: f64,
    pub mean: f64,
}

/// Boxplot statistics with percentiles by linear interpolation between
/// closest ranks.
pub fn box_stats(samples: &[f64]) -> Result<BoxStats> {
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut sorted: Vec<f64> = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-finite sample"));
    Ok(BoxStats {
        median: stats::quantile_sorted(&sorted, 0.5),
        q1: stats::quantile_sorted(&sorted, 0.25),
        q3: stats::quantile_sorted(&sorted, 0.75),
        p5: stats::quantile_sorted(&sorted, 0.05),
        p95: stats::quantile_sorted(&sorted, 0.95),
        mean: stats::mean(samples),
    })
}

// Role salts for the per-index substreams.
const ROLE_NULL_A: u64 = 1;
const ROLE_NULL_B: u64 = 2;
const ROLE_ALT: u64 = 3;

/// The three graphs drawn at one sample index.
pub struct SampleDraws {
    pub null_a: Graph,
    pub null_b: Graph,
    pub alt: Graph,
}

impl SampleDraws {
    fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for fp in [
            self.null_a.fingerprint(),
            self.null_b.fingerprint(),
            self.alt.fingerprint(),
        ] {
            h ^= fp;
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
        h
    }
}

/// Draw the (G0, G0', G1) triple for a sample index.
pub fn draw_sample(cfg: &ExperimentConfig, index: usize) -> Result<SampleDraws> {
    let base = cfg.seed.child(index as u64);
    let alt = generators::sample(&cfg.alt_spec, base.child(ROLE_ALT))?;
    let null_spec = match &cfg.null_model {
        NullModel::Ensemble { spec } => spec.clone(),
        NullModel::DegreeMatchedRds {
            require_connected,
            max_retries,
        } => EnsembleSpec {
            model: Model::RandomDegreeSequence {
                degrees: generators::degree_sequence_of(&alt),
            },
            n: alt.n(),
            require_connected: *require_connected,
            max_retries: *max_retries,
        },
    };
    let null_a = generators::sample(&null_spec, base.child(ROLE_NULL_A))?;
    let null_b = generators::sample(&null_spec, base.child(ROLE_NULL_B))?;
    Ok(SampleDraws {
        null_a,
        null_b,
        alt,
    })
}

/// Per-graph cache of the expensive intermediates (spectra, resistance and
/// affinity matrices, signatures) shared by the distances at one index.
struct GraphCtx<'g> {
    g: &'g Graph,
    spectra: [Option<Spectrum>; 3],
    resistance: Vec<(u64, ResistanceMatrix)>,
    affinity: Vec<(u64, Matrix)>,
    signature: Option<Signature>,
}

const EXACT_RESISTANCE_KEY: u64 = u64::MAX;

impl<'g> GraphCtx<'g> {
    fn new(g: &'g Graph) -> Self {
        GraphCtx {
            g,
            spectra: [None, None, None],
            resistance: Vec::new(),
            affinity: Vec::new(),
            signature: None,
        }
    }

    fn spectrum(&mut self, repr: Representation) -> &Spectrum {
        let slot = match repr {
            Representation::Adjacency => 0,
            Representation::Laplacian => 1,
            Representation::NormalizedLaplacian => 2,
        };
        self.spectra[slot].get_or_insert_with(|| Spectrum::compute(self.g, repr))
    }

    fn resistance(&mut self, key: u64) -> Result<&ResistanceMatrix> {
        if let Some(pos) = self.resistance.iter().position(|(k, _)| *k == key) {
            return Ok(&self.resistance[pos].1);
        }
        let r = if key == EXACT_RESISTANCE_KEY {
            crate::linalg::resistance_matrix(self.g)?
        } else {
            crate::linalg::renormalized_resistance_matrix(self.g, f64::from_bits(key))
        };
        self.resistance.push((key, r));
        Ok(&self.resistance.last().unwrap().1)
    }

    fn affinity(&mut self, eps: f64) -> Result<&Matrix> {
        let key = eps.to_bits();
        if let Some(pos) = self.affinity.iter().position(|(k, _)| *k == key) {
            return Ok(&self.affinity[pos].1);
        }
        let s = crate::linalg::fbp_matrix(self.g, eps)?;
        self.affinity.push((key, s));
        Ok(&self.affinity.last().unwrap().1)
    }

    fn signature(&mut self) -> &Signature {
        self.signature.get_or_insert_with(|| netsimile_signature(self.g))
    }
}

fn evaluate_cached(spec: &DistanceSpec, a: &mut GraphCtx, b: &mut GraphCtx) -> Result<f64> {
    match spec.kind {
        DistanceKind::SpectralAdjacency
        | DistanceKind::SpectralLaplacian
        | DistanceKind::SpectralNormalizedLaplacian => {
            let repr = spec.kind.representation().expect("spectral kind");
            Ok(distances::spectral_distance_from(
                a.spectrum(repr),
                b.spectrum(repr),
                spec.k,
                spec.p_norm,
            ))
        }
        DistanceKind::Edit => distances::edit_distance(a.g, b.g),
        DistanceKind::Resistance => {
            let ra = a.resistance(EXACT_RESISTANCE_KEY)?;
            let rb = b.resistance(EXACT_RESISTANCE_KEY)?;
            distances::resistance_distance_from(ra, rb)
        }
        DistanceKind::ResistanceRenormalized => {
            let key = spec.penalty.unwrap_or(a.g.n() as f64).to_bits();
            let ra = a.resistance(key)?;
            let rb = b.resistance(key)?;
            distances::resistance_distance_from(ra, rb)
        }
        DistanceKind::DeltaCon => {
            let eps = spec
                .eps
                .unwrap_or_else(|| crate::linalg::default_fbp_eps(a.g, b.g));
            let sa = a.affinity(eps)?;
            let sb = b.affinity(eps)?;
            distances::deltacon_from_affinities(sa, sb)
        }
        DistanceKind::NetSimile => Ok(distances::netsimile_distance_from(
            a.signature(),
            b.signature(),
        )),
    }
}

/// One index worth of work: raw D0 and D1 values for every configured
/// distance, on shared draws. Pure given `(cfg, index)`; safe to run across
/// threads.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleOutcome {
    pub index: usize,
    pub fingerprint: u64,
    /// One entry per configured distance (or per k in a sweep).
    pub d0: Vec<f64>,
    pub d1: Vec<f64>,
}

pub fn sample_distances(cfg: &ExperimentConfig, index: usize) -> Result<SampleOutcome> {
    let draws = draw_sample(cfg, index)?;
    let fingerprint = draws.fingerprint();
    let mut g0 = GraphCtx::new(&draws.null_a);
    let mut g0p = GraphCtx::new(&draws.null_b);
    let mut g1 = GraphCtx::new(&draws.alt);
    let mut d0 = Vec::with_capacity(cfg.distances.len());
    let mut d1 = Vec::with_capacity(cfg.distances.len());
    for spec in &cfg.distances {
        d0.push(evaluate_cached(spec, &mut g0, &mut g0p)?);
        d1.push(evaluate_cached(spec, &mut g0, &mut g1)?);
    }
    Ok(SampleOutcome {
        index,
        fingerprint,
        d0,
        d1,
    })
}

/// Combine per-index outcomes into scaled sample sets. Outcomes may arrive
/// in any order; they are sorted by index first, so threaded callers get
/// bit-identical results to the serial driver.
pub fn aggregate(cfg: &ExperimentConfig, mut outcomes: Vec<SampleOutcome>) -> Result<Vec<ScaledSampleSet>> {
    outcomes.sort_by_key(|o| o.index);
    let fingerprints: Vec<u64> = outcomes.iter().map(|o| o.fingerprint).collect();
    let mut sets = Vec::with_capacity(cfg.distances.len());
    for (di, spec) in cfg.distances.iter().enumerate() {
        let d0: Vec<f64> = outcomes.iter().map(|o| o.d0[di]).collect();
        let d1: Vec<f64> = outcomes.iter().map(|o| o.d1[di]).collect();
        sets.push(scale_samples(spec.describe(), spec.clone(), d0, d1, fingerprints.clone())?);
    }
    Ok(sets)
}

fn scale_samples(
    distance_id: String,
    spec: DistanceSpec,
    d0: Vec<f64>,
    d1: Vec<f64>,
    fingerprints: Vec<u64>,
) -> Result<ScaledSampleSet> {
    let mu0 = stats::mean(&d0);
    let sigma0 = stats::sample_std(&d0);
    if sigma0 < 1e-14 {
        return Err(Error::DegenerateNull { sigma: sigma0 });
    }
    let d1_hat = d1.iter().map(|x| (x - mu0) / sigma0).collect();
    Ok(ScaledSampleSet {
        distance_id,
        spec,
        d0,
        d1,
        mu0,
        sigma0,
        d1_hat,
        fingerprints,
    })
}

/// Run the full experiment serially.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ScaledSampleSet>> {
    cfg.validate()?;
    let outcomes = (0..cfg.n_samples)
        .map(|i| sample_distances(cfg, i))
        .collect::<Result<Vec<_>>>()?;
    aggregate(cfg, outcomes)
}

/// One index worth of an eigenvalue sweep: the spectral distance of one
/// representation evaluated at every k, on shared spectra. The l_2 spectrum
/// comparison is used, matching the default spectral distance.
pub fn sweep_sample(
    cfg: &ExperimentConfig,
    representation: Representation,
    k_values: &[usize],
    index: usize,
) -> Result<SampleOutcome> {
    let draws = draw_sample(cfg, index)?;
    let fingerprint = draws.fingerprint();
    let s0 = Spectrum::compute(&draws.null_a, representation);
    let s0p = Spectrum::compute(&draws.null_b, representation);
    let s1 = Spectrum::compute(&draws.alt, representation);
    let mut d0 = Vec::with_capacity(k_values.len());
    let mut d1 = Vec::with_capacity(k_values.len());
    for &k in k_values {
        d0.push(distances::spectral_distance_from(&s0, &s0p, KCount::First(k), 2.0));
        d1.push(distances::spectral_distance_from(&s0, &s1, KCount::First(k), 2.0));
    }
    Ok(SampleOutcome {
        index,
        fingerprint,
        d0,
        d1,
    })
}

/// Aggregate sweep outcomes into per-k boxplot statistics of the scaled
/// distances.
pub fn aggregate_sweep(
    k_values: &[usize],
    mut outcomes: Vec<SampleOutcome>,
) -> Result<Vec<(usize, BoxStats)>> {
    outcomes.sort_by_key(|o| o.index);
    let mut out = Vec::with_capacity(k_values.len());
    for (ki, &k) in k_values.iter().enumerate() {
        let d0: Vec<f64> = outcomes.iter().map(|o| o.d0[ki]).collect();
        let d1: Vec<f64> = outcomes.iter().map(|o| o.d1[ki]).collect();
        let mu0 = stats::mean(&d0);
        let sigma0 = stats::sample_std(&d0);
        if sigma0 < 1e-14 {
            return Err(Error::DegenerateNull { sigma: sigma0 });
        }
        let d1_hat: Vec<f64> = d1.iter().map(|x| (x - mu0) / sigma0).collect();
        out.push((k, box_stats(&d1_hat)?));
    }
    Ok(out)
}

/// Scaled-distance boxplot statistics per k for a spectral representation,
/// sharing graph draws across all k.
pub fn lambda_k_sweep(
    cfg: &ExperimentConfig,
    representation: Representation,
    k_values: &[usize],
) -> Result<Vec<(usize, BoxStats)>> {
    cfg.validate()?;
    let n_max = cfg.alt_spec.n.max(match &cfg.null_model {
        NullModel::Ensemble { spec } => spec.n,
        NullModel::DegreeMatchedRds { .. } => cfg.alt_spec.n,
    });
    for &k in k_values {
        if k < 1 || k > n_max {
            return Err(Error::KOutOfRange { k, n: n_max });
        }
    }
    let outcomes = (0..cfg.n_samples)
        .map(|i| sweep_sample(cfg, representation, k_values, i))
        .collect::<Result<Vec<_>>>()?;
    aggregate_sweep(k_values, outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn small_cfg(distances: Vec<DistanceSpec>, n_samples: usize) -> ExperimentConfig {
        ExperimentConfig {
            null_model: NullModel::ensemble(EnsembleSpec::new(Model::Gnp { p: 0.4 }, 16)),
            alt_spec: EnsembleSpec::new(Model::Gnp { p: 0.4 }, 16),
            distances,
            n_samples,
            seed: Seed::new(42),
        }
    }

    #[test]
    fn box_stats_examples() {
        let s = box_stats(&[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        assert_eq!(s.median, 3.0);
        assert_eq!(s.q1, 2.0);
        assert_eq!(s.q3, 4.0);

        let s = box_stats(&[2.0, 2.0, 2.0]).unwrap();
        assert_eq!((s.median, s.q1, s.q3, s.p5, s.p95, s.mean), (2.0, 2.0, 2.0, 2.0, 2.0, 2.0));

        let s = box_stats(&[0.0, 10.0]).unwrap();
        assert_eq!(s.median, 5.0);

        assert_eq!(box_stats(&[]), Err(Error::EmptySample));
        let s = box_stats(&[3.0, 1.0, 2.0, 5.0, 4.0]).unwrap();
        assert!(s.p5 <= s.q1 && s.q1 <= s.median && s.median <= s.q3 && s.q3 <= s.p95);
    }

    #[test]
    fn scaling_identity() {
        // applying the standardization to the null samples themselves gives
        // mean 0, sample std 1
        let cfg = small_cfg(vec![DistanceSpec::new(DistanceKind::Edit)], 40);
        let sets = run_experiment(&cfg).unwrap();
        let set = &sets[0];
        let self_scaled: Vec<f64> = set.d0.iter().map(|x| (x - set.mu0) / set.sigma0).collect();
        assert!(stats::mean(&self_scaled).abs() < 1e-12);
        assert!((stats::sample_std(&self_scaled) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn eq4_arithmetic() {
        let set = scale_samples(
            "test".into(),
            DistanceSpec::new(DistanceKind::Edit),
            vec![2.0, 3.0, 4.0],
            vec![5.0, 5.0, 5.0],
            vec![0, 0, 0],
        )
        .unwrap();
        assert_eq!(set.mu0, 3.0);
        assert_eq!(set.sigma0, 1.0);
        assert_eq!(set.d1_hat, vec![2.0, 2.0, 2.0]);
    }

    #[test]
    fn degenerate_null_detected() {
        let err = scale_samples(
            "test".into(),
            DistanceSpec::new(DistanceKind::Edit),
            vec![1.0, 1.0, 1.0],
            vec![2.0, 2.0, 2.0],
            vec![0, 0, 0],
        );
        assert!(matches!(err, Err(Error::DegenerateNull { .. })));
    }

    #[test]
    fn reruns_are_bit_identical() {
        let cfg = small_cfg(
            vec![
                DistanceSpec::new(DistanceKind::Edit),
                DistanceSpec::new(DistanceKind::SpectralAdjacency),
                DistanceSpec::new(DistanceKind::DeltaCon),
            ],
            12,
        );
        let a = run_experiment(&cfg).unwrap();
        let b = run_experiment(&cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn aggregation_is_order_independent() {
        let cfg = small_cfg(vec![DistanceSpec::new(DistanceKind::Edit)], 10);
        let mut outcomes: Vec<SampleOutcome> = (0..10)
            .map(|i| sample_distances(&cfg, i).unwrap())
            .collect();
        let serial = aggregate(&cfg, outcomes.clone()).unwrap();
        outcomes.reverse();
        let shuffled = aggregate(&cfg, outcomes).unwrap();
        assert_eq!(serial, shuffled);
    }

    #[test]
    fn fingerprints_shared_across_distances() {
        let cfg = small_cfg(
            vec![
                DistanceSpec::new(DistanceKind::Edit),
                DistanceSpec::new(DistanceKind::NetSimile),
            ],
            6,
        );
        let sets = run_experiment(&cfg).unwrap();
        assert_eq!(sets[0].fingerprints, sets[1].fingerprints);
    }

    #[test]
    fn null_vs_null_centers_near_zero() {
        let cfg = small_cfg(vec![DistanceSpec::new(DistanceKind::Edit)], 120);
        let sets = run_experiment(&cfg).unwrap();
        let bs = box_stats(&sets[0].d1_hat).unwrap();
        assert!(bs.median.abs() < 0.5, "median {}", bs.median);
        assert!(bs.p5 < 0.0 && bs.p95 > 0.0);
    }

    #[test]
    fn sweep_at_full_k_matches_full_spectrum_run() {
        let cfg = small_cfg(
            vec![DistanceSpec::new(DistanceKind::SpectralAdjacency)],
            15,
        );
        let sets = run_experiment(&cfg).unwrap();
        let full = box_stats(&sets[0].d1_hat).unwrap();
        let sweep = lambda_k_sweep(&cfg, Representation::Adjacency, &[16]).unwrap();
        assert_eq!(sweep.len(), 1);
        assert_eq!(sweep[0].0, 16);
        assert_eq!(sweep[0].1, full);
    }

    #[test]
    fn sweep_rejects_out_of_range_k() {
        let cfg = small_cfg(vec![DistanceSpec::new(DistanceKind::SpectralAdjacency)], 4);
        assert!(matches!(
            lambda_k_sweep(&cfg, Representation::Adjacency, &[0]),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            lambda_k_sweep(&cfg, Representation::Adjacency, &[17]),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn degree_matched_null_matches_per_sample() {
        let cfg = ExperimentConfig {
            null_model: NullModel::degree_matched(),
            alt_spec: EnsembleSpec::new(Model::PreferentialAttachment { l: 2 }, 20),
            distances: vec![DistanceSpec::new(DistanceKind::Edit)],
            n_samples: 3,
            seed: Seed::new(7),
        };
        for i in 0..3 {
            let draws = draw_sample(&cfg, i).unwrap();
            let alt_degrees = generators::degree_sequence_of(&draws.alt);
            assert_eq!(generators::degree_sequence_of(&draws.null_a), alt_degrees);
            assert_eq!(generators::degree_sequence_of(&draws.null_b), alt_degrees);
            assert_ne!(draws.null_a.fingerprint(), draws.null_b.fingerprint());
        }
    }

    #[test]
    fn size_mismatch_rejected_for_matrix_distances() {
        let cfg = ExperimentConfig {
            null_model: NullModel::ensemble(EnsembleSpec::new(Model::Gnp { p: 0.5 }, 10)),
            alt_spec: EnsembleSpec::new(Model::Gnp { p: 0.5 }, 12),
            distances: vec![DistanceSpec::new(DistanceKind::Edit)],
            n_samples: 4,
            seed: Seed::new(1),
        };
        assert!(matches!(cfg.validate(), Err(Error::SizeMismatch { .. })));
    }
}
