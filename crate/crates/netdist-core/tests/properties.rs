//! Invariant checks over randomized inputs: graph identities, spectral
//! identities, metric properties of the distances, and sampler laws.

use netdist_core::distances::{self, DistanceKind, DistanceSpec};
use netdist_core::generators::{self, EnsembleSpec, Model};
use netdist_core::graph::Graph;
use netdist_core::linalg::{KCount, Representation, Spectrum};
use netdist_core::rng::Seed;
use netdist_core::Error;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn gnp(n: usize, p: f64, seed: u64, connected: bool) -> Graph {
    let mut spec = EnsembleSpec::new(Model::Gnp { p }, n);
    spec.require_connected = connected;
    generators::sample(&spec, Seed::new(seed)).unwrap()
}

fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut Seed::new(seed).rng());
    perm
}

fn triangle_count(g: &Graph) -> usize {
    let mut count = 0;
    for (i, j, _) in g.edges() {
        for &(k, _) in g.neighbors(i) {
            let k = k as usize;
            if k > j && g.has_edge(j, k) {
                count += 1;
            }
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn handshake_and_matrix_identities(seed in any::<u64>(), n in 1usize..24, p in 0.0f64..1.0) {
        let g = gnp(n, p, seed, false);

        // handshake: sum of degrees is twice the total edge weight
        let degree_sum: f64 = (0..n).map(|i| g.degree(i)).sum();
        prop_assert!((degree_sum - 2.0 * g.edge_count() as f64).abs() < 1e-9);

        // adjacency matrix is bit-exactly symmetric
        let a = g.adjacency_matrix();
        for i in 0..n {
            for j in 0..n {
                prop_assert!(a[(i, j)] == a[(j, i)]);
            }
        }

        // Laplacian rows sum to zero
        let l = g.laplacian_matrix(false);
        for i in 0..n {
            let s: f64 = l.row(i).iter().sum();
            prop_assert!(s.abs() < 1e-9);
        }
    }

    #[test]
    fn spectra_permutation_invariant(seed in any::<u64>(), n in 2usize..16, p in 0.1f64..0.9) {
        let g = gnp(n, p, seed, false);
        let perm = random_permutation(n, seed ^ 0xabcd);
        let h = g.permute(&perm).unwrap();
        for repr in [Representation::Adjacency, Representation::Laplacian, Representation::NormalizedLaplacian] {
            let sg = Spectrum::compute(&g, repr);
            let sh = Spectrum::compute(&h, repr);
            for (x, y) in sg.values().iter().zip(sh.values()) {
                prop_assert!((x - y).abs() < 1e-8, "{repr:?}: {x} vs {y}");
            }
        }
    }

    #[test]
    fn distances_symmetric_and_zero_on_self(seed in any::<u64>(), n in 2usize..12, p in 0.2f64..0.9) {
        let g1 = gnp(n, p, seed, false);
        let g2 = gnp(n, p, seed ^ 0x55aa, false);
        for kind in DistanceKind::ALL {
            if kind == DistanceKind::Resistance && !(g1.is_connected() && g2.is_connected()) {
                continue;
            }
            let spec = DistanceSpec::new(kind);
            let d12 = distances::evaluate(&spec, &g1, &g2).unwrap();
            let d21 = distances::evaluate(&spec, &g2, &g1).unwrap();
            prop_assert!((d12 - d21).abs() < 1e-12, "{kind:?} asymmetric");
            if kind != DistanceKind::Resistance || g1.is_connected() {
                let dss = distances::evaluate(&spec, &g1, &g1).unwrap();
                prop_assert!(dss <= 1e-10, "{kind:?} self-distance {dss}");
            }
        }
    }

    #[test]
    fn lambda_k_distance_nondecreasing_in_k(seed in any::<u64>(), n in 2usize..14) {
        let g1 = gnp(n, 0.5, seed, false);
        let g2 = gnp(n, 0.5, seed ^ 1, false);
        for repr in [Representation::Adjacency, Representation::Laplacian] {
            let mut last = 0.0f64;
            for k in 1..=n {
                let d = distances::spectral_distance(&g1, &g2, repr, KCount::First(k), 2.0);
                prop_assert!(d + 1e-12 >= last);
                last = d;
            }
        }
    }

    #[test]
    fn spectral_triangle_inequality(seed in any::<u64>(), n in 2usize..12, p_choice in 0usize..3) {
        let p_norm = [1.0, 2.0, f64::INFINITY][p_choice];
        let a = gnp(n, 0.4, seed, false);
        let b = gnp(n, 0.4, seed ^ 2, false);
        let c = gnp(n, 0.4, seed ^ 3, false);
        for repr in [Representation::Adjacency, Representation::Laplacian, Representation::NormalizedLaplacian] {
            let dab = distances::spectral_distance(&a, &b, repr, KCount::All, p_norm);
            let dbc = distances::spectral_distance(&b, &c, repr, KCount::All, p_norm);
            let dac = distances::spectral_distance(&a, &c, repr, KCount::All, p_norm);
            prop_assert!(dac <= dab + dbc + 1e-9, "{repr:?} p={p_norm}");
        }
    }
}

#[test]
fn zero_eigenvalue_multiplicity_counts_components() {
    for seed in 0..50u64 {
        let n = 3 + (seed as usize * 7) % 10;
        let p = 0.15 + 0.4 * ((seed % 5) as f64) / 5.0;
        let g = gnp(n, p, seed, false);
        let components = g.connected_components().len();
        let spectrum = Spectrum::compute(&g, Representation::Laplacian);
        let zeros = spectrum.values().iter().filter(|v| v.abs() <= 1e-8).count();
        assert_eq!(zeros, components, "seed {seed}");
        // smallest Laplacian eigenvalue is 0 up to 1e-10
        assert!(spectrum.values()[0].abs() <= 1e-10);
    }
}

#[test]
fn trace_identities_on_random_graphs() {
    for seed in 0..100u64 {
        let n = 2 + (seed as usize * 13) % 99;
        let p = 0.05 + 0.6 * ((seed % 7) as f64) / 7.0;
        let g = gnp(n, p, seed, false);
        let m = g.edge_count() as f64;

        let adj = Spectrum::compute(&g, Representation::Adjacency);
        let sum_a: f64 = adj.values().iter().sum();
        assert!(sum_a.abs() < 1e-6, "adjacency trace {sum_a} at seed {seed}");

        let lap = Spectrum::compute(&g, Representation::Laplacian);
        let sum_l: f64 = lap.values().iter().sum();
        assert!((sum_l - 2.0 * m).abs() < 1e-6, "Laplacian trace at seed {seed}");

        let cubes: f64 = adj.values().iter().map(|x| x * x * x).sum();
        let triangles = triangle_count(&g) as f64;
        assert!(
            (cubes - 6.0 * triangles).abs() < 1e-6,
            "third moment {cubes} vs {} at seed {seed}",
            6.0 * triangles
        );
    }
}

#[test]
fn regular_graph_spectral_pairing() {
    // On an unweighted r-regular graph the representations are affinely
    // related: normalized Laplacian is L / r entrywise, and the Laplacian
    // spectrum is r minus the reversed adjacency spectrum.
    for (g, r) in [
        (
            generators::sample(
                &EnsembleSpec::new(Model::WattsStrogatz { k_ring: 4, beta: 0.0 }, 17),
                Seed::new(0),
            )
            .unwrap(),
            4.0,
        ),
        (Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(), 2.0),
        (
            Graph::new(
                4,
                &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            )
            .unwrap(),
            3.0,
        ),
    ] {
        let l = g.laplacian_matrix(false);
        let norm = g.laplacian_matrix(true);
        for i in 0..g.n() {
            for j in 0..g.n() {
                assert!((norm[(i, j)] - l[(i, j)] / r).abs() < 1e-12);
            }
        }
        let adj = Spectrum::compute(&g, Representation::Adjacency); // descending
        let lap = Spectrum::compute(&g, Representation::Laplacian); // ascending
        for (lam_l, lam_a) in lap.values().iter().zip(adj.values()) {
            assert!((lam_l - (r - lam_a)).abs() < 1e-8);
        }
    }
}

#[test]
fn resistance_is_a_metric_on_connected_graphs() {
    let mut checked = 0;
    let mut seed = 0u64;
    while checked < 20 {
        seed += 1;
        let n = 4 + (seed as usize) % 9; // up to 12
        let g = gnp(n, 0.45, seed, true);
        let r = netdist_core::linalg::resistance_matrix(&g).unwrap();
        for u in 0..n {
            for v in 0..n {
                assert!((r.get(u, v) - r.get(v, u)).abs() < 1e-12);
                for w in 0..n {
                    assert!(
                        r.get(u, w) <= r.get(u, v) + r.get(v, w) + 1e-9,
                        "triangle inequality failed at seed {seed}"
                    );
                }
            }
        }
        checked += 1;
    }
}

#[test]
fn sbm_with_equal_probabilities_is_gnp() {
    // With q = p the blockmodel collapses to G(n, p). Chi-square test on
    // edge counts over 500 samples against the binomial law; the critical
    // value is chi2(df = 7, alpha = 0.01).
    let n = 30usize;
    let p = 0.3f64;
    let trials = n * (n - 1) / 2;
    let spec = EnsembleSpec::new(Model::Sbm2 { p, q: p }, n).accept_disconnected();
    let samples = 500usize;
    let counts: Vec<usize> = (0..samples)
        .map(|s| {
            generators::sample(&spec, Seed::new(s as u64))
                .unwrap()
                .edge_count()
        })
        .collect();

    // binomial pmf over the full support, computed by the ratio recurrence
    let mut pmf = vec![0.0f64; trials + 1];
    pmf[0] = (1.0 - p).powi(trials as i32);
    for k in 0..trials {
        pmf[k + 1] = pmf[k] * ((trials - k) as f64) / ((k + 1) as f64) * p / (1.0 - p);
    }

    // eight bins with roughly equal probability around the mean
    let mean = trials as f64 * p;
    let sd = (trials as f64 * p * (1.0 - p)).sqrt();
    let edges: Vec<f64> = [-1.15, -0.67, -0.32, 0.0, 0.32, 0.67, 1.15]
        .iter()
        .map(|z| mean + z * sd)
        .collect();
    let bin_of = |x: f64| edges.iter().position(|e| x < *e).unwrap_or(edges.len());

    let mut observed = [0.0f64; 8];
    for &c in &counts {
        observed[bin_of(c as f64)] += 1.0;
    }
    let mut expected = [0.0f64; 8];
    for (k, &q) in pmf.iter().enumerate() {
        expected[bin_of(k as f64)] += q * samples as f64;
    }

    let chi2: f64 = observed
        .iter()
        .zip(&expected)
        .map(|(o, e)| (o - e) * (o - e) / e)
        .sum();
    assert!(chi2 < 18.475, "chi-square statistic {chi2} rejects at alpha = 0.01");
}

#[test]
fn gnp_edge_count_concentration() {
    // mean edge count over 1000 samples at n=100, p=0.12 lies within
    // 3 sigma of the binomial expectation 594
    let spec = EnsembleSpec::new(Model::Gnp { p: 0.12 }, 100).accept_disconnected();
    let total: usize = (0..1000)
        .map(|s| generators::sample(&spec, Seed::new(s)).unwrap().edge_count())
        .sum();
    let mean = total as f64 / 1000.0;
    let sigma = (4950.0f64 * 0.12 * 0.88).sqrt();
    assert!((mean - 594.0).abs() < 3.0 * sigma, "mean {mean}");
}

#[test]
fn deltacon_default_eps_keeps_system_definite() {
    for seed in 0..20u64 {
        let g = gnp(12, 0.4, seed, false);
        let eps = 1.0 / (1.0 + g.max_degree());
        assert!(netdist_core::linalg::fbp_matrix(&g, eps).is_ok());
    }
}

#[test]
fn renormalized_resistance_err_paths() {
    let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(
        distances::resistance_distance(&two_k2, &p4, false, None),
        Err(Error::Disconnected)
    );
    assert!(distances::resistance_distance(&two_k2, &p4, true, None).is_ok());
}
