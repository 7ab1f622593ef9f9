//! Named benchmark presets: the five ensemble comparisons shipped with the
//! tool, each pairing a null model against a structured alternative at
//! n = 100 with volume matching.
//!
//! | preset     | null                               | alternative            |
//! |------------|------------------------------------|------------------------|
//! | sbm        | G(n, 0.12)                         | blockmodel (.228/.012) |
//! | pa         | G(n, 0.12)                         | pref. attachment l=6   |
//! | pa-vs-rddg | degree-matched random graph        | pref. attachment l=6   |
//! | ws         | G(n, k/(n-1)), may be disconnected | Watts-Strogatz 4/0.1   |
//! | lattice    | degree-matched random graph        | 10x10 lattice          |
//!
//! The ws null is not conditioned on connectivity (at p ~ 0.04 most draws
//! are disconnected), which is why that preset scores resistance through
//! the renormalized variant. The Watts-Strogatz parameters k_ring = 4,
//! beta = 0.1 are this tool's documented defaults.

use netdist_core::distances::{DistanceKind, DistanceSpec};
use netdist_core::experiment::{ExperimentConfig, NullModel};
use netdist_core::generators::{self, EnsembleSpec, Model};
use netdist_core::linalg::{KCount, Representation};
use netdist_core::rng::Seed;

pub const PRESET_NAMES: [&str; 5] = ["sbm", "pa", "pa-vs-rddg", "ws", "lattice"];

pub const DEFAULT_N: usize = 100;
pub const DEFAULT_SAMPLES: usize = 500;

/// k grid for the eigenvalue sweeps. Laplacian sweeps drop k = 1: the first
/// Laplacian eigenvalue is identically zero, so that point carries no signal
/// and its null spread degenerates.
pub const SWEEP_KS: [usize; 9] = [1, 2, 3, 5, 10, 25, 50, 75, 100];

fn sweep_grid(representation: Representation) -> Vec<usize> {
    match representation {
        Representation::Adjacency => SWEEP_KS.to_vec(),
        _ => SWEEP_KS[1..].to_vec(),
    }
}

pub struct Preset {
    pub name: &'static str,
    pub experiment: ExperimentConfig,
    pub sweeps: Vec<(Representation, Vec<usize>)>,
}

fn battery(resistance: DistanceKind) -> Vec<DistanceSpec> {
    vec![
        DistanceSpec::new(DistanceKind::SpectralAdjacency),
        DistanceSpec::new(DistanceKind::SpectralLaplacian),
        DistanceSpec::new(DistanceKind::SpectralNormalizedLaplacian),
        DistanceSpec::new(DistanceKind::Edit),
        DistanceSpec::new(resistance),
        DistanceSpec::new(DistanceKind::DeltaCon),
        DistanceSpec::new(DistanceKind::NetSimile),
    ]
}

/// Resolve a preset by name.
pub fn build(name: &str, seed: Seed, n_samples: usize) -> Option<Preset> {
    let n = DEFAULT_N;
    match name {
        "sbm" => {
            let mut distances = battery(DistanceKind::Resistance);
            distances.push(
                DistanceSpec::new(DistanceKind::SpectralAdjacency).with_k(KCount::First(2)),
            );
            distances.push(
                DistanceSpec::new(DistanceKind::SpectralNormalizedLaplacian)
                    .with_k(KCount::First(2)),
            );
            Some(Preset {
                name: "sbm",
                experiment: ExperimentConfig {
                    null_model: NullModel::ensemble(EnsembleSpec::new(Model::Gnp { p: 0.12 }, n)),
                    alt_spec: EnsembleSpec::new(Model::Sbm2 { p: 0.228, q: 0.012 }, n),
                    distances,
                    n_samples,
                    seed,
                },
                sweeps: vec![
                    (Representation::Adjacency, sweep_grid(Representation::Adjacency)),
                    (
                        Representation::NormalizedLaplacian,
                        sweep_grid(Representation::NormalizedLaplacian),
                    ),
                ],
            })
        }
        "pa" => Some(Preset {
            name: "pa",
            experiment: ExperimentConfig {
                // p(6) = 564/4950 rounded to the 0.12 used throughout
                null_model: NullModel::ensemble(EnsembleSpec::new(Model::Gnp { p: 0.12 }, n)),
                alt_spec: EnsembleSpec::new(Model::PreferentialAttachment { l: 6 }, n),
                distances: battery(DistanceKind::Resistance),
                n_samples,
                seed,
            },
            sweeps: vec![
                (Representation::Laplacian, sweep_grid(Representation::Laplacian)),
                (Representation::Adjacency, sweep_grid(Representation::Adjacency)),
            ],
        }),
        "pa-vs-rddg" => Some(Preset {
            name: "pa-vs-rddg",
            experiment: ExperimentConfig {
                null_model: NullModel::degree_matched(),
                alt_spec: EnsembleSpec::new(Model::PreferentialAttachment { l: 6 }, n),
                distances: battery(DistanceKind::Resistance),
                n_samples,
                seed,
            },
            sweeps: vec![],
        }),
        "ws" => {
            let k_ring = 4usize;
            let beta = 0.1;
            // volume match: m = n k / 2 edges, so p = k / (n - 1)
            let p = k_ring as f64 / (n - 1) as f64;
            Some(Preset {
                name: "ws",
                experiment: ExperimentConfig {
                    null_model: NullModel::ensemble(
                        EnsembleSpec::new(Model::Gnp { p }, n).accept_disconnected(),
                    ),
                    alt_spec: EnsembleSpec::new(Model::WattsStrogatz { k_ring, beta }, n),
                    distances: battery(DistanceKind::ResistanceRenormalized),
                    n_samples,
                    seed,
                },
                sweeps: vec![
                    (Representation::Adjacency, sweep_grid(Representation::Adjacency)),
                    (
                        Representation::NormalizedLaplacian,
                        sweep_grid(Representation::NormalizedLaplacian),
                    ),
                ],
            })
        }
        "lattice" => {
            let lattice = EnsembleSpec::new(Model::Lattice2d { rows: 10, cols: 10 }, n);
            let degrees = generators::degree_sequence_of(
                &generators::sample(&lattice, Seed::new(0)).expect("lattice is deterministic"),
            );
            Some(Preset {
                name: "lattice",
                experiment: ExperimentConfig {
                    null_model: NullModel::ensemble(EnsembleSpec::new(
                        Model::RandomDegreeSequence { degrees },
                        n,
                    )),
                    alt_spec: lattice,
                    distances: battery(DistanceKind::Resistance),
                    n_samples,
                    seed,
                },
                sweeps: vec![
                    (Representation::Adjacency, sweep_grid(Representation::Adjacency)),
                    (Representation::Laplacian, sweep_grid(Representation::Laplacian)),
                    (
                        Representation::NormalizedLaplacian,
                        sweep_grid(Representation::NormalizedLaplacian),
                    ),
                ],
            })
        }
        _ => None,
    }
}
