//! Seeded samplers for six random-graph ensembles.
//!
//! Every draw is a pure function of `(spec, seed)`. Connectedness
//! conditioning rejects disconnected draws, giving each retry a fresh
//! substream so rejected draws never correlate accepted ones.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashSet;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};
use crate::rng::Seed;

/// One random-graph ensemble: model with parameters, size, and the
/// connectedness conditioning policy.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnsembleSpec {
    #[cfg_attr(feature = "serde", serde(flatten))]
    pub model: Model,
    pub n: usize,
    #[cfg_attr(feature = "serde", serde(default = "default_true"))]
    pub require_connected: bool,
    #[cfg_attr(feature = "serde", serde(default = "default_retries"))]
    pub max_retries: u32,
}

#[cfg(feature = "serde")]
fn default_true() -> bool {
    true
}

#[cfg(not(feature = "serde"))]
#[allow(dead_code)]
fn default_true() -> bool {
    true
}

fn default_retries() -> u32 {
    1000
}

/// Model-specific parameters.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(
    feature = "serde",
    serde(tag = "model", content = "params", rename_all = "snake_case")
)]
pub enum Model {
    /// Each of the C(n,2) edges independently with probability `p`.
    Gnp { p: f64 },
    /// Two balanced communities; within-community probability `p`, cross
    /// `q`. Community sizes differ by at most one.
    Sbm2 { p: f64, q: f64 },
    /// Start from a star on `l + 1` vertices (hub id `l`), then attach each
    /// new vertex to `l` distinct existing vertices drawn proportionally to
    /// their pre-arrival degrees.
    PreferentialAttachment { l: usize },
    /// Ring lattice with `k_ring / 2` neighbors per side; each ring edge is
    /// rewired with probability `beta` to a uniformly random non-adjacent
    /// target.
    WattsStrogatz { k_ring: usize, beta: f64 },
    /// Simple graph with exactly the target degrees: Havel-Hakimi
    /// construction followed by `10 m` attempted degree-preserving
    /// double-edge swaps.
    RandomDegreeSequence { degrees: DegreeSequence },
    /// rows x cols grid with 4-neighbor interior connectivity.
    Lattice2d { rows: usize, cols: usize },
}

impl Model {
    pub fn id(&self) -> &'static str {
        match self {
            Model::Gnp { .. } => "gnp",
            Model::Sbm2 { .. } => "sbm2",
            Model::PreferentialAttachment { .. } => "preferential_attachment",
            Model::WattsStrogatz { .. } => "watts_strogatz",
            Model::RandomDegreeSequence { .. } => "random_degree_sequence",
            Model::Lattice2d { .. } => "lattice2d",
        }
    }
}

impl EnsembleSpec {
    pub fn new(model: Model, n: usize) -> Self {
        EnsembleSpec {
            model,
            n,
            require_connected: true,
            max_retries: default_retries(),
        }
    }

    pub fn accept_disconnected(mut self) -> Self {
        self.require_connected = false;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let bad = |msg: alloc::string::String| Err(Error::InvalidParams(msg));
        match &self.model {
            Model::Gnp { p } => {
                if !(0.0..=1.0).contains(p) {
                    return bad(format!("gnp probability {p} outside [0, 1]"));
                }
            }
            Model::Sbm2 { p, q } => {
                if !(0.0..=1.0).contains(p) || !(0.0..=1.0).contains(q) {
                    return bad(format!("sbm2 probabilities ({p}, {q}) outside [0, 1]"));
                }
                if n < 2 {
                    return bad("sbm2 needs at least two vertices".into());
                }
            }
            Model::PreferentialAttachment { l } => {
                if *l < 1 || *l >= n {
                    return bad(format!("preferential attachment needs 1 <= l < n, got l={l}, n={n}"));
                }
            }
            Model::WattsStrogatz { k_ring, beta } => {
                if k_ring % 2 != 0 || *k_ring >= n {
                    return bad(format!("watts-strogatz needs even k_ring < n, got k_ring={k_ring}, n={n}"));
                }
                if !(0.0..=1.0).contains(beta) {
                    return bad(format!("rewiring probability {beta} outside [0, 1]"));
                }
            }
            Model::RandomDegreeSequence { degrees } => {
                if degrees.len() != n {
                    return bad(format!(
                        "degree sequence length {} does not match n={n}",
                        degrees.len()
                    ));
                }
                if !degrees.is_graphical() {
                    return bad("degree sequence is not graphical".into());
                }
            }
            Model::Lattice2d { rows, cols } => {
                if rows * cols != n {
                    return bad(format!("lattice {rows}x{cols} does not have n={n} vertices"));
                }
                if *rows == 0 || *cols == 0 {
                    return bad("lattice dimensions must be positive".into());
                }
            }
        }
        Ok(())
    }
}

// Retry substreams hang off this salt so they cannot collide with the
// experiment driver's role derivations.
const RETRY_SALT: u64 = 0x7265_7472_79u64;

/// Draw one graph from the ensemble. Deterministic given `(spec, seed)`;
/// when `require_connected` is set, disconnected draws are discarded and a
/// fresh substream drawn, up to `max_retries` attempts.
pub fn sample(spec: &EnsembleSpec, seed: Seed) -> Result<Graph> {
    spec.validate()?;
    let attempts = spec.max_retries.max(1);
    for attempt in 0..attempts {
        let mut rng = seed.child(RETRY_SALT).child(attempt as u64).rng();
        let g = draw_once(spec, &mut rng)?;
        if !spec.require_connected || g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted { attempts })
}

fn draw_once(spec: &EnsembleSpec, rng: &mut impl Rng) -> Result<Graph> {
    let n = spec.n;
    match &spec.model {
        Model::Gnp { p } => {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.gen_bool(*p) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(n, &edges)
        }
        Model::Sbm2 { p, q } => {
            let split = n.div_ceil(2); // community 0 is {0 .. split-1}
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    let within = (i < split) == (j < split);
                    if rng.gen_bool(if within { *p } else { *q }) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(n, &edges)
        }
        Model::PreferentialAttachment { l } => preferential_attachment(n, *l, rng),
        Model::WattsStrogatz { k_ring, beta } => watts_strogatz(n, *k_ring, *beta, rng),
        Model::RandomDegreeSequence { degrees } => {
            random_degree_sequence(&degrees.as_integers()?, rng)
        }
        Model::Lattice2d { rows, cols } => lattice2d(*rows, *cols),
    }
}

/// Star initialization on `l + 1` vertices with hub `l`, then each arriving
/// vertex attaches to `l` distinct targets drawn sequentially without
/// replacement, proportionally to the degrees as they were before the
/// arrival. Edge count is exactly `l (n - l)` for every draw.
fn preferential_attachment(n: usize, l: usize, rng: &mut impl Rng) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(l * (n - l));
    let mut degree = vec![0u64; n];
    for leaf in 0..l {
        edges.push((leaf, l));
        degree[leaf] = 1;
    }
    degree[l] = l as u64;

    let mut chosen = vec![false; n];
    for v in (l + 1)..n {
        let mut total: u64 = degree[..v].iter().sum();
        let mut picks = Vec::with_capacity(l);
        for _ in 0..l {
            let mut ticket = rng.gen_range(0..total);
            let mut pick = usize::MAX;
            for (u, &d) in degree[..v].iter().enumerate() {
                if chosen[u] {
                    continue;
                }
                if ticket < d {
                    pick = u;
                    break;
                }
                ticket -= d;
            }
            debug_assert!(pick != usize::MAX, "weighted draw fell off the end");
            chosen[pick] = true;
            picks.push(pick);
            total -= degree[pick];
        }
        for &u in &picks {
            chosen[u] = false;
            edges.push((u, v));
        }
        // degrees update only after the whole arrival
        for &u in &picks {
            degree[u] += 1;
        }
        degree[v] = l as u64;
    }
    Graph::new(n, &edges)
}

/// Ring lattice with `k_ring / 2` neighbors on each side, then one pass over
/// the ring edges in construction order, rewiring each with probability
/// `beta` to `(i, target)` where the target is uniform over vertices neither
/// equal nor already adjacent to `i` at rewiring time. A vertex adjacent to
/// everything keeps its edge. Edge count is preserved.
fn watts_strogatz(n: usize, k_ring: usize, beta: f64, rng: &mut impl Rng) -> Result<Graph> {
    let mut edge_set: HashSet<(usize, usize)> = HashSet::new();
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    for i in 0..n {
        for off in 1..=(k_ring / 2) {
            edge_set.insert(key(i, (i + off) % n));
        }
    }
    let mut adjacent_count = vec![0usize; n];
    for &(a, b) in &edge_set {
        adjacent_count[a] += 1;
        adjacent_count[b] += 1;
    }

    for i in 0..n {
        for off in 1..=(k_ring / 2) {
            let j = (i + off) % n;
            if !rng.gen_bool(beta) {
                continue;
            }
            if !edge_set.contains(&key(i, j)) {
                continue; // already rewired away by an earlier pass
            }
            if adjacent_count[i] >= n - 1 {
                continue; // no eligible target
            }
            let target = loop {
                let t = rng.gen_range(0..n);
                if t != i && !edge_set.contains(&key(i, t)) {
                    break t;
                }
            };
            edge_set.remove(&key(i, j));
            adjacent_count[i] -= 1;
            adjacent_count[j] -= 1;
            edge_set.insert(key(i, target));
            adjacent_count[i] += 1;
            adjacent_count[target] += 1;
        }
    }

    let mut edges: Vec<(usize, usize)> = edge_set.into_iter().collect();
    edges.sort_unstable();
    Graph::new(n, &edges)
}

/// Havel-Hakimi realization of the degree sequence, then `10 m` attempted
/// degree-preserving double-edge swaps, rejecting swaps that would create
/// self-loops or duplicate edges. Degrees are preserved exactly.
fn random_degree_sequence(target: &[usize], rng: &mut impl Rng) -> Result<Graph> {
    let n = target.len();
    let mut residual: Vec<(usize, usize)> = target.iter().copied().zip(0..n).collect();
    let mut edges: Vec<(u32, u32)> = Vec::new();

    // Havel-Hakimi: repeatedly satisfy the vertex of largest residual
    // degree. The graphical check in validate() guarantees success.
    loop {
        residual.sort_unstable_by(|a, b| b.cmp(a));
        let (d, v) = residual[0];
        if d == 0 {
            break;
        }
        if d >= residual.len() {
            return Err(Error::InvalidParams("degree sequence is not graphical".into()));
        }
        for idx in 1..=d {
            let (du, u) = residual[idx];
            if du == 0 {
                return Err(Error::InvalidParams("degree sequence is not graphical".into()));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            edges.push((a as u32, b as u32));
            residual[idx].0 -= 1;
        }
        residual[0].0 = 0;
    }

    let m = edges.len();
    let mut edge_set: HashSet<(u32, u32)> = edges.iter().copied().collect();
    if m >= 2 {
        for _ in 0..(10 * m) {
            let e1 = rng.gen_range(0..m);
            let e2 = rng.gen_range(0..m);
            if e1 == e2 {
                continue;
            }
            let (a, b) = edges[e1];
            let (c, d) = edges[e2];
            // orientation coin: (a,b),(c,d) -> (a,d),(c,b) or (a,c),(b,d)
            let (p, q) = if rng.gen_bool(0.5) { (d, c) } else { (c, d) };
            let (w, x) = (a, p);
            let (y, z) = (b, q);
            if w == x || y == z {
                continue;
            }
            let new1 = if w < x { (w, x) } else { (x, w) };
            let new2 = if y < z { (y, z) } else { (z, y) };
            if new1 == new2 || edge_set.contains(&new1) || edge_set.contains(&new2) {
                continue;
            }
            edge_set.remove(&edges[e1]);
            edge_set.remove(&edges[e2]);
            edge_set.insert(new1);
            edge_set.insert(new2);
            edges[e1] = new1;
            edges[e2] = new2;
        }
    }

    edges.sort_unstable();
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a as usize, b as usize)).collect();
    Graph::new(n, &pairs)
}

fn lattice2d(rows: usize, cols: usize) -> Result<Graph> {
    let at = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((at(r, c), at(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((at(r, c), at(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, &edges)
}

/// Uncorrelated-graph probability with the same expected volume as the
/// given alternative: `l(n-l) / C(n,2)` for preferential attachment and the
/// expected-edge-count ratio for the two-community blockmodel. Other models
/// are unsupported.
pub fn volume_match_gnp(alt: &EnsembleSpec) -> Result<f64> {
    alt.validate()?;
    let n = alt.n;
    let pairs = (n * (n - 1) / 2) as f64;
    match &alt.model {
        Model::PreferentialAttachment { l } => Ok((l * (n - l)) as f64 / pairs),
        Model::Sbm2 { p, q } => {
            let n1 = n.div_ceil(2);
            let n2 = n - n1;
            let within = (n1 * (n1 - 1) / 2 + n2 * (n2 - 1) / 2) as f64;
            let cross = (n1 * n2) as f64;
            Ok((within * p + cross * q) / pairs)
        }
        _ => Err(Error::UnsupportedModel),
    }
}

/// Unweighted degrees in vertex order.
pub fn degree_sequence_of(g: &Graph) -> DegreeSequence {
    DegreeSequence((0..g.n()).map(|i| g.unweighted_degree(i) as f64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seeded(spec: &EnsembleSpec, s: u64) -> Graph {
        sample(spec, Seed::new(s)).unwrap()
    }

    #[test]
    fn gnp_full_probability_gives_complete_graph() {
        let spec = EnsembleSpec::new(Model::Gnp { p: 1.0 }, 5);
        for s in 0..3 {
            let g = seeded(&spec, s);
            assert_eq!(g.edge_count(), 10);
        }
    }

    #[test]
    fn gnp_zero_probability_needs_no_connectivity() {
        let spec = EnsembleSpec::new(Model::Gnp { p: 0.0 }, 4).accept_disconnected();
        assert_eq!(seeded(&spec, 1).edge_count(), 0);
    }

    #[test]
    fn gnp_rejection_exhausts_on_impossible_connectivity() {
        let mut spec = EnsembleSpec::new(Model::Gnp { p: 0.0 }, 4);
        spec.max_retries = 5;
        assert!(matches!(
            sample(&spec, Seed::new(0)),
            Err(Error::RetriesExhausted { attempts: 5 })
        ));
    }

    #[test]
    fn pa_edge_count_identity() {
        // m = l (n - l) for every draw
        let spec = EnsembleSpec::new(Model::PreferentialAttachment { l: 6 }, 100);
        for s in 0..5 {
            let g = seeded(&spec, s);
            assert_eq!(g.edge_count(), 6 * 94);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn pa_degenerate_l_equals_n_minus_1() {
        let spec = EnsembleSpec::new(Model::PreferentialAttachment { l: 4 }, 5);
        let g = seeded(&spec, 9);
        assert_eq!(g.edge_count(), 4); // star
    }

    #[test]
    fn ws_beta_zero_is_ring_lattice() {
        let spec = EnsembleSpec::new(
            Model::WattsStrogatz { k_ring: 4, beta: 0.0 },
            20,
        );
        let g = seeded(&spec, 3);
        assert_eq!(g.edge_count(), 40);
        for i in 0..20 {
            assert_eq!(g.unweighted_degree(i), 4);
        }
    }

    #[test]
    fn ws_rewiring_preserves_edge_count() {
        let spec = EnsembleSpec::new(
            Model::WattsStrogatz { k_ring: 4, beta: 0.7 },
            30,
        );
        for s in 0..5 {
            let g = seeded(&spec, s);
            assert_eq!(g.edge_count(), 60);
        }
    }

    #[test]
    fn lattice_2x2_is_four_cycle() {
        let spec = EnsembleSpec::new(Model::Lattice2d { rows: 2, cols: 2 }, 4);
        let g = seeded(&spec, 0);
        assert_eq!(g.edge_count(), 4);
        assert!(g.has_edge(0, 1) && g.has_edge(2, 3) && g.has_edge(0, 2) && g.has_edge(1, 3));
    }

    #[test]
    fn lattice_edge_count_formula() {
        let spec = EnsembleSpec::new(Model::Lattice2d { rows: 10, cols: 10 }, 100);
        let g = seeded(&spec, 0);
        assert_eq!(g.edge_count(), 10 * 9 + 10 * 9);
    }

    #[test]
    fn rds_realizes_degrees_exactly() {
        let target = DegreeSequence(alloc::vec![3.0, 2.0, 2.0, 2.0, 1.0, 2.0]);
        let spec = EnsembleSpec::new(
            Model::RandomDegreeSequence { degrees: target.clone() },
            6,
        )
        .accept_disconnected();
        for s in 0..10 {
            let g = seeded(&spec, s);
            assert_eq!(degree_sequence_of(&g), target);
        }
    }

    #[test]
    fn rds_rejects_non_graphical() {
        let spec = EnsembleSpec::new(
            Model::RandomDegreeSequence {
                degrees: DegreeSequence(alloc::vec![3.0, 3.0, 1.0, 1.0]),
            },
            4,
        );
        assert!(matches!(sample(&spec, Seed::new(0)), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn determinism_and_seed_sensitivity() {
        let spec = EnsembleSpec::new(Model::Gnp { p: 0.3 }, 30);
        let a = seeded(&spec, 11);
        let b = seeded(&spec, 11);
        assert_eq!(a.fingerprint(), b.fingerprint());
        let c = seeded(&spec, 12);
        assert_ne!(a.fingerprint(), c.fingerprint());
    }

    #[test]
    fn volume_matching_values() {
        let pa = EnsembleSpec::new(Model::PreferentialAttachment { l: 6 }, 100);
        let p = volume_match_gnp(&pa).unwrap();
        assert!((p - 564.0 / 4950.0).abs() < 1e-12);

        let sbm = EnsembleSpec::new(Model::Sbm2 { p: 0.228, q: 0.012 }, 100);
        let p = volume_match_gnp(&sbm).unwrap();
        // 2 * C(50,2) * 0.228 + 2500 * 0.012 = 588.6 expected edges
        assert!((p - 588.6 / 4950.0).abs() < 1e-12);

        // degenerate pa: l = n-1 gives p = 2/n
        let pa = EnsembleSpec::new(Model::PreferentialAttachment { l: 9 }, 10);
        assert!((volume_match_gnp(&pa).unwrap() - 0.2).abs() < 1e-12);

        let ws = EnsembleSpec::new(Model::WattsStrogatz { k_ring: 4, beta: 0.1 }, 100);
        assert_eq!(volume_match_gnp(&ws), Err(Error::UnsupportedModel));
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(EnsembleSpec::new(Model::Gnp { p: 1.5 }, 5).validate().is_err());
        assert!(EnsembleSpec::new(Model::PreferentialAttachment { l: 5 }, 5)
            .validate()
            .is_err());
        assert!(EnsembleSpec::new(Model::WattsStrogatz { k_ring: 3, beta: 0.1 }, 10)
            .validate()
            .is_err());
        assert!(EnsembleSpec::new(Model::Lattice2d { rows: 3, cols: 3 }, 10)
            .validate()
            .is_err());
    }

    #[test]
    fn degree_sequence_of_examples() {
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(degree_sequence_of(&k3).0, alloc::vec![2.0, 2.0, 2.0]);
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(degree_sequence_of(&star).0, alloc::vec![3.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn lattice_degree_census() {
        let spec = EnsembleSpec::new(Model::Lattice2d { rows: 10, cols: 10 }, 100);
        let g = seeded(&spec, 0);
        let mut census = [0usize; 5];
        for i in 0..100 {
            census[g.unweighted_degree(i)] += 1;
        }
        assert_eq!(census[2], 4); // corners
        assert_eq!(census[3], 32); // edges
        assert_eq!(census[4], 64); // interior
    }
}
