//! Symmetric eigendecomposition, Laplacian pseudoinverse, effective
//! resistance, and the belief-propagation affinity matrix.
//!
//! Dense decompositions handle everything up to [`DENSE_LIMIT`]; above that,
//! extremal-eigenvalue requests go through Lanczos (see [`lanczos`]).

pub mod dense;
pub mod lanczos;

use alloc::vec::Vec;
#[allow(unused_imports)] use num_traits::Float; // float math in no_std builds

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::rng::Seed;

pub use dense::sym_eig;
pub use lanczos::{GraphOperator, SymOperator};

/// Order above which extremal-eigenvalue requests switch to Lanczos.
pub const DENSE_LIMIT: usize = 2048;

/// Asymmetry tolerance for matrices handed to the eigensolver.
const SYMMETRY_TOL: f64 = 1e-10;

/// Matrix representations of a graph whose spectra are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Representation {
    Adjacency,
    Laplacian,
    NormalizedLaplacian,
}

impl Representation {
    pub fn matrix(self, g: &Graph) -> Matrix {
        match self {
            Representation::Adjacency => g.adjacency_matrix(),
            Representation::Laplacian => g.laplacian_matrix(false),
            Representation::NormalizedLaplacian => g.laplacian_matrix(true),
        }
    }

    /// Adjacency spectra are compared largest-first; Laplacian spectra
    /// smallest-first.
    pub fn descending(self) -> bool {
        matches!(self, Representation::Adjacency)
    }

    pub fn id(self) -> &'static str {
        match self {
            Representation::Adjacency => "adjacency",
            Representation::Laplacian => "laplacian",
            Representation::NormalizedLaplacian => "normalized_laplacian",
        }
    }
}

/// Which end of the spectrum a truncated request refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Largest,
    Smallest,
}

/// Eigenvalue count: everything, or a prefix of the comparison order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum KCount {
    All,
    First(usize),
}

impl KCount {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            KCount::All => n,
            KCount::First(k) => k,
        }
    }
}

/// Full sorted spectrum of one matrix representation of a graph.
///
/// Sorted descending for the adjacency representation and ascending for the
/// two Laplacians. For the Laplacians, eigenvalues in `(-1e-8, 0)` are
/// rounding noise below the PSD floor and are clamped to zero.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Spectrum {
    values: Vec<f64>,
    representation: Representation,
}

impl Spectrum {
    /// Compute the full spectrum of `g` in the given representation.
    pub fn compute(g: &Graph, representation: Representation) -> Spectrum {
        let m = representation.matrix(g);
        let mut values = dense::sym_eigenvalues_asc(&m)
            .expect("graph representation matrices are symmetric by construction");
        if !matches!(representation, Representation::Adjacency) {
            for v in values.iter_mut() {
                if *v < 0.0 && *v > -1e-8 {
                    *v = 0.0;
                }
            }
        }
        if representation.descending() {
            values.reverse();
        }
        Spectrum {
            values,
            representation,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn representation(&self) -> Representation {
        self.representation
    }

    /// First `k` values in comparison order, zero-padded past the end of the
    /// spectrum (the tail away from the comparison prefix).
    pub fn prefix_padded(&self, k: usize) -> impl Iterator<Item = f64> + '_ {
        (0..k).map(move |i| self.values.get(i).copied().unwrap_or(0.0))
    }
}

/// The `k` requested eigenvalues of a symmetric matrix, sorted descending
/// for `Which::Largest` and ascending for `Which::Smallest`.
pub fn sym_eigenvalues(m: &Matrix, k: KCount, which: Which) -> Result<Vec<f64>> {
    let n = m.n();
    if !m.is_symmetric(SYMMETRY_TOL) {
        return Err(Error::NotSymmetric);
    }
    let k = k.resolve(n);
    if n > 0 && !(1..=n).contains(&k) {
        return Err(Error::KOutOfRange { k, n });
    }
    if n > DENSE_LIMIT && 4 * k < n {
        return lanczos::lanczos_extremal(m, k, which, Seed::new(LANCZOS_SEED));
    }
    let asc = dense::sym_eigenvalues_asc(m)?;
    Ok(match which {
        Which::Largest => asc.iter().rev().take(k).copied().collect(),
        Which::Smallest => asc.into_iter().take(k).collect(),
    })
}

// Start-vector stream for the deterministic Lanczos paths.
const LANCZOS_SEED: u64 = 0x6c61_6e63_7a6f_7321;

/// Prefix of a graph spectrum in comparison order, choosing the dense or
/// matrix-free Lanczos backend by size.
pub fn graph_spectrum_prefix(g: &Graph, representation: Representation, k: usize) -> Vec<f64> {
    let n = g.n();
    let k = k.min(n);
    if n <= DENSE_LIMIT || 4 * k >= n {
        return Spectrum::compute(g, representation)
            .prefix_padded(k)
            .collect();
    }
    let which = if representation.descending() {
        Which::Largest
    } else {
        Which::Smallest
    };
    let op = GraphOperator::new(g, representation);
    lanczos::lanczos_extremal(&op, k, which, Seed::new(LANCZOS_SEED))
        .expect("Lanczos on a graph operator cannot fail symmetry checks")
}

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
/// Fails with `SingularSystem` on a non-positive pivot.
fn cholesky_lower(m: &Matrix) -> Result<Matrix> {
    let n = m.n();
    let mut l = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            let mut sum = m[(i, j)];
            for k in 0..j {
                sum -= l[(i, k)] * l[(j, k)];
            }
            if i == j {
                if sum <= 0.0 {
                    return Err(Error::SingularSystem);
                }
                l[(i, i)] = sum.sqrt();
            } else {
                l[(i, j)] = sum / l[(j, j)];
            }
        }
    }
    Ok(l)
}

/// Inverse of a symmetric positive definite matrix via its Cholesky factor:
/// invert L by forward substitution, then form L^{-T} L^{-1}.
pub(crate) fn spd_inverse(m: &Matrix) -> Result<Matrix> {
    let l = cholesky_lower(m)?;
    let n = m.n();

    // X = L^{-1}, lower triangular.
    let mut x = Matrix::zeros(n);
    for j in 0..n {
        x[(j, j)] = 1.0 / l[(j, j)];
        for i in (j + 1)..n {
            let mut sum = 0.0;
            for k in j..i {
                sum -= l[(i, k)] * x[(k, j)];
            }
            x[(i, j)] = sum / l[(i, i)];
        }
    }

    // M^{-1} = X^T X; only the lower triangle is computed, then mirrored.
    let mut inv = Matrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            let mut sum = 0.0;
            for k in i..n {
                sum += x[(k, i)] * x[(k, j)];
            }
            inv[(i, j)] = sum;
            inv[(j, i)] = sum;
        }
    }
    Ok(inv)
}

/// Moore-Penrose pseudoinverse of the Laplacian of a connected graph via the
/// rank-completion identity `(L + J/n)^{-1} - J/n`.
///
/// Connectivity is checked the spectral way: the second-smallest eigenvalue
/// of `L` must be at least 1e-10, otherwise the nullspace is more than
/// one-dimensional and `Disconnected` is returned. Callers that hold the
/// graph itself can check components instead and use the same identity
/// through [`resistance_matrix`].
pub fn laplacian_pseudoinverse(l: &Matrix) -> Result<Matrix> {
    if !l.is_symmetric(SYMMETRY_TOL) {
        return Err(Error::NotSymmetric);
    }
    let n = l.n();
    if n > 1 {
        let asc = dense::sym_eigenvalues_asc(l)?;
        if asc[1] < 1e-10 {
            return Err(Error::Disconnected);
        }
    }
    pinv_connected(l)
}

fn pinv_connected(l: &Matrix) -> Result<Matrix> {
    let n = l.n();
    if n == 0 {
        return Ok(Matrix::zeros(0));
    }
    let shift = 1.0 / n as f64;
    let shifted = Matrix::from_fn(n, |i, j| l[(i, j)] + shift);
    let mut inv = spd_inverse(&shifted)?;
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] -= shift;
        }
    }
    Ok(inv)
}

/// Symmetric matrix of pairwise effective resistances with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResistanceMatrix(Matrix);

impl ResistanceMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.0[(u, v)]
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }
}

fn resistance_from_pinv(pinv: &Matrix) -> Matrix {
    let n = pinv.n();
    Matrix::from_fn(n, |u, v| {
        if u == v {
            0.0
        } else {
            pinv[(u, u)] + pinv[(v, v)] - 2.0 * pinv[(u, v)]
        }
    })
}

/// Pairwise effective resistances `R_uv = L+_uu + L+_vv - 2 L+_uv` of a
/// connected graph, treating each edge as a resistor of conductance `w`.
pub fn resistance_matrix(g: &Graph) -> Result<ResistanceMatrix> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let pinv = pinv_connected(&g.laplacian_matrix(false))?;
    Ok(ResistanceMatrix(resistance_from_pinv(&pinv)))
}

/// Resistance extended to disconnected graphs: within a component the
/// effective resistance, across components the fixed `penalty` (callers
/// default it to `n`). Reduces to [`resistance_matrix`] on connected input.
pub fn renormalized_resistance_matrix(g: &Graph, penalty: f64) -> ResistanceMatrix {
    debug_assert!(penalty > 0.0, "penalty must be positive");
    let n = g.n();
    let components = g.connected_components();
    let mut r = Matrix::from_fn(n, |u, v| if u == v { 0.0 } else { penalty });
    for comp in &components {
        let sub = g
            .induced_subgraph(comp)
            .expect("component vertices are valid");
        let pinv = pinv_connected(&sub.laplacian_matrix(false))
            .expect("component Laplacian plus rank completion is positive definite");
        let local = resistance_from_pinv(&pinv);
        for (a, &u) in comp.iter().enumerate() {
            for (b, &v) in comp.iter().enumerate() {
                r[(u, v)] = local[(a, b)];
            }
        }
    }
    ResistanceMatrix(r)
}

/// Belief-propagation affinity matrix `S = [I + eps^2 D - eps A]^{-1}`,
/// computed as an exact dense inverse. With `eps <= 1/(1 + max degree)` the
/// system matrix is strictly diagonally dominant and the factorization
/// cannot hit a non-positive pivot.
pub fn fbp_matrix(g: &Graph, eps: f64) -> Result<Matrix> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::InvalidParams("eps must be positive and finite".into()));
    }
    let n = g.n();
    let mut b = Matrix::zeros(n);
    for i in 0..n {
        b[(i, i)] = 1.0 + eps * eps * g.degree(i);
    }
    for (i, j, w) in g.edges() {
        b[(i, j)] = -eps * w;
        b[(j, i)] = -eps * w;
    }
    spd_inverse(&b)
}

/// The shared default `eps` for comparing two graphs:
/// `1 / (1 + max(maxdeg(g1), maxdeg(g2)))`.
pub fn default_fbp_eps(g1: &Graph, g2: &Graph) -> f64 {
    1.0 / (1.0 + g1.max_degree().max(g2.max_degree()))
}
