//! Lanczos iteration with full reorthogonalization.
//!
//! Used for the large-n path where only k << n extremal eigenvalues are
//! wanted and a dense O(n^3) decomposition would be wasteful. The basis is
//! reorthogonalized against all previous vectors on every step; at the
//! subspace sizes used here (a few hundred at most) the O(n j) cost per step
//! is irrelevant next to the stability it buys.

use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)] use num_traits::Float; // float math in no_std builds
use rand::Rng;

use crate::error::Result;
use crate::graph::Graph;
use crate::linalg::dense::tql_implicit;
use crate::linalg::{Representation, Which};
use crate::matrix::Matrix;
use crate::rng::Seed;

/// Symmetric linear operator: everything Lanczos needs.
pub trait SymOperator {
    fn dim(&self) -> usize;
    fn apply(&self, x: &[f64], out: &mut [f64]);
}

impl SymOperator for Matrix {
    fn dim(&self) -> usize {
        self.n()
    }

    fn apply(&self, x: &[f64], out: &mut [f64]) {
        self.matvec(x, out);
    }
}

/// Matrix-free operator for a graph representation; matvecs run over the
/// adjacency lists in O(n + m).
pub struct GraphOperator<'g> {
    graph: &'g Graph,
    representation: Representation,
    degrees: Vec<f64>,
    inv_sqrt_deg: Vec<f64>,
}

impl<'g> GraphOperator<'g> {
    pub fn new(graph: &'g Graph, representation: Representation) -> Self {
        let degrees: Vec<f64> = (0..graph.n()).map(|i| graph.degree(i)).collect();
        let inv_sqrt_deg = degrees
            .iter()
            .map(|&d| if d != 0.0 { 1.0 / d.sqrt() } else { 0.0 })
            .collect();
        GraphOperator {
            graph,
            representation,
            degrees,
            inv_sqrt_deg,
        }
    }
}

impl SymOperator for GraphOperator<'_> {
    fn dim(&self) -> usize {
        self.graph.n()
    }

    fn apply(&self, x: &[f64], out: &mut [f64]) {
        let n = self.graph.n();
        match self.representation {
            Representation::Adjacency => {
                for i in 0..n {
                    let mut acc = 0.0;
                    for &(j, w) in self.graph.neighbors(i) {
                        acc += w * x[j as usize];
                    }
                    out[i] = acc;
                }
            }
            Representation::Laplacian => {
                for i in 0..n {
                    let mut acc = self.degrees[i] * x[i];
                    for &(j, w) in self.graph.neighbors(i) {
                        acc -= w * x[j as usize];
                    }
                    out[i] = acc;
                }
            }
            Representation::NormalizedLaplacian => {
                // D^{-1/2} (D - A) D^{-1/2} applied directly
                for i in 0..n {
                    let si = self.inv_sqrt_deg[i];
                    let mut acc = self.degrees[i] * si * si * x[i];
                    for &(j, w) in self.graph.neighbors(i) {
                        let j = j as usize;
                        acc -= w * si * self.inv_sqrt_deg[j] * x[j];
                    }
                    out[i] = acc;
                }
            }
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// The k extremal eigenvalues of a symmetric operator, sorted descending for
/// `Which::Largest` and ascending for `Which::Smallest`.
///
/// Runs a fixed-size Krylov subspace of `max(6k + 40, 96)` steps (capped at
/// n), restarting with a fresh random direction whenever the iteration finds
/// an invariant subspace. Deterministic: start vectors come from a fixed
/// stream of `seed`.
pub fn lanczos_extremal(
    op: &impl SymOperator,
    k: usize,
    which: Which,
    seed: Seed,
) -> Result<Vec<f64>> {
    let n = op.dim();
    debug_assert!(k >= 1 && k <= n);
    let steps = (6 * k + 40).max(96).min(n);

    let mut rng = seed.rng();
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(steps);
    let mut alpha: Vec<f64> = Vec::with_capacity(steps);
    let mut beta: Vec<f64> = Vec::with_capacity(steps); // beta[j] couples v_j and v_{j+1}

    let mut v = random_unit(n, &mut rng);
    let mut w = vec![0.0f64; n];
    let mut op_scale = 1.0f64;

    while basis.len() < steps {
        basis.push(v.clone());
        op.apply(&v, &mut w);
        let a = dot(&v, &w);
        alpha.push(a);
        op_scale = op_scale.max(a.abs());

        // w -= alpha v + beta v_prev, then full reorthogonalization (twice).
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi -= a * vi;
        }
        for _ in 0..2 {
            for u in &basis {
                let c = dot(u, &w);
                for (wi, ui) in w.iter_mut().zip(u) {
                    *wi -= c * ui;
                }
            }
        }

        if basis.len() == steps {
            break;
        }

        let b = norm(&w);
        if b <= 1e-12 * op_scale.max(1.0) {
            // Invariant subspace found; continue in a fresh random direction
            // orthogonal to everything so far.
            let mut fresh = random_unit(n, &mut rng);
            for _ in 0..2 {
                for u in &basis {
                    let c = dot(u, &fresh);
                    for (fi, ui) in fresh.iter_mut().zip(u) {
                        *fi -= c * ui;
                    }
                }
            }
            let fnorm = norm(&fresh);
            if fnorm <= 1e-12 {
                break; // the whole space is spanned
            }
            for fi in fresh.iter_mut() {
                *fi /= fnorm;
            }
            beta.push(0.0);
            v = fresh;
        } else {
            beta.push(b);
            for (vi, wi) in w.iter().enumerate() {
                v[vi] = wi / b;
            }
        }
    }

    // Ritz values of the tridiagonal projection.
    let m = alpha.len();
    let mut d = alpha;
    let mut e = vec![0.0f64; m];
    for (i, &b) in beta.iter().enumerate().take(m.saturating_sub(1)) {
        e[i + 1] = b;
    }
    tql_implicit(&mut d, &mut e, None)?;

    let take = k.min(d.len());
    Ok(match which {
        Which::Largest => d.iter().rev().take(take).copied().collect(),
        Which::Smallest => d.iter().take(take).copied().collect(),
    })
}

fn random_unit(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let nrm = norm(&v);
        if nrm > 1e-6 {
            return v.iter().map(|x| x / nrm).collect();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::dense::sym_eigenvalues_asc;
    use crate::rng::Seed;
    use rand::Rng;

    #[test]
    fn matches_dense_on_random_symmetric() {
        let n = 120;
        let mut rng = Seed::new(5).rng();
        let mut a = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let x: f64 = rng.gen_range(-1.0..1.0);
                a[(i, j)] = x;
                a[(j, i)] = x;
            }
        }
        let dense = sym_eigenvalues_asc(&a).unwrap();
        let top = lanczos_extremal(&a, 4, Which::Largest, Seed::new(9)).unwrap();
        for (i, got) in top.iter().enumerate() {
            let want = dense[n - 1 - i];
            assert!((got - want).abs() < 1e-7, "largest #{i}: {got} vs {want}");
        }
        let bottom = lanczos_extremal(&a, 4, Which::Smallest, Seed::new(9)).unwrap();
        for (i, got) in bottom.iter().enumerate() {
            assert!((got - dense[i]).abs() < 1e-7, "smallest #{i}");
        }
    }

    #[test]
    fn graph_operator_matches_dense_matrices() {
        let mut rng = Seed::new(11).rng();
        let mut edges = alloc::vec::Vec::new();
        let n = 60;
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(0.1) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        for repr in [
            Representation::Adjacency,
            Representation::Laplacian,
            Representation::NormalizedLaplacian,
        ] {
            let op = GraphOperator::new(&g, repr);
            let m = repr.matrix(&g);
            let x: alloc::vec::Vec<f64> = (0..n).map(|i| ((i * 7 % 13) as f64) - 6.0).collect();
            let mut got = alloc::vec![0.0; n];
            let mut want = alloc::vec![0.0; n];
            op.apply(&x, &mut got);
            m.matvec(&x, &mut want);
            for (a, b) in got.iter().zip(&want) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }
}
