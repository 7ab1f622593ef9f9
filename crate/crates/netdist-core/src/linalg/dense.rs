//! Dense symmetric eigendecomposition.
//!
//! Classic two-stage scheme: Householder reduction to symmetric tridiagonal
//! form, then implicit-shift QL iteration on the tridiagonal matrix with
//! accumulation of the orthogonal transform. This is the standard EISPACK
//! tred2/tql2 pair; it is unconditionally stable for symmetric input and
//! needs no pivoting decisions.

use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)] use num_traits::Float; // float math in no_std builds

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Maximum QL sweeps per eigenvalue before declaring failure. The usual
/// bound in the literature is 30; symmetric tridiagonal QL essentially
/// always converges in a handful.
const MAX_SWEEPS: usize = 64;

fn hypot(a: f64, b: f64) -> f64 {
    Float::hypot(a, b)
}

/// Householder reduction of a symmetric matrix to tridiagonal form.
/// Returns `(d, e, v)` with diagonal `d`, subdiagonal `e` (with `e[0] = 0`),
/// and the accumulated orthogonal transform `v` (columns).
pub(crate) fn householder_tridiag(a: &Matrix) -> (Vec<f64>, Vec<f64>, Matrix) {
    let n = a.n();
    let mut v = a.clone();
    let mut d = vec![0.0f64; n];
    let mut e = vec![0.0f64; n];
    if n == 0 {
        return (d, e, v);
    }

    for j in 0..n {
        d[j] = v[(n - 1, j)];
    }

    for i in (1..n).rev() {
        // Scale to avoid under/overflow in the reflector norm.
        let mut h = 0.0;
        let mut scale = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[(i - 1, j)];
                v[(i, j)] = 0.0;
                v[(j, i)] = 0.0;
            }
        } else {
            for item in d.iter_mut().take(i) {
                *item /= scale;
                h += *item * *item;
            }
            let f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }

            // Apply the similarity transformation to the remaining block.
            for j in 0..i {
                let f = d[j];
                v[(j, i)] = f;
                let mut g = e[j] + v[(j, j)] * f;
                for k in (j + 1)..i {
                    g += v[(k, j)] * d[k];
                    e[k] += v[(k, j)] * f;
                }
                e[j] = g;
            }
            let mut f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                let f = d[j];
                let g = e[j];
                for k in j..i {
                    v[(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[(i - 1, j)];
                v[(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    // Accumulate the Householder transformations.
    for i in 0..(n - 1) {
        v[(n - 1, i)] = v[(i, i)];
        v[(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for (k, item) in d.iter_mut().enumerate().take(i + 1) {
                *item = v[(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[(k, i + 1)] * v[(k, j)];
                }
                for k in 0..=i {
                    v[(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[(n - 1, j)];
        v[(n - 1, j)] = 0.0;
    }
    v[(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;

    (d, e, v)
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix.
///
/// `d` holds the diagonal, `e` the subdiagonal in `e[1..]`. On success `d`
/// contains the eigenvalues in ascending order and, when given, `v` has the
/// corresponding eigenvectors as columns.
pub(crate) fn tql_implicit(d: &mut [f64], e: &mut [f64], mut v: Option<&mut Matrix>) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let eps = f64::EPSILON;
    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        loop {
            // Look for a negligible subdiagonal element.
            let mut m = l;
            while m < n - 1 {
                if e[m].abs() <= eps * tst1 {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }

            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_SWEEPS {
                    return Err(Error::InvalidParams(
                        "tridiagonal QL iteration failed to converge".into(),
                    ));
                }

                // Form the implicit shift.
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                // QL sweep.
                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    if let Some(vv) = v.as_deref_mut() {
                        for k in 0..n {
                            let h = vv[(k, i + 1)];
                            vv[(k, i + 1)] = s * vv[(k, i)] + c * h;
                            vv[(k, i)] = c * vv[(k, i)] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }

    // Sort ascending, carrying eigenvector columns along.
    for i in 0..n.saturating_sub(1) {
        let mut k = i;
        let mut p = d[i];
        for j in (i + 1)..n {
            if d[j] < p {
                k = j;
                p = d[j];
            }
        }
        if k != i {
            d.swap(i, k);
            if let Some(vv) = v.as_deref_mut() {
                for r in 0..n {
                    let tmp = vv[(r, i)];
                    vv[(r, i)] = vv[(r, k)];
                    vv[(r, k)] = tmp;
                }
            }
        }
    }

    Ok(())
}

/// Eigendecomposition of a symmetric matrix: ascending eigenvalues and the
/// matching eigenvectors as columns of an orthogonal matrix.
pub fn sym_eig(a: &Matrix) -> Result<(Vec<f64>, Matrix)> {
    let (mut d, mut e, mut v) = householder_tridiag(a);
    tql_implicit(&mut d, &mut e, Some(&mut v))?;
    Ok((d, v))
}

/// Ascending eigenvalues only.
pub fn sym_eigenvalues_asc(a: &Matrix) -> Result<Vec<f64>> {
    // The accumulated transform is cheap at the orders this crate handles,
    // so the values-only path shares the full decomposition.
    let (mut d, mut e, _v) = householder_tridiag(a);
    tql_implicit(&mut d, &mut e, None)?;
    Ok(d)
}
