//! Scalar sample statistics shared by the distances and the experiment
//! protocol.

use alloc::vec::Vec;
#[allow(unused_imports)] use num_traits::Float; // float math in no_std builds

/// Arithmetic mean; 0 for an empty slice.
pub fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Sample standard deviation with the n-1 denominator; 0 when fewer than two
/// points.
pub fn sample_std(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let mu = mean(xs);
    let ss: f64 = xs.iter().map(|x| (x - mu) * (x - mu)).sum();
    (ss / (xs.len() - 1) as f64).sqrt()
}

fn central_moment(xs: &[f64], mu: f64, p: u32) -> f64 {
    xs.iter().map(|x| (x - mu).powi(p as i32)).sum::<f64>() / xs.len() as f64
}

// Columns whose variance is below this are treated as constant for the
// moment-ratio statistics. Genuine spread in the feature columns is many
// orders of magnitude larger; only rounding noise from averaging identical
// values falls below it.
const CONSTANT_VAR: f64 = 1e-18;

/// Moment skewness m3 / m2^{3/2}; defined as 0 for constant samples.
pub fn skewness(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    let mu = mean(xs);
    let m2 = central_moment(xs, mu, 2);
    if m2 < CONSTANT_VAR {
        return 0.0;
    }
    central_moment(xs, mu, 3) / m2.powf(1.5)
}

/// Excess kurtosis m4 / m2^2 - 3; defined as 0 for constant samples.
pub fn kurtosis(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    let mu = mean(xs);
    let m2 = central_moment(xs, mu, 2);
    if m2 < CONSTANT_VAR {
        return 0.0;
    }
    central_moment(xs, mu, 4) / (m2 * m2) - 3.0
}

/// Quantile of a sorted slice by linear interpolation between the closest
/// order statistics (the rank is `q * (len - 1)`).
///
/// Panics on an empty slice; callers guard.
pub fn quantile_sorted(sorted: &[f64], q: f64) -> f64 {
    assert!(!sorted.is_empty());
    assert!((0.0..=1.0).contains(&q));
    if sorted.len() == 1 {
        return sorted[0];
    }
    let h = q * (sorted.len() - 1) as f64;
    let lo = h.floor() as usize;
    if lo + 1 == sorted.len() {
        return sorted[lo];
    }
    let frac = h - lo as f64;
    sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
}

/// Median via [`quantile_sorted`] on an unsorted sample.
pub fn median(xs: &[f64]) -> f64 {
    let mut v: Vec<f64> = xs.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).expect("non-finite sample"));
    quantile_sorted(&v, 0.5)
}
