use serde::Serialize;

use crate::error::{Error, Result};
use crate::sampler::RngStream;

pub const CHAR_FN_GRID_LEN: usize = 20;
const MIN_DENSITY_SAMPLES: u64 = 10_000;

/// KS and characteristic-function checks for `(bf-ce, af-cd, ae-bd)` with
/// `a..f` standard normal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityReport {
    pub samples: u64,
    pub seed: u64,
    pub ks_statistic: f64,
    pub p_value: f64,
    pub char_fn_max_abs_dev: f64,
    /// Per grid point: `(t, empirical, exact)`.
    pub char_fn: Vec<([f64; 3], f64, f64)>,
}

/// Radial CDF `1 - (1 + r) e^{-r}`.
fn radial_cdf(r: f64) -> f64 {
    -(-r).exp_m1() - r * (-r).exp()
}

/// Fixed grid: the origin plus 19 points of growing norm up to 3 on a cycle
/// of directions.
pub fn char_fn_grid() -> Vec<[f64; 3]> {
    let s2 = std::f64::consts::FRAC_1_SQRT_2;
    let s3 = 1.0 / 3f64.sqrt();
    let dirs = [
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, 0.0, 1.0],
        [s3, s3, s3],
        [s2, -s2, 0.0],
        [0.0, s2, s2],
        [-s3, s3, -s3],
    ];
    let mut grid = vec![[0.0; 3]];
    for k in 1..CHAR_FN_GRID_LEN {
        let norm = 3.0 * k as f64 / (CHAR_FN_GRID_LEN - 1) as f64;
        let d = dirs[(k - 1) % dirs.len()];
        grid.push([norm * d[0], norm * d[1], norm * d[2]]);
    }
    grid
}

/// Asymptotic Kolmogorov survival function at `lambda`.
fn kolmogorov_q(lambda: f64) -> f64 {
    if lambda < 1e-3 {
        return 1.0;
    }
    if lambda < 1.18 {
        // P(K <= lambda) via the Jacobi-transformed series.
        let c = std::f64::consts::PI.powi(2) / (8.0 * lambda * lambda);
        let s: f64 = (1..=8).map(|k| (-((2 * k - 1) as f64).powi(2) * c).exp()).sum();
        (1.0 - (2.0 * std::f64::consts::PI).sqrt() / lambda * s).clamp(0.0, 1.0)
    } else {
        let s: f64 = (1..=100)
            .map(|k| {
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                sign * (-2.0 * (k * k) as f64 * lambda * lambda).exp()
            })
            .sum();
        (2.0 * s).clamp(0.0, 1.0)
    }
}

/// p-value of a one-sample KS statistic `d` from `n` observations, with the
/// usual small-sample correction of the argument.
pub fn kolmogorov_p_value(d: f64, n: u64) -> f64 {
    let sn = (n as f64).sqrt();
    kolmogorov_q((sn + 0.12 + 0.11 / sn) * d)
}

pub fn density_test_n3(samples: u64, seed: u64) -> Result<DensityReport> {
    if samples < MIN_DENSITY_SAMPLES {
        return Err(Error::Domain(format!(
            "density test needs at least {MIN_DENSITY_SAMPLES} samples, got {samples}"
        )));
    }
    let mut rng = RngStream::new(seed, 0);
    let grid = char_fn_grid();
    let mut cos_sums = vec![0.0; grid.len()];
    let mut radii = Vec::with_capacity(samples as usize);
    for _ in 0..samples {
        let [a, b, c, d, e, f] = std::array::from_fn(|_| rng.standard_normal());
        let p = [b * f - c * e, a * f - c * d, a * e - b * d];
        radii.push((p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt());
        for (acc, t) in cos_sums.iter_mut().zip(&grid) {
            *acc += (t[0] * p[0] + t[1] * p[1] + t[2] * p[2]).cos();
        }
    }
    radii.sort_by(f64::total_cmp);
    let nf = samples as f64;
    let ks_statistic = radii
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let f = radial_cdf(r);
            (f - i as f64 / nf).max((i + 1) as f64 / nf - f)
        })
        .fold(0.0, f64::max);
    let char_fn: Vec<_> = grid
        .iter()
        .zip(&cos_sums)
        .map(|(t, s)| (*t, s / nf, 1.0 / (1.0 + t[0] * t[0] + t[1] * t[1] + t[2] * t[2])))
        .collect();
    let char_fn_max_abs_dev = char_fn.iter().map(|(_, emp, ex)| (emp - ex).abs()).fold(0.0, f64::max);
    Ok(DensityReport {
        samples,
        seed,
        ks_statistic,
        p_value: kolmogorov_p_value(ks_statistic, samples),
        char_fn_max_abs_dev,
        char_fn,
    })
}
