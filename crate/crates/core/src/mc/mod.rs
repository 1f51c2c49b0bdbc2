//! Monte Carlo estimators for the determinant moments, assembly into line
//! counts, the cubic distribution tests and the square-root-law study.
//!
//! Work is split into `streams` independent RNG streams. Each stream owns its
//! accumulator; results are merged left to right in stream-id order, so the
//! output depends only on `(seed, streams, samples)` and not on how many
//! hardware threads ran them.

mod density;
mod record;
mod sqrtlaw;
mod stats;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::det::{logabsdet_complex, logabsdet_complex_in_place, logabsdet_real, logabsdet_real_in_place};
use crate::error::{Error, Result};
use crate::exact::{expected_det_closed_form, ln_bigint, ln_rational, prefactor_complex, prefactor_real, zagier_cn, ProblemSpec};
use crate::matrix::{place_banded, realify, SquareMatrix};
use crate::sampler::{RngStream, VarianceSchedule};

pub use density::{density_test_n3, kolmogorov_p_value, DensityReport, CHAR_FN_GRID_LEN};
pub use record::{McRecord, SQRT_LAW_CSV_HEADER, SCHEMA_VERSION};
pub use sqrtlaw::{sqrt_law_study, write_sqrt_law_csv, SqrtLawRow};
pub use stats::{MCEstimate, RunningStats};

/// Largest n accepted by the estimators unless the caller overrides the guard.
pub const MC_MAX_N: u32 = 30;
pub const MIN_SAMPLES: u64 = 1000;

/// Samples are rescaled by `exp(-scale)` once the log of the expected value
/// passes this threshold.
const SHIFT_THRESHOLD: f64 = 300.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    pub streams: u32,
    /// Accept n above [`MC_MAX_N`].
    pub allow_large_n: bool,
}

impl McConfig {
    pub fn new(samples: u64, seed: u64, streams: u32) -> Self {
        McConfig {
            samples,
            seed,
            streams,
            allow_large_n: false,
        }
    }

    fn validate(&self, spec: ProblemSpec) -> Result<()> {
        if self.samples < MIN_SAMPLES {
            return Err(Error::Domain(format!(
                "samples must be at least {MIN_SAMPLES}, got {}",
                self.samples
            )));
        }
        if self.streams == 0 {
            return Err(Error::Domain("streams must be at least 1".into()));
        }
        if self.samples < self.streams as u64 * 2 {
            return Err(Error::Domain("each stream needs at least two samples".into()));
        }
        if spec.n() > MC_MAX_N && !self.allow_large_n {
            return Err(Error::Domain(format!(
                "n = {} exceeds the Monte Carlo cap {MC_MAX_N}; override explicitly to proceed",
                spec.n()
            )));
        }
        Ok(())
    }

    fn stream_samples(&self, stream: u32) -> u64 {
        let base = self.samples / self.streams as u64;
        base + u64::from((stream as u64) < self.samples % self.streams as u64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Functional {
    AbsDet,
    SignedDet,
    AbsDetSqComplex,
}

fn log_scale(spec: ProblemSpec, f: Functional) -> Result<f64> {
    Ok(match f {
        Functional::AbsDet | Functional::SignedDet => ln_bigint(&expected_det_closed_form(spec)),
        Functional::AbsDetSqComplex => ln_bigint(&zagier_cn(spec.n())?) - ln_rational(&prefactor_complex(spec)),
    })
}

fn run_stream(spec: ProblemSpec, cfg: &McConfig, stream: u32, f: Functional, shift: f64) -> RunningStats {
    let schedule = VarianceSchedule::new(spec);
    let mut rng = RngStream::new(cfg.seed, stream as u64);
    let size = spec.size();
    let mut stats = RunningStats::new();
    let count = cfg.stream_samples(stream);
    match f {
        Functional::AbsDet | Functional::SignedDet => {
            let mut coeffs = vec![0.0; spec.var_count()];
            let mut buf = vec![0.0; size * size];
            for _ in 0..count {
                coeffs.chunks_exact_mut(spec.degree()).for_each(|v| schedule.fill_real(&mut rng, v));
                buf.fill(0.0);
                place_banded(spec, &coeffs, &mut buf);
                let d = logabsdet_real_in_place(size, &mut buf);
                let mag = (d.log_modulus - shift).exp();
                stats.push(if f == Functional::SignedDet { d.sign as f64 * mag } else { mag });
            }
        }
        Functional::AbsDetSqComplex => {
            let mut coeffs = vec![Complex64::default(); spec.var_count()];
            let mut buf = vec![Complex64::default(); size * size];
            for _ in 0..count {
                coeffs.chunks_exact_mut(spec.degree()).for_each(|v| schedule.fill_complex(&mut rng, v));
                buf.fill(Complex64::default());
                place_banded(spec, &coeffs, &mut buf);
                let d = logabsdet_complex_in_place(size, &mut buf);
                stats.push((2.0 * d.log_modulus - shift).exp());
            }
        }
    }
    stats
}

fn estimate(spec: ProblemSpec, cfg: &McConfig, f: Functional) -> Result<MCEstimate> {
    cfg.validate(spec)?;
    let scale = log_scale(spec, f)?;
    let shift = if scale > SHIFT_THRESHOLD { scale } else { 0.0 };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.streams as usize)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
    let parts: Vec<RunningStats> = pool.install(|| {
        (0..cfg.streams)
            .into_par_iter()
            .map(|s| run_stream(spec, cfg, s, f, shift))
            .collect()
    });
    let merged = parts.iter().fold(RunningStats::new(), |mut acc, p| {
        acc.merge(p);
        acc
    });
    Ok(MCEstimate::from_stats(&merged, cfg.seed, cfg.streams, shift))
}

/// Mean of `|det J_n|` over fresh real draws.
pub fn estimate_abs_det_real(spec: ProblemSpec, cfg: &McConfig) -> Result<MCEstimate> {
    estimate(spec, cfg, Functional::AbsDet)
}

/// Mean of `det J_n` (signed) over fresh real draws.
pub fn estimate_signed_det_real(spec: ProblemSpec, cfg: &McConfig) -> Result<MCEstimate> {
    estimate(spec, cfg, Functional::SignedDet)
}

/// Mean of `|det J_n^C|^2` over fresh complex draws.
pub fn estimate_abs_det_sq_complex(spec: ProblemSpec, cfg: &McConfig) -> Result<MCEstimate> {
    estimate(spec, cfg, Functional::AbsDetSqComplex)
}

/// Prefactor times a raw determinant moment, assembled in log space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineCountEstimate {
    pub n: u32,
    pub raw: MCEstimate,
    pub prefactor_log: f64,
    pub value: f64,
    pub std_error: f64,
    pub value_ci95: (f64, f64),
}

impl LineCountEstimate {
    fn assemble(n: u32, raw: MCEstimate, prefactor_log: f64) -> Self {
        let scale = (prefactor_log + raw.log_shift).exp();
        let value = if raw.mean > 0.0 {
            (prefactor_log + raw.log_shift + raw.mean.ln()).exp()
        } else {
            scale * raw.mean
        };
        let std_error = scale * raw.std_error;
        LineCountEstimate {
            n,
            raw,
            prefactor_log,
            value,
            std_error,
            value_ci95: (value - 1.96 * std_error, value + 1.96 * std_error),
        }
    }

    pub fn z_score(&self, target: f64) -> f64 {
        (self.value - target) / self.std_error
    }
}

/// Estimate of `E_n`, the expected number of real lines.
pub fn estimate_en(spec: ProblemSpec, cfg: &McConfig) -> Result<LineCountEstimate> {
    let raw = estimate_abs_det_real(spec, cfg)?;
    Ok(LineCountEstimate::assemble(spec.n(), raw, ln_rational(&prefactor_real(spec))))
}

/// Estimate of `C_n` from the complex second moment.
pub fn estimate_cn_mc(spec: ProblemSpec, cfg: &McConfig) -> Result<LineCountEstimate> {
    let raw = estimate_abs_det_sq_complex(spec, cfg)?;
    Ok(LineCountEstimate::assemble(spec.n(), raw, ln_rational(&prefactor_complex(spec))))
}

/// Result of comparing `|det A|^2` with `det realify(A)` on random inputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RealifyReport {
    pub trials: u64,
    pub seed: u64,
    pub max_rel_error: f64,
    pub negative_dets: u64,
    pub failures: u64,
}

impl RealifyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.negative_dets == 0
    }
}

pub const REALIFY_TOLERANCE: f64 = 1e-9;

/// Draw `trials` complex matrices with standard complex Gaussian entries,
/// cycling through sizes 1 to 8, and check the block embedding identity.
pub fn realify_check(trials: u64, seed: u64) -> RealifyReport {
    let mut rng = RngStream::new(seed, 0);
    let mut max_rel_error: f64 = 0.0;
    let mut negative_dets = 0;
    let mut failures = 0;
    for t in 0..trials {
        let m = (t % 8) as usize + 1;
        let mut a = SquareMatrix::filled(m, Complex64::default());
        for z in a.as_mut_slice() {
            *z = Complex64::new(rng.standard_normal(), rng.standard_normal()) * std::f64::consts::FRAC_1_SQRT_2;
        }
        let direct = (2.0 * logabsdet_complex(&a).log_modulus).exp();
        let embedded = logabsdet_real(&realify(&a));
        let value = embedded.value();
        if value < 0.0 {
            negative_dets += 1;
        }
        let rel = (value - direct).abs() / direct;
        max_rel_error = max_rel_error.max(rel);
        if rel.is_nan() || rel > REALIFY_TOLERANCE {
            failures += 1;
        }
    }
    RealifyReport {
        trials,
        seed,
        max_rel_error,
        negative_dets,
        failures,
    }
}
