use serde::Serialize;

use super::{LineCountEstimate, MCEstimate};
use crate::sampler::NORMAL_TRANSFORM;

/// Version of the frozen JSON and CSV output schemas.
pub const SCHEMA_VERSION: u32 = 1;
pub const SQRT_LAW_CSV_HEADER: &str = "n,log_en,log_cn,ratio,lower_bound_ratio,std_error";

/// One Monte Carlo result as emitted on stdout.
///
/// `mean`, `std_error` and `ci95` describe the raw accumulator, which holds
/// samples divided by `exp(log_shift)`. `value` and its error are in natural
/// units: the assembled line count, or the unshifted raw mean when no
/// prefactor applies (`prefactor_log == 0`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct McRecord {
    pub schema_version: u32,
    pub op: String,
    pub n: u32,
    pub mean: f64,
    pub variance: f64,
    pub std_error: f64,
    pub ci95: (f64, f64),
    pub samples: u64,
    pub seed: u64,
    pub streams: u32,
    pub log_shift: f64,
    pub prefactor_log: f64,
    pub value: f64,
    pub value_std_error: f64,
    pub value_ci95: (f64, f64),
    pub normal_transform: &'static str,
}

impl McRecord {
    pub fn from_raw(op: &str, n: u32, raw: &MCEstimate) -> Self {
        let value = raw.unshifted_mean();
        let se = raw.unshifted_std_error();
        Self::build(op, n, raw, 0.0, value, se)
    }

    pub fn from_line_count(op: &str, est: &LineCountEstimate) -> Self {
        Self::build(op, est.n, &est.raw, est.prefactor_log, est.value, est.std_error)
    }

    fn build(op: &str, n: u32, raw: &MCEstimate, prefactor_log: f64, value: f64, se: f64) -> Self {
        McRecord {
            schema_version: SCHEMA_VERSION,
            op: op.to_string(),
            n,
            mean: raw.mean,
            variance: raw.variance,
            std_error: raw.std_error,
            ci95: raw.ci95,
            samples: raw.count,
            seed: raw.seed,
            streams: raw.streams,
            log_shift: raw.log_shift,
            prefactor_log,
            value,
            value_std_error: se,
            value_ci95: (value - 1.96 * se, value + 1.96 * se),
            normal_transform: NORMAL_TRANSFORM,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} n={}: value = {} +/- {} (95% CI [{}, {}])\n",
            self.op, self.n, self.value, self.value_std_error, self.value_ci95.0, self.value_ci95.1
        );
        s += &format!(
            "  raw mean = {} (std error {}, log shift {}), prefactor log = {}\n",
            self.mean, self.std_error, self.log_shift, self.prefactor_log
        );
        s += &format!("  samples = {}, seed = {}, streams = {}\n", self.samples, self.seed, self.streams);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mc::RunningStats;

    #[test]
    fn json_has_required_keys() {
        let mut s = RunningStats::new();
        [1.0, 2.0, 4.0].iter().for_each(|&x| s.push(x));
        let raw = MCEstimate::from_stats(&s, 42, 2, 0.0);
        let v: serde_json::Value = serde_json::from_str(&McRecord::from_raw("absdet", 3, &raw).to_json()).unwrap();
        for key in ["op", "n", "mean", "std_error", "ci95", "samples", "seed", "streams", "prefactor_log", "value"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["ci95"].as_array().unwrap().len(), 2);
        assert_eq!(v["seed"], 42);
        assert_eq!(v["samples"], 3);
    }
}
