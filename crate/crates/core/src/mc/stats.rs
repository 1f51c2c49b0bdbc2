use serde::Serialize;

/// One-pass mean and variance (Welford), mergeable with Chan's update.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RunningStats {
    count: u64,
    mean: f64,
    m2: f64,
}

impl RunningStats {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn merge(&mut self, other: &RunningStats) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let n = self.count + other.count;
        let delta = other.mean - self.mean;
        let w = other.count as f64 / n as f64;
        self.mean += delta * w;
        self.m2 += other.m2 + delta * delta * self.count as f64 * w;
        self.count = n;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        if self.count > 1 {
            self.m2 / (self.count - 1) as f64
        } else {
            0.0
        }
    }
}

/// Monte Carlo estimate of a mean with its provenance.
///
/// When `log_shift != 0` every sample was divided by `exp(log_shift)` before
/// accumulation, so the estimated expectation is `mean * exp(log_shift)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MCEstimate {
    pub mean: f64,
    pub variance: f64,
    pub count: u64,
    pub std_error: f64,
    pub ci95: (f64, f64),
    pub seed: u64,
    pub streams: u32,
    pub log_shift: f64,
}

impl MCEstimate {
    pub fn from_stats(stats: &RunningStats, seed: u64, streams: u32, log_shift: f64) -> Self {
        let std_error = (stats.variance() / stats.count() as f64).sqrt();
        MCEstimate {
            mean: stats.mean(),
            variance: stats.variance(),
            count: stats.count(),
            std_error,
            ci95: (stats.mean() - 1.96 * std_error, stats.mean() + 1.96 * std_error),
            seed,
            streams,
            log_shift,
        }
    }

    /// Mean in unshifted units; may overflow to infinity when the shift is large.
    pub fn unshifted_mean(&self) -> f64 {
        self.mean * self.log_shift.exp()
    }

    pub fn unshifted_std_error(&self) -> f64 {
        self.std_error * self.log_shift.exp()
    }

    /// Number of standard errors separating the mean from `target`
    /// (given in unshifted units).
    pub fn z_score(&self, target: f64) -> f64 {
        (self.unshifted_mean() - target) / self.unshifted_std_error()
    }
}
