//! Exact combinatorics, closed-form constants and prefactors.
//!
//! Everything here is a pure function. Quantities that are rational are kept
//! as [`ExactRational`]; quantities whose magnitude may leave the `f64` range
//! are reported as [`LogScalar`].

mod combinatorics;
mod constants;
mod prefactor;
mod volume;
mod zagier;

pub use combinatorics::{binomial, double_factorial, factorial, rn_signed_count};
pub use constants::{abs_det3_closed_form, e3_closed_form, SqrtTwoInt};
pub use prefactor::{expected_det_closed_form, prefactor_complex, prefactor_real};
pub use volume::{grassmannian_volume, Field};
pub use zagier::{zagier_asymptotic, zagier_cn};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

/// Problem dimensions for lines on a degree `2n-3` hypersurface in
/// projective `n`-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProblemSpec {
    n: u32,
}

impl ProblemSpec {
    pub fn new(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("n must be at least 3, got {n}")));
        }
        if n > 4096 {
            return Err(Error::Domain(format!("n = {n} is unreasonably large")));
        }
        Ok(ProblemSpec { n })
    }

    /// Ambient projective dimension.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Hypersurface degree `d = 2n - 3`; also the coefficient vector length.
    pub fn degree(&self) -> usize {
        2 * self.n as usize - 3
    }

    /// Matrix size `D = 2n - 2`.
    pub fn size(&self) -> usize {
        2 * self.n as usize - 2
    }

    /// Number of coefficient vectors (column pairs), `n - 1`.
    pub fn blocks(&self) -> usize {
        self.n as usize - 1
    }

    /// Number of symbolic variables `N = (n - 1)(2n - 3)`.
    pub fn var_count(&self) -> usize {
        self.blocks() * self.degree()
    }

    /// Exact variance schedule `binom(2n-4, j-1)` for `j = 1..=2n-3`.
    pub fn variances_exact(&self) -> Vec<BigUint> {
        let m = (2 * self.n - 4) as u64;
        (0..self.degree() as u64)
            .map(|k| binomial(m, k).expect("k <= m by construction"))
            .collect()
    }
}

/// Sign and natural-log magnitude of a real number.
///
/// `sign == 0` exactly when `log_magnitude == -inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogScalar {
    pub sign: i8,
    pub log_magnitude: f64,
}

impl LogScalar {
    pub const ZERO: LogScalar = LogScalar {
        sign: 0,
        log_magnitude: f64::NEG_INFINITY,
    };

    pub fn new(sign: i8, log_magnitude: f64) -> Self {
        if sign == 0 || log_magnitude == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            LogScalar {
                sign: sign.signum(),
                log_magnitude,
            }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            LogScalar::new(if x > 0.0 { 1 } else { -1 }, x.abs().ln())
        }
    }

    pub fn from_bigint(x: &BigInt) -> Self {
        match x.sign() {
            Sign::NoSign => Self::ZERO,
            Sign::Plus => LogScalar::new(1, ln_biguint(x.magnitude())),
            Sign::Minus => LogScalar::new(-1, ln_biguint(x.magnitude())),
        }
    }

    pub fn from_rational(x: &ExactRational) -> Self {
        if x.is_zero() {
            return Self::ZERO;
        }
        let sign = if x.is_negative() { -1 } else { 1 };
        let log = ln_biguint(x.numer().magnitude()) - ln_biguint(x.denom().magnitude());
        LogScalar::new(sign, log)
    }

    /// Value as `f64`; overflows to `±inf` rather than failing.
    pub fn to_f64(&self) -> f64 {
        self.sign as f64 * self.log_magnitude.exp()
    }

    pub fn mul(&self, other: &LogScalar) -> LogScalar {
        LogScalar::new(self.sign * other.sign, self.log_magnitude + other.log_magnitude)
    }
}

/// Natural log of a big unsigned integer from its bit length and top 64 bits.
///
/// Returns `-inf` for zero.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        return x.to_u64().expect("fits").to_f64().expect("u64 -> f64").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 bits by construction");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of a positive big integer.
pub fn ln_bigint(x: &BigInt) -> f64 {
    if x.is_negative() {
        f64::NAN
    } else {
        ln_biguint(x.magnitude())
    }
}

/// Natural log of a positive rational.
pub fn ln_rational(x: &ExactRational) -> f64 {
    if x.is_negative() {
        return f64::NAN;
    }
    ln_bigint(x.numer()) - ln_bigint(x.denom())
}

/// Convert a rational to `f64`, going through logs when the ratio of two huge
/// integers would otherwise overflow intermediate conversions.
pub fn rational_to_f64(x: &ExactRational) -> f64 {
    match x.to_f64() {
        Some(v) if v.is_finite() && v != 0.0 => v,
        _ => LogScalar::from_rational(x).to_f64(),
    }
}
