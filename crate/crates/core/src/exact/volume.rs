//! Volumes of real and complex Grassmannians from the orthogonal and unitary
//! group volumes. Gamma values at integer and half-integer points are exact,
//! with powers of `sqrt(pi)` tracked separately, so the only floating-point
//! step is the final `coeff * pi^(e/2)`.

use num_bigint::BigInt;
use num_traits::One;

use super::combinatorics::factorial;
use super::{rational_to_f64, ExactRational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

/// `coeff * pi^(half_pi_exp / 2)`.
#[derive(Debug, Clone, PartialEq)]
struct PiMonomial {
    coeff: ExactRational,
    half_pi_exp: i64,
}

impl PiMonomial {
    fn rational(coeff: ExactRational) -> Self {
        PiMonomial {
            coeff,
            half_pi_exp: 0,
        }
    }

    fn mul(&self, other: &PiMonomial) -> PiMonomial {
        PiMonomial {
            coeff: &self.coeff * &other.coeff,
            half_pi_exp: self.half_pi_exp + other.half_pi_exp,
        }
    }

    fn div(&self, other: &PiMonomial) -> PiMonomial {
        PiMonomial {
            coeff: &self.coeff / &other.coeff,
            half_pi_exp: self.half_pi_exp - other.half_pi_exp,
        }
    }

    fn to_f64(&self) -> f64 {
        rational_to_f64(&self.coeff) * std::f64::consts::PI.powf(self.half_pi_exp as f64 / 2.0)
    }
}

fn int(x: impl Into<BigInt>) -> ExactRational {
    ExactRational::from(x.into())
}

/// `Gamma(i / 2)` for `i >= 1`.
fn gamma_half(i: u64) -> PiMonomial {
    if i.is_multiple_of(2) {
        PiMonomial::rational(int(factorial(i / 2 - 1)))
    } else {
        // Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi)
        let m = (i - 1) / 2;
        let den = BigInt::from(4).pow(m as u32) * BigInt::from(factorial(m));
        PiMonomial {
            coeff: ExactRational::new(BigInt::from(factorial(2 * m)), den),
            half_pi_exp: 1,
        }
    }
}

/// `|O(k)| = 2^k pi^((k^2+k)/4) / prod_{i=1}^{k} Gamma(i/2)`.
fn orthogonal_volume(k: u64) -> PiMonomial {
    let num = PiMonomial {
        coeff: int(BigInt::from(2).pow(k as u32)),
        half_pi_exp: ((k * k + k) / 2) as i64,
    };
    let den = (1..=k).fold(PiMonomial::rational(ExactRational::one()), |acc, i| {
        acc.mul(&gamma_half(i))
    });
    num.div(&den)
}

/// `|U(k)| = 2^k pi^((k^2+k)/2) / prod_{i=1}^{k-1} i!`.
fn unitary_volume(k: u64) -> PiMonomial {
    let den = (1..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(factorial(i)));
    PiMonomial {
        coeff: ExactRational::new(BigInt::from(2).pow(k as u32), den),
        half_pi_exp: (k * k + k) as i64,
    }
}

fn group_volume(k: u64, field: Field) -> PiMonomial {
    if k == 0 {
        return PiMonomial::rational(ExactRational::one());
    }
    match field {
        Field::Real => orthogonal_volume(k),
        Field::Complex => unitary_volume(k),
    }
}

/// Volume of the Grassmannian of `k`-planes in `m`-space over the given field,
/// `|G(m)| / (|G(k)| |G(m-k)|)`.
pub fn grassmannian_volume(k: u32, m: u32, field: Field) -> Result<f64> {
    if k < 1 || k >= m {
        return Err(Error::Domain(format!(
            "grassmannian volume needs 1 <= k < m, got k = {k}, m = {m}"
        )));
    }
    let (k, m) = (k as u64, m as u64);
    let vol = group_volume(m, field)
        .div(&group_volume(k, field))
        .div(&group_volume(m - k, field));
    Ok(vol.to_f64())
}
