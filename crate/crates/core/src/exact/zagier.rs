use num_bigint::BigInt;
use num_traits::Zero;

use super::LogScalar;
use crate::error::{Error, Result};

/// Number of lines on a generic degree `2n-3` hypersurface in complex
/// projective `n`-space: the coefficient of `x^(n-1)` in
/// `(1 - x) prod_{j=0}^{2n-3} (2n-3-j + j x)`.
pub fn zagier_cn(n: u32) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::Domain(format!("n must be at least 3, got {n}")));
    }
    let d = 2 * n as i64 - 3;
    // coefficients in increasing degree
    let mut poly: Vec<BigInt> = vec![BigInt::from(1), BigInt::from(-1)];
    for j in 0..=d {
        poly = mul_linear(&poly, BigInt::from(d - j), BigInt::from(j));
    }
    Ok(poly
        .get(n as usize - 1)
        .cloned()
        .unwrap_or_else(BigInt::zero))
}

/// Multiply `p(x)` by `(c0 + c1 x)`.
fn mul_linear(p: &[BigInt], c0: BigInt, c1: BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + 1];
    for (i, a) in p.iter().enumerate() {
        out[i] += a * &c0;
        out[i + 1] += a * &c1;
    }
    out
}

/// Leading-order asymptotic `sqrt(27/pi) (2n-3)^(2n-7/2)` in log form.
pub fn zagier_asymptotic(n: u32) -> Result<LogScalar> {
    if n < 3 {
        return Err(Error::Domain(format!("n must be at least 3, got {n}")));
    }
    let d = (2 * n - 3) as f64;
    let log = 0.5 * (27.0 / std::f64::consts::PI).ln() + (2.0 * n as f64 - 3.5) * d.ln();
    Ok(LogScalar::new(1, log))
}
