//! Determinants: LU with partial pivoting in log space for sampling, and
//! fraction-free (Bareiss) elimination for exact integer matrices.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::matrix::SquareMatrix;

/// Sign and `ln |det|` of a real matrix. `sign == 0` iff `log_modulus == -inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogDet {
    pub sign: i8,
    pub log_modulus: f64,
}

impl SignedLogDet {
    pub const ZERO: SignedLogDet = SignedLogDet {
        sign: 0,
        log_modulus: f64::NEG_INFINITY,
    };

    pub fn value(&self) -> f64 {
        self.sign as f64 * self.log_modulus.exp()
    }
}

/// Unit phase and `ln |det|` of a complex matrix; phase is zero for a
/// singular matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexLogDet {
    pub phase: Complex64,
    pub log_modulus: f64,
}

impl ComplexLogDet {
    pub const ZERO: ComplexLogDet = ComplexLogDet {
        phase: Complex64::new(0.0, 0.0),
        log_modulus: f64::NEG_INFINITY,
    };

    pub fn value(&self) -> Complex64 {
        self.phase * self.log_modulus.exp()
    }
}

pub fn logabsdet_real(m: &SquareMatrix<f64>) -> SignedLogDet {
    let mut scratch = m.as_slice().to_vec();
    logabsdet_real_in_place(m.size(), &mut scratch)
}

/// LU with partial pivoting on a row-major buffer, destroying it.
pub fn logabsdet_real_in_place(n: usize, a: &mut [f64]) -> SignedLogDet {
    let mut sign = 1i8;
    let mut log = 0.0;
    for k in 0..n {
        let (p, pmax) = (k..n)
            .map(|r| (r, a[r * n + k].abs()))
            .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pmax == 0.0 || !pmax.is_finite() {
            return SignedLogDet::ZERO;
        }
        if p != k {
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k];
        if pivot < 0.0 {
            sign = -sign;
        }
        log += pmax.ln();
        for r in k + 1..n {
            let f = a[r * n + k] / pivot;
            if f != 0.0 {
                for c in k + 1..n {
                    a[r * n + c] -= f * a[k * n + c];
                }
            }
        }
    }
    SignedLogDet { sign, log_modulus: log }
}

pub fn logabsdet_complex(m: &SquareMatrix<Complex64>) -> ComplexLogDet {
    let mut scratch = m.as_slice().to_vec();
    logabsdet_complex_in_place(m.size(), &mut scratch)
}

/// Complex LU with partial pivoting on modulus, destroying the buffer.
pub fn logabsdet_complex_in_place(n: usize, a: &mut [Complex64]) -> ComplexLogDet {
    let mut phase = Complex64::one();
    let mut log = 0.0;
    for k in 0..n {
        let (p, pmax) = (k..n)
            .map(|r| (r, a[r * n + k].norm()))
            .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pmax == 0.0 || !pmax.is_finite() {
            return ComplexLogDet::ZERO;
        }
        if p != k {
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            phase = -phase;
        }
        let pivot = a[k * n + k];
        phase *= pivot / pmax;
        log += pmax.ln();
        let inv = pivot.inv();
        for r in k + 1..n {
            let f = a[r * n + k] * inv;
            if !f.is_zero() {
                for c in k + 1..n {
                    let t = f * a[k * n + c];
                    a[r * n + c] -= t;
                }
            }
        }
    }
    // renormalise accumulated rounding in the phase
    let norm = phase.norm();
    ComplexLogDet {
        phase: phase / norm,
        log_modulus: log,
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det_exact_integer(m: &SquareMatrix<BigInt>) -> BigInt {
    let n = m.size();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    let det = a[(n - 1, n - 1)].clone();
    if negate {
        -det
    } else {
        det
    }
}
