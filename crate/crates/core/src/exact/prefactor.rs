use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::combinatorics::{binomial, factorial};
use super::{ExactRational, ProblemSpec};

fn ratio(num: BigUint, den: BigUint) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

/// Real Kac-Rice prefactor `rho_n`, so that `E_n = rho_n * E|det J_n|`.
///
/// The half powers of the binomials pair `k` with `2n-3-k` and cancel, which
/// leaves `(2n-3)^(n-1) / (n-1)! * prod_{k=0}^{2n-3} k! / (2n-3)!^(n-1)`.
pub fn prefactor_real(spec: ProblemSpec) -> ExactRational {
    let n = spec.n() as u64;
    let d = 2 * n - 3;
    let prod_fact = (0..=d).fold(BigUint::one(), |acc, k| acc * factorial(k));
    let num = BigUint::from(d).pow((n - 1) as u32) * prod_fact;
    let den = factorial(n - 1) * factorial(d).pow((n - 1) as u32);
    ratio(num, den)
}

/// Complex prefactor, so that `C_n = rho_n^C * E|det J_n^C|^2`:
/// `(2n-3)^(2n-2) / ((n-1)! n!) * prod_k binom(2n-3, k)^-1`.
pub fn prefactor_complex(spec: ProblemSpec) -> ExactRational {
    let n = spec.n() as u64;
    let d = 2 * n - 3;
    let prod_binom = (0..=d).fold(BigUint::one(), |acc, k| {
        acc * binomial(d, k).expect("k <= d")
    });
    let num = BigUint::from(d).pow((2 * n - 2) as u32);
    let den = factorial(n - 1) * factorial(n) * prod_binom;
    ratio(num, den)
}

/// `E det J_n = (n-1)! prod_{k=1}^{n-1} binom(2n-4, 2k-2)`.
pub fn expected_det_closed_form(spec: ProblemSpec) -> BigInt {
    let n = spec.n() as u64;
    let prod = (1..n).fold(BigUint::one(), |acc, k| {
        acc * binomial(2 * n - 4, 2 * k - 2).expect("2k-2 <= 2n-4")
    });
    BigInt::from(factorial(n - 1) * prod)
}
