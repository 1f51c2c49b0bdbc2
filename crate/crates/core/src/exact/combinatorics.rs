use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::{Error, Result};

/// `m! / (k! (m-k)!)`, exact.
pub fn binomial(m: u64, k: u64) -> Result<BigUint> {
    if k > m {
        return Err(Error::Domain(format!("binomial({m}, {k}) needs 0 <= k <= m")));
    }
    let k = k.min(m - k);
    let mut acc = BigUint::one();
    // acc * (m - i) is always divisible by (i + 1) at step i
    for i in 0..k {
        acc *= m - i;
        acc /= i + 1;
    }
    Ok(acc)
}

pub fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, i| acc * i)
}

/// `m!! = m (m-2) (m-4) ... 1` for odd `m >= -1`, with `(-1)!! = 1`.
pub fn double_factorial(m: i64) -> Result<BigInt> {
    if m < -1 || m.rem_euclid(2) == 0 {
        return Err(Error::Domain(format!(
            "double factorial is defined here for odd m >= -1, got {m}"
        )));
    }
    let mut acc = BigInt::one();
    let mut k = m;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

/// Signed count of real lines, `(2n-3)!!`.
pub fn rn_signed_count(n: u32) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::Domain(format!("n must be at least 3, got {n}")));
    }
    double_factorial(2 * n as i64 - 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal_row(m: usize) -> Vec<BigUint> {
        let mut row = vec![BigUint::one()];
        for _ in 0..m {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row
    }

    #[test]
    fn binomial_small_cases() {
        assert_eq!(binomial(4, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(binomial(2, 0).unwrap(), BigUint::one());
        assert!(binomial(3, 4).is_err());
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let row = pascal_row(21);
        assert_eq!(row[10], BigUint::from(352716u32));
        for (k, expected) in row.iter().enumerate() {
            assert_eq!(&binomial(21, k as u64).unwrap(), expected);
        }
        let row = pascal_row(60);
        for (k, expected) in row.iter().enumerate() {
            assert_eq!(&binomial(60, k as u64).unwrap(), expected);
        }
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(3).unwrap(), BigInt::from(3));
        assert_eq!(double_factorial(-1).unwrap(), BigInt::one());
        assert_eq!(double_factorial(1).unwrap(), BigInt::one());
        let direct: i64 = [9, 7, 5, 3, 1].iter().product();
        assert_eq!(double_factorial(9).unwrap(), BigInt::from(direct));
        assert!(double_factorial(4).is_err());
        assert!(double_factorial(-3).is_err());
    }

    #[test]
    fn signed_counts() {
        assert_eq!(rn_signed_count(3).unwrap(), BigInt::from(3));
        assert_eq!(rn_signed_count(4).unwrap(), BigInt::from(15));
        let direct: i64 = (1..=17).step_by(2).product();
        assert_eq!(rn_signed_count(10).unwrap(), BigInt::from(direct));
        assert_eq!(rn_signed_count(10).unwrap(), BigInt::from(34459425));
    }
}
