use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use super::{ExponentVector, SparsePoly, MAX_VARS};
use crate::error::{Error, Result};
use crate::matrix::SymbolicTemplate;

/// Default largest `n` accepted by the symbolic pipeline (`D = 10`, 1024
/// column masks).
pub const DEFAULT_SYMBOLIC_CAP: u32 = 6;

/// Hard limit from the packed exponent width (`(n-1)(2n-3) <= 128`).
pub const MAX_SYMBOLIC_N: u32 = 9;

pub(crate) fn check_cap(n: u32, cap: u32) -> Result<()> {
    if cap > MAX_SYMBOLIC_N {
        return Err(Error::Domain(format!(
            "symbolic cap {cap} exceeds the supported maximum {MAX_SYMBOLIC_N}"
        )));
    }
    if n > cap {
        return Err(Error::Capacity { n, cap });
    }
    Ok(())
}

/// Row-by-row expansion over used-column bitmasks. With `signed == false`
/// every permutation contributes `+1`, which counts the permutations that
/// generate each monomial.
///
/// Coefficients are bounded by the permutation count `D!`, which fits `i128`
/// for every `D` the packed exponent width allows.
fn expand_dp(template: &SymbolicTemplate, signed: bool) -> FxHashMap<ExponentVector, i128> {
    let size = template.size();
    debug_assert!(template.var_count() <= MAX_VARS && size <= 33);
    let mut layer: FxHashMap<u64, FxHashMap<ExponentVector, i128>> = FxHashMap::default();
    layer.insert(0, std::iter::once((ExponentVector::default(), 1i128)).collect());

    for row in 0..size {
        let cols: Vec<(usize, usize)> = (0..size)
            .filter_map(|c| template.var_at(row, c).map(|k| (c, k)))
            .collect();
        let mut next: FxHashMap<u64, FxHashMap<ExponentVector, i128>> = FxHashMap::default();
        for (mask, poly) in layer {
            for &(c, k) in &cols {
                if mask & (1 << c) != 0 {
                    continue;
                }
                // columns already taken to the right of c are inversions
                let flip = signed && (mask >> (c + 1)).count_ones() % 2 == 1;
                let target = next.entry(mask | (1 << c)).or_default();
                for (e, &coef) in &poly {
                    *target.entry(e.bump(k)).or_insert(0) += if flip { -coef } else { coef };
                }
            }
        }
        for poly in next.values_mut() {
            poly.retain(|_, c| *c != 0);
        }
        next.retain(|_, p| !p.is_empty());
        layer = next;
    }
    let full = if size == 64 { u64::MAX } else { (1u64 << size) - 1 };
    layer.remove(&full).unwrap_or_default()
}

/// Expand `Q_n(u) = det B_n(u)` exactly.
pub fn expand_determinant(template: &SymbolicTemplate, cap: u32) -> Result<SparsePoly> {
    check_cap(template.spec().n(), cap)?;
    let mut poly = SparsePoly::new(template.var_count(), template.size() as u32);
    for (e, c) in expand_dp(template, true) {
        poly.add_term(e, BigInt::from(c))?;
    }
    Ok(poly)
}

/// Number of permutations generating each monomial of `Q_n` (signless
/// expansion of the same template).
pub fn expand_permanent_counts(template: &SymbolicTemplate, cap: u32) -> Result<FxHashMap<ExponentVector, u128>> {
    check_cap(template.spec().n(), cap)?;
    Ok(expand_dp(template, false)
        .into_iter()
        .map(|(e, c)| (e, c as u128))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ProblemSpec;
    use crate::matrix::build_symbolic;
    use num_traits::Signed;

    fn template(n: u32) -> SymbolicTemplate {
        build_symbolic(ProblemSpec::new(n).unwrap())
    }

    fn exps(v: &[u8]) -> ExponentVector {
        ExponentVector::from_exponents(v).unwrap()
    }

    /// `Q_3` by hand from the 4x4 layout with a..f = u_1..u_6:
    /// (af - cd)^2 - (bf - ce)(ae - bd) once the variance factors are removed.
    #[test]
    fn q3_by_hand() {
        let q = expand_determinant(&template(3), DEFAULT_SYMBOLIC_CAP).unwrap();
        let expected: Vec<([u8; 6], i64)> = vec![
            ([2, 0, 0, 0, 0, 2], 1),  // a^2 f^2
            ([1, 0, 1, 1, 0, 1], -2), // a c d f
            ([0, 0, 2, 2, 0, 0], 1),  // c^2 d^2
            ([1, 1, 0, 0, 1, 1], -1), // a b e f
            ([0, 2, 0, 1, 0, 1], 1),  // b^2 d f
            ([1, 0, 1, 0, 2, 0], 1),  // a c e^2
            ([0, 1, 1, 1, 1, 0], -1), // b c d e
        ];
        assert_eq!(q.len(), 7);
        for (e, c) in expected {
            assert_eq!(q.coeff(&exps(&e)), BigInt::from(c), "{e:?}");
        }
    }

    #[test]
    fn homogeneity_and_exponent_bound() {
        for n in 3..=5 {
            let t = template(n);
            let q = expand_determinant(&t, DEFAULT_SYMBOLIC_CAP).unwrap();
            for (e, _) in q.terms() {
                assert_eq!(e.total_degree() as usize, t.size());
                assert!((0..t.var_count()).all(|k| e.get(k) <= 2));
            }
        }
    }

    #[test]
    fn permanent_counts_n3() {
        let counts = expand_permanent_counts(&template(3), DEFAULT_SYMBOLIC_CAP).unwrap();
        let q = expand_determinant(&template(3), DEFAULT_SYMBOLIC_CAP).unwrap();
        assert_eq!(counts.values().sum::<u128>(), 8);
        for (e, c) in q.terms() {
            assert_eq!(BigInt::from(counts[e]), c.abs());
        }
    }

    #[test]
    fn capacity_error() {
        assert_eq!(
            expand_determinant(&template(7), DEFAULT_SYMBOLIC_CAP).unwrap_err(),
            Error::Capacity { n: 7, cap: 6 }
        );
        assert!(matches!(expand_determinant(&template(3), 10), Err(Error::Domain(_))));
    }
}
