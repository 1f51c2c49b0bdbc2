//! Exact Gaussian moments of `Q_n` and the Bombieri-norm route to `C_n`.
//!
//! Variances enter only through even powers, so every quantity here is
//! rational even though the matrix entries carry square roots of binomials.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::expand::{check_cap, expand_determinant};
use super::{gaussian_moment_product, ExponentVector, SparsePoly};
use crate::error::{Error, Result};
use crate::exact::{factorial, prefactor_complex, ExactRational, ProblemSpec};
use crate::matrix::{build_symbolic, SymbolicTemplate};

/// Symbolic template plus its expanded determinant, reused across the
/// moment computations and lemma checks for one `n`.
#[derive(Debug, Clone)]
pub struct SymbolicModel {
    pub spec: ProblemSpec,
    pub template: SymbolicTemplate,
    pub poly: SparsePoly,
    cap: u32,
}

impl SymbolicModel {
    pub fn new(spec: ProblemSpec, cap: u32) -> Result<Self> {
        check_cap(spec.n(), cap)?;
        let template = build_symbolic(spec);
        let poly = expand_determinant(&template, cap)?;
        Ok(SymbolicModel {
            spec,
            template,
            poly,
            cap,
        })
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn variances(&self) -> &[BigUint] {
        self.template.scales()
    }

    pub fn bombieri_norm_sq(&self) -> ExactRational {
        bombieri_norm_sq(&self.poly, self.variances())
    }

    /// `E|det J_n^C|^2`, computed as `D! ||P_n||_B^2` and as the direct moment
    /// sum; the two must agree.
    pub fn complex_second_moment(&self) -> Result<ExactRational> {
        let d = self.poly.degree() as u64;
        let via_norm = self.bombieri_norm_sq() * ExactRational::from(BigInt::from(factorial(d)));
        let direct = ExactRational::from(complex_second_moment_direct(&self.poly, self.variances()));
        if via_norm != direct {
            return Err(Error::Consistency(format!(
                "Bombieri route {via_norm} disagrees with direct moment sum {direct}"
            )));
        }
        Ok(direct)
    }

    pub fn cn(&self) -> Result<BigInt> {
        let value = prefactor_complex(self.spec) * self.complex_second_moment()?;
        if !value.is_integer() {
            return Err(Error::Consistency(format!(
                "symbolic C_{} = {value} is not an integer",
                self.spec.n()
            )));
        }
        Ok(value.to_integer())
    }

    pub fn expected_det(&self) -> ExactRational {
        ExactRational::from(expected_det_from_poly(&self.poly, self.variances()))
    }

    pub fn expected_det_sq(&self) -> ExactRational {
        ExactRational::from(expected_det_sq_from_poly(&self.poly, self.variances()))
    }
}

fn big(v: &BigUint) -> BigInt {
    BigInt::from(v.clone())
}

/// `sum_g Q_g^2 prod_k var_k^g_k g! / D!`: the Bombieri norm of the
/// polynomial whose variable `k` is scaled by `sqrt(var_k)`.
pub fn bombieri_norm_sq(p: &SparsePoly, variances: &[BigUint]) -> ExactRational {
    let d_fact = BigInt::from(factorial(p.degree() as u64));
    ExactRational::new(complex_second_moment_direct(p, variances), d_fact)
}

/// `sum_g Q_g^2 prod_k g_k! var_k^g_k`, i.e. `E|P(z)|^2` for independent
/// centred complex Gaussians with `E|z_k|^2 = var_k`.
pub fn complex_second_moment_direct(p: &SparsePoly, variances: &[BigUint]) -> BigInt {
    let mut total = BigInt::zero();
    for (e, c) in p.terms() {
        let mut w = c * c;
        for (k, var) in variances.iter().enumerate() {
            let g = e.get(k) as u32;
            if g > 0 {
                w *= big(var).pow(g) * BigInt::from(factorial(g as u64));
            }
        }
        total += w;
    }
    total
}

/// `E Q(u)` for independent centred real Gaussians with `E u_k^2 = var_k`:
/// only monomials with every exponent even contribute.
pub fn expected_det_from_poly(p: &SparsePoly, variances: &[BigUint]) -> BigInt {
    p.terms()
        .filter(|(e, _)| e.parity_key().iter().all(|w| *w == 0))
        .map(|(e, c)| c * gaussian_moment_product((0..p.var_count()).map(|k| (e.get(k), big(&variances[k])))))
        .sum()
}

type Bucket = Vec<(Vec<u8>, ExponentVector, BigInt)>;

/// Group monomials by odd-exponent pattern; only pairs inside one group can
/// multiply to an even monomial.
pub(crate) fn parity_buckets(p: &SparsePoly) -> Vec<Bucket> {
    let mut buckets: FxHashMap<[u64; 4], Bucket> = FxHashMap::default();
    for (e, c) in p.sorted_terms() {
        buckets
            .entry(e.parity_key())
            .or_default()
            .push((e.to_exponents(p.var_count()), e, c));
    }
    let mut out: Vec<_> = buckets.into_iter().collect();
    out.sort_by_key(|a| a.0);
    out.into_iter().map(|(_, v)| v).collect()
}

/// `E Q(u)^2` summed over pairs `(a, b)` with `a + b` even, using
/// `E u^2 = var`, `E u^4 = 3 var^2`.
pub fn expected_det_sq_from_poly(p: &SparsePoly, variances: &[BigUint]) -> BigInt {
    let vars: Vec<BigInt> = variances.iter().map(big).collect();
    let small: Option<Vec<(i128, i128)>> = variances
        .iter()
        .map(|v| {
            let v = i128::try_from(v).ok()?;
            Some((v, 3 * v.checked_mul(v)?))
        })
        .collect();
    parity_buckets(p)
        .par_iter()
        .map(|bucket| {
            let mut total = BigInt::zero();
            let mut acc: i128 = 0;
            for (i, (ea, _, ca)) in bucket.iter().enumerate() {
                for (j, (eb, _, cb)) in bucket.iter().enumerate().skip(i) {
                    let mult: i128 = if i == j { 1 } else { 2 };
                    let term = small
                        .as_ref()
                        .and_then(|m| pair_term_i128(ea, eb, ca, cb, m))
                        .and_then(|t| t.checked_mul(mult));
                    match term.and_then(|t| acc.checked_add(t)) {
                        Some(s) => acc = s,
                        None => {
                            total += acc;
                            acc = 0;
                            let moments = gaussian_moment_product(
                                ea.iter().zip(eb).zip(&vars).map(|((x, y), v)| (x + y, v.clone())),
                            );
                            total += BigInt::from(mult) * ca * cb * moments;
                        }
                    }
                }
            }
            total + acc
        })
        .reduce(BigInt::zero, |a, b| a + b)
}

fn pair_term_i128(ea: &[u8], eb: &[u8], ca: &BigInt, cb: &BigInt, moments: &[(i128, i128)]) -> Option<i128> {
    let mut t = i128::try_from(ca).ok()?.checked_mul(i128::try_from(cb).ok()?)?;
    for ((x, y), (m2, m4)) in ea.iter().zip(eb).zip(moments) {
        t = match x + y {
            0 => t,
            2 => t.checked_mul(*m2)?,
            4 => t.checked_mul(*m4)?,
            s => panic!("moment exponent {s} outside the structural bound"),
        };
    }
    Some(t)
}

pub fn complex_second_moment(spec: ProblemSpec, cap: u32) -> Result<ExactRational> {
    SymbolicModel::new(spec, cap)?.complex_second_moment()
}

/// `C_n` from the symbolic determinant; a non-integer result is an
/// internal-consistency failure.
pub fn cn_exact_symbolic(spec: ProblemSpec, cap: u32) -> Result<BigInt> {
    SymbolicModel::new(spec, cap)?.cn()
}

pub fn expected_det_exact(spec: ProblemSpec, cap: u32) -> Result<ExactRational> {
    Ok(SymbolicModel::new(spec, cap)?.expected_det())
}

pub fn expected_det_sq_exact(spec: ProblemSpec, cap: u32) -> Result<ExactRational> {
    Ok(SymbolicModel::new(spec, cap)?.expected_det_sq())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{expected_det_closed_form, prefactor_real, rn_signed_count, zagier_cn};
    use crate::poly::DEFAULT_SYMBOLIC_CAP;
    use num_traits::One;

    fn model(n: u32) -> SymbolicModel {
        SymbolicModel::new(ProblemSpec::new(n).unwrap(), DEFAULT_SYMBOLIC_CAP).unwrap()
    }

    fn q(a: i64, b: i64) -> ExactRational {
        ExactRational::new(a.into(), b.into())
    }

    #[test]
    fn single_monomial_unit_norm() {
        let mut p = SparsePoly::new(3, 4);
        p.add_term(ExponentVector::from_exponents(&[4 - 1, 1, 0]).unwrap(), BigInt::one()).unwrap();
        let unit = vec![BigUint::one(); 3];
        // 3! 1! / 4!
        assert_eq!(bombieri_norm_sq(&p, &unit), q(1, 4));
        let mut p = SparsePoly::new(2, 2);
        p.add_term(ExponentVector::from_exponents(&[2, 0]).unwrap(), BigInt::one()).unwrap();
        assert_eq!(bombieri_norm_sq(&p, &[BigUint::one(), BigUint::one()]), q(1, 1));
    }

    #[test]
    fn scaling_a_variable() {
        let mut p = SparsePoly::new(2, 2);
        p.add_term(ExponentVector::from_exponents(&[2, 0]).unwrap(), BigInt::from(1)).unwrap();
        p.add_term(ExponentVector::from_exponents(&[1, 1]).unwrap(), BigInt::from(1)).unwrap();
        let base = bombieri_norm_sq(&p, &[BigUint::one(), BigUint::one()]);
        let scaled = bombieri_norm_sq(&p, &[BigUint::from(5u32), BigUint::one()]);
        // u1^2 term scales by 5^2, u1 u2 term by 5
        assert_eq!(base, q(3, 2));
        assert_eq!(scaled, q(25 * 2, 2) + q(5, 2));
    }

    #[test]
    fn n3_bombieri_fixture() {
        let m = model(3);
        assert_eq!(m.bombieri_norm_sq(), q(36, 24));
        assert_eq!(m.bombieri_norm_sq(), q(3, 2));
        assert_eq!(m.complex_second_moment().unwrap(), q(36, 1));
        assert_eq!(m.cn().unwrap(), BigInt::from(27));
    }

    #[test]
    fn n4_cn() {
        let m = model(4);
        assert_eq!(m.cn().unwrap(), BigInt::from(2875));
        assert_eq!(m.cn().unwrap(), zagier_cn(4).unwrap());
    }

    #[test]
    fn expected_det_routes_agree() {
        for n in 3..=5 {
            let m = model(n);
            let spec = ProblemSpec::new(n).unwrap();
            assert_eq!(m.expected_det(), ExactRational::from(expected_det_closed_form(spec)));
            assert_eq!(
                prefactor_real(spec) * m.expected_det(),
                ExactRational::from(rn_signed_count(n).unwrap())
            );
        }
        assert_eq!(model(3).expected_det(), q(2, 1));
        assert_eq!(model(4).expected_det(), q(36, 1));
    }
}
