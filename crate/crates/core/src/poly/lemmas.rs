//! Combinatorial checks on the support of `Q_n`: no sign cancellation among
//! permutations generating the same monomial, and closure of the support
//! under midpoints of even sums.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::expand::expand_permanent_counts;
use super::moments::{parity_buckets, SymbolicModel};
use super::ExponentVector;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaI1Report {
    pub n: u32,
    pub support_size: usize,
    pub min_abs_coeff: String,
    pub max_abs_coeff: String,
    /// Permutations whose product of entries is nonzero.
    pub permutations: u128,
    /// Monomials where the permutation count differs from `|Q_g|`, or which
    /// appear in only one of the two expansions.
    pub mismatches: usize,
    pub permanent_count_match: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaI2Report {
    pub n: u32,
    pub support_size: usize,
    /// Unordered pairs `{a, b}` (including `a == b`) with `a + b` even.
    pub pairs_checked: u64,
    /// Pairs whose midpoint `(a + b) / 2` is not in the support.
    pub violations: u64,
}

/// Compare `|Q_g|` against the signless permutation count for every monomial.
pub fn verify_lemma_i1(model: &SymbolicModel) -> Result<LemmaI1Report> {
    let counts = expand_permanent_counts(&model.template, model.cap())?;
    let q = &model.poly;
    let mut mismatches = counts.keys().filter(|e| !q.contains(e)).count();
    let mut min_abs: Option<BigInt> = None;
    let mut max_abs = BigInt::zero();
    for (e, c) in q.terms() {
        let a = c.abs();
        if counts.get(e).map(|&k| BigInt::from(k)) != Some(a.clone()) {
            mismatches += 1;
        }
        if min_abs.as_ref().is_none_or(|m| &a < m) {
            min_abs = Some(a.clone());
        }
        if a > max_abs {
            max_abs = a;
        }
    }
    Ok(LemmaI1Report {
        n: model.spec.n(),
        support_size: q.len(),
        min_abs_coeff: min_abs.unwrap_or_default().to_string(),
        max_abs_coeff: max_abs.to_string(),
        permutations: counts.values().sum(),
        mismatches,
        permanent_count_match: mismatches == 0,
    })
}

pub fn verify_lemma_i2(model: &SymbolicModel) -> LemmaI2Report {
    let q = &model.poly;
    let vars = q.var_count();
    let (pairs, violations) = parity_buckets(q)
        .par_iter()
        .map(|bucket| {
            let mut pairs = 0u64;
            let mut violations = 0u64;
            let mut mid = vec![0u8; vars];
            for (i, (ea, _, _)) in bucket.iter().enumerate() {
                for (eb, _, _) in &bucket[i..] {
                    for ((m, x), y) in mid.iter_mut().zip(ea).zip(eb) {
                        *m = (x + y) / 2;
                    }
                    let e = ExponentVector::from_exponents(&mid).expect("midpoint exponents are at most 2");
                    pairs += 1;
                    if !q.contains(&e) {
                        violations += 1;
                    }
                }
            }
            (pairs, violations)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    LemmaI2Report {
        n: model.spec.n(),
        support_size: q.len(),
        pairs_checked: pairs,
        violations,
    }
}
