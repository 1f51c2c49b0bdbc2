//! Exact sparse polynomials for the symbolic determinant `Q_n(u) = det B_n(u)`.
//!
//! Variables are ordered `k = (i-1)(2n-3) + j` project-wide (0-based here).
//! Every variable sits in exactly two entries of `B_n(u)`, so exponents never
//! exceed 2 and two bits per variable suffice.

mod expand;
mod lemmas;
mod moments;

pub use expand::{expand_determinant, expand_permanent_counts, DEFAULT_SYMBOLIC_CAP, MAX_SYMBOLIC_N};
pub use lemmas::{verify_lemma_i1, verify_lemma_i2, LemmaI1Report, LemmaI2Report};
pub use moments::{
    bombieri_norm_sq, cn_exact_symbolic, complex_second_moment, complex_second_moment_direct, expected_det_exact,
    expected_det_sq_exact, expected_det_from_poly, expected_det_sq_from_poly, SymbolicModel,
};

use std::fmt;
use std::io::{BufRead, Write};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};

const WORDS: usize = 4;
const VARS_PER_WORD: usize = 32;

/// Largest number of variables an [`ExponentVector`] can hold.
pub const MAX_VARS: usize = WORDS * VARS_PER_WORD;

/// Packed exponent vector, 2 bits per variable, each exponent in `0..=3`.
///
/// Variable 0 occupies the top bits of word 0, so the derived ordering on the
/// packed words is the lexicographic ordering of the exponent sequence.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentVector([u64; WORDS]);

impl ExponentVector {
    #[inline]
    fn slot(k: usize) -> (usize, u32) {
        (k / VARS_PER_WORD, 62 - 2 * (k % VARS_PER_WORD) as u32)
    }

    #[inline]
    pub fn get(&self, k: usize) -> u8 {
        let (w, s) = Self::slot(k);
        ((self.0[w] >> s) & 3) as u8
    }

    #[inline]
    pub fn set(&mut self, k: usize, e: u8) {
        debug_assert!(e <= 3);
        let (w, s) = Self::slot(k);
        self.0[w] = (self.0[w] & !(3 << s)) | ((e as u64) << s);
    }

    /// Multiply the monomial by `u_k`.
    #[inline]
    pub fn bump(mut self, k: usize) -> Self {
        let e = self.get(k);
        debug_assert!(e < 3, "exponent overflow at variable {k}");
        self.set(k, e + 1);
        self
    }

    pub fn from_exponents(exps: &[u8]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::Domain(format!("at most {MAX_VARS} variables are supported")));
        }
        let mut e = ExponentVector::default();
        for (k, &x) in exps.iter().enumerate() {
            if x > 3 {
                return Err(Error::Domain(format!("exponent {x} of variable {} exceeds 3", k + 1)));
            }
            e.set(k, x);
        }
        Ok(e)
    }

    pub fn to_exponents(&self, vars: usize) -> Vec<u8> {
        (0..vars).map(|k| self.get(k)).collect()
    }

    pub fn total_degree(&self) -> u32 {
        // sum of 2-bit fields: count ones in low bits + 2 * ones in high bits
        const LOW: u64 = 0x5555_5555_5555_5555;
        self.0
            .iter()
            .map(|w| (w & LOW).count_ones() + 2 * ((w >> 1) & LOW).count_ones())
            .sum()
    }

    /// Nonzero `(variable, exponent)` pairs in increasing variable order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let slot = rest.leading_zeros() / 2;
                let shift = 62 - 2 * slot;
                let e = ((rest >> shift) & 3) as u8;
                rest &= !(3 << shift);
                Some((w * VARS_PER_WORD + slot as usize, e))
            })
        })
    }

    /// Bit pattern of odd exponents; two monomials multiply to a square
    /// exactly when their parity keys agree.
    pub fn parity_key(&self) -> [u64; WORDS] {
        const LOW: u64 = 0x5555_5555_5555_5555;
        self.0.map(|w| w & LOW)
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS).rev().find(|&k| self.get(k) != 0).map_or(0, |k| k + 1);
        write!(f, "{:?}", self.to_exponents(last))
    }
}

/// Homogeneous sparse polynomial with big-integer coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SparsePoly {
    vars: usize,
    degree: u32,
    terms: FxHashMap<ExponentVector, BigInt>,
}

impl SparsePoly {
    pub fn new(vars: usize, degree: u32) -> Self {
        SparsePoly {
            vars,
            degree,
            terms: FxHashMap::default(),
        }
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &ExponentVector) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        self.terms.contains_key(e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn sorted_terms(&self) -> Vec<(ExponentVector, BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by_key(|a| a.0);
        v
    }

    /// Add `c * u^e`, checking homogeneity and dropping cancelled terms.
    pub fn add_term(&mut self, e: ExponentVector, c: BigInt) -> Result<()> {
        if e.total_degree() != self.degree {
            return Err(Error::Domain(format!(
                "monomial of degree {} added to a homogeneous polynomial of degree {}",
                e.total_degree(),
                self.degree
            )));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
        Ok(())
    }

    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.vars {
            return Err(Error::Shape(format!("expected {} values, got {}", self.vars, point.len())));
        }
        if let Some(v) = self.evaluate_small(point) {
            return Ok(BigInt::from(v));
        }
        let powers: Vec<[BigInt; 4]> = point
            .iter()
            .map(|x| [BigInt::one(), x.clone(), x * x, x * x * x])
            .collect();
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (k, p) in e.nonzero() {
                term *= &powers[k][p as usize];
            }
            total += term;
        }
        Ok(total)
    }

    /// Overflow-checked `i128` evaluation; `None` if anything leaves range.
    fn evaluate_small(&self, point: &[BigInt]) -> Option<i128> {
        let powers: Vec<[i128; 4]> = point
            .iter()
            .map(|x| {
                let x = i128::try_from(x).ok()?;
                Some([1, x, x.checked_mul(x)?, x.checked_mul(x)?.checked_mul(x)?])
            })
            .collect::<Option<_>>()?;
        let mut total: i128 = 0;
        for (e, c) in &self.terms {
            let mut term = i128::try_from(c).ok()?;
            for (k, p) in e.nonzero() {
                term = term.checked_mul(powers[k][p as usize])?;
            }
            total = total.checked_add(term)?;
        }
        Some(total)
    }

    /// Text dump: one line per monomial, `coeff e_1 e_2 ... e_N`, sorted
    /// lexicographically by exponent vector.
    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        for (e, c) in self.sorted_terms() {
            write!(out, "{c}")?;
            for x in e.to_exponents(self.vars) {
                write!(out, " {x}")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }

    pub fn read_text<R: BufRead>(input: R, vars: usize, degree: u32) -> Result<Self> {
        let mut p = SparsePoly::new(vars, degree);
        for (lineno, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = |what: &str| Error::Domain(format!("line {}: {what}", lineno + 1));
            let mut fields = line.split_whitespace();
            let c: BigInt = fields.next().ok_or_else(|| bad("empty"))?.parse().map_err(|_| bad("bad coefficient"))?;
            let exps = fields
                .map(|f| f.parse::<u8>().map_err(|_| bad("bad exponent")))
                .collect::<Result<Vec<_>>>()?;
            if exps.len() != vars {
                return Err(bad(&format!("expected {vars} exponents, got {}", exps.len())));
            }
            p.add_term(ExponentVector::from_exponents(&exps)?, c)?;
        }
        Ok(p)
    }
}

/// Product of exact Gaussian moments `E[u_k^p]` for centred normals with the
/// given variances; exponents are restricted to 0, 2, 4.
pub(crate) fn gaussian_moment_product(exps: impl Iterator<Item = (u8, BigInt)>) -> BigInt {
    let mut acc = BigInt::one();
    for (p, var) in exps {
        match p {
            0 => {}
            2 => acc *= var,
            4 => acc *= var.pow(2) * 3,
            _ => panic!("moment exponent {p} outside the structural bound"),
        }
    }
    acc
}
