//! Structured matrices for the real and complex line-counting problems.
//!
//! Index convention: column pair `i = 1..=n-1` and coefficient index
//! `j = 1..=2n-3` are 1-based in the public position API
//! ([`StructuredMatrix::at`], [`SymbolicTemplate::positions`]). Storage is
//! 0-based row-major, so 1-based `(r, c)` lives at `(r-1) * D + (c-1)`.
//! Block `i` places `v^(i)_j` at `(j, 2i-1)` and again at `(j+1, 2i)`.

use std::ops::{Index, IndexMut};

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::ProblemSpec;
use crate::sampler::{ComplexCoeffVector, RealCoeffVector};

/// Dense row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    size: usize,
    data: Vec<T>,
}

impl<T: Clone> SquareMatrix<T> {
    pub fn filled(size: usize, value: T) -> Self {
        SquareMatrix {
            size,
            data: vec![value; size * size],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::Shape("matrix rows must all have length equal to the row count".into()));
        }
        Ok(SquareMatrix {
            size,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.size.max(1))
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            size: self.size,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.size {
                self.data.swap(a * self.size + c, b * self.size + c);
            }
        }
    }
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.size + c]
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.size + c]
    }
}

/// The two-column-banded `(2n-2) x (2n-2)` matrix built from `n-1`
/// coefficient vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct StructuredMatrix<T> {
    pub n: u32,
    pub matrix: SquareMatrix<T>,
}

impl<T: Clone> StructuredMatrix<T> {
    /// Entry at 1-based `(row, col)`.
    pub fn at(&self, row: usize, col: usize) -> &T {
        &self.matrix[(row - 1, col - 1)]
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }
}

/// Write the banded layout into a zeroed row-major buffer of side `2n-2`.
/// Used directly by the Monte Carlo hot loop.
pub(crate) fn place_banded<T: Copy>(spec: ProblemSpec, blocks: &[T], out: &mut [T]) {
    let d = spec.degree();
    let size = spec.size();
    for (b, v) in blocks.chunks_exact(d).enumerate() {
        for (j, &x) in v.iter().enumerate() {
            out[j * size + 2 * b] = x;
            out[(j + 1) * size + 2 * b + 1] = x;
        }
    }
}

fn check_shapes(spec: ProblemSpec, lens: impl ExactSizeIterator<Item = usize>) -> Result<()> {
    if lens.len() != spec.blocks() {
        return Err(Error::Shape(format!(
            "expected {} coefficient vectors for n = {}, got {}",
            spec.blocks(),
            spec.n(),
            lens.len()
        )));
    }
    for (i, len) in lens.enumerate() {
        if len != spec.degree() {
            return Err(Error::Shape(format!(
                "coefficient vector {} has length {len}, expected {}",
                i + 1,
                spec.degree()
            )));
        }
    }
    Ok(())
}

fn build<T: Copy + Default>(spec: ProblemSpec, vectors: &[&[T]]) -> Result<StructuredMatrix<T>> {
    check_shapes(spec, vectors.iter().map(|v| v.len()))?;
    let flat: Vec<T> = vectors.iter().flat_map(|v| v.iter().copied()).collect();
    let mut matrix = SquareMatrix::filled(spec.size(), T::default());
    place_banded(spec, &flat, matrix.as_mut_slice());
    Ok(StructuredMatrix { n: spec.n(), matrix })
}

pub fn build_real(spec: ProblemSpec, vectors: &[RealCoeffVector]) -> Result<StructuredMatrix<f64>> {
    let slices: Vec<&[f64]> = vectors.iter().map(|v| v.entries.as_slice()).collect();
    build(spec, &slices)
}

pub fn build_complex(spec: ProblemSpec, vectors: &[ComplexCoeffVector]) -> Result<StructuredMatrix<Complex64>> {
    let slices: Vec<&[Complex64]> = vectors.iter().map(|v| v.entries.as_slice()).collect();
    build(spec, &slices)
}

/// Symbolic version of the structured matrix: every nonzero entry is a
/// variable `u_k`, with `k = (i-1)(2n-3) + j` (1-based) for block `i`,
/// coefficient `j`. Variances `binom(2n-4, j-1)` ride along in `scales`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicTemplate {
    spec: ProblemSpec,
    /// 0-based variable index at each row-major position.
    entries: Vec<Option<usize>>,
    scales: Vec<BigUint>,
}

impl SymbolicTemplate {
    pub fn spec(&self) -> ProblemSpec {
        self.spec
    }

    pub fn size(&self) -> usize {
        self.spec.size()
    }

    pub fn var_count(&self) -> usize {
        self.spec.var_count()
    }

    /// 0-based variable index at 0-based `(row, col)`.
    pub fn var_at(&self, row: usize, col: usize) -> Option<usize> {
        self.entries[row * self.size() + col]
    }

    /// Variance attached to each 0-based variable index.
    pub fn scales(&self) -> &[BigUint] {
        &self.scales
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_some()).count()
    }

    /// 1-based variable index for 1-based `(block, coefficient)`.
    pub fn var_index(&self, block: usize, coeff: usize) -> usize {
        (block - 1) * self.spec.degree() + coeff
    }

    /// 1-based `(row, col)` positions of 1-based variable `k`.
    pub fn positions(&self, k: usize) -> Vec<(usize, usize)> {
        let size = self.size();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| **e == Some(k - 1))
            .map(|(p, _)| (p / size + 1, p % size + 1))
            .collect()
    }

    /// Substitute integer values (0-based variable order) into the template.
    pub fn instantiate(&self, values: &[BigInt]) -> Result<SquareMatrix<BigInt>> {
        if values.len() != self.var_count() {
            return Err(Error::Shape(format!(
                "expected {} variable values, got {}",
                self.var_count(),
                values.len()
            )));
        }
        let data = self
            .entries
            .iter()
            .map(|e| e.map(|k| values[k].clone()).unwrap_or_default())
            .collect();
        Ok(SquareMatrix { size: self.size(), data })
    }
}

pub fn build_symbolic(spec: ProblemSpec) -> SymbolicTemplate {
    let indices: Vec<Option<usize>> = (0..spec.var_count()).map(Some).collect();
    let mut entries = vec![None; spec.size() * spec.size()];
    place_banded(spec, &indices, &mut entries);
    let variances = spec.variances_exact();
    let scales = (0..spec.var_count())
        .map(|k| variances[k % spec.degree()].clone())
        .collect();
    SymbolicTemplate { spec, entries, scales }
}

/// Replace each complex entry `a + ib` by the real block `[[a, b], [-b, a]]`.
pub fn realify(a: &SquareMatrix<Complex64>) -> SquareMatrix<f64> {
    let m = a.size();
    let mut out = SquareMatrix::filled(2 * m, 0.0);
    for r in 0..m {
        for c in 0..m {
            let z = a[(r, c)];
            out[(2 * r, 2 * c)] = z.re;
            out[(2 * r, 2 * c + 1)] = z.im;
            out[(2 * r + 1, 2 * c)] = -z.im;
            out[(2 * r + 1, 2 * c + 1)] = z.re;
        }
    }
    out
}
