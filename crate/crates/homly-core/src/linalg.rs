//! Exact vectors and square matrices over ℚ.
//!
//! Matrices act on coordinate columns with row-major semantics:
//! `(M v)_k = Σ_j M[k][j] v_j`. All values are immutable after
//! construction and every operation is a pure function.

use crate::scalar::{format_scalar, int, Scalar};
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

/// Dimension disagreement between two exact-kernel values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("dimension mismatch in {context}: {left} vs {right}")]
pub struct DimensionMismatch {
    pub context: &'static str,
    pub left: usize,
    pub right: usize,
}

pub(crate) fn check_dims(
    context: &'static str,
    left: usize,
    right: usize,
) -> Result<(), DimensionMismatch> {
    if left == right {
        Ok(())
    } else {
        Err(DimensionMismatch {
            context,
            left,
            right,
        })
    }
}

/// Coordinate vector relative to the fixed basis `e_0 .. e_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![Scalar::zero(); dim],
        }
    }

    /// The `i`-th basis vector of an `n`-dimensional space.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dim {dim}");
        let mut v = Vector::zero(dim);
        v.coords[i] = int(1);
        v
    }

    /// `e_i + e_j` (the polarization probe; `i == j` gives `2 e_i`).
    pub fn basis_sum(dim: usize, i: usize, j: usize) -> Self {
        let mut v = Vector::basis(dim, i);
        v.coords[j] += int(1);
        v
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Vector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Nonzero coordinates with their indices. Evaluators iterate this so
    /// that basis and near-basis arguments cost O(support), not O(n).
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector, DimensionMismatch> {
        check_dims("vector add", self.dim(), other.dim())?;
        Ok(Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector, DimensionMismatch> {
        check_dims("vector sub", self.dim(), other.dim())?;
        Ok(Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| a * factor).collect(),
        }
    }

    /// `self += factor * other` without allocating a new vector.
    pub(crate) fn axpy(&mut self, factor: &Scalar, other: &[Scalar]) {
        debug_assert_eq!(self.coords.len(), other.len());
        if factor.is_zero() {
            return;
        }
        for (dst, src) in self.coords.iter_mut().zip(other) {
            if !src.is_zero() {
                *dst += factor * src;
            }
        }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, c) in self.coords.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_scalar(c))?;
        }
        write!(f, ")")
    }
}

/// Square matrix over ℚ, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Self {
        Matrix {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zero(dim);
        for k in 0..dim {
            m.entries[k * dim + k] = int(1);
        }
        m
    }

    /// Build from rows; every row must have the same length as the row count.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, DimensionMismatch> {
        let dim = rows.len();
        for row in &rows {
            check_dims("matrix row length", row.len(), dim)?;
        }
        Ok(Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    /// Image of the `i`-th basis vector, i.e. column `i`.
    pub fn column(&self, i: usize) -> Vector {
        Vector {
            coords: (0..self.dim).map(|k| self.entry(k, i).clone()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self == &Matrix::identity(self.dim)
    }

    /// `M v` with row-major semantics `(M v)_k = Σ_j M[k][j] v_j`.
    pub fn apply(&self, v: &Vector) -> Result<Vector, DimensionMismatch> {
        check_dims("matrix apply", self.dim, v.dim())?;
        let mut out = Vector::zero(self.dim);
        for (j, vj) in v.support() {
            for k in 0..self.dim {
                let m = self.entry(k, j);
                if !m.is_zero() {
                    out.coords[k] += m * vj;
                }
            }
        }
        Ok(out)
    }

    /// Matrix of the composition `self ∘ other`, so that
    /// `compose(A, B).apply(v) = A.apply(B.apply(v))`.
    pub fn compose(&self, other: &Matrix) -> Result<Matrix, DimensionMismatch> {
        check_dims("matrix compose", self.dim, other.dim)?;
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn identity_apply_is_identity() {
        let v = Vector::from_coords(vec![int(3), frac(-1, 2)]);
        let id = Matrix::identity(2);
        assert_eq!(id.apply(&v).unwrap(), v);
    }

    #[test]
    fn zero_matrix_sends_everything_to_zero() {
        let v = Vector::from_coords(vec![int(5), int(-7), frac(1, 3)]);
        assert!(Matrix::zero(3).apply(&v).unwrap().is_zero());
    }

    #[test]
    fn row_major_apply() {
        // M = [[1,2],[3,4]], v = (1,1) -> (3,7)
        let m = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(3), int(4)]]).unwrap();
        let v = Vector::from_coords(vec![int(1), int(1)]);
        assert_eq!(
            m.apply(&v).unwrap(),
            Vector::from_coords(vec![int(3), int(7)])
        );
    }

    #[test]
    fn compose_identities_and_zero() {
        let m = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(3), int(4)]]).unwrap();
        assert_eq!(Matrix::identity(2).compose(&m).unwrap(), m);
        assert_eq!(m.compose(&Matrix::zero(2)).unwrap(), Matrix::zero(2));
    }

    #[test]
    fn compose_squares_diagonal() {
        let d = Matrix::from_rows(vec![vec![int(2), int(0)], vec![int(0), int(3)]]).unwrap();
        let expected =
            Matrix::from_rows(vec![vec![int(4), int(0)], vec![int(0), int(9)]]).unwrap();
        assert_eq!(d.compose(&d).unwrap(), expected);
    }

    #[test]
    fn compose_matches_iterated_apply() {
        let a = Matrix::from_rows(vec![vec![int(1), int(-1)], vec![frac(1, 2), int(0)]]).unwrap();
        let b = Matrix::from_rows(vec![vec![int(0), int(2)], vec![int(3), int(-5)]]).unwrap();
        let v = Vector::from_coords(vec![frac(2, 3), int(-1)]);
        let lhs = a.compose(&b).unwrap().apply(&v).unwrap();
        let rhs = a.apply(&b.apply(&v).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let m = Matrix::identity(2);
        let v = Vector::zero(3);
        assert!(m.apply(&v).is_err());
        assert!(m.compose(&Matrix::identity(3)).is_err());
    }

    #[test]
    fn zero_dimension_is_legal() {
        let m = Matrix::identity(0);
        let v = Vector::zero(0);
        assert_eq!(m.apply(&v).unwrap(), v);
        assert!(m.is_identity());
    }
}
