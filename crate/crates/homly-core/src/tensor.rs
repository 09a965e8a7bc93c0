//! Structure-constant tensors and their multilinear evaluation.
//!
//! `Tensor3` stores `c[i][j][k]` with `e_i * e_j = Σ_k c[i][j][k] e_k`;
//! `Tensor4` stores `d[i][j][k][l]` with `{e_i, e_j, e_k} = Σ_l d[i][j][k][l] e_l`.
//! Storage is dense — every identity checked here needs n ≤ 8 — and sparse
//! input is densified at the file-format layer.

use crate::linalg::{check_dims, DimensionMismatch, Vector};
use crate::scalar::Scalar;
use num_traits::Zero;

/// Rank-3 structure-constant tensor of a binary operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zero(dim: usize) -> Self {
        Tensor3 {
            dim,
            entries: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        self.entries[(i * self.dim + j) * self.dim + k] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, value: &Scalar) {
        self.entries[(i * self.dim + j) * self.dim + k] += value;
    }

    /// Coordinates of `e_i * e_j`, as a slice of length `dim`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.dim + j) * self.dim;
        &self.entries[base..base + self.dim]
    }

    /// Nonzero entries as `(i, j, k, value)` in lexicographic index order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(flat, v)| (flat / (n * n), (flat / n) % n, flat % n, v))
    }

    /// `Σ_{i,j} x_i y_j c[i][j][·]` — the bilinear product of `x` and `y`.
    pub fn bilinear(&self, x: &Vector, y: &Vector) -> Result<Vector, DimensionMismatch> {
        check_dims("bilinear eval (x)", self.dim, x.dim())?;
        check_dims("bilinear eval (y)", self.dim, y.dim())?;
        let mut out = Vector::zero(self.dim);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                out.axpy(&(xi * yj), self.basis_product(i, j));
            }
        }
        Ok(out)
    }
}

/// Rank-4 structure-constant tensor of a ternary operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor4 {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Tensor4 {
    pub fn zero(dim: usize) -> Self {
        Tensor4 {
            dim,
            entries: vec![Scalar::zero(); dim * dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.entries[((i * self.dim + j) * self.dim + k) * self.dim + l]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, value: Scalar) {
        self.entries[((i * self.dim + j) * self.dim + k) * self.dim + l] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, k: usize, l: usize, value: &Scalar) {
        self.entries[((i * self.dim + j) * self.dim + k) * self.dim + l] += value;
    }

    /// Coordinates of `{e_i, e_j, e_k}`, as a slice of length `dim`.
    pub fn basis_triple(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let base = ((i * self.dim + j) * self.dim + k) * self.dim;
        &self.entries[base..base + self.dim]
    }

    /// Nonzero entries as `(i, j, k, l, value)` in lexicographic index order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, usize, usize, &Scalar)> {
        let n = self.dim;
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(flat, v)| {
                (
                    flat / (n * n * n),
                    (flat / (n * n)) % n,
                    (flat / n) % n,
                    flat % n,
                    v,
                )
            })
    }

    /// `Σ_{i,j,k} x_i y_j z_k d[i][j][k][·]` — the trilinear product.
    pub fn trilinear(
        &self,
        x: &Vector,
        y: &Vector,
        z: &Vector,
    ) -> Result<Vector, DimensionMismatch> {
        check_dims("trilinear eval (x)", self.dim, x.dim())?;
        check_dims("trilinear eval (y)", self.dim, y.dim())?;
        check_dims("trilinear eval (z)", self.dim, z.dim())?;
        let mut out = Vector::zero(self.dim);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let xy = xi * yj;
                for (k, zk) in z.support() {
                    out.axpy(&(&xy * zk), self.basis_triple(i, j, k));
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn sample_tensor3() -> Tensor3 {
        let mut c = Tensor3::zero(3);
        c.set(0, 1, 2, int(2));
        c.set(1, 0, 2, int(-2));
        c.set(0, 2, 1, frac(1, 2));
        c.set(1, 2, 0, int(1));
        c
    }

    #[test]
    fn bilinear_on_basis_reads_constants() {
        let c = sample_tensor3();
        let e0 = Vector::basis(3, 0);
        let e1 = Vector::basis(3, 1);
        let out = c.bilinear(&e0, &e1).unwrap();
        assert_eq!(out, Vector::from_coords(vec![int(0), int(0), int(2)]));
    }

    #[test]
    fn bilinear_zero_argument_gives_zero() {
        let c = sample_tensor3();
        let z = Vector::zero(3);
        let v = Vector::from_coords(vec![int(1), int(2), int(3)]);
        assert!(c.bilinear(&z, &v).unwrap().is_zero());
        assert!(c.bilinear(&v, &z).unwrap().is_zero());
    }

    #[test]
    fn bilinear_is_additive_in_first_slot() {
        let c = sample_tensor3();
        let e0 = Vector::basis(3, 0);
        let e1 = Vector::basis(3, 1);
        let e2 = Vector::basis(3, 2);
        let sum = e0.add(&e1).unwrap();
        let lhs = c.bilinear(&sum, &e2).unwrap();
        let rhs = c
            .bilinear(&e0, &e2)
            .unwrap()
            .add(&c.bilinear(&e1, &e2).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn trilinear_on_basis_reads_constants() {
        let mut d = Tensor4::zero(2);
        d.set(0, 1, 1, 0, frac(-3, 7));
        let out = d
            .trilinear(
                &Vector::basis(2, 0),
                &Vector::basis(2, 1),
                &Vector::basis(2, 1),
            )
            .unwrap();
        assert_eq!(out, Vector::from_coords(vec![frac(-3, 7), int(0)]));
    }

    #[test]
    fn trilinear_is_homogeneous() {
        let mut d = Tensor4::zero(2);
        d.set(0, 1, 1, 0, int(3));
        d.set(1, 0, 1, 1, int(-1));
        let x = Vector::from_coords(vec![int(1), int(2)]);
        let y = Vector::from_coords(vec![int(-1), int(1)]);
        let z = Vector::from_coords(vec![frac(1, 2), int(4)]);
        let doubled = x.scale(&int(2));
        let lhs = d.trilinear(&doubled, &y, &z).unwrap();
        let rhs = d.trilinear(&x, &y, &z).unwrap().scale(&int(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nonzero_iteration_is_lexicographic() {
        let c = sample_tensor3();
        let indices: Vec<_> = c
            .nonzero_entries()
            .map(|(i, j, k, _)| (i, j, k))
            .collect();
        assert_eq!(indices, vec![(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0)]);
    }
}
