//! Algebra bundles: structure constants plus twist maps.
//!
//! Nothing here enforces the defining identities — anticommutativity,
//! multiplicativity and the rest are *checked* properties, because the
//! whole point of the workbench is to examine candidates that may be
//! invalid. Constructors only bundle data; `validate` reports structural
//! (dimension/shape) problems as values.

use crate::linalg::{DimensionMismatch, Matrix, Vector};
use crate::tensor::{Tensor3, Tensor4};

/// A finite-dimensional algebra with one binary operation, given by its
/// structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryAlgebra {
    pub name: String,
    pub dim: usize,
    pub product: Tensor3,
}

impl BinaryAlgebra {
    pub fn new(name: impl Into<String>, product: Tensor3) -> Self {
        BinaryAlgebra {
            name: name.into(),
            dim: product.dim(),
            product,
        }
    }

    pub fn product(&self, x: &Vector, y: &Vector) -> Result<Vector, DimensionMismatch> {
        self.product.bilinear(x, y)
    }
}

/// The linear self-map α entering the twisted identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistMap {
    pub dim: usize,
    pub map: Matrix,
}

impl TwistMap {
    pub fn new(map: Matrix) -> Self {
        TwistMap {
            dim: map.dim(),
            map,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector, DimensionMismatch> {
        self.map.apply(v)
    }

    /// α² as a matrix, realized by composition.
    pub fn squared(&self) -> Result<Matrix, DimensionMismatch> {
        self.map.compose(&self.map)
    }
}

/// The identity twist in dimension `n` (the classical-reduction case).
pub fn identity_twist(dim: usize) -> TwistMap {
    TwistMap::new(Matrix::identity(dim))
}

/// A ternary operation given by its rank-4 structure-constant tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryOp {
    pub dim: usize,
    pub tensor: Tensor4,
}

impl TernaryOp {
    pub fn new(tensor: Tensor4) -> Self {
        TernaryOp {
            dim: tensor.dim(),
            tensor,
        }
    }

    pub fn zero(dim: usize) -> Self {
        TernaryOp::new(Tensor4::zero(dim))
    }

    pub fn eval(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector, DimensionMismatch> {
        self.tensor.trilinear(x, y, z)
    }
}

/// Binary algebra plus twist: a Hom-algebra candidate `(A, [,], α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    pub base: BinaryAlgebra,
    pub twist: TwistMap,
}

impl HomAlgebra {
    pub fn new(base: BinaryAlgebra, twist: TwistMap) -> Self {
        HomAlgebra { base, twist }
    }

    /// The same algebra with the identity twist.
    pub fn untwisted(base: BinaryAlgebra) -> Self {
        let dim = base.dim;
        HomAlgebra {
            base,
            twist: identity_twist(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.base.dim
    }
}

/// Binary + ternary + twist: a Hom-Lie-Yamaguti candidate
/// `(A, *, { , , }, α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomTriple {
    pub base: BinaryAlgebra,
    pub triple: TernaryOp,
    pub twist: TwistMap,
}

impl HomTriple {
    pub fn new(base: BinaryAlgebra, triple: TernaryOp, twist: TwistMap) -> Self {
        HomTriple {
            base,
            triple,
            twist,
        }
    }

    pub fn dim(&self) -> usize {
        self.base.dim
    }

    /// The ternary-free sub-bundle.
    pub fn hom_algebra(&self) -> HomAlgebra {
        HomAlgebra {
            base: self.base.clone(),
            twist: self.twist.clone(),
        }
    }
}

/// Classical Jacobian `J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y]`,
/// computed directly from its own definition (not via the twisted form).
pub fn jacobian(
    algebra: &BinaryAlgebra,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector, DimensionMismatch> {
    let xy_z = algebra.product(&algebra.product(x, y)?, z)?;
    let yz_x = algebra.product(&algebra.product(y, z)?, x)?;
    let zx_y = algebra.product(&algebra.product(z, x)?, y)?;
    xy_z.add(&yz_x)?.add(&zx_y)
}

/// Hom-Jacobian `J_α(x,y,z) = [[x,y],α(z)] + [[y,z],α(x)] + [[z,x],α(y)]`.
/// With the identity twist this is the classical Jacobian.
pub fn hom_jacobian(
    h: &HomAlgebra,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector, DimensionMismatch> {
    let a = &h.twist;
    let t1 = h.base.product(&h.base.product(x, y)?, &a.apply(z)?)?;
    let t2 = h.base.product(&h.base.product(y, z)?, &a.apply(x)?)?;
    let t3 = h.base.product(&h.base.product(z, x)?, &a.apply(y)?)?;
    t1.add(&t2)?.add(&t3)
}

/// Structural validation; an empty list means every dimension and shape
/// invariant holds. Identity violations are *not* structural errors.
pub trait Validate {
    fn validate(&self) -> Vec<String>;
}

impl Validate for BinaryAlgebra {
    fn validate(&self) -> Vec<String> {
        let mut errors = Vec::new();
        if self.product.dim() != self.dim {
            errors.push(format!(
                "binary algebra {:?}: declared dim {} but product tensor has dim {}",
                self.name,
                self.dim,
                self.product.dim()
            ));
        }
        errors
    }
}

impl Validate for TwistMap {
    fn validate(&self) -> Vec<String> {
        let mut errors = Vec::new();
        if self.map.dim() != self.dim {
            errors.push(format!(
                "twist map: declared dim {} but matrix has dim {}",
                self.dim,
                self.map.dim()
            ));
        }
        errors
    }
}

impl Validate for TernaryOp {
    fn validate(&self) -> Vec<String> {
        let mut errors = Vec::new();
        if self.tensor.dim() != self.dim {
            errors.push(format!(
                "ternary op: declared dim {} but tensor has dim {}",
                self.dim,
                self.tensor.dim()
            ));
        }
        errors
    }
}

impl Validate for HomAlgebra {
    fn validate(&self) -> Vec<String> {
        let mut errors = self.base.validate();
        errors.extend(self.twist.validate());
        if self.twist.dim != self.base.dim {
            errors.push(format!(
                "hom-algebra {:?}: twist dim {} does not match algebra dim {}",
                self.base.name, self.twist.dim, self.base.dim
            ));
        }
        errors
    }
}

impl Validate for HomTriple {
    fn validate(&self) -> Vec<String> {
        let mut errors = self.hom_algebra().validate();
        errors.extend(self.triple.validate());
        if self.triple.dim != self.base.dim {
            errors.push(format!(
                "hom-triple {:?}: ternary dim {} does not match algebra dim {}",
                self.base.name, self.triple.dim, self.base.dim
            ));
        }
        errors
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::sl2;
    use crate::scalar::int;

    #[test]
    fn identity_twist_shapes() {
        assert_eq!(identity_twist(0).map, Matrix::identity(0));
        assert_eq!(identity_twist(2).map, Matrix::identity(2));
        let v = Vector::from_coords(vec![int(1), int(-2), int(5)]);
        assert_eq!(identity_twist(3).apply(&v).unwrap(), v);
    }

    #[test]
    fn sl2_jacobian_vanishes_on_basis() {
        let a = sl2();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let out = jacobian(
                        &a,
                        &Vector::basis(3, i),
                        &Vector::basis(3, j),
                        &Vector::basis(3, k),
                    )
                    .unwrap();
                    assert!(out.is_zero(), "J(e{i},e{j},e{k}) = {out}");
                }
            }
        }
    }

    #[test]
    fn hom_jacobian_with_identity_twist_matches_classical() {
        let a = sl2();
        let h = HomAlgebra::untwisted(a.clone());
        let x = Vector::from_coords(vec![int(1), int(2), int(0)]);
        let y = Vector::from_coords(vec![int(0), int(1), int(-3)]);
        let z = Vector::from_coords(vec![int(2), int(0), int(1)]);
        assert_eq!(
            hom_jacobian(&h, &x, &y, &z).unwrap(),
            jacobian(&a, &x, &y, &z).unwrap()
        );
    }

    #[test]
    fn validate_flags_dimension_mismatches() {
        let h = HomAlgebra::new(sl2(), identity_twist(2));
        let errors = h.validate();
        assert_eq!(errors.len(), 1, "{errors:?}");
        assert!(errors[0].contains("twist dim 2"));
    }

    #[test]
    fn well_formed_bundle_validates_clean() {
        let h = HomAlgebra::untwisted(sl2());
        assert!(h.validate().is_empty());
        let t = HomTriple::new(sl2(), TernaryOp::zero(3), identity_twist(3));
        assert!(t.validate().is_empty());
    }
}
