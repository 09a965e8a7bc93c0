//! Verification and construction workbench for finite-dimensional
//! Hom-Malcev and Hom-Lie-Yamaguti algebras presented by exact rational
//! structure constants.
//!
//! The crate is organized around five layers:
//!
//! - [`scalar`], [`linalg`], [`tensor`] — the exact arithmetic substrate:
//!   rationals over arbitrary-precision integers, vectors, square matrices,
//!   and rank-3/4 structure-constant tensors with multilinear evaluation.
//! - [`model`] — algebra bundles (binary algebra, ternary operation, twist
//!   map) and the Jacobian/Hom-Jacobian evaluators.
//! - [`identities`] — one checker per defining identity, each producing a
//!   deterministic pass/fail report with a first-failure witness.
//! - [`constructions`] — the induced ternary operation, the transfers
//!   between Hom-Malcev and Hom-Lie-Yamaguti structures, and endomorphism
//!   twisting of classical algebras.
//! - [`search`], [`catalog`] — seeded generators, a goal-directed miner for
//!   separating examples, and a self-validating catalog of reference
//!   algebras shipped as data files.
//!
//! File and report formats live in [`format`]; all values are immutable
//! after construction and every operation is a pure function, so bundles
//! can be shared freely across concurrent check workers.

pub mod catalog;
pub mod constructions;
pub mod format;
pub mod identities;
pub mod linalg;
pub mod model;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod search;
pub mod tensor;

pub use linalg::{DimensionMismatch, Matrix, Vector};
pub use model::{
    hom_jacobian, identity_twist, jacobian, BinaryAlgebra, HomAlgebra, HomTriple, TernaryOp,
    TwistMap, Validate,
};
pub use report::{ArgValue, AxiomId, CheckReport, Status, Witness, WitnessArg};
pub use scalar::Scalar;
pub use tensor::{Tensor3, Tensor4};
