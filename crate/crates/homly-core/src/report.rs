//! Pass/fail reports with deterministic first-failure witnesses.

use crate::linalg::Vector;
use crate::scalar::format_scalar;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Identifier of a checked axiom or identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AxiomId {
    #[serde(rename = "ANTICOMM")]
    Anticomm,
    #[serde(rename = "TERNARY-SKEW")]
    TernarySkew,
    #[serde(rename = "MULT-BIN")]
    MultBin,
    #[serde(rename = "MULT-TER")]
    MultTer,
    #[serde(rename = "MALCEV-1")]
    Malcev1,
    #[serde(rename = "HOM-MALCEV-2")]
    HomMalcev2,
    #[serde(rename = "EQ-4")]
    Eq4,
    #[serde(rename = "EQ-8")]
    Eq8,
    #[serde(rename = "HLY1")]
    Hly1,
    #[serde(rename = "HLY2")]
    Hly2,
    #[serde(rename = "HLY3")]
    Hly3,
    #[serde(rename = "HLY4")]
    Hly4,
    #[serde(rename = "HLY5")]
    Hly5,
    #[serde(rename = "HLY6")]
    Hly6,
    #[serde(rename = "HLY7")]
    Hly7,
    #[serde(rename = "HLY8")]
    Hly8,
    #[serde(rename = "LY1")]
    Ly1,
    #[serde(rename = "LY2")]
    Ly2,
    #[serde(rename = "LY3")]
    Ly3,
    #[serde(rename = "LY4")]
    Ly4,
    #[serde(rename = "LY5")]
    Ly5,
    #[serde(rename = "LY6")]
    Ly6,
    /// Pseudo-axiom used by the miner: the (Hom-)Jacobian vanishes
    /// identically, i.e. the bundle is (Hom-)Lie.
    #[serde(rename = "J-ZERO")]
    JacobianZero,
}

impl AxiomId {
    pub fn as_str(self) -> &'static str {
        match self {
            AxiomId::Anticomm => "ANTICOMM",
            AxiomId::TernarySkew => "TERNARY-SKEW",
            AxiomId::MultBin => "MULT-BIN",
            AxiomId::MultTer => "MULT-TER",
            AxiomId::Malcev1 => "MALCEV-1",
            AxiomId::HomMalcev2 => "HOM-MALCEV-2",
            AxiomId::Eq4 => "EQ-4",
            AxiomId::Eq8 => "EQ-8",
            AxiomId::Hly1 => "HLY1",
            AxiomId::Hly2 => "HLY2",
            AxiomId::Hly3 => "HLY3",
            AxiomId::Hly4 => "HLY4",
            AxiomId::Hly5 => "HLY5",
            AxiomId::Hly6 => "HLY6",
            AxiomId::Hly7 => "HLY7",
            AxiomId::Hly8 => "HLY8",
            AxiomId::Ly1 => "LY1",
            AxiomId::Ly2 => "LY2",
            AxiomId::Ly3 => "LY3",
            AxiomId::Ly4 => "LY4",
            AxiomId::Ly5 => "LY5",
            AxiomId::Ly6 => "LY6",
            AxiomId::JacobianZero => "J-ZERO",
        }
    }

    /// Parse the canonical (report) spelling, e.g. `"HOM-MALCEV-2"`.
    pub fn from_str_exact(text: &str) -> Option<AxiomId> {
        use AxiomId::*;
        let all = [
            Anticomm,
            TernarySkew,
            MultBin,
            MultTer,
            Malcev1,
            HomMalcev2,
            Eq4,
            Eq8,
            Hly1,
            Hly2,
            Hly3,
            Hly4,
            Hly5,
            Hly6,
            Hly7,
            Hly8,
            Ly1,
            Ly2,
            Ly3,
            Ly4,
            Ly5,
            Ly6,
            JacobianZero,
        ];
        all.into_iter().find(|id| id.as_str() == text)
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a check. `NotApplicable` is used by the Theorem 1.1 verifier
/// when the ternary operation is not the induced one, so the theorem says
/// nothing about the bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        })
    }
}

/// Value assigned to one identity variable in a witness: a basis vector, or
/// a polarized sum of two basis vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ArgValue {
    Basis(usize),
    BasisSum(usize, usize),
}

impl fmt::Display for ArgValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArgValue::Basis(i) => write!(f, "e{i}"),
            ArgValue::BasisSum(i, j) => write!(f, "e{i}+e{j}"),
        }
    }
}

impl Serialize for ArgValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ArgValue {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_arg_value(&text)
            .ok_or_else(|| serde::de::Error::custom(format!("invalid argument value {text:?}")))
    }
}

fn parse_arg_value(text: &str) -> Option<ArgValue> {
    let parse_basis = |part: &str| part.strip_prefix('e')?.parse::<usize>().ok();
    match text.split_once('+') {
        None => parse_basis(text).map(ArgValue::Basis),
        Some((a, b)) => Some(ArgValue::BasisSum(parse_basis(a)?, parse_basis(b)?)),
    }
}

/// One named argument of a failure witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessArg {
    pub var: String,
    pub value: ArgValue,
}

impl WitnessArg {
    pub fn new(var: &str, value: ArgValue) -> Self {
        WitnessArg {
            var: var.to_owned(),
            value,
        }
    }
}

/// First failing argument tuple of an identity, with the residual
/// `LHS - RHS` at that tuple (nonzero by construction).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub args: Vec<WitnessArg>,
    #[serde(
        serialize_with = "serialize_residual",
        deserialize_with = "deserialize_residual"
    )]
    pub residual: Vector,
}

fn serialize_residual<S: serde::Serializer>(v: &Vector, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.dim()))?;
    for c in v.coords() {
        seq.serialize_element(&format_scalar(c))?;
    }
    seq.end()
}

fn deserialize_residual<'de, D: serde::Deserializer<'de>>(d: D) -> Result<Vector, D::Error> {
    let texts = Vec::<String>::deserialize(d)?;
    let coords = texts
        .iter()
        .map(|t| crate::scalar::parse_scalar(t))
        .collect::<Result<Vec<_>, _>>()
        .map_err(serde::de::Error::custom)?;
    Ok(Vector::from_coords(coords))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, arg) in self.args.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}={}", arg.var, arg.value)?;
        }
        write!(f, "; residual {}", self.residual)
    }
}

/// Per-axiom verdict with deterministic first-failure witness and total
/// failure count. Witness enumeration order is lexicographic in argument
/// indices, so identical inputs yield identical reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub axiom: AxiomId,
    pub status: Status,
    pub failures: u64,
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass(axiom: AxiomId) -> Self {
        CheckReport {
            axiom,
            status: Status::Pass,
            failures: 0,
            witness: None,
        }
    }

    pub fn fail(axiom: AxiomId, failures: u64, witness: Witness) -> Self {
        CheckReport {
            axiom,
            status: Status::Fail,
            failures,
            witness: Some(witness),
        }
    }

    pub fn not_applicable(axiom: AxiomId, witness: Option<Witness>) -> Self {
        CheckReport {
            axiom,
            status: Status::NotApplicable,
            failures: 0,
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Same verdict, reported under another axiom name (used when an axiom
    /// delegates to a shared checker, e.g. HLY3 to the anticommutativity
    /// check).
    pub fn relabel(mut self, axiom: AxiomId) -> Self {
        self.axiom = axiom;
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.status)?;
        if let Some(witness) = &self.witness {
            write!(f, " (failures {}; witness {})", self.failures, witness)?;
        }
        Ok(())
    }
}
