//! Self-validating catalog of reference algebras.
//!
//! Entries are shipped as data files under `data/`, in the same format the
//! CLI reads, so a failed self-validation is fixable by editing the file.
//! Every entry declares the verdicts the checkers must reproduce
//! (`expect`) plus whether its (Hom-)Jacobian is nonzero somewhere
//! (`expect_jacobian_nonzero`); [`validated`] runs the checkers and aborts
//! with the offending entry and report on any disagreement.

use crate::format::{AlgebraFile, Bundle, FormatError};
use crate::identities::{
    check_anticommutative, check_eq4, check_eq8, check_hly, check_hom_malcev,
    check_jacobian_zero, check_malcev, check_multiplicative_binary, check_multiplicative_ternary,
    check_ternary_skew, CheckError,
};
use crate::report::{AxiomId, CheckReport};
use std::collections::BTreeMap;
use thiserror::Error;

/// The data files compiled into the crate, in catalog order.
const FILES: &[&str] = &[
    include_str!("../data/abelian_1.json"),
    include_str!("../data/abelian_2.json"),
    include_str!("../data/abelian_3.json"),
    include_str!("../data/abelian_4.json"),
    include_str!("../data/abelian_2_twist_shear.json"),
    include_str!("../data/lie_2dim_solvable.json"),
    include_str!("../data/lie_2dim_solvable_twist.json"),
    include_str!("../data/sl2.json"),
    include_str!("../data/sl2_twist_cartan.json"),
    include_str!("../data/sl2_scaled_twist.json"),
    include_str!("../data/sagle_malcev_4dim.json"),
    include_str!("../data/sagle_twist_diag.json"),
    include_str!("../data/sl2_oplus_solv2.json"),
    include_str!("../data/sl2_oplus_sl2.json"),
    include_str!("../data/malcev_7dim_octonion.json"),
    include_str!("../data/octonion_twist_doubling.json"),
];

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog entry {index}: {source}")]
    Format { index: usize, source: FormatError },
    #[error("catalog entry {name:?}: unknown axiom {axiom:?} in expect")]
    UnknownAxiom { name: String, axiom: String },
    #[error("catalog entry {name:?}: expect value for {axiom} must be \"pass\" or \"fail\", got {value:?}")]
    BadExpectValue {
        name: String,
        axiom: AxiomId,
        value: String,
    },
    #[error("catalog entry {name:?}: declared {axiom}: {expected} but the checker reported: {report}")]
    ExpectationMismatch {
        name: String,
        axiom: AxiomId,
        expected: &'static str,
        report: Box<CheckReport>,
    },
    #[error("catalog entry {name:?}: expect declares {axiom}, which the standard suite does not run on this entry")]
    ExpectationNotRun { name: String, axiom: AxiomId },
    #[error("catalog entry {name:?}: expected the Jacobian to be {expected}, checker reported: {report}")]
    JacobianMismatch {
        name: String,
        expected: &'static str,
        report: Box<CheckReport>,
    },
    #[error("catalog entry {name:?}: {source}")]
    Check { name: String, source: CheckError },
}

/// A catalog algebra with its declared expectations.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub file: AlgebraFile,
    pub bundle: Bundle,
    pub expect: BTreeMap<AxiomId, bool>,
    pub expect_jacobian_nonzero: Option<bool>,
}

impl CatalogEntry {
    pub fn name(&self) -> &str {
        self.bundle.name()
    }
}

/// The standard check suite, as run by `check` with no identity selection:
/// ANTICOMM, MULT-BIN, MALCEV-1 (identity twist only), HOM-MALCEV-2, EQ-4,
/// EQ-8, and — when a ternary operation is present — TERNARY-SKEW,
/// MULT-TER and HLY1..HLY8.
pub fn standard_suite(bundle: &Bundle) -> Result<Vec<CheckReport>, CheckError> {
    let hom = bundle.hom_algebra();
    let mut reports = vec![
        check_anticommutative(&hom.base)?,
        check_multiplicative_binary(&hom)?,
    ];
    if hom.twist.is_identity() {
        reports.push(check_malcev(&hom.base)?);
    }
    reports.push(check_hom_malcev(&hom)?);
    reports.push(check_eq4(&hom)?);
    reports.push(check_eq8(&hom)?);
    if let Some(triple) = bundle.triple() {
        reports.push(check_ternary_skew(triple)?);
        reports.push(check_multiplicative_ternary(triple)?);
        reports.extend(check_hly(triple)?);
    }
    Ok(reports)
}

fn parse_entry(index: usize, text: &str) -> Result<CatalogEntry, CatalogError> {
    let file =
        AlgebraFile::from_json(text).map_err(|source| CatalogError::Format { index, source })?;
    let bundle = file
        .build()
        .map_err(|source| CatalogError::Format { index, source })?;
    let mut expect = BTreeMap::new();
    if let Some(declared) = &file.expect {
        for (axiom_text, verdict_text) in declared {
            let axiom = AxiomId::from_str_exact(axiom_text).ok_or_else(|| {
                CatalogError::UnknownAxiom {
                    name: bundle.name().to_owned(),
                    axiom: axiom_text.clone(),
                }
            })?;
            let verdict = match verdict_text.as_str() {
                "pass" => true,
                "fail" => false,
                _ => {
                    return Err(CatalogError::BadExpectValue {
                        name: bundle.name().to_owned(),
                        axiom,
                        value: verdict_text.clone(),
                    })
                }
            };
            expect.insert(axiom, verdict);
        }
    }
    let expect_jacobian_nonzero = file.expect_jacobian_nonzero;
    Ok(CatalogEntry {
        file,
        bundle,
        expect,
        expect_jacobian_nonzero,
    })
}

/// Parse all catalog entries (no checker runs).
pub fn entries() -> Result<Vec<CatalogEntry>, CatalogError> {
    FILES
        .iter()
        .enumerate()
        .map(|(index, text)| parse_entry(index, text))
        .collect()
}

/// Run the self-validation on one entry.
pub fn validate_entry(entry: &CatalogEntry) -> Result<Vec<CheckReport>, CatalogError> {
    let name = entry.name().to_owned();
    let reports = standard_suite(&entry.bundle).map_err(|source| CatalogError::Check {
        name: name.clone(),
        source,
    })?;
    for (&axiom, &expected_pass) in &entry.expect {
        let report = reports
            .iter()
            .find(|r| r.axiom == axiom)
            .ok_or(CatalogError::ExpectationNotRun {
                name: name.clone(),
                axiom,
            })?;
        if report.passed() != expected_pass {
            return Err(CatalogError::ExpectationMismatch {
                name,
                axiom,
                expected: if expected_pass { "pass" } else { "fail" },
                report: Box::new(report.clone()),
            });
        }
    }
    if let Some(nonzero) = entry.expect_jacobian_nonzero {
        let report = check_jacobian_zero(&entry.bundle.hom_algebra()).map_err(|source| {
            CatalogError::Check {
                name: name.clone(),
                source,
            }
        })?;
        // nonzero expected <=> the J-ZERO check must fail
        if report.passed() == nonzero {
            return Err(CatalogError::JacobianMismatch {
                name,
                expected: if nonzero { "nonzero" } else { "zero" },
                report: Box::new(report),
            });
        }
    }
    Ok(reports)
}

/// All catalog entries, with every declared expectation re-checked.
pub fn validated() -> Result<Vec<CatalogEntry>, CatalogError> {
    let all = entries()?;
    for entry in &all {
        validate_entry(entry)?;
    }
    Ok(all)
}

/// Look up an entry by name (entries are parsed, not validated).
pub fn by_name(name: &str) -> Result<Option<CatalogEntry>, CatalogError> {
    Ok(entries()?.into_iter().find(|e| e.name() == name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_parses_and_covers_dims_1_through_7() {
        let all = entries().unwrap();
        assert_eq!(all.len(), 16);
        let dims: std::collections::BTreeSet<usize> =
            all.iter().map(|e| e.bundle.dim()).collect();
        assert_eq!(dims, (1..=7).collect());
    }

    #[test]
    fn every_entry_declares_expectations() {
        for entry in entries().unwrap() {
            assert!(
                !entry.expect.is_empty(),
                "{} has no expectations",
                entry.name()
            );
            assert!(entry.expect_jacobian_nonzero.is_some());
        }
    }

    #[test]
    fn catalog_self_validation_passes() {
        validated().unwrap();
    }

    #[test]
    fn abelian_2_passes_every_standard_check() {
        let entry = by_name("abelian_2").unwrap().unwrap();
        for report in standard_suite(&entry.bundle).unwrap() {
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn sagle_catalog_matches_the_fixture() {
        let entry = by_name("sagle_malcev_4dim").unwrap().unwrap();
        assert_eq!(
            entry.bundle.hom_algebra().base.product,
            crate::fixtures::sagle().product
        );
    }

    #[test]
    fn scaled_twist_entry_fails_exactly_multiplicativity() {
        let entry = by_name("sl2_scaled_twist").unwrap().unwrap();
        let reports = validate_entry(&entry).unwrap();
        for report in reports {
            if report.axiom == AxiomId::MultBin {
                assert!(!report.passed());
            } else {
                assert!(report.passed(), "{report}");
            }
        }
    }
}
