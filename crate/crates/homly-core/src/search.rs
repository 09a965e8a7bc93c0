//! Seeded generators and a goal-directed miner for separating examples.
//!
//! Everything here is deterministic: streams are driven by the SplitMix64
//! generator in [`crate::rng`], candidate generation is sequential, and
//! concurrent checking is re-sorted by stream index before output, so a
//! fixed `(seed, config, goal)` always produces byte-identical results.

use crate::catalog::{self, CatalogError};
use crate::identities::{
    check_anticommutative, check_eq4, check_eq8, check_hom_malcev, check_jacobian_zero,
    check_malcev, check_multiplicative_binary, verdict, CheckError,
};
use crate::linalg::Matrix;
use crate::model::{identity_twist, BinaryAlgebra, HomAlgebra, TwistMap};
use crate::report::{AxiomId, CheckReport};
use crate::rng::SplitMix64;
use crate::scalar::{int, Scalar};
use crate::tensor::{Tensor3, Tensor4};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

/// Configuration of a generator or mining run.
#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    pub dim: usize,
    pub seed: u64,
    /// Finite set the structure constants are drawn from.
    pub coefficients: Vec<Scalar>,
    pub samples: usize,
}

impl GeneratorConfig {
    pub fn new(dim: usize, seed: u64, samples: usize) -> Self {
        GeneratorConfig {
            dim,
            seed,
            coefficients: default_coefficients(),
            samples,
        }
    }
}

/// The default coefficient set {-2, -1, 0, 1, 2}.
pub fn default_coefficients() -> Vec<Scalar> {
    [-2, -1, 0, 1, 2].into_iter().map(int).collect()
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("mining goal lists {0} as both must-pass and must-fail")]
    OverlappingGoal(AxiomId),
    #[error("mining goal: {0} is not a minable identity (supported: ANTICOMM, MULT-BIN, MALCEV-1, HOM-MALCEV-2, EQ-4, EQ-8, J-ZERO)")]
    UnsupportedAxiom(AxiomId),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// Draw an anticommutative product tensor: only `i < j` entries are drawn,
/// the mirror is filled with negated values and the diagonal stays zero,
/// so anticommutativity holds by construction.
fn draw_anticommutative(rng: &mut SplitMix64, dim: usize, coefficients: &[Scalar]) -> Tensor3 {
    let mut c = Tensor3::zero(dim);
    for i in 0..dim {
        for j in (i + 1)..dim {
            for k in 0..dim {
                let value = rng.pick(coefficients).clone();
                if !value.is_zero() {
                    c.set(j, i, k, -&value);
                    c.set(i, j, k, value);
                }
            }
        }
    }
    c
}

fn draw_matrix(rng: &mut SplitMix64, dim: usize, coefficients: &[Scalar]) -> Matrix {
    let rows = (0..dim)
        .map(|_| (0..dim).map(|_| rng.pick(coefficients).clone()).collect())
        .collect();
    Matrix::from_rows(rows).expect("square by construction")
}

fn draw_diagonal(rng: &mut SplitMix64, dim: usize, coefficients: &[Scalar]) -> Matrix {
    let mut rows = vec![vec![Scalar::zero(); dim]; dim];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = rng.pick(coefficients).clone();
    }
    Matrix::from_rows(rows).expect("square by construction")
}

/// Draw a random ternary structure-constant tensor (used by tests probing
/// the ternary axioms on arbitrary candidates).
pub fn draw_ternary(rng: &mut SplitMix64, dim: usize, coefficients: &[Scalar]) -> Tensor4 {
    let mut d = Tensor4::zero(dim);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                for l in 0..dim {
                    let value = rng.pick(coefficients).clone();
                    if !value.is_zero() {
                        d.set(i, j, k, l, value);
                    }
                }
            }
        }
    }
    d
}

/// Stream of anticommutative-by-construction algebras. Same seed, same
/// stream.
pub fn random_anticommutative(cfg: &GeneratorConfig) -> impl Iterator<Item = BinaryAlgebra> + '_ {
    let mut rng = SplitMix64::new(cfg.seed);
    (0..cfg.samples).map(move |index| {
        let product = draw_anticommutative(&mut rng, cfg.dim, &cfg.coefficients);
        BinaryAlgebra::new(
            format!("rand-anticomm-d{}-s{}-{}", cfg.dim, cfg.seed, index),
            product,
        )
    })
}

/// Stream of arbitrary twist maps (dense random matrices).
pub fn random_twist(cfg: &GeneratorConfig) -> impl Iterator<Item = TwistMap> + '_ {
    let mut rng = SplitMix64::new(cfg.seed);
    (0..cfg.samples).map(move |_| TwistMap::new(draw_matrix(&mut rng, cfg.dim, &cfg.coefficients)))
}

/// Per-item candidate cap for endomorphism rejection sampling.
const ENDO_ATTEMPTS_PER_ITEM: usize = 64;

/// Stream of endomorphisms of `b`. Candidates come from structured
/// families — the zero map, the identity, diagonal maps, and small dense
/// matrices — and only maps satisfying `M(x*y) = M(x)*M(y)` are emitted.
/// Rejection sampling is capped, so the stream may be shorter than
/// `cfg.samples` (or empty).
pub fn random_endomorphism<'a>(
    b: &'a BinaryAlgebra,
    cfg: &'a GeneratorConfig,
) -> impl Iterator<Item = TwistMap> + 'a {
    let mut rng = SplitMix64::new(cfg.seed);
    let mut candidate_index = 0usize;
    let budget = cfg.samples.saturating_mul(ENDO_ATTEMPTS_PER_ITEM);
    (0..cfg.samples).filter_map(move |_| {
        while candidate_index < budget {
            let candidate = match candidate_index % 4 {
                0 => Matrix::zero(cfg.dim),
                1 => Matrix::identity(cfg.dim),
                2 => draw_diagonal(&mut rng, cfg.dim, &cfg.coefficients),
                _ => draw_matrix(&mut rng, cfg.dim, &cfg.coefficients),
            };
            candidate_index += 1;
            let h = HomAlgebra::new(b.clone(), TwistMap::new(candidate));
            if verdict::multiplicative_binary(&h) {
                return Some(h.twist);
            }
        }
        None
    })
}

/// What the miner is looking for: the must-pass identities all hold and
/// the must-fail identities all fail. The two sets must be disjoint.
#[derive(Debug, Clone, Default)]
pub struct MiningGoal {
    pub must_pass: BTreeSet<AxiomId>,
    pub must_fail: BTreeSet<AxiomId>,
}

const MINABLE: &[AxiomId] = &[
    AxiomId::Anticomm,
    AxiomId::MultBin,
    AxiomId::Malcev1,
    AxiomId::HomMalcev2,
    AxiomId::Eq4,
    AxiomId::Eq8,
    AxiomId::JacobianZero,
];

impl MiningGoal {
    pub fn new(
        must_pass: impl IntoIterator<Item = AxiomId>,
        must_fail: impl IntoIterator<Item = AxiomId>,
    ) -> Self {
        MiningGoal {
            must_pass: must_pass.into_iter().collect(),
            must_fail: must_fail.into_iter().collect(),
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        for &axiom in self.must_pass.iter().chain(&self.must_fail) {
            if !MINABLE.contains(&axiom) {
                return Err(SearchError::UnsupportedAxiom(axiom));
            }
        }
        if let Some(&shared) = self.must_pass.intersection(&self.must_fail).next() {
            return Err(SearchError::OverlappingGoal(shared));
        }
        Ok(())
    }

    fn satisfied_by(&self, h: &HomAlgebra) -> bool {
        self.must_pass.iter().all(|&a| axiom_verdict(h, a))
            && self.must_fail.iter().all(|&a| !axiom_verdict(h, a))
    }
}

/// Early-exit verdict of one minable identity. MALCEV-1 always refers to
/// the classical identity on the binary part, whatever the twist;
/// J-ZERO uses the bundle's own twist.
fn axiom_verdict(h: &HomAlgebra, axiom: AxiomId) -> bool {
    match axiom {
        AxiomId::Anticomm => verdict::anticommutative(&h.base),
        AxiomId::MultBin => verdict::multiplicative_binary(h),
        AxiomId::Malcev1 => verdict::malcev(&h.base),
        AxiomId::HomMalcev2 => verdict::hom_malcev(h),
        AxiomId::Eq4 => verdict::eq4(h),
        AxiomId::Eq8 => verdict::eq8(h),
        AxiomId::JacobianZero => verdict::jacobian_zero(h),
        _ => unreachable!("goal validated against MINABLE"),
    }
}

fn axiom_report(h: &HomAlgebra, axiom: AxiomId) -> Result<CheckReport, CheckError> {
    match axiom {
        AxiomId::Anticomm => check_anticommutative(&h.base),
        AxiomId::MultBin => check_multiplicative_binary(h),
        AxiomId::Malcev1 => check_malcev(&h.base),
        AxiomId::HomMalcev2 => check_hom_malcev(h),
        AxiomId::Eq4 => check_eq4(h),
        AxiomId::Eq8 => check_eq8(h),
        AxiomId::JacobianZero => check_jacobian_zero(h),
        _ => unreachable!("goal validated against MINABLE"),
    }
}

/// Where a mining candidate came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HitSource {
    Catalog,
    Generated,
}

/// One miner hit: the candidate bundle and the full reports for every
/// goal identity.
#[derive(Debug, Clone)]
pub struct MiningHit {
    /// Position in the candidate stream (catalog seeds first).
    pub index: usize,
    pub source: HitSource,
    pub bundle: HomAlgebra,
    pub reports: Vec<CheckReport>,
}

/// Mine for bundles satisfying `goal`. The candidate stream starts with
/// the catalog entries of the configured dimension (seeding the search
/// with known-good separators), followed by generated candidates: a fresh
/// anticommutative binary per sample with a twist cycling through the
/// identity, a random diagonal map and a random dense map. The stream is
/// bounded by `cfg.samples` candidates in total.
pub fn mine(cfg: &GeneratorConfig, goal: &MiningGoal) -> Result<Vec<MiningHit>, SearchError> {
    goal.validate()?;

    let mut candidates: Vec<(HitSource, HomAlgebra)> = Vec::new();
    for entry in catalog::validated()? {
        if entry.bundle.dim() == cfg.dim && candidates.len() < cfg.samples {
            candidates.push((HitSource::Catalog, entry.bundle.hom_algebra()));
        }
    }

    let mut rng = SplitMix64::new(cfg.seed);
    let mut sample = 0usize;
    while candidates.len() < cfg.samples {
        let product = draw_anticommutative(&mut rng, cfg.dim, &cfg.coefficients);
        let base = BinaryAlgebra::new(
            format!("rand-anticomm-d{}-s{}-{}", cfg.dim, cfg.seed, sample),
            product,
        );
        let twist = match sample % 3 {
            0 => identity_twist(cfg.dim),
            1 => TwistMap::new(draw_diagonal(&mut rng, cfg.dim, &cfg.coefficients)),
            _ => TwistMap::new(draw_matrix(&mut rng, cfg.dim, &cfg.coefficients)),
        };
        candidates.push((HitSource::Generated, HomAlgebra::new(base, twist)));
        sample += 1;
    }

    // Checking fans out; hits are re-sorted by stream index afterwards.
    let mut hits: Vec<MiningHit> = candidates
        .into_par_iter()
        .enumerate()
        .filter(|(_, (_, h))| goal.satisfied_by(h))
        .map(|(index, (source, bundle))| {
            let reports = goal
                .must_pass
                .iter()
                .chain(&goal.must_fail)
                .map(|&axiom| axiom_report(&bundle, axiom))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(MiningHit {
                index,
                source,
                bundle,
                reports,
            })
        })
        .collect::<Result<Vec<_>, SearchError>>()?;
    hits.sort_by_key(|hit| hit.index);
    Ok(hits)
}
