//! One checker per defining identity.
//!
//! Every checker evaluates its identity exactly as written on the given
//! structure constants — no anticommutativity or multiplicativity is
//! assumed — and returns a deterministic report: pass/fail, total failure
//! count, and the lexicographically first failing argument tuple with its
//! residual `LHS - RHS`.
//!
//! Multilinear identities are decided on basis tuples (basis sufficiency);
//! the two identities that are quadratic in `x` — the Malcev identity and
//! its twisted form — are decided on the polarization set
//! `{e_i} ∪ {e_i + e_j, i < j}`, which is sound over ℚ: a vector-valued
//! quadratic form vanishing on that set vanishes identically.
//!
//! Checkers partition their tuple space into disjoint chunks evaluated
//! concurrently; merges are associative and the first-witness rule is
//! resolved by lexicographic minimum, so reports are reproducible.

use crate::linalg::{DimensionMismatch, Vector};
use crate::model::{hom_jacobian, jacobian, BinaryAlgebra, HomAlgebra, HomTriple, Validate};
use crate::report::{ArgValue, AxiomId, CheckReport, Witness, WitnessArg};
use rayon::prelude::*;
use thiserror::Error;

/// A bundle that cannot be checked at all (as opposed to one that fails
/// an identity).
#[derive(Debug, Clone, Error)]
pub enum CheckError {
    #[error("structural errors: {}", .0.join("; "))]
    Structural(Vec<String>),
    #[error("LY axioms require the identity twist; got a non-identity twist map")]
    NonIdentityTwist,
}

fn ensure_valid(obj: &impl Validate) -> Result<(), CheckError> {
    let errors = obj.validate();
    if errors.is_empty() {
        Ok(())
    } else {
        Err(CheckError::Structural(errors))
    }
}

/// Residuals `LHS - RHS` of each identity, evaluated at arbitrary vectors.
///
/// These are the single source of truth for what each identity states; the
/// checkers drive them over basis/polarized tuples, and the test suites
/// drive them over random rational tuples.
pub mod residuals {
    use super::*;

    type R = Result<Vector, DimensionMismatch>;

    /// `x*y + y*x` (zero iff anticommutative at `(x, y)`).
    pub fn anticomm(b: &BinaryAlgebra, x: &Vector, y: &Vector) -> R {
        b.product(x, y)?.add(&b.product(y, x)?)
    }

    /// `α(x*y) - α(x)*α(y)`.
    pub fn mult_bin(h: &HomAlgebra, x: &Vector, y: &Vector) -> R {
        let lhs = h.twist.apply(&h.base.product(x, y)?)?;
        let rhs = h.base.product(&h.twist.apply(x)?, &h.twist.apply(y)?)?;
        lhs.sub(&rhs)
    }

    /// `α({x,y,z}) - {α(x),α(y),α(z)}`.
    pub fn mult_ter(t: &HomTriple, x: &Vector, y: &Vector, z: &Vector) -> R {
        let lhs = t.twist.apply(&t.triple.eval(x, y, z)?)?;
        let rhs = t.triple.eval(
            &t.twist.apply(x)?,
            &t.twist.apply(y)?,
            &t.twist.apply(z)?,
        )?;
        lhs.sub(&rhs)
    }

    /// `{x,y,z} + {y,x,z}` (zero iff skew in the first two slots).
    pub fn ternary_skew(t: &HomTriple, x: &Vector, y: &Vector, z: &Vector) -> R {
        t.triple.eval(x, y, z)?.add(&t.triple.eval(y, x, z)?)
    }

    /// Malcev identity: `J(x,y,x*z) - J(x,y,z)*x`.
    pub fn malcev(b: &BinaryAlgebra, x: &Vector, y: &Vector, z: &Vector) -> R {
        let lhs = jacobian(b, x, y, &b.product(x, z)?)?;
        let rhs = b.product(&jacobian(b, x, y, z)?, x)?;
        lhs.sub(&rhs)
    }

    /// Hom-Malcev identity: `J_α(α(x),α(y),x*z) - J_α(x,y,z)*α²(x)`.
    pub fn hom_malcev(h: &HomAlgebra, x: &Vector, y: &Vector, z: &Vector) -> R {
        let a = &h.twist;
        let lhs = hom_jacobian(h, &a.apply(x)?, &a.apply(y)?, &h.base.product(x, z)?)?;
        let alpha2_x = a.apply(&a.apply(x)?)?;
        let rhs = h.base.product(&hom_jacobian(h, x, y, z)?, &alpha2_x)?;
        lhs.sub(&rhs)
    }

    /// The four-variable form equivalent to the Hom-Malcev identity:
    /// `J_α(α(x),α(y),u*v) - J_α(x,y,u)*α²(v) - α²(u)*J_α(x,y,v)
    ///  + 2 J_α(α(u),α(v),x*y)`.
    pub fn eq4(h: &HomAlgebra, x: &Vector, y: &Vector, u: &Vector, v: &Vector) -> R {
        let a = &h.twist;
        let b = &h.base;
        let lhs = hom_jacobian(h, &a.apply(x)?, &a.apply(y)?, &b.product(u, v)?)?;
        let t1 = b.product(&hom_jacobian(h, x, y, u)?, &a.apply(&a.apply(v)?)?)?;
        let t2 = b.product(&a.apply(&a.apply(u)?)?, &hom_jacobian(h, x, y, v)?)?;
        let t3 = hom_jacobian(h, &a.apply(u)?, &a.apply(v)?, &b.product(x, y)?)?
            .scale(&crate::scalar::int(2));
        lhs.sub(&t1)?.sub(&t2)?.add(&t3)
    }

    /// The linearized form of the Hom-Malcev identity:
    /// `J_α(α(w),α(y),x*z) + J_α(α(x),α(y),w*z)
    ///  - J_α(w,y,z)*α²(x) - J_α(x,y,z)*α²(w)`.
    pub fn eq8(h: &HomAlgebra, w: &Vector, x: &Vector, y: &Vector, z: &Vector) -> R {
        let a = &h.twist;
        let b = &h.base;
        let l1 = hom_jacobian(h, &a.apply(w)?, &a.apply(y)?, &b.product(x, z)?)?;
        let l2 = hom_jacobian(h, &a.apply(x)?, &a.apply(y)?, &b.product(w, z)?)?;
        let r1 = b.product(&hom_jacobian(h, w, y, z)?, &a.apply(&a.apply(x)?)?)?;
        let r2 = b.product(&hom_jacobian(h, x, y, z)?, &a.apply(&a.apply(w)?)?)?;
        l1.add(&l2)?.sub(&r1)?.sub(&r2)
    }

    /// `↺_{(x,y,z)} [(x*y)*α(z) + {x,y,z}]`.
    pub fn hly5(t: &HomTriple, x: &Vector, y: &Vector, z: &Vector) -> R {
        let mut acc = Vector::zero(t.dim());
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            let bin = t
                .base
                .product(&t.base.product(a, b)?, &t.twist.apply(c)?)?;
            acc = acc.add(&bin)?.add(&t.triple.eval(a, b, c)?)?;
        }
        Ok(acc)
    }

    /// `↺_{(x,y,z)} {x*y, α(z), α(u)}`.
    pub fn hly6(t: &HomTriple, x: &Vector, y: &Vector, z: &Vector, u: &Vector) -> R {
        let au = t.twist.apply(u)?;
        let mut acc = Vector::zero(t.dim());
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            let term = t
                .triple
                .eval(&t.base.product(a, b)?, &t.twist.apply(c)?, &au)?;
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// `{α(x),α(y),u*v} - {x,y,u}*α²(v) - α²(u)*{x,y,v}`.
    pub fn hly7(t: &HomTriple, x: &Vector, y: &Vector, u: &Vector, v: &Vector) -> R {
        let a = &t.twist;
        let lhs = t
            .triple
            .eval(&a.apply(x)?, &a.apply(y)?, &t.base.product(u, v)?)?;
        let r1 = t
            .base
            .product(&t.triple.eval(x, y, u)?, &a.apply(&a.apply(v)?)?)?;
        let r2 = t
            .base
            .product(&a.apply(&a.apply(u)?)?, &t.triple.eval(x, y, v)?)?;
        lhs.sub(&r1)?.sub(&r2)
    }

    /// `{α²(x),α²(y),{u,v,w}} - {{x,y,u},α²(v),α²(w)}
    ///  - {α²(u),{x,y,v},α²(w)} - {α²(u),α²(v),{x,y,w}}`.
    pub fn hly8(
        t: &HomTriple,
        x: &Vector,
        y: &Vector,
        u: &Vector,
        v: &Vector,
        w: &Vector,
    ) -> R {
        let a = &t.twist;
        let a2 = |arg: &Vector| -> R { a.apply(&a.apply(arg)?) };
        let lhs = t
            .triple
            .eval(&a2(x)?, &a2(y)?, &t.triple.eval(u, v, w)?)?;
        let r1 = t.triple.eval(&t.triple.eval(x, y, u)?, &a2(v)?, &a2(w)?)?;
        let r2 = t.triple.eval(&a2(u)?, &t.triple.eval(x, y, v)?, &a2(w)?)?;
        let r3 = t.triple.eval(&a2(u)?, &a2(v)?, &t.triple.eval(x, y, w)?)?;
        lhs.sub(&r1)?.sub(&r2)?.sub(&r3)
    }
}

/// Accumulator for one chunk of the tuple sweep.
#[derive(Default)]
struct Sweep {
    failures: u64,
    first: Option<(usize, Vector)>,
}

impl Sweep {
    fn note(&mut self, pos: usize, residual: Vector) {
        self.failures += 1;
        if self.first.as_ref().is_none_or(|(p, _)| pos < *p) {
            self.first = Some((pos, residual));
        }
    }

    fn merge(mut self, other: Sweep) -> Sweep {
        self.failures += other.failures;
        self.first = match (self.first.take(), other.first) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

/// Sweep `residual` over `count` tuples (in positions `0..count`),
/// concurrently, and assemble the deterministic report.
fn sweep_report(
    axiom: AxiomId,
    count: usize,
    args_of: impl Fn(usize) -> Vec<WitnessArg> + Sync,
    residual: impl Fn(usize) -> Vector + Sync,
) -> CheckReport {
    let outcome = (0..count)
        .into_par_iter()
        .fold(Sweep::default, |mut acc, pos| {
            let r = residual(pos);
            if !r.is_zero() {
                acc.note(pos, r);
            }
            acc
        })
        .reduce(Sweep::default, Sweep::merge);
    match outcome.first {
        None => CheckReport::pass(axiom),
        Some((pos, residual)) => CheckReport::fail(
            axiom,
            outcome.failures,
            Witness {
                args: args_of(pos),
                residual,
            },
        ),
    }
}

/// Verdict-only sweep with early exit, for the miner's inner loop.
fn sweep_holds(count: usize, residual: impl Fn(usize) -> Vector) -> bool {
    (0..count).all(|pos| residual(pos).is_zero())
}

/// Basis vectors `e_0 .. e_{n-1}` with their labels.
fn basis_args(n: usize) -> Vec<(ArgValue, Vector)> {
    (0..n)
        .map(|i| (ArgValue::Basis(i), Vector::basis(n, i)))
        .collect()
}

/// Polarization set for a variable of degree two: `e_i`, then `e_i + e_j`
/// for `i < j`, in lexicographic order.
fn polarized_args(n: usize) -> Vec<(ArgValue, Vector)> {
    let mut out = basis_args(n);
    for i in 0..n {
        for j in (i + 1)..n {
            out.push((ArgValue::BasisSum(i, j), Vector::basis_sum(n, i, j)));
        }
    }
    out
}

/// Decode `pos` into indices over the given argument spaces, last index
/// fastest (lexicographic enumeration).
fn decode(mut pos: usize, lens: &[usize]) -> Vec<usize> {
    let mut out = vec![0; lens.len()];
    for (slot, &len) in out.iter_mut().zip(lens).rev() {
        *slot = pos % len;
        pos /= len;
    }
    out
}

/// Cartesian sweep over named argument spaces.
fn product_report(
    axiom: AxiomId,
    spaces: &[(&str, &[(ArgValue, Vector)])],
    residual: impl Fn(&[&Vector]) -> Vector + Sync,
) -> CheckReport {
    let lens: Vec<usize> = spaces.iter().map(|(_, s)| s.len()).collect();
    let count = lens.iter().product();
    sweep_report(
        axiom,
        count,
        |pos| {
            decode(pos, &lens)
                .iter()
                .zip(spaces)
                .map(|(&idx, (name, space))| WitnessArg::new(name, space[idx].0))
                .collect()
        },
        |pos| {
            let indices = decode(pos, &lens);
            let values: Vec<&Vector> = indices
                .iter()
                .zip(spaces)
                .map(|(&idx, (_, space))| &space[idx].1)
                .collect();
            residual(&values)
        },
    )
}

fn product_holds(
    spaces: &[&[(ArgValue, Vector)]],
    residual: impl Fn(&[&Vector]) -> Vector,
) -> bool {
    let lens: Vec<usize> = spaces.iter().map(|s| s.len()).collect();
    let count = lens.iter().product();
    sweep_holds(count, |pos| {
        let indices = decode(pos, &lens);
        let values: Vec<&Vector> = indices
            .iter()
            .zip(spaces)
            .map(|(&idx, space)| &space[idx].1)
            .collect();
        residual(&values)
    })
}

/// `x*y = -y*x` on all basis pairs `i ≤ j` (basis sufficiency for a
/// bilinear identity).
pub fn check_anticommutative(b: &BinaryAlgebra) -> Result<CheckReport, CheckError> {
    ensure_valid(b)?;
    let n = b.dim;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    Ok(sweep_report(
        AxiomId::Anticomm,
        pairs.len(),
        |pos| {
            let (i, j) = pairs[pos];
            vec![
                WitnessArg::new("x", ArgValue::Basis(i)),
                WitnessArg::new("y", ArgValue::Basis(j)),
            ]
        },
        |pos| {
            let (i, j) = pairs[pos];
            residuals::anticomm(b, &Vector::basis(n, i), &Vector::basis(n, j))
                .expect("validated dims")
        },
    ))
}

/// `α(x*y) = α(x)*α(y)` on all basis pairs.
pub fn check_multiplicative_binary(h: &HomAlgebra) -> Result<CheckReport, CheckError> {
    ensure_valid(h)?;
    let basis = basis_args(h.dim());
    Ok(product_report(
        AxiomId::MultBin,
        &[("x", &basis), ("y", &basis)],
        |v| residuals::mult_bin(h, v[0], v[1]).expect("validated dims"),
    ))
}

/// `α({x,y,z}) = {α(x),α(y),α(z)}` on all basis triples.
pub fn check_multiplicative_ternary(t: &HomTriple) -> Result<CheckReport, CheckError> {
    ensure_valid(t)?;
    let basis = basis_args(t.dim());
    Ok(product_report(
        AxiomId::MultTer,
        &[("x", &basis), ("y", &basis), ("z", &basis)],
        |v| residuals::mult_ter(t, v[0], v[1], v[2]).expect("validated dims"),
    ))
}

/// `{x,y,z} = -{y,x,z}` on basis triples with `i ≤ j`.
pub fn check_ternary_skew(t: &HomTriple) -> Result<CheckReport, CheckError> {
    ensure_valid(t)?;
    let n = t.dim();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (i..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .collect();
    Ok(sweep_report(
        AxiomId::TernarySkew,
        triples.len(),
        |pos| {
            let (i, j, k) = triples[pos];
            vec![
                WitnessArg::new("x", ArgValue::Basis(i)),
                WitnessArg::new("y", ArgValue::Basis(j)),
                WitnessArg::new("z", ArgValue::Basis(k)),
            ]
        },
        |pos| {
            let (i, j, k) = triples[pos];
            residuals::ternary_skew(
                t,
                &Vector::basis(n, i),
                &Vector::basis(n, j),
                &Vector::basis(n, k),
            )
            .expect("validated dims")
        },
    ))
}

/// Malcev identity, polarized over `x` (quadratic), basis over `y, z`.
pub fn check_malcev(b: &BinaryAlgebra) -> Result<CheckReport, CheckError> {
    ensure_valid(b)?;
    let polarized = polarized_args(b.dim);
    let basis = basis_args(b.dim);
    Ok(product_report(
        AxiomId::Malcev1,
        &[("x", &polarized), ("y", &basis), ("z", &basis)],
        |v| residuals::malcev(b, v[0], v[1], v[2]).expect("validated dims"),
    ))
}

/// Hom-Malcev identity, polarized over `x`, basis over `y, z`.
pub fn check_hom_malcev(h: &HomAlgebra) -> Result<CheckReport, CheckError> {
    ensure_valid(h)?;
    let polarized = polarized_args(h.dim());
    let basis = basis_args(h.dim());
    Ok(product_report(
        AxiomId::HomMalcev2,
        &[("x", &polarized), ("y", &basis), ("z", &basis)],
        |v| residuals::hom_malcev(h, v[0], v[1], v[2]).expect("validated dims"),
    ))
}

/// The four-variable equivalent of the Hom-Malcev identity, exhaustive
/// over basis tuples.
pub fn check_eq4(h: &HomAlgebra) -> Result<CheckReport, CheckError> {
    ensure_valid(h)?;
    let basis = basis_args(h.dim());
    Ok(product_report(
        AxiomId::Eq4,
        &[("x", &basis), ("y", &basis), ("u", &basis), ("v", &basis)],
        |v| residuals::eq4(h, v[0], v[1], v[2], v[3]).expect("validated dims"),
    ))
}

/// The linearized Hom-Malcev identity, exhaustive over basis tuples.
pub fn check_eq8(h: &HomAlgebra) -> Result<CheckReport, CheckError> {
    ensure_valid(h)?;
    let basis = basis_args(h.dim());
    Ok(product_report(
        AxiomId::Eq8,
        &[("w", &basis), ("x", &basis), ("y", &basis), ("z", &basis)],
        |v| residuals::eq8(h, v[0], v[1], v[2], v[3]).expect("validated dims"),
    ))
}

/// Whether the Hom-Jacobian vanishes identically (the bundle is Hom-Lie).
pub fn check_jacobian_zero(h: &HomAlgebra) -> Result<CheckReport, CheckError> {
    ensure_valid(h)?;
    let basis = basis_args(h.dim());
    Ok(product_report(
        AxiomId::JacobianZero,
        &[("x", &basis), ("y", &basis), ("z", &basis)],
        |v| hom_jacobian(h, v[0], v[1], v[2]).expect("validated dims"),
    ))
}

/// All eight Hom-Lie-Yamaguti axioms, in order. Every axiom is evaluated
/// even after a failure; diagnosis value outweighs the wasted work at
/// these sizes.
pub fn check_hly(t: &HomTriple) -> Result<Vec<CheckReport>, CheckError> {
    ensure_valid(t)?;
    let h = t.hom_algebra();
    let basis = basis_args(t.dim());
    let reports = vec![
        check_multiplicative_binary(&h)?.relabel(AxiomId::Hly1),
        check_multiplicative_ternary(t)?.relabel(AxiomId::Hly2),
        check_anticommutative(&t.base)?.relabel(AxiomId::Hly3),
        check_ternary_skew(t)?.relabel(AxiomId::Hly4),
        product_report(
            AxiomId::Hly5,
            &[("x", &basis), ("y", &basis), ("z", &basis)],
            |v| residuals::hly5(t, v[0], v[1], v[2]).expect("validated dims"),
        ),
        product_report(
            AxiomId::Hly6,
            &[("x", &basis), ("y", &basis), ("z", &basis), ("u", &basis)],
            |v| residuals::hly6(t, v[0], v[1], v[2], v[3]).expect("validated dims"),
        ),
        product_report(
            AxiomId::Hly7,
            &[("x", &basis), ("y", &basis), ("u", &basis), ("v", &basis)],
            |v| residuals::hly7(t, v[0], v[1], v[2], v[3]).expect("validated dims"),
        ),
        product_report(
            AxiomId::Hly8,
            &[
                ("x", &basis),
                ("y", &basis),
                ("u", &basis),
                ("v", &basis),
                ("w", &basis),
            ],
            |v| residuals::hly8(t, v[0], v[1], v[2], v[3], v[4]).expect("validated dims"),
        ),
    ];
    Ok(reports)
}

/// The six Lie-Yamaguti axioms: the HLY checks at the identity twist,
/// re-labelled LY1..LY6 (the two multiplicativity axioms are vacuous at
/// the identity and have no LY counterpart).
pub fn check_ly(t: &HomTriple) -> Result<Vec<CheckReport>, CheckError> {
    ensure_valid(t)?;
    if !t.twist.is_identity() {
        return Err(CheckError::NonIdentityTwist);
    }
    let hly = check_hly(t)?;
    let relabels = [
        AxiomId::Ly1,
        AxiomId::Ly2,
        AxiomId::Ly3,
        AxiomId::Ly4,
        AxiomId::Ly5,
        AxiomId::Ly6,
    ];
    Ok(hly
        .into_iter()
        .skip(2) // HLY1, HLY2 are the multiplicativity axioms
        .zip(relabels)
        .map(|(report, id)| report.relabel(id))
        .collect())
}

/// Early-exit verdicts for the miner. Same residuals, no report assembly.
pub(crate) mod verdict {
    use super::*;

    pub fn anticommutative(b: &BinaryAlgebra) -> bool {
        let n = b.dim;
        (0..n).all(|i| {
            (i..n).all(|j| {
                residuals::anticomm(b, &Vector::basis(n, i), &Vector::basis(n, j))
                    .expect("validated dims")
                    .is_zero()
            })
        })
    }

    pub fn multiplicative_binary(h: &HomAlgebra) -> bool {
        let basis = basis_args(h.dim());
        product_holds(&[&basis, &basis], |v| {
            residuals::mult_bin(h, v[0], v[1]).expect("validated dims")
        })
    }

    pub fn malcev(b: &BinaryAlgebra) -> bool {
        let polarized = polarized_args(b.dim);
        let basis = basis_args(b.dim);
        product_holds(&[&polarized, &basis, &basis], |v| {
            residuals::malcev(b, v[0], v[1], v[2]).expect("validated dims")
        })
    }

    pub fn hom_malcev(h: &HomAlgebra) -> bool {
        let polarized = polarized_args(h.dim());
        let basis = basis_args(h.dim());
        product_holds(&[&polarized, &basis, &basis], |v| {
            residuals::hom_malcev(h, v[0], v[1], v[2]).expect("validated dims")
        })
    }

    pub fn eq4(h: &HomAlgebra) -> bool {
        let basis = basis_args(h.dim());
        product_holds(&[&basis, &basis, &basis, &basis], |v| {
            residuals::eq4(h, v[0], v[1], v[2], v[3]).expect("validated dims")
        })
    }

    pub fn eq8(h: &HomAlgebra) -> bool {
        let basis = basis_args(h.dim());
        product_holds(&[&basis, &basis, &basis, &basis], |v| {
            residuals::eq8(h, v[0], v[1], v[2], v[3]).expect("validated dims")
        })
    }

    pub fn jacobian_zero(h: &HomAlgebra) -> bool {
        let basis = basis_args(h.dim());
        product_holds(&[&basis, &basis, &basis], |v| {
            hom_jacobian(h, v[0], v[1], v[2]).expect("validated dims")
        })
    }
}
