//! Independent oracles for the catalog constants.
//!
//! The octonion commutator algebra is re-derived here from scratch —
//! quaternion arithmetic, Cayley-Dickson doubling, commutators — and
//! compared entry-for-entry against the shipped data file. The Sagle
//! algebra's nonzero Jacobian value is frozen from a hand expansion of
//! the three cyclic terms.

use homly_core::catalog;
use homly_core::model::hom_jacobian;
use homly_core::scalar::int;
use homly_core::{Tensor3, Vector};

/// Quaternion as (w, x, y, z) = w + xi + yj + zk.
type Quat = [i64; 4];

fn qmul(a: Quat, b: Quat) -> Quat {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn qconj(a: Quat) -> Quat {
    [a[0], -a[1], -a[2], -a[3]]
}

fn qadd(a: Quat, b: Quat) -> Quat {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn qsub(a: Quat, b: Quat) -> Quat {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

/// Octonion as a pair of quaternions under Cayley-Dickson doubling:
/// (a,b)(c,d) = (ac - d̄b, da + bc̄).
type Oct = [Quat; 2];

fn omul(x: Oct, y: Oct) -> Oct {
    let [a, b] = x;
    let [c, d] = y;
    [
        qsub(qmul(a, c), qmul(qconj(d), b)),
        qadd(qmul(d, a), qmul(b, qconj(c))),
    ]
}

fn obasis(i: usize) -> Oct {
    let mut v = [[0i64; 4]; 2];
    v[i / 4][i % 4] = 1;
    v
}

fn ocoord(x: Oct, i: usize) -> i64 {
    x[i / 4][i % 4]
}

/// Structure constants of the commutator algebra on the imaginary units
/// e_1..e_7 (re-indexed 0..6).
fn octonion_commutator_tensor() -> Tensor3 {
    let mut c = Tensor3::zero(7);
    for i in 0..7 {
        for j in 0..7 {
            let x = obasis(i + 1);
            let y = obasis(j + 1);
            let xy = omul(x, y);
            let yx = omul(y, x);
            assert_eq!(
                ocoord(xy, 0) - ocoord(yx, 0),
                0,
                "commutator of imaginary units must be imaginary"
            );
            for k in 0..7 {
                let value = ocoord(xy, k + 1) - ocoord(yx, k + 1);
                if value != 0 {
                    c.set(i, j, k, int(value));
                }
            }
        }
    }
    c
}

#[test]
fn octonion_catalog_constants_match_the_cayley_dickson_oracle() {
    let oracle = octonion_commutator_tensor();
    let entry = catalog::by_name("malcev_7dim_octonion").unwrap().unwrap();
    assert_eq!(entry.bundle.hom_algebra().base.product, oracle);
}

#[test]
fn octonion_twisted_catalog_entry_is_the_doubling_involution_twist() {
    // alpha fixes the quaternionic units i, j, k and negates l, il, jl, kl;
    // the twisted product is alpha applied to every commutator.
    let oracle = octonion_commutator_tensor();
    let entry = catalog::by_name("octonion_twist_doubling").unwrap().unwrap();
    let hom = entry.bundle.hom_algebra();
    let sign = |k: usize| if k < 3 { 1 } else { -1 };
    for i in 0..7 {
        for j in 0..7 {
            for k in 0..7 {
                assert_eq!(
                    hom.base.product.entry(i, j, k),
                    &(oracle.entry(i, j, k) * int(sign(k))),
                );
            }
        }
    }
    for r in 0..7 {
        for c in 0..7 {
            let expected = if r == c { int(sign(r)) } else { int(0) };
            assert_eq!(hom.twist.map.entry(r, c), &expected);
        }
    }
}

#[test]
fn octonion_jacobian_value_from_the_oracle() {
    // J(e1, e2, e4) in octonion indexing, i.e. basis 0,1,3 here. Each
    // bracket of distinct imaginary units doubles the product, so
    // J(i, j, l) = [[i,j],l] + [[j,l],i] + [[l,i],j]
    //            = 4((ij)l + (jl)i + (li)j) = 4(kl + (jl)i + (li)j).
    let entry = catalog::by_name("malcev_7dim_octonion").unwrap().unwrap();
    let h = entry.bundle.hom_algebra();
    let j = hom_jacobian(
        &h,
        &Vector::basis(7, 0),
        &Vector::basis(7, 1),
        &Vector::basis(7, 3),
    )
    .unwrap();

    let x = obasis(1);
    let y = obasis(2);
    let z = obasis(4);
    let comm = |a: Oct, b: Oct| qsub_oct(omul(a, b), omul(b, a));
    let expected_oct = {
        let t1 = comm(comm(x, y), z);
        let t2 = comm(comm(y, z), x);
        let t3 = comm(comm(z, x), y);
        qadd_oct(qadd_oct(t1, t2), t3)
    };
    let expected = Vector::from_coords((1..8).map(|k| int(ocoord(expected_oct, k))).collect());
    assert_eq!(j, expected);
    assert!(!j.is_zero(), "the octonion Malcev algebra is not Lie");
}

fn qadd_oct(a: Oct, b: Oct) -> Oct {
    [qadd(a[0], b[0]), qadd(a[1], b[1])]
}

fn qsub_oct(a: Oct, b: Oct) -> Oct {
    [qsub(a[0], b[0]), qsub(a[1], b[1])]
}

#[test]
fn sagle_jacobian_is_minus_six_e3() {
    // [[e0,e1],e2] = [-e1,e2] = -2e3; [[e1,e2],e0] = [2e3,e0] = -2e3;
    // [[e2,e0],e1] = [e2,e1] = -2e3. Total: -6e3.
    let entry = catalog::by_name("sagle_malcev_4dim").unwrap().unwrap();
    let h = entry.bundle.hom_algebra();
    let j = hom_jacobian(
        &h,
        &Vector::basis(4, 0),
        &Vector::basis(4, 1),
        &Vector::basis(4, 2),
    )
    .unwrap();
    assert_eq!(
        j,
        Vector::from_coords(vec![int(0), int(0), int(0), int(-6)])
    );
}

#[test]
fn quaternion_table_sanity() {
    let i = [0i64, 1, 0, 0];
    let j = [0i64, 0, 1, 0];
    let k = [0i64, 0, 0, 1];
    assert_eq!(qmul(i, j), k);
    assert_eq!(qmul(j, k), i);
    assert_eq!(qmul(k, i), j);
    assert_eq!(qmul(i, i), [-1, 0, 0, 0]);
}

#[test]
fn octonions_are_alternative_but_not_associative() {
    // (e1 e2) e4 vs e1 (e2 e4): associativity fails somewhere,
    // while x(xy) = (xx)y always holds.
    let mut found_nonassociative = false;
    for a in 1..8 {
        for b in 1..8 {
            for c in 1..8 {
                let x = obasis(a);
                let y = obasis(b);
                let z = obasis(c);
                if omul(omul(x, y), z) != omul(x, omul(y, z)) {
                    found_nonassociative = true;
                }
                assert_eq!(omul(x, omul(x, y)), omul(omul(x, x), y));
            }
        }
    }
    assert!(found_nonassociative);
}
