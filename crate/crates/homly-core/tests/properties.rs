//! Property tests for the exact kernel and the evaluators.

use homly_core::identities::residuals;
use homly_core::model::{hom_jacobian, HomAlgebra, TwistMap};
use homly_core::rng::SplitMix64;
use homly_core::scalar::{format_scalar, frac, parse_scalar, Scalar};
use homly_core::search::{self, GeneratorConfig};
use homly_core::{Matrix, Tensor3, Tensor4, Vector};
use proptest::prelude::*;

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    (any::<i32>(), 1..u16::MAX).prop_map(|(p, q)| frac(p as i64, q as i64))
}

fn vector_strategy(dim: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(scalar_strategy(), dim).prop_map(Vector::from_coords)
}

fn tensor3_strategy(dim: usize) -> impl Strategy<Value = Tensor3> {
    proptest::collection::vec(scalar_strategy(), dim * dim * dim).prop_map(move |values| {
        let mut c = Tensor3::zero(dim);
        let mut it = values.into_iter();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    c.set(i, j, k, it.next().unwrap());
                }
            }
        }
        c
    })
}

fn tensor4_strategy(dim: usize) -> impl Strategy<Value = Tensor4> {
    proptest::collection::vec(scalar_strategy(), dim * dim * dim * dim).prop_map(move |values| {
        let mut d = Tensor4::zero(dim);
        let mut it = values.into_iter();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for l in 0..dim {
                        d.set(i, j, k, l, it.next().unwrap());
                    }
                }
            }
        }
        d
    })
}

fn matrix_strategy(dim: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(
        proptest::collection::vec(scalar_strategy(), dim),
        dim,
    )
    .prop_map(|rows| Matrix::from_rows(rows).unwrap())
}

proptest! {
    #[test]
    fn scalar_round_trips_through_the_rational_grammar(s in scalar_strategy()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&s)).unwrap(), s);
    }

    #[test]
    fn bilinear_eval_is_additive_and_homogeneous_in_each_slot(
        c in tensor3_strategy(3),
        x in vector_strategy(3),
        x2 in vector_strategy(3),
        y in vector_strategy(3),
        factor in scalar_strategy(),
    ) {
        let sum = x.add(&x2).unwrap();
        prop_assert_eq!(
            c.bilinear(&sum, &y).unwrap(),
            c.bilinear(&x, &y).unwrap().add(&c.bilinear(&x2, &y).unwrap()).unwrap()
        );
        prop_assert_eq!(
            c.bilinear(&x, &y.scale(&factor)).unwrap(),
            c.bilinear(&x, &y).unwrap().scale(&factor)
        );
    }

    #[test]
    fn trilinear_eval_is_additive_in_the_middle_slot(
        d in tensor4_strategy(2),
        x in vector_strategy(2),
        y in vector_strategy(2),
        y2 in vector_strategy(2),
        z in vector_strategy(2),
    ) {
        let sum = y.add(&y2).unwrap();
        prop_assert_eq!(
            d.trilinear(&x, &sum, &z).unwrap(),
            d.trilinear(&x, &y, &z).unwrap()
                .add(&d.trilinear(&x, &y2, &z).unwrap()).unwrap()
        );
    }

    #[test]
    fn composition_agrees_with_iterated_application(
        a in matrix_strategy(3),
        b in matrix_strategy(3),
        v in vector_strategy(3),
    ) {
        prop_assert_eq!(
            a.compose(&b).unwrap().apply(&v).unwrap(),
            a.apply(&b.apply(&v).unwrap()).unwrap()
        );
    }

    #[test]
    fn hom_jacobian_is_trilinear(
        seed in any::<u64>(),
        x in vector_strategy(3),
        x2 in vector_strategy(3),
        y in vector_strategy(3),
        z in vector_strategy(3),
        factor in scalar_strategy(),
    ) {
        let h = random_anticommutative_bundle(seed);
        let sum = x.add(&x2).unwrap();
        prop_assert_eq!(
            hom_jacobian(&h, &sum, &y, &z).unwrap(),
            hom_jacobian(&h, &x, &y, &z).unwrap()
                .add(&hom_jacobian(&h, &x2, &y, &z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            hom_jacobian(&h, &x, &y.scale(&factor), &z).unwrap(),
            hom_jacobian(&h, &x, &y, &z).unwrap().scale(&factor)
        );
    }

    #[test]
    fn hom_jacobian_is_completely_skew_on_anticommutative_bundles(
        seed in any::<u64>(),
        x in vector_strategy(3),
        y in vector_strategy(3),
        z in vector_strategy(3),
    ) {
        let h = random_anticommutative_bundle(seed);
        let base = hom_jacobian(&h, &x, &y, &z).unwrap();
        // Even permutations match, odd permutations flip sign.
        prop_assert_eq!(hom_jacobian(&h, &y, &z, &x).unwrap(), base.clone());
        prop_assert_eq!(hom_jacobian(&h, &z, &x, &y).unwrap(), base.clone());
        prop_assert_eq!(hom_jacobian(&h, &y, &x, &z).unwrap(), base.neg());
        prop_assert_eq!(hom_jacobian(&h, &x, &z, &y).unwrap(), base.neg());
        prop_assert_eq!(hom_jacobian(&h, &z, &y, &x).unwrap(), base.neg());
    }

    #[test]
    fn eq8_is_the_polarization_of_the_hom_malcev_residual(
        seed in any::<u64>(),
        x in vector_strategy(3),
        y in vector_strategy(3),
        z in vector_strategy(3),
    ) {
        let h = random_anticommutative_bundle(seed);
        prop_assert_eq!(
            residuals::eq8(&h, &x, &x, &y, &z).unwrap(),
            residuals::hom_malcev(&h, &x, &y, &z).unwrap().scale(&frac(2, 1))
        );
    }
}

/// A deterministic anticommutative dim-3 bundle with a random twist.
fn random_anticommutative_bundle(seed: u64) -> HomAlgebra {
    let cfg = GeneratorConfig::new(3, seed, 1);
    let base = search::random_anticommutative(&cfg).next().unwrap();
    let mut rng = SplitMix64::new(seed ^ 0x5851_F42D_4C95_7F2D);
    let coeffs = search::default_coefficients();
    let rows = (0..3)
        .map(|_| (0..3).map(|_| rng.pick(&coeffs).clone()).collect())
        .collect();
    let twist = TwistMap::new(Matrix::from_rows(rows).unwrap());
    HomAlgebra::new(base, twist)
}
