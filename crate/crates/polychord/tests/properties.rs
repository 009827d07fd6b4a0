//! Randomized algebraic properties of the exact arithmetic layers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use polychord::cyclotomic::{
    chord_sq_polygon, cyclotomic_polynomial, euler_phi, rational_recognition, PolygonRing,
};
use polychord::exactnum::QuadExt;
use polychord::spectrum::{polygon_spectrum, prime_factor_rational};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Small random field elements: numerators and denominators bounded so that
/// products of a few of them stay far from overflow territory.
fn quad_strategy() -> impl Strategy<Value = QuadExt> {
    (-50i64..=50, 1i64..=12, -50i64..=50, 1i64..=12)
        .prop_map(|(an, ad, bn, bd)| QuadExt::quad(an, ad, bn, bd))
}

fn nonzero_quad_strategy() -> impl Strategy<Value = QuadExt> {
    quad_strategy().prop_filter("nonzero", |x| !x.is_zero())
}

proptest! {
    #[test]
    fn addition_commutes_and_associates(
        a in quad_strategy(),
        b in quad_strategy(),
        c in quad_strategy(),
    ) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        prop_assert_eq!(a.clone() - a.clone(), QuadExt::zero());
    }

    #[test]
    fn multiplication_distributes(
        a in quad_strategy(),
        b in quad_strategy(),
        c in quad_strategy(),
    ) {
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(
            a.clone() * (b.clone() + c.clone()),
            a.clone() * b.clone() + a.clone() * c.clone()
        );
        prop_assert_eq!(a.clone() * QuadExt::one(), a.clone());
    }

    #[test]
    fn inverses_cancel(a in nonzero_quad_strategy()) {
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.clone() * inv, QuadExt::one());
    }

    #[test]
    fn sign_is_multiplicative(a in quad_strategy(), b in quad_strategy()) {
        prop_assert_eq!((a.clone() * b.clone()).sign(), a.sign() * b.sign());
    }

    #[test]
    fn ordering_agrees_with_sign_of_difference(
        a in quad_strategy(),
        b in quad_strategy(),
    ) {
        let diff_sign = (b.clone() - a.clone()).sign();
        match diff_sign {
            1 => prop_assert!(a < b),
            -1 => prop_assert!(a > b),
            _ => prop_assert_eq!(a, b),
        }
    }

    #[test]
    fn ordering_agrees_with_float_rendering(
        a in quad_strategy(),
        b in quad_strategy(),
    ) {
        // 128 bits is far more precision than these small elements need, so
        // the float order must match the exact order.
        if a < b {
            let fa = a.to_float(128);
            let fb = b.to_float(128);
            prop_assert!(matches!(fa.cmp(&fb), Some(o) if o < 0));
        }
    }

    #[test]
    fn conjugation_is_an_automorphism(a in quad_strategy(), b in quad_strategy()) {
        prop_assert_eq!(
            (a.clone() + b.clone()).conjugate(),
            a.conjugate() + b.conjugate()
        );
        prop_assert_eq!(
            (a.clone() * b.clone()).conjugate(),
            a.conjugate() * b.conjugate()
        );
        // Fixed points of conjugation are exactly the rationals.
        prop_assert_eq!(a.conjugate() == a, a.is_rational());
    }

    #[test]
    fn powers_compose(a in nonzero_quad_strategy(), m in 0i64..=6, k in 0i64..=6) {
        let lhs = a.powi(m + k).unwrap();
        let rhs = a.powi(m).unwrap() * a.powi(k).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn norm_is_the_product_with_the_conjugate(a in quad_strategy()) {
        let product = a.clone() * a.conjugate();
        prop_assert!(product.is_rational());
        prop_assert_eq!(product.to_rational().unwrap(), a.norm());
    }
}

proptest! {
    // Cyclotomic identities get fewer, heavier cases.
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn divisor_polynomials_multiply_to_x_pow_e_minus_one(
        order in 1u64..=48,
        num in -6i64..=6,
        den in 1i64..=4,
    ) {
        // Evaluate both sides at a random rational instead of comparing
        // coefficient vectors; equality at one point per case, across many
        // cases, pins the polynomial identity.
        let x = rational(num, den);
        let mut product = BigRational::one();
        for d in 1..=order {
            if order % d == 0 {
                product *= cyclotomic_polynomial(d).unwrap().evaluate(&x);
            }
        }
        let mut power = BigRational::one();
        for _ in 0..order {
            power *= x.clone();
        }
        prop_assert_eq!(product, power - BigRational::one());
    }

    #[test]
    fn cyclotomic_degree_is_the_totient(order in 1u64..=120) {
        let poly = cyclotomic_polynomial(order).unwrap();
        prop_assert_eq!(poly.degree() as u64, euler_phi(order));
    }

    #[test]
    fn chords_built_from_raw_zeta_powers_match(order in 3u64..=30, raw in 1u64..=29) {
        // 2 - zeta^j - zeta^(E-j) equals the canonical chord at
        // step min(j, E-j): both arcs subtend the same chord.
        let j = raw % (order - 1) + 1;
        let ring = PolygonRing::new(order).unwrap();
        let built = ring
            .from_rational(rational(2, 1))
            .sub(&ring.zeta_pow(j))
            .unwrap()
            .sub(&ring.zeta_pow(order - j))
            .unwrap();
        let canonical = ring.chord_sq(j.min(order - j)).unwrap();
        prop_assert_eq!(built, canonical);
    }

    #[test]
    fn polygon_sums_match_the_square_law(order in 3u64..=48) {
        let spectrum = polygon_spectrum(order).unwrap();
        let v = BigRational::from_integer(BigInt::from(order));
        prop_assert_eq!(spectrum.sum_squared().unwrap(), v.clone() * v);
    }

    #[test]
    fn zeta_powers_telescope(order in 3u64..=30, j in 0u64..=29, k in 0u64..=29) {
        let ring = PolygonRing::new(order).unwrap();
        let lhs = ring.zeta_pow(j).mul(&ring.zeta_pow(k)).unwrap();
        let rhs = ring.zeta_pow(j + k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chord_recognition_never_misreports(order in 3u64..=36, raw_step in 1u64..=18) {
        let step = raw_step % (order / 2) + 1;
        let c = chord_sq_polygon(order, step).unwrap();
        match rational_recognition(&c) {
            // A recognized rational must reconstruct the original element.
            Ok(value) => {
                let ring = PolygonRing::new(order).unwrap();
                prop_assert_eq!(ring.from_rational(value), c.clone());
            }
            // A rejection must be justified by a surviving basis coefficient.
            Err(_) => {
                prop_assert!(c.coefficients().iter().skip(1).any(|q| !q.is_zero()));
            }
        }
        if 2 * step == order {
            // The diameter is rational outright.
            prop_assert_eq!(rational_recognition(&c).unwrap(), rational(4, 1));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn factoring_round_trips(
        e2 in 0i64..=20,
        e3 in -12i64..=12,
        e5 in -8i64..=8,
        e7 in 0i64..=6,
    ) {
        let mut value = BigRational::one();
        for (base, exp) in [(2i64, e2), (3, e3), (5, e5), (7, e7)] {
            let mut power = BigRational::one();
            for _ in 0..exp.unsigned_abs() {
                power *= rational(base, 1);
            }
            if exp < 0 {
                power = power.recip();
            }
            value *= power;
        }
        let factors = prime_factor_rational(&value, 100).unwrap();
        let mut rebuilt = BigRational::one();
        for (p, exp) in &factors {
            let mut power = BigRational::one();
            for _ in 0..exp.unsigned_abs() {
                power *= rational(*p as i64, 1);
            }
            if *exp < 0 {
                power = power.recip();
            }
            rebuilt *= power;
        }
        prop_assert_eq!(rebuilt, value);
        // Exponents recorded are exactly the ones planted.
        for (p, planted) in [(2u64, e2), (3, e3), (5, e5), (7, e7)] {
            prop_assert_eq!(factors.get(&p).copied().unwrap_or(0), planted);
        }
    }
}

#[test]
fn quad_strategy_hits_irrational_and_negative_elements() {
    // Degenerate strategies would quietly weaken every property above.
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let strategy = quad_strategy();
    let mut saw_irrational = false;
    let mut saw_negative = false;
    for _ in 0..256 {
        let v = strategy.new_tree(&mut runner).unwrap().current();
        saw_irrational |= !v.is_rational();
        saw_negative |= v.sign() == -1;
    }
    assert!(saw_irrational && saw_negative);
}

#[test]
fn recognition_rejects_a_strict_irrational() {
    let c = chord_sq_polygon(7, 1).unwrap();
    assert!(rational_recognition(&c).is_err());
}
