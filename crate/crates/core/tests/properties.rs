//! Property-based suites over random inputs: polynomial toolkit laws,
//! rewriting confluence, grading, cocycle identities, and module shapes.

use proptest::collection::vec;
use proptest::prelude::*;

use zhualg::lattice::{make_cocycle, validate_gram};
use zhualg::poly::{poly_gcd, Poly};
use zhualg::rat::{rat, Rat};
use zhualg::smith::nc::{nc_mul, normal_form_with_strategy, Gen, NcElement, NcMonomial, Strategy as Reduction};
use zhualg::smith::SmithAlgebra;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    vec(arb_rat(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

fn arb_gen() -> impl Strategy<Value = Gen> {
    prop_oneof![Just(Gen::A), Just(Gen::B), Just(Gen::H)]
}

fn arb_monomial() -> impl Strategy<Value = (NcMonomial, Rat)> {
    (0u32..3, 0u32..3, 0u32..3, arb_rat()).prop_map(|(m, n, k, c)| (NcMonomial::new(m, n, k), c))
}

fn arb_element() -> impl Strategy<Value = NcElement> {
    vec(arb_monomial(), 1..4).prop_map(|terms| {
        let mut e = NcElement::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    })
}

proptest! {
    #[test]
    fn gcd_divides_both_inputs(p in arb_poly(5), q in arb_poly(5)) {
        prop_assume!(!p.is_zero() || !q.is_zero());
        let g = poly_gcd(&p, &q).unwrap();
        if !p.is_zero() {
            prop_assert!(p.divisible_by(&g));
        }
        if !q.is_zero() {
            prop_assert!(q.divisible_by(&g));
        }
    }

    #[test]
    fn rational_addition_round_trips(a in arb_rat(), b in arb_rat()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn shift_is_invertible(p in arb_poly(4), c in arb_rat()) {
        prop_assert_eq!(p.shift(&c).shift(&(-c.clone())), p);
    }

    #[test]
    fn rewriting_is_confluent(
        g in arb_poly(3),
        word in vec(arb_gen(), 1..=8),
    ) {
        let alg = SmithAlgebra::new(g);
        let left = normal_form_with_strategy(&alg, &word, Reduction::LeftmostFirst);
        let right = normal_form_with_strategy(&alg, &word, Reduction::RightmostFirst);
        prop_assert_eq!(&left, &right);
        // and both agree with folding by the closed-form product
        let folded = word.iter().fold(NcElement::one(), |acc, &gen| {
            nc_mul(&alg, &acc, &NcElement::gen(gen))
        });
        prop_assert_eq!(left, folded);
    }

    #[test]
    fn product_is_associative(
        g in arb_poly(3),
        a in arb_element(),
        b in arb_element(),
        c in arb_element(),
    ) {
        let alg = SmithAlgebra::new(g);
        let ab_c = nc_mul(&alg, &nc_mul(&alg, &a, &b), &c);
        let a_bc = nc_mul(&alg, &a, &nc_mul(&alg, &b, &c));
        prop_assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn grading_adds_under_multiplication(
        g in arb_poly(3),
        m1 in 0u32..3, n1 in 0u32..3, k1 in 0u32..3,
        m2 in 0u32..3, n2 in 0u32..3, k2 in 0u32..3,
    ) {
        let alg = SmithAlgebra::new(g);
        let a = NcElement::monomial(NcMonomial::new(m1, n1, k1), rat(1, 1));
        let b = NcElement::monomial(NcMonomial::new(m2, n2, k2), rat(1, 1));
        let d = (k1 as i64 - m1 as i64) + (k2 as i64 - m2 as i64);
        let prod = nc_mul(&alg, &a, &b);
        if !prod.is_zero() {
            prop_assert_eq!(prod.homogeneous_degree(), Some(d));
        }
    }

    #[test]
    fn cocycle_laws_hold(
        which in 0usize..3,
        a in vec(-5i64..=5, 2),
        b in vec(-5i64..=5, 2),
        c in vec(-5i64..=5, 2),
    ) {
        let gram = match which {
            0 => vec![vec![2, -1], vec![-1, 2]],
            1 => vec![vec![2, 1], vec![1, 4]],
            _ => vec![vec![4, 0], vec![0, 2]],
        };
        let lat = validate_gram(gram).unwrap();
        let eps = make_cocycle(&lat);
        prop_assert!(eps.commutator_holds(&lat, &a, &b));
        prop_assert!(eps.cocycle_identity_holds(&a, &b, &c));
    }

    #[test]
    fn telescoping_holds_for_random_g(g in arb_poly(4), j in 0usize..12) {
        let alg = SmithAlgebra::new(g);
        let lhs = alg.h_sum(j);
        let rhs = (&alg.u().shift(&Rat::from_integer(1.into()))
            - &alg.u().shift(&rat(-(j as i64), 1)))
            .scale(&rat(1, 2));
        prop_assert_eq!(lhs, rhs);
    }
}
