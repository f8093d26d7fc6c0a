mod common;

use common::{p, random_homogeneous, random_jet_poly, rng};
use jetlct_core::fporacle::count_points_with;
use jetlct_core::groebner::{groebner_basis, krull_dimension, krull_dimension_with};
use jetlct_core::jets::{jet_generators, jet_ideal, taylor_jet_generators, GeneratorSet};
use jetlct_core::polyring::{int, parse_poly};
use jetlct_core::{Budget, Ideal, JetVariable, MonomialOrder, Polynomial};
use proptest::prelude::*;
use rand::Rng;

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

/// `D^p(F)/p!` once each `x_i^(j)` is rescaled to `j!·x_i^(j)`.
fn rescaled_derivation(d: &Polynomial, p: usize) -> Polynomial {
    let n = d.n();
    d.substitute(n, |v| Some(Polynomial::var(n, v).scale(&int(factorial(v.level())))))
        .scale(&(int(1) / int(factorial(p))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = rng(seed);
        let a = random_jet_poly(&mut g, n, 2, 4, 3);
        let b = random_jet_poly(&mut g, n, 2, 4, 3);
        let c = random_jet_poly(&mut g, n, 2, 4, 3);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(n), a.clone());
    }

    #[test]
    fn parser_round_trip(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = rng(seed);
        let a = random_jet_poly(&mut g, n, 3, 5, 4);
        prop_assert_eq!(parse_poly(&a.to_string(), n).unwrap(), a);
    }

    #[test]
    fn taylor_and_derivation_generators_agree(seed in any::<u64>(), n in 1usize..=3, d in 1u32..=3) {
        let mut g = rng(seed);
        let f = random_homogeneous(&mut g, n, d, 3);
        let taylor = jet_generators(&f, 4, GeneratorSet::Taylor).unwrap();
        let deriv = jet_generators(&f, 4, GeneratorSet::Derivation).unwrap();
        for (p, (t, dp)) in taylor.iter().zip(&deriv).enumerate() {
            prop_assert_eq!(&rescaled_derivation(dp, p), t);
        }
    }
}

#[test]
fn both_generator_sets_give_the_same_dimension() {
    for (f, n, m) in [("x1*x2", 2, 2), ("x1^2 + x2^3", 2, 3), ("x1^2 - x2*x3", 3, 2), ("x1*x2 - 1", 2, 2)] {
        let f = p(f, n);
        let b = Budget::default();
        assert_eq!(
            krull_dimension(&jet_ideal(&f, m).unwrap(), &b).unwrap(),
            krull_dimension(&taylor_jet_generators(&f, m).unwrap(), &b).unwrap(),
        );
    }
}

fn small_ideals() -> Vec<Ideal> {
    let mut ideals = Vec::new();
    for (f, n, m) in [
        ("x1", 2, 1),
        ("x1^2", 1, 2),
        ("x1*x2", 2, 1),
        ("x1*x2", 2, 2),
        ("x1^2 + x2^3", 2, 1),
        ("x1^2 + x2^3", 2, 2),
        ("x1^3 + x2^3", 2, 2),
        ("x1*x2 - 1", 2, 2),
        ("x1^2 - x2*x3", 3, 1),
        ("x1*x2*x3", 3, 1),
        ("x1^2 + x2^2 + x3^2 - 1", 3, 1),
    ] {
        ideals.push(taylor_jet_generators(&p(f, n), m).unwrap());
    }
    let mut g = rng(21);
    while ideals.len() < 24 {
        let n = g.gen_range(2..=3);
        let gens = (0..g.gen_range(1..=3)).map(|_| random_jet_poly(&mut g, n, 0, 3, 2)).collect();
        ideals.push(Ideal::in_jet_ring(n, 0, gens).unwrap());
    }
    ideals
}

#[test]
fn dimension_does_not_depend_on_the_order() {
    let b = Budget::default();
    for ideal in small_ideals() {
        let grevlex = krull_dimension_with(&ideal, &MonomialOrder::GREVLEX, &b).unwrap();
        let lex = krull_dimension_with(&ideal, &MonomialOrder::LEX, &b).unwrap();
        assert_eq!(grevlex, lex, "{:?}", ideal.generators());
    }
}

#[test]
fn bases_are_reduced_and_contain_the_generators() {
    let b = Budget::default();
    for ideal in small_ideals() {
        for order in [MonomialOrder::GREVLEX, MonomialOrder::LEX] {
            let gb = groebner_basis(&ideal, &order, &b).unwrap();
            assert!(gb.is_reduced());
            assert!(gb.satisfies_buchberger_criterion().unwrap());
            for g in ideal.generators() {
                assert!(gb.contains(g).unwrap());
            }
        }
    }
}

#[test]
fn counts_do_not_depend_on_partitions() {
    for (f, n, m) in [("x1*x2", 2, 1), ("x1^2 - x2^3", 2, 2), ("x1^2 - x2*x3", 3, 1)] {
        let ideal = taylor_jet_generators(&p(f, n), m).unwrap();
        for prime in [5, 7] {
            let counts: Vec<u64> = [1, 2, 3, 8]
                .iter()
                .map(|&k| count_points_with(&ideal, prime, 100_000_000, k).unwrap().count)
                .collect();
            assert!(counts.windows(2).all(|w| w[0] == w[1]), "{f}: {counts:?}");
        }
    }
}

#[test]
fn jet_variable_numbering() {
    let v = JetVariable::new(2, 3);
    assert_eq!((v.base(), v.level()), (2, 3));
    assert_eq!(v.raised(), JetVariable::new(2, 4));
    assert_eq!(p("x2_3", 2), Polynomial::var(2, v));
}
