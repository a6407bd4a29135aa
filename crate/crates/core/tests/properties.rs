mod common;

use std::collections::BTreeMap;

use nalg::expr::{parse_polynomial, polynomial_from_json, polynomial_to_json};
use nalg::ode::{solve_linear_ode, LinearODE, TruncatedElement};
use nalg::taylor::{generalized_expand, generalized_reconstruct, taylor_expand, OperatorFamily};
use nalg::{Flavor, Polynomial};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn flavor() -> impl Strategy<Value = Flavor> {
    prop_oneof![Just(Flavor::Magma), Just(Flavor::Commutative), Just(Flavor::Associative)]
}

fn poly(flavor: Flavor, seed: u64, vars: u32, degree: usize) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    common::polynomial(&mut rng, flavor, vars, degree, 5)
}

/// Taylor coefficients keyed by exponent vectors without trailing zeros, so
/// expansions over different variable counts compare.
fn trimmed(p: &Polynomial) -> BTreeMap<Vec<usize>, Polynomial> {
    taylor_expand(p)
        .coefficients()
        .iter()
        .map(|(a, c)| {
            let mut a = a.clone();
            while a.last() == Some(&0) {
                a.pop();
            }
            (a, c.clone())
        })
        .collect()
}

proptest! {
    #[test]
    fn print_parse_round_trip(fl in flavor(), seed in any::<u64>(), vars in 1u32..4) {
        let p = poly(fl, seed, vars, 6);
        prop_assert_eq!(parse_polynomial(&p.to_string(), fl).unwrap(), p);
    }

    #[test]
    fn json_round_trip(fl in flavor(), seed in any::<u64>(), vars in 1u32..4) {
        let p = poly(fl, seed, vars, 6);
        prop_assert_eq!(polynomial_from_json(&polynomial_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn taylor_is_linear(fl in flavor(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (poly(fl, s1, 2, 5), poly(fl, s2, 2, 5));
        let mut expect = trimmed(&a);
        for (k, c) in trimmed(&b) {
            let slot = expect.entry(k).or_insert_with(|| Polynomial::zero(fl));
            *slot = &*slot + &c;
        }
        expect.retain(|_, c| !c.is_zero());
        prop_assert_eq!(trimmed(&(&a + &b)), expect);
    }

    #[test]
    fn jordan_round_trip(fl in flavor(), seed in any::<u64>()) {
        let p = poly(fl, seed, 2, 4);
        let family = OperatorFamily::jordan();
        let e = generalized_expand(&p, &family).unwrap();
        for c in e.values() {
            prop_assert!(c.is_constant());
        }
        prop_assert_eq!(generalized_reconstruct(fl, &e, &family).unwrap(), p);
    }

    #[test]
    fn ode_solution_is_linear(fl in flavor(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let order = 8;
        let coeffs = vec![nalg::polynomial::qf(1, 2), nalg::polynomial::q(-3)];
        let make = |seed| {
            let rhs = TruncatedElement::from_polynomial(&poly(fl, seed, 1, 5), order).unwrap();
            let init = vec![
                TruncatedElement::from_polynomial(&Polynomial::constant(fl, nalg::polynomial::q(seed as i64 % 7)), order).unwrap(),
                TruncatedElement::zero(fl, order),
            ];
            LinearODE::new(coeffs.clone(), rhs, init).unwrap()
        };
        let (a, b) = (make(s1), make(s2));
        let sum = LinearODE::new(
            coeffs.clone(),
            a.rhs().add(b.rhs()).unwrap(),
            a.initial().iter().zip(b.initial()).map(|(x, y)| x.add(y).unwrap()).collect(),
        ).unwrap();
        let ya = solve_linear_ode(&a, order).unwrap().materialize();
        let yb = solve_linear_ode(&b, order).unwrap().materialize();
        let ys = solve_linear_ode(&sum, order).unwrap().materialize();
        prop_assert_eq!(ys, ya.add(&yb).unwrap());
    }
}
