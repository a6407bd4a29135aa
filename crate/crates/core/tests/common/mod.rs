#![allow(dead_code)]

use nalg::{Flavor, Monomial, Polynomial, Q, Var};
use num_bigint::BigInt;
use rand::Rng;

pub fn rational(rng: &mut impl Rng, bound: i64) -> Q {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound.max(1));
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn nonzero_rational(rng: &mut impl Rng, bound: i64) -> Q {
    loop {
        let r = rational(rng, bound);
        if r != Q::from_integer(0.into()) {
            return r;
        }
    }
}

/// A uniformly shaped random tree of the given degree over `x1..x_vars`.
pub fn monomial(rng: &mut impl Rng, degree: usize, vars: Var) -> Monomial {
    match degree {
        0 => Monomial::unit(),
        1 => Monomial::var(rng.gen_range(1..=vars)),
        _ => {
            let left = rng.gen_range(1..degree);
            Monomial::node(monomial(rng, left, vars), monomial(rng, degree - left, vars))
        }
    }
}

pub fn polynomial(rng: &mut impl Rng, flavor: Flavor, vars: Var, max_degree: usize, max_terms: usize) -> Polynomial {
    let terms = rng.gen_range(1..=max_terms);
    Polynomial::from_terms(
        flavor,
        (0..terms).map(|_| {
            let d = rng.gen_range(0..=max_degree);
            (rational(rng, 7), monomial(rng, d, vars))
        }),
    )
}
