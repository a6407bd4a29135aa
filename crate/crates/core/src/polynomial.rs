//! Polynomials with exact rational coefficients over canonical monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{write_monomial, Flavor, Monomial, MultiDegree, Var};

/// Exact rational scalars.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// A finite linear combination of canonical monomials of one flavor.
///
/// Terms are kept in ≺ order and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    flavor: Flavor,
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero(flavor: Flavor) -> Self {
        Polynomial {
            flavor,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(flavor: Flavor) -> Self {
        Self::constant(flavor, Q::one())
    }

    pub fn constant(flavor: Flavor, c: Q) -> Self {
        Self::term(flavor, c, Monomial::Unit)
    }

    pub fn var(flavor: Flavor, k: Var) -> Self {
        Self::monomial(flavor, Monomial::var(k))
    }

    /// The monomial with coefficient 1; `m` is canonicalized first.
    pub fn monomial(flavor: Flavor, m: Monomial) -> Self {
        Self::term(flavor, Q::one(), m)
    }

    pub fn term(flavor: Flavor, c: Q, m: Monomial) -> Self {
        let mut p = Self::zero(flavor);
        p.add_term(flavor.canonicalize(&m), c);
        p
    }

    /// Builds from `(coefficient, monomial)` pairs, canonicalizing and
    /// collecting like terms.
    pub fn from_terms(flavor: Flavor, terms: impl IntoIterator<Item = (Q, Monomial)>) -> Self {
        let mut p = Self::zero(flavor);
        for (c, m) in terms {
            p.add_term(flavor.canonicalize(&m), c);
        }
        p
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending ≺ order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn term_map(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Adds `c·m` in place; `m` must already be canonical.
    pub(crate) fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: &Q) {
        self.expect_flavor(other);
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.flavor);
        }
        Polynomial {
            flavor: self.flavor,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn expect_flavor(&self, other: &Polynomial) {
        assert!(
            self.flavor == other.flavor,
            "{}",
            Error::FlavorMismatch(self.flavor, other.flavor)
        );
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch(self.flavor, other.flavor));
        }
        let mut out = self.clone();
        out.add_scaled(other, &Q::one());
        Ok(out)
    }

    /// Bilinear extension of the canonical product of monomials.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch(self.flavor, other.flavor));
        }
        let mut out = Self::zero(self.flavor);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(self.flavor.product(u, v), a * b);
            }
        }
        Ok(out)
    }

    /// `self · m` for a canonical monomial `m`.
    pub fn mul_monomial_right(&self, m: &Monomial) -> Polynomial {
        let mut out = Self::zero(self.flavor);
        for (u, a) in &self.terms {
            out.add_term(self.flavor.product(u, m), a.clone());
        }
        out
    }

    pub fn mul_monomial_left(&self, m: &Monomial) -> Polynomial {
        let mut out = Self::zero(self.flavor);
        for (u, a) in &self.terms {
            out.add_term(self.flavor.product(m, u), a.clone());
        }
        out
    }

    /// Right multiplication by `x_k`, written ρ_k.
    pub fn rho(&self, k: Var) -> Polynomial {
        self.mul_monomial_right(&Monomial::var(k))
    }

    /// `ρ_k^power`.
    pub fn rho_pow(&self, k: Var, power: usize) -> Polynomial {
        (0..power).fold(self.clone(), |acc, _| acc.rho(k))
    }

    /// Formal partial derivative ∂/∂x_k.
    pub fn derivative(&self, k: Var) -> Polynomial {
        let mut out = Self::zero(self.flavor);
        for (m, a) in &self.terms {
            for (dm, c) in monomial_derivative(m, k, self.flavor) {
                out.add_term(dm, c * a);
            }
        }
        out
    }

    pub fn derivative_n(&self, k: Var, times: usize) -> Polynomial {
        (0..times).fold(self.clone(), |acc, _| acc.derivative(k))
    }

    /// True when every ∂_k annihilates the polynomial.
    pub fn is_constant(&self) -> bool {
        (1..=self.max_var()).all(|k| self.derivative(k).is_zero())
    }

    /// The ≺-maximal monomial with its coefficient.
    pub fn leading_term(&self) -> Result<(Monomial, Q)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn max_var(&self) -> Var {
        self.terms.keys().map(Monomial::max_var).max().unwrap_or(0)
    }

    /// Highest total degree among the terms (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Splits into multihomogeneous components.
    pub fn components(&self) -> BTreeMap<MultiDegree, Polynomial> {
        let mut out: BTreeMap<MultiDegree, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.multidegree())
                .or_insert_with(|| Self::zero(self.flavor))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Terms of total degree exactly `n`.
    pub fn homogeneous_part(&self, n: usize) -> Polynomial {
        Polynomial {
            flavor: self.flavor,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms of total degree at most `n`.
    pub fn truncate(&self, n: usize) -> Polynomial {
        Polynomial {
            flavor: self.flavor,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a variable relabeling and re-canonicalizes.
    pub fn permute_vars(&self, f: &impl Fn(Var) -> Var) -> Polynomial {
        Self::from_terms(
            self.flavor,
            self.terms.iter().map(|(m, c)| (c.clone(), m.map_vars(f))),
        )
    }

    /// Substitutes `x_k → 1` in every variable, summing the coefficients.
    pub fn value_at_one(&self) -> Q {
        self.terms.values().fold(Q::zero(), |acc, c| acc + c)
    }
}

/// ∂_k of a single canonical monomial, as (monomial, multiplicity) pairs.
fn monomial_derivative(m: &Monomial, k: Var, flavor: Flavor) -> Vec<(Monomial, Q)> {
    let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
    for (d, c) in leaf_removals(m, k, flavor) {
        *acc.entry(d).or_insert(0) += c;
    }
    acc.into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(d, c)| (d, q(c)))
        .collect()
}

/// Leibniz rule on the tree: every occurrence of `x_k` replaced by 1.
fn leaf_removals(m: &Monomial, k: Var, flavor: Flavor) -> Vec<(Monomial, i64)> {
    match m {
        Monomial::Unit => Vec::new(),
        Monomial::Leaf(l) => {
            if *l == k {
                vec![(Monomial::Unit, 1)]
            } else {
                Vec::new()
            }
        }
        Monomial::Node(_) => {
            let (a, b) = m.children().unwrap();
            let mut out = Vec::new();
            if a.contains(k) {
                for (da, c) in leaf_removals(a, k, flavor) {
                    out.push((flavor.product(&da, b), c));
                }
            }
            if b.contains(k) {
                for (db, c) in leaf_removals(b, k, flavor) {
                    out.push((flavor.product(a, &db), c));
                }
            }
            out
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    /// # Panics
    /// On flavor mismatch; use [`Polynomial::checked_add`] to recover instead.
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &Q::one());
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Q::one());
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Q::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    /// # Panics
    /// On flavor mismatch; use [`Polynomial::checked_mul`] to recover instead.
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Writes a coefficient-monomial term; `first` controls the leading sign.
fn write_term(
    f: &mut fmt::Formatter<'_>,
    m: &Monomial,
    c: &Q,
    first: bool,
    single_var: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    if m.is_unit() {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    write_monomial(m, single_var, f)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let single_var = self.max_var() <= 1;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            write_term(f, m, c, i == 0, single_var)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.flavor, self)
    }
}
