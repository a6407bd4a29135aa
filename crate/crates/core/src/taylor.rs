//! Taylor expansions with constant coefficients.
//!
//! Every element `r` in variables `x1 < ... < xm` is uniquely
//! `Σ r_a ρ_1^{a_1} ⋯ ρ_m^{a_m}` with constants `r_a` (ρ_j is right
//! multiplication by `x_j`, applied to `r_a` in that order). No factorials
//! appear in this presentation; the divided-power form used for series
//! lives in [`crate::ode`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::constants::constants_basis;
use crate::error::{Error, Result};
use crate::linalg::SpanBasis;
use crate::monomial::{Flavor, MultiDegree, Var};
use crate::operator::{MultiplicationOperator, OperatorAtom, OperatorSum};
use crate::polynomial::{factorial, Polynomial, Q};

/// Exponent vector `(a_1, ..., a_m)`.
pub type Exponents = Vec<usize>;

/// `r − ∂_k r ρ_k/1! + ∂_k² r ρ_k²/2! − ⋯`, which is annihilated by ∂_k.
pub fn constant_remainder(r: &Polynomial, k: Var) -> Polynomial {
    let mut out = r.clone();
    let mut deriv = r.derivative(k);
    let mut p = 1usize;
    while !deriv.is_zero() {
        let sign = if p % 2 == 1 { -Q::one() } else { Q::one() };
        let c = sign / Q::from_integer(factorial(p));
        out.add_scaled(&deriv.rho_pow(k, p), &c);
        deriv = deriv.derivative(k);
        p += 1;
    }
    out
}

/// Splits `r` as `Σ_a s_a ρ_k^a` with `∂_k s_a = 0`, via
/// `s_a = constant_remainder(∂_k^a r) / a!`.
fn expand_in(r: &Polynomial, k: Var) -> BTreeMap<usize, Polynomial> {
    let mut out = BTreeMap::new();
    let mut deriv = r.clone();
    let mut a = 0usize;
    while !deriv.is_zero() {
        let s = constant_remainder(&deriv, k).scale(&Q::from_integer(factorial(a)).recip());
        if !s.is_zero() {
            out.insert(a, s);
        }
        deriv = deriv.derivative(k);
        a += 1;
    }
    out
}

/// The coefficients `r_a` of a Taylor expansion, keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaylorExpansion {
    flavor: Flavor,
    num_vars: usize,
    coefficients: BTreeMap<Exponents, Polynomial>,
}

impl TaylorExpansion {
    /// Assembles an expansion; coefficients are checked by
    /// [`taylor_reconstruct`], not here.
    pub fn new(
        flavor: Flavor,
        num_vars: usize,
        coefficients: BTreeMap<Exponents, Polynomial>,
    ) -> Result<Self> {
        for (a, c) in &coefficients {
            if a.len() != num_vars {
                return Err(Error::Invalid(format!(
                    "exponent vector {a:?} does not have {num_vars} entries"
                )));
            }
            if c.flavor() != flavor {
                return Err(Error::FlavorMismatch(flavor, c.flavor()));
            }
        }
        let coefficients = coefficients
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(TaylorExpansion {
            flavor,
            num_vars,
            coefficients,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn coefficients(&self) -> &BTreeMap<Exponents, Polynomial> {
        &self.coefficients
    }

    pub fn get(&self, a: &[usize]) -> Option<&Polynomial> {
        self.coefficients.get(a)
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Multiplies the coefficient at `a` by `a_1!⋯a_m!`, giving the
    /// divided-power coefficients `Σ c_a ρ^a / a!`.
    pub fn to_divided_powers(&self) -> BTreeMap<Exponents, Polynomial> {
        self.coefficients
            .iter()
            .map(|(a, c)| {
                let f = a.iter().fold(BigInt::one(), |acc, &e| acc * factorial(e));
                (a.clone(), c.scale(&Q::from_integer(f)))
            })
            .collect()
    }
}

impl fmt::Display for TaylorExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, c) in &self.coefficients {
            let a: Vec<String> = a.iter().map(ToString::to_string).collect();
            writeln!(f, "({}): {}", a.join(","), c)?;
        }
        Ok(())
    }
}

/// Unique expansion of `r`, taken in the highest-indexed variable first.
pub fn taylor_expand(r: &Polynomial) -> TaylorExpansion {
    let m = (r.max_var() as usize).max(1);
    // Keys are built from the right: after handling x_m .. x_k the key holds
    // (a_k, ..., a_m).
    let mut layer: BTreeMap<Vec<usize>, Polynomial> = BTreeMap::new();
    if !r.is_zero() {
        layer.insert(Vec::new(), r.clone());
    }
    for k in (1..=m as Var).rev() {
        let mut next = BTreeMap::new();
        for (suffix, poly) in layer {
            for (a, s) in expand_in(&poly, k) {
                let mut key = Vec::with_capacity(suffix.len() + 1);
                key.push(a);
                key.extend_from_slice(&suffix);
                next.insert(key, s);
            }
        }
        layer = next;
    }
    TaylorExpansion {
        flavor: r.flavor(),
        num_vars: m,
        coefficients: layer,
    }
}

/// `Σ_a r_a ρ_1^{a_1}⋯ρ_m^{a_m}`. Fails if any `r_a` is not a constant.
pub fn taylor_reconstruct(e: &TaylorExpansion) -> Result<Polynomial> {
    let mut out = Polynomial::zero(e.flavor);
    for (a, c) in &e.coefficients {
        if !c.is_constant() {
            return Err(Error::NonConstantCoefficient {
                exponents: a.clone(),
            });
        }
        let mut term = c.clone();
        for (j, &power) in a.iter().enumerate() {
            term = term.rho_pow(j as Var + 1, power);
        }
        out.add_scaled(&term, &Q::one());
    }
    Ok(out)
}

type FamilyRule = dyn Fn(Flavor, Var, usize) -> OperatorSum + Send + Sync;

/// A choice of operators μ_{jk} (degree `k`, involving only `x_j`) with
/// nonzero value at `x_j = 1`, used in place of ρ_j^k.
#[derive(Clone)]
pub struct OperatorFamily {
    name: String,
    rule: Arc<FamilyRule>,
}

impl fmt::Debug for OperatorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OperatorFamily")
            .field("name", &self.name)
            .finish()
    }
}

impl OperatorFamily {
    /// μ_{jk} = ρ_j^k, the plain Taylor expansion.
    pub fn right_powers() -> Self {
        OperatorFamily {
            name: "right".into(),
            rule: Arc::new(|fl, j, k| OperatorSum::single(MultiplicationOperator::rho_pow(fl, j, k))),
        }
    }

    /// μ_{jk} = (λ_{x_j} + ρ_{x_j})^k, i.e. k-fold Jordan multiplication by x_j.
    pub fn jordan() -> Self {
        Self::linear_power(Q::one(), Q::one())
            .map(|mut f| {
                f.name = "jordan".into();
                f
            })
            .expect("1 + 1 != 0")
    }

    /// μ_{jk} = (α λ_{x_j} + β ρ_{x_j})^k. Valid iff α + β ≠ 0.
    pub fn linear_power(alpha: Q, beta: Q) -> Result<Self> {
        if (&alpha + &beta).is_zero() {
            return Err(Error::InvalidFamily { var: 1, degree: 1 });
        }
        let name = format!("linear({alpha},{beta})");
        Ok(OperatorFamily {
            name,
            rule: Arc::new(move |fl, j, k| {
                let x = Polynomial::var(fl, j);
                let base = OperatorSum::new(vec![
                    (
                        alpha.clone(),
                        MultiplicationOperator::new(vec![OperatorAtom::Left(x.clone())]),
                    ),
                    (
                        beta.clone(),
                        MultiplicationOperator::new(vec![OperatorAtom::Right(x)]),
                    ),
                ]);
                base.pow(k)
            }),
        })
    }

    /// An arbitrary rule; validated when used.
    pub fn custom(
        name: impl Into<String>,
        rule: impl Fn(Flavor, Var, usize) -> OperatorSum + Send + Sync + 'static,
    ) -> Self {
        OperatorFamily {
            name: name.into(),
            rule: Arc::new(rule),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// μ_{jk} together with its value at `x_j = 1`, after validation.
    pub fn operator(&self, flavor: Flavor, j: Var, k: usize) -> Result<(OperatorSum, Q)> {
        let op = (self.rule)(flavor, j, k);
        for (_, word) in op.terms() {
            let mut deg = 0;
            for atom in word.atoms() {
                let (OperatorAtom::Left(u) | OperatorAtom::Right(u)) = atom;
                for (m, _) in u.terms() {
                    if m.max_var() > j || m.letters().iter().any(|&v| v != j) {
                        return Err(Error::Invalid(format!(
                            "mu_{j},{k} mentions a variable other than x{j}"
                        )));
                    }
                }
                let parts = u.components();
                if parts.len() != 1 {
                    return Err(Error::Invalid(format!(
                        "mu_{j},{k} multiplies by a non-homogeneous element"
                    )));
                }
                deg += parts.keys().next().unwrap().total();
            }
            if deg != k {
                return Err(Error::Invalid(format!(
                    "mu_{j},{k} has a word of degree {deg}"
                )));
            }
        }
        let at_one = crate::operator::check_family_member(&op, j, k)?;
        Ok((op, at_one))
    }
}

/// Expansion `r = Σ r_a μ_{1a_1}⋯μ_{ma_m}` with constant `r_a`.
///
/// Solved exactly per multidegree against the spanning set
/// `{b · μ_{1a_1}⋯μ_{ma_m}}`, `b` running over a constants basis of the
/// complementary multidegree.
pub fn generalized_expand(
    r: &Polynomial,
    family: &OperatorFamily,
) -> Result<BTreeMap<Exponents, Polynomial>> {
    let flavor = r.flavor();
    let m = (r.max_var() as usize).max(1);
    let mut ops: BTreeMap<(Var, usize), OperatorSum> = BTreeMap::new();
    let mut result: BTreeMap<Exponents, Polynomial> = BTreeMap::new();

    for (d, part) in r.components() {
        let padded: Vec<usize> = (1..=m as Var).map(|k| d.get(k)).collect();
        let mut span: SpanBasis<crate::Monomial> = SpanBasis::new();
        // (exponents, constant basis element) per accepted spanning vector
        let mut labels: Vec<(Exponents, Polynomial)> = Vec::new();
        for a in MultiDegree::new(padded.clone()).below() {
            let a: Exponents = (1..=m as Var).map(|k| a.get(k)).collect();
            let e: Vec<usize> = padded.iter().zip(&a).map(|(x, y)| x - y).collect();
            let basis = constants_basis(&MultiDegree::new(e), flavor);
            for b in basis.elements() {
                let mut v = b.clone();
                for (idx, &power) in a.iter().enumerate() {
                    if power == 0 {
                        continue;
                    }
                    let j = idx as Var + 1;
                    let op = match ops.entry((j, power)) {
                        std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
                        std::collections::btree_map::Entry::Vacant(e) => e.insert(family.operator(flavor, j, power)?.0),
                    };
                    v = op.apply(&v)?;
                }
                if !span.insert(v.term_map()) {
                    return Err(Error::Inconsistent(format!(
                        "spanning set for multidegree {d} is dependent"
                    )));
                }
                labels.push((a.clone(), b.clone()));
            }
        }
        let coords = span.express(part.term_map()).ok_or_else(|| {
            Error::Inconsistent(format!("component of multidegree {d} is not spanned"))
        })?;
        for ((a, b), c) in labels.into_iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            result
                .entry(a)
                .or_insert_with(|| Polynomial::zero(flavor))
                .add_scaled(&b, &c);
        }
    }
    result.retain(|_, p| !p.is_zero());
    Ok(result)
}

/// Applies `Σ r_a μ_{1a_1}⋯μ_{ma_m}`, the inverse of [`generalized_expand`].
pub fn generalized_reconstruct(
    flavor: Flavor,
    coefficients: &BTreeMap<Exponents, Polynomial>,
    family: &OperatorFamily,
) -> Result<Polynomial> {
    let mut out = Polynomial::zero(flavor);
    for (a, c) in coefficients {
        let mut v = c.clone();
        for (idx, &power) in a.iter().enumerate() {
            if power > 0 {
                let (op, _) = family.operator(flavor, idx as Var + 1, power)?;
                v = op.apply(&v)?;
            }
        }
        out.add_scaled(&v, &Q::one());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::polynomial::{q, qf};

    fn x() -> Monomial {
        Monomial::var(1)
    }
    fn n(a: Monomial, b: Monomial) -> Monomial {
        Monomial::node(a, b)
    }
    fn mono(fl: Flavor, m: Monomial) -> Polynomial {
        Polynomial::monomial(fl, m)
    }

    #[test]
    fn constant_remainders() {
        let fl = Flavor::Magma;
        assert!(constant_remainder(&mono(fl, n(x(), x())), 1).is_zero());
        let x_xx = mono(fl, n(x(), n(x(), x())));
        let xx_x = mono(fl, n(n(x(), x()), x()));
        assert_eq!(constant_remainder(&x_xx, 1), &x_xx - &xx_x);
        let c = &x_xx - &xx_x;
        assert_eq!(constant_remainder(&c, 1), c);
    }

    #[test]
    fn expansion_examples() {
        let fl = Flavor::Magma;
        let x_xx = mono(fl, n(x(), n(x(), x())));
        let xx_x = mono(fl, n(n(x(), x()), x()));
        let e = taylor_expand(&x_xx);
        assert_eq!(e.coefficients().len(), 2);
        assert_eq!(e.get(&[3]), Some(&Polynomial::one(fl)));
        assert_eq!(e.get(&[0]), Some(&(&x_xx - &xx_x)));

        let x1 = Monomial::var(1);
        let x2 = Monomial::var(2);
        let e = taylor_expand(&mono(fl, n(x2.clone(), x1.clone())));
        assert_eq!(e.get(&[1, 1]), Some(&Polynomial::one(fl)));
        assert_eq!(
            e.get(&[0, 0]),
            Some(&(&mono(fl, n(x2.clone(), x1.clone())) - &mono(fl, n(x1, x2))))
        );
        assert_eq!(e.coefficients().len(), 2);

        let c = &x_xx - &xx_x;
        let e = taylor_expand(&c);
        assert_eq!(e.coefficients().len(), 1);
        assert_eq!(e.get(&[0]), Some(&c));
        assert!(taylor_expand(&Polynomial::zero(fl)).is_empty());
    }

    #[test]
    fn reconstruction() {
        let fl = Flavor::Magma;
        let mut coeffs = BTreeMap::new();
        coeffs.insert(vec![1, 1], Polynomial::one(fl));
        let e = TaylorExpansion::new(fl, 2, coeffs).unwrap();
        assert_eq!(
            taylor_reconstruct(&e).unwrap(),
            mono(fl, n(Monomial::var(1), Monomial::var(2)))
        );
        let r = &mono(fl, n(x(), n(n(x(), x()), x()))) + &Polynomial::var(fl, 1).scale(&q(2));
        assert_eq!(taylor_reconstruct(&taylor_expand(&r)).unwrap(), r);

        let mut bad = BTreeMap::new();
        bad.insert(vec![1], Polynomial::var(fl, 1));
        let e = TaylorExpansion::new(fl, 1, bad).unwrap();
        assert_eq!(
            taylor_reconstruct(&e),
            Err(Error::NonConstantCoefficient { exponents: vec![1] })
        );
    }

    #[test]
    fn default_family_matches_taylor() {
        let fl = Flavor::Magma;
        let r = &mono(fl, n(x(), n(x(), x()))) + &mono(fl, n(Monomial::var(2), x()));
        let g = generalized_expand(&r, &OperatorFamily::right_powers()).unwrap();
        assert_eq!(&g, taylor_expand(&r).coefficients());
    }

    #[test]
    fn jordan_family() {
        let fl = Flavor::Associative;
        let jordan = OperatorFamily::jordan();
        let xp = Polynomial::var(fl, 1);
        let g = generalized_expand(&xp, &jordan).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[&vec![1]], Polynomial::constant(fl, qf(1, 2)));
        let g = generalized_expand(&(&xp * &xp), &jordan).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[&vec![2]], Polynomial::constant(fl, qf(1, 4)));
        let x2 = Polynomial::var(fl, 2);
        let r = &(&(&xp * &x2) * &xp) + &x2.scale(&q(3));
        let g = generalized_expand(&r, &jordan).unwrap();
        assert!(g.values().all(Polynomial::is_constant));
        assert_eq!(generalized_reconstruct(fl, &g, &jordan).unwrap(), r);
    }

    #[test]
    fn invalid_families() {
        assert!(OperatorFamily::linear_power(q(1), q(-1)).is_err());
        let fam = OperatorFamily::custom("lambda-minus-rho", |fl, j, k| {
            let x = Polynomial::var(fl, j);
            OperatorSum::new(vec![
                (q(1), MultiplicationOperator::new(vec![OperatorAtom::Left(x.clone())])),
                (q(-1), MultiplicationOperator::new(vec![OperatorAtom::Right(x)])),
            ])
            .pow(k)
        });
        let r = Polynomial::var(Flavor::Magma, 1);
        assert_eq!(
            generalized_expand(&r, &fam),
            Err(Error::InvalidFamily { var: 1, degree: 1 })
        );
        let wrong_degree = OperatorFamily::custom("rho-once", |fl, j, _| {
            OperatorSum::single(MultiplicationOperator::rho_pow(fl, j, 1))
        });
        let r2 = &r * &r;
        assert!(generalized_expand(&r2, &wrong_degree).is_err());
    }

    #[test]
    fn derivative_identity_for_jordan() {
        // ∂^k(r0 μ_{1k}) / ∂x1^k = k! r0 μ_{1k}(1) for a constant r0
        let fl = Flavor::Associative;
        let x1 = Polynomial::var(fl, 1);
        let x2 = Polynomial::var(fl, 2);
        let r0 = &(&x1 * &x2) - &(&x2 * &x1);
        let r0 = &r0 + &Polynomial::constant(fl, q(5));
        for k in 1..=4 {
            let (op, at_one) = OperatorFamily::jordan().operator(fl, 1, k).unwrap();
            let lhs = op.apply(&r0).unwrap().derivative_n(1, k);
            let rhs = r0.scale(&(Q::from_integer(factorial(k)) * at_one));
            assert_eq!(lhs, rhs);
        }
    }
}
