//! Truncated power series in one variable, linear ODEs with constant scalar
//! coefficients, and the non-associative exponential.
//!
//! Series are written in divided powers: `y = Σ_k c_k ρ^k / k!` with
//! constants `c_k`. Since `d(c ρ^k)/dx = k c ρ^{k−1}` for a constant `c`,
//! differentiation shifts the coefficient sequence by one.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::invert;
use crate::monomial::Flavor;
use crate::polynomial::{factorial, Polynomial, Q};
use crate::taylor::taylor_expand;

/// `h_0 + h_1 + ⋯ + h_N` with `h_n` homogeneous of degree `n` in `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedElement {
    flavor: Flavor,
    components: Vec<Polynomial>,
}

impl TruncatedElement {
    pub fn zero(flavor: Flavor, order: usize) -> Self {
        TruncatedElement {
            flavor,
            components: vec![Polynomial::zero(flavor); order + 1],
        }
    }

    pub fn one(flavor: Flavor, order: usize) -> Self {
        let mut e = Self::zero(flavor, order);
        e.components[0] = Polynomial::one(flavor);
        e
    }

    /// Checks that component `n` is homogeneous of degree `n` in `x` alone.
    pub fn new(flavor: Flavor, components: Vec<Polynomial>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Invalid("a truncated element needs component 0".into()));
        }
        for (n, h) in components.iter().enumerate() {
            if h.flavor() != flavor {
                return Err(Error::FlavorMismatch(flavor, h.flavor()));
            }
            if h.max_var() > 1 {
                return Err(Error::NotOneVariable(h.max_var()));
            }
            if h.terms().any(|(m, _)| m.degree() != n) {
                return Err(Error::Invalid(format!("component {n} is not homogeneous of degree {n}")));
            }
        }
        Ok(TruncatedElement { flavor, components })
    }

    /// Splits a one-variable polynomial by degree, discarding degrees above `order`.
    pub fn from_polynomial(p: &Polynomial, order: usize) -> Result<Self> {
        if p.max_var() > 1 {
            return Err(Error::NotOneVariable(p.max_var()));
        }
        let components = (0..=order).map(|n| p.homogeneous_part(n)).collect();
        Ok(TruncatedElement {
            flavor: p.flavor(),
            components,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn order(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, n: usize) -> &Polynomial {
        &self.components[n]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.flavor);
        for h in &self.components {
            out.add_scaled(h, &Q::one());
        }
        out
    }

    /// Drops every component above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the truncation order");
        TruncatedElement {
            flavor: self.flavor,
            components: self.components[..=order].to_vec(),
        }
    }

    /// Pads with zero components up to `order`, keeping known terms.
    fn pad(&self, order: usize) -> Self {
        let mut out = self.clone();
        out.components.resize(order + 1, Polynomial::zero(self.flavor));
        out
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch(self.flavor, other.flavor));
        }
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncatedElement {
            flavor: self.flavor,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Q::one()))
    }

    /// Degree-convolution product, truncated at the common order.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut components = vec![Polynomial::zero(self.flavor); n + 1];
        for (p, a) in self.components.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (q, b) in other.components.iter().enumerate().take(n + 1 - p) {
                if !b.is_zero() {
                    components[p + q].add_scaled(&(a * b), &Q::one());
                }
            }
        }
        Ok(TruncatedElement {
            flavor: self.flavor,
            components,
        })
    }

    pub fn scale(&self, c: &Q) -> Self {
        TruncatedElement {
            flavor: self.flavor,
            components: self.components.iter().map(|h| h.scale(c)).collect(),
        }
    }

    /// Substitutes `x → αx`: component `n` is multiplied by `αⁿ`.
    pub fn scale_substitute(&self, alpha: &Q) -> Self {
        let mut power = Q::one();
        let mut components = Vec::with_capacity(self.components.len());
        for h in &self.components {
            components.push(h.scale(&power));
            power *= alpha;
        }
        TruncatedElement {
            flavor: self.flavor,
            components,
        }
    }

    /// `d/dx`, known through one degree less.
    pub fn derivative(&self) -> Self {
        let components = if self.order() == 0 {
            vec![Polynomial::zero(self.flavor)]
        } else {
            self.components[1..].iter().map(|h| h.derivative(1)).collect()
        };
        TruncatedElement {
            flavor: self.flavor,
            components,
        }
    }

    pub fn derivative_n(&self, times: usize) -> Self {
        (0..times).fold(self.clone(), |acc, _| acc.derivative())
    }

    pub fn is_constant(&self) -> bool {
        self.components.iter().all(Polynomial::is_constant)
    }

    /// `ρ^k` applied to every component, shifting degrees up by `k`.
    fn rho_pow_into(&self, k: usize, order: usize, out: &mut [Polynomial], scale: &Q) {
        for (n, h) in self.components.iter().enumerate() {
            if n + k > order {
                break;
            }
            if !h.is_zero() {
                out[n + k].add_scaled(&h.rho_pow(1, k), scale);
            }
        }
    }
}

impl fmt::Display for TruncatedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, h) in self.components.iter().enumerate() {
            writeln!(f, "{n}: {h}")?;
        }
        Ok(())
    }
}

/// `Σ_{k ≤ N} c_k ρ^k / k!` where each `c_k` is a constant known through
/// degree `N − k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaylorSeries {
    flavor: Flavor,
    order: usize,
    coefficients: Vec<TruncatedElement>,
}

impl TaylorSeries {
    /// Truncates `c_k` to order `N − k`; zero-pads missing coefficients.
    pub fn new(flavor: Flavor, order: usize, coefficients: Vec<TruncatedElement>) -> Result<Self> {
        if coefficients.len() > order + 1 {
            return Err(Error::OrderMismatch(coefficients.len() - 1, order));
        }
        let mut out = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let c = match coefficients.get(k) {
                Some(c) => {
                    if c.flavor != flavor {
                        return Err(Error::FlavorMismatch(flavor, c.flavor));
                    }
                    if c.order() < order - k {
                        return Err(Error::OrderMismatch(c.order(), order - k));
                    }
                    if !c.is_constant() {
                        return Err(Error::NonConstantCoefficient { exponents: vec![k] });
                    }
                    c.truncate(order - k)
                }
                None => TruncatedElement::zero(flavor, order - k),
            };
            out.push(c);
        }
        Ok(TaylorSeries {
            flavor,
            order,
            coefficients: out,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[TruncatedElement] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> &TruncatedElement {
        &self.coefficients[k]
    }

    /// `Σ c_k ρ^k / k!` as a truncated element of order `N`.
    pub fn materialize(&self) -> TruncatedElement {
        let mut components = vec![Polynomial::zero(self.flavor); self.order + 1];
        for (k, c) in self.coefficients.iter().enumerate() {
            let inv = Q::from_integer(factorial(k)).recip();
            c.rho_pow_into(k, self.order, &mut components, &inv);
        }
        TruncatedElement {
            flavor: self.flavor,
            components,
        }
    }
}

impl fmt::Display for TaylorSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coefficients.iter().enumerate() {
            let p = c.to_polynomial();
            if !p.is_zero() {
                writeln!(f, "c{k}: {p}")?;
            }
        }
        Ok(())
    }
}

/// Constants `c_k` with `f = Σ c_k ρ^k / k!`, from the Taylor expansion of
/// each homogeneous component (`c_k = k! ·` the factorial-free coefficient).
pub fn to_taylor_series(f: &TruncatedElement) -> TaylorSeries {
    let order = f.order();
    let mut coefficients: Vec<TruncatedElement> =
        (0..=order).map(|k| TruncatedElement::zero(f.flavor, order - k)).collect();
    for (n, h) in f.components.iter().enumerate() {
        for (a, s) in taylor_expand(h).coefficients() {
            let k = a[0];
            let scaled = s.scale(&Q::from_integer(factorial(k)));
            coefficients[k].components[n - k].add_scaled(&scaled, &Q::one());
        }
    }
    TaylorSeries {
        flavor: f.flavor,
        order,
        coefficients,
    }
}

/// `y⁽ⁿ⁾ + a_1 y⁽ⁿ⁻¹⁾ + ⋯ + a_n y = f` with constants `y⁽ⁱ⁾(0) = c_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearODE {
    coefficients: Vec<Q>,
    rhs: TruncatedElement,
    initial: Vec<TruncatedElement>,
}

impl LinearODE {
    pub fn new(coefficients: Vec<Q>, rhs: TruncatedElement, initial: Vec<TruncatedElement>) -> Result<Self> {
        let n = coefficients.len();
        if n == 0 {
            return Err(Error::Invalid("order must be at least 1".into()));
        }
        if initial.len() != n {
            return Err(Error::Invalid(format!(
                "order {n} needs {n} initial constants, got {}",
                initial.len()
            )));
        }
        for (i, c) in initial.iter().enumerate() {
            if c.flavor != rhs.flavor {
                return Err(Error::FlavorMismatch(rhs.flavor, c.flavor));
            }
            if !c.is_constant() {
                return Err(Error::NonConstantCoefficient { exponents: vec![i] });
            }
        }
        Ok(LinearODE {
            coefficients,
            rhs,
            initial,
        })
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Q] {
        &self.coefficients
    }

    pub fn rhs(&self) -> &TruncatedElement {
        &self.rhs
    }

    pub fn initial(&self) -> &[TruncatedElement] {
        &self.initial
    }

    /// `y⁽ⁿ⁾ + Σ a_i y⁽ⁿ⁻ⁱ⁾ − f`, known through degree `N − n`.
    pub fn residual(&self, y: &TruncatedElement) -> Result<TruncatedElement> {
        let n = self.order();
        if y.order() < n {
            return Err(Error::OrderMismatch(y.order(), n));
        }
        let top = y.order() - n;
        if self.rhs.order() < top {
            return Err(Error::OrderMismatch(self.rhs.order(), top));
        }
        let mut out = y.derivative_n(n).truncate(top);
        for (i, a) in self.coefficients.iter().enumerate() {
            let term = y.derivative_n(n - i - 1).truncate(top).scale(a);
            out = out.add(&term)?;
        }
        out.sub(&self.rhs.truncate(top))
    }
}

/// The unique series solution, by `c_{j+n} = f_j − Σ a_i c_{j+n−i}`.
pub fn solve_linear_ode(ode: &LinearODE, order: usize) -> Result<TaylorSeries> {
    let flavor = ode.rhs.flavor;
    let f = to_taylor_series(&ode.rhs.pad(order).truncate(order));
    let n = ode.order();
    let mut c: Vec<TruncatedElement> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let need = order - k;
        let ck = if k < n {
            let init = &ode.initial[k];
            if init.order() < need {
                init.pad(need)
            } else {
                init.truncate(need)
            }
        } else {
            let mut acc = f.coefficients[k - n].truncate(need);
            for (i, a) in ode.coefficients.iter().enumerate() {
                let prev = c[k - i - 1].truncate(need);
                acc = acc.sub(&prev.scale(a))?;
            }
            acc
        };
        c.push(ck);
    }
    TaylorSeries::new(flavor, order, c)
}

/// The operator series `exp(λρ) = Σ λ^k ρ^k / k!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorSeries {
    lambda: Q,
    order: usize,
}

impl OperatorSeries {
    pub fn lambda(&self) -> &Q {
        &self.lambda
    }

    /// Coefficient of `ρ^k`, i.e. `λ^k / k!`.
    pub fn coefficient(&self, k: usize) -> Q {
        pow(&self.lambda, k) / Q::from_integer(factorial(k))
    }

    /// `c · exp(λρ)`, whose divided-power coefficients are `λ^k c`.
    pub fn apply(&self, c: &TruncatedElement) -> Result<TaylorSeries> {
        let coefficients = (0..=self.order)
            .map(|k| {
                let need = self.order - k;
                let base = if c.order() < need { c.pad(need) } else { c.truncate(need) };
                base.scale(&pow(&self.lambda, k))
            })
            .collect();
        TaylorSeries::new(c.flavor, self.order, coefficients)
    }
}

pub fn exp_rho(lambda: Q, order: usize) -> OperatorSeries {
    OperatorSeries { lambda, order }
}

fn pow(base: &Q, e: usize) -> Q {
    (0..e).fold(Q::one(), |acc, _| acc * base)
}

/// Distinct rational characteristic roots with multiplicities, checked
/// against `tⁿ + a_1 tⁿ⁻¹ + ⋯ + a_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootData {
    roots: Vec<(Q, usize)>,
    coefficients: Vec<Q>,
}

impl RootData {
    pub fn new(roots: Vec<(Q, usize)>, coefficients: Vec<Q>) -> Result<Self> {
        for (i, (l, k)) in roots.iter().enumerate() {
            if *k == 0 {
                return Err(Error::RootMismatch(format!("root {l} has multiplicity 0")));
            }
            if roots[..i].iter().any(|(m, _)| m == l) {
                return Err(Error::RootMismatch(format!("root {l} listed twice")));
            }
        }
        let total: usize = roots.iter().map(|(_, k)| k).sum();
        if total != coefficients.len() {
            return Err(Error::RootMismatch(format!(
                "multiplicities sum to {total}, order is {}",
                coefficients.len()
            )));
        }
        // Highest degree first: 1, a_1, ..., a_n.
        let mut poly: Vec<Q> = std::iter::once(Q::one()).chain(coefficients.iter().cloned()).collect();
        for (l, k) in &roots {
            for _ in 0..*k {
                let mut quotient = Vec::with_capacity(poly.len() - 1);
                let mut acc = Q::zero();
                for c in &poly {
                    acc = acc * l + c;
                    quotient.push(acc.clone());
                }
                if !quotient.pop().unwrap().is_zero() {
                    return Err(Error::RootMismatch(format!(
                        "{l} is not a root of multiplicity {k}"
                    )));
                }
                poly = quotient;
            }
        }
        Ok(RootData { roots, coefficients })
    }

    /// Builds the coefficients `a_i` from `Π (t − λ_i)^{k_i}`.
    pub fn from_roots(roots: Vec<(Q, usize)>) -> Result<Self> {
        let mut poly = vec![Q::one()];
        for (l, k) in &roots {
            for _ in 0..*k {
                let mut next = poly.clone();
                next.push(Q::zero());
                for (i, c) in poly.iter().enumerate() {
                    next[i + 1] -= c * l;
                }
                poly = next;
            }
        }
        Self::new(roots, poly[1..].to_vec())
    }

    pub fn roots(&self) -> &[(Q, usize)] {
        &self.roots
    }

    pub fn coefficients(&self) -> &[Q] {
        &self.coefficients
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    /// Pairs `(i, j)` in the order used for `c_ij`.
    fn indices(&self) -> Vec<(usize, usize)> {
        self.roots
            .iter()
            .enumerate()
            .flat_map(|(i, (_, k))| (0..*k).map(move |j| (i, j)))
            .collect()
    }

    /// Divided-power weight of `c_ij` in `c_M`: `λ_i^{M−j} M!/(M−j)!`.
    fn weight(&self, i: usize, j: usize, m: usize) -> Q {
        if j > m {
            return Q::zero();
        }
        let falling = ((m - j + 1)..=m).fold(BigInt::one(), |acc, t| acc * BigInt::from(t));
        pow(&self.roots[i].0, m - j) * Q::from_integer(falling)
    }
}

/// `Σ_i (c_{i0} + c_{i1}ρ + ⋯ + c_{i,k_i−1}ρ^{k_i−1}) exp(λ_i ρ)`.
pub fn homogeneous_general_solution(
    roots: &RootData,
    constants: &[Vec<TruncatedElement>],
    order: usize,
) -> Result<TaylorSeries> {
    if constants.len() != roots.roots.len()
        || constants.iter().zip(&roots.roots).any(|(c, (_, k))| c.len() != *k)
    {
        return Err(Error::RootMismatch("constants do not match the multiplicities".into()));
    }
    let flavor = constants
        .iter()
        .flatten()
        .next()
        .map(|c| c.flavor)
        .ok_or_else(|| Error::Invalid("no constants given".into()))?;
    let mut coefficients = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let need = order - m;
        let mut acc = TruncatedElement::zero(flavor, need);
        for (i, j) in roots.indices() {
            let w = roots.weight(i, j, m);
            if w.is_zero() {
                continue;
            }
            let c = &constants[i][j];
            let base = if c.order() < need { c.pad(need) } else { c.truncate(need) };
            acc = acc.add(&base.scale(&w))?;
        }
        coefficients.push(acc);
    }
    TaylorSeries::new(flavor, order, coefficients)
}

/// Solves for `c_ij` so that the first `n` divided-power coefficients of
/// the homogeneous solution are the given initial constants.
pub fn fit_constants(roots: &RootData, initial: &[TruncatedElement]) -> Result<Vec<Vec<TruncatedElement>>> {
    let n = roots.order();
    if initial.len() != n {
        return Err(Error::Invalid(format!("expected {n} initial constants")));
    }
    let indices = roots.indices();
    let a: Vec<Vec<Q>> = (0..n)
        .map(|m| indices.iter().map(|&(i, j)| roots.weight(i, j, m)).collect())
        .collect();
    let inv = invert(&a).ok_or_else(|| Error::Inconsistent("singular confluent Vandermonde system".into()))?;
    let order = initial.iter().map(TruncatedElement::order).min().unwrap_or(0);
    let flavor = initial[0].flavor;
    let mut out: Vec<Vec<TruncatedElement>> = roots.roots.iter().map(|_| Vec::new()).collect();
    for (row, &(i, _)) in inv.iter().zip(&indices) {
        let mut acc = TruncatedElement::zero(flavor, order);
        for (w, c) in row.iter().zip(initial) {
            if !w.is_zero() {
                acc = acc.add(&c.truncate(order).scale(w))?;
            }
        }
        out[i].push(acc);
    }
    Ok(out)
}

/// E(x) with `E′ = E`, `E(0) = 1`, `E(x)E(x) = E(2x)` in the free magma algebra:
/// `e_n = (2ⁿ − 2)⁻¹ Σ_{p+q=n, p,q≥1} e_p e_q`.
pub fn nonassoc_exponential(order: usize) -> TruncatedElement {
    let flavor = Flavor::Magma;
    let mut e: Vec<Polynomial> = vec![Polynomial::one(flavor)];
    if order >= 1 {
        e.push(Polynomial::var(flavor, 1));
    }
    for n in 2..=order {
        let mut sum = Polynomial::zero(flavor);
        for p in 1..n {
            sum.add_scaled(&(&e[p] * &e[n - p]), &Q::one());
        }
        let denom = Q::from_integer((BigInt::one() << n) - 2);
        e.push(sum.scale(&denom.recip()));
    }
    TruncatedElement {
        flavor,
        components: e,
    }
}

/// The three defining residuals of E, each of which should vanish.
pub struct ExponentialCheck {
    pub derivative_residual: TruncatedElement,
    pub value_at_zero: Polynomial,
    pub doubling_residual: TruncatedElement,
}

impl ExponentialCheck {
    pub fn pass(&self) -> bool {
        self.derivative_residual.is_zero()
            && self.value_at_zero == Polynomial::one(Flavor::Magma)
            && self.doubling_residual.is_zero()
    }
}

pub fn check_exponential(e: &TruncatedElement) -> Result<ExponentialCheck> {
    let n = e.order();
    let derivative_residual = if n == 0 {
        TruncatedElement::zero(e.flavor, 0)
    } else {
        e.derivative().sub(&e.truncate(n - 1))?
    };
    let doubling_residual = e.multiply(e)?.sub(&e.scale_substitute(&Q::from_integer(2.into())))?;
    Ok(ExponentialCheck {
        derivative_residual,
        value_at_zero: e.component(0).clone(),
        doubling_residual,
    })
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
    fn te(p: &Polynomial, order: usize) -> TruncatedElement {
        TruncatedElement::from_polynomial(p, order).unwrap()
    }

    #[test]
    fn arithmetic() {
        let fl = Flavor::Magma;
        let one_x = &Polynomial::one(fl) + &Polynomial::var(fl, 1);
        let a = te(&one_x, 3);
        let sq = a.multiply(&a).unwrap();
        let expect = &(&Polynomial::one(fl) + &Polynomial::var(fl, 1).scale(&q(2)))
            + &Polynomial::monomial(fl, n(x(), x()));
        assert_eq!(sq.to_polynomial(), expect);
        let half_sq = te(&Polynomial::term(fl, qf(1, 2), n(x(), x())), 3);
        assert_eq!(
            half_sq.scale_substitute(&q(2)).to_polynomial(),
            Polynomial::term(fl, q(2), n(x(), x()))
        );
        let top = te(&Polynomial::monomial(fl, n(x(), x())), 2);
        assert!(top.multiply(&top).unwrap().is_zero());
        assert!(a.add(&top).is_err());
        assert!(TruncatedElement::new(fl, vec![Polynomial::var(fl, 1)]).is_err());
    }

    #[test]
    fn taylor_series_examples() {
        let fl = Flavor::Magma;
        let order = 6;
        let mut f = Polynomial::zero(fl);
        for k in 0..=order {
            let word = Polynomial::one(fl).rho_pow(1, k);
            f.add_scaled(&word, &Q::from_integer(factorial(k)).recip());
        }
        let ts = to_taylor_series(&te(&f, order));
        for k in 0..=order {
            assert_eq!(ts.coefficient(k).to_polynomial(), Polynomial::one(fl));
        }
        assert_eq!(ts.materialize().to_polynomial(), f);

        let x_xx = Polynomial::monomial(fl, n(x(), n(x(), x())));
        let ts = to_taylor_series(&te(&x_xx, 5));
        let c0 = &x_xx - &Polynomial::monomial(fl, n(n(x(), x()), x()));
        assert_eq!(ts.coefficient(0).to_polynomial(), c0);
        assert_eq!(ts.coefficient(3).to_polynomial(), Polynomial::constant(fl, q(6)));
        for k in [1, 2, 4, 5] {
            assert!(ts.coefficient(k).is_zero());
        }
        assert_eq!(ts.materialize().to_polynomial(), x_xx);
    }

    fn scalar(c: Q, order: usize) -> TruncatedElement {
        te(&Polynomial::constant(Flavor::Magma, c), order)
    }

    #[test]
    fn first_order_exponential() {
        let fl = Flavor::Magma;
        let ode = LinearODE::new(vec![q(-1)], TruncatedElement::zero(fl, 8), vec![scalar(q(1), 8)]).unwrap();
        let y = solve_linear_ode(&ode, 8).unwrap();
        assert!(y.coefficients().iter().all(|c| c.to_polynomial() == Polynomial::one(fl)));
        assert!(ode.residual(&y.materialize()).unwrap().is_zero());
        let via_exp = exp_rho(q(1), 8).apply(&scalar(q(1), 8)).unwrap();
        assert_eq!(via_exp, y);
    }

    #[test]
    fn cosine() {
        let fl = Flavor::Associative;
        let one = te(&Polynomial::one(fl), 8);
        let zero = TruncatedElement::zero(fl, 8);
        let ode = LinearODE::new(vec![q(0), q(1)], zero.clone(), vec![one, zero]).unwrap();
        let y = solve_linear_ode(&ode, 8).unwrap();
        let c: Vec<Q> = y.coefficients().iter().map(|c| c.to_polynomial().coefficient(&Monomial::Unit)).collect();
        assert_eq!(c, vec![q(1), q(0), q(-1), q(0), q(1), q(0), q(-1), q(0), q(1)]);
        assert!(ode.residual(&y.materialize()).unwrap().is_zero());
    }

    #[test]
    fn constants_pass_through() {
        let fl = Flavor::Magma;
        let c0 = &Polynomial::monomial(fl, n(x(), n(x(), x()))) - &Polynomial::monomial(fl, n(n(x(), x()), x()));
        let ode = LinearODE::new(vec![q(-1)], TruncatedElement::zero(fl, 8), vec![te(&c0, 8)]).unwrap();
        let y = solve_linear_ode(&ode, 8).unwrap();
        for k in 0..=5 {
            assert_eq!(y.coefficient(k).to_polynomial(), c0);
        }
        assert!(ode.residual(&y.materialize()).unwrap().is_zero());
        assert!(LinearODE::new(vec![q(-1)], TruncatedElement::zero(fl, 8), vec![te(&Polynomial::var(fl, 1), 8)]).is_err());
    }

    #[test]
    fn exp_derivation_law() {
        let fl = Flavor::Magma;
        let c0 = &Polynomial::monomial(fl, n(x(), n(x(), x()))) - &Polynomial::monomial(fl, n(n(x(), x()), x()));
        let lambda = qf(2, 3);
        let s = exp_rho(lambda.clone(), 8).apply(&te(&c0, 8)).unwrap().materialize();
        let lhs = s.derivative();
        let rhs = s.truncate(7).scale(&lambda);
        assert_eq!(lhs, rhs);
        let id = exp_rho(q(0), 4).apply(&te(&c0, 4)).unwrap();
        assert_eq!(id.coefficient(0).to_polynomial(), c0);
        assert!((1..=4).all(|k| id.coefficient(k).is_zero()));
    }

    #[test]
    fn root_data_validation() {
        assert!(RootData::new(vec![(q(1), 2)], vec![q(-2), q(1)]).is_ok());
        assert!(RootData::new(vec![(q(1), 2)], vec![q(-3), q(2)]).is_err());
        assert!(RootData::new(vec![(q(1), 1), (q(1), 1)], vec![q(-2), q(1)]).is_err());
        let rd = RootData::from_roots(vec![(q(1), 2), (q(0), 1)]).unwrap();
        assert_eq!(rd.coefficients(), &[q(-2), q(1), q(0)]);
    }

    #[test]
    fn homogeneous_paths_agree() {
        let fl = Flavor::Magma;
        let order = 10;
        let rd = RootData::from_roots(vec![(q(1), 2)]).unwrap();
        let one = scalar(q(1), order);
        let y = homogeneous_general_solution(&rd, &[vec![one.clone(), one.clone()]], order).unwrap();
        let ode = LinearODE::new(rd.coefficients().to_vec(), TruncatedElement::zero(fl, order), vec![one.clone(), scalar(q(2), order)]).unwrap();
        assert!(ode.residual(&y.materialize()).unwrap().is_zero());
        let init: Vec<TruncatedElement> = (0..2).map(|k| y.coefficient(k).clone()).collect();
        let fitted = fit_constants(&rd, &[init[0].pad(order), init[1].pad(order)]).unwrap();
        assert_eq!(fitted[0][0].to_polynomial(), Polynomial::one(fl));
        assert_eq!(fitted[0][1].to_polynomial(), Polynomial::one(fl));
        assert_eq!(solve_linear_ode(&ode, order).unwrap(), y);

        let rd0 = RootData::from_roots(vec![(q(0), 3)]).unwrap();
        let cs = vec![vec![scalar(q(1), 6), scalar(q(2), 6), scalar(q(3), 6)]];
        let y = homogeneous_general_solution(&rd0, &cs, 6).unwrap();
        assert!(y.coefficients()[3..].iter().all(TruncatedElement::is_zero));
    }

    #[test]
    fn exponential() {
        let fl = Flavor::Magma;
        let e = nonassoc_exponential(8);
        assert!(check_exponential(&e).unwrap().pass());
        assert_eq!(e.component(2), &Polynomial::term(fl, qf(1, 2), n(x(), x())));
        let e3 = (&Polynomial::monomial(fl, n(x(), n(x(), x()))) + &Polynomial::monomial(fl, n(n(x(), x()), x()))).scale(&qf(1, 12));
        assert_eq!(e.component(3), &e3);
        let xx = n(x(), x());
        let e4 = e.component(4);
        for w in [
            n(x(), n(x(), xx.clone())),
            n(x(), n(xx.clone(), x())),
            n(n(x(), xx.clone()), x()),
            n(n(xx.clone(), x()), x()),
        ] {
            assert_eq!(e4.coefficient(&w), qf(1, 168));
        }
        assert_eq!(e4.coefficient(&n(xx.clone(), xx)), qf(1, 56));
        assert_eq!(e4.len(), 5);
    }
}
