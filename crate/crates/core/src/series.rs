//! Integer series tables: Catalan numbers, the Hilbert series of the
//! one-variable constants, the generating function of its free generators,
//! and Hilbert series of the free algebras.
//!
//! Compositions `c(g(t))` go through the quadratic relation `F = g + F²`
//! of the Catalan generating function, never through square roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::monomial::MultiDegree;

/// Which table to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesName {
    /// c_n, with c_0 = 1.
    Catalan,
    /// γ_n = dim of the degree-n constants of the one-variable magma algebra.
    Gamma,
    /// g_n = number of degree-n free generators of those constants.
    Generators,
    /// Total-degree Hilbert series of the free magma algebra in `vars` variables.
    MagmaHilb { vars: usize },
    /// Total-degree Hilbert series of the free commutative algebra (no unit term).
    CommHilb { vars: usize },
    /// Total-degree Hilbert series of the constants of the free associative algebra.
    AssocConstHilb { vars: usize },
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesName::Catalan => f.write_str("catalan"),
            SeriesName::Gamma => f.write_str("gamma"),
            SeriesName::Generators => f.write_str("generators"),
            SeriesName::MagmaHilb { vars } => write!(f, "magmaHilb(m={vars})"),
            SeriesName::CommHilb { vars } => write!(f, "commHilb(m={vars})"),
            SeriesName::AssocConstHilb { vars } => write!(f, "assocConstHilb(m={vars})"),
        }
    }
}

/// Coefficients `0..=N` of a named series, recomputed two ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    pub name: SeriesName,
    pub coefficients: Vec<BigInt>,
    /// Whether the second route agreed with the first.
    pub consistent: bool,
}

/// Builds the table for `name` through degree `n`.
pub fn series(name: SeriesName, n: usize) -> SeriesTable {
    let (a, b) = match name {
        SeriesName::Catalan => (catalan(n), catalan_binomial(n)),
        SeriesName::Gamma => {
            let g = generators(n);
            (gamma(n), compose_catalan(&g))
        }
        SeriesName::Generators => (generators(n), generators_from_catalan_product(n)),
        SeriesName::MagmaHilb { vars } => {
            let c = catalan(n);
            let direct = (0..=n)
                .map(|k| &c[k] * BigInt::from(vars).pow(k as u32))
                .collect();
            let mut g = vec![BigInt::zero(); n + 1];
            if n >= 1 {
                g[1] = BigInt::from(vars);
            }
            (direct, compose_catalan(&g))
        }
        SeriesName::CommHilb { vars } => (comm_hilb(vars, n), comm_hilb_nested_root(vars, n)),
        SeriesName::AssocConstHilb { vars } => {
            (assoc_const_hilb(vars, n), assoc_const_hilb_by_multidegree(vars, n))
        }
    };
    SeriesTable {
        name,
        consistent: a == b,
        coefficients: a,
    }
}

/// c_0..c_n by `c_n = Σ_{p=1}^{n-1} c_p c_{n−p}`.
pub fn catalan(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for k in 1..=n {
        if k == 1 {
            c.push(BigInt::one());
            continue;
        }
        let s = (1..k).fold(BigInt::zero(), |acc, p| acc + &c[p] * &c[k - p]);
        c.push(s);
    }
    c
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// c_n = binom(2n−2, n−1)/n, with c_0 = 1.
pub fn catalan_binomial(n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|k| {
            if k == 0 {
                BigInt::one()
            } else {
                binomial(2 * k - 2, k - 1) / BigInt::from(k)
            }
        })
        .collect()
}

/// γ_n = c_n − c_{n−1} (with c_{−1} = 0).
pub fn gamma(n: usize) -> Vec<BigInt> {
    let c = catalan(n);
    (0..=n)
        .map(|k| if k == 0 { c[0].clone() } else { &c[k] - &c[k - 1] })
        .collect()
}

/// g_n = [n = 3] + 3(c_{n−1} − c_{n−2}) for n ≥ 4.
pub fn generators(n: usize) -> Vec<BigInt> {
    let c = catalan(n);
    (0..=n)
        .map(|k| match k {
            0..=2 => BigInt::zero(),
            3 => BigInt::one(),
            _ => BigInt::from(3) * (&c[k - 1] - &c[k - 2]),
        })
        .collect()
}

/// The same coefficients from `−3t² + t³ + 3t(1 − t)(c(t) − 1)`.
fn generators_from_catalan_product(n: usize) -> Vec<BigInt> {
    let c = catalan(n);
    let mut out = vec![BigInt::zero(); n + 1];
    // 3t(1 − t) Σ_{k≥1} c_k t^k
    for k in 1..=n {
        if k < n {
            out[k + 1] += BigInt::from(3) * &c[k];
        }
        if k + 2 <= n {
            out[k + 2] -= BigInt::from(3) * &c[k];
        }
    }
    if n >= 2 {
        out[2] -= BigInt::from(3);
    }
    if n >= 3 {
        out[3] += BigInt::one();
    }
    out
}

/// Coefficients of `c(g(t)) = 1 + F` where `F = g + F²`; requires `g_0 = 0`.
pub fn compose_catalan(g: &[BigInt]) -> Vec<BigInt> {
    assert!(g.first().is_none_or(Zero::is_zero), "g must have no constant term");
    let n = g.len().saturating_sub(1);
    let mut f = vec![BigInt::zero(); n + 1];
    for k in 1..=n {
        let sq = (1..k).fold(BigInt::zero(), |acc, p| acc + &f[p] * &f[k - p]);
        f[k] = &g[k] + sq;
    }
    let mut out = f;
    if let Some(first) = out.first_mut() {
        *first = BigInt::one();
    }
    out
}

/// `H = m t + ½ H² + ½ H(t²)` without the unit term.
pub fn comm_hilb(m: usize, n: usize) -> Vec<BigInt> {
    let mut h = vec![BigInt::zero(); n + 1];
    for k in 1..=n {
        let mut twice = (1..k).fold(BigInt::zero(), |acc, p| acc + &h[p] * &h[k - p]);
        if k % 2 == 0 {
            twice += &h[k / 2];
        }
        if k == 1 {
            twice += BigInt::from(2 * m);
        }
        let (q, r) = twice.div_rem(&BigInt::from(2));
        debug_assert!(r.is_zero());
        h[k] = q;
    }
    h
}

/// `H = 1 − √(1 − H(t²) − 2mt)` with the square root taken as an exact
/// rational power series.
fn comm_hilb_nested_root(m: usize, n: usize) -> Vec<BigInt> {
    let mut h: Vec<BigRational> = vec![BigRational::zero(); n + 1];
    let mut s: Vec<BigRational> = vec![BigRational::one(); 1];
    for k in 1..=n {
        // a_k: coefficient of t^k in 1 − H(t²) − 2mt
        let mut a = BigRational::zero();
        if k % 2 == 0 {
            a -= &h[k / 2];
        }
        if k == 1 {
            a -= BigRational::from_integer(BigInt::from(2 * m));
        }
        let cross = (1..k).fold(BigRational::zero(), |acc, i| acc + &s[i] * &s[k - i]);
        let sk = (a - cross) / BigRational::from_integer(BigInt::from(2));
        h[k] = -sk.clone();
        s.push(sk);
    }
    h.into_iter()
        .map(|v| {
            assert!(v.is_integer(), "Hilbert coefficients are integers");
            v.to_integer()
        })
        .collect()
}

/// Coefficients of `(1 − t)^m / (1 − m t)`.
pub fn assoc_const_hilb(m: usize, n: usize) -> Vec<BigInt> {
    let geom: Vec<BigInt> = (0..=n).map(|k| BigInt::from(m).pow(k as u32)).collect();
    (0..=n)
        .map(|k| {
            (0..=k.min(m)).fold(BigInt::zero(), |acc, i| {
                let term = binomial(m, i) * &geom[k - i];
                if i % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

fn assoc_const_hilb_by_multidegree(m: usize, n: usize) -> Vec<BigInt> {
    (0..=n)
        .map(|k| {
            MultiDegree::all_of_total(m, k)
                .iter()
                .fold(BigInt::zero(), |acc, d| acc + assoc_constants_dim(d))
        })
        .collect()
}

/// Multinomial coefficient `(Σ d)! / Π d_j!`.
pub fn multinomial(d: &MultiDegree) -> BigInt {
    let mut total = 0usize;
    let mut acc = BigInt::one();
    for &e in d.exponents() {
        for i in 1..=e {
            total += 1;
            acc = acc * BigInt::from(total) / BigInt::from(i);
        }
    }
    acc
}

/// Coefficient of `t^d` in `Π(1 − t_j) / (1 − Σ t_j)`: inclusion–exclusion
/// over which variables lose one exponent.
pub fn assoc_constants_dim(d: &MultiDegree) -> BigInt {
    let e = d.exponents();
    let support: Vec<usize> = (0..e.len()).filter(|&i| e[i] > 0).collect();
    let mut acc = BigInt::zero();
    for mask in 0u32..(1 << support.len()) {
        let mut ex = e.to_vec();
        for (bit, &i) in support.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                ex[i] -= 1;
            }
        }
        let term = multinomial(&MultiDegree::new(ex));
        if mask.count_ones() % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `c_n · multinomial(d)`: dimension of the multidegree-`d` component of
/// the free magma algebra.
pub fn magma_component_dim(d: &MultiDegree) -> BigInt {
    &catalan(d.total())[d.total()] * multinomial(d)
}

pub fn to_u64(v: &BigInt) -> u64 {
    v.to_u64().expect("fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn catalan_values() {
        let t = series(SeriesName::Catalan, 10);
        assert!(t.consistent);
        assert_eq!(ints(&t.coefficients), vec![1, 1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }

    #[test]
    fn gamma_and_generators() {
        let t = series(SeriesName::Gamma, 8);
        assert!(t.consistent);
        assert_eq!(ints(&t.coefficients[..6]), vec![1, 0, 0, 1, 3, 9]);
        let g = series(SeriesName::Generators, 8);
        assert!(g.consistent);
        assert_eq!(ints(&g.coefficients), vec![0, 0, 0, 1, 3, 9, 27, 84, 270]);
    }

    #[test]
    fn catalan_is_composition_with_t() {
        let mut g = vec![BigInt::zero(); 9];
        g[1] = BigInt::one();
        assert_eq!(compose_catalan(&g), catalan(8));
    }

    #[test]
    fn commutative_counts() {
        let t = series(SeriesName::CommHilb { vars: 1 }, 8);
        assert!(t.consistent);
        assert_eq!(ints(&t.coefficients), vec![0, 1, 1, 1, 2, 3, 6, 11, 23]);
        let t2 = series(SeriesName::CommHilb { vars: 2 }, 4);
        assert!(t2.consistent);
        // 2 letters; 3 products; 2·3·... from H = 2t + ½H² + ½H(t²)
        assert_eq!(ints(&t2.coefficients), vec![0, 2, 3, 6, 18]);
    }

    #[test]
    fn associative_constants() {
        let t = series(SeriesName::AssocConstHilb { vars: 2 }, 6);
        assert!(t.consistent);
        assert_eq!(assoc_constants_dim(&MultiDegree::new(vec![1, 1])), BigInt::one());
        assert_eq!(assoc_constants_dim(&MultiDegree::new(vec![2])), BigInt::zero());
        assert_eq!(assoc_constants_dim(&MultiDegree::default()), BigInt::one());
    }

    #[test]
    fn magma_hilbert() {
        let t = series(SeriesName::MagmaHilb { vars: 2 }, 6);
        assert!(t.consistent);
        assert_eq!(ints(&t.coefficients[..4]), vec![1, 2, 4, 16]);
        assert_eq!(magma_component_dim(&MultiDegree::multilinear(3)), BigInt::from(12));
    }
}
