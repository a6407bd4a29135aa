//! Characters of the symmetric groups and decompositions of multilinear
//! components of constants into irreducibles.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::constants::constants_basis;
use crate::error::{Error, Result};
use crate::monomial::{enumerate_monomials, Flavor, Monomial, MultiDegree, Var};
use crate::polynomial::{factorial, Polynomial, Q};
use crate::series::catalan;

/// A partition: weakly decreasing positive parts.
///
/// Ordered lexicographically on the parts, so `[1,1,1] < [2,1] < [3]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All partitions of `n`, largest first: `[n], [n−1,1], …, [1ⁿ]`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Dimension of the irreducible representation, by the hook length formula.
    pub fn dimension(&self) -> u64 {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks *= BigInt::from(row - j + conj.0[j] - i - 1);
            }
        }
        (factorial(self.weight()) / hooks).to_u64().expect("small")
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&r| r > j).count()).collect())
    }

    /// z_μ = Π_i i^{m_i} m_i!, the order of the centralizer of a permutation
    /// of cycle type μ.
    pub fn centralizer_order(&self) -> BigInt {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_default() += 1;
        }
        counts.into_iter().fold(BigInt::one(), |acc, (i, m)| {
            acc * BigInt::from(i).pow(m as u32) * factorial(m)
        })
    }

    /// Number of permutations of cycle type μ.
    pub fn class_size(&self) -> BigInt {
        factorial(self.weight()) / self.centralizer_order()
    }

    /// (−1)^{n − ℓ(μ)}.
    pub fn sign(&self) -> i64 {
        if (self.weight() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A permutation of `1..=n` with this cycle type, cycles on consecutive
    /// integers.
    pub fn representative(&self) -> Vec<Var> {
        let n = self.weight();
        let mut image: Vec<Var> = vec![0; n + 1];
        let mut start = 1;
        for &len in &self.0 {
            for i in 0..len {
                let from = start + i;
                let to = if i + 1 == len { start } else { from + 1 };
                image[from] = to as Var;
            }
            start += len;
        }
        image
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// χ_λ(μ) by the Murnaghan–Nakayama rule, stripping border strips of
/// the parts of μ in order. Uses beta-sets (first-column hook lengths).
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch(lambda.weight(), mu.weight()));
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda.parts(), mu.parts(), &mut memo))
}

fn mn_rec(lambda: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&c| target < c && c < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&shape, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// The full character table of S_n, rows and columns in `Partition::all(n)` order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub weight: usize,
    pub partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = Partition::all(n);
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|l| {
                partitions
                    .iter()
                    .map(|m| mn_rec(l.parts(), m.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharacterTable {
            weight: n,
            partitions,
            values,
        }
    }

    pub fn value(&self, lambda: usize, mu: usize) -> i64 {
        self.values[lambda][mu]
    }

    pub fn character(&self, lambda: &Partition) -> ClassFunction {
        let i = self
            .partitions
            .iter()
            .position(|p| p == lambda)
            .expect("partition of the right weight");
        ClassFunction {
            weight: self.weight,
            values: self
                .partitions
                .iter()
                .zip(&self.values[i])
                .map(|(m, &v)| (m.clone(), Q::from_integer(BigInt::from(v))))
                .collect(),
        }
    }
}

/// A class function on S_n with exact rational values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub weight: usize,
    pub values: BTreeMap<Partition, Q>,
}

impl ClassFunction {
    pub fn value(&self, mu: &Partition) -> Q {
        self.values.get(mu).cloned().unwrap_or_else(Q::zero)
    }

    /// ⟨χ, ψ⟩ = Σ_μ |class μ| χ(μ) ψ(μ) / n!.
    pub fn inner(&self, other: &ClassFunction) -> Result<Q> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch(self.weight, other.weight));
        }
        let total = Partition::all(self.weight)
            .iter()
            .fold(Q::zero(), |acc, mu| {
                acc + Q::from_integer(mu.class_size()) * self.value(mu) * other.value(mu)
            });
        Ok(total / Q::from_integer(factorial(self.weight)))
    }

    /// χ(1): the dimension of the represented space.
    pub fn degree(&self) -> Q {
        self.value(&Partition::from_parts(vec![1; self.weight]))
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Partition::all(self.weight)
            .iter()
            .rev()
            .map(|mu| format!("{mu}: {}", self.value(mu)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Multiplicities of irreducible S_n-modules.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub weight: usize,
    multiplicities: BTreeMap<Partition, u64>,
}

impl Decomposition {
    pub fn zero(weight: usize) -> Self {
        Decomposition {
            weight,
            multiplicities: BTreeMap::new(),
        }
    }

    pub fn from_pairs(weight: usize, pairs: impl IntoIterator<Item = (Partition, u64)>) -> Self {
        let mut d = Self::zero(weight);
        for (p, m) in pairs {
            d.add(&p, m);
        }
        d
    }

    pub fn add(&mut self, lambda: &Partition, m: u64) {
        assert_eq!(lambda.weight(), self.weight, "weight mismatch");
        if m > 0 {
            *self.multiplicities.entry(lambda.clone()).or_default() += m;
        }
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.multiplicities.get(lambda).copied().unwrap_or(0)
    }

    /// Nonzero multiplicities, largest partition first.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.multiplicities.iter().rev().map(|(p, &m)| (p, m))
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Σ mult_λ · dim λ.
    pub fn dimension(&self) -> u64 {
        self.iter().map(|(p, m)| m * p.dimension()).sum()
    }

    /// `self − other`, failing if any multiplicity would go negative.
    pub fn checked_sub(&self, other: &Decomposition) -> Result<Decomposition> {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            let have = out.multiplicity(p);
            if have < m {
                return Err(Error::NegativeMultiplicity(format!(
                    "{p} would have multiplicity {have} - {m}"
                )));
            }
            if have == m {
                out.multiplicities.remove(p);
            } else {
                out.multiplicities.insert(p.clone(), have - m);
            }
        }
        Ok(out)
    }

    /// Character Σ mult_λ χ_λ.
    pub fn character(&self) -> ClassFunction {
        let table = CharacterTable::new(self.weight);
        let mut values: BTreeMap<Partition, Q> =
            table.partitions.iter().map(|m| (m.clone(), Q::zero())).collect();
        for (i, lambda) in table.partitions.iter().enumerate() {
            let m = self.multiplicity(lambda);
            if m == 0 {
                continue;
            }
            for (j, mu) in table.partitions.iter().enumerate() {
                *values.get_mut(mu).unwrap() += Q::from_integer(BigInt::from(m as i64 * table.value(i, j)));
            }
        }
        ClassFunction {
            weight: self.weight,
            values,
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .iter()
            .map(|(p, m)| if m == 1 { p.to_string() } else { format!("{m}{p}") })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Multiplicities ⟨χ, χ_λ⟩ for every λ.
pub fn decompose(chi: &ClassFunction) -> Result<Decomposition> {
    let table = CharacterTable::new(chi.weight);
    let mut out = Decomposition::zero(chi.weight);
    for lambda in &table.partitions {
        let m = chi.inner(&table.character(lambda))?;
        if !m.is_integer() || m.is_negative() {
            return Err(Error::NotACharacter(format!("multiplicity of {lambda} is {m}")));
        }
        out.add(lambda, m.to_integer().to_u64().expect("small"));
    }
    Ok(out)
}

/// Coordinates relative to a basis in which each element owns a monomial
/// (coefficient nonzero there, zero in every other element).
struct Coordinates<'a> {
    basis: &'a [Polynomial],
    pivots: Vec<(Monomial, Q)>,
}

impl<'a> Coordinates<'a> {
    fn new(basis: &'a [Polynomial]) -> Option<Self> {
        let mut pivots = Vec::with_capacity(basis.len());
        for b in basis {
            let (m, c) = b.leading_term().ok()?;
            pivots.push((m, c));
        }
        for (i, (m, _)) in pivots.iter().enumerate() {
            if basis
                .iter()
                .enumerate()
                .any(|(j, b)| j != i && !b.coefficient(m).is_zero())
            {
                return None;
            }
        }
        Some(Coordinates { basis, pivots })
    }

    /// Coefficient vector of `v`, or `None` if `v` is outside the span.
    fn express(&self, v: &Polynomial) -> Option<Vec<Q>> {
        let coords: Vec<Q> = self
            .pivots
            .iter()
            .map(|(m, c)| v.coefficient(m) / c)
            .collect();
        let mut residual = v.clone();
        for (b, a) in self.basis.iter().zip(&coords) {
            if !a.is_zero() {
                residual.add_scaled(b, &-a);
            }
        }
        residual.is_zero().then_some(coords)
    }
}

/// Brings `basis` into a form where each element owns a monomial.
fn reduced_basis(basis: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut rows: Vec<(Monomial, Polynomial)> = Vec::new();
    for p in basis {
        let mut p = p.clone();
        for (m, r) in &rows {
            let c = p.coefficient(m);
            if !c.is_zero() {
                p.add_scaled(r, &-c);
            }
        }
        let Ok((lead, c)) = p.leading_term() else {
            return Err(Error::DependentBasis);
        };
        let p = p.scale(&(Q::one() / c));
        for (_, r) in rows.iter_mut() {
            let c = r.coefficient(&lead);
            if !c.is_zero() {
                r.add_scaled(&p, &-c);
            }
        }
        rows.push((lead, p));
    }
    Ok(rows.into_iter().map(|(_, p)| p).collect())
}

/// Character of S_k acting on `span(basis)` by permuting `x1..xk`.
pub fn action_character(basis: &[Polynomial], k: usize) -> Result<ClassFunction> {
    let reduced;
    let coords = match Coordinates::new(basis) {
        Some(c) => c,
        None => {
            reduced = reduced_basis(basis)?;
            Coordinates::new(&reduced).ok_or(Error::DependentBasis)?
        }
    };
    let mut values = BTreeMap::new();
    for mu in Partition::all(k) {
        let sigma = mu.representative();
        let act = |v: Var| if (v as usize) <= k { sigma[v as usize] } else { v };
        let mut trace = Q::zero();
        for (i, b) in coords.basis.iter().enumerate() {
            let image = b.permute_vars(&act);
            let c = coords
                .express(&image)
                .ok_or(Error::NotStable)?;
            trace += &c[i];
        }
        values.insert(mu, trace);
    }
    Ok(ClassFunction { weight: k, values })
}

/// `d ⊗ row(r)`: add horizontal strips of `r` boxes to each constituent.
pub fn pieri_row(d: &Decomposition, r: usize) -> Decomposition {
    let mut out = Decomposition::zero(d.weight + r);
    for (lambda, m) in d.iter() {
        for nu in horizontal_strips(lambda, r) {
            out.add(&nu, m);
        }
    }
    out
}

/// Partitions ν ⊇ λ with |ν/λ| = r and no two added boxes in one column,
/// i.e. λ_i ≤ ν_i ≤ λ_{i−1}.
fn horizontal_strips(lambda: &Partition, r: usize) -> Vec<Partition> {
    fn rec(lam: &[usize], i: usize, left: usize, nu: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let base = lam.get(i).copied().unwrap_or(0);
        if i >= lam.len() {
            // A new row below λ may take at most λ_{i−1} boxes.
            let cap = if i == 0 { usize::MAX } else { lam[i - 1] };
            if left <= cap {
                nu.push(left);
                out.push(Partition::from_parts(nu.clone()));
                nu.pop();
            }
            return;
        }
        let cap = if i == 0 { left } else { (lam[i - 1] - base).min(left) };
        for add in 0..=cap {
            nu.push(base + add);
            rec(lam, i + 1, left - add, nu, out);
            nu.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), 0, r, &mut Vec::new(), &mut out);
    out
}

/// Decomposition of the multilinear component of degree `k` in `x1..xk`.
pub fn component_decomposition(k: usize, flavor: Flavor) -> Result<Decomposition> {
    let regular = |copies: u64| {
        Decomposition::from_pairs(k, Partition::all(k).into_iter().map(|p| {
            let d = p.dimension();
            (p, copies * d)
        }))
    };
    match flavor {
        Flavor::Magma => Ok(regular(crate::series::to_u64(&catalan(k)[k]))),
        Flavor::Associative => Ok(regular(1)),
        Flavor::Commutative => {
            let basis: Vec<Polynomial> = enumerate_monomials(&MultiDegree::multilinear(k), flavor)
                .into_iter()
                .map(|m| Polynomial::monomial(flavor, m))
                .collect();
            decompose(&action_character(&basis, k)?)
        }
    }
}

/// How to obtain the constants decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Trace of the permutation action on the computed kernel.
    Kernel,
    /// `C^(k) = R^(k) − Σ_{j<k} C^(j) ⊗ row(k − j)`.
    Recursion,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kernel" => Ok(Method::Kernel),
            "recursion" => Ok(Method::Recursion),
            _ => Err(Error::Invalid(format!("unknown method '{s}'"))),
        }
    }
}

/// Decomposition of the multilinear constants C^(k).
pub fn constants_decomposition(k: usize, flavor: Flavor, method: Method) -> Result<Decomposition> {
    match method {
        Method::Kernel => {
            let basis = constants_basis(&MultiDegree::multilinear(k), flavor);
            decompose(&action_character(basis.elements(), k)?)
        }
        Method::Recursion => Ok(recursion_table(k, flavor)?.pop().expect("k + 1 entries")),
    }
}

/// C^(0), …, C^(k) by the recursion, each layer reused for the next.
pub fn recursion_table(k: usize, flavor: Flavor) -> Result<Vec<Decomposition>> {
    let mut layers: Vec<Decomposition> = Vec::with_capacity(k + 1);
    for n in 0..=k {
        let mut c = component_decomposition(n, flavor)?;
        for (j, layer) in layers.iter().enumerate() {
            c = c.checked_sub(&pieri_row(layer, n - j))?;
        }
        layers.push(c);
    }
    Ok(layers)
}

/// Multiplicity of the trivial module `[k]`.
pub fn trivial_multiplicity(d: &Decomposition) -> u64 {
    d.multiplicity(&Partition::from_parts(vec![d.weight]))
}
