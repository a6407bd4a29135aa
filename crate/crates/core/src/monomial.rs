//! Non-associative monomials (planar binary trees with indexed leaves), the
//! three built-in algebra flavors, multidegrees and the ≺ ordering.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

/// Variable index. `x1` is index 1; index 0 is never a valid variable.
pub type Var = u32;

/// The algebra law imposed on monomials through canonical forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Absolutely free: no identification of trees.
    Magma,
    /// Free commutative non-associative: children of every node are sorted.
    Commutative,
    /// Free associative: all bracketings of a word coincide.
    Associative,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Magma, Flavor::Commutative, Flavor::Associative];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Magma => "magma",
            Flavor::Commutative => "commutative",
            Flavor::Associative => "associative",
        }
    }

    /// Canonical product of two canonical monomials.
    pub fn product(self, u: &Monomial, v: &Monomial) -> Monomial {
        if u.is_unit() {
            return v.clone();
        }
        if v.is_unit() {
            return u.clone();
        }
        match self {
            Flavor::Magma => Monomial::node(u.clone(), v.clone()),
            Flavor::Commutative => {
                if u <= v {
                    Monomial::node(u.clone(), v.clone())
                } else {
                    Monomial::node(v.clone(), u.clone())
                }
            }
            Flavor::Associative => {
                let mut acc = u.clone();
                v.for_each_leaf(&mut |k| acc = Monomial::node(acc.clone(), Monomial::var(k)));
                acc
            }
        }
    }

    /// Canonical representative of an arbitrary tree. Idempotent.
    pub fn canonicalize(self, tree: &Monomial) -> Monomial {
        match self {
            Flavor::Magma => tree.clone(),
            Flavor::Commutative => match tree {
                Monomial::Node(n) => {
                    let l = self.canonicalize(&n.left);
                    let r = self.canonicalize(&n.right);
                    self.product(&l, &r)
                }
                _ => tree.clone(),
            },
            Flavor::Associative => Monomial::left_normed(&tree.letters()),
        }
    }

    pub fn is_canonical(self, tree: &Monomial) -> bool {
        self.canonicalize(tree) == *tree
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "magma" => Ok(Flavor::Magma),
            "commutative" => Ok(Flavor::Commutative),
            "associative" => Ok(Flavor::Associative),
            other => Err(format!(
                "unknown flavor `{other}` (expected magma, commutative or associative)"
            )),
        }
    }
}

/// A monomial: the unit, a variable, or a product of two monomials.
///
/// Equality is structural. `Ord` is the ≺ ordering: degree first, then the
/// right factors, then the left factors; leaves of equal degree compare by
/// variable index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Monomial {
    Unit,
    Leaf(Var),
    Node(Arc<Node>),
}

#[derive(PartialEq, Eq, Hash)]
pub struct Node {
    degree: usize,
    left: Monomial,
    right: Monomial,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::Unit
    }

    pub fn var(k: Var) -> Self {
        assert!(k >= 1, "variable indices start at 1");
        Monomial::Leaf(k)
    }

    /// Raw (magma) product. Neither factor may be the unit.
    pub fn node(left: Monomial, right: Monomial) -> Self {
        assert!(
            !left.is_unit() && !right.is_unit(),
            "the unit never appears inside a tree"
        );
        let degree = left.degree() + right.degree();
        Monomial::Node(Arc::new(Node {
            degree,
            left,
            right,
        }))
    }

    /// Left-normed product `((x_{w1} x_{w2}) x_{w3}) ...`; the empty word is 1.
    pub fn left_normed(word: &[Var]) -> Self {
        let mut it = word.iter();
        let Some(&first) = it.next() else {
            return Monomial::Unit;
        };
        it.fold(Monomial::var(first), |acc, &k| {
            Monomial::node(acc, Monomial::var(k))
        })
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Monomial::Unit)
    }

    pub fn degree(&self) -> usize {
        match self {
            Monomial::Unit => 0,
            Monomial::Leaf(_) => 1,
            Monomial::Node(n) => n.degree,
        }
    }

    pub fn children(&self) -> Option<(&Monomial, &Monomial)> {
        match self {
            Monomial::Node(n) => Some((&n.left, &n.right)),
            _ => None,
        }
    }

    pub fn left(&self) -> Option<&Monomial> {
        self.children().map(|(l, _)| l)
    }

    pub fn right(&self) -> Option<&Monomial> {
        self.children().map(|(_, r)| r)
    }

    pub fn for_each_leaf(&self, f: &mut impl FnMut(Var)) {
        match self {
            Monomial::Unit => {}
            Monomial::Leaf(k) => f(*k),
            Monomial::Node(n) => {
                n.left.for_each_leaf(f);
                n.right.for_each_leaf(f);
            }
        }
    }

    /// Leaf labels read left to right.
    pub fn letters(&self) -> Vec<Var> {
        let mut out = Vec::with_capacity(self.degree());
        self.for_each_leaf(&mut |k| out.push(k));
        out
    }

    pub fn degree_in(&self, k: Var) -> usize {
        let mut d = 0;
        self.for_each_leaf(&mut |l| d += usize::from(l == k));
        d
    }

    pub fn contains(&self, k: Var) -> bool {
        match self {
            Monomial::Unit => false,
            Monomial::Leaf(l) => *l == k,
            Monomial::Node(n) => n.left.contains(k) || n.right.contains(k),
        }
    }

    pub fn max_var(&self) -> Var {
        let mut m = 0;
        self.for_each_leaf(&mut |k| m = m.max(k));
        m
    }

    pub fn multidegree(&self) -> MultiDegree {
        let mut exps = Vec::new();
        self.for_each_leaf(&mut |k| {
            let i = k as usize - 1;
            if exps.len() <= i {
                exps.resize(i + 1, 0);
            }
            exps[i] += 1;
        });
        MultiDegree::new(exps)
    }

    /// Relabels leaves; the result is a raw tree and must be canonicalized.
    pub fn map_vars(&self, f: &impl Fn(Var) -> Var) -> Monomial {
        match self {
            Monomial::Unit => Monomial::Unit,
            Monomial::Leaf(k) => Monomial::var(f(*k)),
            Monomial::Node(n) => Monomial::node(n.left.map_vars(f), n.right.map_vars(f)),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| match (self, other) {
                (Monomial::Unit, Monomial::Unit) => Ordering::Equal,
                (Monomial::Leaf(a), Monomial::Leaf(b)) => a.cmp(b),
                (Monomial::Node(a), Monomial::Node(b)) => {
                    if Arc::ptr_eq(a, b) {
                        return Ordering::Equal;
                    }
                    a.right.cmp(&b.right).then_with(|| a.left.cmp(&b.left))
                }
                _ => unreachable!("monomials of equal degree have the same shape class"),
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Writes the monomial in the expression grammar. `single_var` prints `x1`
/// as a bare `x`.
pub(crate) fn write_monomial(
    m: &Monomial,
    single_var: bool,
    f: &mut impl fmt::Write,
) -> fmt::Result {
    match m {
        Monomial::Unit => f.write_str("1"),
        Monomial::Leaf(k) if single_var => {
            debug_assert_eq!(*k, 1);
            f.write_str("x")
        }
        Monomial::Leaf(k) => write!(f, "x{k}"),
        Monomial::Node(n) => {
            f.write_char('(')?;
            write_monomial(&n.left, single_var, f)?;
            f.write_char(' ')?;
            write_monomial(&n.right, single_var, f)?;
            f.write_char(')')
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(self, self.max_var() <= 1, f)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(self, false, f)
    }
}

/// Leaf count per variable. Index 0 of the exponent vector is `x1`; trailing
/// zeros are trimmed so equal multidegrees compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiDegree(Vec<usize>);

impl MultiDegree {
    pub fn new(mut exponents: Vec<usize>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        MultiDegree(exponents)
    }

    /// `(n)` in a single variable.
    pub fn single(n: usize) -> Self {
        Self::new(vec![n])
    }

    /// `(1, ..., 1)` in `k` variables.
    pub fn multilinear(k: usize) -> Self {
        Self::new(vec![1; k])
    }

    pub fn exponents(&self) -> &[usize] {
        &self.0
    }

    /// Exponent of `x_k`.
    pub fn get(&self, k: Var) -> usize {
        self.0.get(k as usize - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of variables spanned (the highest index with a nonzero exponent).
    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Lowers the exponent of `x_k` by one.
    pub fn decrement(&self, k: Var) -> Option<MultiDegree> {
        let i = k as usize - 1;
        if self.get(k) == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(MultiDegree::new(e))
    }

    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut e = self.0.clone();
        for (a, b) in e.iter_mut().zip(&other.0) {
            *a = a.checked_sub(*b)?;
        }
        Some(MultiDegree::new(e))
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        let n = self.0.len().max(other.0.len());
        let e = (0..n)
            .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
            .collect();
        MultiDegree::new(e)
    }

    /// All multidegrees `e` with `e_j <= self_j` for every `j`.
    pub fn below(&self) -> Vec<MultiDegree> {
        let mut out = vec![Vec::new()];
        for &bound in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    (0..=bound).map(move |a| {
                        let mut p = prefix.clone();
                        p.push(a);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(MultiDegree::new).collect()
    }

    /// All multidegrees in `m` variables of total degree exactly `n`.
    pub fn all_of_total(m: usize, n: usize) -> Vec<MultiDegree> {
        fn rec(m: usize, n: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiDegree>) {
            if prefix.len() + 1 == m {
                prefix.push(n);
                out.push(MultiDegree::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for a in (0..=n).rev() {
                prefix.push(a);
                rec(m, n - a, prefix, out);
                prefix.pop();
            }
        }
        if m == 0 {
            return if n == 0 {
                vec![MultiDegree::default()]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        rec(m, n, &mut Vec::with_capacity(m), &mut out);
        out
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('(')?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{e}")?;
        }
        f.write_char(')')
    }
}

/// All canonical monomials of multidegree `d` under `flavor`, each once, in ≺
/// order.
pub fn enumerate_monomials(d: &MultiDegree, flavor: Flavor) -> Vec<Monomial> {
    let mut out = match flavor {
        Flavor::Associative => words_of(d)
            .into_iter()
            .map(|w| Monomial::left_normed(&w))
            .collect(),
        _ => {
            let mut memo = HashMap::new();
            trees_of(d, flavor, &mut memo)
        }
    };
    out.sort();
    out
}

fn trees_of(
    d: &MultiDegree,
    flavor: Flavor,
    memo: &mut HashMap<MultiDegree, Vec<Monomial>>,
) -> Vec<Monomial> {
    if let Some(v) = memo.get(d) {
        return v.clone();
    }
    let out = match d.total() {
        0 => vec![Monomial::Unit],
        1 => {
            let k = d.0.iter().position(|&e| e == 1).unwrap() as Var + 1;
            vec![Monomial::var(k)]
        }
        _ => {
            let mut out = Vec::new();
            for left in d.below() {
                if left.is_zero() || left == *d {
                    continue;
                }
                let right = d.checked_sub(&left).unwrap();
                if flavor == Flavor::Commutative && left > right {
                    continue;
                }
                let ls = trees_of(&left, flavor, memo);
                let rs = trees_of(&right, flavor, memo);
                for (i, u) in ls.iter().enumerate() {
                    // For equal halves only the pairs u <= v are distinct.
                    let start = if flavor == Flavor::Commutative && left == right {
                        i
                    } else {
                        0
                    };
                    let rs_iter = if flavor == Flavor::Commutative && left == right {
                        &ls[start..]
                    } else {
                        &rs[..]
                    };
                    for v in rs_iter {
                        out.push(flavor.product(u, v));
                    }
                }
            }
            out
        }
    };
    memo.insert(d.clone(), out.clone());
    out
}

/// Distinct words (multiset permutations) with the given letter counts.
fn words_of(d: &MultiDegree) -> Vec<Vec<Var>> {
    fn rec(counts: &mut [usize], word: &mut Vec<Var>, out: &mut Vec<Vec<Var>>) {
        if counts.iter().all(|&c| c == 0) {
            out.push(word.clone());
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                word.push(i as Var + 1);
                rec(counts, word, out);
                word.pop();
                counts[i] += 1;
            }
        }
    }
    let mut counts = d.0.clone();
    let mut out = Vec::new();
    rec(&mut counts, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Monomial {
        Monomial::var(1)
    }

    fn n(a: Monomial, b: Monomial) -> Monomial {
        Monomial::node(a, b)
    }

    #[test]
    fn canonical_forms() {
        let x1 = Monomial::var(1);
        let x2 = Monomial::var(2);
        let x3 = Monomial::var(3);
        assert_eq!(
            Flavor::Magma.canonicalize(&n(x1.clone(), x2.clone())),
            n(x1.clone(), x2.clone())
        );
        assert_eq!(
            Flavor::Commutative.canonicalize(&n(x2.clone(), x1.clone())),
            n(x1.clone(), x2.clone())
        );
        let a = Flavor::Associative.canonicalize(&n(n(x1.clone(), x2.clone()), x3.clone()));
        let b = Flavor::Associative.canonicalize(&n(x1.clone(), n(x2.clone(), x3.clone())));
        assert_eq!(a, b);
        assert_eq!(a.letters(), vec![1, 2, 3]);
    }

    #[test]
    fn ordering_chain() {
        let xx = n(x(), x());
        let xx_x = n(xx.clone(), x());
        let x_xx = n(x(), xx.clone());
        let chain = vec![
            x(),
            xx.clone(),
            xx_x.clone(),
            x_xx.clone(),
            n(xx_x.clone(), x()),
            n(x_xx.clone(), x()),
            n(xx.clone(), xx.clone()),
            n(x(), xx_x.clone()),
            n(x(), x_xx.clone()),
        ];
        for w in chain.windows(2) {
            assert!(w[0] < w[1], "{} should precede {}", w[0], w[1]);
        }
        assert_eq!(xx_x.cmp(&xx_x), Ordering::Equal);
    }

    #[test]
    fn ordering_is_total_up_to_degree_five() {
        let mut all = Vec::new();
        for d in 0..=5 {
            all.extend(enumerate_monomials(&MultiDegree::single(d), Flavor::Magma));
        }
        for a in &all {
            for b in &all {
                let ab = a.cmp(b);
                assert_eq!(ab, b.cmp(a).reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
                for c in &all {
                    if a < b && b < c {
                        assert!(a < c);
                    }
                }
            }
        }
    }

    #[test]
    fn monomial_counts() {
        let catalan = [1usize, 1, 1, 2, 5, 14, 42, 132, 429];
        let wedderburn = [1usize, 1, 1, 1, 2, 3, 6, 11, 23];
        for deg in 0..=8 {
            let d = MultiDegree::single(deg);
            assert_eq!(enumerate_monomials(&d, Flavor::Magma).len(), catalan[deg]);
            assert_eq!(
                enumerate_monomials(&d, Flavor::Commutative).len(),
                wedderburn[deg]
            );
            assert_eq!(enumerate_monomials(&d, Flavor::Associative).len(), 1);
        }
        // c_3 * 3!/(1!1!1!) planar trees over three distinct letters
        let d = MultiDegree::multilinear(3);
        assert_eq!(enumerate_monomials(&d, Flavor::Magma).len(), 12);
        assert_eq!(enumerate_monomials(&d, Flavor::Associative).len(), 6);
        assert_eq!(enumerate_monomials(&d, Flavor::Commutative).len(), 3);
    }

    #[test]
    fn enumeration_is_sorted_and_canonical() {
        for flavor in Flavor::ALL {
            let ms = enumerate_monomials(&MultiDegree::new(vec![2, 2]), flavor);
            assert!(ms.windows(2).all(|w| w[0] < w[1]));
            assert!(ms.iter().all(|m| flavor.is_canonical(m)));
        }
    }

    #[test]
    fn multidegree_helpers() {
        let d = MultiDegree::new(vec![1, 2, 0]);
        assert_eq!(d.exponents(), &[1, 2]);
        assert_eq!(d.total(), 3);
        assert_eq!(d.below().len(), 6);
        assert_eq!(d.decrement(1), Some(MultiDegree::new(vec![0, 2])));
        assert_eq!(d.decrement(3), None);
        assert_eq!(MultiDegree::all_of_total(2, 3).len(), 4);
        assert_eq!(
            n(n(x(), Monomial::var(2)), Monomial::var(2)).multidegree(),
            d
        );
    }
}
