//! The algebra of constants: exact kernels of the stacked partial
//! derivatives, the integrated-word basis of the one-variable magma
//! constants, and its free generating set.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::linalg::{Echelon, SpanBasis, SparseRow};
use crate::monomial::{enumerate_monomials, Flavor, Monomial, MultiDegree, Var};
use crate::polynomial::{Polynomial, Q};
use crate::series;
use crate::taylor::constant_remainder;
use crate::Error;

/// A basis of the constants of one multidegree.
///
/// Elements are monic with pairwise distinct leading monomials; each
/// element vanishes at the leading monomials of the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantsBasis {
    flavor: Flavor,
    multidegree: MultiDegree,
    basis: Vec<Polynomial>,
    component_dim: usize,
}

impl ConstantsBasis {
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn multidegree(&self) -> &MultiDegree {
        &self.multidegree
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Dimension of the whole homogeneous component the kernel sits in.
    pub fn component_dim(&self) -> usize {
        self.component_dim
    }
}

/// Stacked derivation matrix of the multidegree-`d` component: one block of
/// rows per variable, columns indexed by `columns`.
fn derivation_rows(d: &MultiDegree, flavor: Flavor, columns: &[Monomial]) -> Vec<SparseRow<Q>> {
    let mut rows = Vec::new();
    for k in 1..=d.num_vars() as Var {
        let Some(target) = d.decrement(k) else { continue };
        let targets = enumerate_monomials(&target, flavor);
        let index: HashMap<&Monomial, usize> =
            targets.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut block: Vec<SparseRow<Q>> = vec![Vec::new(); targets.len()];
        for (j, m) in columns.iter().enumerate() {
            let dm = Polynomial::monomial(flavor, m.clone()).derivative(k);
            for (t, c) in dm.terms() {
                block[index[t]].push((j, c.clone()));
            }
        }
        rows.extend(block);
    }
    rows
}

/// Basis of the multidegree-`d` constants, by exact elimination with columns
/// in ascending ≺ order.
pub fn constants_basis(d: &MultiDegree, flavor: Flavor) -> ConstantsBasis {
    let columns = enumerate_monomials(d, flavor);
    let rows = derivation_rows(d, flavor, &columns);
    let echelon = Echelon::new(rows, columns.len());
    let basis = echelon
        .kernel()
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(
                flavor,
                v.into_iter().map(|(j, c)| (c, columns[j].clone())),
            )
        })
        .collect();
    ConstantsBasis {
        flavor,
        multidegree: d.clone(),
        basis,
        component_dim: columns.len(),
    }
}

/// Dimension of the multidegree-`d` constants (component size minus rank).
pub fn constants_dimension(d: &MultiDegree, flavor: Flavor) -> usize {
    let columns = enumerate_monomials(d, flavor);
    let rows = derivation_rows(d, flavor, &columns);
    columns.len() - Echelon::new(rows, columns.len()).rank()
}

/// φ(u) = Σ_p (−1)^p u^{(p)} ρ^p / p!, a constant attached to a
/// one-variable magma word.
pub fn integrated_word(u: &Monomial) -> Result<Polynomial, Error> {
    let v = u.max_var();
    if v > 1 {
        return Err(Error::NotOneVariable(v));
    }
    Ok(constant_remainder(
        &Polynomial::monomial(Flavor::Magma, u.clone()),
        1,
    ))
}

/// True for words of degree ≥ 2 whose right factor is not `x`.
fn not_ending_in_x(u: &Monomial) -> bool {
    matches!(u.right(), Some(r) if r.degree() > 1)
}

/// `{φ(u)}` over degree-`n` words of the form `v·w` with `deg w ≥ 2`
/// (plus `1` in degree 0). These form a basis of the degree-`n` constants.
pub fn one_var_constant_basis(n: usize) -> Vec<Polynomial> {
    if n == 0 {
        return vec![Polynomial::one(Flavor::Magma)];
    }
    enumerate_monomials(&MultiDegree::single(n), Flavor::Magma)
        .into_iter()
        .filter(not_ending_in_x)
        .map(|u| integrated_word(&u).expect("one-variable word"))
        .collect()
}

/// The five word shapes whose integrated words freely generate the
/// one-variable constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GeneratorForm {
    /// `v·(xx)`, deg v ≥ 2
    TimesSquare,
    /// `x·w`, deg w ≥ 2
    XTimes,
    /// `(xx)·w`, deg w ≥ 2
    SquareTimes,
    /// `(v₁·x)·w`, deg v₁, deg w ≥ 2
    LeftEndsInX,
    /// `v·(w₁·x)`, deg v, deg w₁ ≥ 2
    RightEndsInX,
}

impl fmt::Display for GeneratorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorForm::TimesSquare => "v(xx)",
            GeneratorForm::XTimes => "x w",
            GeneratorForm::SquareTimes => "(xx)w",
            GeneratorForm::LeftEndsInX => "(v1 x)w",
            GeneratorForm::RightEndsInX => "v(w1 x)",
        })
    }
}

fn is_x(m: &Monomial) -> bool {
    matches!(m, Monomial::Leaf(1))
}

fn is_xx(m: &Monomial) -> bool {
    matches!(m.children(), Some((a, b)) if is_x(a) && is_x(b))
}

/// `w` ends in `·x` and its left factor has degree ≥ 2.
fn ends_in_x_long(w: &Monomial) -> bool {
    matches!(w.children(), Some((a, b)) if is_x(b) && a.degree() >= 2)
}

/// Every form the word `u` matches.
pub fn generator_forms(u: &Monomial) -> Vec<GeneratorForm> {
    let Some((v, w)) = u.children() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if is_xx(w) && v.degree() >= 2 {
        out.push(GeneratorForm::TimesSquare);
    }
    if is_x(v) && w.degree() >= 2 {
        out.push(GeneratorForm::XTimes);
    }
    if is_xx(v) && w.degree() >= 2 {
        out.push(GeneratorForm::SquareTimes);
    }
    if ends_in_x_long(v) && w.degree() >= 2 {
        out.push(GeneratorForm::LeftEndsInX);
    }
    if ends_in_x_long(w) && v.degree() >= 2 {
        out.push(GeneratorForm::RightEndsInX);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub word: Monomial,
    pub element: Polynomial,
    pub forms: Vec<GeneratorForm>,
}

/// Free generators of the one-variable magma constants in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub degree: usize,
    pub elements: Vec<Generator>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|g| g.element.clone()).collect()
    }
}

/// `{φ(u)}` over degree-`n` words matching at least one of the five forms.
/// Empty below degree 3.
pub fn free_generators(n: usize) -> GeneratorSet {
    let elements = enumerate_monomials(&MultiDegree::single(n), Flavor::Magma)
        .into_iter()
        .filter_map(|u| {
            let forms = generator_forms(&u);
            if forms.is_empty() {
                return None;
            }
            let element = integrated_word(&u).expect("one-variable word");
            Some(Generator {
                word: u,
                element,
                forms,
            })
        })
        .collect();
    GeneratorSet {
        degree: n,
        elements,
    }
}

/// One line of the Hilbert product check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertRow {
    pub multidegree: MultiDegree,
    /// dim R^{(d)} from monomial enumeration.
    pub component_dim: usize,
    /// Σ_{e ≤ d} dim R_0^{(e)} from computed kernels.
    pub constants_sum: usize,
}

impl HilbertRow {
    pub fn pass(&self) -> bool {
        self.component_dim == self.constants_sum
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertReport {
    pub flavor: Flavor,
    pub vars: usize,
    pub max_degree: usize,
    pub rows: Vec<HilbertRow>,
}

impl HilbertReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(HilbertRow::pass)
    }
}

/// Checks `Hilb(R) = Π 1/(1 − t_j) · Hilb(R_0)` coefficientwise for every
/// multidegree in `m` variables of total degree at most `max_degree`.
pub fn verify_hilbert_product(flavor: Flavor, m: usize, max_degree: usize) -> HilbertReport {
    let mut kernel_dims: BTreeMap<MultiDegree, usize> = BTreeMap::new();
    let mut rows = Vec::new();
    for n in 0..=max_degree {
        for d in MultiDegree::all_of_total(m, n) {
            let component_dim = enumerate_monomials(&d, flavor).len();
            let constants_sum = d
                .below()
                .into_iter()
                .map(|e| {
                    *kernel_dims
                        .entry(e.clone())
                        .or_insert_with(|| constants_basis(&e, flavor).len())
                })
                .sum();
            rows.push(HilbertRow {
                multidegree: d,
                component_dim,
                constants_sum,
            });
        }
    }
    HilbertReport {
        flavor,
        vars: m,
        max_degree,
        rows,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpanRow {
    pub degree: usize,
    /// Number of bracketed products of generators (and scalars in degree 0).
    pub products: usize,
    /// Rank of those products.
    pub rank: usize,
    /// Dimension of the constants from the kernel computation.
    pub constants_dim: usize,
    /// γ_n from the series table.
    pub gamma: usize,
    /// Every product is annihilated by d/dx.
    pub all_constant: bool,
}

impl GeneratorSpanRow {
    /// Products are independent and span the constants.
    pub fn pass(&self) -> bool {
        self.all_constant
            && self.rank == self.products
            && self.rank == self.constants_dim
            && self.rank == self.gamma
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpanReport {
    pub rows: Vec<GeneratorSpanRow>,
}

impl GeneratorSpanReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(GeneratorSpanRow::pass)
    }
}

/// All bracketed products of free generators up to degree `max_degree`,
/// grouped by degree; degree 0 holds the scalar 1.
pub fn generator_products(max_degree: usize) -> Vec<Vec<Polynomial>> {
    let mut by_degree: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(Flavor::Magma)]];
    for n in 1..=max_degree {
        let mut here = free_generators(n).polynomials();
        for i in 1..n {
            for p in &by_degree[i] {
                for q in &by_degree[n - i] {
                    here.push(p * q);
                }
            }
        }
        by_degree.push(here);
    }
    by_degree
}

/// Verifies that products of the free generators span the one-variable
/// constants in every degree up to `max_degree`, and that distinct
/// bracketings are linearly independent.
pub fn span_check_generators(max_degree: usize) -> GeneratorSpanReport {
    let gamma = series::gamma(max_degree);
    let products = generator_products(max_degree);
    let rows = products
        .iter()
        .enumerate()
        .map(|(n, ps)| {
            let mut span: SpanBasis<Monomial> = SpanBasis::new();
            for p in ps {
                span.insert(p.term_map());
            }
            GeneratorSpanRow {
                degree: n,
                products: ps.len(),
                rank: span.rank(),
                constants_dim: constants_basis(&MultiDegree::single(n), Flavor::Magma).len(),
                gamma: usize::try_from(&gamma[n]).expect("small"),
                all_constant: ps.iter().all(|p| p.derivative(1).is_zero()),
            }
        })
        .collect();
    GeneratorSpanReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::q;

    fn x() -> Monomial {
        Monomial::var(1)
    }
    fn n(a: Monomial, b: Monomial) -> Monomial {
        Monomial::node(a, b)
    }
    fn mono(m: Monomial) -> Polynomial {
        Polynomial::monomial(Flavor::Magma, m)
    }

    #[test]
    fn small_kernels() {
        let b = constants_basis(&MultiDegree::single(3), Flavor::Magma);
        assert_eq!(b.len(), 1);
        let expect = &mono(n(x(), n(x(), x()))) - &mono(n(n(x(), x()), x()));
        assert_eq!(b.elements()[0], expect);

        let b = constants_basis(&MultiDegree::new(vec![1, 1]), Flavor::Magma);
        let (x1, x2) = (Monomial::var(1), Monomial::var(2));
        let comm = &mono(n(x1.clone(), x2.clone())) - &mono(n(x2, x1));
        assert_eq!(b.elements(), &[comm]);

        assert!(constants_basis(&MultiDegree::single(2), Flavor::Commutative).is_empty());
        assert!(constants_basis(&MultiDegree::new(vec![1, 1]), Flavor::Commutative).is_empty());
        assert_eq!(
            constants_basis(&MultiDegree::default(), Flavor::Magma).elements(),
            &[Polynomial::one(Flavor::Magma)]
        );
        assert!(constants_basis(&MultiDegree::single(1), Flavor::Magma).is_empty());
    }

    #[test]
    fn kernel_is_exact() {
        for flavor in Flavor::ALL {
            for d in [vec![4], vec![2, 1], vec![1, 1, 1], vec![2, 2]] {
                let d = MultiDegree::new(d);
                let b = constants_basis(&d, flavor);
                for p in b.elements() {
                    for k in 1..=3 {
                        assert!(p.derivative(k).is_zero());
                    }
                }
                assert_eq!(b.len(), constants_dimension(&d, flavor));
                let mut span: SpanBasis<Monomial> = SpanBasis::new();
                assert!(b.elements().iter().all(|p| span.insert(p.term_map())));
            }
        }
    }

    #[test]
    fn magma_dimensions_follow_gamma() {
        let gamma = series::gamma(8);
        for (deg, expected) in gamma.iter().enumerate() {
            let dim = constants_basis(&MultiDegree::single(deg), Flavor::Magma).len();
            assert_eq!(&num_bigint::BigInt::from(dim), expected, "degree {deg}");
        }
    }

    #[test]
    fn integrated_words() {
        let x_xx = n(x(), n(x(), x()));
        assert_eq!(
            integrated_word(&x_xx).unwrap(),
            &mono(x_xx.clone()) - &mono(n(n(x(), x()), x()))
        );
        assert!(integrated_word(&n(x(), x())).unwrap().is_zero());
        assert_eq!(integrated_word(&Monomial::Unit).unwrap(), Polynomial::one(Flavor::Magma));
        assert_eq!(
            integrated_word(&n(x(), Monomial::var(2))),
            Err(Error::NotOneVariable(2))
        );
        for deg in 1..=6 {
            for u in enumerate_monomials(&MultiDegree::single(deg), Flavor::Magma) {
                let phi = integrated_word(&u).unwrap();
                assert!(phi.derivative(1).is_zero());
                if !not_ending_in_x(&u) {
                    assert!(phi.is_zero(), "phi({u}) should vanish");
                } else {
                    assert_eq!(phi.leading_term().unwrap(), (u.clone(), q(1)));
                }
            }
        }
    }

    #[test]
    fn word_basis_spans_kernel() {
        assert!(one_var_constant_basis(2).is_empty());
        assert_eq!(one_var_constant_basis(3).len(), 1);
        assert_eq!(one_var_constant_basis(4).len(), 3);
        for deg in 0..=8 {
            let words = one_var_constant_basis(deg);
            let kernel = constants_basis(&MultiDegree::single(deg), Flavor::Magma);
            let mut a: SpanBasis<Monomial> = SpanBasis::new();
            for p in &words {
                assert!(a.insert(p.term_map()));
            }
            let mut b: SpanBasis<Monomial> = SpanBasis::new();
            for p in kernel.elements() {
                b.insert(p.term_map());
            }
            assert_eq!(a.rank(), b.rank());
            assert!(kernel.elements().iter().all(|p| a.contains(p.term_map())));
            assert!(words.iter().all(|p| b.contains(p.term_map())));
        }
    }

    #[test]
    fn word_basis_equals_echelon_basis() {
        // The echelon kernel basis has one element per word not ending in x,
        // and uniqueness of the echelon form forces it to be φ of that word.
        for deg in 0..=7 {
            let kernel = constants_basis(&MultiDegree::single(deg), Flavor::Magma);
            assert_eq!(kernel.into_elements(), one_var_constant_basis(deg));
        }
    }

    #[test]
    fn generator_census() {
        let g3 = free_generators(3);
        assert_eq!(g3.len(), 1);
        assert_eq!(g3.elements[0].word, n(x(), n(x(), x())));
        let g4 = free_generators(4);
        let words: Vec<_> = g4.elements.iter().map(|g| g.word.clone()).collect();
        assert_eq!(
            words,
            vec![
                n(n(x(), x()), n(x(), x())),
                n(x(), n(n(x(), x()), x())),
                n(x(), n(x(), n(x(), x()))),
            ]
        );
        let counts: Vec<usize> = (3..=7).map(|d| free_generators(d).len()).collect();
        assert_eq!(counts, vec![1, 3, 9, 27, 84]);
        assert!(free_generators(2).is_empty());
    }

    #[test]
    fn generator_spans() {
        let report = span_check_generators(6);
        assert!(report.pass(), "{report:?}");
        let row6 = &report.rows[6];
        assert_eq!((row6.products, row6.constants_dim), (28, 28));
        assert_eq!(report.rows[4].products, 3);
    }

    #[test]
    fn hilbert_identity_small() {
        for flavor in Flavor::ALL {
            let r = verify_hilbert_product(flavor, 2, 4);
            assert!(r.pass(), "{flavor}: {:?}", r.rows);
            assert_eq!(r.rows[0].component_dim, 1);
            assert_eq!(r.rows[0].constants_sum, 1);
        }
    }
}
