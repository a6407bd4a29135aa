//! Exact linear algebra over ℚ.
//!
//! Sparse matrices are lists of rows, each row a column-sorted list of
//! nonzero entries. Elimination runs fraction-free over the integers (every
//! row is kept primitive), with columns taken in ascending order and the
//! sparsest candidate row chosen as pivot.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::polynomial::Q;

pub type SparseRow<T> = Vec<(usize, T)>;

/// Row echelon form of a sparse matrix.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    /// Pivot rows in ascending pivot column order; each row's first entry is
    /// its pivot and all its other columns are larger.
    pivots: Vec<SparseRow<BigInt>>,
    free: Vec<usize>,
}

impl Echelon {
    pub fn new(rows: Vec<SparseRow<Q>>, ncols: usize) -> Self {
        let mut buckets: Vec<Vec<SparseRow<BigInt>>> = vec![Vec::new(); ncols];
        for row in rows {
            let row = integral(row);
            if let Some(&(c, _)) = row.first() {
                assert!(c < ncols, "column {c} out of range");
                buckets[c].push(row);
            }
        }
        let mut pivots = Vec::new();
        let mut free = Vec::new();
        for c in 0..ncols {
            let mut cands = std::mem::take(&mut buckets[c]);
            if cands.is_empty() {
                free.push(c);
                continue;
            }
            let best = (0..cands.len()).min_by_key(|&i| cands[i].len()).unwrap();
            let pivot = cands.swap_remove(best);
            for row in cands {
                let reduced = eliminate(&row, &pivot);
                if let Some(&(lead, _)) = reduced.first() {
                    buckets[lead].push(reduced);
                }
            }
            pivots.push(pivot);
        }
        Echelon {
            ncols,
            pivots,
            free,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.iter().map(|r| r[0].0)
    }

    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    /// Kernel vector attached to the free column `f`: coefficient 1 at `f`,
    /// zero at every other free column.
    pub fn kernel_vector(&self, f: usize) -> SparseRow<Q> {
        let mut x: Vec<Q> = vec![Q::zero(); self.ncols];
        x[f] = Q::one();
        // Only pivots left of f can pick up a nonzero value.
        let end = self.pivots.partition_point(|r| r[0].0 < f);
        for row in self.pivots[..end].iter().rev() {
            let (p, lead) = &row[0];
            let mut total = Q::zero();
            for (c, a) in &row[1..] {
                let xc = &x[*c];
                if !xc.is_zero() {
                    total += xc * a;
                }
            }
            if !total.is_zero() {
                x[*p] = -total / Q::from_integer(lead.clone());
            }
        }
        x.into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// One kernel vector per free column, in ascending free column order.
    pub fn kernel(&self) -> Vec<SparseRow<Q>> {
        self.free.iter().map(|&f| self.kernel_vector(f)).collect()
    }
}

/// Clears denominators and removes the content, so the row is primitive.
fn integral(row: SparseRow<Q>) -> SparseRow<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut out: SparseRow<BigInt> = row
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
        .collect();
    out.sort_by_key(|(c, _)| *c);
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut SparseRow<BigInt>) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if g > BigInt::one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `b·row − a·pivot` where `a`, `b` are the leading entries; the leading
/// column cancels.
fn eliminate(row: &SparseRow<BigInt>, pivot: &SparseRow<BigInt>) -> SparseRow<BigInt> {
    let a = &row[0].1;
    let b = &pivot[0].1;
    let g = a.gcd(b);
    let (a, b) = (a / &g, b / &g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = pivot.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push((ci, &row[i].1 * &b));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&pivot[j].1 * &a)));
            j += 1;
        } else {
            let v = &row[i].1 * &b - &pivot[j].1 * &a;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    make_primitive(&mut out);
    out
}

/// Nullspace of a sparse matrix with `ncols` columns.
pub fn nullspace(rows: Vec<SparseRow<Q>>, ncols: usize) -> Vec<SparseRow<Q>> {
    Echelon::new(rows, ncols).kernel()
}

pub fn rank(rows: Vec<SparseRow<Q>>, ncols: usize) -> usize {
    Echelon::new(rows, ncols).rank()
}

type ReducedRow<K> = (BTreeMap<K, Q>, BTreeMap<usize, Q>);

/// Incrementally built basis of a span of vectors keyed by an ordered index
/// (typically monomials). Stored rows have pairwise distinct largest keys.
#[derive(Debug, Clone)]
pub struct SpanBasis<K: Ord + Clone> {
    /// leading key -> (reduced vector, combination of accepted inputs)
    rows: BTreeMap<K, ReducedRow<K>>,
    accepted: usize,
}

impl<K: Ord + Clone> Default for SpanBasis<K> {
    fn default() -> Self {
        SpanBasis {
            rows: BTreeMap::new(),
            accepted: 0,
        }
    }
}

impl<K: Ord + Clone> SpanBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` through every stored pivot, largest key first. Returns the
    /// remainder and the combination `c` with `v = remainder + Σ c_i input_i`.
    fn reduce(&self, v: &BTreeMap<K, Q>) -> (BTreeMap<K, Q>, BTreeMap<usize, Q>) {
        let mut rem = v.clone();
        let mut comb: BTreeMap<usize, Q> = BTreeMap::new();
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => rem.keys().next_back().cloned(),
                Some(c) => rem.range(..c.clone()).next_back().map(|(k, _)| k.clone()),
            };
            let Some(key) = next else { break };
            if let Some((row, rc)) = self.rows.get(&key) {
                let factor = &rem[&key] / &row[&key];
                for (k, a) in row {
                    let e = rem.entry(k.clone()).or_insert_with(Q::zero);
                    *e -= a * &factor;
                    if e.is_zero() {
                        rem.remove(k);
                    }
                }
                for (i, a) in rc {
                    let e = comb.entry(*i).or_insert_with(Q::zero);
                    *e += a * &factor;
                    if e.is_zero() {
                        comb.remove(i);
                    }
                }
            }
            cursor = Some(key);
        }
        (rem, comb)
    }

    /// Adds `v` if it is independent of the current span. Returns whether it
    /// was accepted; accepted vectors are numbered 0, 1, ... in order.
    pub fn insert(&mut self, v: &BTreeMap<K, Q>) -> bool {
        let (rem, comb) = self.reduce(v);
        let Some(lead) = rem.keys().next_back().cloned() else {
            return false;
        };
        let mut combination: BTreeMap<usize, Q> =
            comb.into_iter().map(|(i, a)| (i, -a)).collect();
        combination.insert(self.accepted, Q::one());
        self.accepted += 1;
        self.rows.insert(lead, (rem, combination));
        true
    }

    pub fn contains(&self, v: &BTreeMap<K, Q>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Coordinates of `v` with respect to the accepted inputs, if `v` lies in
    /// the span.
    pub fn express(&self, v: &BTreeMap<K, Q>) -> Option<Vec<Q>> {
        let (rem, comb) = self.reduce(v);
        if !rem.is_empty() {
            return None;
        }
        let mut out = vec![Q::zero(); self.accepted];
        for (i, a) in comb {
            out[i] = a;
        }
        Some(out)
    }
}

/// Solves the square system `a·x = b` exactly; `None` when singular.
pub fn solve_dense(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let inv = invert(a)?;
    Some(
        inv.iter()
            .map(|row| row.iter().zip(b).fold(Q::zero(), |acc, (r, v)| acc + r * v))
            .collect(),
    )
}

/// Gauss–Jordan inverse of a square matrix; `None` when singular.
pub fn invert(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (v, pv) in m[r].iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Dense rank, for small matrices.
pub fn dense_rank(a: &[Vec<Q>]) -> usize {
    let ncols = a.first().map_or(0, Vec::len);
    let rows = a
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect()
        })
        .collect();
    rank(rows, ncols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::{q, qf};
    use proptest::prelude::*;

    fn dense_to_sparse(a: &[Vec<i64>]) -> Vec<SparseRow<Q>> {
        a.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(|(c, v)| (c, q(*v)))
                    .collect()
            })
            .collect()
    }

    fn apply(a: &[Vec<i64>], x: &SparseRow<Q>) -> Vec<Q> {
        a.iter()
            .map(|r| x.iter().fold(Q::zero(), |acc, (c, v)| acc + q(r[*c]) * v))
            .collect()
    }

    #[test]
    fn small_kernel() {
        // d/dx on span{(xx)x, x(xx)} -> span{xx}: both map to 3(xx)
        let a = vec![vec![3, 3]];
        let k = nullspace(dense_to_sparse(&a), 2);
        assert_eq!(k, vec![vec![(0, q(-1)), (1, q(1))]]);
    }

    #[test]
    fn rational_entries_and_free_columns() {
        let rows = vec![vec![(0, qf(1, 2)), (2, qf(1, 3))], vec![(1, q(2))]];
        let e = Echelon::new(rows, 4);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.free_columns(), &[2, 3]);
        assert_eq!(e.kernel_vector(2), vec![(0, qf(-2, 3)), (2, q(1))]);
        assert_eq!(e.kernel_vector(3), vec![(3, q(1))]);
    }

    #[test]
    fn span_basis_expresses() {
        let v = |pairs: &[(u8, i64)]| -> BTreeMap<u8, Q> {
            pairs.iter().map(|(k, c)| (*k, q(*c))).collect()
        };
        let mut sb = SpanBasis::new();
        assert!(sb.insert(&v(&[(0, 1), (1, 1)])));
        assert!(sb.insert(&v(&[(1, 1), (2, 1)])));
        assert!(!sb.insert(&v(&[(0, 1), (2, -1)])));
        assert_eq!(sb.rank(), 2);
        let coords = sb.express(&v(&[(0, 2), (1, 5), (2, 3)])).unwrap();
        assert_eq!(coords, vec![q(2), q(3)]);
        assert!(sb.express(&v(&[(2, 1)])).is_none());
    }

    #[test]
    fn inverse() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = invert(&a).unwrap();
        assert_eq!(inv, vec![vec![q(1), q(-1)], vec![q(-1), q(2)]]);
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
        assert_eq!(solve_dense(&a, &[q(3), q(2)]).unwrap(), vec![q(1), q(1)]);
    }

    proptest! {
        #[test]
        fn rank_nullity(a in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 1..6)) {
            let e = Echelon::new(dense_to_sparse(&a), 6);
            let k = e.kernel();
            prop_assert_eq!(e.rank() + k.len(), 6);
            for v in &k {
                prop_assert!(apply(&a, v).iter().all(Zero::is_zero));
            }
            // kernel vectors are independent: each owns its free column
            for (i, f) in e.free_columns().iter().enumerate() {
                for (j, v) in k.iter().enumerate() {
                    let at = v.iter().find(|(c, _)| c == f).map(|(_, x)| x.clone()).unwrap_or_else(Q::zero);
                    prop_assert_eq!(at, if i == j { q(1) } else { q(0) });
                }
            }
            let dense: Vec<Vec<Q>> = a.iter().map(|r| r.iter().map(|v| q(*v)).collect()).collect();
            prop_assert_eq!(dense_rank(&dense), e.rank());
        }
    }
}
