//! Left and right multiplication operators and their compositions, i.e.
//! elements of the multiplication algebra M(R).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Flavor, Var};
use crate::polynomial::{Polynomial, Q};

/// λ_u (`v ↦ uv`) or ρ_u (`v ↦ vu`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorAtom {
    Left(Polynomial),
    Right(Polynomial),
}

impl OperatorAtom {
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        match self {
            OperatorAtom::Left(u) => u.checked_mul(p),
            OperatorAtom::Right(u) => p.checked_mul(u),
        }
    }

    fn factor(&self) -> &Polynomial {
        match self {
            OperatorAtom::Left(u) | OperatorAtom::Right(u) => u,
        }
    }
}

/// A word of multiplication atoms, applied left to right to its argument.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiplicationOperator {
    atoms: Vec<OperatorAtom>,
}

impl MultiplicationOperator {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(atoms: Vec<OperatorAtom>) -> Self {
        MultiplicationOperator { atoms }
    }

    /// ρ_{x_k}^power.
    pub fn rho_pow(flavor: Flavor, k: Var, power: usize) -> Self {
        Self::new(vec![OperatorAtom::Right(Polynomial::var(flavor, k)); power])
    }

    pub fn atoms(&self) -> &[OperatorAtom] {
        &self.atoms
    }

    pub fn then(mut self, atom: OperatorAtom) -> Self {
        self.atoms.push(atom);
        self
    }

    pub fn compose(&self, next: &MultiplicationOperator) -> Self {
        let mut atoms = self.atoms.clone();
        atoms.extend(next.atoms.iter().cloned());
        Self::new(atoms)
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        self.atoms
            .iter()
            .try_fold(p.clone(), |acc, atom| atom.apply(&acc))
    }

    /// Value of the operator after substituting 1 for every variable.
    pub fn value_at_one(&self) -> Q {
        self.atoms
            .iter()
            .fold(Q::one(), |acc, a| acc * a.factor().value_at_one())
    }
}

/// A rational linear combination of operator words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OperatorSum {
    terms: Vec<(Q, MultiplicationOperator)>,
}

impl OperatorSum {
    pub fn identity() -> Self {
        Self::single(MultiplicationOperator::identity())
    }

    pub fn single(op: MultiplicationOperator) -> Self {
        OperatorSum {
            terms: vec![(Q::one(), op)],
        }
    }

    pub fn new(terms: Vec<(Q, MultiplicationOperator)>) -> Self {
        OperatorSum { terms }
    }

    pub fn terms(&self) -> &[(Q, MultiplicationOperator)] {
        &self.terms
    }

    /// `self` followed by `next`, expanded bilinearly.
    pub fn compose(&self, next: &OperatorSum) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * next.terms.len());
        for (a, u) in &self.terms {
            for (b, v) in &next.terms {
                terms.push((a * b, u.compose(v)));
            }
        }
        OperatorSum { terms }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero(p.flavor());
        for (c, op) in &self.terms {
            if c.is_zero() {
                continue;
            }
            out.add_scaled(&op.apply(p)?, c);
        }
        Ok(out)
    }

    pub fn value_at_one(&self) -> Q {
        self.terms
            .iter()
            .fold(Q::zero(), |acc, (c, op)| acc + c * op.value_at_one())
    }
}

/// Checks that an operator sum is usable as μ_{jk}.
pub(crate) fn check_family_member(op: &OperatorSum, var: Var, degree: usize) -> Result<Q> {
    let v = op.value_at_one();
    if v.is_zero() {
        return Err(Error::InvalidFamily { var, degree });
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::polynomial::q;

    #[test]
    fn atoms_and_words() {
        let fl = Flavor::Magma;
        let x = Polynomial::var(fl, 1);
        let rho = MultiplicationOperator::new(vec![OperatorAtom::Right(x.clone())]);
        let lam = MultiplicationOperator::new(vec![OperatorAtom::Left(x.clone())]);
        let xx = rho.apply(&x).unwrap();
        assert_eq!(xx, Polynomial::monomial(fl, Monomial::node(Monomial::var(1), Monomial::var(1))));
        let x_xx = lam.apply(&xx).unwrap();
        assert_eq!(x_xx, &x * &xx);
        let cube = MultiplicationOperator::rho_pow(fl, 1, 3)
            .apply(&Polynomial::one(fl))
            .unwrap();
        assert_eq!(cube, Polynomial::monomial(fl, Monomial::left_normed(&[1, 1, 1])));
        assert_eq!(MultiplicationOperator::identity().apply(&x_xx).unwrap(), x_xx);
    }

    #[test]
    fn flavor_mismatch_is_an_error() {
        let op = MultiplicationOperator::rho_pow(Flavor::Commutative, 1, 1);
        assert!(op.apply(&Polynomial::var(Flavor::Magma, 1)).is_err());
    }

    #[test]
    fn jordan_operator() {
        let fl = Flavor::Associative;
        let x = Polynomial::var(fl, 1);
        let base = OperatorSum::new(vec![
            (q(1), MultiplicationOperator::new(vec![OperatorAtom::Left(x.clone())])),
            (q(1), MultiplicationOperator::new(vec![OperatorAtom::Right(x.clone())])),
        ]);
        let one = Polynomial::one(fl);
        assert_eq!(base.apply(&one).unwrap(), x.scale(&q(2)));
        assert_eq!(base.pow(2).apply(&one).unwrap(), (&x * &x).scale(&q(4)));
        assert_eq!(base.pow(3).value_at_one(), q(8));
        let diff = OperatorSum::new(vec![
            (q(1), MultiplicationOperator::new(vec![OperatorAtom::Left(x.clone())])),
            (q(-1), MultiplicationOperator::new(vec![OperatorAtom::Right(x)])),
        ]);
        assert!(check_family_member(&diff, 1, 1).is_err());
    }
}
