//! y'' + y = 0 in the free magma algebra, and a root-based solution of
//! y'' − 2y' + y = 0 checked against the recursion.

use nalg::ode::{
    fit_constants, homogeneous_general_solution, solve_linear_ode, LinearODE, RootData, TruncatedElement,
};
use nalg::polynomial::q;
use nalg::{Flavor, Polynomial};

fn main() -> Result<(), nalg::Error> {
    let n = 8;
    let fl = Flavor::Magma;
    let one = TruncatedElement::from_polynomial(&Polynomial::one(fl), n)?;
    let zero = TruncatedElement::zero(fl, n);

    let cos = LinearODE::new(vec![q(0), q(1)], zero.clone(), vec![one.clone(), zero.clone()])?;
    let y = solve_linear_ode(&cos, n)?;
    print!("{}", y.materialize());
    assert!(cos.residual(&y.materialize())?.is_zero());

    let roots = RootData::from_roots(vec![(q(1), 2)])?;
    let ode = LinearODE::new(roots.coefficients().to_vec(), zero, vec![one.clone(), one])?;
    let by_recursion = solve_linear_ode(&ode, n)?;
    let c = fit_constants(&roots, ode.initial())?;
    let by_roots = homogeneous_general_solution(&roots, &c, n)?;
    println!("paths agree: {}", by_roots == by_recursion);
    print!("{by_roots}");
    Ok(())
}
