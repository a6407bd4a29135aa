//! Expansion against other operator families, e.g. μ_k = (λ_x + ρ_x)^k.

use nalg::expr::parse_polynomial;
use nalg::polynomial::{q, qf};
use nalg::taylor::{generalized_expand, generalized_reconstruct, OperatorFamily};
use nalg::Flavor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = parse_polynomial("(x (x x)) + 3*(x x)", Flavor::Magma)?;
    for family in [
        OperatorFamily::right_powers(),
        OperatorFamily::jordan(),
        OperatorFamily::linear_power(qf(1, 3), q(2))?,
    ] {
        let e = generalized_expand(&r, &family)?;
        println!("{}:", family.name());
        for (a, c) in &e {
            println!("  {a:?}: {c}");
        }
        assert_eq!(generalized_reconstruct(Flavor::Magma, &e, &family)?, r);
    }
    // (λ_x − ρ_x) kills 1, so it cannot serve as a family.
    println!("{:?}", OperatorFamily::linear_power(q(1), q(-1)).err());
    Ok(())
}
