//! Taylor expansion r = Σ r_a ρ_1^{a_1}⋯ρ_m^{a_m} with constant r_a, and back.

use nalg::expr::parse_polynomial;
use nalg::taylor::{taylor_expand, taylor_reconstruct};
use nalg::Flavor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (flavor, src) in [
        (Flavor::Magma, "(x (x x))"),
        (Flavor::Magma, "(x1 (x2 x1))"),
        (Flavor::Associative, "((x2 x1) x1)"),
        (Flavor::Commutative, "((x1 x1) (x2 x2))"),
    ] {
        let r = parse_polynomial(src, flavor)?;
        let e = taylor_expand(&r);
        println!("{flavor} {r}:");
        print!("{e}");
        assert_eq!(taylor_reconstruct(&e)?, r);
    }
    Ok(())
}
