//! Parse expressions in the three flavors and take partial derivatives.

use nalg::expr::{parse_polynomial, polynomial_to_json};
use nalg::Flavor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = parse_polynomial("(x (x x))", Flavor::Magma)?;
    println!("d/dx {p} = {}", p.derivative(1));

    for flavor in Flavor::ALL {
        let q = parse_polynomial("(x2 x1) - 2*(x1 (x2 x1)) + 1/2", flavor)?;
        println!("{flavor:>12}: {q}");
        println!("{:>12}  d/dx1 = {}", "", q.derivative(1));
    }

    let r = parse_polynomial("-1/3*((x1 x2) x1)", Flavor::Associative)?;
    println!("{}", serde_json::to_string(&polynomial_to_json(&r))?);

    if let Err(e) = parse_polynomial("((x1)", Flavor::Magma) {
        println!("{e}");
    }
    Ok(())
}
