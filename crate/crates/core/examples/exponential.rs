//! The non-associative exponential E(x).

use nalg::ode::{check_exponential, nonassoc_exponential};

fn main() -> Result<(), nalg::Error> {
    let e = nonassoc_exponential(6);
    print!("{e}");
    let check = check_exponential(&e)?;
    println!("E' = E, E(0) = 1, E(x)E(x) = E(2x): {}", check.pass());
    Ok(())
}
