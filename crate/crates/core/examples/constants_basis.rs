//! Bases of the algebra of constants per multidegree.

use nalg::constants::{constants_basis, integrated_word, one_var_constant_basis};
use nalg::series::gamma;
use nalg::{Flavor, MultiDegree};

fn main() {
    for flavor in Flavor::ALL {
        let b = constants_basis(&MultiDegree::new(vec![1, 1]), flavor);
        println!("{flavor} (1,1): {:?}", b.elements().iter().map(ToString::to_string).collect::<Vec<_>>());
    }

    let g = gamma(8);
    for (n, gn) in g.iter().enumerate() {
        let b = constants_basis(&MultiDegree::single(n), Flavor::Magma);
        println!("degree {n}: dim {} (gamma {gn})", b.len());
    }

    for p in one_var_constant_basis(4) {
        println!("phi: {p}");
    }
    let word = nalg::expr::parse_monomial("((x x) (x x))", Flavor::Magma).expect("valid word");
    println!("phi{word} = {}", integrated_word(&word).expect("one variable"));
}
