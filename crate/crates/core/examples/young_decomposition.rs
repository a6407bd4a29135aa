//! Multilinear constants as S_k-modules, by characters and by Pieri's rule.

use nalg::rep::{constants_decomposition, pieri_row, Decomposition, Method, Partition};
use nalg::Flavor;

fn main() -> Result<(), nalg::Error> {
    for flavor in [Flavor::Magma, Flavor::Commutative] {
        for k in 2..=5 {
            let kernel = constants_decomposition(k, flavor, Method::Kernel)?;
            let recursion = constants_decomposition(k, flavor, Method::Recursion)?;
            assert_eq!(kernel, recursion);
            println!("{flavor} C^({k}) = {kernel}   (dim {})", kernel.dimension());
        }
    }
    let sign = Decomposition::from_pairs(2, [(Partition::new(vec![1, 1])?, 1)]);
    println!("[1,1] x row(2) = {}", pieri_row(&sign, 2));
    Ok(())
}
