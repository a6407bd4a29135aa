//! The free generating set of the one-variable magma constants.

use nalg::constants::{free_generators, span_check_generators};
use nalg::series::generators;

fn main() {
    let g = generators(7);
    for (n, gn) in g.iter().enumerate().skip(3) {
        let set = free_generators(n);
        println!("degree {n}: {} generators (g_n = {gn})", set.len());
    }
    for gen in &free_generators(4).elements {
        let forms: Vec<String> = gen.forms.iter().map(ToString::to_string).collect();
        println!("  {} [{}] -> {}", gen.word, forms.join(", "), gen.element);
    }
    let report = span_check_generators(6);
    for row in &report.rows {
        println!(
            "degree {}: {} products, rank {}, constants {}",
            row.degree, row.products, row.rank, row.constants_dim
        );
    }
    println!("span check: {}", if report.pass() { "ok" } else { "FAILED" });
}
