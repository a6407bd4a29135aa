//! Character table of S_5 by the Murnaghan–Nakayama rule.

use nalg::rep::{CharacterTable, Partition};

fn main() {
    let n = 5;
    let t = CharacterTable::new(n);
    let header: Vec<String> = t.partitions.iter().map(ToString::to_string).collect();
    println!("{:>12} {}", "", header.join(" "));
    for (i, lambda) in t.partitions.iter().enumerate() {
        let row: Vec<String> = (0..t.partitions.len())
            .map(|j| format!("{:>w$}", t.value(i, j), w = header[j].len()))
            .collect();
        println!("{:>12} {}", lambda.to_string(), row.join(" "));
    }
    let sizes: Vec<String> = Partition::all(n).iter().map(|mu| mu.class_size().to_string()).collect();
    println!("class sizes: {}", sizes.join(" "));
}
