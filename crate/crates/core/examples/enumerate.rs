//! Lists the patterns of a shape and checks the count against the Weyl
//! dimension formula.
//!
//!     cargo run --example enumerate -- 3 3,1,0

use gtcrystal::gtpattern::enumerate_patterns;
use gtcrystal::partition::weyl_dimension;
use gtcrystal::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let parts: Vec<i64> = match args.get(1) {
        Some(s) => s.split(',').map(str::parse).collect::<Result<_, _>>()?,
        None => vec![3, 1, 0],
    };
    let shape = Partition::new(parts)?;

    let patterns = enumerate_patterns(n, &shape)?;
    for p in &patterns {
        println!("{}\n", p.to_triangle());
    }
    println!(
        "{} patterns, Weyl dimension {}",
        patterns.len(),
        weyl_dimension(n, &shape)?
    );
    Ok(())
}
