//! Runs every check on all shapes up to a size bound.
//!
//!     cargo run --release --example verify_sweep -- 6 4

use gtcrystal::suite::verify_sweep;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let max_size: i64 = args.first().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let max_n: usize = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(3);

    let report = verify_sweep(max_size, max_n)?;
    for shape in &report.shapes {
        let failing: Vec<&str> = shape
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        println!(
            "n={} {:<12} {:>4} elements {:>4} edges  {}",
            shape.n,
            shape.shape.to_string(),
            shape.elements,
            shape.edges,
            if failing.is_empty() {
                "ok".to_string()
            } else {
                failing.join(", ")
            }
        );
    }
    println!(
        "{}",
        if report.pass {
            "all checks pass"
        } else {
            "FAILURES"
        }
    );
    Ok(())
}
