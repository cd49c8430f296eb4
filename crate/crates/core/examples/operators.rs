//! Diamond sums, string lengths and operators on one pattern.

use gtcrystal::gtpattern::{
    diamond_a, epsilon_gtp, lower_gtp, phi_gtp, raise_gtp, sum_a, validate_pattern, weight_gtp,
};

fn main() -> gtcrystal::Result<()> {
    let p = validate_pattern(3, vec![vec![3, 1, 0], vec![3, 1], vec![2]])?;
    println!("{}\n", p.to_triangle());
    println!("weight {}", weight_gtp(&p));

    for i in 1..p.n() {
        for j in 1..=i {
            println!(
                "a({i},{j}) = {:>2}   A({i},{j}) = {:>2}",
                diamond_a(&p, i, j)?,
                sum_a(&p, i, j)?
            );
        }
        println!(
            "phi_{i} = {}, epsilon_{i} = {}",
            phi_gtp(&p, i)?,
            epsilon_gtp(&p, i)?
        );
        match lower_gtp(&p, i)? {
            Some(q) => println!("f_{i}:\n{}", q.to_triangle()),
            None => println!("f_{i}: none"),
        }
        match raise_gtp(&p, i)? {
            Some(q) => println!("e_{i}:\n{}", q.to_triangle()),
            None => println!("e_{i}: none"),
        }
        println!();
    }
    Ok(())
}
