//! Reading word, bracketing and operators on a tableau, by both routes.

use gtcrystal::ssyt::{
    bracket_columns, bracket_word, by_columns, far_east_reading, lower_ssyt, phi_ssyt,
    validate_tableau,
};
use gtcrystal::Partition;

fn main() -> gtcrystal::Result<()> {
    let shape = Partition::new(vec![5, 2, 2])?;
    let t = validate_tableau(4, &shape, vec![vec![1, 2, 2, 2, 3], vec![3, 3], vec![4, 4]])?;
    let word = far_east_reading(&t);
    println!("tableau  {t}");
    println!("word     {:?}", word.letters);

    let i = 2;
    let b = bracket_word(&word, i);
    let marked: Vec<String> = word
        .letters
        .iter()
        .enumerate()
        .map(|(k, v)| {
            if b.crossed.contains(&(k + 1)) {
                format!("({v})")
            } else {
                v.to_string()
            }
        })
        .collect();
    println!("{i}-bracketed {}", marked.join(" "));
    println!("phi_{i} = {}", phi_ssyt(&t, i)?);
    if let Some(lowered) = lower_ssyt(&t, i)? {
        println!("f_{i}      {lowered}");
    }

    let c = bracket_columns(&t, i)?;
    println!(
        "column route: free {i}s at {:?}, free {}s at {:?}",
        c.free_lower,
        i + 1,
        c.free_upper
    );
    println!(
        "column route f_{i} agrees: {}",
        by_columns::lower(&t, i)? == lower_ssyt(&t, i)?
    );
    Ok(())
}
