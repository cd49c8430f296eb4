//! Closed-form string datum against greedy raising along the long word.

use gtcrystal::crystal::{string_datum_along, Direction, GtpCrystal};
use gtcrystal::gtpattern::{datum_position, enumerate_patterns, long_word, string_datum};
use gtcrystal::Partition;

fn main() -> gtcrystal::Result<()> {
    let n = 3;
    let word = long_word(n);
    println!("word {word:?}");
    let model = GtpCrystal::new(n);
    for p in enumerate_patterns(n, &Partition::new(vec![2, 1])?)? {
        let closed = string_datum(&p);
        let raised = string_datum_along(&model, &p, &word, Direction::Raise)?;
        let aligned: Vec<i64> = {
            let mut v = vec![0; raised.len()];
            for (&(i, j), &d) in &closed.d {
                v[datum_position(i, j)] = d;
            }
            v
        };
        println!(
            "{:<14} closed {aligned:?}  raised {raised:?}",
            p.to_compact()
        );
        assert_eq!(aligned, raised);
    }
    Ok(())
}
