//! Patterns to tableaux and back, with the counting identities.

use gtcrystal::bijection::{check_counting_lemma, pattern_to_tableau, tableau_to_pattern};
use gtcrystal::gtpattern::enumerate_patterns;
use gtcrystal::Partition;

fn main() -> gtcrystal::Result<()> {
    let shape = Partition::new(vec![3, 1, 0])?;
    for p in enumerate_patterns(3, &shape)? {
        let t = pattern_to_tableau(&p)?;
        assert_eq!(tableau_to_pattern(&t)?, p);
        let violations = check_counting_lemma(&p)?.len();
        println!(
            "{:<16} <-> {:<10} counting violations: {violations}",
            p.to_compact(),
            t.to_compact()
        );
    }
    Ok(())
}
