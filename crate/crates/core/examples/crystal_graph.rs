//! Writes the crystal graph of a shape as Graphviz.
//!
//!     cargo run --example crystal_graph > graph.dot && dot -Tsvg graph.dot -o graph.svg

use gtcrystal::bijection::pattern_to_tableau;
use gtcrystal::crystal::{build_graph, connectivity, GtpCrystal, SsytCrystal};
use gtcrystal::gtpattern::enumerate_patterns;
use gtcrystal::Partition;

fn main() -> gtcrystal::Result<()> {
    let tableaux = std::env::args().any(|a| a == "--ssyt");
    let shape = Partition::new(vec![3, 1, 0])?;
    let patterns = enumerate_patterns(3, &shape)?;
    let graph = if tableaux {
        let ts = patterns
            .iter()
            .map(pattern_to_tableau)
            .collect::<gtcrystal::Result<Vec<_>>>()?;
        build_graph(&SsytCrystal::new(3), &ts)?
    } else {
        build_graph(&GtpCrystal::new(3), &patterns)?
    };
    eprintln!(
        "{} vertices, {} edges, {} component(s)",
        graph.vertices.len(),
        graph.edges.len(),
        connectivity(&graph)
    );
    print!("{}", graph.to_dot());
    Ok(())
}
