//! Alexander-style duality between the facet complex of I_t and its
//! Stanley-Reisner complex: each facet of one is the complement of a
//! minimal vertex cover of the other.
//!
//!     cargo run --example stanley_reisner

use path_ideals::samples::three_arms;
use path_ideals::{path_complex, path_ideal, VertexSet};

fn main() -> path_ideals::Result<()> {
    let tree = three_arms();
    let t = 3;
    let ideal = path_ideal(&tree, t)?;
    let n = ideal.n();
    let sr = ideal.stanley_reisner_complex()?;
    let covers = path_complex(&tree, t)?.minimal_vertex_covers()?;

    println!("I_{t} = {ideal}");
    println!(
        "Stanley-Reisner complex: dimension {}, {} facets",
        sr.dimension(),
        sr.facet_count()
    );
    let mut complements = Vec::new();
    for cover in &covers {
        let facet = VertexSet::full(n).difference(*cover);
        println!("  cover {cover:<12} complement {facet}");
        complements.push(facet);
    }
    complements.sort();
    let mut facets = sr.facets().to_vec();
    facets.sort();
    println!("complements equal the facets: {}", facets == complements);
    println!(
        "height {} + dim {} + 1 = {}",
        ideal.height(),
        sr.dimension(),
        n
    );
    Ok(())
}
