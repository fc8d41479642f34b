//! Classify I_4 of the eleven-vertex sample step by step.
//!
//!     cargo run --example walkthrough

use path_ideals::classify::{clean, is_fitting, leaf_facet_candidates};
use path_ideals::samples::binary_eleven;
use path_ideals::{classify, path_complex, path_ideal};

fn main() -> path_ideals::Result<()> {
    let tree = binary_eleven();
    let t = 4;

    let ideal = path_ideal(&tree, t)?;
    println!("I_{t} = {ideal}");

    let cleaned = clean(&tree, t)?;
    println!("cleaning removes {}", cleaned.removed);
    println!("leaves after cleaning: {}", cleaned.tree.leaves());

    for leaf in cleaned.tree.leaves().iter().filter(|&v| v != tree.root()) {
        if let Some(p) = cleaned.tree.path_ending_at(leaf, t) {
            println!("  leaf {leaf} forces {p}");
        }
    }
    for candidate in leaf_facet_candidates(&cleaned.tree, t) {
        let shown: Vec<String> = candidate.iter().map(|p| p.to_string()).collect();
        println!("candidate leaf facets: {}", shown.join(" "));
    }

    let verdict = is_fitting(&tree, t)?;
    match &verdict.failure_witness {
        Some(w) => println!("not fitting: {w}"),
        None => println!("fitting"),
    }

    let delta = path_complex(&tree, t)?;
    println!(
        "covering number {} with minimal covers {:?}",
        delta.covering_number()?,
        delta
            .minimal_vertex_covers()?
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );

    let report = classify(&tree, t)?;
    println!(
        "cohen_macaulay = {}, gorenstein = {}, height = {}, krull_dim = {}",
        report.cohen_macaulay, report.gorenstein, report.height, report.krull_dim
    );
    Ok(())
}
