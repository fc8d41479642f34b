//! Serialize a tree, its ideal and both complexes, then draw the tree.
//!
//!     cargo run --example export > tree.dot

use path_ideals::cli::tree_dot;
use path_ideals::samples::binary_eleven;
use path_ideals::{path_complex, path_ideal, SimplicialComplex};

fn main() -> path_ideals::Result<()> {
    let tree = binary_eleven();
    let t = 4;
    eprintln!("tree: {}", tree.to_json());
    eprintln!("ideal: {}", path_ideal(&tree, t)?.to_json());

    let facet = path_complex(&tree, t)?;
    let json = facet.to_json();
    eprintln!("facet complex: {json}");
    assert_eq!(SimplicialComplex::from_json(&json)?, facet);

    let sr = path_ideal(&tree, t)?.stanley_reisner_complex()?;
    eprintln!("stanley-reisner complex has {} facets", sr.facet_count());

    print!("{}", tree_dot(&tree, t)?);
    Ok(())
}
