//! The simplicial complex toolkit on its own: faces, links, cores, covers,
//! matchings and clutter cycles.
//!
//!     cargo run --example complex_toolkit

use path_ideals::{SimplicialComplex, VertexSet};

fn set(v: &[u32]) -> VertexSet {
    v.iter().collect()
}

fn show(facets: &[VertexSet]) -> String {
    facets
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> path_ideals::Result<()> {
    let delta = SimplicialComplex::from_facets([set(&[1, 2, 3]), set(&[2, 3, 4]), set(&[4, 5])]);
    println!("facets: {}", show(delta.facets()));
    println!("dimension {}, pure {}", delta.dimension(), delta.is_pure());
    println!("f-vector {:?}", delta.f_vector()?.0);
    println!(
        "reduced Euler characteristic {}",
        delta.reduced_euler_characteristic()?
    );
    println!(
        "link of {{2,3}}: {}",
        show(delta.link(set(&[2, 3]))?.facets())
    );
    println!("star of {{4}}: {}", show(delta.star(set(&[4]))?.facets()));
    println!("free vertices {}", delta.free_vertices());
    println!("simplicial tree {}", delta.is_simplicial_tree()?);
    println!(
        "minimal vertex covers {:?}",
        delta
            .minimal_vertex_covers()?
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
    );
    println!(
        "covering number {}, disjoint facets {}",
        delta.covering_number()?,
        delta.max_disjoint_facets()?
    );

    let cone = SimplicialComplex::from_facets([set(&[1, 2, 9]), set(&[2, 3, 9])]);
    println!(
        "cone points {} and core {}",
        cone.cone_points(),
        show(cone.core().facets())
    );

    let triangle = SimplicialComplex::from_facets([set(&[1, 2]), set(&[2, 3]), set(&[1, 3])]);
    match triangle.find_clutter_cycle(3)? {
        Some(c) => println!("triangle has a clutter cycle through {}", show(&c.facets)),
        None => println!("triangle has no clutter cycle"),
    }
    println!(
        "triangle totally balanced {}",
        triangle.is_totally_balanced()?
    );
    println!("as JSON: {}", triangle.to_json());
    Ok(())
}
