//! t-partitions, t-branches and the fitting test on two trees that differ
//! only in where their branches hang.
//!
//!     cargo run --example fitting_partitions

use path_ideals::classify::{is_fitting, t_partition};
use path_ideals::samples::{deep_branches, three_arms};
use path_ideals::RootedTree;

fn show(name: &str, tree: &RootedTree, t: usize) -> path_ideals::Result<()> {
    println!("{name} (t = {t})");
    let Some(cert) = t_partition(tree, t)? else {
        println!("  not {t}-partitioned");
        return Ok(());
    };
    for (i, f) in cert.facets.iter().enumerate() {
        println!("  block {i}: {f}  Deg = {}", cert.deg_per_facet[i]);
    }
    for b in &cert.branches {
        println!(
            "  branch {} attaches at v{} in block {} ({}, level {})",
            b.path,
            b.attach_vertex,
            b.attach_facet,
            if b.initial { "initial" } else { "non-initial" },
            b.branch_level
        );
    }
    let verdict = is_fitting(tree, t)?;
    match verdict.failure_witness {
        Some(w) => println!("  not fitting: {w}"),
        None => println!("  fitting, so I_{t} is Cohen-Macaulay with m = {}", cert.m),
    }
    Ok(())
}

fn main() -> path_ideals::Result<()> {
    show("deep branches", &deep_branches(), 3)?;
    show("three arms", &three_arms(), 3)?;
    Ok(())
}
