//! Gorenstein, complete intersection and matroid verdicts side by side with
//! the brute-force oracles.
//!
//!     cargo run --example gorenstein

use path_ideals::oracles::{ci_oracle, matroid_oracle, stanley_gorenstein_oracle};
use path_ideals::{classify, path_ideal, RootedTree};

fn main() -> path_ideals::Result<()> {
    let cases = [
        ("line of 3, t = 3", RootedTree::line(3)?, 3),
        ("line of 6, t = 3", RootedTree::line(6)?, 3),
        ("line of 4, t = 2", RootedTree::line(4)?, 2),
        (
            "chain with a spur, t = 3",
            RootedTree::new(1, &[(1, 2), (2, 3), (1, 4)])?,
            3,
        ),
        (
            "path of 5 rooted in the middle, t = 3",
            RootedTree::line(5)?.reroot(3)?,
            3,
        ),
    ];
    println!(
        "{:<40}{:>8}{:>10}{:>10}{:>10}{:>6}",
        "instance", "chain", "classify", "matroid", "stanley", "ci"
    );
    for (name, tree, t) in cases {
        let report = classify(&tree, t)?;
        let ideal = path_ideal(&tree, t)?;
        let matroid = matroid_oracle(&ideal)?;
        let stanley = stanley_gorenstein_oracle(&ideal, &tree, t)?;
        let ci = ci_oracle(&ideal);
        println!(
            "{name:<40}{:>8}{:>10}{:>10}{:>10}{:>6}",
            report.clean_is_t_chain,
            report.gorenstein,
            matroid.verdict,
            stanley.verdict,
            ci.verdict
        );
        if let Some(w) = matroid.witness {
            println!(
                "    matroid witness: {}",
                serde_json::to_string(&w).expect("serializes")
            );
        }
    }
    Ok(())
}
