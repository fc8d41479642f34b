//! Seeded random corpus, every valid t, all oracles.
//!
//!     cargo run --release --example cross_validation -- [count] [n_max] [seed]

use path_ideals::oracles::all_instances;
use path_ideals::{cross_validate, RootedTree};

fn main() -> path_ideals::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let count = args.first().copied().unwrap_or(200) as usize;
    let n_max = args.get(1).copied().unwrap_or(12) as usize;
    let seed = args.get(2).copied().unwrap_or(0);

    let trees = RootedTree::random_corpus(count, n_max, seed)?;
    let result = cross_validate(&all_instances(&trees));
    for r in result.divergent() {
        println!(
            "divergence on {} with t = {}: {:?}",
            serde_json::to_string(&r.tree).expect("serializes"),
            r.t,
            r.divergences
        );
    }
    let s = &result.summary;
    println!("instances        {}", s.instances);
    println!("agreements       {}", s.agreements);
    println!("zero ideals      {}", s.zero_ideal);
    println!("cohen-macaulay   {}", s.cohen_macaulay);
    println!("gorenstein       {}", s.gorenstein);
    println!("guard breaches   {}", s.guard_breaches);
    println!("divergences      {}", s.divergences);
    Ok(())
}
