//! Which path ideals of a line are Cohen-Macaulay. Prints an n by t table
//! and checks each entry against the cover-enumeration oracle.
//!
//!     cargo run --example line_table

use path_ideals::oracles::unmixed_oracle;
use path_ideals::{classify, RootedTree};

fn main() -> path_ideals::Result<()> {
    let n_max = 12;
    print!("  n\\t");
    for t in 2..=n_max {
        print!("{t:>3}");
    }
    println!();
    let mut mismatches = 0;
    for n in 2..=n_max {
        let line = RootedTree::line(n)?;
        print!("{n:>5}");
        for t in 2..=n {
            let cm = classify(&line, t)?.cohen_macaulay;
            if cm != unmixed_oracle(&line, t)?.verdict || cm != (t == n || 2 * t == n) {
                mismatches += 1;
            }
            print!("{:>3}", if cm { "CM" } else { "." });
        }
        println!();
    }
    println!("mismatches: {mismatches}");
    Ok(())
}
