//! Test-side oracles. They work from raw parent pointers and bitmasks and share
//! no code with the library's enumeration routines.

#![allow(dead_code)]

use path_ideals::{RootedTree, VertexSet};

/// Vertex sets of all directed paths with `t` vertices, found by walking up
/// from every vertex.
pub fn brute_paths(tree: &RootedTree, t: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for v in tree.vertices().iter() {
        let mut mask = 1u64 << (v - 1);
        let mut cur = v;
        let mut len = 1;
        while len < t {
            match tree.parent(cur) {
                Some(p) => {
                    mask |= 1u64 << (p - 1);
                    cur = p;
                    len += 1;
                }
                None => break,
            }
        }
        if len == t {
            out.push(mask);
        }
    }
    out.sort_unstable();
    out
}

fn covers_all(mask: u64, facets: &[u64]) -> bool {
    facets.iter().all(|f| f & mask != 0)
}

/// Minimal vertex covers over the ground set `1..=n` by trying every subset.
pub fn brute_minimal_covers(facets: &[u64], n: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if covers_all(mask, facets)
            && (0..n).all(|i| mask & (1 << i) == 0 || !covers_all(mask & !(1 << i), facets))
        {
            out.push(mask);
        }
    }
    out.sort_unstable();
    out
}

pub fn brute_unmixed(facets: &[u64], n: usize) -> bool {
    let sizes: Vec<u32> = brute_minimal_covers(facets, n)
        .iter()
        .map(|c| c.count_ones())
        .collect();
    sizes.windows(2).all(|w| w[0] == w[1])
}

/// Maximal subsets of `1..=n` containing no generator.
pub fn brute_sr_facets(generators: &[u64], n: usize) -> Vec<u64> {
    let is_face = |m: u64| generators.iter().all(|g| g & m != *g);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if is_face(mask) && (0..n).all(|i| mask & (1 << i) != 0 || !is_face(mask | (1 << i))) {
            out.push(mask);
        }
    }
    out.sort_unstable();
    out
}

pub fn masks(sets: &[VertexSet]) -> Vec<u64> {
    let mut v: Vec<u64> = sets.iter().map(|s| s.bits()).collect();
    v.sort_unstable();
    v
}

/// `count` trees with `n_max` vertices at most, as used across the acceptance run.
pub fn corpus(count: usize, n_max: usize, seed: u64) -> Vec<RootedTree> {
    RootedTree::random_corpus(count, n_max, seed).expect("corpus")
}
