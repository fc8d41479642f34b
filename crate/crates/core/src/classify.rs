//! Combinatorial classification of path ideals of rooted trees.
//!
//! The pipeline is:
//!
//! 1. [`clean`] strips leaves sitting too high to end a `t`-path. The root is
//!    never removed. This does not change the generators of `I_t`.
//! 2. [`t_partition`] looks for leaf-carrying `t`-paths `F_1, ..., F_m` that
//!    split the vertex set of the clean form into disjoint blocks.
//! 3. [`t_branches`] lists the `(t+1)`-paths that touch a block only in
//!    their own top vertex. Their attachment points determine the degree of
//!    each block and whether the branch is initial.
//! 4. [`is_fitting`] accepts when every block has degree at most one and no
//!    non-initial branch attaches below level `t - 1`.
//!
//! A fitting tree has an unmixed (equivalently Cohen–Macaulay, equivalently
//! `S_r`) path ideal. The ideal is Gorenstein (equivalently a complete
//! intersection, or its Stanley–Reisner complex is a matroid, or all its powers
//! are Cohen–Macaulay) exactly when the clean form is a chain of `t` vertices.
//! [`classify`] packages these verdicts into a [`ClassificationReport`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ideal::path_ideal;
use crate::tree::{DirectedPath, RootedTree};
use crate::vertex_set::{VertexId, VertexSet};

/// Result of the cleaning process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleanForm {
    pub tree: RootedTree,
    pub removed: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TBranch {
    /// `t + 1` vertices, top first.
    pub path: DirectedPath,
    /// Index into [`TPartitionCertificate::facets`].
    pub attach_facet: usize,
    /// The single vertex the path shares with its block; also its top vertex.
    pub attach_vertex: VertexId,
    /// The attach vertex is the top vertex of its block.
    pub initial: bool,
    pub branch_level: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TPartitionCertificate {
    pub facets: Vec<DirectedPath>,
    pub m: usize,
    pub branches: Vec<TBranch>,
    pub deg_per_facet: Vec<usize>,
    pub deg_gamma: usize,
}

/// Why a tree is not fitting `t`-partitioned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FailureWitness {
    /// No path with `t` vertices exists.
    ZeroIdeal,
    /// A leaf of the clean form lies on no `t`-path.
    LeafWithoutFacet { leaf: VertexId },
    /// Two leaf facets share vertices.
    OverlappingFacets {
        first: DirectedPath,
        second: DirectedPath,
        shared: VertexSet,
    },
    /// The leaf facets are disjoint but miss some vertices.
    UncoveredVertices { vertices: VertexSet },
    /// A block has more than one attach vertex.
    DegreeTooLarge {
        facet: DirectedPath,
        attach_vertices: VertexSet,
    },
    /// A non-initial branch attaches deeper than level `t - 1`.
    BranchTooDeep {
        branch: DirectedPath,
        attach_vertex: VertexId,
        level: usize,
        bound: usize,
    },
}

impl FailureWitness {
    /// Failures of the partition step, as opposed to the fitting clauses.
    pub fn is_partition_failure(&self) -> bool {
        !matches!(
            self,
            FailureWitness::DegreeTooLarge { .. } | FailureWitness::BranchTooDeep { .. }
        )
    }
}

impl fmt::Display for FailureWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureWitness::ZeroIdeal => write!(f, "no directed path of the requested length"),
            FailureWitness::LeafWithoutFacet { leaf } => {
                write!(f, "leaf {leaf} lies on no path of the requested length")
            }
            FailureWitness::OverlappingFacets {
                first,
                second,
                shared,
            } => write!(
                f,
                "not partitioned: leaf facets {first} and {second} share {shared}"
            ),
            FailureWitness::UncoveredVertices { vertices } => {
                write!(f, "not partitioned: leaf facets miss {vertices}")
            }
            FailureWitness::DegreeTooLarge {
                facet,
                attach_vertices,
            } => write!(
                f,
                "degree {} > 1: branches attach to {facet} at {attach_vertices}",
                attach_vertices.len()
            ),
            FailureWitness::BranchTooDeep {
                branch,
                attach_vertex,
                level,
                bound,
            } => write!(
                f,
                "non-initial branch {branch} attaches at {attach_vertex} on level {level} > {bound}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FittingVerdict {
    pub fitting: bool,
    pub certificate: Option<TPartitionCertificate>,
    pub failure_witness: Option<FailureWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub t: usize,
    pub generators: Vec<String>,
    pub zero_ideal: bool,
    pub clean_removed: VertexSet,
    pub clean_is_t_chain: bool,
    pub partitioned: bool,
    pub fitting: bool,
    pub certificate: Option<TPartitionCertificate>,
    pub failure_witness: Option<FailureWitness>,
    pub unmixed: bool,
    pub cohen_macaulay: bool,
    pub serre_sr: bool,
    pub gorenstein: bool,
    pub complete_intersection: bool,
    pub matroid: bool,
    pub all_powers_cm: bool,
    pub height: usize,
    pub krull_dim: usize,
    pub depth: Option<usize>,
    pub proj_dim: Option<usize>,
}

/// Repeatedly deletes non-root leaves on levels below `t - 1`.
pub fn clean(tree: &RootedTree, t: usize) -> Result<CleanForm> {
    tree.check_t(t)?;
    let mut current = tree.clone();
    let mut removed = VertexSet::EMPTY;
    loop {
        if current.n() == 1 {
            break;
        }
        let doomed: VertexSet = current
            .leaves()
            .iter()
            .filter(|&v| v != current.root() && current.level_of(v) + 1 < t)
            .collect();
        if doomed.is_empty() {
            break;
        }
        removed = removed.union(doomed);
        current = current.induced(current.vertices().difference(doomed))?;
    }
    Ok(CleanForm {
        tree: current,
        removed,
    })
}

/// Candidate lists of leaf facets. Each non-root leaf forces the `t`-path ending
/// at it. A root that is a leaf and not yet covered gets one candidate per
/// `t`-path leaving it. Empty when some leaf lies on no `t`-path.
pub fn leaf_facet_candidates(clean_tree: &RootedTree, t: usize) -> Vec<Vec<DirectedPath>> {
    let root = clean_tree.root();
    let mut mandatory = Vec::new();
    for leaf in clean_tree.leaves() {
        if leaf == root {
            continue;
        }
        match clean_tree.path_ending_at(leaf, t) {
            Some(p) => mandatory.push(p),
            None => return Vec::new(),
        }
    }
    let root_is_leaf = clean_tree.leaves().contains(root);
    if !root_is_leaf || mandatory.iter().any(|p| p.contains(root)) {
        mandatory.sort();
        return vec![mandatory];
    }
    clean_tree
        .paths_starting_at(root, t)
        .into_iter()
        .map(|p| {
            let mut list = mandatory.clone();
            list.push(p);
            list.sort();
            list
        })
        .collect()
}

/// `(t+1)`-paths meeting some block exactly in their top vertex.
pub fn t_branches(clean_tree: &RootedTree, t: usize, facets: &[DirectedPath]) -> Vec<TBranch> {
    let sets: Vec<VertexSet> = facets.iter().map(DirectedPath::to_set).collect();
    let mut branches = Vec::new();
    for path in clean_tree.paths_with(t + 1) {
        let x = path.first();
        let p = path.to_set();
        for (i, block) in sets.iter().enumerate() {
            if block.contains(x) && p.intersection(*block) == VertexSet::singleton(x) {
                branches.push(TBranch {
                    attach_facet: i,
                    attach_vertex: x,
                    initial: facets[i].first() == x,
                    branch_level: clean_tree.level_of(x),
                    path: path.clone(),
                });
            }
        }
    }
    branches
}

struct Analysis {
    clean: CleanForm,
    zero_ideal: bool,
    partition: std::result::Result<TPartitionCertificate, FailureWitness>,
}

fn analyse(tree: &RootedTree, t: usize) -> Result<Analysis> {
    let clean = clean(tree, t)?;
    let facets = clean.tree.paths_with(t);
    if facets.is_empty() {
        return Ok(Analysis {
            clean,
            zero_ideal: true,
            partition: Err(FailureWitness::ZeroIdeal),
        });
    }
    let support = facets
        .iter()
        .fold(VertexSet::EMPTY, |acc, p| acc.union(p.to_set()));
    let candidates = leaf_facet_candidates(&clean.tree, t);

    let mut first_failure = None;
    for candidate in &candidates {
        match check_partition(candidate, support) {
            Ok(()) => {
                let cert = certificate(&clean.tree, t, candidate.clone());
                return Ok(Analysis {
                    clean,
                    zero_ideal: false,
                    partition: Ok(cert),
                });
            }
            Err(w) => {
                first_failure.get_or_insert(w);
            }
        }
    }
    let failure = first_failure.unwrap_or_else(|| {
        let leaf = clean
            .tree
            .leaves()
            .iter()
            .find(|&l| !facets.iter().any(|p| p.contains(l)))
            .expect("no candidates means some leaf is on no t-path");
        FailureWitness::LeafWithoutFacet { leaf }
    });
    Ok(Analysis {
        clean,
        zero_ideal: false,
        partition: Err(failure),
    })
}

fn check_partition(
    candidate: &[DirectedPath],
    support: VertexSet,
) -> std::result::Result<(), FailureWitness> {
    let sets: Vec<VertexSet> = candidate.iter().map(DirectedPath::to_set).collect();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let shared = sets[i].intersection(sets[j]);
            if !shared.is_empty() {
                return Err(FailureWitness::OverlappingFacets {
                    first: candidate[i].clone(),
                    second: candidate[j].clone(),
                    shared,
                });
            }
        }
    }
    let covered = sets.iter().fold(VertexSet::EMPTY, |acc, s| acc.union(*s));
    if covered != support {
        return Err(FailureWitness::UncoveredVertices {
            vertices: support.difference(covered),
        });
    }
    Ok(())
}

fn certificate(
    clean_tree: &RootedTree,
    t: usize,
    facets: Vec<DirectedPath>,
) -> TPartitionCertificate {
    let branches = t_branches(clean_tree, t, &facets);
    let deg_per_facet: Vec<usize> = (0..facets.len())
        .map(|i| {
            branches
                .iter()
                .filter(|b| b.attach_facet == i)
                .map(|b| b.attach_vertex)
                .collect::<VertexSet>()
                .len()
        })
        .collect();
    TPartitionCertificate {
        m: facets.len(),
        deg_gamma: deg_per_facet.iter().copied().max().unwrap_or(0),
        facets,
        branches,
        deg_per_facet,
    }
}

/// The partition certificate, or `None` when the tree is not `t`-partitioned
/// (including when the ideal is zero).
pub fn t_partition(tree: &RootedTree, t: usize) -> Result<Option<TPartitionCertificate>> {
    Ok(analyse(tree, t)?.partition.ok())
}

fn fitting_failure(cert: &TPartitionCertificate, t: usize) -> Option<FailureWitness> {
    if let Some(i) = cert.deg_per_facet.iter().position(|&d| d > 1) {
        return Some(FailureWitness::DegreeTooLarge {
            facet: cert.facets[i].clone(),
            attach_vertices: cert
                .branches
                .iter()
                .filter(|b| b.attach_facet == i)
                .map(|b| b.attach_vertex)
                .collect(),
        });
    }
    cert.branches
        .iter()
        .find(|b| !b.initial && b.branch_level > t - 1)
        .map(|b| FailureWitness::BranchTooDeep {
            branch: b.path.clone(),
            attach_vertex: b.attach_vertex,
            level: b.branch_level,
            bound: t - 1,
        })
}

/// Fitting `t`-partitioned test with the first violated clause on failure.
pub fn is_fitting(tree: &RootedTree, t: usize) -> Result<FittingVerdict> {
    let analysis = analyse(tree, t)?;
    Ok(verdict_from(analysis.partition, t))
}

fn verdict_from(
    partition: std::result::Result<TPartitionCertificate, FailureWitness>,
    t: usize,
) -> FittingVerdict {
    match partition {
        Err(w) => FittingVerdict {
            fitting: false,
            certificate: None,
            failure_witness: Some(w),
        },
        Ok(cert) => {
            let failure = fitting_failure(&cert, t);
            FittingVerdict {
                fitting: failure.is_none(),
                certificate: Some(cert),
                failure_witness: failure,
            }
        }
    }
}

/// Structural test for a chain, ignoring labels.
pub fn is_line(tree: &RootedTree) -> bool {
    tree.is_line()
}

/// Every verdict derivable from the combinatorial characterizations.
///
/// The zero ideal (no `t`-path at all) is reported with `zero_ideal = true`,
/// `partitioned = fitting = false`, and every ring-theoretic flag set, since
/// `R/(0)` is a polynomial ring.
pub fn classify(tree: &RootedTree, t: usize) -> Result<ClassificationReport> {
    let ideal = path_ideal(tree, t)?;
    let analysis = analyse(tree, t)?;
    let zero_ideal = analysis.zero_ideal;
    let partitioned = analysis.partition.is_ok();
    let clean_tree = &analysis.clean.tree;
    let clean_is_t_chain = clean_tree.is_line() && clean_tree.n() == t;
    let clean_removed = analysis.clean.removed;
    let verdict = verdict_from(analysis.partition, t);

    let n = tree.n();
    let height = ideal.height();
    let unmixed = zero_ideal || verdict.fitting;
    let gorenstein = zero_ideal || clean_is_t_chain;
    let m = verdict.certificate.as_ref().map_or(0, |c| c.m);
    let (depth, proj_dim) = if unmixed {
        (Some(n - m), Some(m))
    } else {
        (None, None)
    };

    Ok(ClassificationReport {
        n,
        t,
        generators: ideal.monomials(),
        zero_ideal,
        clean_removed,
        clean_is_t_chain,
        partitioned,
        fitting: verdict.fitting,
        certificate: verdict.certificate,
        failure_witness: verdict.failure_witness,
        unmixed,
        cohen_macaulay: unmixed,
        serre_sr: unmixed,
        gorenstein,
        complete_intersection: gorenstein,
        matroid: gorenstein,
        all_powers_cm: gorenstein,
        height,
        krull_dim: n - height,
        depth,
        proj_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[VertexId]) -> VertexSet {
        v.iter().collect()
    }

    fn binary_eleven() -> RootedTree {
        RootedTree::parse("root 1\n1 2\n1 3\n2 4\n2 5\n4 8\n4 9\n3 6\n3 7\n6 10\n7 11\n").unwrap()
    }

    /// Root 1 is a leaf; blocks {1,2,3}, {4,5,7}, {6,8,9}.
    fn deep_branches() -> RootedTree {
        RootedTree::new(
            1,
            &[
                (1, 2),
                (2, 3),
                (2, 4),
                (4, 5),
                (5, 6),
                (5, 7),
                (6, 8),
                (8, 9),
            ],
        )
        .unwrap()
    }

    /// Blocks {2,5,8}, {1,3,6}, {4,7,9} hanging off the root.
    fn three_arms() -> RootedTree {
        RootedTree::new(
            1,
            &[
                (1, 2),
                (2, 5),
                (5, 8),
                (1, 3),
                (3, 6),
                (1, 4),
                (4, 7),
                (7, 9),
            ],
        )
        .unwrap()
    }

    fn facet_sets(facets: &[DirectedPath]) -> Vec<VertexSet> {
        let mut v: Vec<_> = facets.iter().map(DirectedPath::to_set).collect();
        v.sort();
        v
    }

    #[test]
    fn cleaning() {
        assert_eq!(clean(&binary_eleven(), 4).unwrap().removed, s(&[5]));
        assert_eq!(
            clean(&deep_branches(), 3).unwrap().removed,
            VertexSet::EMPTY
        );
        assert_eq!(clean(&three_arms(), 3).unwrap().removed, VertexSet::EMPTY);
        for n in 2..=9 {
            for t in 2..=n {
                let line = RootedTree::line(n).unwrap();
                assert!(clean(&line, t).unwrap().removed.is_empty());
            }
        }
        // A short spur off a chain is stripped.
        let spur = RootedTree::new(1, &[(1, 2), (2, 3), (1, 4)]).unwrap();
        let c = clean(&spur, 3).unwrap();
        assert_eq!(c.removed, s(&[4]));
        assert_eq!(c.tree, RootedTree::line(3).unwrap());
        // Cascading removal down to the root.
        let star = RootedTree::new(1, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        let c = clean(&star, 4).unwrap();
        assert_eq!(c.removed, s(&[2, 3, 4]));
        assert_eq!(c.tree.n(), 1);
    }

    #[test]
    fn candidates() {
        let fig = clean(&binary_eleven(), 4).unwrap().tree;
        let cands = leaf_facet_candidates(&fig, 4);
        assert_eq!(cands.len(), 1);
        assert_eq!(
            facet_sets(&cands[0]),
            vec![
                s(&[1, 2, 4, 8]),
                s(&[1, 2, 4, 9]),
                s(&[1, 3, 6, 10]),
                s(&[1, 3, 7, 11])
            ]
        );

        let g2 = leaf_facet_candidates(&deep_branches(), 3);
        assert_eq!(g2.len(), 1);
        assert!(facet_sets(&g2[0]).contains(&s(&[1, 2, 3])));
        assert!(!facet_sets(&g2[0]).contains(&s(&[1, 2, 4])));

        let g3 = leaf_facet_candidates(&three_arms(), 3);
        assert_eq!(g3.len(), 1);
        assert_eq!(
            facet_sets(&g3[0]),
            vec![s(&[1, 3, 6]), s(&[2, 5, 8]), s(&[4, 7, 9])]
        );

        // Root leaf not covered by the forced facet: one candidate per root path.
        let fork = RootedTree::new(1, &[(1, 2), (2, 3), (2, 4), (3, 5), (4, 6)]).unwrap();
        let cands = leaf_facet_candidates(&fork, 2);
        assert_eq!(cands.len(), 1);
        assert!(cands[0].iter().any(|p| p.vertices() == [1, 2]));
    }

    #[test]
    fn partitions() {
        assert!(t_partition(&binary_eleven(), 4).unwrap().is_none());
        let g3 = t_partition(&three_arms(), 3).unwrap().unwrap();
        assert_eq!(g3.m, 3);
        let g2 = t_partition(&deep_branches(), 3).unwrap().unwrap();
        assert_eq!(g2.m, 3);
        assert_eq!(
            facet_sets(&g2.facets),
            vec![s(&[1, 2, 3]), s(&[4, 5, 7]), s(&[6, 8, 9])]
        );
    }

    #[test]
    fn branches_of_examples() {
        let g2 = t_partition(&deep_branches(), 3).unwrap().unwrap();
        let got: Vec<_> = g2
            .branches
            .iter()
            .map(|b| (b.path.to_set(), b.initial, b.branch_level))
            .collect();
        assert_eq!(
            got,
            vec![
                (s(&[2, 4, 5, 6]), false, 1),
                (s(&[2, 4, 5, 7]), false, 1),
                (s(&[5, 6, 8, 9]), false, 3),
            ]
        );
        assert_eq!(g2.deg_gamma, 1);

        let g3 = t_partition(&three_arms(), 3).unwrap().unwrap();
        let got: Vec<_> = g3
            .branches
            .iter()
            .map(|b| (b.path.to_set(), b.initial, b.branch_level))
            .collect();
        assert_eq!(
            got,
            vec![(s(&[1, 2, 5, 8]), true, 0), (s(&[1, 4, 7, 9]), true, 0)]
        );

        let l6 = RootedTree::line(6).unwrap();
        let facets = t_partition(&l6, 3).unwrap().unwrap().facets;
        let branches = t_branches(&l6, 3, &facets);
        assert_eq!(branches.len(), 1);
        assert_eq!(branches[0].path.vertices(), &[3, 4, 5, 6]);
        assert_eq!(branches[0].attach_vertex, 3);
        assert!(!branches[0].initial);
        assert_eq!(branches[0].branch_level, 2);
    }

    #[test]
    fn fitting_verdicts() {
        assert!(is_fitting(&three_arms(), 3).unwrap().fitting);

        let g2 = is_fitting(&deep_branches(), 3).unwrap();
        assert!(!g2.fitting);
        match g2.failure_witness.unwrap() {
            FailureWitness::BranchTooDeep {
                branch,
                level,
                bound,
                ..
            } => {
                assert_eq!(branch.to_set(), s(&[5, 6, 8, 9]));
                assert_eq!((level, bound), (3, 2));
            }
            other => panic!("unexpected witness {other:?}"),
        }

        let fig = is_fitting(&binary_eleven(), 4).unwrap();
        assert!(!fig.fitting);
        assert!(fig.failure_witness.unwrap().is_partition_failure());
    }

    #[test]
    fn degree_clause() {
        // Block {1,2,3} has branches leaving from both 1 and 2.
        let tree = RootedTree::new(
            1,
            &[
                (1, 2),
                (2, 3),
                (1, 4),
                (4, 5),
                (5, 6),
                (2, 7),
                (7, 8),
                (8, 9),
            ],
        )
        .unwrap();
        let verdict = is_fitting(&tree, 3).unwrap();
        let cert = verdict.certificate.expect("partitioned");
        assert_eq!(cert.deg_gamma, 2);
        assert!(!verdict.fitting);
        match verdict.failure_witness.unwrap() {
            FailureWitness::DegreeTooLarge {
                facet,
                attach_vertices,
            } => {
                assert_eq!(facet.vertices(), &[1, 2, 3]);
                assert_eq!(attach_vertices, s(&[1, 2]));
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn lines() {
        assert!(is_line(&RootedTree::line(7).unwrap()));
        assert!(!is_line(&binary_eleven()));
        assert!(is_line(&RootedTree::line(1).unwrap()));
    }

    #[test]
    fn reports() {
        let l6 = classify(&RootedTree::line(6).unwrap(), 3).unwrap();
        assert!(l6.cohen_macaulay && !l6.gorenstein);
        assert_eq!((l6.proj_dim, l6.depth, l6.height), (Some(2), Some(4), 2));

        let spur = RootedTree::new(1, &[(1, 2), (2, 3), (1, 4)]).unwrap();
        let r = classify(&spur, 3).unwrap();
        assert!(r.gorenstein && r.complete_intersection && r.matroid && r.all_powers_cm);
        assert_eq!(r.clean_removed, s(&[4]));

        let g2 = classify(&deep_branches(), 3).unwrap();
        assert!(!g2.unmixed && !g2.cohen_macaulay && !g2.gorenstein);
        assert_eq!((g2.depth, g2.proj_dim), (None, None));

        let g3 = classify(&three_arms(), 3).unwrap();
        assert_eq!(g3.proj_dim, Some(3));
        assert_eq!(g3.krull_dim, 6);

        let fig = classify(&binary_eleven(), 4).unwrap();
        assert!(!fig.cohen_macaulay && !fig.partitioned);
        assert_eq!(fig.height, 1);

        let star = RootedTree::new(1, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let z = classify(&star, 3).unwrap();
        assert!(z.zero_ideal && z.cohen_macaulay && z.gorenstein && !z.fitting);
        assert_eq!((z.height, z.krull_dim, z.proj_dim), (0, 4, Some(0)));

        assert!(classify(&star, 5).is_err());
    }

    #[test]
    fn report_json_keys() {
        let report = classify(&three_arms(), 3).unwrap();
        let value = serde_json::to_value(&report).unwrap();
        for key in [
            "unmixed",
            "cohen_macaulay",
            "serre_sr",
            "gorenstein",
            "complete_intersection",
            "matroid",
            "all_powers_cm",
            "height",
            "krull_dim",
            "depth",
            "proj_dim",
            "zero_ideal",
            "certificate",
            "failure_witness",
        ] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        let back: ClassificationReport = serde_json::from_value(value).unwrap();
        assert_eq!(back, report);
    }
}
