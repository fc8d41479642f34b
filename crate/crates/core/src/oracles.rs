//! Brute-force verifiers that decide each property from its definition,
//! without going through the tree combinatorics in [`crate::classify`].
//!
//! | oracle | decides | by |
//! |---|---|---|
//! | [`unmixed_oracle`] | unmixedness | enumerating minimal vertex covers of `Δ_t` |
//! | [`konig_unmixed_oracle`] | unmixedness | searching for a König perfect matching with free vertices and nested traces |
//! | [`matroid_oracle`] | matroid | the exchange axiom on every face pair of `Δ_{n,t}` |
//! | [`stanley_gorenstein_oracle`] | Gorenstein | links of codimension-two faces and the Euler characteristic of the core |
//! | [`ci_oracle`] | complete intersection | pairwise disjoint generator supports |
//!
//! [`cross_validate`] runs all of them against [`classify`] plus the
//! structural facts every path complex of a tree must satisfy.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify, ClassificationReport};
use crate::complex::{SimplicialComplex, MAX_CYCLE_FACETS, MAX_CYCLE_VERTICES, MAX_ENUM_FACETS};
use crate::error::{Error, Result};
use crate::ideal::{path_complex, path_ideal, SquarefreeMonomialIdeal};
use crate::tree::{RootedTree, TreeFile};
use crate::vertex_set::VertexSet;

/// Bound on `n` for the oracles that enumerate every face of `Δ_{n,t}`.
pub const MAX_FACE_ORACLE_N: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub name: String,
    pub verdict: bool,
    pub witness: Option<OracleWitness>,
}

/// Counterexample data attached to a negative verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OracleWitness {
    /// Two minimal vertex covers of different sizes.
    MixedCovers {
        smaller: VertexSet,
        larger: VertexSet,
    },
    /// No family of covering-number many disjoint facets covers every vertex.
    NoKonigMatching,
    /// A block of the matching in which every vertex lies on another facet too.
    NoFreeVertex {
        matching: Vec<VertexSet>,
        block: VertexSet,
    },
    /// Two facets whose traces on a block are incomparable.
    NotNested {
        matching: Vec<VertexSet>,
        block: VertexSet,
        first: VertexSet,
        second: VertexSet,
    },
    /// `|larger| > |smaller|` but no element of `larger \ smaller` extends `smaller`.
    ExchangeFailure {
        larger: VertexSet,
        smaller: VertexSet,
    },
    /// Dimension 0 with more than two vertices.
    SmallDimension { vertices: usize },
    /// Not Cohen–Macaulay, shown by two minimal covers of the facet complex.
    NotCohenMacaulay {
        smaller: VertexSet,
        larger: VertexSet,
    },
    /// A codimension-two face whose link is not a circle, an edge or a two-edge path.
    BadLink {
        face: VertexSet,
        link: Vec<VertexSet>,
    },
    /// `χ̃(core) ≠ (-1)^dim(core)`.
    EulerMismatch { euler: i64, core_dimension: i64 },
    /// Two generators sharing a variable.
    OverlappingGenerators { first: VertexSet, second: VertexSet },
}

impl OracleVerdict {
    fn yes(name: &str) -> Self {
        OracleVerdict {
            name: name.to_string(),
            verdict: true,
            witness: None,
        }
    }

    fn no(name: &str, witness: OracleWitness) -> Self {
        OracleVerdict {
            name: name.to_string(),
            verdict: false,
            witness: Some(witness),
        }
    }
}

/// Unmixed iff every minimal vertex cover of `Δ_t(Γ)` has the same size.
pub fn unmixed_oracle(tree: &RootedTree, t: usize) -> Result<OracleVerdict> {
    const NAME: &str = "unmixed";
    let mut covers = path_complex(tree, t)?.minimal_vertex_covers()?;
    covers.sort();
    let (Some(&smaller), Some(last)) = (covers.first(), covers.last()) else {
        return Ok(OracleVerdict::yes(NAME));
    };
    if smaller.len() == last.len() {
        return Ok(OracleVerdict::yes(NAME));
    }
    // Among the largest covers, prefer one disjoint from the smallest.
    let largest = covers.iter().filter(|c| c.len() == last.len());
    let larger = largest
        .clone()
        .find(|c| c.is_disjoint(smaller))
        .or_else(|| largest.clone().next())
        .copied()
        .unwrap_or(*last);
    Ok(OracleVerdict::no(
        NAME,
        OracleWitness::MixedCovers { smaller, larger },
    ))
}

/// Unmixedness through the matching criterion for totally balanced clutters
/// with the König property: some König perfect matching has a free vertex in
/// each block, and every block sees the facets' traces as a chain.
pub fn konig_unmixed_oracle(tree: &RootedTree, t: usize) -> Result<OracleVerdict> {
    const NAME: &str = "konig_unmixed";
    let delta = path_complex(tree, t)?;
    let matchings = delta.perfect_matchings_konig_type()?;
    let free = delta.free_vertices();
    let mut first_failure = None;
    for matching in &matchings {
        match check_matching(&delta, matching, free) {
            None => return Ok(OracleVerdict::yes(NAME)),
            Some(w) => {
                first_failure.get_or_insert(w);
            }
        }
    }
    Ok(OracleVerdict::no(
        NAME,
        first_failure.unwrap_or(OracleWitness::NoKonigMatching),
    ))
}

fn check_matching(
    delta: &SimplicialComplex,
    matching: &[VertexSet],
    free: VertexSet,
) -> Option<OracleWitness> {
    for &block in matching {
        if block.is_disjoint(free) {
            return Some(OracleWitness::NoFreeVertex {
                matching: matching.to_vec(),
                block,
            });
        }
    }
    let facets = delta.facets();
    for &block in matching {
        for (i, e) in facets.iter().enumerate() {
            for f in &facets[i + 1..] {
                let a = e.intersection(block);
                let b = f.intersection(block);
                if !a.is_subset(b) && !b.is_subset(a) {
                    return Some(OracleWitness::NotNested {
                        matching: matching.to_vec(),
                        block,
                        first: *e,
                        second: *f,
                    });
                }
            }
        }
    }
    None
}

fn face_oracle_guard(ideal: &SquarefreeMonomialIdeal) -> Result<()> {
    if ideal.n() > MAX_FACE_ORACLE_N {
        Err(Error::guard(
            "face-pair oracle variable count",
            MAX_FACE_ORACLE_N,
            ideal.n(),
        ))
    } else {
        Ok(())
    }
}

/// Exchange axiom on the Stanley–Reisner complex of `ideal`.
///
/// Only pairs with `|F| = |G| + 1` are scanned. If `F` fails against `G` then so
/// does every `(|G|+1)`-subset of `F`, so nothing is lost.
pub fn matroid_oracle(ideal: &SquarefreeMonomialIdeal) -> Result<OracleVerdict> {
    const NAME: &str = "matroid";
    face_oracle_guard(ideal)?;
    let n = ideal.n();
    let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); n + 2];
    for f in VertexSet::full(n).subsets() {
        if ideal.is_stanley_reisner_face(f) {
            by_size[f.len()].push(f);
        }
    }
    for k in 0..n {
        for &g in &by_size[k] {
            // Vertices that extend g to a face.
            let extenders: VertexSet = VertexSet::full(n)
                .difference(g)
                .iter()
                .filter(|&x| ideal.is_stanley_reisner_face(g.with(x)))
                .collect();
            if let Some(&f) = by_size[k + 1].iter().find(|f| f.is_disjoint(extenders)) {
                return Ok(OracleVerdict::no(
                    NAME,
                    OracleWitness::ExchangeFailure {
                        larger: f,
                        smaller: g,
                    },
                ));
            }
        }
    }
    Ok(OracleVerdict::yes(NAME))
}

/// Gorenstein criterion applied to `Δ_{n,t}`: it is `{∅}`, a point or two
/// points; or it is Cohen–Macaulay of dimension at least one, every face of
/// codimension two has a circle, an edge or a two-edge path as its link, and
/// the core satisfies `χ̃ = (-1)^dim`.
///
/// Cohen–Macaulayness comes from [`unmixed_oracle`], which is equivalent for
/// path ideals of trees.
pub fn stanley_gorenstein_oracle(
    ideal: &SquarefreeMonomialIdeal,
    tree: &RootedTree,
    t: usize,
) -> Result<OracleVerdict> {
    const NAME: &str = "stanley_gorenstein";
    face_oracle_guard(ideal)?;
    let delta = ideal.stanley_reisner_complex()?;
    let small = delta.is_empty_face() || (delta.dimension() == 0 && delta.vertices().len() <= 2);
    if small {
        return Ok(OracleVerdict::yes(NAME));
    }
    if delta.dimension() < 1 {
        return Ok(OracleVerdict::no(
            NAME,
            OracleWitness::SmallDimension {
                vertices: delta.vertices().len(),
            },
        ));
    }
    let cm = unmixed_oracle(tree, t)?;
    if let Some(OracleWitness::MixedCovers { smaller, larger }) = cm.witness {
        return Ok(OracleVerdict::no(
            NAME,
            OracleWitness::NotCohenMacaulay { smaller, larger },
        ));
    }

    let d = (delta.dimension() + 1) as usize;
    let mut bad = None;
    delta.for_each_face(|h| {
        if bad.is_none() && h.len() == d - 2 {
            let link = delta.link(h).expect("h is a face");
            if !is_small_sphere_or_ball(&link) {
                bad = Some(OracleWitness::BadLink {
                    face: h,
                    link: link.facets().to_vec(),
                });
            }
        }
    })?;
    if let Some(w) = bad {
        return Ok(OracleVerdict::no(NAME, w));
    }

    let core = delta.core();
    let euler = core.reduced_euler_characteristic()?;
    let core_dimension = core.dimension();
    let expected = if core_dimension.rem_euclid(2) == 0 {
        1
    } else {
        -1
    };
    if euler != expected {
        return Ok(OracleVerdict::no(
            NAME,
            OracleWitness::EulerMismatch {
                euler,
                core_dimension,
            },
        ));
    }
    Ok(OracleVerdict::yes(NAME))
}

/// A circle, a single edge, or a path with two edges.
pub fn is_small_sphere_or_ball(link: &SimplicialComplex) -> bool {
    let facets = link.facets();
    if facets.is_empty() || facets.iter().any(|f| f.len() != 2) {
        return false;
    }
    let vertices = link.vertices();
    match facets.len() {
        1 => true,
        2 => vertices.len() == 3,
        _ => is_circle(link),
    }
}

/// Pure one-dimensional, connected, at least three vertices, every vertex on
/// exactly two edges.
pub fn is_circle(complex: &SimplicialComplex) -> bool {
    let facets = complex.facets();
    complex.vertices().len() >= 3
        && facets.iter().all(|f| f.len() == 2)
        && complex
            .vertices()
            .iter()
            .all(|v| facets.iter().filter(|f| f.contains(v)).count() == 2)
        && complex.is_connected()
}

/// Complete intersection iff no two generators share a variable.
pub fn ci_oracle(ideal: &SquarefreeMonomialIdeal) -> OracleVerdict {
    const NAME: &str = "complete_intersection";
    match ideal.overlapping_generators() {
        Some((first, second)) => {
            OracleVerdict::no(NAME, OracleWitness::OverlappingGenerators { first, second })
        }
        None => OracleVerdict::yes(NAME),
    }
}

/// Structural facts about `Δ_t(Γ)` and the report's bookkeeping. `None` means
/// the check was out of its guard and skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralChecks {
    pub simplicial_forest: Option<bool>,
    pub konig_property: Option<bool>,
    pub clutter_cycle: Option<bool>,
    /// On Cohen–Macaulay instances: `proj_dim = m = height` and `krull_dim = n - m`.
    pub bookkeeping: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub tree: TreeFile,
    pub t: usize,
    pub n: usize,
    pub zero_ideal: bool,
    pub fitting: bool,
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
    pub clean_is_t_chain: bool,
    pub oracles: Vec<OracleVerdict>,
    pub structural: Option<StructuralChecks>,
    pub divergences: Vec<String>,
    pub guard: Option<String>,
}

impl InstanceRecord {
    pub fn agrees(&self) -> bool {
        self.guard.is_none() && self.divergences.is_empty()
    }

    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.oracles
            .iter()
            .find(|o| o.name == name)
            .map(|o| o.verdict)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidationSummary {
    pub instances: usize,
    pub agreements: usize,
    pub divergences: usize,
    pub guard_breaches: usize,
    pub zero_ideal: usize,
    pub cohen_macaulay: usize,
    pub gorenstein: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub records: Vec<InstanceRecord>,
    pub summary: CrossValidationSummary,
}

impl CrossValidation {
    /// One JSON object per instance, then a final `{"summary": ...}` line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("record serializes"));
            out.push('\n');
        }
        out.push_str(
            &serde_json::to_string(&serde_json::json!({ "summary": self.summary }))
                .expect("summary serializes"),
        );
        out.push('\n');
        out
    }

    pub fn divergent(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.records.iter().filter(|r| !r.divergences.is_empty())
    }
}

/// Every `(tree, t)` with `2 <= t <= n`.
pub fn all_instances(trees: &[RootedTree]) -> Vec<(RootedTree, usize)> {
    trees
        .iter()
        .flat_map(|tree| (2..=tree.n()).map(move |t| (tree.clone(), t)))
        .collect()
}

/// Runs every oracle on every instance. Instances are evaluated in parallel and
/// reported in input order.
pub fn cross_validate(corpus: &[(RootedTree, usize)]) -> CrossValidation {
    let records: Vec<InstanceRecord> = corpus
        .par_iter()
        .enumerate()
        .map(|(index, (tree, t))| check_instance(index, tree, *t))
        .collect();

    let mut summary = CrossValidationSummary {
        instances: records.len(),
        ..Default::default()
    };
    for r in &records {
        if r.guard.is_some() {
            summary.guard_breaches += 1;
            continue;
        }
        if r.divergences.is_empty() {
            summary.agreements += 1;
        } else {
            summary.divergences += 1;
        }
        summary.zero_ideal += usize::from(r.zero_ideal);
        summary.cohen_macaulay += usize::from(r.cohen_macaulay);
        summary.gorenstein += usize::from(r.gorenstein);
    }
    CrossValidation { records, summary }
}

/// Cross-validates a single instance.
pub fn check_instance(index: usize, tree: &RootedTree, t: usize) -> InstanceRecord {
    let mut record = InstanceRecord {
        index,
        tree: tree.to_tree_file(),
        t,
        n: tree.n(),
        zero_ideal: false,
        fitting: false,
        cohen_macaulay: false,
        gorenstein: false,
        clean_is_t_chain: false,
        oracles: Vec::new(),
        structural: None,
        divergences: Vec::new(),
        guard: None,
    };
    let report = match classify(tree, t) {
        Ok(r) => r,
        Err(e) => {
            record.divergences.push(format!("classify failed: {e}"));
            return record;
        }
    };
    record.zero_ideal = report.zero_ideal;
    record.fitting = report.fitting;
    record.cohen_macaulay = report.cohen_macaulay;
    record.gorenstein = report.gorenstein;
    record.clean_is_t_chain = report.clean_is_t_chain;

    match run_oracles(tree, t, &report) {
        Ok((oracles, structural, divergences)) => {
            record.oracles = oracles;
            record.structural = Some(structural);
            record.divergences = divergences;
        }
        Err(e) if e.is_guard() => record.guard = Some(e.to_string()),
        Err(e) => record.divergences.push(format!("oracle failed: {e}")),
    }
    record
}

type OracleRun = (Vec<OracleVerdict>, StructuralChecks, Vec<String>);

fn run_oracles(tree: &RootedTree, t: usize, report: &ClassificationReport) -> Result<OracleRun> {
    let ideal = path_ideal(tree, t)?;
    let oracles = vec![
        unmixed_oracle(tree, t)?,
        konig_unmixed_oracle(tree, t)?,
        matroid_oracle(&ideal)?,
        stanley_gorenstein_oracle(&ideal, tree, t)?,
        ci_oracle(&ideal),
    ];

    let mut divergences = Vec::new();
    for o in &oracles {
        let expected = match o.name.as_str() {
            "unmixed" | "konig_unmixed" => report.unmixed,
            _ => report.gorenstein,
        };
        if o.verdict != expected {
            divergences.push(format!(
                "{} oracle says {} but classify says {}",
                o.name, o.verdict, expected
            ));
        }
    }
    if !report.zero_ideal && report.unmixed != report.fitting {
        divergences.push("unmixed flag differs from the fitting verdict".into());
    }

    let delta = path_complex(tree, t)?;
    let q = delta.facet_count();
    let simplicial_forest = if q <= MAX_ENUM_FACETS {
        Some(delta.is_simplicial_forest()?)
    } else {
        None
    };
    let konig_property = if q <= MAX_ENUM_FACETS {
        Some(delta.has_konig_property()?)
    } else {
        None
    };
    let clutter_cycle = if q <= MAX_CYCLE_FACETS && delta.vertices().len() <= MAX_CYCLE_VERTICES {
        Some(delta.has_clutter_cycle(q)?)
    } else {
        None
    };
    let bookkeeping = report.cohen_macaulay.then(|| {
        let m = report.certificate.as_ref().map_or(0, |c| c.m);
        report.proj_dim == Some(m)
            && report.height == m
            && report.krull_dim == report.n - m
            && report.depth == Some(report.n - m)
    });
    if simplicial_forest == Some(false) {
        divergences.push("path complex is not a simplicial forest".into());
    }
    if konig_property == Some(false) {
        divergences.push("path complex lacks the König property".into());
    }
    if clutter_cycle == Some(true) {
        divergences.push("path complex has a clutter cycle".into());
    }
    if bookkeeping == Some(false) {
        divergences.push("projective dimension bookkeeping is inconsistent".into());
    }

    Ok((
        oracles,
        StructuralChecks {
            simplicial_forest,
            konig_property,
            clutter_cycle,
            bookkeeping,
        },
        divergences,
    ))
}
