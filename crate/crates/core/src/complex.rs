//! Simplicial complexes in facet representation, which are the same thing as clutters.
//!
//! The *void* complex has no faces at all. The complex `{∅}` has exactly one
//! face, the empty set. They are told apart by their facet lists: `[]` versus
//! `[∅]`.
//!
//! Exhaustive routines refuse to run past fixed size bounds and return
//! [`Error::Guard`] instead of truncating.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet};

/// Bound on the vertex count for face and cover enumeration.
pub const MAX_ENUM_VERTICES: usize = 24;
/// Bound on the facet count for subcomplex, packing and matching searches.
pub const MAX_ENUM_FACETS: usize = 20;
/// Bounds on the incidence matrix for clutter cycle search.
pub const MAX_CYCLE_VERTICES: usize = 16;
pub const MAX_CYCLE_FACETS: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<VertexSet>,
    vertices: VertexSet,
}

/// `(f_0, ..., f_{d-1})`; `f_{-1} = 1` is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

/// A cycle of the clutter: `facets[i]` contains exactly `vertices[i]` and
/// `vertices[i + 1]` (cyclically) among the listed vertices, and each listed
/// vertex lies in exactly two of the listed facets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClutterCycle {
    pub facets: Vec<VertexSet>,
    pub vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: Vec<VertexId>,
    pub facets: Vec<Vec<VertexId>>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal candidates, deduplicated and sorted by size then members.
    pub fn from_facets<I: IntoIterator<Item = VertexSet>>(candidates: I) -> Self {
        let mut sets: Vec<VertexSet> = candidates.into_iter().collect();
        // Larger sets first so a single pass can discard anything they contain.
        sets.sort_by(|a, b| b.cmp(a));
        sets.dedup();
        let mut facets: Vec<VertexSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !facets.iter().any(|f| s.is_subset(*f)) {
                facets.push(s);
            }
        }
        facets.sort();
        let vertices = facets.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f));
        SimplicialComplex { facets, vertices }
    }

    /// The complex with no faces.
    pub fn void() -> Self {
        SimplicialComplex {
            facets: Vec::new(),
            vertices: VertexSet::EMPTY,
        }
    }

    /// `{∅}`: the empty face and nothing else.
    pub fn empty_face() -> Self {
        Self::from_facets([VertexSet::EMPTY])
    }

    pub fn simplex(vertices: VertexSet) -> Self {
        Self::from_facets([vertices])
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_face(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    /// Largest facet size minus one; `-1` for both the void complex and `{∅}`.
    pub fn dimension(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_face(&self, g: VertexSet) -> bool {
        self.facets.iter().any(|f| g.is_subset(*f))
    }

    pub fn is_facet(&self, g: VertexSet) -> bool {
        self.facets.binary_search(&g).is_ok()
    }

    fn enum_guard(&self) -> Result<()> {
        if self.vertices.len() > MAX_ENUM_VERTICES {
            Err(Error::guard(
                "face enumeration vertex count",
                MAX_ENUM_VERTICES,
                self.vertices.len(),
            ))
        } else {
            Ok(())
        }
    }

    fn facet_guard(&self) -> Result<()> {
        if self.facets.len() > MAX_ENUM_FACETS {
            Err(Error::guard(
                "facet subfamily search facet count",
                MAX_ENUM_FACETS,
                self.facets.len(),
            ))
        } else {
            Ok(())
        }
    }

    /// Visits every face once, including `∅` whenever the complex is not void.
    pub fn for_each_face<F: FnMut(VertexSet)>(&self, mut visit: F) -> Result<()> {
        self.enum_guard()?;
        if self.is_void() {
            return Ok(());
        }
        for g in self.vertices.subsets() {
            if self.is_face(g) {
                visit(g);
            }
        }
        Ok(())
    }

    /// All faces, smallest first.
    pub fn faces(&self) -> Result<Vec<VertexSet>> {
        let mut out = Vec::new();
        self.for_each_face(|g| out.push(g))?;
        out.sort();
        Ok(out)
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let dim = self.dimension();
        let mut counts = vec![0u64; (dim + 1).max(0) as usize];
        self.for_each_face(|g| {
            if !g.is_empty() {
                counts[g.len() - 1] += 1;
            }
        })?;
        Ok(FVector(counts))
    }

    /// `-1 + Σ (-1)^i f_i`. The void complex has no `f_{-1}` term and gets 0.
    pub fn reduced_euler_characteristic(&self) -> Result<i64> {
        if self.is_void() {
            return Ok(0);
        }
        let f = self.f_vector()?;
        Ok(f.0.iter().enumerate().fold(-1i64, |acc, (i, &c)| {
            if i % 2 == 0 {
                acc + c as i64
            } else {
                acc - c as i64
            }
        }))
    }

    /// `lk G = {F : F ∩ G = ∅, F ∪ G ∈ Δ}`.
    pub fn link(&self, g: VertexSet) -> Result<Self> {
        if !self.is_face(g) {
            return Err(Error::NotAFace(g.to_string()));
        }
        Ok(Self::from_facets(
            self.facets
                .iter()
                .filter(|f| g.is_subset(**f))
                .map(|f| f.difference(g)),
        ))
    }

    /// `st G = {F : F ∪ G ∈ Δ}`, whose facets are the facets containing `G`.
    pub fn star(&self, g: VertexSet) -> Result<Self> {
        if !self.is_face(g) {
            return Err(Error::NotAFace(g.to_string()));
        }
        Ok(Self::from_facets(
            self.facets.iter().copied().filter(|f| g.is_subset(*f)),
        ))
    }

    /// Induced subcomplex on `w`.
    pub fn restrict(&self, w: VertexSet) -> Self {
        if self.is_void() {
            return Self::void();
        }
        Self::from_facets(self.facets.iter().map(|f| f.intersection(w)))
    }

    /// Vertices lying in every facet; these are exactly the `v` with `st {v} = Δ`.
    pub fn cone_points(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(self.vertices, |acc, f| acc.intersection(*f))
    }

    /// Restriction to the vertices whose star is not the whole complex.
    pub fn core(&self) -> Self {
        self.restrict(self.vertices.difference(self.cone_points()))
    }

    /// Vertices contained in exactly one facet.
    pub fn free_vertices(&self) -> VertexSet {
        self.vertices
            .iter()
            .filter(|&v| self.facets.iter().filter(|f| f.contains(v)).count() == 1)
            .collect()
    }

    pub fn is_leaf_facet(&self, f: VertexSet) -> Result<bool> {
        let idx = self
            .facets
            .binary_search(&f)
            .map_err(|_| Error::NotAFacet(f.to_string()))?;
        let others = self
            .facets
            .iter()
            .enumerate()
            .filter(move |&(j, _)| j != idx)
            .map(|(_, g)| *g);
        Ok(is_leaf_among(f, others))
    }

    pub fn is_connected(&self) -> bool {
        if self.facets.len() <= 1 {
            return true;
        }
        let mut reached = self.facets[0];
        let mut used = vec![false; self.facets.len()];
        used[0] = true;
        loop {
            let mut grew = false;
            for (i, f) in self.facets.iter().enumerate() {
                if !used[i] && !f.is_disjoint(reached) {
                    used[i] = true;
                    reached = reached.union(*f);
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        used.iter().all(|&u| u)
    }

    /// Checks every nonempty subfamily of facets for a leaf.
    pub fn is_simplicial_forest(&self) -> Result<bool> {
        self.facet_guard()?;
        let q = self.facets.len();
        for subset in 1u64..(1u64 << q) {
            let members: Vec<VertexSet> = (0..q)
                .filter(|i| subset >> i & 1 == 1)
                .map(|i| self.facets[i])
                .collect();
            let has_leaf = (0..members.len()).any(|i| {
                let others = members
                    .iter()
                    .enumerate()
                    .filter(move |&(j, _)| j != i)
                    .map(|(_, g)| *g);
                is_leaf_among(members[i], others)
            });
            if !has_leaf {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A connected simplicial forest. The void complex counts as a tree.
    pub fn is_simplicial_tree(&self) -> Result<bool> {
        Ok(self.is_connected() && self.is_simplicial_forest()?)
    }

    /// All inclusion-minimal vertex covers, sorted. The void complex has the
    /// single cover `∅`; `{∅}` has none.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexSet>> {
        self.enum_guard()?;
        // Berge's incremental transversal computation.
        let mut covers = vec![VertexSet::EMPTY];
        for &f in &self.facets {
            let mut next = Vec::with_capacity(covers.len());
            for &c in &covers {
                if !c.is_disjoint(f) {
                    next.push(c);
                } else {
                    next.extend(f.iter().map(|v| c.with(v)));
                }
            }
            covers = minimal_sets(next);
        }
        covers.sort();
        Ok(covers)
    }

    /// Minimum size of a vertex cover (exact branch and bound, no size guard).
    pub fn covering_number(&self) -> Result<usize> {
        if self.facets.iter().any(|f| f.is_empty()) {
            return Err(Error::InvalidComplex(
                "the empty facet has no vertex cover".into(),
            ));
        }
        let mut best = self.vertices.len();
        min_cover(&self.facets, VertexSet::EMPTY, &mut best);
        Ok(best)
    }

    pub fn is_unmixed_by_covers(&self) -> Result<bool> {
        let covers = self.minimal_vertex_covers()?;
        Ok(covers.windows(2).all(|w| w[0].len() == w[1].len()))
    }

    /// Size of a largest family of pairwise disjoint facets.
    pub fn max_disjoint_facets(&self) -> Result<usize> {
        self.facet_guard()?;
        fn go(facets: &[VertexSet], from: usize, used: VertexSet, size: usize, best: &mut usize) {
            *best = (*best).max(size);
            if size + (facets.len() - from) <= *best {
                return;
            }
            for i in from..facets.len() {
                if facets[i].is_disjoint(used) {
                    go(facets, i + 1, used.union(facets[i]), size + 1, best);
                }
            }
        }
        let mut best = 0;
        go(&self.facets, 0, VertexSet::EMPTY, 0, &mut best);
        Ok(best)
    }

    pub fn has_konig_property(&self) -> Result<bool> {
        Ok(self.max_disjoint_facets()? == self.covering_number()?)
    }

    /// Families of pairwise disjoint facets covering every vertex whose size
    /// equals the covering number.
    pub fn perfect_matchings_konig_type(&self) -> Result<Vec<Vec<VertexSet>>> {
        self.facet_guard()?;
        let g = self.covering_number()?;
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        exact_covers(&self.facets, self.vertices, &mut chosen, &mut out);
        out.retain(|m| m.len() == g);
        for m in &mut out {
            m.sort();
        }
        out.sort();
        Ok(out)
    }

    /// Looks for a cycle of order `3..=r_max`; larger orders cannot fit in the
    /// incidence matrix, so `r_max` is capped at `min(#vertices, #facets)`.
    pub fn find_clutter_cycle(&self, r_max: usize) -> Result<Option<ClutterCycle>> {
        if self.vertices.len() > MAX_CYCLE_VERTICES {
            return Err(Error::guard(
                "clutter cycle search vertex count",
                MAX_CYCLE_VERTICES,
                self.vertices.len(),
            ));
        }
        if self.facets.len() > MAX_CYCLE_FACETS {
            return Err(Error::guard(
                "clutter cycle search facet count",
                MAX_CYCLE_FACETS,
                self.facets.len(),
            ));
        }
        let q = self.facets.len();
        let r_max = r_max.min(q).min(self.vertices.len());
        if r_max < 3 {
            return Ok(None);
        }
        let mut subsets: Vec<u64> = (1u64..(1u64 << q))
            .filter(|s| (3..=r_max).contains(&(s.count_ones() as usize)))
            .collect();
        subsets.sort_by_key(|s| (s.count_ones(), *s));
        for cols in subsets {
            if let Some(cycle) = hamiltonian_cycle(&self.facets, self.vertices, cols) {
                return Ok(Some(cycle));
            }
        }
        Ok(None)
    }

    pub fn has_clutter_cycle(&self, r_max: usize) -> Result<bool> {
        Ok(self.find_clutter_cycle(r_max)?.is_some())
    }

    /// No clutter cycle of any order.
    pub fn is_totally_balanced(&self) -> Result<bool> {
        Ok(!self.has_clutter_cycle(self.facets.len())?)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            vertices: self.vertices.to_vec(),
            facets: self.facets.iter().map(|f| f.to_vec()).collect(),
        }
    }

    pub fn from_file(file: &ComplexFile) -> Result<Self> {
        let mut facets = Vec::with_capacity(file.facets.len());
        for raw in &file.facets {
            let set: VertexSet = serde_json::from_value(serde_json::to_value(raw)?)?;
            facets.push(set);
        }
        let complex = Self::from_facets(facets.iter().copied());
        if complex.facets.len() != facets.len() {
            return Err(Error::InvalidComplex(
                "facet list is not an antichain".into(),
            ));
        }
        let listed: VertexSet = serde_json::from_value(serde_json::to_value(&file.vertices)?)?;
        if listed != complex.vertices {
            return Err(Error::InvalidComplex(format!(
                "vertex list {listed} differs from the union of the facets {}",
                complex.vertices
            )));
        }
        Ok(complex)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("complex serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file(&serde_json::from_str(text)?)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{facet}")?;
        }
        f.write_str(">")
    }
}

/// Is `f` a leaf of the family consisting of itself and `others`?
fn is_leaf_among<I>(f: VertexSet, others: I) -> bool
where
    I: Iterator<Item = VertexSet> + Clone,
{
    let mut shared = VertexSet::EMPTY;
    let mut any = false;
    for g in others.clone() {
        shared = shared.union(f.intersection(g));
        any = true;
    }
    // F ∩ F' ⊆ F ∩ G for all F' exactly when F ∩ G is the union of all those intersections.
    !any || others.into_iter().any(|g| f.intersection(g) == shared)
}

fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort();
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept
}

fn min_cover(facets: &[VertexSet], chosen: VertexSet, best: &mut usize) {
    if chosen.len() >= *best {
        return;
    }
    let uncovered = facets
        .iter()
        .filter(|f| f.is_disjoint(chosen))
        .min_by_key(|f| f.len());
    match uncovered {
        None => *best = chosen.len(),
        Some(f) => {
            for v in *f {
                min_cover(facets, chosen.with(v), best);
            }
        }
    }
}

fn exact_covers(
    facets: &[VertexSet],
    remaining: VertexSet,
    chosen: &mut Vec<VertexSet>,
    out: &mut Vec<Vec<VertexSet>>,
) {
    let Some(v) = remaining.min() else {
        out.push(chosen.clone());
        return;
    };
    for &f in facets {
        if f.contains(v) && f.is_subset(remaining) {
            chosen.push(f);
            exact_covers(facets, remaining.difference(f), chosen, out);
            chosen.pop();
        }
    }
}

/// Within the columns `cols`, a vertex lying in exactly two of them acts as an
/// edge between those two facets. A clutter cycle on `cols` is a Hamiltonian
/// cycle of that multigraph.
fn hamiltonian_cycle(facets: &[VertexSet], vertices: VertexSet, cols: u64) -> Option<ClutterCycle> {
    let idx: Vec<usize> = (0..facets.len()).filter(|i| cols >> i & 1 == 1).collect();
    let r = idx.len();
    let mut edges: Vec<(usize, usize, VertexId)> = Vec::new();
    for v in vertices {
        let hits: Vec<usize> = (0..r).filter(|&k| facets[idx[k]].contains(v)).collect();
        if hits.len() == 2 {
            edges.push((hits[0], hits[1], v));
        }
    }
    let mut degree = vec![0usize; r];
    for &(a, b, _) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    if degree.iter().any(|&d| d < 2) {
        return None;
    }

    fn extend(
        r: usize,
        edges: &[(usize, usize, VertexId)],
        order: &mut Vec<usize>,
        via: &mut Vec<VertexId>,
        visited: &mut Vec<bool>,
    ) -> bool {
        let cur = *order.last().unwrap();
        if order.len() == r {
            return edges.iter().any(|&(a, b, v)| {
                if (a == cur && b == order[0]) || (b == cur && a == order[0]) {
                    via.push(v);
                    true
                } else {
                    false
                }
            });
        }
        for &(a, b, v) in edges {
            let next = if a == cur {
                b
            } else if b == cur {
                a
            } else {
                continue;
            };
            if visited[next] {
                continue;
            }
            visited[next] = true;
            order.push(next);
            via.push(v);
            if extend(r, edges, order, via, visited) {
                return true;
            }
            via.pop();
            order.pop();
            visited[next] = false;
        }
        false
    }

    let mut order = vec![0];
    let mut via = Vec::new();
    let mut visited = vec![false; r];
    visited[0] = true;
    if extend(r, &edges, &mut order, &mut via, &mut visited) {
        // via[i] joins order[i] and order[i + 1]; the last entry closes the cycle.
        let cycle_facets: Vec<VertexSet> = order.iter().map(|&k| facets[idx[k]]).collect();
        let mut cycle_vertices = Vec::with_capacity(r);
        cycle_vertices.push(via[r - 1]);
        cycle_vertices.extend_from_slice(&via[..r - 1]);
        Some(ClutterCycle {
            facets: cycle_facets,
            vertices: cycle_vertices,
        })
    } else {
        None
    }
}
