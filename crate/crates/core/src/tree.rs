//! Directed rooted trees.
//!
//! Edges point away from the root. Throughout the crate a path "of length t"
//! has `t` vertices and `t - 1` edges, which is one more than the usual graph
//! theory convention.
//!
//! Tree files are plain text:
//!
//! ```text
//! # comment
//! root 1
//! 1 2
//! 2 3
//! ```
//!
//! or JSON: `{ "root": 1, "edges": [[1, 2], [2, 3]] }`. Labels in a file must be
//! exactly `1..=n`. Trees derived by the library (clean forms, for example) keep
//! the labels of the tree they came from and may therefore have gaps.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexId, VertexSet, MAX_VERTEX};

const SLOTS: usize = MAX_VERTEX as usize + 1;

#[derive(Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: VertexId,
    vertices: VertexSet,
    parent: Vec<Option<VertexId>>,
    children: Vec<Vec<VertexId>>,
    level: Vec<usize>,
}

/// A directed path, listed from its top vertex downwards.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DirectedPath(Vec<VertexId>);

/// On-disk JSON shape of a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeFile {
    pub root: VertexId,
    pub edges: Vec<[VertexId; 2]>,
}

impl DirectedPath {
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn first(&self) -> VertexId {
        self.0[0]
    }

    pub fn last(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_set(&self) -> VertexSet {
        self.0.iter().collect()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }
}

impl fmt::Debug for DirectedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DirectedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(">")
    }
}

impl RootedTree {
    /// Builds a tree from its root and directed edges `(parent, child)`.
    pub fn new(root: VertexId, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        check_label(root).map_err(Error::InvalidTree)?;
        let mut parent = vec![None; SLOTS];
        let mut vertices = VertexSet::singleton(root);
        for &(p, c) in edges {
            check_label(p).map_err(Error::InvalidTree)?;
            check_label(c).map_err(Error::InvalidTree)?;
            if p == c {
                return Err(Error::InvalidTree(format!("self-loop at vertex {p}")));
            }
            if c == root {
                return Err(Error::InvalidTree(format!(
                    "edge {p} -> {c} points into the root"
                )));
            }
            if let Some(q) = parent[c as usize] {
                return Err(Error::InvalidTree(if q == p {
                    format!("duplicate edge {p} -> {c}")
                } else {
                    format!("vertex {c} has two parents, {q} and {p}")
                }));
            }
            parent[c as usize] = Some(p);
            vertices.insert(p);
            vertices.insert(c);
        }
        Self::from_parents(root, vertices, parent)
    }

    fn from_parents(
        root: VertexId,
        vertices: VertexSet,
        parent: Vec<Option<VertexId>>,
    ) -> Result<Self> {
        let mut children = vec![Vec::new(); SLOTS];
        for v in vertices {
            if let Some(p) = parent[v as usize] {
                children[p as usize].push(v);
            }
        }
        for list in &mut children {
            list.sort_unstable();
        }

        let mut level = vec![usize::MAX; SLOTS];
        level[root as usize] = 0;
        let mut stack = vec![root];
        let mut reached = VertexSet::singleton(root);
        while let Some(v) = stack.pop() {
            for &c in &children[v as usize] {
                level[c as usize] = level[v as usize] + 1;
                reached.insert(c);
                stack.push(c);
            }
        }
        if reached != vertices {
            let stray = vertices.difference(reached).min().unwrap();
            return Err(Error::InvalidTree(unreachable_reason(stray, &parent)));
        }

        Ok(RootedTree {
            root,
            vertices,
            parent,
            children,
            level,
        })
    }

    /// Parses the text or JSON tree format; JSON is detected by a leading `{`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    fn parse_text(text: &str) -> Result<Self> {
        let mut root: Option<VertexId> = None;
        let mut parent: Vec<Option<(VertexId, usize)>> = vec![None; SLOTS];
        let mut edges = Vec::new();
        let mut mentioned = VertexSet::EMPTY;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["root", id] => {
                    if root.is_some() {
                        return Err(Error::parse(line_no, "second `root` line"));
                    }
                    let id = parse_label(id).map_err(|m| Error::parse(line_no, m))?;
                    root = Some(id);
                    mentioned.insert(id);
                }
                [p, c] => {
                    let p = parse_label(p).map_err(|m| Error::parse(line_no, m))?;
                    let c = parse_label(c).map_err(|m| Error::parse(line_no, m))?;
                    if p == c {
                        return Err(Error::parse(line_no, format!("self-loop at vertex {p}")));
                    }
                    if let Some((q, first)) = parent[c as usize] {
                        let msg = if q == p {
                            format!("duplicate edge {p} -> {c} (first given on line {first})")
                        } else {
                            format!("vertex {c} has multiple parents: {q} (line {first}) and {p}")
                        };
                        return Err(Error::parse(line_no, msg));
                    }
                    parent[c as usize] = Some((p, line_no));
                    mentioned.insert(p);
                    mentioned.insert(c);
                    edges.push((p, c, line_no));
                }
                _ => {
                    return Err(Error::parse(
                        line_no,
                        format!("expected `root <id>` or `<parent> <child>`, got `{line}`"),
                    ))
                }
            }
        }

        let root = root.ok_or(Error::Parse {
            line: None,
            message: "missing `root <id>` line".into(),
        })?;
        if let Some((p, line_no)) = parent[root as usize] {
            return Err(Error::parse(
                line_no,
                format!("edge {p} -> {root} points into the root (cycle through the root)"),
            ));
        }

        // Every vertex must be reachable from the root by following child links.
        let mut reached = VertexSet::singleton(root);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &(p, c, _) in &edges {
                if p == v && !reached.contains(c) {
                    reached.insert(c);
                    stack.push(c);
                }
            }
        }
        if let Some(stray) = mentioned.difference(reached).min() {
            let (_, line_no) = parent[stray as usize]
                .or_else(|| {
                    edges
                        .iter()
                        .find(|(p, _, _)| *p == stray)
                        .map(|&(p, _, l)| (p, l))
                })
                .expect("unreached vertex appears in some edge");
            let plain: Vec<Option<VertexId>> = parent.iter().map(|e| e.map(|(p, _)| p)).collect();
            return Err(Error::parse(line_no, unreachable_reason(stray, &plain)));
        }

        let n = mentioned.len();
        if mentioned != VertexSet::full(n) {
            let missing = VertexSet::full(mentioned.max().unwrap() as usize)
                .difference(mentioned)
                .min()
                .unwrap();
            return Err(Error::Parse {
                line: None,
                message: format!(
                    "labels must be exactly 1..={}; vertex {missing} is disconnected (never mentioned)",
                    mentioned.max().unwrap()
                ),
            });
        }

        let pairs: Vec<_> = edges.iter().map(|&(p, c, _)| (p, c)).collect();
        Self::new(root, &pairs)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: TreeFile = serde_json::from_str(text)?;
        Self::from_tree_file(&file)
    }

    pub fn from_tree_file(file: &TreeFile) -> Result<Self> {
        let edges: Vec<_> = file.edges.iter().map(|e| (e[0], e[1])).collect();
        let tree = Self::new(file.root, &edges)?;
        if tree.vertices != VertexSet::full(tree.n()) {
            return Err(Error::InvalidTree(format!(
                "labels must be exactly 1..={}, got {}",
                tree.n(),
                tree.vertices
            )));
        }
        Ok(tree)
    }

    pub fn to_tree_file(&self) -> TreeFile {
        TreeFile {
            root: self.root,
            edges: self.edges().into_iter().map(|(p, c)| [p, c]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_tree_file()).expect("tree serializes")
    }

    /// The text format, edges in `(parent, child)` order.
    pub fn to_text(&self) -> String {
        let mut out = format!("root {}\n", self.root);
        for (p, c) in self.edges() {
            out.push_str(&format!("{p} {c}\n"));
        }
        out
    }

    /// The chain `1 -> 2 -> ... -> n` rooted at 1.
    pub fn line(n: usize) -> Result<Self> {
        if n < 1 || n > MAX_VERTEX as usize {
            return Err(Error::InvalidTree(format!(
                "a line needs between 1 and {MAX_VERTEX} vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (1..n as VertexId).map(|v| (v, v + 1)).collect();
        Self::new(1, &edges)
    }

    /// Rooted at 1; vertex `i` picks its parent uniformly from `1..i`.
    pub fn random(n: usize, seed: u64) -> Result<Self> {
        if n < 1 || n > MAX_VERTEX as usize {
            return Err(Error::InvalidTree(format!(
                "a random tree needs between 1 and {MAX_VERTEX} vertices, got {n}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = (2..=n as VertexId)
            .map(|i| (rng.gen_range(1..i), i))
            .collect();
        Self::new(1, &edges)
    }

    /// `count` seeded random trees with `n` uniform in `2..=n_max`, each
    /// rerooted at a uniformly chosen vertex so the root is often a leaf.
    pub fn random_corpus(count: usize, n_max: usize, seed: u64) -> Result<Vec<Self>> {
        if n_max < 2 || n_max > MAX_VERTEX as usize {
            return Err(Error::InvalidTree(format!(
                "n_max must lie in 2..={MAX_VERTEX}, got {n_max}"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let n = rng.gen_range(2..=n_max);
                let tree_seed: u64 = rng.gen();
                let root = rng.gen_range(1..=n as VertexId);
                Self::random(n, tree_seed)?.reroot(root)
            })
            .collect()
    }

    /// The same undirected tree with edges re-oriented away from `new_root`.
    pub fn reroot(&self, new_root: VertexId) -> Result<Self> {
        if !self.contains(new_root) {
            return Err(Error::UnknownVertex(new_root));
        }
        let mut edges = Vec::with_capacity(self.n() - 1);
        let mut stack = vec![(new_root, None)];
        while let Some((v, from)) = stack.pop() {
            for w in self.neighbours(v) {
                if Some(w) != from {
                    edges.push((v, w));
                    stack.push((w, Some(v)));
                }
            }
        }
        Self::new(new_root, &edges)
    }

    /// The subtree induced on `keep`, which must contain the root and be connected.
    pub fn induced(&self, keep: VertexSet) -> Result<Self> {
        if !keep.contains(self.root) || !keep.is_subset(self.vertices) {
            return Err(Error::InvalidTree(format!(
                "{keep} must contain the root {} and lie inside the tree",
                self.root
            )));
        }
        let mut parent = vec![None; SLOTS];
        for v in keep {
            parent[v as usize] = self.parent[v as usize];
        }
        Self::from_parents(self.root, keep, parent)
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(v)
    }

    /// Largest label in use; the number of ring variables for ideals built from this tree.
    pub fn max_label(&self) -> VertexId {
        self.vertices.max().unwrap()
    }

    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        if self.contains(v) {
            self.parent[v as usize]
        } else {
            None
        }
    }

    pub fn children(&self, v: VertexId) -> &[VertexId] {
        if self.contains(v) {
            &self.children[v as usize]
        } else {
            &[]
        }
    }

    fn neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.parent[v as usize]
            .into_iter()
            .chain(self.children[v as usize].iter().copied())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.children(v).len() + usize::from(self.parent(v).is_some())
    }

    /// Edges sorted by `(parent, child)`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut edges: Vec<_> = self
            .vertices
            .iter()
            .filter_map(|c| self.parent[c as usize].map(|p| (p, c)))
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Number of edges between the root and `v`.
    pub fn level(&self, v: VertexId) -> Result<usize> {
        if self.contains(v) {
            Ok(self.level[v as usize])
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub(crate) fn level_of(&self, v: VertexId) -> usize {
        debug_assert!(self.contains(v));
        self.level[v as usize]
    }

    pub fn height(&self) -> usize {
        self.vertices
            .iter()
            .map(|v| self.level[v as usize])
            .max()
            .unwrap_or(0)
    }

    /// Vertices of undirected degree one. A root with a single child counts.
    /// A single-vertex tree has the root as its only leaf.
    pub fn leaves(&self) -> VertexSet {
        if self.n() == 1 {
            return VertexSet::singleton(self.root);
        }
        self.vertices
            .iter()
            .filter(|&v| self.degree(v) == 1)
            .collect()
    }

    /// True when the tree is one chain, with no vertex having two children.
    pub fn is_line(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| self.children[v as usize].len() <= 1)
    }

    /// The path with `k` vertices whose bottom vertex is `v`, if `v` is deep enough.
    pub fn path_ending_at(&self, v: VertexId, k: usize) -> Option<DirectedPath> {
        if k == 0 || !self.contains(v) || self.level[v as usize] + 1 < k {
            return None;
        }
        let mut path = Vec::with_capacity(k);
        let mut cur = v;
        path.push(cur);
        for _ in 1..k {
            cur = self.parent[cur as usize].expect("level bounds the ancestor chain");
            path.push(cur);
        }
        path.reverse();
        Some(DirectedPath(path))
    }

    /// Every path with `k` vertices whose top vertex is `v`, in lexicographic order.
    pub fn paths_starting_at(&self, v: VertexId, k: usize) -> Vec<DirectedPath> {
        if k == 0 || !self.contains(v) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut prefix = vec![v];
        self.extend_down(&mut prefix, k, &mut out);
        out
    }

    fn extend_down(&self, prefix: &mut Vec<VertexId>, k: usize, out: &mut Vec<DirectedPath>) {
        if prefix.len() == k {
            out.push(DirectedPath(prefix.clone()));
            return;
        }
        let last = *prefix.last().unwrap();
        for &c in &self.children[last as usize] {
            prefix.push(c);
            self.extend_down(prefix, k, out);
            prefix.pop();
        }
    }

    /// All directed paths with exactly `t` vertices, sorted lexicographically.
    /// A tree shorter than `t` simply has none.
    pub fn enumerate_paths(&self, t: usize) -> Result<Vec<DirectedPath>> {
        if t < 2 {
            return Err(Error::TOutOfRange { t, n: self.n() });
        }
        Ok(self.paths_with(t))
    }

    /// Each path is determined by its bottom vertex.
    pub(crate) fn paths_with(&self, k: usize) -> Vec<DirectedPath> {
        let mut paths: Vec<_> = self
            .vertices
            .iter()
            .filter_map(|v| self.path_ending_at(v, k))
            .collect();
        paths.sort();
        paths
    }

    pub(crate) fn check_t(&self, t: usize) -> Result<()> {
        if t < 2 || t > self.n() {
            Err(Error::TOutOfRange { t, n: self.n() })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootedTree")
            .field("root", &self.root)
            .field("edges", &self.edges())
            .finish()
    }
}

fn check_label(v: VertexId) -> std::result::Result<(), String> {
    if (1..=MAX_VERTEX).contains(&v) {
        Ok(())
    } else {
        Err(format!("vertex label {v} outside 1..={MAX_VERTEX}"))
    }
}

fn parse_label(s: &str) -> std::result::Result<VertexId, String> {
    let v: VertexId = s
        .parse()
        .map_err(|_| format!("`{s}` is not a vertex label"))?;
    check_label(v)?;
    Ok(v)
}

/// Explains why `v` cannot be reached from the root: its parent chain either
/// loops or stops at a vertex other than the root.
fn unreachable_reason(v: VertexId, parent: &[Option<VertexId>]) -> String {
    let mut seen = VertexSet::singleton(v);
    let mut cur = v;
    while let Some(p) = parent[cur as usize] {
        if seen.contains(p) {
            return format!("cycle through vertex {p}");
        }
        seen.insert(p);
        cur = p;
    }
    format!("vertex {v} is disconnected from the root")
}
