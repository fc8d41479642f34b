//! Path ideals, their facet complexes and their Stanley–Reisner complexes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, MAX_ENUM_VERTICES};
use crate::error::{Error, Result};
use crate::tree::RootedTree;
use crate::vertex_set::{VertexId, VertexSet, MAX_VERTEX};

/// A squarefree monomial ideal of `k[x_1, ..., x_n]`, stored as the supports of
/// its minimal generators. No generators means the zero ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct SquarefreeMonomialIdeal {
    n: usize,
    generators: Vec<VertexSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub n: usize,
    pub generators: Vec<Vec<VertexId>>,
}

impl SquarefreeMonomialIdeal {
    /// Reduces `supports` to the minimal ones. Rejects the unit ideal (an empty
    /// support) and variables beyond `x_n`.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, supports: I) -> Result<Self> {
        if n > MAX_VERTEX as usize {
            return Err(Error::InvalidIdeal(format!(
                "at most {MAX_VERTEX} variables are supported, got {n}"
            )));
        }
        let ambient = VertexSet::full(n);
        let mut gens: Vec<VertexSet> = Vec::new();
        for s in supports {
            if s.is_empty() {
                return Err(Error::InvalidIdeal("empty support (the unit ideal)".into()));
            }
            if !s.is_subset(ambient) {
                return Err(Error::InvalidIdeal(format!(
                    "support {s} uses a variable beyond x{n}"
                )));
            }
            gens.push(s);
        }
        gens.sort();
        gens.dedup();
        let mut minimal: Vec<VertexSet> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.is_subset(g)) {
                minimal.push(g);
            }
        }
        Ok(SquarefreeMonomialIdeal {
            n,
            generators: minimal,
        })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The complex whose facet ideal is this ideal.
    pub fn facet_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.generators.iter().copied())
    }

    /// Covering number of the facet complex; 0 for the zero ideal.
    pub fn height(&self) -> usize {
        self.facet_complex()
            .covering_number()
            .expect("generators are nonempty")
    }

    /// Squarefree monomial ideals are complete intersections exactly when the
    /// generator supports are pairwise disjoint.
    pub fn is_complete_intersection(&self) -> bool {
        self.overlapping_generators().is_none()
    }

    /// The first pair of generators sharing a variable.
    pub fn overlapping_generators(&self) -> Option<(VertexSet, VertexSet)> {
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                if !a.is_disjoint(*b) {
                    return Some((*a, *b));
                }
            }
        }
        None
    }

    /// `F` is a face of the Stanley–Reisner complex iff it contains no generator support.
    pub fn is_stanley_reisner_face(&self, f: VertexSet) -> bool {
        !self.generators.iter().any(|g| g.is_subset(f))
    }

    /// Facets of the Stanley–Reisner complex: the maximal subsets of `{1..n}`
    /// containing no generator support.
    pub fn stanley_reisner_complex(&self) -> Result<SimplicialComplex> {
        if self.n > MAX_ENUM_VERTICES {
            return Err(Error::guard(
                "Stanley-Reisner complex vertex count",
                MAX_ENUM_VERTICES,
                self.n,
            ));
        }
        let mut facets = Vec::new();
        self.grow_faces(1, VertexSet::EMPTY, &mut facets);
        Ok(SimplicialComplex::from_facets(facets))
    }

    /// Decides vertices `v..=n` in order; at the end keeps the set if no rejected
    /// vertex could have been added.
    fn grow_faces(&self, v: usize, face: VertexSet, out: &mut Vec<VertexSet>) {
        if v > self.n {
            let maximal = VertexSet::full(self.n)
                .difference(face)
                .iter()
                .all(|w| !self.is_stanley_reisner_face(face.with(w)));
            if maximal {
                out.push(face);
            }
            return;
        }
        let v = v as VertexId;
        let with = face.with(v);
        if self.is_stanley_reisner_face(with) {
            self.grow_faces(v as usize + 1, with, out);
        }
        self.grow_faces(v as usize + 1, face, out);
    }

    /// Monomial notation, e.g. `x1*x2*x4*x8`.
    pub fn monomial(support: VertexSet) -> String {
        support
            .iter()
            .map(|v| format!("x{v}"))
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn monomials(&self) -> Vec<String> {
        self.generators.iter().map(|g| Self::monomial(*g)).collect()
    }

    pub fn to_file(&self) -> IdealFile {
        IdealFile {
            n: self.n,
            generators: self.generators.iter().map(|g| g.to_vec()).collect(),
        }
    }

    pub fn from_file(file: &IdealFile) -> Result<Self> {
        let mut supports = Vec::with_capacity(file.generators.len());
        for g in &file.generators {
            let set: VertexSet = serde_json::from_value(serde_json::to_value(g)?)?;
            supports.push(set);
        }
        let ideal = Self::new(file.n, supports)?;
        if ideal.generators.len() != file.generators.len() {
            return Err(Error::InvalidIdeal("generator list is not minimal".into()));
        }
        Ok(ideal)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("ideal serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_file(&serde_json::from_str(text)?)
    }
}

impl fmt::Debug for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        write!(f, "({})", self.monomials().join(", "))
    }
}

/// `I_t(Γ)`: one generator per directed path with `t` vertices, in the ring
/// whose variables are the labels `1..=max_label`.
pub fn path_ideal(tree: &RootedTree, t: usize) -> Result<SquarefreeMonomialIdeal> {
    tree.check_t(t)?;
    SquarefreeMonomialIdeal::new(
        tree.max_label() as usize,
        tree.paths_with(t).iter().map(|p| p.to_set()),
    )
}

/// `Δ_t(Γ)`: the complex whose facets are the vertex sets of the `t`-paths.
pub fn path_complex(tree: &RootedTree, t: usize) -> Result<SimplicialComplex> {
    tree.check_t(t)?;
    Ok(SimplicialComplex::from_facets(
        tree.paths_with(t).iter().map(|p| p.to_set()),
    ))
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

    fn ideal(n: usize, gens: &[&[VertexId]]) -> SquarefreeMonomialIdeal {
        SquarefreeMonomialIdeal::new(n, gens.iter().map(|g| s(g))).unwrap()
    }

    #[test]
    fn binary_eleven_generators() {
        let i4 = path_ideal(&binary_eleven(), 4).unwrap();
        assert_eq!(
            i4.monomials(),
            vec!["x1*x2*x4*x8", "x1*x2*x4*x9", "x1*x3*x6*x10", "x1*x3*x7*x11"]
        );
        assert_eq!(i4.n(), 11);
        assert_eq!(
            path_complex(&binary_eleven(), 4).unwrap().facets(),
            i4.generators()
        );
    }

    #[test]
    fn small_ideals() {
        let l3 = RootedTree::line(3).unwrap();
        assert_eq!(path_ideal(&l3, 3).unwrap().generators(), &[s(&[1, 2, 3])]);
        let star = RootedTree::new(1, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(path_ideal(&star, 3).unwrap().is_zero());
        assert!(path_complex(&star, 3).unwrap().is_void());
        assert!(path_ideal(&l3, 4).is_err());
        assert!(path_ideal(&l3, 1).is_err());
        let l5 = RootedTree::line(5).unwrap();
        assert_eq!(
            path_complex(&l5, 3).unwrap().facets(),
            &[s(&[1, 2, 3]), s(&[2, 3, 4]), s(&[3, 4, 5])]
        );
    }

    #[test]
    fn stanley_reisner_faces() {
        let i4 = path_ideal(&binary_eleven(), 4).unwrap();
        assert!(i4.is_stanley_reisner_face(s(&[1, 2, 4])));
        assert!(!i4.is_stanley_reisner_face(s(&[1, 2, 4, 8])));
        assert!(SquarefreeMonomialIdeal::zero(5)
            .unwrap()
            .is_stanley_reisner_face(s(&[1, 2, 3, 4, 5])));
    }

    #[test]
    fn stanley_reisner_complexes() {
        let l3 = path_ideal(&RootedTree::line(3).unwrap(), 3).unwrap();
        assert_eq!(
            l3.stanley_reisner_complex().unwrap().facets(),
            &[s(&[1, 2]), s(&[1, 3]), s(&[2, 3])]
        );
        let l4 = path_ideal(&RootedTree::line(4).unwrap(), 2).unwrap();
        assert_eq!(
            l4.stanley_reisner_complex().unwrap().facets(),
            &[s(&[1, 3]), s(&[1, 4]), s(&[2, 4])]
        );
        assert_eq!(
            SquarefreeMonomialIdeal::zero(3)
                .unwrap()
                .stanley_reisner_complex()
                .unwrap()
                .facets(),
            &[s(&[1, 2, 3])]
        );
        let big = SquarefreeMonomialIdeal::zero(25).unwrap();
        assert!(big.stanley_reisner_complex().unwrap_err().is_guard());
    }

    #[test]
    fn heights() {
        assert_eq!(path_ideal(&binary_eleven(), 4).unwrap().height(), 1);
        assert_eq!(
            path_ideal(&RootedTree::line(4).unwrap(), 2)
                .unwrap()
                .height(),
            2
        );
        assert_eq!(SquarefreeMonomialIdeal::zero(4).unwrap().height(), 0);
    }

    #[test]
    fn complete_intersections() {
        assert!(ideal(3, &[&[1, 2, 3]]).is_complete_intersection());
        let i4 = path_ideal(&binary_eleven(), 4).unwrap();
        assert!(!i4.is_complete_intersection());
        let (a, b) = i4.overlapping_generators().unwrap();
        assert!(a.contains(1) && b.contains(1));
        assert!(ideal(6, &[&[1, 2, 3], &[4, 5, 6]]).is_complete_intersection());
        assert!(SquarefreeMonomialIdeal::zero(2)
            .unwrap()
            .is_complete_intersection());
    }

    #[test]
    fn constructor_validates() {
        assert!(SquarefreeMonomialIdeal::new(3, [VertexSet::EMPTY]).is_err());
        assert!(SquarefreeMonomialIdeal::new(3, [s(&[4])]).is_err());
        let reduced = ideal(4, &[&[1, 2], &[1, 2, 3], &[3, 4]]);
        assert_eq!(reduced.generators(), &[s(&[1, 2]), s(&[3, 4])]);
    }

    #[test]
    fn json_and_display() {
        let i4 = path_ideal(&binary_eleven(), 4).unwrap();
        assert_eq!(
            SquarefreeMonomialIdeal::from_json(&i4.to_json()).unwrap(),
            i4
        );
        assert_eq!(
            i4.to_string(),
            "(x1*x2*x4*x8, x1*x2*x4*x9, x1*x3*x6*x10, x1*x3*x7*x11)"
        );
        assert_eq!(SquarefreeMonomialIdeal::zero(3).unwrap().to_string(), "(0)");
        assert!(SquarefreeMonomialIdeal::from_json(r#"{"n":3,"generators":[[1],[1,2]]}"#).is_err());
    }
}
