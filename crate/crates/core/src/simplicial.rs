//! Simplicial complexes given by their facets, and the square-free
//! dictionary between complexes and ideals.

use std::cmp::Ordering;
use std::fmt;

use crate::decomposition::max_pairwise_disjoint;
use crate::error::{Error, Result};
use crate::ideal::{minimalize, SquareFreeIdeal};
use crate::monomial::Monomial;
use crate::ring::Ring;

/// Largest facet count accepted by the exhaustive forest check.
pub const MAX_FOREST_FACETS: usize = 20;

/// A set of vertex indices stored as a bitset.
///
/// Sets compare like the square-free monomials they describe under lex:
/// the set holding the smallest index where the two differ is the greater.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: usize) {
        let w = v / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if let Some(word) = self.words.get_mut(v / 64) {
            *word &= !(1 << (v % 64));
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn last(&self) -> Option<usize> {
        let (i, w) = self.words.iter().enumerate().next_back()?;
        Some(i * 64 + 63 - w.leading_zeros() as usize)
    }

    fn combine(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let n = self.words.len().max(other.words.len());
        let get = |s: &Self, i| s.words.get(i).copied().unwrap_or(0);
        let mut out = VertexSet {
            words: (0..n).map(|i| f(get(self, i), get(other, i))).collect(),
        };
        out.trim();
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn to_monomial(&self, nvars: usize) -> Monomial {
        Monomial::from_support(nvars, self.iter())
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        m.support().collect()
    }

    pub fn display(&self, ring: &Ring) -> String {
        let names: Vec<&str> = self.iter().map(|v| ring.name(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.words.len().max(other.words.len());
        for i in 0..n {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            let diff = a ^ b;
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if a & low != 0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Inclusion-minimal sets meeting every member of `edges` (Berge's
/// algorithm). Empty when some edge is empty.
pub fn minimal_transversals(edges: &[VertexSet]) -> Vec<VertexSet> {
    let mut current = vec![VertexSet::new()];
    for edge in edges {
        let mut next: Vec<VertexSet> = Vec::new();
        for t in &current {
            if !t.is_disjoint(edge) {
                next.push(t.clone());
            } else {
                for v in edge.iter() {
                    let mut u = t.clone();
                    u.insert(v);
                    next.push(u);
                }
            }
        }
        next.sort_by_key(VertexSet::len);
        next.dedup();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(next.len());
        for s in next {
            if !kept.iter().any(|k| k.is_subset(&s)) {
                kept.push(s);
            }
        }
        current = kept;
    }
    current.sort_by_key(VertexSet::to_vec);
    current
}

/// A simplicial complex on a fixed, named vertex set, stored by its facets.
///
/// Vertices in no facet are isolated. A complex with no facets is the void
/// complex; `⟨∅⟩` has one empty facet and is a different complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Ring,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal sets, sorted descending.
    pub fn new(vertices: &Ring, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        let n = vertices.len();
        let mut all: Vec<VertexSet> = facets.into_iter().collect();
        for f in &all {
            if let Some(index) = f.last().filter(|&m| m >= n) {
                return Err(Error::VariableOutOfRange { index, size: n });
            }
        }
        all.sort_by_key(|f| std::cmp::Reverse(f.len()));
        all.dedup();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(all.len());
        for f in all {
            if !kept.iter().any(|k| f.is_subset(k)) {
                kept.push(f);
            }
        }
        kept.sort_by(|a, b| b.cmp(a));
        Ok(SimplicialComplex {
            vertices: vertices.clone(),
            facets: kept,
        })
    }

    /// Builds from facets given as lists of vertex names.
    pub fn from_named<F, S>(vertices: &Ring, facets: F) -> Result<Self>
    where
        F: IntoIterator,
        F::Item: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut sets = Vec::new();
        for facet in facets {
            let mut set = VertexSet::new();
            for name in facet {
                let name = name.as_ref();
                let v = vertices.index_of(name).ok_or_else(|| Error::Parse {
                    position: 0,
                    message: format!("unknown vertex `{name}`"),
                })?;
                set.insert(v);
            }
            sets.push(set);
        }
        Self::new(vertices, sets)
    }

    pub fn void(vertices: &Ring) -> Self {
        SimplicialComplex {
            vertices: vertices.clone(),
            facets: Vec::new(),
        }
    }

    /// The full simplex on all vertices.
    pub fn simplex(vertices: &Ring) -> Self {
        SimplicialComplex {
            vertices: vertices.clone(),
            facets: vec![VertexSet::full(vertices.len())],
        }
    }

    pub fn vertices(&self) -> &Ring {
        &self.vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, set: &VertexSet) -> bool {
        self.facets.iter().any(|f| set.is_subset(f))
    }

    /// Vertices belonging to no facet.
    pub fn isolated_vertices(&self) -> VertexSet {
        let used = self
            .facets
            .iter()
            .fold(VertexSet::new(), |acc, f| acc.union(f));
        VertexSet::full(self.vertices.len()).difference(&used)
    }

    fn position(&self, facet: &VertexSet) -> Result<usize> {
        self.facets
            .iter()
            .position(|f| f == facet)
            .ok_or(Error::NotAFacet)
    }

    /// The complex whose facets are the given positions of this one.
    pub fn subcollection(&self, positions: &[usize]) -> SimplicialComplex {
        let mut facets: Vec<VertexSet> =
            positions.iter().map(|&i| self.facets[i].clone()).collect();
        facets.sort_by(|a, b| b.cmp(a));
        facets.dedup();
        SimplicialComplex {
            vertices: self.vertices.clone(),
            facets,
        }
    }

    /// One generator per facet. The void complex gives the zero ideal and
    /// `⟨∅⟩` the unit ideal, both reported as errors.
    pub fn facet_ideal(&self) -> Result<SquareFreeIdeal> {
        if self.is_void() {
            return Err(Error::ZeroIdeal);
        }
        let n = self.vertices.len();
        let ideal = minimalize(&self.vertices, self.facets.iter().map(|f| f.to_monomial(n)))?;
        SquareFreeIdeal::new(ideal)
    }

    /// Generated by the minimal non-faces. The full simplex has none
    /// (`ZeroIdeal`); the void complex has `∅` as a non-face (`UnitIdeal`).
    pub fn nonface_ideal(&self) -> Result<SquareFreeIdeal> {
        let nonfaces = self.minimal_nonfaces();
        if nonfaces.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let n = self.vertices.len();
        let ideal = minimalize(&self.vertices, nonfaces.iter().map(|f| f.to_monomial(n)))?;
        SquareFreeIdeal::new(ideal)
    }

    /// A set is a non-face exactly when it meets the complement of every
    /// facet.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let all = VertexSet::full(self.vertices.len());
        let complements: Vec<VertexSet> = self.facets.iter().map(|f| all.difference(f)).collect();
        minimal_transversals(&complements)
    }

    /// Faces are the complements of non-faces.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let all = VertexSet::full(self.vertices.len());
        let facets = self
            .minimal_nonfaces()
            .iter()
            .map(|s| all.difference(s))
            .collect::<Vec<_>>();
        SimplicialComplex::new(&self.vertices, facets).expect("vertices in range")
    }

    /// Minimal sets meeting every facet, sorted by their index lists.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        minimal_transversals(&self.facets)
    }

    /// Smallest vertex cover size; `None` when `∅` is a facet.
    pub fn alpha(&self) -> Option<usize> {
        self.minimal_vertex_covers()
            .iter()
            .map(VertexSet::len)
            .min()
    }

    pub fn is_unmixed(&self) -> bool {
        let covers = self.minimal_vertex_covers();
        covers.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Largest number of pairwise disjoint facets.
    pub fn beta(&self) -> usize {
        let sets: Vec<Vec<usize>> = self.facets.iter().map(VertexSet::to_vec).collect();
        max_pairwise_disjoint(&sets)
    }

    /// Drops one facet; its private vertices become isolated. Removing the
    /// last facet gives the void complex.
    pub fn remove_facet(&self, facet: &VertexSet) -> Result<SimplicialComplex> {
        let i = self.position(facet)?;
        let mut facets = self.facets.clone();
        facets.remove(i);
        Ok(SimplicialComplex {
            vertices: self.vertices.clone(),
            facets,
        })
    }

    /// Vertices of `facet` that lie in some other facet.
    fn shared_part(&self, i: usize) -> VertexSet {
        let f = &self.facets[i];
        self.facets
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(VertexSet::new(), |acc, (_, g)| {
                acc.union(&f.intersection(g))
            })
    }

    pub fn is_leaf(&self, facet: &VertexSet) -> Result<bool> {
        let i = self.position(facet)?;
        Ok(self.is_leaf_at(i))
    }

    fn is_leaf_at(&self, i: usize) -> bool {
        if self.facets.len() == 1 {
            return true;
        }
        let shared = self.shared_part(i);
        self.facets
            .iter()
            .enumerate()
            .any(|(j, g)| j != i && shared.is_subset(g))
    }

    /// Facets `G ≠ F` containing every vertex `F` shares with the rest and
    /// meeting `F`. Empty unless `F` is a leaf.
    pub fn joints(&self, facet: &VertexSet) -> Result<Vec<VertexSet>> {
        let i = self.position(facet)?;
        let shared = self.shared_part(i);
        if shared.is_empty() {
            return Ok(Vec::new());
        }
        Ok(self
            .facets
            .iter()
            .enumerate()
            .filter(|&(j, g)| j != i && shared.is_subset(g))
            .map(|(_, g)| g.clone())
            .collect())
    }

    pub fn leaves(&self) -> Vec<VertexSet> {
        (0..self.facets.len())
            .filter(|&i| self.is_leaf_at(i))
            .map(|i| self.facets[i].clone())
            .collect()
    }

    /// Vertices of `facet` in no other facet.
    pub fn free_vertices(&self, facet: &VertexSet) -> Result<VertexSet> {
        let i = self.position(facet)?;
        Ok(self.facets[i].difference(&self.shared_part(i)))
    }

    /// The facet-intersection graph is connected. The void complex is not.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Facet positions grouped by connected component.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let q = self.facets.len();
        let mut seen = vec![false; q];
        let mut out = Vec::new();
        for start in 0..q {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(i) = stack.pop() {
                comp.push(i);
                for (j, facet) in self.facets.iter().enumerate() {
                    if !seen[j] && !self.facets[i].is_disjoint(facet) {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A smallest subcollection without a leaf, as facet positions, or
    /// `None` for a forest. Exhaustive, so limited to
    /// [`MAX_FOREST_FACETS`] facets.
    pub fn leafless_subcollection(&self) -> Result<Option<Vec<usize>>> {
        let q = self.facets.len();
        if q > MAX_FOREST_FACETS {
            return Err(Error::TooManyFacets {
                limit: MAX_FOREST_FACETS,
                actual: q,
            });
        }
        let meets: Vec<Vec<VertexSet>> = self
            .facets
            .iter()
            .map(|f| self.facets.iter().map(|g| f.intersection(g)).collect())
            .collect();
        let has_leaf = |mask: u64| {
            let members: Vec<usize> = (0..q).filter(|&i| mask >> i & 1 == 1).collect();
            members.iter().any(|&i| {
                let shared = members
                    .iter()
                    .filter(|&&j| j != i)
                    .fold(VertexSet::new(), |acc, &j| acc.union(&meets[i][j]));
                members
                    .iter()
                    .any(|&j| j != i && shared.is_subset(&self.facets[j]))
            })
        };
        // Singletons and pairs always have a leaf.
        for size in 3..=q {
            let mut mask: u64 = (1 << size) - 1;
            while mask < 1 << q {
                if !has_leaf(mask) {
                    return Ok(Some((0..q).filter(|&i| mask >> i & 1 == 1).collect()));
                }
                // next mask with the same number of bits
                let c = mask & mask.wrapping_neg();
                let r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        Ok(None)
    }

    pub fn is_forest(&self) -> Result<bool> {
        Ok(self.leafless_subcollection()?.is_none())
    }

    pub fn is_tree(&self) -> Result<bool> {
        Ok(self.is_connected() && self.is_forest()?)
    }

    pub fn display_facets(&self) -> Vec<String> {
        self.facets
            .iter()
            .map(|f| f.display(&self.vertices))
            .collect()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.display_facets().join(", "))
    }
}

/// One facet per minimal generator.
pub fn facet_complex(ideal: &SquareFreeIdeal) -> SimplicialComplex {
    SimplicialComplex::new(
        ideal.ring(),
        ideal.gens().iter().map(VertexSet::from_monomial),
    )
    .expect("generators live in the ring")
}

/// Faces are the sets whose product is outside the ideal; facets are the
/// complements of the minimal vertex covers.
pub fn nonface_complex(ideal: &SquareFreeIdeal) -> SimplicialComplex {
    let all = VertexSet::full(ideal.ring().len());
    let supports: Vec<VertexSet> = ideal.gens().iter().map(VertexSet::from_monomial).collect();
    let facets: Vec<VertexSet> = minimal_transversals(&supports)
        .iter()
        .map(|c| all.difference(c))
        .collect();
    SimplicialComplex::new(ideal.ring(), facets).expect("vertices in range")
}

pub fn alexander_dual_complex(complex: &SimplicialComplex) -> SimplicialComplex {
    complex.alexander_dual()
}

/// The non-face ideal of the dual of the non-face complex.
pub fn alexander_dual_ideal(ideal: &SquareFreeIdeal) -> Result<SquareFreeIdeal> {
    nonface_complex(ideal).alexander_dual().nonface_ideal()
}
