//! Seedable generators for monomial ideals, simplicial forests and ideals
//! whose polarization is a given forest.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::decomposition::MonomialPrime;
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::ring::Ring;
use crate::simplicial::{SimplicialComplex, VertexSet};

/// Size limits for [`random_ideal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealShape {
    pub nvars: usize,
    pub max_degree: u32,
    pub max_gens: usize,
}

impl Default for IdealShape {
    fn default() -> Self {
        IdealShape {
            nvars: 5,
            max_degree: 4,
            max_gens: 6,
        }
    }
}

/// A monomial of total degree `1..=max_degree`.
pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, nvars: usize, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(1..=max_degree);
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exponents(exps)
}

/// A nonzero proper ideal in `x1..xn` with at most `max_gens` minimal
/// generators.
pub fn random_ideal<R: Rng + ?Sized>(rng: &mut R, shape: IdealShape) -> MonomialIdeal {
    let ring = Ring::indexed("x", shape.nvars);
    let count = rng.gen_range(1..=shape.max_gens);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| random_monomial(rng, shape.nvars, shape.max_degree))
        .collect();
    minimalize(&ring, gens).expect("no constant generators")
}

/// A prime generated by a random nonempty subset of the variables.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R, ring: &Ring) -> MonomialPrime {
    loop {
        let vars: Vec<usize> = (0..ring.len()).filter(|_| rng.gen_bool(0.5)).collect();
        if !vars.is_empty() {
            return MonomialPrime::new(ring, vars).expect("indices in range");
        }
    }
}

/// A simplicial forest with `1..=max_facets` facets on vertices
/// `v1, v2, ...`.
///
/// Each new facet meets the current vertex set inside a single existing
/// facet `G`, without swallowing `G`, and brings at least one new vertex.
/// That alone does not rule out leafless subcollections, so candidates
/// that break the forest property are rejected.
pub fn random_forest<R: Rng + ?Sized>(rng: &mut R, max_facets: usize) -> SimplicialComplex {
    let target = rng.gen_range(1..=max_facets.max(1));
    let mut next_vertex = rng.gen_range(1..=3);
    let mut facets: Vec<VertexSet> = vec![(0..next_vertex).collect()];
    let mut attempts = 0;
    while facets.len() < target && attempts < 50 * target {
        attempts += 1;
        let mut candidate = VertexSet::new();
        if !rng.gen_bool(0.15) {
            let joint = facets.choose(rng).expect("nonempty").to_vec();
            let keep = rng.gen_range(0..joint.len());
            candidate.extend(joint.choose_multiple(rng, keep).copied());
        }
        let added = rng.gen_range(1..=3);
        candidate.extend(next_vertex..next_vertex + added);
        let mut all = facets.clone();
        all.push(candidate.clone());
        let ring = Ring::indexed("v", next_vertex + added);
        let complex = SimplicialComplex::new(&ring, all).expect("vertices in range");
        if complex.is_forest().expect("few facets") {
            facets.push(candidate);
            next_vertex += added;
        }
    }
    let ring = Ring::indexed("v", next_vertex);
    SimplicialComplex::new(&ring, facets).expect("vertices in range")
}

/// An ideal `I` together with the vertex chains it was read off from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Depolarization {
    pub ideal: MonomialIdeal,
    /// `chains[b][j]` is the vertex playing the role of `x[b+1, j+1]`.
    pub chains: Vec<Vec<usize>>,
}

/// A monomial ideal whose polarization is the facet ideal of `complex`, up
/// to renaming vertices.
///
/// Vertices are grouped into chains `w_1, w_2, ...` in which every facet
/// through `w_{j+1}` also passes through `w_j`. Each chain becomes one
/// variable, and a facet `F` becomes `∏ x_b^{|F ∩ chain_b|}`. Isolated
/// vertices are left out.
pub fn random_depolarization<R: Rng + ?Sized>(
    rng: &mut R,
    complex: &SimplicialComplex,
) -> Depolarization {
    let n = complex.vertices().len();
    let star: Vec<VertexSet> = (0..n)
        .map(|v| {
            (0..complex.facets().len())
                .filter(|&i| complex.facets()[i].contains(v))
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = (0..n).filter(|&v| !star[v].is_empty()).collect();
    order.shuffle(rng);
    order.sort_by_key(|&v| std::cmp::Reverse(star[v].len()));
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for v in order {
        let fits: Vec<usize> = (0..chains.len())
            .filter(|&c| star[v].is_subset(&star[*chains[c].last().expect("nonempty")]))
            .collect();
        match fits.choose(rng) {
            Some(&c) if rng.gen_bool(0.6) => chains[c].push(v),
            _ => chains.push(vec![v]),
        }
    }
    chains.shuffle(rng);
    let ring = Ring::indexed("x", chains.len());
    let gens = complex.facets().iter().map(|f| {
        Monomial::from_exponents(
            chains
                .iter()
                .map(|chain| chain.iter().filter(|&&v| f.contains(v)).count() as u32)
                .collect::<Vec<_>>(),
        )
    });
    Depolarization {
        ideal: minimalize(&ring, gens).expect("facets are nonempty"),
        chains,
    }
}
