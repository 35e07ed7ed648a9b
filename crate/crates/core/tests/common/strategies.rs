//! Proptest strategies for small ideals and complexes.

use std::collections::BTreeSet;

use monopol::{MonomialIdeal, Ring, SimplicialComplex, VertexSet};
use proptest::prelude::*;

fn capped(mut g: Vec<u32>, max_degree: u32) -> Vec<u32> {
    while g.iter().sum::<u32>() > max_degree {
        let i = (0..g.len()).max_by_key(|&i| g[i]).unwrap();
        g[i] -= 1;
    }
    g
}

/// Exponent vectors of total degree `1..=max_degree`.
pub fn gens(n: usize, max_degree: u32, max_gens: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..=max_degree, n), 1..=max_gens).prop_filter_map(
        "needs a nonconstant generator",
        move |gs| {
            let gs: Vec<Vec<u32>> = gs
                .into_iter()
                .map(|g| capped(g, max_degree))
                .filter(|g| g.iter().any(|&e| e > 0))
                .collect();
            (!gs.is_empty()).then_some(gs)
        },
    )
}

pub fn ideal_of(n: usize, gs: &[Vec<u32>]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(&Ring::indexed("x", n), gs.iter().cloned()).unwrap()
}

/// At most 5 variables, degree at most 4, at most 6 generators.
pub fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=5).prop_flat_map(|n| gens(n, 4, 6).prop_map(move |gs| ideal_of(n, &gs)))
}

pub fn ideal_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=5).prop_flat_map(|n| {
        (gens(n, 4, 6), gens(n, 4, 6)).prop_map(move |(a, b)| (ideal_of(n, &a), ideal_of(n, &b)))
    })
}

/// An ideal and a second one containing it.
pub fn nested_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=4).prop_flat_map(|n| {
        (gens(n, 4, 5), gens(n, 3, 3)).prop_map(move |(a, b)| {
            let i = ideal_of(n, &a);
            let j = i.sum(&ideal_of(n, &b)).unwrap();
            (i, j)
        })
    })
}

/// Complexes on up to `max_vertices` vertices with nonempty facets.
pub fn complex(max_vertices: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=n), 1..=max_facets).prop_map(
            move |fs: Vec<BTreeSet<usize>>| {
                let ring = Ring::indexed("v", n);
                SimplicialComplex::new(
                    &ring,
                    fs.into_iter().map(|f| f.into_iter().collect::<VertexSet>()),
                )
                .unwrap()
            },
        )
    })
}
