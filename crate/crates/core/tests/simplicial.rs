mod common;

use std::collections::BTreeSet;

use common::strategies::*;
use common::*;
use monopol::decomposition::{height, minimal_primes};
use monopol::random::random_forest;
use monopol::simplicial::{alexander_dual_ideal, facet_complex, nonface_complex};
use monopol::{Error, SimplicialComplex, VertexSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sets(v: &[VertexSet]) -> BTreeSet<Vec<usize>> {
    v.iter().map(VertexSet::to_vec).collect()
}

proptest! {
    #[test]
    fn facet_ideal_and_complex_are_inverse(c in complex(6, 6)) {
        let i = c.facet_ideal().unwrap();
        prop_assert_eq!(&facet_complex(&i), &c);
        prop_assert_eq!(facet_complex(&i).facet_ideal().unwrap(), i);
    }

    #[test]
    fn covers_match_enumeration(c in complex(6, 6)) {
        let n = c.vertices().len();
        let oracle = minimal_covers(&facets_of(&c), n);
        prop_assert_eq!(sets(&c.minimal_vertex_covers()), oracle.clone());
        let primes: BTreeSet<Vec<usize>> = minimal_primes(c.facet_ideal().unwrap().ideal())
            .unwrap()
            .iter()
            .map(|p| p.vars().to_vec())
            .collect();
        prop_assert_eq!(primes, oracle.clone());
        prop_assert_eq!(c.alpha(), oracle.iter().map(Vec::len).min());
        prop_assert_eq!(c.alpha().unwrap(), height(c.facet_ideal().unwrap().ideal()).unwrap());
        let sizes: BTreeSet<usize> = oracle.iter().map(Vec::len).collect();
        prop_assert_eq!(c.is_unmixed(), sizes.len() <= 1);
    }

    #[test]
    fn nonfaces_match_enumeration(c in complex(6, 5)) {
        let n = c.vertices().len();
        let oracle = minimal_nonfaces(&facets_of(&c), n);
        prop_assert_eq!(sets(&c.minimal_nonfaces()), oracle.clone());
        match c.nonface_ideal() {
            Ok(ideal) => {
                let got: BTreeSet<Vec<usize>> = ideal.gens().iter().map(|g| g.support().collect()).collect();
                prop_assert_eq!(got, oracle);
            }
            Err(e) => {
                prop_assert_eq!(e, Error::ZeroIdeal);
                prop_assert!(oracle.is_empty());
            }
        }
    }

    #[test]
    fn dual_faces_are_complements_of_nonfaces(c in complex(6, 5)) {
        let n = c.vertices().len();
        let dual = c.alexander_dual();
        let facets = facets_of(&c);
        let dual_facets = facets_of(&dual);
        for s in subsets(n) {
            let complement: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
            prop_assert_eq!(is_face(&dual_facets, &s), !is_face(&facets, &complement));
        }
        prop_assert_eq!(dual.alexander_dual(), c);
    }

    #[test]
    fn nonface_complex_matches_membership(c in complex(6, 5)) {
        let i = c.facet_ideal().unwrap();
        let n = c.vertices().len();
        let gens = gens_of(i.ideal());
        let faces = facets_of(&nonface_complex(&i));
        for s in subsets(n) {
            let m: Vec<u32> = (0..n).map(|v| u32::from(s.contains(&v))).collect();
            prop_assert_eq!(is_face(&faces, &s), !member(&gens, &m));
        }
        let dual = alexander_dual_ideal(&i).unwrap();
        prop_assert_eq!(alexander_dual_ideal(&dual).unwrap(), i);
    }

    #[test]
    fn leaves_forests_and_connectivity_match_definitions(c in complex(6, 6)) {
        let facets = facets_of(&c);
        let leaves: BTreeSet<Vec<usize>> = (0..facets.len())
            .filter(|&i| is_leaf(&facets, i))
            .map(|i| facets[i].iter().copied().collect())
            .collect();
        prop_assert_eq!(sets(&c.leaves()), leaves);
        prop_assert_eq!(c.is_forest().unwrap(), is_forest(&facets));
        prop_assert_eq!(c.is_connected(), is_connected(&facets));
        prop_assert_eq!(c.is_tree().unwrap(), is_forest(&facets) && is_connected(&facets));
        prop_assert_eq!(c.beta(), beta(&gens_of(c.facet_ideal().unwrap().ideal())));
        if let Some(w) = c.leafless_subcollection().unwrap() {
            let sub: Facets = w.iter().map(|&i| facets[i].clone()).collect();
            prop_assert!((0..sub.len()).all(|i| !is_leaf(&sub, i)));
            // no smaller leafless subcollection
            for s in subsets(facets.len()).into_iter().filter(|s| !s.is_empty() && s.len() < w.len()) {
                let smaller: Facets = s.iter().map(|&i| facets[i].clone()).collect();
                prop_assert!((0..smaller.len()).any(|i| is_leaf(&smaller, i)));
            }
        }
    }

    #[test]
    fn joints_contain_the_shared_part(c in complex(6, 6)) {
        let facets = facets_of(&c);
        for (i, f) in c.facets().iter().enumerate() {
            let joints = c.joints(f).unwrap();
            if !c.is_leaf(f).unwrap() {
                prop_assert!(joints.is_empty());
            }
            for g in &joints {
                prop_assert!(g != f && !g.is_disjoint(f));
                let shared: BTreeSet<usize> = facets
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .flat_map(|(_, h)| facets[i].intersection(h).copied().collect::<Vec<_>>())
                    .collect();
                prop_assert!(shared.iter().all(|&v| g.contains(v)));
            }
            let free = c.free_vertices(f).unwrap();
            for v in f.iter() {
                let elsewhere = facets.iter().enumerate().any(|(j, h)| j != i && h.contains(&v));
                prop_assert_eq!(free.contains(v), !elsewhere);
            }
        }
    }
}

#[test]
fn leaves_of_forests_have_free_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let f = random_forest(&mut rng, 7);
        assert!(is_forest(&facets_of(&f)));
        for leaf in f.leaves() {
            assert!(!f.free_vertices(&leaf).unwrap().is_empty(), "{f}");
        }
    }
}

#[test]
fn subcollections_of_forests_are_forests() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..60 {
        let f = random_forest(&mut rng, 7);
        for s in subsets(f.facets().len()).into_iter().skip(1) {
            assert!(f.subcollection(&s).is_forest().unwrap());
        }
    }
}

#[test]
fn removing_every_facet_reaches_void() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut f = random_forest(&mut rng, 5);
    while let Some(facet) = f.facets().first().cloned() {
        f = f.remove_facet(&facet).unwrap();
    }
    assert!(f.is_void());
    assert_eq!(f.facet_ideal().unwrap_err(), Error::ZeroIdeal);
    assert_ne!(
        f,
        SimplicialComplex::new(f.vertices(), [VertexSet::new()]).unwrap()
    );
}

#[test]
fn forest_check_has_a_size_limit() {
    let ring = monopol::Ring::indexed("v", 25);
    let c = SimplicialComplex::new(&ring, (0..21).map(|i| [i].into_iter().collect())).unwrap();
    assert_eq!(
        c.is_forest().unwrap_err(),
        Error::TooManyFacets {
            limit: 20,
            actual: 21
        }
    );
}
