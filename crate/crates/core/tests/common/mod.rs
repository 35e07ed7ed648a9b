//! Brute-force oracles written directly from the definitions. None of them
//! calls the library's algorithms; they only read generators and facets.
#![allow(dead_code)]

pub mod strategies;

use std::collections::BTreeSet;

use monopol::{Monomial, MonomialIdeal, Ring, SimplicialComplex};

pub type Exps = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn gens_of(ideal: &MonomialIdeal) -> Vec<Exps> {
    ideal
        .gens()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}

pub fn member(gens: &[Exps], m: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

/// Same ideal: each generating set lies in the other.
pub fn same_ideal(a: &[Exps], b: &[Exps]) -> bool {
    a.iter().all(|g| member(b, g)) && b.iter().all(|g| member(a, g))
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Every exponent vector below `bound` (inclusive), in lex order.
pub fn box_below(bound: &[u32]) -> Vec<Exps> {
    let mut out = vec![vec![]];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every subset of `0..n`, by increasing size.
pub fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
        .collect();
    all.sort_by_key(Vec::len);
    all
}

/// Smallest set of variables meeting the support of every generator.
pub fn height(gens: &[Exps], nvars: usize) -> usize {
    subsets(nvars)
        .into_iter()
        .find(|s| gens.iter().all(|g| s.iter().any(|&v| g[v] > 0)))
        .map(|s| s.len())
        .expect("the full variable set meets every nonconstant generator")
}

/// Minimal variable sets meeting every generator support.
pub fn minimal_covers(supports: &[BTreeSet<usize>], nvars: usize) -> BTreeSet<Vec<usize>> {
    let covers: Vec<Vec<usize>> = subsets(nvars)
        .into_iter()
        .filter(|s| supports.iter().all(|g| s.iter().any(|v| g.contains(v))))
        .collect();
    covers
        .iter()
        .filter(|c| {
            !covers
                .iter()
                .any(|d| d.len() < c.len() && d.iter().all(|v| c.contains(v)))
        })
        .cloned()
        .collect()
}

/// `(I : u)` is generated by `g / gcd(g, u)`.
pub fn colon(gens: &[Exps], u: &[u32]) -> Vec<Exps> {
    gens.iter()
        .map(|g| g.iter().zip(u).map(|(a, b)| a.saturating_sub(*b)).collect())
        .collect()
}

/// The variable set when `(I : u)` is generated by variables, else `None`.
pub fn prime_colon(gens: &[Exps], u: &[u32]) -> Option<Vec<usize>> {
    let c = colon(gens, u);
    if c.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return None;
    }
    // minimal generators of the colon
    let min: Vec<&Exps> = c
        .iter()
        .filter(|g| !c.iter().any(|h| h != *g && divides(h, g)))
        .collect();
    if min.iter().all(|g| g.iter().sum::<u32>() == 1) {
        let vars: BTreeSet<usize> = min
            .iter()
            .map(|g| g.iter().position(|&e| e == 1).unwrap())
            .collect();
        Some(vars.into_iter().collect())
    } else {
        None
    }
}

/// `Ass(J/I)` by trying every `u` in the lcm box that lies in `J` and not
/// in `I`. `numerator = None` means `J = R`.
pub fn ass(gens: &[Exps], numerator: Option<&[Exps]>, nvars: usize) -> BTreeSet<Vec<usize>> {
    let mut bound = vec![0u32; nvars];
    for g in gens.iter().chain(numerator.unwrap_or(&[]).iter()) {
        bound = lcm(&bound, g);
    }
    box_below(&bound)
        .into_iter()
        .filter(|u| numerator.is_none_or(|j| member(j, u)))
        .filter(|u| !member(gens, u))
        .filter_map(|u| prime_colon(gens, &u))
        .collect()
}

/// Largest family of pairwise coprime generators.
pub fn beta(gens: &[Exps]) -> usize {
    subsets(gens.len())
        .into_iter()
        .filter(|s| {
            s.iter().enumerate().all(|(k, &a)| {
                s[k + 1..].iter().all(|&b| {
                    gens[a]
                        .iter()
                        .zip(&gens[b])
                        .all(|(x, y)| *x == 0 || *y == 0)
                })
            })
        })
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Polar generator as a set of `(base, slot)` pairs, slots from 1.
pub fn polar_pairs(g: &[u32]) -> BTreeSet<(usize, u32)> {
    g.iter()
        .enumerate()
        .flat_map(|(i, &a)| (1..=a).map(move |j| (i, j)))
        .collect()
}

/// Library polar generators read back as `(base, slot)` pairs through the
/// variable names `x[i,j]`.
pub fn named_pairs(m: &Monomial, ring: &Ring) -> BTreeSet<(usize, u32)> {
    m.support()
        .map(|v| {
            let name = ring.name(v);
            let inner = name.strip_prefix("x[").unwrap().strip_suffix(']').unwrap();
            let (i, j) = inner.split_once(',').unwrap();
            (i.parse::<usize>().unwrap() - 1, j.parse().unwrap())
        })
        .collect()
}

pub type Facets = Vec<BTreeSet<usize>>;

pub fn facets_of(c: &SimplicialComplex) -> Facets {
    c.facets().iter().map(|f| f.iter().collect()).collect()
}

/// Leaf test straight from the definition: the vertices `F` shares with
/// the other facets lie in one of them.
pub fn is_leaf(facets: &[BTreeSet<usize>], i: usize) -> bool {
    if facets.len() == 1 {
        return true;
    }
    let shared: BTreeSet<usize> = facets
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != i)
        .flat_map(|(_, g)| facets[i].intersection(g).copied().collect::<Vec<_>>())
        .collect();
    facets
        .iter()
        .enumerate()
        .any(|(j, g)| j != i && shared.is_subset(g))
}

/// Every nonempty subcollection has a leaf.
pub fn is_forest(facets: &[BTreeSet<usize>]) -> bool {
    subsets(facets.len()).into_iter().skip(1).all(|s| {
        let sub: Facets = s.iter().map(|&i| facets[i].clone()).collect();
        (0..sub.len()).any(|i| is_leaf(&sub, i))
    })
}

pub fn is_connected(facets: &[BTreeSet<usize>]) -> bool {
    if facets.is_empty() {
        return false;
    }
    let mut reached = vec![false; facets.len()];
    reached[0] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..facets.len() {
            for j in 0..facets.len() {
                if reached[i] && !reached[j] && !facets[i].is_disjoint(&facets[j]) {
                    reached[j] = true;
                    changed = true;
                }
            }
        }
    }
    reached.into_iter().all(|r| r)
}

pub fn is_face(facets: &[BTreeSet<usize>], s: &[usize]) -> bool {
    facets.iter().any(|f| s.iter().all(|v| f.contains(v)))
}

/// Minimal subsets of `0..n` that are not faces.
pub fn minimal_nonfaces(facets: &[BTreeSet<usize>], n: usize) -> BTreeSet<Vec<usize>> {
    let nonfaces: Vec<Vec<usize>> = subsets(n)
        .into_iter()
        .filter(|s| !is_face(facets, s))
        .collect();
    nonfaces
        .iter()
        .filter(|s| {
            !nonfaces
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|v| s.contains(v)))
        })
        .cloned()
        .collect()
}

/// Intersection of monomial ideals by membership: a monomial in the lcm
/// box lies in the intersection iff it lies in each ideal. Returns the
/// minimal such monomials.
pub fn intersect_by_membership(ideals: &[Vec<Exps>], nvars: usize) -> Vec<Exps> {
    let mut bound = vec![0u32; nvars];
    for g in ideals.iter().flatten() {
        bound = lcm(&bound, g);
    }
    let inside: Vec<Exps> = box_below(&bound)
        .into_iter()
        .filter(|m| ideals.iter().all(|i| member(i, m)))
        .collect();
    inside
        .iter()
        .filter(|m| !inside.iter().any(|k| k != *m && divides(k, m)))
        .cloned()
        .collect()
}
