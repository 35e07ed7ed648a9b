//! Irreducible decompositions, primes, heights and associated primes of
//! monomial ideals.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{minimal_set, minimalize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::ring::Ring;

/// A prime generated by a nonempty set of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialPrime {
    ring: Ring,
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(ring: &Ring, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let vars: BTreeSet<usize> = vars.into_iter().collect();
        if vars.is_empty() {
            return Err(Error::EmptyPrime);
        }
        if let Some(&index) = vars.iter().find(|&&v| v >= ring.len()) {
            return Err(Error::VariableOutOfRange {
                index,
                size: ring.len(),
            });
        }
        Ok(MonomialPrime {
            ring: ring.clone(),
            vars: vars.into_iter().collect(),
        })
    }

    /// The irrelevant ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Result<Self> {
        Self::new(ring, 0..ring.len())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Variable indices, ascending.
    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn contains(&self, var: usize) -> bool {
        self.vars.binary_search(&var).is_ok()
    }

    pub fn is_subset_of(&self, other: &MonomialPrime) -> bool {
        self.vars.iter().all(|&v| other.contains(v))
    }

    /// `I ⊆ p`: every generator involves a variable of `p`.
    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal
            .gens()
            .iter()
            .all(|g| g.support().any(|v| self.contains(v)))
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.ring.len();
        minimalize(&self.ring, self.vars.iter().map(|&v| Monomial::var(n, v)))
            .expect("variables generate a proper ideal")
    }

    pub fn names(&self) -> Vec<&str> {
        self.vars.iter().map(|&v| self.ring.name(v)).collect()
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vars.cmp(&other.vars)
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names().join(", "))
    }
}

/// A pure-power ideal `(x_{i_1}^{a_1}, ..., x_{i_r}^{a_r})`, stored as the
/// monomial `x_{i_1}^{a_1} ... x_{i_r}^{a_r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    ring: Ring,
    powers: Monomial,
}

impl IrreducibleComponent {
    pub fn new(ring: &Ring, powers: Monomial) -> Result<Self> {
        if powers.nvars() != ring.len() {
            return Err(Error::RingMismatch);
        }
        if powers.is_one() {
            return Err(Error::EmptyPrime);
        }
        Ok(IrreducibleComponent {
            ring: ring.clone(),
            powers,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Exponent vector; zero marks a variable outside the support.
    pub fn powers(&self) -> &Monomial {
        &self.powers
    }

    pub fn height(&self) -> usize {
        self.powers.support().count()
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime {
            ring: self.ring.clone(),
            vars: self.powers.support().collect(),
        }
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.ring.len();
        minimalize(
            &self.ring,
            self.powers
                .powers()
                .map(|(i, e)| Monomial::pure_power(n, i, e)),
        )
        .expect("pure powers generate a proper ideal")
    }

    /// Ideal inclusion between pure-power ideals.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.powers
            .powers()
            .all(|(i, a)| other.powers.exponent(i) > 0 && other.powers.exponent(i) <= a)
    }

    fn sort_key(&self) -> (Vec<usize>, &[u32]) {
        (self.powers.support().collect(), self.powers.exponents())
    }
}

impl PartialOrd for IrreducibleComponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IrreducibleComponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_ideal())
    }
}

/// The unique irredundant irreducible decomposition, sorted.
///
/// Splits on a generator `M = x_i^a * v` that is not a pure power into
/// `I + (x_i^a)` and `I + (v)` until every generator is a pure power. The
/// leaves are then pruned to the inclusion-minimal ones, which is exactly
/// the irredundant set because pure-power ideals are meet-prime among
/// monomial ideals.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    let ideal = ideal.nonzero()?;
    let ring = ideal.ring();
    let mut leaves: HashSet<Monomial> = HashSet::new();
    let mut seen: HashSet<Vec<Monomial>> = HashSet::new();
    let mut stack = vec![ideal.gens().to_vec()];
    while let Some(gens) = stack.pop() {
        if !seen.insert(gens.clone()) {
            continue;
        }
        match gens.iter().find(|g| !g.is_pure_power()) {
            Some(g) => {
                let (i, a) = g.powers().next().expect("nonconstant generator");
                let power = Monomial::pure_power(g.nvars(), i, a);
                let rest = g.checked_div(&power).expect("power divides generator");
                for extra in [power, rest] {
                    let mut next = gens.clone();
                    next.push(extra);
                    stack.push(minimal_set(&mut next));
                }
            }
            None => {
                let corner = gens.iter().fold(Monomial::one(ring.len()), |acc, g| {
                    acc.zip_with(g, u32::max)
                });
                leaves.insert(corner);
            }
        }
    }
    let components: Vec<IrreducibleComponent> = leaves
        .into_iter()
        .map(|powers| IrreducibleComponent {
            ring: ring.clone(),
            powers,
        })
        .collect();
    let mut kept: Vec<IrreducibleComponent> = components
        .iter()
        .filter(|c| !components.iter().any(|d| d != *c && d.is_subset_of(c)))
        .cloned()
        .collect();
    kept.sort();
    Ok(kept)
}

/// Intersection of a list of ideals over `ring`; `None` for an empty list.
pub fn intersect_all<'a>(
    ring: &Ring,
    ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
) -> Result<Option<MonomialIdeal>> {
    let mut acc: Option<MonomialIdeal> = None;
    for ideal in ideals {
        ring.check_same(ideal.ring())?;
        acc = Some(match acc {
            None => ideal.clone(),
            Some(a) => a.intersect(ideal)?,
        });
    }
    Ok(acc)
}

/// Intersection of monomial primes, computed prime by prime.
pub fn intersect_primes(ring: &Ring, primes: &[MonomialPrime]) -> Result<MonomialIdeal> {
    let n = ring.len();
    let mut gens: Option<Vec<Monomial>> = None;
    for p in primes {
        ring.check_same(p.ring())?;
        gens = Some(match gens {
            None => p.vars().iter().map(|&v| Monomial::var(n, v)).collect(),
            Some(current) => {
                let mut next = Vec::new();
                for g in current {
                    if g.support().any(|v| p.contains(v)) {
                        next.push(g);
                    } else {
                        for &v in p.vars() {
                            let mut e = g.exponents().to_vec();
                            e[v] += 1;
                            next.push(Monomial::from_exponents(e));
                        }
                    }
                }
                minimal_set(&mut next)
            }
        });
    }
    match gens {
        None => Err(Error::UnitIdeal),
        Some(g) => minimalize(ring, g),
    }
}

/// Radicals of the irreducible components, minimal under inclusion.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let radicals: BTreeSet<MonomialPrime> = irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::radical)
        .collect();
    Ok(radicals
        .iter()
        .filter(|p| !radicals.iter().any(|q| q != *p && q.is_subset_of(p)))
        .cloned()
        .collect())
}

/// `Ass(R/I)`: the radicals of the irredundant irreducible components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    Ok(irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::radical)
        .collect())
}

pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(minimal_primes(ideal)?
        .iter()
        .map(MonomialPrime::height)
        .min()
        .expect("a nonzero proper ideal has a minimal prime"))
}

/// Largest pairwise-coprime subset of the minimal generators.
pub fn beta_coprime(ideal: &MonomialIdeal) -> Result<usize> {
    let ideal = ideal.nonzero()?;
    let supports: Vec<Vec<usize>> = ideal.gens().iter().map(|g| g.support().collect()).collect();
    Ok(max_pairwise_disjoint(&supports))
}

/// Exhaustive branch-and-bound for the largest family of pairwise disjoint
/// sets.
pub(crate) fn max_pairwise_disjoint(sets: &[Vec<usize>]) -> usize {
    fn disjoint(a: &[usize], b: &[usize]) -> bool {
        !a.iter().any(|x| b.contains(x))
    }
    fn go(sets: &[Vec<usize>], start: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        if chosen.len() + (sets.len() - start) <= *best {
            return;
        }
        if start == sets.len() {
            *best = chosen.len();
            return;
        }
        if chosen.iter().all(|&c| disjoint(&sets[c], &sets[start])) {
            chosen.push(start);
            go(sets, start + 1, chosen, best);
            chosen.pop();
        }
        go(sets, start + 1, chosen, best);
    }
    let mut best = 0;
    go(sets, 0, &mut Vec::new(), &mut best);
    best
}

/// An associated prime of `J/I` together with a monomial `u` in `J` with
/// `(I : u) = p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssWitness {
    pub prime: MonomialPrime,
    pub witness: Monomial,
}

/// `Ass(J/I)` by exhaustive colon search; `numerator = None` means `J = R`.
///
/// Candidates `u` range over the divisors of the lcm of all generators of
/// `I` and `J`: `(I : u)` only depends on `u` truncated at the largest
/// exponents of `I`, and truncation keeps `u` inside `J`. Subtrees of
/// monomials already in `I` are pruned. The first witness in enumeration
/// order is kept for each prime.
pub fn ass_quotient(
    ideal: &MonomialIdeal,
    numerator: Option<&MonomialIdeal>,
) -> Result<Vec<AssWitness>> {
    let ideal = ideal.nonzero()?;
    let ring = ideal.ring();
    let mut bound = ideal.lcm_of_generators();
    if let Some(j) = numerator {
        if !ideal.is_subset_of(j)? {
            return Err(Error::NotContained);
        }
        bound = bound.zip_with(&j.lcm_of_generators(), u32::max);
    }
    let mut found: BTreeMap<MonomialPrime, Monomial> = BTreeMap::new();
    let mut exps = vec![0u32; ring.len()];
    enumerate_standard(ideal, bound.exponents(), 0, &mut exps, &mut |u| {
        if numerator.is_some_and(|j| !j.contains(u)) {
            return;
        }
        let colon = ideal.colon(u).expect("u is outside I");
        if colon.gens().iter().all(|g| g.degree() == 1) {
            let prime = MonomialPrime {
                ring: ring.clone(),
                vars: colon
                    .gens()
                    .iter()
                    .flat_map(|g| g.support())
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect(),
            };
            found.entry(prime).or_insert_with(|| u.clone());
        }
    });
    Ok(found
        .into_iter()
        .map(|(prime, witness)| AssWitness { prime, witness })
        .collect())
}

/// Visits every monomial `u ∉ I` dividing `bound`.
fn enumerate_standard(
    ideal: &MonomialIdeal,
    bound: &[u32],
    var: usize,
    exps: &mut Vec<u32>,
    visit: &mut impl FnMut(&Monomial),
) {
    if var == bound.len() {
        visit(&Monomial::from_exponents(exps.clone()));
        return;
    }
    for e in 0..=bound[var] {
        exps[var] = e;
        let partial = Monomial::from_exponents(exps.clone());
        if ideal.contains(&partial) {
            break;
        }
        enumerate_standard(ideal, bound, var + 1, exps, visit);
    }
    exps[var] = 0;
}
