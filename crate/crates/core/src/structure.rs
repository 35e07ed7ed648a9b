//! Statements about ideals whose polarization is a simplicial tree or
//! forest, as executable checks.

use std::collections::{BTreeMap, BTreeSet};

use crate::decomposition::{
    ass_quotient, associated_primes, beta_coprime, height, intersect_all,
    irreducible_decomposition, AssWitness, IrreducibleComponent, MonomialPrime,
};
use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal, SquareFreeIdeal};
use crate::monomial::Monomial;
use crate::polar::{map_prime, polarize_ideal, polarize_ideal_in, PolarRing};
use crate::simplicial::{facet_complex, SimplicialComplex, VertexSet};

/// Outcome of a check that only asserts something under a hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

/// The facet complex of the polarization, with its ring.
pub fn polar_complex(
    ideal: &MonomialIdeal,
) -> Result<(SimplicialComplex, SquareFreeIdeal, PolarRing)> {
    let (polar, ring) = polarize_ideal(ideal)?;
    Ok((facet_complex(&polar), polar, ring))
}

/// Components of the irredundant irreducible decomposition grouped by the
/// height of their radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightStrata {
    pub ideal: MonomialIdeal,
    pub strata: BTreeMap<usize, Vec<IrreducibleComponent>>,
}

impl HeightStrata {
    /// The height of the ideal: smallest stratum.
    pub fn h(&self) -> usize {
        *self.strata.keys().next().expect("at least one component")
    }

    /// Largest component height.
    pub fn s(&self) -> usize {
        *self
            .strata
            .keys()
            .next_back()
            .expect("at least one component")
    }

    pub fn heights(&self) -> Vec<usize> {
        self.strata.keys().copied().collect()
    }

    /// Radicals of the components whose height satisfies `keep`.
    pub fn primes_where(&self, keep: impl Fn(usize) -> bool) -> BTreeSet<MonomialPrime> {
        self.strata
            .iter()
            .filter(|(h, _)| keep(**h))
            .flat_map(|(_, cs)| cs.iter().map(IrreducibleComponent::radical))
            .collect()
    }

    pub fn components_where(&self, keep: impl Fn(usize) -> bool) -> Vec<IrreducibleComponent> {
        self.strata
            .iter()
            .filter(|(h, _)| keep(**h))
            .flat_map(|(_, cs)| cs.iter().cloned())
            .collect()
    }
}

pub fn height_strata(ideal: &MonomialIdeal) -> Result<HeightStrata> {
    let mut strata: BTreeMap<usize, Vec<IrreducibleComponent>> = BTreeMap::new();
    for c in irreducible_decomposition(ideal)? {
        strata.entry(c.height()).or_default().push(c);
    }
    Ok(HeightStrata {
        ideal: ideal.clone(),
        strata,
    })
}

/// One term `I_i` of the filtration: the intersection of the components of
/// height at most `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationTerm {
    pub bound: usize,
    pub ideal: MonomialIdeal,
}

/// `I = I_0 ⊂ I_1 ⊂ ...`, one term per distinct component height, largest
/// bound first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    pub strata: HeightStrata,
    pub chain: Vec<FiltrationTerm>,
}

pub fn scm_filtration(ideal: &MonomialIdeal) -> Result<Filtration> {
    let strata = height_strata(ideal)?;
    let mut chain = Vec::new();
    for &bound in strata.strata.keys().rev() {
        let comps = strata.components_where(|h| h <= bound);
        let ideals: Vec<MonomialIdeal> = comps.iter().map(IrreducibleComponent::to_ideal).collect();
        let term = intersect_all(ideal.ring(), &ideals)?.expect("nonempty stratum");
        chain.push(FiltrationTerm { bound, ideal: term });
    }
    Ok(Filtration { strata, chain })
}

/// Checks for one filtration term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationStep {
    pub index: usize,
    pub bound: usize,
    pub term: MonomialIdeal,
    /// `Ass(R/I_i)` from a fresh decomposition of `I_i`.
    pub ass_term: Vec<MonomialPrime>,
    /// Radicals of the components of `I` with height at most `bound`.
    pub expected_ass_term: Vec<MonomialPrime>,
    /// The decomposition of `I_i` is exactly those components.
    pub decomposition_matches: bool,
    /// `Ass(I_{i+1}/I)`, with `I_{i+1} = R` after the last term.
    pub quotient_ass: Vec<AssWitness>,
    /// Radicals of the components of `I` with height at least `bound`.
    pub expected_quotient_ass: Vec<MonomialPrime>,
}

impl FiltrationStep {
    pub fn ass_matches(&self) -> bool {
        self.ass_term == self.expected_ass_term
    }

    pub fn quotient_matches(&self) -> bool {
        self.quotient_ass
            .iter()
            .map(|w| &w.prime)
            .eq(self.expected_quotient_ass.iter())
    }

    pub fn passes(&self) -> bool {
        self.ass_matches() && self.quotient_matches() && self.decomposition_matches
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationReport {
    pub filtration: Filtration,
    /// Whether the polarization is a forest, the hypothesis under which the
    /// identities are expected.
    pub polarization_is_forest: bool,
    pub strictly_ascending: bool,
    pub steps: Vec<FiltrationStep>,
}

impl FiltrationReport {
    pub fn passes(&self) -> bool {
        self.strictly_ascending && self.steps.iter().all(FiltrationStep::passes)
    }

    pub fn verdict(&self) -> Verdict {
        Verdict::from_bool(self.passes())
    }
}

pub fn verify_filtration_ass_strata(ideal: &MonomialIdeal) -> Result<FiltrationReport> {
    let filtration = scm_filtration(ideal)?;
    let (complex, _, _) = polar_complex(ideal)?;
    let polarization_is_forest = complex.is_forest()?;
    let chain = &filtration.chain;
    let strictly_ascending = chain.windows(2).all(|w| {
        w[0].ideal.is_subset_of(&w[1].ideal).unwrap_or(false)
            && !w[1].ideal.is_subset_of(&w[0].ideal).unwrap_or(true)
    });
    let strata = &filtration.strata;
    let mut steps = Vec::new();
    for (index, term) in chain.iter().enumerate() {
        let bound = term.bound;
        let ass_term: Vec<MonomialPrime> = associated_primes(&term.ideal)?.into_iter().collect();
        let expected_ass_term: Vec<MonomialPrime> =
            strata.primes_where(|h| h <= bound).into_iter().collect();
        let mut fresh = irreducible_decomposition(&term.ideal)?;
        fresh.sort();
        let mut expected = strata.components_where(|h| h <= bound);
        expected.sort();
        let next = chain.get(index + 1).map(|t| &t.ideal);
        let quotient_ass = ass_quotient(ideal, next)?;
        let expected_quotient_ass: Vec<MonomialPrime> =
            strata.primes_where(|h| h >= bound).into_iter().collect();
        steps.push(FiltrationStep {
            index,
            bound,
            term: term.ideal.clone(),
            ass_term,
            expected_ass_term,
            decomposition_matches: fresh == expected,
            quotient_ass,
            expected_quotient_ass,
        });
    }
    Ok(FiltrationReport {
        filtration,
        polarization_is_forest,
        strictly_ascending,
        steps,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KonigReport {
    pub height: usize,
    pub beta: usize,
    pub is_tree: bool,
    /// A largest pairwise-coprime set of generators.
    pub coprime_witness: Vec<Monomial>,
    pub verdict: Verdict,
}

/// Height against the largest coprime generator set; asserted equal only
/// when the polarization is a tree.
pub fn konig_check(ideal: &MonomialIdeal) -> Result<KonigReport> {
    let (complex, _, _) = polar_complex(ideal)?;
    let is_tree = complex.is_tree()?;
    let height = height(ideal)?;
    let beta = beta_coprime(ideal)?;
    let verdict = if is_tree {
        Verdict::from_bool(height == beta)
    } else {
        Verdict::Inapplicable
    };
    Ok(KonigReport {
        height,
        beta,
        is_tree,
        coprime_witness: coprime_witness(ideal.gens()),
        verdict,
    })
}

/// A largest set of pairwise coprime generators, first in generator order.
pub fn coprime_witness(gens: &[Monomial]) -> Vec<Monomial> {
    fn go(gens: &[Monomial], start: usize, chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
        if chosen.len() + gens.len() - start <= best.len() {
            return;
        }
        if start == gens.len() {
            *best = chosen.clone();
            return;
        }
        if chosen.iter().all(|&c| gens[c].is_coprime(&gens[start])) {
            chosen.push(start);
            go(gens, start + 1, chosen, best);
            chosen.pop();
        }
        go(gens, start + 1, chosen, best);
    }
    let mut best = Vec::new();
    go(gens, 0, &mut Vec::new(), &mut best);
    best.into_iter().map(|i| gens[i].clone()).collect()
}

/// A generator whose polarization is a joint of some leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointDrop {
    pub generator: Monomial,
    /// Generators whose polarizations are leaves with this joint.
    pub leaves: Vec<Monomial>,
    pub height_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointRemovalReport {
    pub height: usize,
    pub drops: Vec<JointDrop>,
    /// Height after dropping each nonempty set of joint generators at once.
    /// Informational: only single drops are asserted.
    pub combinations: Vec<(Vec<Monomial>, usize)>,
    pub verdict: Verdict,
}

pub fn joint_removal_check(ideal: &MonomialIdeal) -> Result<JointRemovalReport> {
    let (complex, _, ring) = polar_complex(ideal)?;
    let height = height(ideal)?;
    // generator of I for each polar generator
    let base_of = |facet: &VertexSet| -> Monomial {
        let m = facet.to_monomial(ring.ring().len());
        ideal
            .gens()
            .iter()
            .find(|g| crate::polar::polarize_monomial(g, &ring).is_ok_and(|p| p == m))
            .expect("every facet is a polarized generator")
            .clone()
    };
    let mut joint_leaves: BTreeMap<usize, Vec<Monomial>> = BTreeMap::new();
    for leaf in complex.leaves() {
        for joint in complex.joints(&leaf)? {
            let position = ideal
                .gens()
                .iter()
                .position(|g| *g == base_of(&joint))
                .expect("joint is a generator");
            joint_leaves
                .entry(position)
                .or_default()
                .push(base_of(&leaf));
        }
    }
    let mut drops = Vec::new();
    for (&position, leaves) in &joint_leaves {
        let reduced = ideal.without_generators(&[position]);
        drops.push(JointDrop {
            generator: ideal.gens()[position].clone(),
            leaves: leaves.clone(),
            height_after: reduced_height(&reduced)?,
        });
    }
    let positions: Vec<usize> = joint_leaves.keys().copied().collect();
    let mut combinations = Vec::new();
    if positions.len() <= 10 {
        for mask in 1u32..(1 << positions.len()) {
            let chosen: Vec<usize> = positions
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let reduced = ideal.without_generators(&chosen);
            combinations.push((
                chosen.iter().map(|&p| ideal.gens()[p].clone()).collect(),
                reduced_height(&reduced)?,
            ));
        }
    }
    let verdict = if drops.is_empty() {
        Verdict::Inapplicable
    } else {
        Verdict::from_bool(drops.iter().all(|d| d.height_after == height))
    };
    Ok(JointRemovalReport {
        height,
        drops,
        combinations,
        verdict,
    })
}

/// Height of an ideal that may have lost all its generators; the zero
/// ideal has height 0.
fn reduced_height(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        Ok(0)
    } else {
        height(ideal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationReport {
    pub prime: MonomialPrime,
    pub localized: MonomialIdeal,
    /// `P(I_p)` in its own polar ring.
    pub polarized: SquareFreeIdeal,
    pub polar_ring: PolarRing,
    pub is_forest: bool,
    pub witness: Option<Vec<Monomial>>,
    /// Hypothesis: `P(I)` is a tree.
    pub hypothesis_tree: bool,
    /// `P(I_p)` and `P(I)` localized at the image of `p`, both in the polar
    /// ring of `I`. They need not agree.
    pub polarized_in_ambient: SquareFreeIdeal,
    pub ambient_localized: MonomialIdeal,
    pub commutes: bool,
    pub verdict: Verdict,
}

pub fn localization_forest_check(
    ideal: &MonomialIdeal,
    prime: &MonomialPrime,
) -> Result<LocalizationReport> {
    ideal.ring().check_same(prime.ring())?;
    if !prime.contains_ideal(ideal) {
        return Err(Error::PrimeDoesNotContain);
    }
    let (complex, polar, ambient) = polar_complex(ideal)?;
    let hypothesis_tree = complex.is_tree()?;
    let localized = ideal.localize(prime)?;
    let (polarized, polar_ring) = polarize_ideal(&localized)?;
    let local_complex = facet_complex(&polarized);
    let witness = local_complex.leafless_subcollection()?.map(|w| {
        w.iter()
            .map(|&i| local_complex.facets()[i].to_monomial(polar_ring.ring().len()))
            .collect()
    });
    let is_forest = witness.is_none();
    let polarized_in_ambient = polarize_ideal_in(&localized, &ambient)?;
    let ambient_localized = polar.ideal().localize(&map_prime(prime, &ambient)?)?;
    let commutes = &ambient_localized == polarized_in_ambient.ideal();
    let verdict = if hypothesis_tree {
        Verdict::from_bool(is_forest)
    } else {
        Verdict::Inapplicable
    };
    Ok(LocalizationReport {
        prime: prime.clone(),
        localized,
        polarized,
        polar_ring,
        is_forest,
        witness,
        hypothesis_tree,
        polarized_in_ambient,
        ambient_localized,
        commutes,
        verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmVerdict {
    CohenMacaulay,
    NotCohenMacaulay,
    Inapplicable,
}

impl CmVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            CmVerdict::CohenMacaulay => "cohen-macaulay",
            CmVerdict::NotCohenMacaulay => "not-cohen-macaulay",
            CmVerdict::Inapplicable => "inapplicable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmReport {
    pub is_tree: bool,
    pub height: usize,
    pub ass_heights: Vec<usize>,
    pub unmixed: bool,
    pub verdict: CmVerdict,
}

/// Under the tree hypothesis, Cohen-Macaulay exactly when unmixed.
pub fn cm_tree_criterion(ideal: &MonomialIdeal) -> Result<CmReport> {
    let (complex, _, _) = polar_complex(ideal)?;
    let is_tree = complex.is_tree()?;
    let height = height(ideal)?;
    let ass_heights: Vec<usize> = associated_primes(ideal)?
        .iter()
        .map(MonomialPrime::height)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let unmixed = ass_heights == [height];
    let verdict = match (is_tree, unmixed) {
        (false, _) => CmVerdict::Inapplicable,
        (true, true) => CmVerdict::CohenMacaulay,
        (true, false) => CmVerdict::NotCohenMacaulay,
    };
    Ok(CmReport {
        is_tree,
        height,
        ass_heights,
        unmixed,
        verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScmVerdict {
    /// `forest_extension` is set when the polarization is a forest but not
    /// a tree.
    SequentiallyCm {
        forest_extension: bool,
    },
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScmReport {
    pub is_forest: bool,
    pub is_connected: bool,
    pub witness: Option<Vec<Monomial>>,
    pub verdict: ScmVerdict,
}

pub fn sequentially_cm_verdict(ideal: &MonomialIdeal) -> Result<ScmReport> {
    let (complex, _, ring) = polar_complex(ideal)?;
    let witness = complex.leafless_subcollection()?.map(|w| {
        w.iter()
            .map(|&i| complex.facets()[i].to_monomial(ring.ring().len()))
            .collect::<Vec<_>>()
    });
    let is_forest = witness.is_none();
    let is_connected = complex.is_connected();
    let verdict = if is_forest {
        ScmVerdict::SequentiallyCm {
            forest_extension: !is_connected,
        }
    } else {
        ScmVerdict::Unknown
    };
    Ok(ScmReport {
        is_forest,
        is_connected,
        witness,
        verdict,
    })
}

/// The square-free monomials of degree `k` in `I`. No such monomial gives
/// `ZeroIdeal`.
pub fn sqfree_component(ideal: &SquareFreeIdeal, k: usize) -> Result<SquareFreeIdeal> {
    let n = ideal.ring().len();
    let mut out: BTreeSet<VertexSet> = BTreeSet::new();
    for g in ideal.gens() {
        let base = VertexSet::from_monomial(g);
        if base.len() > k {
            continue;
        }
        let free: Vec<usize> = (0..n).filter(|&v| !base.contains(v)).collect();
        extend_choices(&free, k - base.len(), 0, &mut base.clone(), &mut out);
    }
    if out.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    SquareFreeIdeal::new(minimalize(
        ideal.ring(),
        out.iter().map(|s| s.to_monomial(n)),
    )?)
}

fn extend_choices(
    free: &[usize],
    remaining: usize,
    start: usize,
    current: &mut VertexSet,
    out: &mut BTreeSet<VertexSet>,
) {
    if remaining == 0 {
        out.insert(current.clone());
        return;
    }
    for i in start..free.len() {
        if free.len() - i < remaining {
            break;
        }
        current.insert(free[i]);
        extend_choices(free, remaining - 1, i + 1, current, out);
        current.remove(free[i]);
    }
}
