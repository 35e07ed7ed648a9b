//! Polarization of monomial ideals and the way back.
//!
//! A base variable `x_i` with exponent `a` becomes the product of the polar
//! variables `x[i,1] ... x[i,a]`. Polar variables are always written
//! `x[i,j]` with a 1-based base index `i`, whatever the base names are.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::decomposition::{
    associated_primes, irreducible_decomposition, IrreducibleComponent, MonomialPrime,
};
use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal, SquareFreeIdeal};
use crate::monomial::Monomial;
use crate::ring::Ring;

/// The variable `x[base+1, slot]`; `base` is a 0-based index into the base
/// ring and `slot` starts at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolarVariable {
    pub base: usize,
    pub slot: u32,
}

impl PolarVariable {
    pub fn name(&self) -> String {
        format!("x[{},{}]", self.base + 1, self.slot)
    }

    /// Parses `x[i,j]` (whitespace allowed inside the brackets).
    pub fn parse(name: &str) -> Option<PolarVariable> {
        let inner = name.trim().strip_prefix("x[")?.strip_suffix(']')?;
        let (i, j) = inner.split_once(',')?;
        let i: usize = i.trim().parse().ok()?;
        let j: u32 = j.trim().parse().ok()?;
        (i >= 1 && j >= 1).then_some(PolarVariable {
            base: i - 1,
            slot: j,
        })
    }
}

impl fmt::Display for PolarVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// The ring of polar variables `x[i,j]`, `1 <= j <= slots[i]`, laid out
/// base-major in a flat [`Ring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarRing {
    base: Ring,
    slots: Vec<u32>,
    offsets: Vec<usize>,
    flat: Ring,
}

impl PolarRing {
    /// Every base variable needs at least one slot so that `x_i ↦ x[i,1]`
    /// is always defined.
    pub fn new(base: &Ring, slots: Vec<u32>) -> Result<Self> {
        if slots.len() != base.len() {
            return Err(Error::RingMismatch);
        }
        if let Some(i) = slots.iter().position(|&s| s == 0) {
            return Err(Error::InsufficientSlots {
                variable: base.name(i).to_string(),
                needed: 1,
                available: 0,
            });
        }
        let mut offsets = Vec::with_capacity(slots.len());
        let mut names = Vec::new();
        for (i, &s) in slots.iter().enumerate() {
            offsets.push(names.len());
            names.extend((1..=s).map(|slot| PolarVariable { base: i, slot }.name()));
        }
        Ok(PolarRing {
            base: base.clone(),
            slots,
            offsets,
            flat: Ring::new(names)?,
        })
    }

    /// Slots equal to the largest exponent of each variable (at least 1).
    pub fn for_ideal(ideal: &MonomialIdeal) -> Self {
        let slots = ideal
            .max_exponents()
            .into_iter()
            .map(|e| e.max(1))
            .collect();
        Self::new(ideal.ring(), slots).expect("slots are positive")
    }

    /// Joint ring: slot counts are the maxima of the two.
    pub fn join(&self, other: &PolarRing) -> Result<PolarRing> {
        self.base.check_same(&other.base)?;
        let slots = self
            .slots
            .iter()
            .zip(&other.slots)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Self::new(&self.base, slots)
    }

    /// Recognizes a flat ring whose names are exactly the canonical layout
    /// `x[1,1..a_1], x[2,1..a_2], ...`. Base variables are named `x1, x2, ...`.
    pub fn from_flat(flat: &Ring) -> Result<PolarRing> {
        let mut slots: Vec<u32> = Vec::new();
        for name in flat.names() {
            let v = PolarVariable::parse(name).ok_or_else(|| Error::NotPolar(name.clone()))?;
            if v.base == slots.len() && v.slot == 1 {
                slots.push(1);
            } else if v.base + 1 == slots.len() && v.slot == slots[v.base] + 1 {
                slots[v.base] += 1;
            } else {
                return Err(Error::NotPolar(name.clone()));
            }
        }
        Self::new(&Ring::indexed("x", slots.len()), slots)
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    /// The flat ring of polar variables.
    pub fn ring(&self) -> &Ring {
        &self.flat
    }

    pub fn slots(&self) -> &[u32] {
        &self.slots
    }

    pub fn index(&self, v: PolarVariable) -> Option<usize> {
        let slots = *self.slots.get(v.base)?;
        (v.slot >= 1 && v.slot <= slots).then(|| self.offsets[v.base] + v.slot as usize - 1)
    }

    pub fn variable(&self, flat_index: usize) -> PolarVariable {
        let base = self.offsets.partition_point(|&o| o <= flat_index) - 1;
        PolarVariable {
            base,
            slot: (flat_index - self.offsets[base]) as u32 + 1,
        }
    }

    fn slot_error(&self, base: usize, needed: u32) -> Error {
        Error::InsufficientSlots {
            variable: self.base.name(base).to_string(),
            needed,
            available: self.slots[base],
        }
    }

    fn polar_index(&self, base: usize, slot: u32) -> Result<usize> {
        self.index(PolarVariable { base, slot })
            .ok_or_else(|| self.slot_error(base, slot))
    }
}

/// The linear forms `x[i,1] - x[i,j]`, `1 < j <= a_i`, as (head, tail) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizingSequence {
    pairs: Vec<(PolarVariable, PolarVariable)>,
}

impl PolarizingSequence {
    pub fn pairs(&self) -> &[(PolarVariable, PolarVariable)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn display(&self) -> Vec<String> {
        self.pairs
            .iter()
            .map(|(h, t)| format!("{h} - {t}"))
            .collect()
    }
}

pub fn polarize_monomial(m: &Monomial, ring: &PolarRing) -> Result<Monomial> {
    if m.nvars() != ring.base.len() {
        return Err(Error::RingMismatch);
    }
    let mut vars = Vec::new();
    for (i, e) in m.powers() {
        if e > ring.slots[i] {
            return Err(ring.slot_error(i, e));
        }
        vars.extend((0..e as usize).map(|k| ring.offsets[i] + k));
    }
    Ok(Monomial::from_support(ring.flat.len(), vars))
}

/// Polarizes into the smallest ring that fits.
pub fn polarize_ideal(ideal: &MonomialIdeal) -> Result<(SquareFreeIdeal, PolarRing)> {
    let ring = PolarRing::for_ideal(ideal.nonzero()?);
    let polar = polarize_ideal_in(ideal, &ring)?;
    Ok((polar, ring))
}

/// Polarizes into a given ring with enough slots.
pub fn polarize_ideal_in(ideal: &MonomialIdeal, ring: &PolarRing) -> Result<SquareFreeIdeal> {
    ideal.ring().check_same(&ring.base)?;
    let gens = ideal
        .gens()
        .iter()
        .map(|g| polarize_monomial(g, ring))
        .collect::<Result<Vec<_>>>()?;
    SquareFreeIdeal::new(minimalize(&ring.flat, gens)?)
}

pub fn polarization_sequence(ring: &PolarRing) -> PolarizingSequence {
    let pairs = ring
        .slots
        .iter()
        .enumerate()
        .flat_map(|(base, &a)| {
            (2..=a).map(move |slot| {
                (
                    PolarVariable { base, slot: 1 },
                    PolarVariable { base, slot },
                )
            })
        })
        .collect();
    PolarizingSequence { pairs }
}

/// Substitutes `tail ↦ head` for every pair of the sequence; the result
/// lives in the polar ring and only uses slot-1 variables.
pub fn substitute_sequence(
    ideal: &MonomialIdeal,
    ring: &PolarRing,
    sequence: &PolarizingSequence,
) -> Result<MonomialIdeal> {
    ideal.ring().check_same(&ring.flat)?;
    let mut targets: Vec<usize> = (0..ring.flat.len()).collect();
    for (head, tail) in &sequence.pairs {
        let h = ring.polar_index(head.base, head.slot)?;
        let t = ring.polar_index(tail.base, tail.slot)?;
        targets[t] = h;
    }
    let gens = ideal.gens().iter().map(|g| {
        let mut e = vec![0; ring.flat.len()];
        for (v, a) in g.powers() {
            e[targets[v]] += a;
        }
        Monomial::from_exponents(e)
    });
    minimalize(&ring.flat, gens)
}

/// Applies the polarizing sequence, then reads `x[i,1]` as `x_i`.
pub fn depolarize_ideal(polar: &SquareFreeIdeal, ring: &PolarRing) -> Result<MonomialIdeal> {
    let substituted = substitute_sequence(polar.ideal(), ring, &polarization_sequence(ring))?;
    let gens = substituted.gens().iter().map(|g| {
        Monomial::from_exponents(
            ring.offsets
                .iter()
                .map(|&o| g.exponent(o))
                .collect::<Vec<_>>(),
        )
    });
    minimalize(&ring.base, gens)
}

/// All primes `(x[i_1,c_1], ..., x[i_r,c_r])` with `1 <= c_j <= a_j` for a
/// pure-power ideal `(x_{i_1}^{a_1}, ..., x_{i_r}^{a_r})`, sorted.
pub fn polar_decomposition_irreducible(
    component: &IrreducibleComponent,
    ring: &PolarRing,
) -> Result<Vec<MonomialPrime>> {
    component.ring().check_same(&ring.base)?;
    let bounds: Vec<(usize, u32)> = component.powers().powers().collect();
    for &(i, a) in &bounds {
        if a > ring.slots[i] {
            return Err(ring.slot_error(i, a));
        }
    }
    let mut out = Vec::new();
    for_each_slot_choice(&bounds, &mut |choice| {
        let vars = bounds
            .iter()
            .zip(choice)
            .map(|(&(i, _), &c)| ring.offsets[i] + c as usize - 1);
        out.push(MonomialPrime::new(&ring.flat, vars).expect("support is nonempty"));
    });
    out.sort();
    Ok(out)
}

/// The irredundant decomposition of the polarization of `(x_{i_1}, ...,
/// x_{i_r})^m`: slot choices with `1 <= c_j <= m` and `Σ c_j <= m + r - 1`.
pub fn polar_decomposition_power(
    ring: &PolarRing,
    vars: &[usize],
    m: u32,
) -> Result<Vec<MonomialPrime>> {
    let distinct: BTreeSet<usize> = vars.iter().copied().collect();
    if distinct.is_empty() || m == 0 {
        return Err(Error::EmptyPrime);
    }
    if distinct.len() != vars.len() {
        return Err(Error::DuplicateVariable(
            ring.base.name(vars[0]).to_string(),
        ));
    }
    let bounds: Vec<(usize, u32)> = distinct.iter().map(|&i| (i, m)).collect();
    for &(i, _) in &bounds {
        if i >= ring.base.len() {
            return Err(Error::VariableOutOfRange {
                index: i,
                size: ring.base.len(),
            });
        }
        if m > ring.slots[i] {
            return Err(ring.slot_error(i, m));
        }
    }
    let limit = m + bounds.len() as u32 - 1;
    let mut out = Vec::new();
    for_each_slot_choice(&bounds, &mut |choice| {
        if choice.iter().sum::<u32>() <= limit {
            let vars = bounds
                .iter()
                .zip(choice)
                .map(|(&(i, _), &c)| ring.offsets[i] + c as usize - 1);
            out.push(MonomialPrime::new(&ring.flat, vars).expect("support is nonempty"));
        }
    });
    out.sort();
    Ok(out)
}

fn for_each_slot_choice(bounds: &[(usize, u32)], visit: &mut impl FnMut(&[u32])) {
    fn go(bounds: &[(usize, u32)], choice: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        if choice.len() == bounds.len() {
            visit(choice);
            return;
        }
        for c in 1..=bounds[choice.len()].1 {
            choice.push(c);
            go(bounds, choice, visit);
            choice.pop();
        }
    }
    go(bounds, &mut Vec::new(), visit);
}

/// Union of the per-component polar decompositions, de-duplicated and pruned
/// to the inclusion-minimal primes.
pub fn polar_decomposition_general(
    ideal: &MonomialIdeal,
    ring: &PolarRing,
) -> Result<Vec<MonomialPrime>> {
    let mut all = BTreeSet::new();
    for component in irreducible_decomposition(ideal)? {
        all.extend(polar_decomposition_irreducible(&component, ring)?);
    }
    Ok(all
        .iter()
        .filter(|p| !all.iter().any(|q| q != *p && q.is_subset_of(p)))
        .cloned()
        .collect())
}

/// `x_i ↦ x[i,1]`.
pub fn map_prime(prime: &MonomialPrime, ring: &PolarRing) -> Result<MonomialPrime> {
    prime.ring().check_same(&ring.base)?;
    MonomialPrime::new(&ring.flat, prime.vars().iter().map(|&i| ring.offsets[i]))
}

/// `x[i,c] ↦ x_i`; rejects primes holding two slots of one base variable.
pub fn unmap_prime(prime: &MonomialPrime, ring: &PolarRing) -> Result<MonomialPrime> {
    prime.ring().check_same(&ring.flat)?;
    let mut bases = Vec::new();
    for &v in prime.vars() {
        let base = ring.variable(v).base;
        if bases.contains(&base) {
            return Err(Error::RepeatedBase(ring.base.name(base).to_string()));
        }
        bases.push(base);
    }
    MonomialPrime::new(&ring.base, bases)
}

/// Status of a slot-lowered prime in the correspondence report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoweredStatus {
    Associated,
    /// Not associated itself, but it contains the given associated prime.
    Absorbed(MonomialPrime),
    /// Does not even contain the polarization. Never expected.
    NotOverIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationEntry {
    pub prime: MonomialPrime,
    pub lowered: Vec<(MonomialPrime, LoweredStatus)>,
}

/// Comparison of `Ass(R/I)` with `Ass(S/P(I))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssCorrespondence {
    pub ring: PolarRing,
    pub base_ass: Vec<MonomialPrime>,
    pub polar_ass: Vec<MonomialPrime>,
    /// Polar primes projected to their base supports equal the base set.
    pub projection_matches: bool,
    pub saturation: Vec<SaturationEntry>,
    /// Every slot-lowered prime is associated or contains an associated prime.
    pub saturation_holds: bool,
    /// Every slot-lowered prime is itself associated.
    pub strict_saturation: bool,
    /// height → (number of base primes, number of polar primes).
    pub strata: BTreeMap<usize, (usize, usize)>,
}

impl AssCorrespondence {
    pub fn passes(&self) -> bool {
        self.projection_matches && self.saturation_holds
    }
}

pub fn ass_correspondence_report(ideal: &MonomialIdeal) -> Result<AssCorrespondence> {
    let (polar, ring) = polarize_ideal(ideal)?;
    let base_ass: Vec<MonomialPrime> = associated_primes(ideal)?.into_iter().collect();
    let polar_ass: Vec<MonomialPrime> = associated_primes(polar.ideal())?.into_iter().collect();

    let projected: BTreeSet<MonomialPrime> = polar_ass
        .iter()
        .map(|q| unmap_prime(q, &ring))
        .collect::<Result<_>>()?;
    let projection_matches = projected == base_ass.iter().cloned().collect();

    let polar_set: BTreeSet<&MonomialPrime> = polar_ass.iter().collect();
    let mut saturation = Vec::new();
    for q in &polar_ass {
        let bounds: Vec<(usize, u32)> = q
            .vars()
            .iter()
            .map(|&v| {
                let pv = ring.variable(v);
                (pv.base, pv.slot)
            })
            .collect();
        let mut lowered = Vec::new();
        for_each_slot_choice(&bounds, &mut |choice| {
            let vars = bounds
                .iter()
                .zip(choice)
                .map(|(&(i, _), &c)| ring.offsets[i] + c as usize - 1);
            let p = MonomialPrime::new(&ring.flat, vars).expect("nonempty");
            if p == *q {
                return;
            }
            let status = if polar_set.contains(&p) {
                LoweredStatus::Associated
            } else if let Some(a) = polar_ass.iter().find(|a| a.is_subset_of(&p)) {
                LoweredStatus::Absorbed(a.clone())
            } else {
                LoweredStatus::NotOverIdeal
            };
            lowered.push((p, status));
        });
        saturation.push(SaturationEntry {
            prime: q.clone(),
            lowered,
        });
    }
    let all_lowered = || saturation.iter().flat_map(|e| e.lowered.iter());
    let saturation_holds = all_lowered().all(|(_, s)| *s != LoweredStatus::NotOverIdeal);
    let strict_saturation = all_lowered().all(|(_, s)| *s == LoweredStatus::Associated);

    let mut strata: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for p in &base_ass {
        strata.entry(p.height()).or_default().0 += 1;
    }
    for q in &polar_ass {
        strata.entry(q.height()).or_default().1 += 1;
    }
    Ok(AssCorrespondence {
        ring,
        base_ass,
        polar_ass,
        projection_matches,
        saturation,
        saturation_holds,
        strict_saturation,
        strata,
    })
}
