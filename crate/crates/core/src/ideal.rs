//! Monomial ideals given by their minimal generating sets.

use std::fmt;

use crate::decomposition::MonomialPrime;
use crate::error::{Error, Result};
use crate::monomial::{descending, Monomial};
use crate::ring::Ring;

/// A monomial ideal stored as its minimal generating set, sorted in
/// descending lex order.
///
/// The empty generating set is the zero ideal. The unit ideal has no
/// representation; operations that would produce it fail with
/// [`Error::UnitIdeal`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Reduces `gens` to a minimal generating set in canonical order.
///
/// Fails with [`Error::UnitIdeal`] if the constant monomial is present.
pub fn minimalize(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    for g in &gens {
        if g.nvars() != ring.len() {
            return Err(Error::RingMismatch);
        }
        if g.is_one() {
            return Err(Error::UnitIdeal);
        }
    }
    Ok(MonomialIdeal {
        ring: ring.clone(),
        gens: minimal_set(&mut gens),
    })
}

pub(crate) fn minimal_set(gens: &mut Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens.drain(..) {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(descending);
    kept
}

impl MonomialIdeal {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    /// Builds from exponent vectors; handy in tests and examples.
    pub fn from_exponents<V: Into<Vec<u32>>>(
        ring: &Ring,
        gens: impl IntoIterator<Item = V>,
    ) -> Result<Self> {
        minimalize(ring, gens.into_iter().map(Monomial::from_exponents))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators; see [`MonomialIdeal::is_zero`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(Monomial::is_square_free)
    }

    pub(crate) fn nonzero(&self) -> Result<&Self> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else {
            Ok(self)
        }
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.gens.iter().all(|g| other.contains(g)))
    }

    /// Equality of minimal generating sets; rings must agree.
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.gens == other.gens)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        minimalize(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    /// Generated by the pairwise lcms of the generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.zip_with(b, u32::max)));
        minimalize(&self.ring, lcms)
    }

    /// `(I : u)`, generated by `M / gcd(M, u)`. Fails with
    /// [`Error::UnitIdeal`] when `u` lies in the ideal.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        if u.nvars() != self.ring.len() {
            return Err(Error::RingMismatch);
        }
        minimalize(
            &self.ring,
            self.gens
                .iter()
                .map(|g| g.zip_with(u, |a, b| a.saturating_sub(b))),
        )
    }

    /// Localization at a prime generated by variables: every variable
    /// outside `prime` is set to 1. A generator supported entirely outside
    /// the prime makes the result the unit ideal.
    pub fn localize(&self, prime: &MonomialPrime) -> Result<MonomialIdeal> {
        self.ring.check_same(prime.ring())?;
        let keep: Vec<bool> = (0..self.ring.len()).map(|i| prime.contains(i)).collect();
        minimalize(
            &self.ring,
            self.gens.iter().map(|g| g.restrict(|i| keep[i])),
        )
    }

    /// Drops the generators at the given positions.
    pub fn without_generators(&self, positions: &[usize]) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: self
                .gens
                .iter()
                .enumerate()
                .filter(|(i, _)| !positions.contains(i))
                .map(|(_, g)| g.clone())
                .collect(),
        }
    }

    /// Componentwise maximum of the generator exponents.
    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.ring.len()), |acc, g| {
                acc.zip_with(g, u32::max)
            })
    }

    pub fn max_exponents(&self) -> Vec<u32> {
        self.lcm_of_generators().exponents().to_vec()
    }

    /// Same generators over another ring with identical variable count.
    pub fn with_ring(&self, ring: &Ring) -> Result<MonomialIdeal> {
        if ring.len() != self.ring.len() {
            return Err(Error::RingMismatch);
        }
        Ok(MonomialIdeal {
            ring: ring.clone(),
            gens: self.gens.clone(),
        })
    }

    pub fn display_generators(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.display(&self.ring)).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", self.display_generators().join(", "))
    }
}

/// A monomial ideal whose minimal generators are all square-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareFreeIdeal {
    ideal: MonomialIdeal,
}

impl SquareFreeIdeal {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if let Some(g) = ideal.gens.iter().find(|g| !g.is_square_free()) {
            return Err(Error::NotSquareFree(g.display(&ideal.ring)));
        }
        Ok(SquareFreeIdeal { ideal })
    }

    /// Builds from generator supports.
    pub fn from_supports<S>(ring: &Ring, supports: impl IntoIterator<Item = S>) -> Result<Self>
    where
        S: IntoIterator<Item = usize>,
    {
        let n = ring.len();
        let mut gens = Vec::new();
        for s in supports {
            let vars: Vec<usize> = s.into_iter().collect();
            if let Some(&index) = vars.iter().find(|&&v| v >= n) {
                return Err(Error::VariableOutOfRange { index, size: n });
            }
            gens.push(Monomial::from_support(n, vars));
        }
        Ok(SquareFreeIdeal {
            ideal: minimalize(ring, gens)?,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn into_ideal(self) -> MonomialIdeal {
        self.ideal
    }

    pub fn ring(&self) -> &Ring {
        &self.ideal.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.ideal.gens
    }
}

impl fmt::Display for SquareFreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ideal.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Ring {
        Ring::indexed("x", 2)
    }

    fn ideal(ring: &Ring, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(ring, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    #[test]
    fn minimalize_absorbs_multiples() {
        let r = ring2();
        assert_eq!(
            ideal(&r, &[&[1, 0], &[1, 1]]).gens(),
            &[Monomial::var(2, 0)]
        );
        let j = ideal(&r, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(j.len(), 3);
        assert_eq!(j.to_string(), "x1^2, x1*x2, x2^3");
        let r3 = Ring::indexed("x", 3);
        let k = ideal(&r3, &[&[1, 1, 0], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(k.to_string(), "x1*x2, x2*x3");
    }

    #[test]
    fn minimalize_rejects_constant() {
        let r = ring2();
        assert_eq!(
            MonomialIdeal::from_exponents(&r, [vec![0, 0], vec![1, 0]]).unwrap_err(),
            Error::UnitIdeal
        );
    }

    #[test]
    fn sum_examples() {
        let r = ring2();
        let x1 = ideal(&r, &[&[1, 0]]);
        let x2 = ideal(&r, &[&[0, 1]]);
        assert_eq!(x1.sum(&x2).unwrap().to_string(), "x1, x2");
        assert_eq!(x1.sum(&x1).unwrap(), x1);
        let a = ideal(&r, &[&[2, 0]]);
        let b = ideal(&r, &[&[1, 1]]);
        assert_eq!(a.sum(&b).unwrap().to_string(), "x1^2, x1*x2");
    }

    #[test]
    fn intersect_examples() {
        let r = ring2();
        let x1 = ideal(&r, &[&[1, 0]]);
        let x2 = ideal(&r, &[&[0, 1]]);
        assert_eq!(x1.intersect(&x2).unwrap().to_string(), "x1*x2");
        let a = ideal(&r, &[&[1, 0], &[0, 3]]);
        let b = ideal(&r, &[&[2, 0], &[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap().to_string(), "x1^2, x1*x2, x2^3");
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = ideal(&ring2(), &[&[1, 0]]);
        let b = ideal(&Ring::new(["x", "y"]).unwrap(), &[&[1, 0]]);
        assert_eq!(a.sum(&b).unwrap_err(), Error::RingMismatch);
        assert_eq!(a.intersect(&b).unwrap_err(), Error::RingMismatch);
        assert_eq!(a.equals(&b).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn equals_examples() {
        let r = ring2();
        let a = ideal(&r, &[&[1, 0]]);
        assert!(a.equals(&a).unwrap());
        assert!(!a.equals(&ideal(&r, &[&[2, 0]])).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = ring2();
        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.colon(&Monomial::var(2, 0)).unwrap().to_string(), "x1, x2");
        assert_eq!(i.colon(&Monomial::one(2)).unwrap(), i);
        let p = ideal(&r, &[&[1, 1]]);
        assert_eq!(p.colon(&Monomial::var(2, 0)).unwrap().to_string(), "x2");
        assert_eq!(
            i.colon(&Monomial::from_exponents(vec![2, 0])),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn localize_examples() {
        let r = ring2();
        let i = ideal(&r, &[&[3, 0], &[2, 1]]);
        let p = MonomialPrime::new(&r, [0]).unwrap();
        assert_eq!(i.localize(&p).unwrap().to_string(), "x1^2");
        let full = MonomialPrime::new(&r, [0, 1]).unwrap();
        assert_eq!(i.localize(&full).unwrap(), i);

        let r3 = Ring::indexed("x", 3);
        let j = ideal(&r3, &[&[1, 1, 0], &[0, 1, 1]]);
        let p2 = MonomialPrime::new(&r3, [1]).unwrap();
        assert_eq!(j.localize(&p2).unwrap().to_string(), "x2");
        let k = ideal(&r3, &[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(k.localize(&p2).unwrap_err(), Error::UnitIdeal);
    }

    #[test]
    fn square_free_check() {
        let r = ring2();
        assert!(SquareFreeIdeal::new(ideal(&r, &[&[1, 1]])).is_ok());
        assert_eq!(
            SquareFreeIdeal::new(ideal(&r, &[&[2, 0]])).unwrap_err(),
            Error::NotSquareFree("x1^2".into())
        );
    }
}
