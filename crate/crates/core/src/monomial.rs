//! Dense exponent-vector monomials.
//!
//! A [`Monomial`] does not carry its ring; it only knows how many variables
//! the ring has. Ring identity is checked at the ideal level, length is
//! checked here.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// `x_1^{a_1} ... x_n^{a_n}` stored as the vector `(a_1, ..., a_n)`.
///
/// The derived order is lexicographic on the exponent vector, which is the
/// lex monomial order with `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into(),
        }
    }

    pub fn from_exponents(exps: impl Into<Vec<u32>>) -> Self {
        Monomial {
            exps: exps.into().into(),
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::pure_power(nvars, index, 1)
    }

    pub fn pure_power(nvars: usize, index: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = exp;
        Monomial { exps: exps.into() }
    }

    /// Square-free product of the given variables.
    pub fn from_support(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; nvars];
        for v in vars {
            exps[v] = 1;
        }
        Monomial { exps: exps.into() }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// A power `x_i^a` with `a > 0`.
    pub fn is_pure_power(&self) -> bool {
        self.exps.iter().filter(|&&e| e > 0).count() == 1
    }

    /// Indices of the variables with positive exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// `(index, exponent)` for every variable in the support.
    pub fn powers(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    fn check_len(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.zip_with(other, u32::max))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.zip_with(other, u32::min))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.zip_with(other, |a, b| a.saturating_sub(b)))
    }

    /// Exact quotient, `None` unless `divisor` divides `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.exps.len() != self.exps.len() || !divisor.divides_unchecked(self) {
            return None;
        }
        Some(self.zip_with(divisor, |a, b| a - b))
    }

    pub(crate) fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Two monomials are coprime when their supports are disjoint.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Drops every variable for which `keep` is false.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .enumerate()
                .map(|(i, &e)| if keep(i) { e } else { 0 })
                .collect(),
        }
    }

    /// Renders with the ring's names, e.g. `x1^2*x2`. The constant is `1`.
    pub fn display(&self, ring: &Ring) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, e) in self.powers() {
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(ring.name(i));
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        out
    }
}

/// Descending lex, the order generators are listed in.
pub(crate) fn descending(a: &Monomial, b: &Monomial) -> Ordering {
    b.cmp(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn divisibility_examples() {
        assert!(m(&[1, 0]).divides(&m(&[1, 1])).unwrap());
        assert!(!m(&[2, 0]).divides(&m(&[1, 2])).unwrap());
        assert!(m(&[1, 1]).divides(&m(&[2, 3])).unwrap());
        assert_eq!(m(&[1]).divides(&m(&[1, 0])), Err(Error::RingMismatch));
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 1])).unwrap(), m(&[2, 1]));
        assert_eq!(m(&[3, 1]).lcm(&Monomial::one(2)).unwrap(), m(&[3, 1]));
        assert_eq!(m(&[1, 3, 0]).lcm(&m(&[2, 0, 1])).unwrap(), m(&[2, 3, 1]));
        assert_eq!(m(&[1]).lcm(&m(&[1, 1])), Err(Error::RingMismatch));
    }

    #[test]
    fn colon_and_division() {
        assert_eq!(m(&[2, 0]).colon(&m(&[1, 0])).unwrap(), m(&[1, 0]));
        assert_eq!(m(&[1, 1]).colon(&m(&[3, 0])).unwrap(), m(&[0, 1]));
        assert_eq!(m(&[2, 1]).checked_div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(m(&[2, 0]).checked_div(&m(&[1, 1])), None);
    }

    #[test]
    fn shape_predicates() {
        assert!(m(&[0, 3]).is_pure_power());
        assert!(!m(&[1, 3]).is_pure_power());
        assert!(!Monomial::one(2).is_pure_power());
        assert!(m(&[1, 0, 1]).is_square_free());
        assert!(m(&[1, 0]).is_coprime(&m(&[0, 4])));
        assert_eq!(m(&[1, 3, 2]).degree(), 6);
    }

    #[test]
    fn lex_order_puts_x1_first() {
        let mut v = vec![m(&[0, 3]), m(&[2, 0]), m(&[1, 1])];
        v.sort_by(descending);
        assert_eq!(v, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 3])]);
    }

    #[test]
    fn display_uses_ring_names() {
        let ring = Ring::indexed("x", 2);
        assert_eq!(m(&[2, 1]).display(&ring), "x1^2*x2");
        assert_eq!(Monomial::one(2).display(&ring), "1");
    }
}
