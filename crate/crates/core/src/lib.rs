//! Monomial ideals studied through their polarizations.
//!
//! Polarization turns `x_i^a` into the square-free product
//! `x[i,1] x[i,2] ... x[i,a]`. The crate computes polarizations and
//! decompositions of monomial ideals, the facet and non-face complexes of
//! square-free ideals, leaves and simplicial forests, and checks the
//! structural statements that transfer from a polarization that is a tree
//! back to the original ideal.

pub mod decomposition;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod polar;
pub mod random;
pub mod ring;
pub mod simplicial;
pub mod structure;

pub use decomposition::{
    ass_quotient, associated_primes, beta_coprime, height, irreducible_decomposition,
    minimal_primes, AssWitness, IrreducibleComponent, MonomialPrime,
};
pub use error::{Error, Result};
pub use ideal::{minimalize, MonomialIdeal, SquareFreeIdeal};
pub use monomial::Monomial;
pub use polar::{PolarRing, PolarVariable, PolarizingSequence};
pub use ring::{Ring, Variable};
pub use simplicial::{SimplicialComplex, VertexSet};
