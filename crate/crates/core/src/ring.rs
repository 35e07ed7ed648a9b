//! Ordered variable lists shared by monomials, ideals and complexes.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An ordered list of distinct variable names. Cloning is cheap.
#[derive(Clone)]
pub struct Ring {
    names: Arc<[String]>,
}

/// One variable of a [`Ring`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    pub index: usize,
    pub name: String,
}

impl Ring {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Ring {
            names: names.into(),
        })
    }

    /// `x1, ..., xn`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Ring {
            names: (1..=n).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn variable(&self, index: usize) -> Result<Variable> {
        self.names
            .get(index)
            .map(|name| Variable {
                index,
                name: name.clone(),
            })
            .ok_or(Error::VariableOutOfRange {
                index,
                size: self.len(),
            })
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.names.iter().enumerate().map(|(index, name)| Variable {
            index,
            name: name.clone(),
        })
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Ring {}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}
