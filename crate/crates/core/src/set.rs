//! Ordered fuzzy sets over a labelled finite universe.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// Anything that occupies one point of a universe of discourse.
pub trait Labeled {
    fn label(&self) -> &str;
}

/// A named, ordered, nonempty collection of elements with pairwise-distinct labels.
///
/// The label order fixes element alignment: two sets are conformable only when
/// their label sequences are identical, position by position.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySet<E> {
    name: String,
    elements: Vec<E>,
}

impl<E: Labeled> FuzzySet<E> {
    pub fn new(name: impl Into<String>, elements: Vec<E>) -> Result<Self> {
        let name = name.into();
        if elements.is_empty() {
            return Err(Error::EmptySet(name));
        }
        let mut seen = HashSet::with_capacity(elements.len());
        for e in &elements {
            if !seen.insert(e.label()) {
                return Err(Error::DuplicateLabel {
                    set: name,
                    label: e.label().to_string(),
                });
            }
        }
        Ok(FuzzySet { name, elements })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.elements.iter().map(Labeled::label)
    }

    pub fn get(&self, label: &str) -> Option<&E> {
        self.elements.iter().find(|e| e.label() == label)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn check_conformable<F: Labeled>(&self, other: &FuzzySet<F>) -> Result<()> {
        let mismatch = |reason: String| Error::Conformability {
            left: self.name.clone(),
            right: other.name().to_string(),
            reason,
        };
        if self.len() != other.len() {
            return Err(mismatch(format!(
                "{} elements vs {}",
                self.len(),
                other.len()
            )));
        }
        for (i, (a, b)) in self.labels().zip(other.labels()).enumerate() {
            if a != b {
                return Err(mismatch(format!("position {i} holds '{a}' vs '{b}'")));
            }
        }
        Ok(())
    }

    pub fn is_conformable<F: Labeled>(&self, other: &FuzzySet<F>) -> bool {
        self.check_conformable(other).is_ok()
    }

    /// Builds a new set by combining aligned element pairs.
    pub(crate) fn zip_with<F>(&self, other: &Self, name: String, mut f: F) -> Result<Self>
    where
        F: FnMut(&E, &E) -> Result<E>,
    {
        self.check_conformable(other)?;
        let elements = self
            .elements
            .iter()
            .zip(&other.elements)
            .map(|(a, b)| f(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(FuzzySet { name, elements })
    }

    pub(crate) fn map<F>(&self, name: String, f: F) -> Result<Self>
    where
        F: FnMut(&E) -> Result<E>,
    {
        let elements = self.elements.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(FuzzySet { name, elements })
    }
}
