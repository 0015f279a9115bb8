use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::partition::Partition;
use crate::serde_util::JsonCoefficient;

/// A homogeneous element of the Schur basis with positive coefficients.
/// Zero terms are never stored; iteration is in graded-lex order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurExpansion {
    degree: usize,
    terms: BTreeMap<Partition, BigUint>,
}

impl SchurExpansion {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `s_λ` itself.
    pub fn single(lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigUint::from(1u32));
        Self { degree, terms }
    }

    /// Panics if a term has the wrong size.
    pub fn add_term(&mut self, nu: Partition, coefficient: BigUint) {
        assert_eq!(nu.size(), self.degree, "term {nu} in degree {}", self.degree);
        if coefficient.is_zero() {
            return;
        }
        *self.terms.entry(nu).or_default() += coefficient;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, nu: &Partition) -> BigUint {
        self.terms.get(nu).cloned().unwrap_or_default()
    }

    pub fn contains(&self, nu: &Partition) -> bool {
        self.terms.contains_key(nu)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn add_assign(&mut self, other: &SchurExpansion) {
        assert_eq!(self.degree, other.degree);
        for (nu, c) in &other.terms {
            *self.terms.entry(nu.clone()).or_default() += c;
        }
    }

    pub fn scaled(&self, factor: &BigUint) -> SchurExpansion {
        let mut out = SchurExpansion::zero(self.degree);
        if factor.is_zero() {
            return out;
        }
        for (nu, c) in &self.terms {
            out.terms.insert(nu.clone(), c * factor);
        }
        out
    }
}

impl FromIterator<(Partition, BigUint)> for SchurExpansion {
    /// Panics on an empty iterator or mixed degrees.
    fn from_iter<I: IntoIterator<Item = (Partition, BigUint)>>(iter: I) -> Self {
        let mut iter = iter.into_iter().peekable();
        let degree = iter.peek().expect("nonempty expansion").0.size();
        let mut out = SchurExpansion::zero(degree);
        for (nu, c) in iter {
            out.add_term(nu, c);
        }
        out
    }
}

/// An object from `ν` to its coefficient, in graded-lex order.
impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (nu, c) in &self.terms {
            map.serialize_entry(nu, &JsonCoefficient::from(c))?;
        }
        map.end()
    }
}

/// One term per line, `ν:c`.
impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (nu, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{nu}:{c}")?;
        }
        Ok(())
    }
}
