//! Power products of jet variables.
//!
//! Invariants:
//! - No zero exponents are stored; the empty map is the monomial 1.
//! - `total_degree` is the sum of exponents, `jet_weight` is
//!   sum(order * exponent) over all entries.

use std::collections::BTreeMap;
use std::fmt;

use crate::vars::JetVar;

/// A monomial, stored as a sparse exponent map keyed by [`JetVar`].
///
/// The derived `Ord` is structural (entry-wise on the sorted map) and is
/// used only as a deterministic container key; monomial *orderings* live
/// in [`crate::ordering`].
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial(BTreeMap<JetVar, u32>);

impl Monomial {
    /// The monomial 1.
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(v: JetVar) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: JetVar, exp: u32) -> Self {
        let mut map = BTreeMap::new();
        if exp > 0 {
            map.insert(v, exp);
        }
        Monomial(map)
    }

    /// Builds a monomial from (variable, exponent) pairs; exponents for a
    /// repeated variable accumulate, zero exponents are dropped.
    pub fn from_exponents<I: IntoIterator<Item = (JetVar, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<JetVar, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial(map)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: &JetVar) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    /// Entries in increasing variable order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&JetVar, &u32)> {
        self.0.iter()
    }

    pub fn vars(&self) -> impl Iterator<Item = &JetVar> {
        self.0.keys()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    /// sum(order * exponent) over all entries.
    pub fn jet_weight(&self) -> u64 {
        self.0
            .iter()
            .map(|(v, e)| v.order() as u64 * *e as u64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut map = self.0.clone();
        for (v, e) in &other.0 {
            *map.entry(*v).or_insert(0) += e;
        }
        Monomial(map)
    }

    pub fn pow(&self, exp: u32) -> Monomial {
        if exp == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (*v, e * exp)).collect())
    }

    /// True if `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(v, e)| other.exponent(v) >= *e)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut map = self.0.clone();
        for (v, e) in &other.0 {
            match map.get_mut(v) {
                Some(cur) if *cur > *e => *cur -= e,
                Some(cur) if *cur == *e => {
                    map.remove(v);
                }
                _ => return None,
            }
        }
        Some(Monomial(map))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut map = self.0.clone();
        for (v, e) in &other.0 {
            let cur = map.entry(*v).or_insert(0);
            *cur = (*cur).max(*e);
        }
        Monomial(map)
    }

    /// True if the two monomials share no variable.
    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.0.keys().all(|v| other.exponent(v) == 0)
    }
}

impl fmt::Display for Monomial {
    /// Factors in increasing variable order; exponent 1 omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
