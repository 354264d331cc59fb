//! Sparse multivariate polynomials over the exact rationals.
//!
//! Invariants:
//! - Terms are keyed by monomial; no two terms share a monomial.
//! - No zero coefficients are stored; the zero polynomial has no terms.
//! - All operations are pure; values are immutable after construction.
//!
//! `Display` emits the canonical text form (terms in decreasing degrevlex
//! order, coefficient 1 omitted), which is also the golden-file format and
//! round-trips through [`crate::parse`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::vars::JetVar;

/// A single coefficient-monomial pair. The coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub mono: Monomial,
}

/// A polynomial in canonical sparse form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Polynomial::zero();
        p.insert_add(Monomial::one(), c);
        p
    }

    pub fn variable(v: JetVar) -> Self {
        Polynomial::monomial(Monomial::var(v))
    }

    /// The monomial as a polynomial with coefficient 1.
    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(BigRational::one(), m)
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.insert_add(m, c);
        p
    }

    /// Accumulates (monomial, coefficient) pairs; repeated monomials add,
    /// zero results are dropped.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(pairs: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in pairs {
            p.insert_add(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in structural (container) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn vars(&self) -> BTreeSet<JetVar> {
        self.terms
            .keys()
            .flat_map(|m| m.vars().copied())
            .collect()
    }

    /// Maximum total degree over all terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    fn insert_add(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(cur) => {
                *cur += c;
                if cur.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    /// `self * (c * m)`.
    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(mm, x)| (mm.mul(m), x * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Applies the ring homomorphism sending each assigned variable to its
    /// image polynomial; unassigned variables map to themselves.
    pub fn substitute(&self, assignment: &BTreeMap<JetVar, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (mono, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut acc = Polynomial::constant(c.clone());
            for (v, e) in mono.iter() {
                match assignment.get(v) {
                    Some(img) => acc = &acc * &img.pow(*e),
                    None => kept = kept.mul(&Monomial::var_pow(*v, *e)),
                }
            }
            for (m, x) in acc.terms {
                out.insert_add(m.mul(&kept), x);
            }
        }
        out
    }

    /// The greatest term under `ord`, or `None` for the zero polynomial.
    pub fn leading(&self, ord: MonomialOrdering) -> Option<(&Monomial, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.compare(a, b))
    }

    /// Terms in decreasing `ord` order.
    pub fn sorted_terms(&self, ord: MonomialOrdering) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| ord.compare(b, a));
        v
    }

    /// Divides by the leading coefficient under `ord`; zero stays zero.
    pub fn monic(&self, ord: MonomialOrdering) -> Polynomial {
        match self.leading(ord) {
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scaled(&inv)
            }
            None => Polynomial::zero(),
        }
    }

    /// Canonical serialization: decreasing degrevlex, `" + "`/`" - "`
    /// separators, coefficient 1 omitted, bare rationals for constants.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self
            .sorted_terms(MonomialOrdering::DegRevLex)
            .into_iter()
            .enumerate()
        {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    // A leading minus must carry an explicit rational so
                    // the grammar can re-read it.
                    out.push_str(&format!("-{mag}"));
                    if !m.is_one() {
                        out.push_str(&format!("*{m}"));
                    }
                    continue;
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(&format!("{mag}"));
            } else if mag.is_one() {
                out.push_str(&format!("{m}"));
            } else {
                out.push_str(&format!("{mag}*{m}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for (mm, cc) in &rhs.terms {
                out.insert_add(m.mul(mm), c * cc);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(b: u32, o: u32) -> JetVar {
        JetVar::new(b, o)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn x(b: u32, o: u32) -> Polynomial {
        Polynomial::variable(v(b, o))
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = &x(1, 0) + &(-&x(1, 0));
        assert!(p.is_zero());
    }

    #[test]
    fn disjoint_supports_concatenate() {
        let a = &x(1, 0) * &x(2, 1);
        let b = &x(1, 1) * &x(2, 0);
        let s = &a + &b;
        assert_eq!(s.num_terms(), 2);
        assert_eq!(s.to_canonical_string(), "x1_0*x2_1 + x1_1*x2_0");
    }

    #[test]
    fn exact_rational_addition() {
        let p = &x(1, 0).scaled(&q(1, 2)) + &x(1, 0).scaled(&q(1, 3));
        assert_eq!(p, x(1, 0).scaled(&q(5, 6)));
        assert_eq!(p.to_canonical_string(), "5/6*x1_0");
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(1, 0) + &x(2, 0)) * &(&x(1, 0) - &x(2, 0));
        let expected = &(&x(1, 0) * &x(1, 0)) - &(&x(2, 0) * &x(2, 0));
        assert_eq!(p, expected);
        assert_eq!(p.to_canonical_string(), "x1_0^2 - x2_0^2");
    }

    #[test]
    fn zero_absorbs_product() {
        let p = &x(1, 0) * &Polynomial::zero();
        assert!(p.is_zero());
    }

    #[test]
    fn exponents_add_on_product() {
        let p = &x(1, 0) * &x(1, 0);
        assert_eq!(p, Polynomial::monomial(Monomial::var_pow(v(1, 0), 2)));
    }

    #[test]
    fn substitute_annihilates() {
        let p = &x(1, 0) * &x(2, 0);
        let a = BTreeMap::from([(v(1, 0), Polynomial::zero())]);
        assert!(p.substitute(&a).is_zero());
    }

    #[test]
    fn substitute_renames() {
        let p = &x(1, 0) + &x(2, 0);
        let a = BTreeMap::from([(v(1, 0), x(1, 1))]);
        assert_eq!(p.substitute(&a), &x(1, 1) + &x(2, 0));
    }

    #[test]
    fn substitute_partial_evaluation() {
        // x1_0*x2_1 + x1_1*x2_0 with x1_1 -> 3, x2_1 -> 5.
        let p = &(&x(1, 0) * &x(2, 1)) + &(&x(1, 1) * &x(2, 0));
        let a = BTreeMap::from([
            (v(1, 1), Polynomial::constant(q(3, 1))),
            (v(2, 1), Polynomial::constant(q(5, 1))),
        ]);
        let got = p.substitute(&a);

        // Independent route: evaluate each term by looking its variables up
        // one at a time and multiplying scalars into the surviving monomial.
        let mut expected = Polynomial::zero();
        for (mono, c) in p.terms() {
            let mut coeff = c.clone();
            let mut survivors = Monomial::one();
            for (var, e) in mono.iter() {
                match a.get(var) {
                    Some(img) => {
                        let val = img.coeff(&Monomial::one());
                        for _ in 0..*e {
                            coeff *= val.clone();
                        }
                    }
                    None => survivors = survivors.mul(&Monomial::var_pow(*var, *e)),
                }
            }
            expected = &expected + &Polynomial::term(coeff, survivors);
        }
        assert_eq!(got, expected);
        assert_eq!(got.to_canonical_string(), "5*x1_0 + 3*x2_0");
    }

    #[test]
    fn canonical_string_handles_constants_and_signs() {
        assert_eq!(Polynomial::zero().to_canonical_string(), "0");
        assert_eq!(Polynomial::one().to_canonical_string(), "1");
        let p = &Polynomial::constant(q(-7, 3)) + &x(1, 0).scaled(&q(-1, 1));
        assert_eq!(p.to_canonical_string(), "-1*x1_0 - 7/3");
    }

    #[test]
    fn leading_term_degrevlex() {
        let p = &(&x(1, 0) * &x(1, 0)) + &(&x(1, 0) * &x(2, 0));
        let (m, _) = p.leading(MonomialOrdering::DegRevLex).unwrap();
        assert_eq!(*m, Monomial::var_pow(v(1, 0), 2));
    }
}
