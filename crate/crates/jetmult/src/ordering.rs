//! Monomial orderings.
//!
//! Both orderings are well-orders compatible with multiplication and
//! tie-break through the fixed variable order of [`JetVar`] (by base,
//! then by jet order), with the *earliest* variable in that order being
//! the greatest. Degrevlex is the crate-wide default.

use std::cmp::Ordering;

use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrdering {
    /// Total degree first; ties broken reverse-lexicographically: the
    /// monomial with the smaller exponent on the last differing variable
    /// (scanning variables from the greatest base/order downward) wins.
    DegRevLex,
    /// Straight lexicographic on the fixed variable order.
    Lex,
}

impl MonomialOrdering {
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match self {
            MonomialOrdering::DegRevLex => {
                match u.total_degree().cmp(&v.total_degree()) {
                    Ordering::Equal => {}
                    other => return other,
                }
                // Scan shared variables from the largest (base, order)
                // downward; at the first difference the smaller exponent
                // belongs to the greater monomial.
                let mut ui = u.iter().rev().peekable();
                let mut vi = v.iter().rev().peekable();
                loop {
                    match (ui.peek(), vi.peek()) {
                        (None, None) => return Ordering::Equal,
                        // Remaining exponents on one side only: that side
                        // carries weight on later variables, so it is less.
                        (Some(_), None) => return Ordering::Less,
                        (None, Some(_)) => return Ordering::Greater,
                        (Some((uv, ue)), Some((vv, ve))) => {
                            if uv == vv {
                                match ue.cmp(ve) {
                                    Ordering::Equal => {
                                        ui.next();
                                        vi.next();
                                    }
                                    // Same variable, bigger exponent here
                                    // means less overall.
                                    other => return other.reverse(),
                                }
                            } else if uv > vv {
                                // u has weight on a later variable.
                                return Ordering::Less;
                            } else {
                                return Ordering::Greater;
                            }
                        }
                    }
                }
            }
            MonomialOrdering::Lex => {
                let mut ui = u.iter().peekable();
                let mut vi = v.iter().peekable();
                loop {
                    match (ui.peek(), vi.peek()) {
                        (None, None) => return Ordering::Equal,
                        (Some(_), None) => return Ordering::Greater,
                        (None, Some(_)) => return Ordering::Less,
                        (Some((uv, ue)), Some((vv, ve))) => {
                            if uv == vv {
                                match ue.cmp(ve) {
                                    Ordering::Equal => {
                                        ui.next();
                                        vi.next();
                                    }
                                    other => return other,
                                }
                            } else if uv < vv {
                                // u touches an earlier (greater) variable.
                                return Ordering::Greater;
                            } else {
                                return Ordering::Less;
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Free-function spelling of [`MonomialOrdering::compare`].
pub fn compare_monomials(ord: MonomialOrdering, u: &Monomial, v: &Monomial) -> Ordering {
    ord.compare(u, v)
}
