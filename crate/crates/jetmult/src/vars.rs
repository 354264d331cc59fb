//! Jet variables x_i^(j): a base index i and a jet order j.
//!
//! Invariants:
//! - `base >= 1`, `order >= 0`
//! - The total order on variables is fixed and deterministic: by base,
//!   then by order. Every ordering, serialization, and renaming in the
//!   crate tie-breaks through this order.

use std::fmt;

/// The variable x_i^(j), written `x{i}_{j}` in the text grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JetVar {
    base: u32,
    order: u32,
}

impl JetVar {
    /// Panics if `base == 0`; base indices are 1-based.
    pub fn new(base: u32, order: u32) -> Self {
        assert!(base >= 1, "jet variable base must be >= 1");
        JetVar { base, order }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

impl fmt::Display for JetVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}_{}", self.base, self.order)
    }
}
