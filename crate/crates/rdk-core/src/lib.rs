//! Combinatorics of rational (a,b)-Dyck paths.
//!
//! An (a,b)-Dyck path (gcd(a,b) = 1) of size n is a lattice path from (0,0)
//! to (bn, an) over steps N = (0,1) and E = (1,0) that stays weakly above the
//! line y = ax/b. This crate implements the standard representations of such
//! paths (step words, step/height sequences, Stirling permutations, labeled
//! trees, parenthesis presentations, tuples of ordinary Dyck words, binary
//! trees), the maps between them, the Young and rotation orders, and the
//! horizontal/vertical strip decompositions, together with exhaustive
//! small-instance enumeration suitable for verifying the identities relating
//! all of these.
//!
//! The crate is `no_std` (it requires `alloc`). All arithmetic on slopes is
//! exact: comparisons against the line y = ax/b are cross-multiplied, never
//! floating point. Sequences are 0-indexed internally; serialized forms are
//! 1-indexed.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bintree;
pub mod orders;
pub mod paren;
pub mod paths;
pub mod stirling;
pub mod strips;
pub mod trees;

mod error;

pub use error::Error;
pub use paths::{DyckWord, HeightSeq, Slope, Step, StepSeq};

/// A mutable counter guarding exhaustive enumerations.
///
/// Oracles that sweep whole families charge one unit per generated object and
/// fail loudly once the cap is crossed, so that a mistyped parameter grid
/// cannot silently turn into an hour-long run.
#[derive(Debug, Clone)]
pub struct Budget {
    remaining: u64,
}

impl Budget {
    /// Default cap on the number of enumerated objects.
    pub const DEFAULT: u64 = 2_000_000;

    pub fn new(cap: u64) -> Budget {
        Budget { remaining: cap }
    }

    /// Charges `count` objects against the budget.
    pub fn charge(&mut self, count: u64) -> Result<(), Error> {
        match self.remaining.checked_sub(count) {
            Some(rest) => {
                self.remaining = rest;
                Ok(())
            }
            None => Err(Error::BudgetExceeded),
        }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::new(Budget::DEFAULT)
    }
}
