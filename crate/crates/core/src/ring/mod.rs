//! Exact arithmetic in `Z[v^±1, s^±1]`, in `Z[s^±1]`, and in their
//! localizations at the quantum factors `s^k - s^-k`.

mod frac;
mod laurent;
mod serial;

pub use frac::{Frac, RingElem, SFraction};
pub use laurent::{Exponent, Laurent, LaurentPoly1, LaurentPoly2, VsExp};
pub use serial::{FracJson, TermJson};

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Commutative ring element usable as a matrix entry or series coefficient.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Exact quotient, or `None` when `other` does not divide `self`.
    fn try_div(&self, other: &Self) -> Option<Self>;
}

impl<E: Exponent> Scalar for Laurent<E> {
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.try_exact_div(other).ok().flatten()
    }
}

/// `s^k - s^-k` in the two-variable ring.
pub fn quantum_factor(k: i64) -> crate::Result<LaurentPoly2> {
    LaurentPoly2::quantum_factor(k)
}

/// Exact division in `Z[v^±1, s^±1]`; `Ok(None)` when no quotient exists.
pub fn try_exact_div(a: &LaurentPoly2, b: &LaurentPoly2) -> crate::Result<Option<LaurentPoly2>> {
    a.try_exact_div(b)
}

/// Image of `a` under `v = s^-n`.
pub fn substitute_v(a: &RingElem, n: i64) -> SFraction {
    a.substitute_v(n)
}
