//! Fractions whose denominators are products of quantum factors
//! `s^k - s^-k`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{Exponent, Laurent, LaurentPoly1, LaurentPoly2, VsExp};
use super::Scalar;
use crate::error::{Error, Result};

/// `num / ∏ (s^k - s^-k)` with the indices `k` kept as a sorted multiset.
///
/// Equality is decided by cross-multiplication, so two representatives of
/// the same value compare equal whether or not they were reduced.
#[derive(Clone)]
pub struct Frac<E: Exponent> {
    num: Laurent<E>,
    den: Vec<u32>,
}

/// Element of the coefficient ring: `Z[v^±1, s^±1]` localized at the
/// quantum factors.
pub type RingElem = Frac<VsExp>;
/// One-variable analogue, the target of `v = s^-N`.
pub type SFraction = Frac<i64>;

impl<E: Exponent> Frac<E> {
    pub fn new(num: Laurent<E>, mut den: Vec<u32>) -> Result<Self> {
        if den.contains(&0) {
            return Err(Error::InvalidArgument(
                "denominator indices must be >= 1".into(),
            ));
        }
        den.sort_unstable();
        Ok(Frac { num, den }.reduced())
    }

    /// Builds a fraction without attempting any cancellation.
    pub fn unreduced(num: Laurent<E>, mut den: Vec<u32>) -> Result<Self> {
        if den.contains(&0) {
            return Err(Error::InvalidArgument(
                "denominator indices must be >= 1".into(),
            ));
        }
        den.sort_unstable();
        Ok(Frac { num, den })
    }

    pub fn from_poly(num: Laurent<E>) -> Self {
        Frac {
            num,
            den: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Laurent::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Laurent::one())
    }

    pub fn num(&self) -> &Laurent<E> {
        &self.num
    }

    /// Quantum-factor indices of the denominator, ascending.
    pub fn den(&self) -> &[u32] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The denominator multiplied out.
    pub fn den_poly(&self) -> Laurent<E> {
        Laurent::quantum_product(&self.den)
    }

    /// Greedy cancellation: try each distinct denominator index from the
    /// largest down, removing one copy per successful exact division.
    pub fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let mut keep = Vec::with_capacity(self.den.len());
        let mut i = self.den.len();
        while i > 0 {
            i -= 1;
            let k = self.den[i];
            match self.num.div_quantum(k) {
                Some(q) => self.num = q,
                None => keep.push(k),
            }
        }
        keep.reverse();
        self.den = keep;
        self
    }

    /// Clears the denominator if the fraction is a Laurent polynomial.
    pub fn to_laurent(&self) -> Option<Laurent<E>> {
        let mut num = self.num.clone();
        for &k in self.den.iter().rev() {
            num = num.div_quantum(k)?;
        }
        Some(num)
    }

    /// Exact quotient `self / other`, when it lies in the ring.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let top = &self.num * &other.den_poly();
        let q = top.try_exact_div(&other.num).ok()??;
        Some(
            Frac {
                num: q,
                den: self.den.clone(),
            }
            .reduced(),
        )
    }

    /// Rewrites `a` and `b` over their least common quantum denominator and
    /// returns the two numerators with that denominator.
    fn over_common_den(a: &Self, b: &Self) -> (Laurent<E>, Laurent<E>, Vec<u32>) {
        if a.den == b.den {
            return (a.num.clone(), b.num.clone(), a.den.clone());
        }
        let (mut i, mut j) = (0, 0);
        let (mut common, mut miss_a, mut miss_b) = (Vec::new(), Vec::new(), Vec::new());
        while i < a.den.len() || j < b.den.len() {
            match (a.den.get(i), b.den.get(j)) {
                (Some(x), Some(y)) if x == y => {
                    common.push(*x);
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    common.push(*x);
                    miss_b.push(*x);
                    i += 1;
                }
                (Some(x), None) => {
                    common.push(*x);
                    miss_b.push(*x);
                    i += 1;
                }
                (_, Some(y)) => {
                    common.push(*y);
                    miss_a.push(*y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        let na = &a.num * &Laurent::quantum_product(&miss_a);
        let nb = &b.num * &Laurent::quantum_product(&miss_b);
        (na, nb, common)
    }

    /// Multiplies by the monomial with exponent `e`.
    pub fn shift(&self, e: E) -> Self {
        Frac {
            num: self.num.shift(e),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl RingElem {
    /// Image under the ring map `v = s^-n`.
    pub fn substitute_v(&self, n: i64) -> SFraction {
        Frac {
            num: self.num.substitute_v(n),
            den: self.den.clone(),
        }
        .reduced()
    }

    pub fn from_vs(c: i64, a: i64, b: i64) -> Self {
        Self::from_poly(LaurentPoly2::vs(c, a, b))
    }
}

impl SFraction {
    /// Embeds a `v`-free value into the two-variable ring.
    pub fn to_ring_elem(&self) -> RingElem {
        Frac {
            num: self.num.to_vs(),
            den: self.den.clone(),
        }
    }

    pub fn from_s(c: i64, b: i64) -> Self {
        Self::from_poly(LaurentPoly1::s_pow(c, b))
    }
}

impl<E: Exponent> PartialEq for Frac<E> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Self::over_common_den(self, other);
        a == b
    }
}

impl<E: Exponent> Eq for Frac<E> {}

impl<E: Exponent> fmt::Display for Frac<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/", self.num)?;
        for k in &self.den {
            write!(f, "[{k}]")?;
        }
        Ok(())
    }
}

impl<E: Exponent> fmt::Debug for Frac<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a, E: Exponent> Add<&'a Frac<E>> for &'a Frac<E> {
    type Output = Frac<E>;
    fn add(self, o: &Frac<E>) -> Frac<E> {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let (a, b, den) = Frac::over_common_den(self, o);
        Frac { num: &a + &b, den }.reduced()
    }
}

impl<'a, E: Exponent> Sub<&'a Frac<E>> for &'a Frac<E> {
    type Output = Frac<E>;
    fn sub(self, o: &Frac<E>) -> Frac<E> {
        self + &(-o)
    }
}

impl<'a, E: Exponent> Mul<&'a Frac<E>> for &'a Frac<E> {
    type Output = Frac<E>;
    fn mul(self, o: &Frac<E>) -> Frac<E> {
        if self.is_zero() || o.is_zero() {
            return Frac::zero();
        }
        let mut den = Vec::with_capacity(self.den.len() + o.den.len());
        den.extend_from_slice(&self.den);
        den.extend_from_slice(&o.den);
        den.sort_unstable();
        Frac {
            num: &self.num * &o.num,
            den,
        }
        .reduced()
    }
}

impl<E: Exponent> Neg for &Frac<E> {
    type Output = Frac<E>;
    fn neg(self) -> Frac<E> {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<E: Exponent> $tr for Frac<E> {
            type Output = Frac<E>;
            fn $m(self, o: Frac<E>) -> Frac<E> {
                (&self).$m(&o)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<E: Exponent> Neg for Frac<E> {
    type Output = Frac<E>;
    fn neg(self) -> Frac<E> {
        -&self
    }
}

impl<E: Exponent> Zero for Frac<E> {
    fn zero() -> Self {
        Frac::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<E: Exponent> One for Frac<E> {
    fn one() -> Self {
        Frac::one()
    }
}

impl<E: Exponent> From<Laurent<E>> for Frac<E> {
    fn from(p: Laurent<E>) -> Self {
        Frac::from_poly(p)
    }
}

impl<E: Exponent> Scalar for Frac<E> {
    fn try_div(&self, other: &Self) -> Option<Self> {
        self.checked_div(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta() -> RingElem {
        let top = &LaurentPoly2::vs(1, -1, 0) - &LaurentPoly2::v();
        RingElem::new(top, vec![1]).unwrap()
    }

    #[test]
    fn additive_inverse() {
        let a = RingElem::from_vs(1, 1, 0);
        let b = RingElem::from_vs(-1, 1, 0);
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn multiplicative_inverse() {
        // (v^-1 - v) is not invertible in the ring, so divide delta * (s - s^-1)
        // by it instead of multiplying by an inverse
        let top = RingElem::from_poly(&LaurentPoly2::vs(1, -1, 0) - &LaurentPoly2::v());
        let q1 = RingElem::from_poly(LaurentPoly2::quantum_factor(1).unwrap());
        let prod = &delta() * &q1;
        assert_eq!(prod, top);
        assert_eq!(prod.checked_div(&top), Some(RingElem::one()));
        assert_eq!(q1.checked_div(&top), None);
    }

    #[test]
    fn delta_squared() {
        let d2 = &delta() * &delta();
        let expected = RingElem::new(
            LaurentPoly2::from_terms([
                (1, VsExp::new(-2, 0)),
                (-2, VsExp::new(0, 0)),
                (1, VsExp::new(2, 0)),
            ]),
            vec![1, 1],
        )
        .unwrap();
        assert_eq!(d2, expected);
        assert_eq!(d2.den(), &[1, 1]);
    }

    #[test]
    fn cancellation_is_greedy_and_value_preserving() {
        // (s^2 - s^-2) / [1] reduces to s + s^-1
        let x = RingElem::new(LaurentPoly2::quantum_factor(2).unwrap(), vec![1]).unwrap();
        assert!(x.den().is_empty());
        assert_eq!(x.num(), &(&LaurentPoly2::s() + &LaurentPoly2::vs(1, 0, -1)));
        let raw = RingElem::unreduced(LaurentPoly2::quantum_factor(2).unwrap(), vec![1]).unwrap();
        assert_eq!(raw, x);
    }

    #[test]
    fn zero_index_rejected() {
        assert!(RingElem::new(LaurentPoly2::one(), vec![0]).is_err());
    }

    #[test]
    fn substitution_cancels() {
        // delta at N = 2 is [2] = s + s^-1
        let d = delta().substitute_v(2);
        assert_eq!(
            d,
            SFraction::from_poly(LaurentPoly1::from_terms([(1, 1), (1, -1)]))
        );
        assert!(d.den().is_empty());
    }

    #[test]
    fn to_laurent_clears_exact_denominators() {
        let x = RingElem::unreduced(
            &LaurentPoly2::quantum_factor(3).unwrap() * &LaurentPoly2::quantum_factor(1).unwrap(),
            vec![1, 3],
        )
        .unwrap();
        assert_eq!(x.to_laurent(), Some(LaurentPoly2::one()));
        assert_eq!(delta().to_laurent(), None);
    }

    #[test]
    fn display() {
        assert_eq!(delta().to_string(), "(-1*v^1*s^0 + 1*v^-1*s^0)/[1]");
        assert_eq!(RingElem::one().to_string(), "1*v^0*s^0");
    }
}
