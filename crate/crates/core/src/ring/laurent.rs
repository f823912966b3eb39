//! Sparse Laurent polynomials with arbitrary-precision integer coefficients.
//!
//! A single generic type backs both the two-variable ring `Z[v^±1, s^±1]`
//! and the one-variable ring `Z[s^±1]`; the exponent type decides which.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial.
///
/// The ordering must be a total order compatible with addition, so that the
/// leading term of a product is the product of leading terms.
pub trait Exponent:
    Copy + Ord + Eq + fmt::Debug + Send + Sync + Add<Output = Self> + Sub<Output = Self>
{
    fn origin() -> Self;
    /// Exponent of `s`.
    fn s(self) -> i64;
    /// Same monomial with the `s` exponent replaced.
    fn with_s(self, s: i64) -> Self;
    /// Componentwise minimum.
    fn meet(self, other: Self) -> Self;
    /// Componentwise maximum.
    fn join(self, other: Self) -> Self;
    /// Componentwise `lo <= self <= hi`.
    fn within(self, lo: Self, hi: Self) -> bool;
    fn write_monomial(self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    /// Exponent of `v`, when the ring has that variable.
    fn v(self) -> Option<i64>;
    /// Builds an exponent from its parts; `None` if `v` is given to a ring
    /// without it.
    fn from_parts(v: Option<i64>, s: i64) -> Option<Self>;
}

/// Exponent pair `(e_v, e_s)` of the monomial `v^e_v s^e_s`, ordered
/// lexicographically with `v` first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VsExp {
    pub v: i64,
    pub s: i64,
}

impl VsExp {
    pub const fn new(v: i64, s: i64) -> Self {
        VsExp { v, s }
    }
}

impl Add for VsExp {
    type Output = VsExp;
    fn add(self, o: VsExp) -> VsExp {
        VsExp::new(self.v + o.v, self.s + o.s)
    }
}

impl Sub for VsExp {
    type Output = VsExp;
    fn sub(self, o: VsExp) -> VsExp {
        VsExp::new(self.v - o.v, self.s - o.s)
    }
}

impl Exponent for VsExp {
    fn origin() -> Self {
        VsExp::new(0, 0)
    }
    fn s(self) -> i64 {
        self.s
    }
    fn with_s(self, s: i64) -> Self {
        VsExp::new(self.v, s)
    }
    fn meet(self, o: Self) -> Self {
        VsExp::new(self.v.min(o.v), self.s.min(o.s))
    }
    fn join(self, o: Self) -> Self {
        VsExp::new(self.v.max(o.v), self.s.max(o.s))
    }
    fn within(self, lo: Self, hi: Self) -> bool {
        lo.v <= self.v && self.v <= hi.v && lo.s <= self.s && self.s <= hi.s
    }
    fn write_monomial(self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v^{}*s^{}", self.v, self.s)
    }
    fn v(self) -> Option<i64> {
        Some(self.v)
    }
    fn from_parts(v: Option<i64>, s: i64) -> Option<Self> {
        Some(VsExp::new(v.unwrap_or(0), s))
    }
}

impl Exponent for i64 {
    fn origin() -> Self {
        0
    }
    fn s(self) -> i64 {
        self
    }
    fn with_s(self, s: i64) -> Self {
        s
    }
    fn meet(self, o: Self) -> Self {
        self.min(o)
    }
    fn join(self, o: Self) -> Self {
        self.max(o)
    }
    fn within(self, lo: Self, hi: Self) -> bool {
        lo <= self && self <= hi
    }
    fn write_monomial(self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s^{}", self)
    }
    fn v(self) -> Option<i64> {
        None
    }
    fn from_parts(v: Option<i64>, s: i64) -> Option<Self> {
        match v {
            None | Some(0) => Some(s),
            Some(_) => None,
        }
    }
}

/// Laurent polynomial stored as a map from exponent to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<E: Exponent> {
    terms: BTreeMap<E, BigInt>,
}

/// Element of `Z[v^±1, s^±1]`.
pub type LaurentPoly2 = Laurent<VsExp>;
/// Element of `Z[s^±1]`.
pub type LaurentPoly1 = Laurent<i64>;

impl<E: Exponent> Laurent<E> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), E::origin())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), E::origin())
    }

    pub fn monomial(c: impl Into<BigInt>, e: E) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, E)>) -> Self {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&E::origin()).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&E, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: E) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Largest term in the exponent order.
    pub fn leading_term(&self) -> Option<(E, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// If the polynomial is a single term, returns it.
    pub fn as_monomial(&self) -> Option<(E, &BigInt)> {
        if self.terms.len() == 1 {
            self.leading_term()
        } else {
            None
        }
    }

    /// Componentwise minimum and maximum exponents over all terms.
    pub fn exponent_bounds(&self) -> Option<(E, E)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold((first, first), |(lo, hi), &e| (lo.meet(e), hi.join(e))))
    }

    fn add_term(&mut self, e: E, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies by the monomial with exponent `e`.
    pub fn shift(&self, e: E) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k + e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `s^k - s^-k`.
    pub fn quantum_factor(k: i64) -> Result<Self> {
        if k <= 0 {
            return Err(Error::InvalidArgument(format!(
                "quantum factor index must be positive, got {k}"
            )));
        }
        Ok(Self::from_terms([
            (1, E::origin().with_s(k)),
            (-1, E::origin().with_s(-k)),
        ]))
    }

    /// Product of `s^k - s^-k` over the listed indices.
    pub fn quantum_product(ks: &[u32]) -> Self {
        ks.iter().fold(Self::one(), |acc, &k| {
            &acc * &Self::quantum_factor(i64::from(k)).expect("indices are positive")
        })
    }

    /// Exact division by `s^k - s^-k`, or `None` if it does not divide.
    ///
    /// Equivalent to `try_exact_div(self, quantum_factor(k))`, but runs as a
    /// linear recurrence on each fibre of fixed non-`s` exponents.
    pub fn div_quantum(&self, k: u32) -> Option<Self> {
        assert!(k >= 1, "quantum factor index must be positive");
        let k = i64::from(k);
        let m = 2 * k;
        // self = s^-k (s^2k - 1) q  <=>  s^k self = (s^m - 1) q
        let mut quotient = Self::zero();
        let mut fibres: BTreeMap<E, Vec<(i64, &BigInt)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            fibres.entry(e.with_s(0)).or_default().push((e.s() + k, c));
        }
        for (base, coeffs) in fibres {
            let lo = coeffs.first()?.0;
            let hi = coeffs.last()?.0;
            if hi - lo < m {
                return None;
            }
            let width = (hi - lo + 1) as usize;
            let mut a = vec![BigInt::zero(); width];
            for (e, c) in coeffs {
                a[(e - lo) as usize] = c.clone();
            }
            // a[e] = q[e - m] - q[e]; solve for q from the top down.
            let qw = width - m as usize;
            let mut q = vec![BigInt::zero(); qw];
            for idx in (m as usize..width).rev() {
                let above = if idx < qw {
                    q[idx].clone()
                } else {
                    BigInt::zero()
                };
                q[idx - m as usize] = &a[idx] + above;
            }
            for idx in 0..m as usize {
                let balanced = if idx < qw {
                    (&a[idx] + &q[idx]).is_zero()
                } else {
                    a[idx].is_zero()
                };
                if !balanced {
                    return None;
                }
            }
            for (idx, c) in q.into_iter().enumerate() {
                quotient.add_term(base.with_s(lo + idx as i64), c);
            }
        }
        Some(quotient)
    }

    /// Returns `q` with `self = divisor * q` when such a Laurent polynomial
    /// exists, `None` otherwise.
    ///
    /// Plain leading-term division in the monomial order. The quotient's
    /// exponents are confined to the box `[lo(self) - lo(b), hi(self) - hi(b)]`,
    /// which bounds the loop when the division is not exact.
    pub fn try_exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (lead_e, lead_c) = match divisor.leading_term() {
            Some(t) => t,
            None => return Err(Error::InvalidArgument("division by zero polynomial".into())),
        };
        let Some((alo, ahi)) = self.exponent_bounds() else {
            return Ok(Some(Self::zero()));
        };
        let (blo, bhi) = divisor.exponent_bounds().expect("divisor is nonzero");
        let (qlo, qhi) = (alo - blo, ahi - bhi);
        if let Some((e, c)) = divisor.as_monomial() {
            // fast path: every coefficient must be divisible by c
            let mut q = Self::zero();
            for (k, x) in &self.terms {
                let (d, r) = x.div_rem(c);
                if !r.is_zero() {
                    return Ok(None);
                }
                q.terms.insert(*k - e, d);
            }
            return Ok(Some(q));
        }
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some((re, rc)) = rem.leading_term() {
            let qe = re - lead_e;
            if !qe.within(qlo, qhi) {
                return Ok(None);
            }
            let (qc, r) = rc.div_rem(lead_c);
            if !r.is_zero() {
                return Ok(None);
            }
            let step = Self::monomial(qc.clone(), qe);
            rem = &rem - &(divisor * &step);
            quotient.add_term(qe, qc);
        }
        Ok(Some(quotient))
    }

    /// Maps each exponent through `f`, summing collisions.
    pub fn map_exponents<F: Exponent>(&self, f: impl Fn(E) -> F) -> Laurent<F> {
        let mut out = Laurent::<F>::zero();
        for (e, c) in &self.terms {
            out.add_term(f(*e), c.clone());
        }
        out
    }
}

impl LaurentPoly2 {
    pub fn v() -> Self {
        Self::monomial(1, VsExp::new(1, 0))
    }

    pub fn s() -> Self {
        Self::monomial(1, VsExp::new(0, 1))
    }

    /// `c v^a s^b`.
    pub fn vs(c: impl Into<BigInt>, a: i64, b: i64) -> Self {
        Self::monomial(c, VsExp::new(a, b))
    }

    /// Image under `v = s^-n`.
    pub fn substitute_v(&self, n: i64) -> LaurentPoly1 {
        self.map_exponents(|e| -n * e.v + e.s)
    }

    /// True when no term involves `v`.
    pub fn is_v_free(&self) -> bool {
        self.terms.keys().all(|e| e.v == 0)
    }
}

impl LaurentPoly1 {
    /// `c s^b`.
    pub fn s_pow(c: impl Into<BigInt>, b: i64) -> Self {
        Self::monomial(c, b)
    }

    /// `c q^b` with `q = s^2`.
    pub fn q_pow(c: impl Into<BigInt>, b: i64) -> Self {
        Self::monomial(c, 2 * b)
    }

    /// Embeds into the two-variable ring as a `v`-free polynomial.
    pub fn to_vs(&self) -> LaurentPoly2 {
        self.map_exponents(|s| VsExp::new(0, s))
    }

    /// True when every exponent of `s` is even, so the polynomial lives in
    /// `Z[q^±1]`.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Writes the polynomial in `q = s^2`; `None` if some exponent is odd.
    pub fn to_q_string(&self) -> Option<String> {
        if !self.is_even() {
            return None;
        }
        if self.is_zero() {
            return Some("0".into());
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            write_sign(&mut out, c, i == 0);
            out.push_str(&format!("{}*q^{}", c.abs(), e / 2));
        }
        Some(out)
    }
}

fn write_sign(out: &mut String, c: &BigInt, first: bool) {
    match (first, c.is_negative()) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
}

/// Canonical text form: `c*v^a*s^b` terms (or `c*s^b` in one variable)
/// in descending exponent order, joined by ` + ` / ` - `; zero prints `0`.
impl<E: Exponent> fmt::Display for Laurent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut sign = String::new();
            write_sign(&mut sign, c, i == 0);
            write!(f, "{}{}*", sign, c.abs())?;
            e.write_monomial(f)?;
        }
        Ok(())
    }
}

impl<E: Exponent> fmt::Debug for Laurent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a, E: Exponent> Add<&'a Laurent<E>> for &'a Laurent<E> {
    type Output = Laurent<E>;
    fn add(self, o: &Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a, E: Exponent> Sub<&'a Laurent<E>> for &'a Laurent<E> {
    type Output = Laurent<E>;
    fn sub(self, o: &Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a, E: Exponent> Mul<&'a Laurent<E>> for &'a Laurent<E> {
    type Output = Laurent<E>;
    fn mul(self, o: &Laurent<E>) -> Laurent<E> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(*e1 + *e2, c1 * c2);
            }
        }
        out
    }
}

impl<E: Exponent> Neg for &Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<E: Exponent> $tr for Laurent<E> {
            type Output = Laurent<E>;
            fn $m(self, o: Laurent<E>) -> Laurent<E> {
                (&self).$m(&o)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<E: Exponent> Neg for Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        -&self
    }
}

impl<E: Exponent> Zero for Laurent<E> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<E: Exponent> One for Laurent<E> {
    fn one() -> Self {
        Laurent::one()
    }
}
