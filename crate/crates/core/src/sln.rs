//! `sl(N)` specializations of `⟨λ,μ⟩` under `v = s^-N`, computed both by
//! substitution and from minors of the Vandermonde matrix `(q^{ij})`.

use num_integer::Integer;
use serde::Serialize;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::hopf::hopf_invariant;
use crate::ring::{LaurentPoly1, RingElem, SFraction};
use crate::schur::laplace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SlNRoute {
    Substitution,
    Minor,
}

/// Exponent `numer/denom` of `s`, kept symbolic because it is fractional
/// in general.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FractionalPower {
    pub numer: i64,
    pub denom: i64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SlNResult {
    pub lambda: Partition,
    pub mu: Partition,
    pub n: usize,
    pub value: SFraction,
    pub route: SlNRoute,
    /// The factor `x^{2|λ||μ|}` with `x = s^{-1/N}` relating `⟨λ,μ⟩_N` to
    /// the `sl(N)_q` module invariant, as a power of `s`.
    pub correction: FractionalPower,
}

impl SlNResult {
    fn new(
        lambda: &Partition,
        mu: &Partition,
        n: usize,
        value: SFraction,
        route: SlNRoute,
    ) -> Self {
        let numer = -2 * (lambda.size() * mu.size()) as i64;
        let g = numer.gcd(&(n as i64));
        let correction = FractionalPower {
            numer: numer / g,
            denom: n as i64 / g,
        };
        // present Laurent polynomials without a denominator when possible
        let value = match value.to_laurent() {
            Some(p) => SFraction::from_poly(p),
            None => value,
        };
        SlNResult {
            lambda: lambda.clone(),
            mu: mu.clone(),
            n,
            value,
            route,
            correction,
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    Ok(())
}

/// `P^N_(λ,μ)`: the `N × N` minor of `(q^{ij})` on rows `I_μ` and columns
/// `I_λ`, both taken in decreasing order. Returned in `s` with `q = s²`.
pub fn vandermonde_minor(lambda: &Partition, mu: &Partition, n: usize) -> Result<LaurentPoly1> {
    check_n(n)?;
    let cols = lambda.index_set(n)?;
    let rows = mu.index_set(n)?;
    let m: Vec<Vec<LaurentPoly1>> = rows
        .indices()
        .iter()
        .map(|&i| {
            cols.indices()
                .iter()
                .map(|&j| LaurentPoly1::q_pow(1, (i * j) as i64))
                .collect()
        })
        .collect();
    Ok(laplace(&m))
}

/// `⟨λ,μ⟩_N = s^{(1-N)(|λ|+|μ|)} P^N_(λ,μ) / P^N_(∅,∅)`.
pub fn hopf_sln_minor(lambda: &Partition, mu: &Partition, n: usize) -> Result<SlNResult> {
    let top = vandermonde_minor(lambda, mu, n)?;
    let empty = Partition::empty();
    let bottom = vandermonde_minor(&empty, &empty, n)?;
    let quotient = top.try_exact_div(&bottom)?.ok_or_else(|| {
        Error::InexactDivision(format!(
            "P^{n}_({lambda},{mu}) / P^{n}_(0,0) is not a Laurent polynomial"
        ))
    })?;
    let shift = (1 - n as i64) * (lambda.size() + mu.size()) as i64;
    let value = SFraction::from_poly(quotient.shift(shift));
    Ok(SlNResult::new(lambda, mu, n, value, SlNRoute::Minor))
}

/// `⟨λ,μ⟩_N` as the image of the two-variable invariant under `v = s^-N`.
/// Vanishes when either diagram has more than `N` rows.
pub fn hopf_sln_substitution(lambda: &Partition, mu: &Partition, n: usize) -> Result<SlNResult> {
    check_n(n)?;
    let value = hopf_invariant(lambda, mu).value.substitute_v(n as i64);
    Ok(SlNResult::new(lambda, mu, n, value, SlNRoute::Substitution))
}

/// Parameters `s^{N + 2λⱼ - 2j + 1}`, `1 ≤ j ≤ N`, of the linear factors of
/// `E^N_λ(t) = ∏ⱼ (1 + s^{N+2λⱼ-2j+1} t)`.
pub fn elambda_n_factored(lambda: &Partition, n: usize) -> Result<Vec<RingElem>> {
    Ok(elambda_n_exponents(lambda, n)?
        .into_iter()
        .map(|e| RingElem::from_vs(1, 0, e))
        .collect())
}

/// The exponents `N + 2λⱼ - 2j + 1` of [`elambda_n_factored`].
pub fn elambda_n_exponents(lambda: &Partition, n: usize) -> Result<Vec<i64>> {
    check_n(n)?;
    if n < lambda.len() {
        return Err(Error::Domain(format!(
            "N = {n} is smaller than the number of parts of {lambda}"
        )));
    }
    let n = n as i64;
    Ok((1..=n)
        .map(|j| n + 2 * lambda.part(j as usize) as i64 - 2 * j + 1)
        .collect())
}

/// Outcome of comparing `⟨λ,μ⟩₂` with `(q^{ab} - 1)/(q - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sl2Check {
    pub lambda: Partition,
    pub mu: Partition,
    pub holds: bool,
    /// Exponent `m` of `s` with `⟨λ,μ⟩₂ = s^m (q^{ab} - 1)/(q - 1)`; the
    /// power of `q` is `m/2`.
    pub s_exponent: Option<i64>,
}

/// For `λ = (b+j-1, j)` and `μ = (a+i-1, i)`, checks that `⟨λ,μ⟩₂` is
/// `(q^{ab} - 1)/(q - 1)` up to a single monomial.
pub fn sl2_quantum_check(a: usize, b: usize, i: usize, j: usize) -> Result<Sl2Check> {
    if a < 1 || b < 1 {
        return Err(Error::Domain(format!(
            "sl(2) shapes need a, b >= 1, got a = {a}, b = {b}"
        )));
    }
    let lambda = Partition::new(vec![b + j - 1, j])?;
    let mu = Partition::new(vec![a + i - 1, i])?;
    let value = hopf_sln_substitution(&lambda, &mu, 2)?.value;
    let s_exponent = value.to_laurent().and_then(|p| {
        // [ab]_q = 1 + q + … + q^{ab-1}
        let qint = LaurentPoly1::from_terms((0..(a * b) as i64).map(|k| (1, 2 * k)));
        let ratio = p.try_exact_div(&qint).ok()??;
        match ratio.as_monomial() {
            Some((e, c)) if *c == 1.into() => Some(e),
            _ => None,
        }
    });
    Ok(Sl2Check {
        lambda,
        mu,
        holds: s_exponent.is_some(),
        s_exponent,
    })
}
