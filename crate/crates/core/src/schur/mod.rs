//! Schur functions of truncated formal power series (Jacobi-Trudy) and of
//! explicit variables (bialternant quotient).

mod det;
mod series;

pub use det::{bareiss, determinant, laplace, EXPANSION_LIMIT};
pub use series::{linear_factor, TruncatedSeries};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::ring::Scalar;

/// Highest coefficient index read by the Jacobi-Trudy determinant of `μ`:
/// `μᵗ₁ + μ₁ - 1`, or 0 for the empty diagram.
pub fn required_degree(mu: &Partition) -> usize {
    if mu.is_empty() {
        0
    } else {
        mu.len() + mu.part(1) - 1
    }
}

/// `s_μ(E(t))`: the `r × r` determinant with entries `e_{μᵗᵢ + j - i}`,
/// where `r = μ₁` is the number of parts of `μᵗ`.
pub fn schur_of_series<R: Scalar>(mu: &Partition, e: &TruncatedSeries<R>) -> Result<R> {
    let needed = required_degree(mu);
    if e.degree() < needed {
        return Err(Error::InsufficientDegree {
            needed,
            have: e.degree(),
        });
    }
    let conj = mu.conjugate();
    let r = conj.len();
    let m = (1..=r)
        .map(|i| {
            (1..=r)
                .map(|j| e.coeff(conj.part(i) as i64 + j as i64 - i as i64))
                .collect::<Result<Vec<R>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    determinant(&m)
}

/// Alternant `det(x_i^{k_j})` with the exponents `k_j` taken in the given
/// order.
pub fn alternant<R: Scalar>(xs: &[R], exponents: &[usize]) -> Result<R> {
    let m: Vec<Vec<R>> = xs
        .iter()
        .map(|x| exponents.iter().map(|&k| pow(x, k)).collect())
        .collect();
    determinant(&m)
}

fn pow<R: Scalar>(x: &R, k: usize) -> R {
    (0..k).fold(R::one(), |acc, _| acc * x.clone())
}

/// Classical `s_λ(x₁,…,x_N) = P_λ / P_∅` with `P_λ` the alternant on the
/// columns `I_λ`.
pub fn schur_classical<R: Scalar>(lambda: &Partition, xs: &[R]) -> Result<R> {
    let n = xs.len();
    let top = alternant(xs, lambda.index_set(n)?.indices())?;
    let bottom = alternant(xs, Partition::empty().index_set(n)?.indices())?;
    if bottom.is_zero() {
        return Err(Error::Degenerate(
            "repeated variables make the Vandermonde determinant vanish".into(),
        ));
    }
    top.try_div(&bottom).ok_or_else(|| {
        Error::InexactDivision(format!("bialternant for {lambda} is not a ring element"))
    })
}

/// `∏ (1 + x_i t)` to the given degree.
pub fn elementary_series<R: Scalar>(xs: &[R], degree: usize) -> TruncatedSeries<R> {
    xs.iter().fold(TruncatedSeries::one(degree), |acc, x| {
        acc.mul(&linear_factor(x, 1, degree).expect("sign is valid"))
    })
}
