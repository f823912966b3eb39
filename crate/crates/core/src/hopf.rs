//! Unknot evaluations, framing factors, the series `E_λ(t)` and `H_λ(t)`,
//! and the two-variable Hopf link invariant `⟨λ,μ⟩`.

use serde::Serialize;

use crate::combinatorics::{hook_partition, Partition};
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly2, RingElem};
use crate::schur::{linear_factor, required_degree, schur_of_series, TruncatedSeries};

pub type Series = TruncatedSeries<RingElem>;

/// How a [`HopfResult`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Route {
    /// `s_μ(E_λ(t)) ⟨λ⟩`.
    SchurOfE,
    /// `s_λ(E_μ(t)) ⟨μ⟩`, the same invariant with the roles exchanged.
    Symmetrized,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfResult {
    pub lambda: Partition,
    pub mu: Partition,
    pub value: RingElem,
    pub route: Route,
}

/// `v^a s^b`.
fn mono(a: i64, b: i64) -> RingElem {
    RingElem::from_vs(1, a, b)
}

/// `v^-1 s^c - v s^-c`.
fn content_factor(c: i64) -> LaurentPoly2 {
    &LaurentPoly2::vs(1, -1, c) - &LaurentPoly2::vs(1, 1, -c)
}

/// `δ = (v^-1 - v)/(s - s^-1)`.
pub fn delta() -> RingElem {
    RingElem::new(content_factor(0), vec![1]).expect("index is positive")
}

/// `⟨λ⟩ = ∏_{x∈λ} (v^-1 s^cn(x) - v s^-cn(x)) / (s^hl(x) - s^-hl(x))`.
pub fn eval_unknot(lambda: &Partition) -> RingElem {
    let mut num = LaurentPoly2::one();
    let mut den = Vec::with_capacity(lambda.size());
    for cell in lambda.cells() {
        num = &num * &content_factor(Partition::content(cell));
        den.push(lambda.hook_length(cell) as u32);
    }
    RingElem::new(num, den).expect("hook lengths are positive")
}

/// Curl eigenvalue `f(λ) = v^-|λ| s^n_λ`.
pub fn framing_factor(lambda: &Partition) -> RingElem {
    mono(-(lambda.size() as i64), lambda.twice_content_sum())
}

/// `E_∅(t) = Σ ⟨c_r⟩ t^r`, from
/// `⟨c_{r+1}⟩ = (v^-1 s^-r - v s^r)/(s^{r+1} - s^{-r-1}) ⟨c_r⟩`.
pub fn series_e_empty(degree: usize) -> Series {
    let mut coeffs = Vec::with_capacity(degree + 1);
    coeffs.push(RingElem::one());
    for r in 0..degree as i64 {
        let step =
            RingElem::new(content_factor(-r), vec![(r + 1) as u32]).expect("index is positive");
        let next = coeffs.last().expect("nonempty") * &step;
        coeffs.push(next);
    }
    Series::new(coeffs).expect("nonempty")
}

/// `(1 + v^-1 s^top t) / (1 + v^-1 s^bottom t)` to the given degree.
fn ratio_factor(top: i64, bottom: i64, degree: usize) -> Series {
    linear_factor(&mono(-1, top), 1, degree)
        .expect("sign is valid")
        .mul(&linear_factor(&mono(-1, bottom), -1, degree).expect("sign is valid"))
}

/// `∏_{i ≤ d(λ)} (1 + v^-1 s^{2aᵢ+1} t)/(1 + v^-1 s^{-2bᵢ-1} t)`, which is
/// `E_λ(t)/E_∅(t)`.
pub fn frobenius_ratio(lambda: &Partition, degree: usize) -> Series {
    let (arms, legs) = lambda.frobenius();
    arms.iter()
        .zip(&legs)
        .fold(Series::one(degree), |acc, (&a, &b)| {
            acc.mul(&ratio_factor(2 * a as i64 + 1, -2 * b as i64 - 1, degree))
        })
}

/// `E_λ(t) = Σ ⟨λ, c_i⟩/⟨λ⟩ t^i`, as the Frobenius-coordinate product
/// times `E_∅(t)`.
pub fn series_e_lambda(lambda: &Partition, degree: usize) -> Series {
    let base = series_e_empty(degree);
    if lambda.is_empty() {
        return base;
    }
    frobenius_ratio(lambda, degree).mul(&base)
}

/// `E_λ(t)` from the row-indexed product
/// `∏_{j ≤ l(λ)} (1 + v^-1 s^{2λⱼ-2j+1} t)/(1 + v^-1 s^{-2j+1} t) · E_∅(t)`,
/// without the cancellations the Frobenius form makes.
pub fn series_e_lambda_by_rows(lambda: &Partition, degree: usize) -> Series {
    let ratio = lambda
        .parts()
        .iter()
        .enumerate()
        .fold(Series::one(degree), |acc, (idx, &part)| {
            let j = idx as i64 + 1;
            acc.mul(&ratio_factor(
                2 * part as i64 - 2 * j + 1,
                -2 * j + 1,
                degree,
            ))
        });
    ratio.mul(&series_e_empty(degree))
}

/// `H_λ(t)`, the inverse of `E_λ(-t)`.
pub fn series_h_lambda(lambda: &Partition, degree: usize) -> Series {
    series_e_lambda(lambda, degree)
        .scale_t(&-RingElem::one())
        .invert()
        .expect("E_λ has constant term 1")
}

/// `C_λ(ut) = ∏_{x∈λ} (1 + q^cn(x) u t)` with `q = s²`.
pub fn content_polynomial(lambda: &Partition, u: &RingElem, degree: usize) -> Series {
    lambda.cells().fold(Series::one(degree), |acc, cell| {
        let x = &mono(0, 2 * Partition::content(cell)) * u;
        acc.mul(&linear_factor(&x, 1, degree).expect("sign is valid"))
    })
}

/// `⟨λ,μ⟩ = s_μ(E_λ(t)) ⟨λ⟩`, with `E_λ` expanded exactly as far as the
/// Jacobi-Trudy determinant of `μ` reads.
pub fn hopf_invariant(lambda: &Partition, mu: &Partition) -> HopfResult {
    let value = schur_side(lambda, mu);
    HopfResult {
        lambda: lambda.clone(),
        mu: mu.clone(),
        value,
        route: Route::SchurOfE,
    }
}

/// `⟨λ,μ⟩` computed as `s_λ(E_μ(t)) ⟨μ⟩`.
pub fn hopf_invariant_swapped(lambda: &Partition, mu: &Partition) -> HopfResult {
    let value = schur_side(mu, lambda);
    HopfResult {
        lambda: lambda.clone(),
        mu: mu.clone(),
        value,
        route: Route::Symmetrized,
    }
}

/// [`hopf_invariant`] with `E_λ` expanded to an explicit degree; fails
/// rather than truncating when the degree is too small for `μ`.
pub fn hopf_invariant_to_degree(
    lambda: &Partition,
    mu: &Partition,
    degree: usize,
) -> Result<HopfResult> {
    let e = series_e_lambda(lambda, degree);
    let value = &schur_of_series(mu, &e)? * &eval_unknot(lambda);
    Ok(HopfResult {
        lambda: lambda.clone(),
        mu: mu.clone(),
        value,
        route: Route::SchurOfE,
    })
}

fn schur_side(series_side: &Partition, schur: &Partition) -> RingElem {
    let e = series_e_lambda(series_side, required_degree(schur));
    let s = schur_of_series(schur, &e).expect("series expanded to the required degree");
    &s * &eval_unknot(series_side)
}

/// Closed form
/// `⟨c_i, d_j⟩ = ⟨c_i⟩⟨d_j⟩ (v^-1(s^{2j} - s^{2(j-i)} + s^{-2i}) - v)/(v^-1 - v)`.
pub fn hopf_cd_closed(i: usize, j: usize) -> RingElem {
    let (i, j) = (i as i64, j as i64);
    let bracket = LaurentPoly2::from_terms([
        (1, crate::ring::VsExp::new(-1, 2 * j)),
        (-1, crate::ring::VsExp::new(-1, 2 * (j - i))),
        (1, crate::ring::VsExp::new(-1, -2 * i)),
        (-1, crate::ring::VsExp::new(1, 0)),
    ]);
    let ci = eval_unknot(&Partition::column(i as usize));
    let dj = eval_unknot(&Partition::row(j as usize));
    let prod = &ci * &dj;
    let top = prod.num() * &bracket;
    // ⟨c_i⟩⟨d_j⟩ carries a factor v^-1 - v unless i = j = 0, where the
    // bracket itself is v^-1 - v
    let q = top
        .try_exact_div(&content_factor(0))
        .expect("divisor is nonzero")
        .expect("v^-1 - v divides the closed form");
    RingElem::new(q, prod.den().to_vec()).expect("indices are positive")
}

/// Compares the two evaluations of the framed 2-parallel `R`:
/// `f(c_i) f(d_j) ⟨c_i,d_j⟩` against
/// `f(μ_{i,j+1})⟨μ_{i,j+1}⟩ + f(μ_{i+1,j})⟨μ_{i+1,j}⟩`.
pub fn curl_identity_check(i: usize, j: usize) -> Result<bool> {
    if i < 1 || j < 1 {
        return Err(Error::Domain(format!(
            "curl identity needs i, j >= 1, got ({i}, {j})"
        )));
    }
    let (ci, dj) = (Partition::column(i), Partition::row(j));
    let lhs = &(&framing_factor(&ci) * &framing_factor(&dj)) * &hopf_invariant(&ci, &dj).value;
    let rhs = [hook_partition(i, j + 1)?, hook_partition(i + 1, j)?]
        .iter()
        .map(|h| &framing_factor(h) * &eval_unknot(h))
        .fold(RingElem::zero(), |acc, x| &acc + &x);
    Ok(lhs == rhs)
}
