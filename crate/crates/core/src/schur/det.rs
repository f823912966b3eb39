//! Determinants over exact rings.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ring::Scalar;

/// Orders up to this size use cofactor expansion; larger ones use
/// fraction-free elimination.
pub const EXPANSION_LIMIT: usize = 12;

/// Determinant of a square matrix given as rows.
pub fn determinant<R: Scalar>(m: &[Vec<R>]) -> Result<R> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument(
            "determinant of a non-square matrix".into(),
        ));
    }
    if n <= EXPANSION_LIMIT {
        Ok(laplace(m))
    } else {
        bareiss(m)
    }
}

/// Expansion along rows with the minors memoized by their column set.
///
/// The minor on rows `k..n` is determined by its column mask, since `k`
/// is `n` minus the mask's population count.
pub fn laplace<R: Scalar>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut memo: HashMap<u32, R> = HashMap::new();
    minor(m, (1u32 << n) - 1, &mut memo)
}

fn minor<R: Scalar>(m: &[Vec<R>], cols: u32, memo: &mut HashMap<u32, R>) -> R {
    let n = m.len();
    let k = n - cols.count_ones() as usize;
    if k == n {
        return R::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = R::zero();
    let mut sign_positive = true;
    for j in 0..n {
        if cols & (1 << j) == 0 {
            continue;
        }
        let entry = &m[k][j];
        if !entry.is_zero() {
            let sub = minor(m, cols & !(1 << j), memo);
            if !sub.is_zero() {
                let term = entry.clone() * sub;
                acc = if sign_positive {
                    acc + term
                } else {
                    acc - term
                };
            }
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Fraction-free Gaussian elimination. Every division is exact by
/// Sylvester's identity; a failed division is reported, never rounded.
pub fn bareiss<R: Scalar>(m: &[Vec<R>]) -> Result<R> {
    let n = m.len();
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(R::zero());
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num.try_div(&prev).ok_or_else(|| {
                    Error::InexactDivision("Bareiss step did not divide exactly".into())
                })?;
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}
