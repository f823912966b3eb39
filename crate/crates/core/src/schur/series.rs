use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Scalar;

/// Power series `e₀ + e₁t + … + e_D t^D`, known only up to degree `D`.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Scalar> TruncatedSeries<R> {
    /// Series with the given coefficients; the degree is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "a series needs at least its constant term".into(),
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// The constant series `1` known to degree `degree`.
    pub fn one(degree: usize) -> Self {
        let mut coeffs = vec![R::zero(); degree + 1];
        coeffs[0] = R::one();
        TruncatedSeries { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `e_k`: zero for negative `k`, an error past the truncation degree.
    pub fn coeff(&self, k: i64) -> Result<R> {
        if k < 0 {
            return Ok(R::zero());
        }
        self.coeffs
            .get(k as usize)
            .cloned()
            .ok_or(Error::InsufficientDegree {
                needed: k as usize,
                have: self.degree(),
            })
    }

    /// Drops coefficients above `degree`.
    pub fn truncate(&self, degree: usize) -> Result<Self> {
        if degree > self.degree() {
            return Err(Error::InsufficientDegree {
                needed: degree,
                have: self.degree(),
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=degree].to_vec(),
        })
    }

    /// Cauchy product, truncated to the smaller degree.
    pub fn mul(&self, other: &Self) -> Self {
        let d = self.degree().min(other.degree());
        let coeffs = (0..=d)
            .map(|k| {
                (0..=k)
                    .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[k - i].is_zero())
                    .fold(R::zero(), |acc, i| {
                        acc + self.coeffs[i].clone() * other.coeffs[k - i].clone()
                    })
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Inverse of a series with constant term 1.
    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0] != R::one() {
            return Err(Error::Domain(
                "only series with constant term 1 are inverted".into(),
            ));
        }
        let mut inv: Vec<R> = Vec::with_capacity(self.coeffs.len());
        inv.push(R::one());
        for k in 1..=self.degree() {
            let acc = (1..=k)
                .filter(|&i| !self.coeffs[i].is_zero())
                .fold(R::zero(), |acc, i| {
                    acc + self.coeffs[i].clone() * inv[k - i].clone()
                });
            inv.push(-acc);
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// `t ↦ αt`: multiplies `e_k` by `α^k`.
    pub fn scale_t(&self, alpha: &R) -> Self {
        let mut power = R::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c.clone() * power.clone();
                power = power.clone() * alpha.clone();
                out
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Applies a ring map to every coefficient.
    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// True when the series equals 1 to its degree.
    pub fn is_one(&self) -> bool {
        self.coeffs[0] == R::one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

/// Expansion of `(1 + u t)^sign` to degree `degree`, for `sign = ±1`.
pub fn linear_factor<R: Scalar>(u: &R, sign: i32, degree: usize) -> Result<TruncatedSeries<R>> {
    let mut coeffs = vec![R::zero(); degree + 1];
    coeffs[0] = R::one();
    match sign {
        1 => {
            if degree >= 1 {
                coeffs[1] = u.clone();
            }
        }
        -1 => {
            let minus_u = -u.clone();
            for k in 1..=degree {
                coeffs[k] = coeffs[k - 1].clone() * minus_u.clone();
            }
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "sign must be +1 or -1, got {sign}"
            )))
        }
    }
    Ok(TruncatedSeries { coeffs })
}

impl<R: Scalar + fmt::Display> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coeffs[0])?;
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            if k == 1 {
                write!(f, " + ({c}) t")?;
            } else {
                write!(f, " + ({c}) t^{k}")?;
            }
        }
        write!(f, " + O(t^{})", self.degree() + 1)
    }
}

impl<R: Scalar> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}
