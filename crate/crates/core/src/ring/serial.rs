//! Text and JSON forms of ring elements.
//!
//! Text grammar (whitespace-insensitive):
//!
//! ```text
//! frac  := poly | "(" poly ")" "/" ("[" k "]")+
//! poly  := "0" | term (("+" | "-") term)*
//! term  := ["-"] [coeff "*"] factor ("*" factor)*  |  ["-"] coeff
//! factor:= ("v" | "s" | "q") ["^" int]
//! ```
//!
//! `q` is read as `s^2`. Printing always emits the canonical
//! `c*v^a*s^b` (or `c*s^b`) form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::frac::Frac;
use super::laurent::{Exponent, Laurent};
use crate::error::{Error, Result};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_term<E: Exponent>(body: &str) -> Result<(BigInt, E)> {
    let mut coeff = BigInt::one();
    let (mut v, mut s) = (None::<i64>, 0i64);
    for (i, factor) in body.split('*').enumerate() {
        if factor.is_empty() {
            return Err(parse_err(format!("empty factor in term `{body}`")));
        }
        if i == 0 {
            if let Ok(c) = factor.parse::<BigInt>() {
                coeff = c;
                continue;
            }
        }
        let (var, exp) = match factor.split_once('^') {
            Some((var, e)) => {
                let e: i64 = e
                    .parse()
                    .map_err(|_| parse_err(format!("bad exponent in `{factor}`")))?;
                (var, e)
            }
            None => (factor, 1),
        };
        match var {
            "v" => *v.get_or_insert(0) += exp,
            "s" => s += exp,
            "q" => s += 2 * exp,
            _ => return Err(parse_err(format!("unknown variable `{var}`"))),
        }
    }
    let e = E::from_parts(v, s)
        .ok_or_else(|| parse_err(format!("variable v not allowed in `{body}`")))?;
    Ok((coeff, e))
}

impl<E: Exponent> FromStr for Laurent<E> {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(parse_err("empty polynomial"));
        }
        let bytes = t.as_bytes();
        let mut starts = vec![0];
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-')
                && bytes[i - 1] != b'^'
                && bytes[i - 1] != b'*'
            {
                starts.push(i);
            }
        }
        starts.push(bytes.len());
        let mut terms = Vec::new();
        for w in starts.windows(2) {
            let mut piece = &t[w[0]..w[1]];
            let mut negative = false;
            if let Some(rest) = piece.strip_prefix('+') {
                piece = rest;
            } else if let Some(rest) = piece.strip_prefix('-') {
                piece = rest;
                negative = true;
            }
            let (c, e) = parse_term::<E>(piece)?;
            terms.push((if negative { -c } else { c }, e));
        }
        Ok(Laurent::from_terms(terms))
    }
}

impl<E: Exponent> FromStr for Frac<E> {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let Some((top, bottom)) = t.rsplit_once('/') else {
            let inner = t
                .strip_prefix('(')
                .and_then(|x| x.strip_suffix(')'))
                .unwrap_or(&t);
            return Ok(Frac::from_poly(inner.parse()?));
        };
        let top = top
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(top);
        let mut den = Vec::new();
        let mut rest = bottom;
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('[')
                .and_then(|x| x.split_once(']'))
                .ok_or_else(|| parse_err(format!("bad denominator `{bottom}`")))?;
            let k: u32 = inner
                .0
                .parse()
                .map_err(|_| parse_err(format!("bad index `{}`", inner.0)))?;
            den.push(k);
            rest = inner.1;
        }
        if den.is_empty() {
            return Err(parse_err("empty denominator"));
        }
        Frac::unreduced(top.parse()?, den).map_err(|e| parse_err(e.to_string()))
    }
}

/// One term of a serialized polynomial. `v` is omitted for one-variable
/// values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<i64>,
    pub s: i64,
}

/// Serialized fraction: numerator terms in descending exponent order and
/// the quantum-factor indices of the denominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracJson {
    pub num: Vec<TermJson>,
    pub den: Vec<u32>,
}

impl<E: Exponent> From<&Frac<E>> for FracJson {
    fn from(f: &Frac<E>) -> Self {
        let num = f
            .num()
            .terms()
            .rev()
            .map(|(e, c)| TermJson {
                coeff: c.to_string(),
                v: e.v(),
                s: e.s(),
            })
            .collect();
        FracJson {
            num,
            den: f.den().to_vec(),
        }
    }
}

impl<E: Exponent> TryFrom<FracJson> for Frac<E> {
    type Error = Error;

    fn try_from(j: FracJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.num.len());
        for t in j.num {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| parse_err(format!("bad coefficient `{}`", t.coeff)))?;
            let e = E::from_parts(t.v, t.s).ok_or_else(|| parse_err("variable v not allowed"))?;
            terms.push((c, e));
        }
        Frac::unreduced(Laurent::from_terms(terms), j.den)
    }
}

impl<E: Exponent> Serialize for Frac<E> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        FracJson::from(self).serialize(ser)
    }
}

impl<'de, E: Exponent> Deserialize<'de> for Frac<E> {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let j = FracJson::deserialize(de)?;
        Frac::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use crate::ring::{LaurentPoly1, LaurentPoly2, RingElem, SFraction, VsExp};

    #[test]
    fn parses_canonical_form() {
        let p: LaurentPoly2 = "3*v^1*s^2 - 1*v^1*s^0 + 1*v^-1*s^0".parse().unwrap();
        assert_eq!(
            p,
            LaurentPoly2::from_terms([
                (3, VsExp::new(1, 2)),
                (-1, VsExp::new(1, 0)),
                (1, VsExp::new(-1, 0))
            ])
        );
        let f: RingElem = "(-1*v^1*s^0 + 1*v^-1*s^0)/[1]".parse().unwrap();
        assert_eq!(f.den(), &[1]);
        assert_eq!(f.to_string(), "(-1*v^1*s^0 + 1*v^-1*s^0)/[1]");
    }

    #[test]
    fn parses_loose_forms() {
        let p: LaurentPoly1 = "q^2 - 2*s + 7".parse().unwrap();
        assert_eq!(p, LaurentPoly1::from_terms([(1, 4), (-2, 1), (7, 0)]));
        let z: LaurentPoly2 = "0".parse().unwrap();
        assert!(z.is_zero());
        let f: RingElem = "v^-1 - v".parse().unwrap();
        assert!(f.den().is_empty());
    }

    #[test]
    fn rejects_malformed() {
        assert!("".parse::<LaurentPoly2>().is_err());
        assert!("x^2".parse::<LaurentPoly2>().is_err());
        assert!("v^2".parse::<LaurentPoly1>().is_err());
        assert!("(s)/[0]".parse::<RingElem>().is_err());
        assert!("(s)/2".parse::<RingElem>().is_err());
        assert!("s^a".parse::<LaurentPoly2>().is_err());
    }

    #[test]
    fn json_shape() {
        let f: SFraction = "(2*s^3 - 1*s^-1)/[2][1]".parse().unwrap();
        let j = serde_json::to_value(&f).unwrap();
        assert_eq!(
            j,
            serde_json::json!({"num": [{"coeff": "2", "s": 3}, {"coeff": "-1", "s": -1}], "den": [1, 2]})
        );
        let back: SFraction = serde_json::from_value(j).unwrap();
        assert_eq!(back, f);
    }
}
