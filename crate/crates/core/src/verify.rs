//! Identity-verification suite over bounded families of diagrams.
//!
//! Checks run in parallel; results are collected in a fixed order, so the
//! report is identical across runs.

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{pieri_column, Partition};
use crate::hopf::{
    content_polynomial, curl_identity_check, eval_unknot, frobenius_ratio, hopf_cd_closed,
    hopf_invariant, series_e_lambda, series_e_lambda_by_rows, series_h_lambda,
};
use crate::ring::{LaurentPoly1, LaurentPoly2, RingElem, SFraction};
use crate::schur::schur_classical;
use crate::sln::{hopf_sln_minor, hopf_sln_substitution, sl2_quantum_check, vandermonde_minor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Largest diagram size `|λ|` in pair checks.
    pub max_size: usize,
    /// Largest `N` in the `sl(N)` checks.
    pub max_n: usize,
    /// Truncation degree for series identities.
    pub degree: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_size: 5,
            max_n: 4,
            degree: 10,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// Labels of the failing cases.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub bounds: Bounds,
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }
}

fn tally(name: &'static str, cases: Vec<(String, bool)>) -> CheckReport {
    let failures: Vec<String> = cases
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(l, _)| l.clone())
        .collect();
    CheckReport {
        name,
        passed: cases.len() - failures.len(),
        failed: failures.len(),
        failures,
    }
}

fn pairs(shapes: &[Partition]) -> Vec<(Partition, Partition)> {
    shapes
        .iter()
        .flat_map(|l| shapes.iter().map(move |m| (l.clone(), m.clone())))
        .collect()
}

fn symmetry(b: &Bounds) -> CheckReport {
    let shapes = Partition::all_up_to(b.max_size);
    let cases = pairs(&shapes)
        .into_par_iter()
        .filter(|(l, m)| l <= m)
        .map(|(l, m)| {
            let ok = hopf_invariant(&l, &m).value == hopf_invariant(&m, &l).value;
            (format!("({l}|{m})"), ok)
        })
        .collect();
    tally("symmetry <l,m> = <m,l>", cases)
}

fn closed_form(b: &Bounds) -> CheckReport {
    let top = b.max_size + 1;
    let cases = (0..=top)
        .flat_map(|i| (0..=top).map(move |j| (i, j)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(i, j)| {
            let ok = hopf_cd_closed(i, j)
                == hopf_invariant(&Partition::column(i), &Partition::row(j)).value;
            (format!("c_{i} d_{j}"), ok)
        })
        .collect();
    tally("closed form <c_i,d_j>", cases)
}

fn series_inverse(b: &Bounds) -> CheckReport {
    let cases = Partition::all_up_to(b.max_size + 1)
        .into_par_iter()
        .map(|l| {
            let e = series_e_lambda(&l, b.degree);
            let h = series_h_lambda(&l, b.degree).scale_t(&-RingElem::one());
            (format!("{l}"), e.mul(&h).is_one())
        })
        .collect();
    tally("E_l(t) H_l(-t) = 1", cases)
}

fn frobenius_vs_rows(b: &Bounds) -> CheckReport {
    let cases = Partition::all_up_to(b.max_size + 1)
        .into_par_iter()
        .map(|l| {
            let ok = series_e_lambda(&l, b.degree) == series_e_lambda_by_rows(&l, b.degree);
            (format!("{l}"), ok)
        })
        .collect();
    tally("Frobenius product = row product", cases)
}

fn content_ratio(b: &Bounds) -> CheckReport {
    let up = RingElem::from_vs(1, -1, 1);
    let down = RingElem::from_vs(1, -1, -1);
    let cases = Partition::all_up_to(b.max_size + 1)
        .into_par_iter()
        .map(|l| {
            let ratio = content_polynomial(&l, &up, b.degree).mul(
                &content_polynomial(&l, &down, b.degree)
                    .invert()
                    .expect("constant term 1"),
            );
            (format!("{l}"), ratio == frobenius_ratio(&l, b.degree))
        })
        .collect();
    tally("content polynomial ratio", cases)
}

fn sln_routes(b: &Bounds) -> CheckReport {
    let shapes = Partition::all_up_to(b.max_size);
    let cases = pairs(&shapes)
        .into_iter()
        .flat_map(|(l, m)| (1..=b.max_n).map(move |n| (l.clone(), m.clone(), n)))
        .filter(|(l, m, n)| l.len() <= *n && m.len() <= *n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(l, m, n)| {
            let ok = match (hopf_sln_substitution(&l, &m, n), hopf_sln_minor(&l, &m, n)) {
                (Ok(a), Ok(b)) => a.value == b.value,
                _ => false,
            };
            (format!("({l}|{m}) N={n}"), ok)
        })
        .collect();
    tally("sl(N) substitution = minor", cases)
}

fn vanishing(b: &Bounds) -> CheckReport {
    let shapes = Partition::all_up_to(b.max_size);
    let cases = pairs(&shapes)
        .into_iter()
        .flat_map(|(l, m)| (1..=b.max_n.min(3)).map(move |n| (l.clone(), m.clone(), n)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(l, m, n)| {
            let zero = hopf_sln_substitution(&l, &m, n)
                .map(|r| r.value.is_zero())
                .unwrap_or(false);
            (
                format!("({l}|{m}) N={n}"),
                zero == (l.len() > n || m.len() > n),
            )
        })
        .collect();
    tally("vanishing iff more than N rows", cases)
}

fn minor_symmetry(b: &Bounds) -> CheckReport {
    let shapes = Partition::all_up_to(b.max_size.min(4));
    let cases = pairs(&shapes)
        .into_iter()
        .flat_map(|(l, m)| (1..=b.max_n).map(move |n| (l.clone(), m.clone(), n)))
        .filter(|(l, m, n)| l.len() <= *n && m.len() <= *n)
        .map(|(l, m, n)| {
            let ok = vandermonde_minor(&l, &m, n).ok() == vandermonde_minor(&m, &l, n).ok();
            (format!("({l}|{m}) N={n}"), ok)
        })
        .collect();
    tally("P(l,m) = P(m,l)", cases)
}

fn bialternant(b: &Bounds) -> CheckReport {
    let shapes = Partition::all_up_to(b.max_size.min(4));
    let cases = pairs(&shapes)
        .into_iter()
        .flat_map(|(l, m)| (1..=b.max_n).map(move |n| (l.clone(), m.clone(), n)))
        .filter(|(l, m, n)| l.len() <= *n && m.len() <= *n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(l, m, n)| {
            let xs: Vec<LaurentPoly1> = m
                .index_set(n)
                .expect("filtered")
                .indices()
                .iter()
                .map(|&i| LaurentPoly1::q_pow(1, i as i64))
                .collect();
            let ok = match (
                schur_classical(&l, &xs),
                vandermonde_minor(&l, &m, n),
                vandermonde_minor(&Partition::empty(), &m, n),
            ) {
                (Ok(s), Ok(top), Ok(bottom)) => {
                    top.try_exact_div(&bottom).ok().flatten() == Some(s)
                }
                _ => false,
            };
            (format!("({l}|{m}) N={n}"), ok)
        })
        .collect();
    tally("s_l(prod over I_m) = P(l,m)/P(0,m)", cases)
}

fn sl2(_: &Bounds) -> CheckReport {
    let cases = (1..=4)
        .flat_map(|a| {
            (1..=4).flat_map(move |b| (0..=2).flat_map(move |i| (0..=2).map(move |j| (a, b, i, j))))
        })
        .map(|(a, b, i, j)| {
            let ok = sl2_quantum_check(a, b, i, j)
                .map(|c| c.holds)
                .unwrap_or(false);
            (format!("a={a} b={b} i={i} j={j}"), ok)
        })
        .collect();
    tally("sl(2) value is [ab] up to a monomial", cases)
}

fn curl(_: &Bounds) -> CheckReport {
    let cases = (1..=5)
        .flat_map(|i| (1..=5).map(move |j| (i, j)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(i, j)| {
            (
                format!("({i},{j})"),
                curl_identity_check(i, j).unwrap_or(false),
            )
        })
        .collect();
    tally("curl identity", cases)
}

fn q_factor(k: i64) -> RingElem {
    RingElem::from_poly(LaurentPoly2::quantum_factor(k).expect("positive"))
}

/// One-step ratios of unknot values along columns, rows and hooks.
fn recursions(_: &Bounds) -> CheckReport {
    const TOP: i64 = 8;
    let mut cases = Vec::new();
    let step = |top: LaurentPoly2, k: i64| RingElem::new(top, vec![k as u32]).expect("positive");
    for i in 0..TOP {
        let col = step(
            &LaurentPoly2::vs(1, -1, -i) - &LaurentPoly2::vs(1, 1, i),
            i + 1,
        );
        let ok = eval_unknot(&Partition::column(i as usize + 1))
            == &col * &eval_unknot(&Partition::column(i as usize));
        cases.push((format!("c_{}", i + 1), ok));
        let row = step(
            &LaurentPoly2::vs(1, -1, i) - &LaurentPoly2::vs(1, 1, -i),
            i + 1,
        );
        let ok = eval_unknot(&Partition::row(i as usize + 1))
            == &row * &eval_unknot(&Partition::row(i as usize));
        cases.push((format!("d_{}", i + 1), ok));
    }
    let v_diff = RingElem::from_poly(&LaurentPoly2::vs(1, -1, 0) - &LaurentPoly2::v());
    for i in 1..=TOP {
        for j in 1..=TOP {
            let hook =
                crate::combinatorics::hook_partition(i as usize, j as usize).expect("positive");
            let lhs = &(&eval_unknot(&hook) * &v_diff) * &q_factor(i + j - 1);
            let rhs = &(&q_factor(i) * &q_factor(j))
                * &(&eval_unknot(&Partition::column(i as usize))
                    * &eval_unknot(&Partition::row(j as usize)));
            cases.push((format!("mu_{i},{j}"), lhs == rhs));
        }
    }
    tally("unknot recursions", cases)
}

/// `⟨λ⟩ = q^{n(λ)} ∏ (vs - v^-1 s q^cn(x)) / (1 - q^hl(x))`, with
/// `1 - q^h = -s^h (s^h - s^-h)`.
fn unknot_product_form(b: &Bounds) -> CheckReport {
    let cases = Partition::all_up_to(b.max_size + 3)
        .into_par_iter()
        .map(|l| {
            let mut num = LaurentPoly2::vs(1, 0, l.twice_n());
            let mut den = Vec::new();
            for cell in l.cells() {
                let h = l.hook_length(cell) as i64;
                let f = &LaurentPoly2::vs(1, 1, 1)
                    - &LaurentPoly2::vs(1, -1, 1 + 2 * Partition::content(cell));
                num = &num * &f.shift(crate::ring::VsExp::new(0, -h)).scale(&(-1).into());
                den.push(h as u32);
            }
            let alt = RingElem::new(num, den).expect("positive");
            (format!("{l}"), alt == eval_unknot(&l))
        })
        .collect();
    tally("unknot product forms agree", cases)
}

/// `Σ_{ν ∈ c_i c_j} ⟨λ,ν⟩ ⟨λ⟩ = ⟨λ,c_i⟩ ⟨λ,c_j⟩`.
fn multiplicativity(b: &Bounds) -> CheckReport {
    let cases = Partition::all_up_to(b.max_size.min(4))
        .into_iter()
        .flat_map(|l| {
            (1..=3)
                .flat_map(move |i| (1..=3).map(move |j| (i, j)))
                .map(move |(i, j)| (l.clone(), i, j))
        })
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(l, i, j)| {
            let unknot = eval_unknot(&l);
            let lhs = pieri_column(&Partition::column(i), j)
                .iter()
                .map(|nu| hopf_invariant(&l, nu).value)
                .fold(RingElem::zero(), |acc, x| &acc + &x);
            let lhs = &lhs * &unknot;
            let rhs = &hopf_invariant(&l, &Partition::column(i)).value
                * &hopf_invariant(&l, &Partition::column(j)).value;
            (format!("{l} c_{i} c_{j}"), lhs == rhs)
        })
        .collect();
    tally("t_l is multiplicative on c_i c_j", cases)
}

/// Specialized series are the polynomials `∏ⱼ (1 + s^{N+2λⱼ-2j+1} t)`.
fn specialized_series(b: &Bounds) -> CheckReport {
    let cases = Partition::all_up_to(b.max_size)
        .into_iter()
        .flat_map(|l| (1..=b.max_n).map(move |n| (l.clone(), n)))
        .filter(|(l, n)| l.len() <= *n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(l, n)| {
            let degree = n + 2;
            let sub = series_e_lambda(&l, degree).map(|c| c.substitute_v(n as i64));
            let factored = crate::sln::elambda_n_factored(&l, n).expect("filtered");
            let xs: Vec<SFraction> = factored.iter().map(|x| x.substitute_v(0)).collect();
            let prod = crate::schur::elementary_series(&xs, degree);
            (format!("{l} N={n}"), sub == prod)
        })
        .collect();
    tally("E^N_l(t) factors linearly", cases)
}

type Check = fn(&Bounds) -> CheckReport;

const CHECKS: [Check; 15] = [
    symmetry,
    closed_form,
    series_inverse,
    frobenius_vs_rows,
    content_ratio,
    sln_routes,
    vanishing,
    minor_symmetry,
    bialternant,
    sl2,
    curl,
    recursions,
    unknot_product_form,
    multiplicativity,
    specialized_series,
];

/// Runs every check at the given bounds.
pub fn run(bounds: Bounds) -> Report {
    let checks = CHECKS.par_iter().map(|check| check(&bounds)).collect();
    Report { bounds, checks }
}
