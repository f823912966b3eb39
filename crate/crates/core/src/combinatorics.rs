//! Young diagrams and the combinatorial data the formulas read off them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition `λ₁ ≥ λ₂ ≥ … ≥ λ_l ≥ 1`; the empty sequence is the empty
/// diagram.
///
/// Ordered lexicographically on parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell in row `row`, column `col`, both counted from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Parts must be weakly
    /// decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::Domain(format!("zero part inside {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Single column `1^i`.
    pub fn column(i: usize) -> Self {
        Partition { parts: vec![1; i] }
    }

    /// Single row `(j)`.
    pub fn row(j: usize) -> Self {
        Partition {
            parts: if j == 0 { vec![] } else { vec![j] },
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λᵢ` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Number of parts `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell { row: i + 1, col: j }))
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && self.part(c.row) >= c.col
    }

    /// `cn(x) = col - row`.
    pub fn content(c: Cell) -> i64 {
        c.col as i64 - c.row as i64
    }

    /// Cells strictly right of `c` in its row.
    pub fn arm(&self, c: Cell) -> usize {
        self.part(c.row) - c.col
    }

    /// Cells strictly below `c` in its column.
    pub fn leg(&self, c: Cell) -> usize {
        self.parts
            .iter()
            .skip(c.row)
            .take_while(|&&p| p >= c.col)
            .count()
    }

    /// `hl(x) = arm + leg + 1`.
    pub fn hook_length(&self, c: Cell) -> usize {
        self.arm(c) + self.leg(c) + 1
    }

    /// Number of diagonal cells `d(λ)`.
    pub fn diagonal_length(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    /// Frobenius coordinates `(a₁,…,a_d | b₁,…,b_d)` with `aᵢ = λᵢ - i` and
    /// `bᵢ = λᵗᵢ - i`.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let d = self.diagonal_length();
        let conj = self.conjugate();
        let arms = (1..=d).map(|i| self.part(i) - i).collect();
        let legs = (1..=d).map(|i| conj.part(i) - i).collect();
        (arms, legs)
    }

    /// Rebuilds a diagram from Frobenius coordinates.
    pub fn from_frobenius(arms: &[usize], legs: &[usize]) -> Result<Partition> {
        if arms.len() != legs.len() {
            return Err(Error::Domain("arms and legs differ in length".into()));
        }
        let strictly_decreasing = |xs: &[usize]| xs.windows(2).all(|w| w[0] > w[1]);
        if !strictly_decreasing(arms) || !strictly_decreasing(legs) {
            return Err(Error::Domain(
                "Frobenius coordinates must be strictly decreasing".into(),
            ));
        }
        let d = arms.len();
        let rows = d + legs.first().copied().unwrap_or(0);
        let mut parts = vec![0usize; rows];
        for (i, &a) in arms.iter().enumerate() {
            // cells left of the diagonal, the diagonal cell, the arm
            parts[i] = i + 1 + a;
        }
        for (r, part) in parts.iter_mut().enumerate().skip(d) {
            // below the square, row r (0-based) meets every leg reaching it
            *part = legs.iter().enumerate().filter(|(j, &b)| j + b >= r).count();
        }
        Partition::new(parts)
    }

    /// `n_λ`: twice the sum of the contents.
    pub fn twice_content_sum(&self) -> i64 {
        2 * self.cells().map(Partition::content).sum::<i64>()
    }

    /// `2n(λ) = Σ_x (hl(x) - 1 - cn(x))`, where `n(λ) = Σᵢ (i - 1) λᵢ`.
    pub fn twice_n(&self) -> i64 {
        self.cells()
            .map(|c| self.hook_length(c) as i64 - 1 - Partition::content(c))
            .sum()
    }

    /// `{λᵢ + N - i : 1 ≤ i ≤ N}`.
    pub fn index_set(&self, n: usize) -> Result<IndexSet> {
        if n < self.len() {
            return Err(Error::Domain(format!(
                "N = {n} is smaller than the number of parts of {self}"
            )));
        }
        Ok(IndexSet {
            indices: (1..=n).map(|i| self.part(i) + n - i).collect(),
        })
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(cap)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `n` cells, by size then decreasing
    /// lexicographic order.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }
}

/// The hook `μ_{a,b}`: `a` cells in the first column, `b` in the first row.
pub fn hook_partition(a: usize, b: usize) -> Result<Partition> {
    if a < 1 || b < 1 {
        return Err(Error::Domain(format!("hook μ_({a},{b}) needs a, b >= 1")));
    }
    let mut parts = vec![b];
    parts.extend(std::iter::repeat_n(1, a - 1));
    Ok(Partition { parts })
}

fn sort_desc(mut v: Vec<Partition>) -> Vec<Partition> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Partitions obtained by adding a vertical strip of `i` cells to `λ`
/// (no two new cells in one row), sorted in decreasing order.
pub fn pieri_column(lambda: &Partition, i: usize) -> Vec<Partition> {
    // Each of the first l(λ) + i rows grows by 0 or 1.
    fn go(
        lambda: &Partition,
        row: usize,
        rows: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > rows {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip keeps the diagram valid"));
            }
            return;
        }
        if rows - row + 1 < left {
            return;
        }
        let base = lambda.part(row);
        for add in [1usize, 0] {
            if add > left {
                continue;
            }
            let new = base + add;
            if row > 1 && cur[row - 2] < new {
                continue;
            }
            cur.push(new);
            go(lambda, row + 1, rows, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 1, lambda.len() + i, i, &mut Vec::new(), &mut out);
    sort_desc(out)
}

/// Partitions obtained by adding a horizontal strip of `j` cells to `λ`
/// (no two new cells in one column), sorted in decreasing order.
pub fn pieri_row(lambda: &Partition, j: usize) -> Vec<Partition> {
    // Interlacing: λᵢ ≤ νᵢ ≤ λᵢ₋₁, with ν₁ unbounded and one extra row.
    fn go(
        lambda: &Partition,
        row: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > lambda.len() + 1 {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip keeps the diagram valid"));
            }
            return;
        }
        let base = lambda.part(row);
        let cap = if row == 1 {
            base + left
        } else {
            lambda.part(row - 1).min(base + left)
        };
        for new in (base..=cap).rev() {
            cur.push(new);
            go(lambda, row + 1, left - (new - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 1, j, &mut Vec::new(), &mut out);
    sort_desc(out)
}

/// `N` distinct non-negative integers `{λᵢ + N - i}`, stored decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    indices: Vec<usize>,
}

impl IndexSet {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Comma-separated parts, `3,1`; `0` or the empty string is `∅`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid part `{p}` in partition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in partition `{s}`")));
        }
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn frobenius_coordinates() {
        assert_eq!(p("3,1").frobenius(), (vec![2], vec![1]));
        assert_eq!(p("2,2").frobenius(), (vec![1, 0], vec![1, 0]));
        assert_eq!(Partition::empty().frobenius(), (vec![], vec![]));
        assert_eq!(p("3,1").diagonal_length(), 1);
        assert_eq!(p("2,2").diagonal_length(), 2);
    }

    #[test]
    fn index_sets() {
        assert_eq!(p("3,1").index_set(3).unwrap().indices(), &[5, 2, 0]);
        assert_eq!(p("2,2").index_set(3).unwrap().indices(), &[4, 3, 0]);
        assert_eq!(
            Partition::empty().index_set(4).unwrap().indices(),
            &[3, 2, 1, 0]
        );
        assert!(p("1,1,1").index_set(2).is_err());
    }

    #[test]
    fn hooks() {
        assert_eq!(hook_partition(2, 3).unwrap(), p("3,1"));
        assert_eq!(hook_partition(1, 1).unwrap(), p("1"));
        assert_eq!(hook_partition(3, 1).unwrap(), p("1,1,1"));
        assert!(hook_partition(0, 2).is_err());
        assert!(hook_partition(2, 0).is_err());
    }

    #[test]
    fn hook_lengths_of_three_one() {
        let l = p("3,1");
        let hooks: Vec<usize> = l.cells().map(|c| l.hook_length(c)).collect();
        assert_eq!(hooks, vec![4, 2, 1, 1]);
        let contents: Vec<i64> = l.cells().map(Partition::content).collect();
        assert_eq!(contents, vec![0, 1, 2, -1]);
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_column(&Partition::empty(), 3), vec![p("1,1,1")]);
        assert_eq!(
            pieri_column(&p("2,1"), 2),
            vec![p("3,2"), p("3,1,1"), p("2,2,1"), p("2,1,1,1")]
        );
        assert_eq!(pieri_row(&p("1,1"), 1), vec![p("2,1"), p("1,1,1")]);
        assert_eq!(pieri_row(&Partition::empty(), 2), vec![p("2")]);
        assert_eq!(pieri_row(&p("1"), 1), vec![p("2"), p("1,1")]);
        assert_eq!(pieri_row(&p("3,1"), 0), vec![p("3,1")]);
        assert_eq!(pieri_column(&p("3,1"), 0), vec![p("3,1")]);
    }

    #[test]
    fn column_times_row_is_two_hooks() {
        for i in 1..=5 {
            for j in 1..=5 {
                let got = pieri_row(&Partition::column(i), j);
                let mut want = vec![
                    hook_partition(i, j + 1).unwrap(),
                    hook_partition(i + 1, j).unwrap(),
                ];
                want.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(got, want, "c_{i} d_{j}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p(" 3, 1 ").to_string(), "3,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("3,0,1".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }
}
