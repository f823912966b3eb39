use std::collections::BTreeSet;

use hopf_core::combinatorics::{hook_partition, pieri_column, pieri_row, Partition};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Diagram from a set of (row, col) cells, or `None` if the set is not a
/// Young diagram.
fn from_cells(cells: &BTreeSet<(usize, usize)>) -> Option<Partition> {
    let rows = cells.iter().map(|&(r, _)| r).max().unwrap_or(0);
    let mut parts = vec![0; rows];
    for &(r, c) in cells {
        parts[r - 1] = parts[r - 1].max(c);
    }
    let count: usize = parts.iter().sum();
    if count != cells.len() || parts.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Partition::new(parts).ok()
}

/// Every way of adding `k` cells to `lambda`, one per column (horizontal
/// strip) or one per row (vertical strip), found by trying all subsets of
/// a bounding box.
fn strips_by_subsets(lambda: &Partition, k: usize, vertical: bool) -> Vec<Partition> {
    let base: BTreeSet<(usize, usize)> = lambda.cells().map(|c| (c.row, c.col)).collect();
    let free: Vec<(usize, usize)> = (1..=lambda.len() + k)
        .flat_map(|r| (1..=lambda.part(1) + k).map(move |c| (r, c)))
        .filter(|cell| !base.contains(cell))
        .collect();
    let mut found = BTreeSet::new();
    for mask in 0u64..(1 << free.len()) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let added: Vec<_> = (0..free.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| free[i])
            .collect();
        let lines: BTreeSet<usize> = added
            .iter()
            .map(|&(r, c)| if vertical { r } else { c })
            .collect();
        if lines.len() != k {
            continue;
        }
        let mut cells = base.clone();
        cells.extend(added);
        if let Some(nu) = from_cells(&cells) {
            found.insert(nu);
        }
    }
    let mut out: Vec<Partition> = found.into_iter().collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[test]
fn pieri_column_matches_subset_enumeration() {
    for lambda in Partition::all_up_to(3) {
        for i in 0..=3 {
            assert_eq!(
                pieri_column(&lambda, i),
                strips_by_subsets(&lambda, i, true),
                "{lambda} + {i}"
            );
        }
    }
}

#[test]
fn pieri_row_matches_subset_enumeration() {
    for lambda in Partition::all_up_to(3) {
        for j in 0..=3 {
            assert_eq!(
                pieri_row(&lambda, j),
                strips_by_subsets(&lambda, j, false),
                "{lambda} + {j}"
            );
        }
    }
}

#[test]
fn pieri_examples() {
    assert_eq!(
        pieri_column(&p("2,1"), 2),
        vec![p("3,2"), p("3,1,1"), p("2,2,1"), p("2,1,1,1")]
    );
    assert_eq!(pieri_row(&p("1,1"), 1), vec![p("2,1"), p("1,1,1")]);
    assert_eq!(pieri_column(&Partition::empty(), 3), vec![p("1,1,1")]);
    assert_eq!(pieri_row(&Partition::empty(), 2), vec![p("2")]);
    assert_eq!(pieri_row(&p("1"), 1), vec![p("2"), p("1,1")]);
    assert_eq!(pieri_column(&p("2,1"), 0), vec![p("2,1")]);
}

#[test]
fn column_times_row_is_two_hooks() {
    for i in 1..=5 {
        for j in 1..=5 {
            let mut want = vec![
                hook_partition(i, j + 1).unwrap(),
                hook_partition(i + 1, j).unwrap(),
            ];
            want.sort_by(|a, b| b.cmp(a));
            assert_eq!(pieri_row(&Partition::column(i), j), want);
        }
    }
}

#[test]
fn pieri_column_and_row_are_conjugate() {
    for lambda in Partition::all_up_to(5) {
        for i in 0..=3 {
            let cols: BTreeSet<Partition> = pieri_column(&lambda, i).into_iter().collect();
            let rows: BTreeSet<Partition> = pieri_row(&lambda.conjugate(), i)
                .iter()
                .map(Partition::conjugate)
                .collect();
            assert_eq!(cols, rows, "{lambda} + {i}");
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| Partition::all_of_size(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn twice_n_is_twice_weighted_row_sum() {
    for lambda in Partition::all_up_to(8) {
        let direct: usize = lambda.parts().iter().enumerate().map(|(i, &l)| i * l).sum();
        assert_eq!(lambda.twice_n(), 2 * direct as i64, "{lambda}");
    }
}

#[test]
fn hook_sums() {
    for lambda in Partition::all_up_to(8) {
        let hooks: usize = lambda.cells().map(|c| lambda.hook_length(c)).sum();
        let arms: usize = lambda.cells().map(|c| lambda.arm(c)).sum();
        let legs: usize = lambda.cells().map(|c| lambda.leg(c)).sum();
        assert_eq!(hooks, lambda.size() + arms + legs);
        assert_eq!(lambda.conjugate().conjugate(), lambda);
        assert_eq!(lambda.conjugate().size(), lambda.size());
    }
}

#[test]
fn frobenius_examples_and_reconstruction() {
    assert_eq!(p("3,1").frobenius(), (vec![2], vec![1]));
    assert_eq!(p("2,2").frobenius(), (vec![1, 0], vec![1, 0]));
    assert_eq!(Partition::empty().frobenius(), (vec![], vec![]));
    for lambda in Partition::all_up_to(8) {
        let (a, b) = lambda.frobenius();
        assert_eq!(a.len(), lambda.diagonal_length());
        assert_eq!(Partition::from_frobenius(&a, &b).unwrap(), lambda);
    }
}

#[test]
fn index_set_examples() {
    assert_eq!(p("3,1").index_set(3).unwrap().indices(), &[5, 2, 0]);
    assert_eq!(p("2,2").index_set(3).unwrap().indices(), &[4, 3, 0]);
    assert_eq!(
        Partition::empty().index_set(4).unwrap().indices(),
        &[3, 2, 1, 0]
    );
    assert!(p("1,1,1").index_set(2).is_err());
}

/// `I_λ = I_∅ ∪ {N + aᵢ} − {N - bⱼ - 1}`, and the added and removed sets
/// never meet.
#[test]
fn index_set_frobenius_identity() {
    for lambda in Partition::all_up_to(8) {
        let (a, b) = lambda.frobenius();
        for n in lambda.len().max(1)..=lambda.len() + 2 {
            let n_i = n as i64;
            let added: BTreeSet<i64> = a.iter().map(|&x| n_i + x as i64).collect();
            let removed: BTreeSet<i64> = b.iter().map(|&y| n_i - y as i64 - 1).collect();
            assert!(added.is_disjoint(&removed), "{lambda} N={n}");
            let mut want: BTreeSet<i64> = (0..n_i).collect();
            want.extend(&added);
            let want: BTreeSet<i64> = want.difference(&removed).copied().collect();
            let got: BTreeSet<i64> = lambda
                .index_set(n)
                .unwrap()
                .indices()
                .iter()
                .map(|&i| i as i64)
                .collect();
            assert_eq!(got, want, "{lambda} N={n}");
        }
    }
}

#[test]
fn text_form() {
    assert_eq!(p("0"), Partition::empty());
    assert_eq!(p(""), Partition::empty());
    assert_eq!(p("3,1").to_string(), "3,1");
    assert!("1,2".parse::<Partition>().is_err());
    assert!("x".parse::<Partition>().is_err());
}
