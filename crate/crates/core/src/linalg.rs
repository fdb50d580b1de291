//! Dense exact linear algebra over the rationals: Gaussian elimination for
//! solving, rank, and nullspace. Sizes here are small (at most a few hundred
//! columns), so fraction growth is acceptable.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

/// Row-reduce `rows` in place, returning the pivot column of each retained
/// row. Rows are normalized so every pivot is 1 and pivot columns are
/// cleared above and below.
pub fn row_reduce(rows: &mut Vec<Vec<Q>>) -> Vec<usize> {
    let mut pivots = Vec::new();
    if rows.is_empty() {
        return pivots;
    }
    let cols = rows[0].len();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].clone();
        for v in rows[rank].iter_mut() {
            *v = &*v / &inv;
        }
        for i in 0..rows.len() {
            if i == rank || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for j in 0..cols {
                let delta = &factor * &rows[rank][j];
                rows[i][j] = &rows[i][j] - delta;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    row_reduce(&mut rows).len()
}

/// One solution of `rows · x = rhs`, free variables set to zero. `None` when
/// inconsistent.
pub fn solve(rows: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    assert_eq!(rows.len(), rhs.len());
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let cols = rows[0].len();
    let mut augmented: Vec<Vec<Q>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut v = row.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let pivots = row_reduce(&mut augmented);
    // a pivot in the rhs column marks inconsistency
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (row, &col) in augmented.iter().zip(&pivots) {
        x[col] = row[cols].clone();
    }
    Some(x)
}

/// A basis of the right nullspace of `rows` (vectors `v` with `rows · v = 0`).
pub fn nullspace(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut reduced: Vec<Vec<Q>> = rows.to_vec();
    let pivots = row_reduce(&mut reduced);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (row, &p) in reduced.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn qi(v: i64) -> Q {
    Q::from_integer(v.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| qi(v)).collect())
            .collect()
    }

    #[test]
    fn solve_simple_system() {
        let rows = m(&[&[1, 2], &[3, 4]]);
        let rhs = vec![qi(5), qi(11)];
        let x = solve(&rows, &rhs).unwrap();
        assert_eq!(x, vec![qi(1), qi(2)]);
    }

    #[test]
    fn solve_underdetermined_picks_free_zero() {
        let rows = m(&[&[1, 1, 0]]);
        let rhs = vec![qi(3)];
        let x = solve(&rows, &rhs).unwrap();
        assert_eq!(x, vec![qi(3), qi(0), qi(0)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let rows = m(&[&[1, 1], &[2, 2]]);
        let rhs = vec![qi(1), qi(3)];
        assert!(solve(&rows, &rhs).is_none());
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(rows.clone()), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for v in &ns {
            for row in &rows {
                let dot: Q = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
