//! Exact elimination: fraction-free rank, reduced row echelon form and
//! inversion over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::Rational;

/// Clears denominators row by row, returning an integer matrix with the same
/// row space.
fn integer_rows(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

/// Lowest common multiple of every denominator in `m`.
pub fn common_denominator(m: &RatMatrix) -> BigInt {
    m.entries()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Exact rank by Bareiss fraction-free elimination.
///
/// Rows are first scaled to integers. The pivot for each column is the first
/// nonzero entry at or below the current pivot row, so the sequence of
/// intermediate states is deterministic.
pub fn rank(m: &RatMatrix) -> usize {
    let mut a = integer_rows(m);
    let rows = m.rows();
    let cols = m.cols();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let num = &row[j] * &pivot - &lead * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss step must divide exactly");
                row[j] = q;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Reduced row echelon form together with the pivot columns, in order.
///
/// Works fraction-free on integer rows: after each step every pivot row has
/// the current pivot on its pivot column, and the final rows are divided by
/// the last pivot.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = integer_rows(m);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        let pa = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let lead = std::mem::take(&mut row[c]);
            for (j, (v, p)) in row.iter_mut().zip(&pa).enumerate() {
                if j == c {
                    continue;
                }
                let num = &*v * &pivot - &lead * p;
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free step must divide exactly");
                *v = q;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    let data = a
        .into_iter()
        .flatten()
        .map(|v| Rational::new(v, prev.clone()))
        .collect();
    let out = RatMatrix::from_vec(rows, cols, data).expect("rectangular by construction");
    (out, pivots)
}

/// Inverse by fraction-free Gauss-Jordan elimination.
///
/// Each row `i` is scaled by `l_i` to clear its denominators, so the integer
/// matrix is `SA` with `S = diag(l)` and `A⁻¹ = (SA)⁻¹S`. Elimination on
/// `[SA | I]` keeps every entry integral: after step `k` all processed
/// diagonal entries equal the current pivot, and each update divides exactly
/// by the previous one.
pub fn inverse(m: &RatMatrix) -> Result<RatMatrix> {
    if !m.is_square() {
        return Err(Error::invalid(format!(
            "inverse of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let scales: Vec<BigInt> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
        })
        .collect();
    let mut a = integer_rows(m);
    let mut x: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = vec![BigInt::zero(); n];
            row[i] = BigInt::one();
            row
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n)
            .find(|&i| !a[i][k].is_zero())
            .ok_or_else(|| Error::invalid("matrix is singular"))?;
        a.swap(k, p);
        x.swap(k, p);
        let pivot = a[k][k].clone();
        let (pa, px) = (a[k].clone(), x[k].clone());
        for i in (0..n).filter(|&i| i != k) {
            let lead = std::mem::take(&mut a[i][k]);
            let step = |v: &mut BigInt, p: &BigInt| {
                let num = &*v * &pivot - &lead * p;
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free step must divide exactly");
                *v = q;
            };
            for (v, p) in a[i][k + 1..].iter_mut().zip(&pa[k + 1..]) {
                step(v, p);
            }
            for (v, p) in x[i].iter_mut().zip(&px) {
                step(v, p);
            }
        }
        prev = pivot;
    }
    let data = x
        .into_iter()
        .flat_map(|row| {
            row.into_iter()
                .zip(&scales)
                .map(|(v, s)| Rational::new(v * s, prev.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    RatMatrix::from_vec(n, n, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn rank_of_basic_matrices() {
        assert_eq!(rank(&RatMatrix::identity(3)), 3);
        assert_eq!(rank(&RatMatrix::ones(4, 4)), 1);
        assert_eq!(rank(&RatMatrix::zeros(3, 5)), 0);
        assert_eq!(rank(&RatMatrix::zeros(0, 0)), 0);
    }

    #[test]
    fn rank_skips_zero_columns() {
        let m = RatMatrix::from_i64_rows(&[[0, 1, 2, 3], [0, 2, 4, 7], [0, 0, 0, 1], [0, 3, 6, 9]]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn rank_with_fractions() {
        let m = RatMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(3, 2), rat(1, 1)]])
            .unwrap();
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn rref_pivots() {
        let m = RatMatrix::from_i64_rows(&[[2, 4, 1], [1, 2, 0], [3, 6, 1]]);
        let (r, piv) = rref(&m);
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(
            r,
            RatMatrix::from_i64_rows(&[[1, 2, 0], [0, 0, 1], [0, 0, 0]])
        );
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_i64_rows(&[[2, 1, 0], [1, 3, 1], [0, 1, 4]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(3));
        assert!(inverse(&RatMatrix::ones(2, 2)).is_err());
        assert!(inverse(&RatMatrix::ones(2, 3)).is_err());
    }
}
