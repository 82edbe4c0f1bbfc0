//! The special Laplacian `L̃` of an odd wheel and its ingredients: the
//! coefficients `α_k`, the indicator rows `c^k` with their circulants
//! `C_k = Circ(c^k)`, and the alternating row `v` with `V = Circ(v)`.
//!
//! Throughout, `m = (n − 1)/2` and `k` runs over `1..=m`.

use num_traits::Zero;

use crate::circulant::Circulant;
use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::{int, one, rat, sign_pow, zero, Rational};
use crate::wheel::check_order;

/// `α_1..α_m` for one wheel order, with the exponents `g(k)` they use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    pub n: usize,
    pub m: usize,
    /// `alphas[k − 1] = α_k`
    pub alphas: Vec<Rational>,
    /// `g_values[k − 1] = g(k)`
    pub g_values: Vec<i64>,
}

impl AlphaTable {
    pub fn alpha(&self, k: usize) -> &Rational {
        &self.alphas[k - 1]
    }

    pub fn g(&self, k: usize) -> i64 {
        self.g_values[k - 1]
    }
}

/// `g(k) = (n + (−1)^(m−k)) / 2`, always an integer since `n` is odd.
pub fn g_exponent(n: usize, k: usize) -> i64 {
    let m = (n - 1) / 2;
    let s: i64 = if (m - k).is_multiple_of(2) { 1 } else { -1 };
    (n as i64 + s) / 2
}

/// `α_k = (−1)^g(k) (2m² − 6(m−k)² + 1) / (6(n−1))`.
pub fn alpha_table(n: usize) -> Result<AlphaTable> {
    let m = check_order(n)?;
    let mi = m as i64;
    let denom = 6 * (n as i64 - 1);
    let g_values: Vec<i64> = (1..=m).map(|k| g_exponent(n, k)).collect();
    let alphas = (1..=m)
        .zip(&g_values)
        .map(|(k, &g)| {
            let d = mi - k as i64;
            sign_pow(g) * rat(2 * mi * mi - 6 * d * d + 1, denom)
        })
        .collect();
    Ok(AlphaTable {
        n,
        m,
        alphas,
        g_values,
    })
}

fn check_index(n: usize, k: usize) -> Result<usize> {
    let m = check_order(n)?;
    if k == 0 || k > m {
        return Err(Error::invalid(format!(
            "special index k = {k} outside 1..={m}"
        )));
    }
    Ok(m)
}

/// `c^k`: length `n − 1`, ones at 1-based positions `k + 1` and `n − k`
/// (a single one when `k = m`).
pub fn special_vector(n: usize, k: usize) -> Result<Vec<Rational>> {
    check_index(n, k)?;
    let mut c = vec![zero(); n - 1];
    c[k] = one();
    c[n - k - 1] = one();
    Ok(c)
}

/// `C_k = Circ(c^k)`.
pub fn special_matrix(n: usize, k: usize) -> Result<Circulant> {
    Circulant::new(special_vector(n, k)?)
}

/// `v = (1, −1, 1, …, −1)` with `n − 1` entries.
pub fn v_vector(n: usize) -> Result<Vec<Rational>> {
    check_order(n)?;
    Ok((0..n - 1)
        .map(|i| if i % 2 == 0 { one() } else { -one() })
        .collect())
}

pub fn v_matrix(n: usize) -> Result<Circulant> {
    Circulant::new(v_vector(n)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialLaplacian {
    pub n: usize,
    pub mat: RatMatrix,
}

/// First row of the rim block of `L̃`:
/// `n(n−2)/(6(n−1))·e₁ + Σ α_k c^k`.
pub fn laplacian_rim_row(n: usize) -> Result<Vec<Rational>> {
    let table = alpha_table(n)?;
    let mut row = vec![zero(); n - 1];
    row[0] = rat((n * (n - 2)) as i64, 6 * (n as i64 - 1));
    for k in 1..=table.m {
        let c = special_vector(n, k)?;
        for (r, ck) in row.iter_mut().zip(&c) {
            if !ck.is_zero() {
                *r += table.alpha(k) * ck;
            }
        }
    }
    Ok(row)
}

/// Assembles
/// `L̃ = [(n−1)/2, 0; 0, O] + n(n−2)/(6(n−1))·[0, 0; 0, I] − ½[0, 1'; 1, O] + Σ α_k [0, 0; 0, C_k]`.
pub fn special_laplacian(n: usize) -> Result<SpecialLaplacian> {
    let rim = Circulant::new(laplacian_rim_row(n)?)?;
    let half = rat(-1, 2);
    let mat = RatMatrix::from_fn(n, n, |i, j| match (i, j) {
        (0, 0) => rat(n as i64 - 1, 2),
        (0, _) | (_, 0) => half.clone(),
        _ => rim.entry(i - 1, j - 1).clone(),
    });
    Ok(SpecialLaplacian { n, mat })
}

/// Sum of the `c^k`; this is `(0, 1, 1, …, 1)`.
pub fn special_vector_cover(n: usize) -> Result<Vec<Rational>> {
    let m = check_order(n)?;
    let mut acc = vec![zero(); n - 1];
    for k in 1..=m {
        for (a, c) in acc.iter_mut().zip(special_vector(n, k)?) {
            *a += c;
        }
    }
    Ok(acc)
}

/// Right-hand side of `v·C_k`: `(−1)^k 2v` for `k < m`, `(−1)^m v` for `k = m`.
pub fn v_ck_expected(n: usize, k: usize) -> Result<Vec<Rational>> {
    let m = check_index(n, k)?;
    let factor = if k < m {
        sign_pow(k as i64) * int(2)
    } else {
        sign_pow(m as i64)
    };
    Ok(v_vector(n)?.into_iter().map(|x| x * &factor).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::circ_mul_row;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn alphas_for_w5_and_w7() {
        assert_eq!(alpha_table(5).unwrap().alphas, vec![rat(1, 8), rat(-3, 8)]);
        assert_eq!(
            alpha_table(7).unwrap().alphas,
            vec![rat(-5, 36), rat(-13, 36), rat(19, 36)]
        );
        assert!(alpha_table(6).is_err());
    }

    #[test]
    fn alphas_for_w9() {
        // m = 4, 6(n−1) = 48; g(k) = 4, 5, 4, 5 for k = 1..4
        let t = alpha_table(9).unwrap();
        assert_eq!(t.g_values, vec![4, 5, 4, 5]);
        // k=1: 32 − 54 + 1 = −21; k=2: 32 − 24 + 1 = 9; k=3: 32 − 6 + 1 = 27; k=4: 33
        assert_eq!(
            t.alphas,
            vec![rat(-21, 48), rat(-9, 48), rat(27, 48), rat(-33, 48)]
        );
    }

    #[test]
    fn special_vectors() {
        assert_eq!(special_vector(5, 1).unwrap(), ints(&[0, 1, 0, 1]));
        assert_eq!(special_vector(5, 2).unwrap(), ints(&[0, 0, 1, 0]));
        assert_eq!(special_vector(7, 3).unwrap(), ints(&[0, 0, 0, 1, 0, 0]));
        assert!(special_vector(7, 0).is_err());
        assert!(special_vector(7, 4).is_err());
        for k in 1..=4 {
            let sum = special_vector(9, k)
                .unwrap()
                .iter()
                .fold(zero(), |a, x| a + x);
            assert_eq!(sum, if k < 4 { int(2) } else { int(1) });
        }
    }

    #[test]
    fn special_matrices() {
        assert!(special_matrix(5, 1).unwrap().to_dense().is_symmetric());
        for k in 1..=4 {
            let c = special_matrix(9, k).unwrap().to_dense();
            assert_eq!(c, c.transpose());
        }
        let c3 = special_matrix(7, 3).unwrap().to_dense();
        for j in 0..6 {
            assert_eq!(c3.col(j).iter().fold(zero(), |a, x| a + x), one());
        }
    }

    #[test]
    fn v_times_special_matrices() {
        assert_eq!(v_vector(5).unwrap(), ints(&[1, -1, 1, -1]));
        for n in [5, 7, 9, 11] {
            let v = v_vector(n).unwrap();
            for k in 1..=(n - 1) / 2 {
                let got = circ_mul_row(&v, &special_matrix(n, k).unwrap()).unwrap();
                assert_eq!(got, v_ck_expected(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn w5_laplacian() {
        let l = special_laplacian(5).unwrap().mat;
        let expected = RatMatrix::from_i64_rows(&[
            [16, -4, -4, -4, -4],
            [-4, 5, 1, -3, 1],
            [-4, 1, 5, 1, -3],
            [-4, -3, 1, 5, 1],
            [-4, 1, -3, 1, 5],
        ])
        .scale(&rat(1, 8));
        assert_eq!(l, expected);
    }

    #[test]
    fn w7_laplacian() {
        let l = special_laplacian(7).unwrap().mat;
        let expected = RatMatrix::from_i64_rows(&[
            [108, -18, -18, -18, -18, -18, -18],
            [-18, 35, -5, -13, 19, -13, -5],
            [-18, -5, 35, -5, -13, 19, -13],
            [-18, -13, -5, 35, -5, -13, 19],
            [-18, 19, -13, -5, 35, -5, -13],
            [-18, -13, 19, -13, -5, 35, -5],
            [-18, -5, -13, 19, -13, -5, 35],
        ])
        .scale(&rat(1, 36));
        assert_eq!(l, expected);
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let l = special_laplacian(11).unwrap().mat;
        assert!(l.is_symmetric());
        assert!(l.row_sums().iter().all(Zero::is_zero));
    }

    #[test]
    fn special_vectors_cover_rim() {
        for n in [5, 7, 9, 13] {
            let mut expected = vec![one(); n - 1];
            expected[0] = zero();
            assert_eq!(special_vector_cover(n).unwrap(), expected);
        }
    }
}
