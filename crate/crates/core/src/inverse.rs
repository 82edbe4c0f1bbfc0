//! Closed-form Moore–Penrose inverse of the distance matrix of `W_n`:
//! `D† = −½L̃ + (4/(n−1))ww'` with `w = ¼(5 − n, 1, …, 1)'`.

use crate::error::Result;
use crate::laplacian::special_laplacian;
use crate::matrix::RatMatrix;
use crate::rational::{rat, Rational};
use crate::wheel::check_order;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormInverse {
    pub n: usize,
    pub w: Vec<Rational>,
    pub k: RatMatrix,
}

pub fn w_vector(n: usize) -> Result<Vec<Rational>> {
    check_order(n)?;
    let quarter = rat(1, 4);
    Ok((0..n)
        .map(|i| {
            if i == 0 {
                rat(5 - n as i64, 4)
            } else {
                quarter.clone()
            }
        })
        .collect())
}

/// `−½L + (4/(n−1))ww'` for any `L` and `w` of matching order.
pub fn assemble_pinv(laplacian: &RatMatrix, w: &[Rational]) -> RatMatrix {
    let n = w.len();
    let c = rat(4, n as i64 - 1);
    let half = rat(-1, 2);
    RatMatrix::from_fn(n, n, |i, j| &laplacian[(i, j)] * &half + &c * &w[i] * &w[j])
}

pub fn closed_form_pinv(n: usize) -> Result<ClosedFormInverse> {
    let l = special_laplacian(n)?;
    let w = w_vector(n)?;
    let k = assemble_pinv(&l.mat, &w);
    Ok(ClosedFormInverse { n, w, k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::wheel::distance_matrix_closed;

    #[test]
    fn w_vectors() {
        let q = rat(1, 4);
        assert_eq!(
            w_vector(5).unwrap(),
            vec![int(0), q.clone(), q.clone(), q.clone(), q.clone()]
        );
        let w7 = w_vector(7).unwrap();
        assert_eq!(w7[0], rat(-2, 4));
        assert!(w7[1..].iter().all(|x| *x == q));
        assert!(w_vector(8).is_err());
    }

    #[test]
    fn dw_is_constant() {
        let d = distance_matrix_closed(9).unwrap().mat;
        let dw = d.mul_vec(&w_vector(9).unwrap()).unwrap();
        assert!(dw.iter().all(|x| *x == int(2)));
    }

    #[test]
    fn w5_inverse() {
        let k = closed_form_pinv(5).unwrap().k;
        let expected = RatMatrix::from_i64_rows(&[
            [-4, 1, 1, 1, 1],
            [1, -1, 0, 1, 0],
            [1, 0, -1, 0, 1],
            [1, 1, 0, -1, 0],
            [1, 0, 1, 0, -1],
        ])
        .scale(&rat(1, 4));
        assert_eq!(k, expected);
    }

    #[test]
    fn w7_inverse() {
        let k = closed_form_pinv(7).unwrap().k;
        let expected = RatMatrix::from_i64_rows(&[
            [-24, 3, 3, 3, 3, 3, 3],
            [3, -8, 2, 4, -4, 4, 2],
            [3, 2, -8, 2, 4, -4, 4],
            [3, 4, 2, -8, 2, 4, -4],
            [3, -4, 4, 2, -8, 2, 4],
            [3, 4, -4, 4, 2, -8, 2],
            [3, 2, 4, -4, 4, 2, -8],
        ])
        .scale(&rat(1, 18));
        assert_eq!(k, expected);
        assert!(k.is_symmetric());
    }
}
