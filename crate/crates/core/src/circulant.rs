//! Circulant matrices stored by their first row.
//!
//! `Circ(x)` has `x` as row 0; row `i` is `x` cyclically shifted right by `i`
//! positions, so entry `(i, j)` is `x[(j - i) mod ℓ]`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::{zero, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Circulant {
    first_row: Vec<Rational>,
}

impl Circulant {
    pub fn new(first_row: Vec<Rational>) -> Result<Self> {
        if first_row.is_empty() {
            return Err(Error::invalid("circulant needs a nonempty first row"));
        }
        Ok(Circulant { first_row })
    }

    pub fn first_row(&self) -> &[Rational] {
        &self.first_row
    }

    pub fn into_first_row(self) -> Vec<Rational> {
        self.first_row
    }

    pub fn order(&self) -> usize {
        self.first_row.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        let l = self.order();
        &self.first_row[(j + l - i % l) % l]
    }

    pub fn to_dense(&self) -> RatMatrix {
        let l = self.order();
        RatMatrix::from_fn(l, l, |i, j| self.entry(i, j).clone())
    }

    /// `Circ(a)·Circ(b) = Circ(a·Circ(b))`.
    pub fn mul(&self, rhs: &Circulant) -> Result<Circulant> {
        Circulant::new(circ_mul_row(&self.first_row, rhs)?)
    }

    /// Symmetric iff `x[j] = x[ℓ - j]` for every `j ≥ 1`.
    pub fn is_symmetric(&self) -> bool {
        let l = self.order();
        (1..l).all(|j| self.first_row[j] == self.first_row[l - j])
    }
}

/// Row vector `a` times the dense expansion of `b`, without expanding `b`.
pub fn circ_mul_row(a: &[Rational], b: &Circulant) -> Result<Vec<Rational>> {
    let l = b.order();
    if a.len() != l {
        return Err(Error::shape("row times circulant", (1, l), (1, a.len())));
    }
    let mut out = vec![zero(); l];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            let bij = b.entry(i, j);
            if !bij.is_zero() {
                *o += ai * bij;
            }
        }
    }
    Ok(out)
}

/// Expands `Circ(first_row)` directly; see [`Circulant::to_dense`].
pub fn circ_to_dense(c: &Circulant) -> RatMatrix {
    c.to_dense()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn expands_rim_block_of_w5() {
        let c = Circulant::new(ints(&[0, 1, 2, 1])).unwrap();
        assert_eq!(
            c.to_dense(),
            RatMatrix::from_i64_rows(&[[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]])
        );
    }

    #[test]
    fn order_one() {
        let c = Circulant::new(ints(&[5])).unwrap();
        assert_eq!(c.to_dense(), RatMatrix::from_i64_rows(&[[5]]));
    }

    #[test]
    fn alternating_row_shifts() {
        let v = Circulant::new(ints(&[1, -1, 1, -1, 1, -1])).unwrap();
        let d = v.to_dense();
        assert_eq!(d.row(1), ints(&[-1, 1, -1, 1, -1, 1]).as_slice());
        for i in 1..6 {
            let prev = d.row(i - 1);
            let shifted: Vec<Rational> = (0..6).map(|j| prev[(j + 5) % 6].clone()).collect();
            assert_eq!(d.row(i), shifted.as_slice());
        }
    }

    #[test]
    fn empty_first_row_rejected() {
        assert!(Circulant::new(vec![]).is_err());
    }

    #[test]
    fn row_products() {
        let b = Circulant::new(ints(&[0, 1, 2, 1])).unwrap();
        assert_eq!(
            circ_mul_row(&ints(&[0, 1, 0, 1]), &b).unwrap(),
            ints(&[2, 2, 2, 2])
        );
        assert_eq!(
            circ_mul_row(&ints(&[0, 0, 0, 0]), &b).unwrap(),
            ints(&[0, 0, 0, 0])
        );
        assert!(circ_mul_row(&ints(&[1, 0]), &b).is_err());

        let u7 = Circulant::new(ints(&[0, 1, 2, 2, 2, 1])).unwrap();
        let v7 = ints(&[1, -1, 1, -1, 1, -1]);
        assert_eq!(circ_mul_row(&v7, &u7).unwrap(), ints(&[0; 6]));
    }

    #[test]
    fn row_product_matches_dense() {
        let a = ints(&[3, -1, 4, 1, -5]);
        let b = Circulant::new(ints(&[2, 7, 1, 8, 2])).unwrap();
        assert_eq!(
            circ_mul_row(&a, &b).unwrap(),
            b.to_dense().vec_mul(&a).unwrap()
        );
    }
}
