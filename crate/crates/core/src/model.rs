//! Everything derived from a single odd wheel order, built once.

use crate::circulant::Circulant;
use crate::error::Result;
use crate::inverse::{assemble_pinv, w_vector};
use crate::laplacian::{alpha_table, special_laplacian, v_vector, AlphaTable};
use crate::matrix::RatMatrix;
use crate::rational::{one, zero, Rational};
use crate::wheel::{check_order, distance_matrix_closed, null_vector_d, u_vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WheelModel {
    pub n: usize,
    pub m: usize,
    /// `(0, 1, 2, …, 2, 1)`, first row of `D̃`
    pub u: Vec<Rational>,
    pub distance: RatMatrix,
    /// `d` with `Dd = 0`
    pub null_vector: Vec<Rational>,
    pub alphas: AlphaTable,
    pub laplacian: RatMatrix,
    pub w: Vec<Rational>,
    /// `(1, −1, …, −1)`, first row of `V`
    pub v: Vec<Rational>,
}

impl WheelModel {
    pub fn new(n: usize) -> Result<Self> {
        let m = check_order(n)?;
        Ok(WheelModel {
            n,
            m,
            u: u_vector(n)?,
            distance: distance_matrix_closed(n)?.mat,
            null_vector: null_vector_d(n)?,
            alphas: alpha_table(n)?,
            laplacian: special_laplacian(n)?.mat,
            w: w_vector(n)?,
            v: v_vector(n)?,
        })
    }

    pub fn rim_distance(&self) -> Circulant {
        Circulant::new(self.u.clone()).expect("n − 1 ≥ 4")
    }

    pub fn v_circulant(&self) -> Circulant {
        Circulant::new(self.v.clone()).expect("n − 1 ≥ 4")
    }

    /// `−½L̃ + (4/(n−1))ww'` from this model's `L̃` and `w`.
    pub fn pinv(&self) -> RatMatrix {
        assemble_pinv(&self.laplacian, &self.w)
    }

    /// `[0, 0; 0, V]`
    pub fn blockdiag_v(&self) -> RatMatrix {
        let v = self.v_circulant();
        RatMatrix::from_fn(self.n, self.n, |i, j| {
            if i == 0 || j == 0 {
                zero()
            } else {
                v.entry(i - 1, j - 1).clone()
            }
        })
    }

    pub fn ones(&self) -> Vec<Rational> {
        vec![one(); self.n]
    }
}
