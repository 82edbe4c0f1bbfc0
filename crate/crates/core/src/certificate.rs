//! An explicit witness that `rank(L̃) ≥ n − 2`: a matrix `X` with `L̃DX = C`,
//! where `C` stacks `2I_{n−2}` over two extra rows `p`, `q`.
//!
//! The witness shapes need `n ≥ 9`. For every odd `n ≥ 5` the rank itself is
//! also computed directly by elimination.

use crate::circulant::Circulant;
use crate::elimination::rank;
use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::model::WheelModel;
use crate::rational::{int, rat, zero, Rational};
use crate::wheel::check_order;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankWitness {
    pub n: usize,
    /// length `n − 2`
    pub p: Vec<Rational>,
    /// length `n − 2`
    pub q: Vec<Rational>,
    /// length `n − 3`
    pub y: Vec<Rational>,
    /// `Circ(y)`
    pub y_circ: Circulant,
    /// `n × (n − 2)`
    pub x: RatMatrix,
    /// `n × (n − 2)`
    pub c: RatMatrix,
}

/// Builds `p`, `q`, `y`, `Y`, `X` and `C`. The `k = 1` clause of each case
/// display takes precedence over the parity clauses.
pub fn build_rank_witness(n: usize) -> Result<RankWitness> {
    check_order(n)?;
    if n < 9 {
        return Err(Error::invalid(format!("rank witness needs n ≥ 9, got {n}")));
    }
    let by_case = |len: usize, first: i64, even: i64, odd: i64| -> Vec<Rational> {
        (1..=len)
            .map(|k| {
                int(if k == 1 {
                    first
                } else if k % 2 == 0 {
                    even
                } else {
                    odd
                })
            })
            .collect()
    };
    let p = by_case(n - 2, -1, -2, 0);
    let q = by_case(n - 2, -1, 0, -2);
    let y = by_case(n - 3, -2, 0, -1);
    let y_circ = Circulant::new(y.clone())?;

    let ni = n as i64;
    let x = RatMatrix::from_fn(n, n - 2, |i, j| match (i, j) {
        (0, 0) => rat(ni - 7, 2),
        (0, _) => rat(ni - 5, 2),
        _ if i >= n - 2 => zero(),
        (_, 0) => rat(-1, 2),
        _ => y_circ.entry(i - 1, j - 1).clone(),
    });
    let c = RatMatrix::from_fn(n, n - 2, |i, j| {
        if i < n - 2 {
            if i == j {
                int(2)
            } else {
                zero()
            }
        } else if i == n - 2 {
            p[j].clone()
        } else {
            q[j].clone()
        }
    });
    Ok(RankWitness {
        n,
        p,
        q,
        y,
        y_circ,
        x,
        c,
    })
}

/// Whether `L̃·D·X = C` for the given `L̃` and `D`.
pub fn certificate_holds(
    laplacian: &RatMatrix,
    distance: &RatMatrix,
    w: &RankWitness,
) -> Result<bool> {
    Ok(laplacian.mul(distance)?.mul(&w.x)? == w.c)
}

pub fn verify_rank_certificate(n: usize) -> Result<bool> {
    let witness = build_rank_witness(n)?;
    let model = WheelModel::new(n)?;
    certificate_holds(&model.laplacian, &model.distance, &witness)
}

/// `rank(L̃)` by elimination; failing unless it is `n − 2`.
pub fn rank_of_special_laplacian(n: usize) -> Result<usize> {
    let model = WheelModel::new(n)?;
    let r = rank(&model.laplacian);
    if r != n - 2 {
        return Err(Error::Check(format!("rank(L̃) = {r} for n = {n}")));
    }
    Ok(r)
}
