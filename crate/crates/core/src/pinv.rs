//! General Moore–Penrose inverse by rank factorization, and the four Penrose
//! conditions as an exact check.

use serde::Serialize;

use crate::elimination::{inverse, rref};
use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::{format_rational, zero, Rational};

/// Outcome of checking `K` against `A` under the four Penrose conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinvReport {
    /// `AKA = A`
    pub p1: bool,
    /// `KAK = K`
    pub p2: bool,
    /// `(AK)' = AK`
    pub p3: bool,
    /// `(KA)' = KA`
    pub p4: bool,
    /// Largest absolute entry over the four residual matrices.
    pub max_abs_residual: Rational,
}

impl PinvReport {
    pub fn all(&self) -> bool {
        self.p1 && self.p2 && self.p3 && self.p4
    }

    pub fn summary(&self) -> PinvSummary {
        PinvSummary {
            p1: self.p1,
            p2: self.p2,
            p3: self.p3,
            p4: self.p4,
            max_abs_residual: format_rational(&self.max_abs_residual),
        }
    }
}

/// Serializable form of [`PinvReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinvSummary {
    pub p1: bool,
    pub p2: bool,
    pub p3: bool,
    pub p4: bool,
    pub max_abs_residual: String,
}

/// `G'(GG')⁻¹(F'F)⁻¹F'` where `A = F·G`, `F` the pivot columns of `A` and `G`
/// the nonzero rows of its reduced row echelon form.
pub fn mp_pinv_oracle(m: &RatMatrix) -> RatMatrix {
    mp_pinv_oracle_traced(m, |_| {})
}

/// [`mp_pinv_oracle`], handing every intermediate matrix to `seen` in the
/// order it is produced. The last one passed is the result.
pub fn mp_pinv_oracle_traced(m: &RatMatrix, mut seen: impl FnMut(&RatMatrix)) -> RatMatrix {
    let (echelon, pivots) = rref(m);
    seen(&echelon);
    let r = pivots.len();
    if r == 0 {
        let k = RatMatrix::zeros(m.cols(), m.rows());
        seen(&k);
        return k;
    }
    let f = RatMatrix::from_fn(m.rows(), r, |i, j| m[(i, pivots[j])].clone());
    let g = echelon.block(0, 0, r, m.cols());
    let ft = f.transpose();
    let gt = g.transpose();
    // Both Gram matrices are r×r and nonsingular by construction.
    let ftf = ft.mul(&f).expect("shapes agree");
    let ggt = g.mul(&gt).expect("shapes agree");
    seen(&ftf);
    seen(&ggt);
    let ftf_inv = inverse(&ftf).expect("F has full column rank");
    let ggt_inv = inverse(&ggt).expect("G has full row rank");
    seen(&ftf_inv);
    seen(&ggt_inv);
    let left = gt.mul(&ggt_inv).expect("shapes agree");
    seen(&left);
    let middle = left.mul(&ftf_inv).expect("shapes agree");
    seen(&middle);
    let k = middle.mul(&ft).expect("shapes agree");
    seen(&k);
    k
}

/// Evaluates the four Penrose conditions for `K` as a candidate inverse of `A`.
pub fn penrose_check(a: &RatMatrix, k: &RatMatrix) -> Result<PinvReport> {
    if k.shape() != (a.cols(), a.rows()) {
        return Err(Error::shape(
            "Penrose check",
            (a.cols(), a.rows()),
            k.shape(),
        ));
    }
    let ak = a.mul(k)?;
    let ka = k.mul(a)?;
    let r1 = ak.mul(a)?.sub(a)?;
    let r2 = ka.mul(k)?.sub(k)?;
    let r3 = ak.transpose().sub(&ak)?;
    let r4 = ka.transpose().sub(&ka)?;
    let max_abs_residual = [&r1, &r2, &r3, &r4]
        .iter()
        .map(|r| r.max_abs())
        .max()
        .unwrap_or_else(zero);
    Ok(PinvReport {
        p1: r1.is_zero(),
        p2: r2.is_zero(),
        p3: r3.is_zero(),
        p4: r4.is_zero(),
        max_abs_residual,
    })
}
