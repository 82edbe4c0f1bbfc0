//! Characteristic polynomials and the exact positive-semidefiniteness test
//! built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::elimination::common_denominator;
use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::Rational;

/// Coefficients of `det(λI − A)`, highest degree first: entry `i` multiplies
/// `λ^(n−i)`, entry 0 is always 1.
///
/// Runs the Faddeev–LeVerrier recurrence on the integer matrix `B = sA`
/// (`s` the common denominator of `A`), where every step stays integral and
/// each division by `k` is exact. The coefficient of `λ^(n−k)` for `A` is the
/// one for `B` divided by `s^k`.
pub fn charpoly(m: &RatMatrix) -> Result<Vec<Rational>> {
    if !m.is_square() {
        return Err(Error::invalid(format!(
            "characteristic polynomial of a non-square {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let s = common_denominator(m);
    let b: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.numer() * (&s / x.denom()))
                .collect()
        })
        .collect();

    let mut coeffs = vec![BigInt::one()];
    // M_1 = I; c_1 = -tr(B M_1) / 1.
    let mut acc: Vec<Vec<BigInt>> = identity(n);
    for k in 1..=n {
        let prod = mat_mul(&b, &acc);
        let tr = (0..n).fold(BigInt::zero(), |t, i| t + &prod[i][i]);
        let (c, rem) = (-tr).div_rem(&BigInt::from(k));
        debug_assert!(
            rem.is_zero(),
            "Faddeev–LeVerrier trace must be divisible by k"
        );
        // M_{k+1} = B M_k + c_k I
        acc = prod;
        for (i, row) in acc.iter_mut().enumerate() {
            row[i] += &c;
        }
        coeffs.push(c);
    }

    let mut scale = BigInt::one();
    Ok(coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                scale *= &s;
            }
            Rational::new(c, scale.clone())
        })
        .collect())
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect()
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![BigInt::zero(); n];
            for (x, brow) in row.iter().zip(b) {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(brow) {
                    if !y.is_zero() {
                        *o += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

/// Whether a symmetric matrix is positive semidefinite, decided exactly.
///
/// Writing the characteristic polynomial as `λⁿ − c₁λⁿ⁻¹ + c₂λⁿ⁻² − …`, the
/// `cₖ` are the elementary symmetric functions of the (real) eigenvalues, and
/// all eigenvalues are nonnegative iff every `cₖ ≥ 0`.
pub fn is_psd_symmetric(m: &RatMatrix) -> Result<bool> {
    if !m.is_symmetric() {
        return Err(Error::invalid("PSD test needs a symmetric matrix"));
    }
    let coeffs = charpoly(m)?;
    Ok(coeffs.iter().enumerate().all(|(k, a)| {
        // c_k = (-1)^k a_k
        if k % 2 == 0 {
            !a.is_negative()
        } else {
            !a.is_positive()
        }
    }))
}
