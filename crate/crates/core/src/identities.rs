//! Summation identities satisfied by the `α_k`.
//!
//! Each identity is evaluated twice: the left side by brute-force summation
//! over `k`, the right side from its closed form. The `α_k` used here are
//! recomputed locally from their defining formula rather than taken from
//! [`crate::laplacian::alpha_table`], so the two stay independent.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{int, rat, zero, Rational};
use crate::wheel::check_order;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `Σ (−1)^g(k) (2m² − 6(m−k)² + 1)`
    I1,
    /// `Σ (−1)^(k+g(k)) (2m² − 6(m−k)² + 1) = −3m²`
    I2,
    /// `2Σα_k − α_m = (6m − 4m² + 1)/(6(n−1))`
    I3,
    /// `2α_{j−1} + α_j + α_{j−2} = (−1)^j 2/(n−1)` for `3 ≤ j ≤ m`
    I4,
    /// `2Σ(−1)^k α_k − (−1)^m α_m = (2n − n²)/(6(n−1))`
    I5,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::I1,
        Identity::I2,
        Identity::I3,
        Identity::I4,
        Identity::I5,
    ];
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "I1" => Ok(Identity::I1),
            "I2" => Ok(Identity::I2),
            "I3" => Ok(Identity::I3),
            "I4" => Ok(Identity::I4),
            "I5" => Ok(Identity::I5),
            _ => Err(Error::Parse(format!("unknown identity {s:?}"))),
        }
    }
}

fn parity_sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `(−1)^g(k)` with `g(k) = (n + (−1)^(m−k))/2`.
fn g_sign(n: i64, m: i64, k: i64) -> i64 {
    let g = (n + parity_sign(m - k)) / 2;
    parity_sign(g)
}

/// `2m² − 6(m−k)² + 1`
fn bracket(m: i64, k: i64) -> i64 {
    2 * m * m - 6 * (m - k) * (m - k) + 1
}

fn alpha(n: i64, m: i64, k: i64) -> Rational {
    rat(g_sign(n, m, k) * bracket(m, k), 6 * (n - 1))
}

/// `δ = 2Σα_k − α_m`, the quantity closed by identity I3.
pub fn delta(n: usize) -> Result<Rational> {
    let m = check_order(n)? as i64;
    let n = n as i64;
    let sum = (1..=m).fold(zero(), |acc, k| acc + alpha(n, m, k));
    Ok(sum * int(2) - alpha(n, m, m))
}

/// `γ = α_m + α_{m−2} + 2α_{m−1}`, identity I4 at `j = m`; needs `m ≥ 3`.
pub fn gamma(n: usize) -> Result<Rational> {
    let m = check_order(n)? as i64;
    if m < 3 {
        return Err(Error::invalid(format!("γ needs m ≥ 3, got m = {m}")));
    }
    let n = n as i64;
    Ok(alpha(n, m, m) + alpha(n, m, m - 2) + alpha(n, m, m - 1) * int(2))
}

/// Returns `(lhs, rhs)` for one identity at one order. `j` is required for
/// I4 (with `j, j−1, j−2 ∈ 1..=m`) and rejected for the others.
pub fn identity_check(which: Identity, n: usize, j: Option<usize>) -> Result<(Rational, Rational)> {
    let m = check_order(n)? as i64;
    let ni = n as i64;
    if which != Identity::I4 && j.is_some() {
        return Err(Error::invalid(format!("{which} takes no index")));
    }
    let ks = 1..=m;
    Ok(match which {
        Identity::I1 => {
            let lhs: i64 = ks.map(|k| g_sign(ni, m, k) * bracket(m, k)).sum();
            let rhs = if m % 2 == 0 {
                -3 * m * m + 3 * m
            } else {
                -m * m + 3 * m + 1
            };
            (int(lhs), int(rhs))
        }
        Identity::I2 => {
            let lhs: i64 = ks
                .map(|k| parity_sign(k) * g_sign(ni, m, k) * bracket(m, k))
                .sum();
            (int(lhs), int(-3 * m * m))
        }
        Identity::I3 => {
            let lhs = delta(n)?;
            (lhs, rat(6 * m - 4 * m * m + 1, 6 * (ni - 1)))
        }
        Identity::I4 => {
            let j = j.ok_or_else(|| Error::invalid("I4 needs an index j"))? as i64;
            if j < 3 || j > m {
                return Err(Error::invalid(format!(
                    "I4 needs j, j−1, j−2 in 1..={m}, got j = {j}"
                )));
            }
            let lhs = alpha(ni, m, j - 1) * int(2) + alpha(ni, m, j) + alpha(ni, m, j - 2);
            (lhs, rat(parity_sign(j) * 2, ni - 1))
        }
        Identity::I5 => {
            let sum = ks.fold(zero(), |acc, k| acc + alpha(ni, m, k) * int(parity_sign(k)));
            let lhs = sum * int(2) - alpha(ni, m, m) * int(parity_sign(m));
            (lhs, rat(2 * ni - ni * ni, 6 * (ni - 1)))
        }
    })
}

/// Every admissible `(identity, j)` pair for order `n`.
pub fn admissible_checks(n: usize) -> Result<Vec<(Identity, Option<usize>)>> {
    let m = check_order(n)?;
    let mut out = vec![
        (Identity::I1, None),
        (Identity::I2, None),
        (Identity::I3, None),
    ];
    out.extend((3..=m).map(|j| (Identity::I4, Some(j))));
    out.push((Identity::I5, None));
    Ok(out)
}
