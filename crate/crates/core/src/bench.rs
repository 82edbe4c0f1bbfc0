//! Timing harness: closed-form assembly of `D†` against the general
//! rank-factorization inverse.
//!
//! Runs are strictly sequential on the calling thread so timings stay
//! comparable. Each `(n, method)` pair is timed `repeats` times with a
//! monotonic clock and the median is reported.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::inverse::closed_form_pinv;
use crate::laplacian::{alpha_table, special_laplacian};
use crate::matrix::RatMatrix;
use crate::pinv::{mp_pinv_oracle, mp_pinv_oracle_traced};
use crate::rational::{bit_len, Rational};
use crate::wheel::{check_order, distance_matrix_closed};

pub const DEFAULT_ORACLE_CUTOFF: usize = 201;
pub const DEFAULT_REPEATS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Closed,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Closed => "closed",
            Method::Oracle => "oracle",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::Closed),
            "oracle" => Ok(Method::Oracle),
            other => Err(Error::Parse(format!(
                "unknown method {other:?} (expected closed or oracle)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub n_list: Vec<usize>,
    pub methods: Vec<Method>,
    pub repeats: usize,
    /// The oracle is skipped for `n` above this.
    pub oracle_cutoff: usize,
}

impl BenchConfig {
    pub fn new(n_list: Vec<usize>, methods: Vec<Method>) -> Self {
        BenchConfig {
            n_list,
            methods,
            repeats: DEFAULT_REPEATS,
            oracle_cutoff: DEFAULT_ORACLE_CUTOFF,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub method: Method,
    /// Median wall time; `None` when the run was skipped.
    pub wall_time: Option<Duration>,
    /// Largest bit length of a numerator or denominator over every rational
    /// matrix the method builds, measured in a separate untimed run.
    pub peak_entry_bits: Option<u64>,
    /// Closed and oracle outputs were equal. Only `true` when both ran.
    pub verified: bool,
}

impl BenchRecord {
    pub fn skipped(&self) -> bool {
        self.wall_time.is_none()
    }

    pub fn seconds(&self) -> Option<f64> {
        self.wall_time.map(|d| d.as_secs_f64())
    }
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2
    }
}

fn peak_bits(m: &RatMatrix) -> u64 {
    m.entries().iter().map(bit_len).max().unwrap_or(0)
}

fn peak_bits_of(xs: &[Rational]) -> u64 {
    xs.iter().map(bit_len).max().unwrap_or(0)
}

/// Peak bits for the closed form: the `α_k`, `L̃`, `w` and `D†`.
fn closed_peak_bits(n: usize) -> Result<u64> {
    let alphas = alpha_table(n)?;
    let inv = closed_form_pinv(n)?;
    let l = special_laplacian(n)?;
    Ok([
        peak_bits_of(&alphas.alphas),
        peak_bits(&l.mat),
        peak_bits_of(&inv.w),
        peak_bits(&inv.k),
    ]
    .into_iter()
    .max()
    .unwrap_or(0))
}

/// Peak bits for the oracle: its input and every intermediate matrix.
fn oracle_peak_bits(d: &RatMatrix) -> u64 {
    let mut peak = peak_bits(d);
    mp_pinv_oracle_traced(d, |m| peak = peak.max(peak_bits(m)));
    peak
}

/// Times `f` `repeats` times, returning the median and the last output.
fn time_runs(
    repeats: usize,
    mut f: impl FnMut() -> Result<RatMatrix>,
) -> Result<(Duration, RatMatrix)> {
    let mut times = Vec::with_capacity(repeats);
    let mut last = None;
    for _ in 0..repeats {
        let start = Instant::now();
        let out = f()?;
        times.push(start.elapsed());
        last = Some(out);
    }
    Ok((median(times), last.expect("repeats ≥ 1")))
}

pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if config.repeats == 0 {
        return Err(Error::invalid("repeats must be at least 1"));
    }
    if config.methods.is_empty() {
        return Err(Error::invalid("no methods selected"));
    }
    for &n in &config.n_list {
        check_order(n)?;
    }
    let mut methods: Vec<Method> = Vec::new();
    for m in &config.methods {
        if !methods.contains(m) {
            methods.push(*m);
        }
    }

    let mut records = Vec::new();
    for &n in &config.n_list {
        let mut outputs: Vec<(usize, RatMatrix)> = Vec::new();
        for &method in &methods {
            let result = match method {
                Method::Closed => {
                    let (t, k) = time_runs(config.repeats, || Ok(closed_form_pinv(n)?.k))?;
                    Some((t, k, closed_peak_bits(n)?))
                }
                Method::Oracle if n > config.oracle_cutoff => None,
                Method::Oracle => {
                    let d = distance_matrix_closed(n)?.mat;
                    let (t, k) = time_runs(config.repeats, || Ok(mp_pinv_oracle(&d)))?;
                    Some((t, k, oracle_peak_bits(&d)))
                }
            };
            let idx = records.len();
            records.push(BenchRecord {
                n,
                method,
                wall_time: result.as_ref().map(|(t, _, _)| *t),
                peak_entry_bits: result.as_ref().map(|(_, _, b)| *b),
                verified: false,
            });
            if let Some((_, m, _)) = result {
                outputs.push((idx, m));
            }
        }
        if outputs.len() == 2 {
            let equal = outputs[0].1 == outputs[1].1;
            for (idx, _) in &outputs {
                records[*idx].verified = equal;
            }
        }
    }
    Ok(records)
}

/// `n,method,seconds,peak_bits,verified`, one line per record. Skipped runs
/// carry `skipped` in the timing and bit columns.
pub fn bench_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("n,method,seconds,peak_bits,verified\n");
    for r in records {
        let secs = r
            .seconds()
            .map_or_else(|| "skipped".to_string(), |s| format!("{s:.6}"));
        let bits = r
            .peak_entry_bits
            .map_or_else(|| "skipped".to_string(), |b| b.to_string());
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n, r.method, secs, bits, r.verified
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_methods_at_five() {
        let cfg = BenchConfig {
            repeats: 1,
            ..BenchConfig::new(vec![5], vec![Method::Closed, Method::Oracle])
        };
        let recs = run_bench(&cfg).unwrap();
        assert_eq!(recs.len(), 2);
        assert!(recs.iter().all(|r| r.verified && !r.skipped()));
        // α_2 = −3/8 is the widest rational the closed form builds at n = 5.
        assert_eq!(recs[0].peak_entry_bits, Some(4));
        assert!(recs[1].peak_entry_bits >= Some(3));
    }

    #[test]
    fn oracle_above_cutoff_is_flagged() {
        let cfg = BenchConfig {
            repeats: 1,
            oracle_cutoff: 7,
            ..BenchConfig::new(vec![9], vec![Method::Closed, Method::Oracle])
        };
        let recs = run_bench(&cfg).unwrap();
        assert!(!recs[0].skipped());
        assert!(recs[1].skipped());
        assert!(!recs[0].verified);
        let csv = bench_csv(&recs);
        assert!(csv.ends_with("9,oracle,skipped,skipped,false\n"));
    }

    #[test]
    fn rejects_bad_config() {
        let mut cfg = BenchConfig::new(vec![5], vec![Method::Closed]);
        cfg.repeats = 0;
        assert!(run_bench(&cfg).is_err());
        assert!(run_bench(&BenchConfig::new(vec![6], vec![Method::Closed])).is_err());
        assert!(run_bench(&BenchConfig::new(vec![5], vec![])).is_err());
    }

    #[test]
    fn median_of_even_count() {
        let ms = |x| Duration::from_millis(x);
        assert_eq!(median(vec![ms(4), ms(1), ms(3)]), ms(3));
        assert_eq!(median(vec![ms(4), ms(2)]), ms(3));
    }

    #[test]
    fn method_names() {
        assert_eq!("oracle".parse::<Method>().unwrap(), Method::Oracle);
        assert_eq!(Method::Closed.to_string(), "closed");
        assert!("svd".parse::<Method>().is_err());
    }
}
