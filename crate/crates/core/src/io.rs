//! Text serialization of exact matrices and coefficient lists.
//!
//! Every cell is written as `p/q` (or `p` when `q = 1`); no format ever falls
//! back to decimals. CSV and JSON also parse back to the same matrix.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::elimination::common_denominator;
use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Csv,
    Json,
    Latex,
}

impl Format {
    pub const ALL: [Format; 3] = [Format::Csv, Format::Json, Format::Latex];
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Latex => "latex",
        })
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(Error::Parse(format!(
                "unknown format {other:?} (expected csv, json or latex)"
            ))),
        }
    }
}

/// JSON document for a matrix: `{"n": …, "rows": [["p/q", …], …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

/// JSON document for the coefficient list of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphasDocument {
    pub n: usize,
    pub alphas: Vec<String>,
}

fn format_row(row: &[Rational]) -> Vec<String> {
    row.iter().map(format_rational).collect()
}

/// One line per row, cells separated by commas, trailing newline.
pub fn write_csv(m: &RatMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        out.push_str(&format_row(m.row(i)).join(","));
        out.push('\n');
    }
    out
}

/// Inverse of [`write_csv`]. Blank lines are ignored; ragged rows are an
/// error.
pub fn parse_csv(text: &str) -> Result<RatMatrix> {
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.split(',').map(|c| parse_rational(c.trim())).collect())
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    RatMatrix::from_rows(rows)
}

pub fn matrix_document(m: &RatMatrix) -> MatrixDocument {
    MatrixDocument {
        n: m.rows(),
        rows: (0..m.rows()).map(|i| format_row(m.row(i))).collect(),
    }
}

/// Compact JSON followed by a newline.
pub fn write_json(m: &RatMatrix) -> String {
    let mut s = serde_json::to_string(&matrix_document(m)).expect("strings always serialize");
    s.push('\n');
    s
}

/// Inverse of [`write_json`]; `n` must equal the number of rows.
pub fn parse_json(text: &str) -> Result<RatMatrix> {
    let doc: MatrixDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
    if doc.rows.len() != doc.n {
        return Err(Error::Parse(format!(
            "matrix JSON declares n = {} but has {} rows",
            doc.n,
            doc.rows.len()
        )));
    }
    let rows = doc
        .rows
        .iter()
        .map(|r| r.iter().map(|c| parse_rational(c)).collect())
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    RatMatrix::from_rows(rows)
}

fn latex_scalar(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        let sign = if x.numer().sign() == num_bigint::Sign::Minus {
            "-"
        } else {
            ""
        };
        format!("{sign}\\frac{{{}}}{{{}}}", x.numer().magnitude(), x.denom())
    }
}

/// An `array` environment with the common denominator pulled out front as
/// `\frac{1}{s}`, omitted when every entry is already an integer.
pub fn write_latex(m: &RatMatrix) -> String {
    let s = common_denominator(m);
    let mut out = String::new();
    if !s.is_one() {
        out.push_str(&format!("\\frac{{1}}{{{s}}}"));
    }
    out.push_str(&format!(
        "\\left[\\begin{{array}}{{{}}}\n",
        "c".repeat(m.cols())
    ));
    let scale = Rational::from_integer(s);
    for i in 0..m.rows() {
        let cells: Vec<String> = m
            .row(i)
            .iter()
            .map(|x| {
                let v: BigInt = (x * &scale).to_integer();
                v.to_string()
            })
            .collect();
        out.push_str(&cells.join(" & "));
        if i + 1 < m.rows() {
            out.push_str(" \\\\");
        }
        out.push('\n');
    }
    out.push_str("\\end{array}\\right]\n");
    out
}

pub fn write_matrix(m: &RatMatrix, format: Format) -> String {
    match format {
        Format::Csv => write_csv(m),
        Format::Json => write_json(m),
        Format::Latex => write_latex(m),
    }
}

/// `α_1, …, α_m` for order `n`: a comma-separated line, a JSON document, or a
/// LaTeX tuple.
pub fn write_alphas(n: usize, alphas: &[Rational], format: Format) -> String {
    match format {
        Format::Csv => format!("{}\n", format_row(alphas).join(",")),
        Format::Json => {
            let doc = AlphasDocument {
                n,
                alphas: format_row(alphas),
            };
            let mut s = serde_json::to_string(&doc).expect("strings always serialize");
            s.push('\n');
            s
        }
        Format::Latex => {
            let cells: Vec<String> = alphas.iter().map(latex_scalar).collect();
            format!("\\left({}\\right)\n", cells.join(", "))
        }
    }
}
