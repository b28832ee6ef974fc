//! Plain-text matrix files.
//!
//! ```text
//! # comments run to the end of the line
//! field rational        # or: field gf 7
//! 2 2                   # rows cols, or a single n for a square matrix
//! 1 1/2
//! 0 -3
//! ```

use super::Mat;
use crate::error::{Error, Result};
use crate::field::{Field, FieldCtx, Fp, Rational, RationalField};

/// A parsed matrix together with the field it was read over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyMat {
    Rational(Mat<Rational>),
    Prime(Mat<Fp>),
}

impl AnyMat {
    pub fn field(&self) -> FieldCtx {
        match self {
            AnyMat::Rational(_) => FieldCtx::Rational,
            AnyMat::Prime(m) => FieldCtx::Prime(*m.ctx()),
        }
    }

    /// Serializes in the text format.
    pub fn to_text(&self) -> String {
        match self {
            AnyMat::Rational(m) => write_matrix(m),
            AnyMat::Prime(m) => write_matrix(m),
        }
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_field_header(tokens: &[&str], line: usize) -> Result<FieldCtx> {
    match tokens {
        ["field", "rational"] => Ok(FieldCtx::Rational),
        ["field", "gf", p] => {
            let p: u64 = p.parse().map_err(|_| parse_error(line, format!("invalid modulus {p:?}")))?;
            FieldCtx::prime(p).map_err(|e| parse_error(line, e.to_string()))
        }
        _ => Err(parse_error(line, "expected `field rational` or `field gf <p>`")),
    }
}

/// Parses a matrix file. `field` overrides the file's header, which then becomes optional.
pub fn parse_matrix(text: &str, field: Option<FieldCtx>) -> Result<AnyMat> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut next = lines.next();
    let header = match next {
        Some((line, l)) if l.starts_with("field") => {
            let tokens: Vec<&str> = l.split_whitespace().collect();
            let parsed = parse_field_header(&tokens, line)?;
            next = lines.next();
            Some(parsed)
        }
        _ => None,
    };
    let ctx = field.or(header).ok_or_else(|| parse_error(next.map_or(1, |(l, _)| l), "missing field header"))?;

    let (dim_line, dims) = next.ok_or_else(|| parse_error(text.lines().count().max(1), "missing dimensions"))?;
    let dims: Vec<usize> = dims
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| parse_error(dim_line, format!("invalid dimension {t:?}"))))
        .collect::<Result<_>>()?;
    let (rows, cols) = match dims[..] {
        [n] => (n, n),
        [r, c] => (r, c),
        _ => return Err(parse_error(dim_line, "expected `rows cols` or `n`")),
    };

    let mut cells: Vec<(usize, Vec<&str>)> = Vec::with_capacity(rows);
    for (line, l) in lines {
        if cells.len() == rows {
            return Err(parse_error(line, format!("unexpected extra row; matrix has {rows} rows")));
        }
        let tokens: Vec<&str> = l.split_whitespace().collect();
        if tokens.len() != cols {
            return Err(parse_error(line, format!("expected {cols} entries, found {}", tokens.len())));
        }
        cells.push((line, tokens));
    }
    if cells.len() < rows {
        return Err(parse_error(text.lines().count().max(1), format!("expected {rows} rows, found {}", cells.len())));
    }

    fn build<F: Field>(ctx: &F::Ctx, rows: usize, cols: usize, cells: &[(usize, Vec<&str>)]) -> Result<Mat<F>> {
        let mut m = Mat::zero(ctx, rows, cols);
        for (i, (line, tokens)) in cells.iter().enumerate() {
            for (j, t) in tokens.iter().enumerate() {
                m[(i, j)] = F::parse(ctx, t).map_err(|e| parse_error(*line, e.to_string()))?;
            }
        }
        Ok(m)
    }

    Ok(match ctx {
        FieldCtx::Rational => AnyMat::Rational(build(&RationalField, rows, cols, &cells)?),
        FieldCtx::Prime(p) => AnyMat::Prime(build(&p, rows, cols, &cells)?),
    })
}

/// Serializes a matrix with its field header and `rows cols` line.
pub fn write_matrix<F: Field>(m: &Mat<F>) -> String {
    format!("field {}\n{} {}\n{}", F::describe(m.ctx()), m.rows(), m.cols(), m)
}
