//! Text-file vector and matrix I/O.
//!
//! A vector file is a header line holding the length followed by that many
//! whitespace-separated floats. A matrix file is a header line holding
//! `rows cols` followed by `rows * cols` floats in row-major reading
//! order. Line breaks inside the payload are not significant.
//!
//! [`loadvec`] and [`loadmat`] hand the loaded value to a closure under
//! fresh brands, so code downstream of a load is checked against the sizes
//! actually read, whatever they turn out to be.

use std::fs;
use std::path::Path;

use crate::contiguity::Contiguity;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::size::{of_int_dyn, Fresh};
use crate::vector::Vector;

/// Parsed but not yet branded matrix data (row-major).
pub struct RawMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<f64>,
}

fn parse_floats(what: &str, body: &str, expected: usize) -> Result<Vec<f64>, Error> {
    let mut out = Vec::with_capacity(expected);
    for tok in body.split_whitespace() {
        let x: f64 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("{what}: bad float {tok:?}")))?;
        out.push(x);
    }
    if out.len() != expected {
        return Err(Error::Parse(format!(
            "{what}: expected {expected} values, found {}",
            out.len()
        )));
    }
    Ok(out)
}

fn split_header(text: &str, what: &str) -> Result<(String, String), Error> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse(format!("{what}: empty file")))?
        .to_string();
    let rest = lines.collect::<Vec<_>>().join("\n");
    Ok((header, rest))
}

/// Read a vector file into a plain array.
pub fn read_raw_vector(path: impl AsRef<Path>) -> Result<Vec<f64>, Error> {
    let what = format!("{}", path.as_ref().display());
    let text = fs::read_to_string(path)?;
    let (header, body) = split_header(&text, &what)?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("{what}: bad vector header {header:?}")))?;
    parse_floats(&what, &body, n)
}

/// Read a matrix file into row-major data plus dimensions.
pub fn read_raw_matrix(path: impl AsRef<Path>) -> Result<RawMatrix, Error> {
    let what = format!("{}", path.as_ref().display());
    let text = fs::read_to_string(path)?;
    let (header, body) = split_header(&text, &what)?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let bad = || Error::Parse(format!("{what}: bad matrix header {header:?}"));
    if dims.len() != 2 {
        return Err(bad());
    }
    let rows: usize = dims[0].parse().map_err(|_| bad())?;
    let cols: usize = dims[1].parse().map_err(|_| bad())?;
    let data = parse_floats(&what, &body, rows * cols)?;
    Ok(RawMatrix { rows, cols, data })
}

/// Load a vector file and run `body` with the vector under a fresh length
/// brand.
pub fn loadvec<CD: Contiguity, R>(
    path: impl AsRef<Path>,
    body: impl for<'n> FnOnce(Vector<Fresh<'n>, CD>) -> R,
) -> Result<R, Error> {
    let raw = read_raw_vector(path)?;
    of_int_dyn(raw.len() as i64, |n| body(Vector::init(n, |i| raw[i - 1])))
}

/// Load a matrix file and run `body` with the matrix under fresh row and
/// column brands.
pub fn loadmat<CD: Contiguity, R>(
    path: impl AsRef<Path>,
    body: impl for<'m, 'n> FnOnce(Matrix<Fresh<'m>, Fresh<'n>, CD>) -> R,
) -> Result<R, Error> {
    let raw = read_raw_matrix(path)?;
    of_int_dyn(raw.rows as i64, |m| {
        of_int_dyn(raw.cols as i64, |n| {
            body(Matrix::init(m, n, |i, j| {
                raw.data[(i - 1) * raw.cols + (j - 1)]
            }))
        })
        .expect("cols already nonnegative")
    })
}

/// Format one float with `precision` significant digits. 17 digits makes
/// the decimal round-trip bit-exact for f64.
fn fmt_float(x: f64, precision: usize) -> String {
    format!("{:.*e}", precision.saturating_sub(1), x)
}

fn format_rows(values: &[f64], cols: usize, precision: usize) -> String {
    let mut out = String::new();
    for (k, x) in values.iter().enumerate() {
        out.push_str(&fmt_float(*x, precision));
        out.push(if (k + 1) % cols == 0 { '\n' } else { ' ' });
    }
    out
}

/// Render a vector in the file format; also used by the CLI for stdout.
pub fn format_vector<N, CD>(v: &Vector<N, CD>, precision: usize) -> String {
    let vals = v.to_vec();
    let mut out = format!("{}\n", vals.len());
    if !vals.is_empty() {
        out.push_str(&format_rows(&vals, vals.len(), precision));
    }
    out
}

/// Render a matrix in the file format, one line per row.
pub fn format_matrix<M, N, CD>(a: &Matrix<M, N, CD>, precision: usize) -> String {
    let (m, n) = (a.rows().to_int(), a.cols().to_int());
    let mut out = format!("{m} {n}\n");
    if m * n > 0 {
        out.push_str(&format_rows(&a.to_row_major(), n, precision));
    }
    out
}

/// Write a vector file with `precision` significant digits.
pub fn savevec<N, CD>(path: impl AsRef<Path>, v: &Vector<N, CD>, precision: usize) -> Result<(), Error> {
    fs::write(path, format_vector(v, precision))?;
    Ok(())
}

/// Write a matrix file with `precision` significant digits.
pub fn savemat<M, N, CD>(
    path: impl AsRef<Path>,
    a: &Matrix<M, N, CD>,
    precision: usize,
) -> Result<(), Error> {
    fs::write(path, format_matrix(a, precision))?;
    Ok(())
}
