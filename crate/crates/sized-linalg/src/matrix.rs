//! Sized, contiguity-tracked column-major matrices.
//!
//! Storage is column-major with an explicit leading dimension `lda`
//! (element distance between consecutive columns), so submatrix, row and
//! column views share storage with their parent. Element `(i, j)`
//! (1-based) lives at `offset + (i-1) + (j-1)*lda`.

use std::fmt;
use std::marker::PhantomData;

use crate::contiguity::{Contiguity, Dsc};
use crate::error::Error;
use crate::size::{Fresh, Size};
use crate::storage::Storage;
use crate::vector::Vector;

/// A column-major `M`-by-`N` matrix with contiguity tag `CD`.
///
/// Cloning is cheap and produces an aliasing view of the same storage.
pub struct Matrix<M, N, CD> {
    data: Storage,
    offset: usize,
    lda: usize,
    rows: Size<M>,
    cols: Size<N>,
    _cd: PhantomData<fn(CD) -> CD>,
}

impl<M, N, CD> Clone for Matrix<M, N, CD> {
    fn clone(&self) -> Self {
        Matrix {
            data: self.data.clone(),
            offset: self.offset,
            lda: self.lda,
            rows: self.rows,
            cols: self.cols,
            _cd: PhantomData,
        }
    }
}

impl<M, N, CD> fmt::Debug for Matrix<M, N, CD> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})", self.rows.to_int(), self.cols.to_int())
    }
}

impl<M, N, CD> Matrix<M, N, CD> {
    /// Invariants assumed: the view fits in `data`, `lda >= rows` when
    /// `rows > 0`, and `lda == rows` whenever `CD` is instantiated at
    /// [`crate::Cnt`].
    pub(crate) fn from_raw_parts(
        data: Storage,
        offset: usize,
        lda: usize,
        rows: Size<M>,
        cols: Size<N>,
    ) -> Matrix<M, N, CD> {
        debug_assert!(rows.to_int() == 0 || lda >= rows.to_int());
        Matrix {
            data,
            offset,
            lda,
            rows,
            cols,
            _cd: PhantomData,
        }
    }

    pub(crate) fn retag<CD2>(self) -> Matrix<M, N, CD2> {
        Matrix {
            data: self.data,
            offset: self.offset,
            lda: self.lda,
            rows: self.rows,
            cols: self.cols,
            _cd: PhantomData,
        }
    }

    pub(crate) fn storage(&self) -> &Storage {
        &self.data
    }

    pub(crate) fn offset(&self) -> usize {
        self.offset
    }

    pub fn rows(&self) -> Size<M> {
        self.rows
    }

    pub fn cols(&self) -> Size<N> {
        self.cols
    }

    pub fn lda(&self) -> usize {
        self.lda
    }

    /// Element at 0-based `(i, j)`.
    pub(crate) fn at(&self, i: usize, j: usize) -> f64 {
        self.data.get(self.offset + i + j * self.lda)
    }

    pub(crate) fn set_at(&self, i: usize, j: usize, x: f64) {
        self.data.set(self.offset + i + j * self.lda, x);
    }

    fn check_index(&self, i: usize, j: usize) -> Result<(), Error> {
        if i < 1 || i > self.rows.to_int() || j < 1 || j > self.cols.to_int() {
            return Err(Error::IndexOutOfRange(format!(
                "({i}, {j}) not in (1..={}, 1..={})",
                self.rows.to_int(),
                self.cols.to_int()
            )));
        }
        Ok(())
    }

    /// Element at 1-based `(i, j)`.
    pub fn get_dyn(&self, i: usize, j: usize) -> Result<f64, Error> {
        self.check_index(i, j)?;
        Ok(self.at(i - 1, j - 1))
    }

    /// Overwrite the 1-based element `(i, j)`. Caller holds exclusive access.
    pub fn set_dyn(&self, i: usize, j: usize, x: f64) -> Result<(), Error> {
        self.check_index(i, j)?;
        self.set_at(i - 1, j - 1, x);
        Ok(())
    }

    /// Copy out in row-major reading order (the text file order).
    pub fn to_row_major(&self) -> Vec<f64> {
        let (m, n) = (self.rows.to_int(), self.cols.to_int());
        let mut out = Vec::with_capacity(m * n);
        for i in 0..m {
            for j in 0..n {
                out.push(self.at(i, j));
            }
        }
        out
    }
}

impl<M, N, CD: Contiguity> Matrix<M, N, CD> {
    /// Fresh matrix with element `(i, j)` (1-based) set to `f(i, j)`.
    pub fn init(m: Size<M>, n: Size<N>, f: impl Fn(usize, usize) -> f64) -> Matrix<M, N, CD> {
        let (mm, nn) = (m.to_int(), n.to_int());
        let data = Storage::from_fn(mm * nn, |idx| {
            let (i, j) = (idx % mm.max(1), idx / mm.max(1));
            f(i + 1, j + 1)
        });
        Matrix::from_raw_parts(data, 0, mm, m, n)
    }

    /// Copy a row-major array into a matrix under caller-supplied brands.
    pub fn of_array_dyn(m: Size<M>, n: Size<N>, row_major: &[f64]) -> Result<Matrix<M, N, CD>, Error> {
        let (mm, nn) = (m.to_int(), n.to_int());
        if row_major.len() != mm * nn {
            return Err(Error::LengthMismatch {
                expected: mm * nn,
                actual: row_major.len(),
            });
        }
        Ok(Matrix::init(m, n, |i, j| row_major[(i - 1) * nn + (j - 1)]))
    }
}

impl<N, CD: Contiguity> Matrix<N, N, CD> {
    pub fn identity(n: Size<N>) -> Matrix<N, N, CD> {
        Matrix::init(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }
}

/// Concatenate same-branded column vectors into a matrix whose column
/// count is a fresh brand. The row brand is shared with the inputs, not
/// generative.
pub fn of_cols_dyn<M, CDV, CD: Contiguity, R>(
    cols: &[Vector<M, CDV>],
    body: impl for<'k> FnOnce(Matrix<M, Fresh<'k>, CD>) -> R,
) -> Result<R, Error> {
    let first = cols.first().ok_or(Error::EmptyList)?;
    let m = first.dim();
    let k: Size<Fresh<'_>> = Size::new_unchecked(cols.len());
    let a = Matrix::init(m, k, |i, j| cols[j - 1].get_dyn(i).unwrap());
    Ok(body(a))
}

/// Submatrix view: element `(i, j)` maps to `a(i+ar-1, j+ac-1)`. Shares
/// storage, so writes through the view are visible in the parent.
pub fn submat_dyn<M, N, K, L, CD>(
    m: Size<M>,
    n: Size<N>,
    ar: usize,
    ac: usize,
    a: &Matrix<K, L, CD>,
) -> Result<Matrix<M, N, Dsc>, Error> {
    let (rows, cols) = (a.rows().to_int(), a.cols().to_int());
    if ar < 1 || ac < 1 || ar + m.to_int() - 1 > rows || ac + n.to_int() - 1 > cols {
        return Err(Error::SubRange(format!(
            "submat {}x{} at ({ar}, {ac}) of a {rows}x{cols} matrix",
            m.to_int(),
            n.to_int()
        )));
    }
    Ok(Matrix::from_raw_parts(
        a.data.clone(),
        a.offset + (ar - 1) + (ac - 1) * a.lda,
        a.lda,
        m,
        n,
    ))
}

/// Column view; always contiguous (stride 1).
pub fn col_dyn<M, N, CD, CDC: Contiguity>(
    j: usize,
    a: &Matrix<M, N, CD>,
) -> Result<Vector<M, CDC>, Error> {
    if j < 1 || j > a.cols().to_int() {
        return Err(Error::IndexOutOfRange(format!(
            "column {j} not in 1..={}",
            a.cols().to_int()
        )));
    }
    Ok(Vector::from_raw_parts(
        a.data.clone(),
        a.offset + (j - 1) * a.lda,
        1,
        a.rows(),
    ))
}

/// Row view; strided by `lda`, hence discrete.
pub fn row_dyn<M, N, CD>(i: usize, a: &Matrix<M, N, CD>) -> Result<Vector<N, Dsc>, Error> {
    if i < 1 || i > a.rows().to_int() {
        return Err(Error::IndexOutOfRange(format!(
            "row {i} not in 1..={}",
            a.rows().to_int()
        )));
    }
    Ok(Vector::from_raw_parts(
        a.data.clone(),
        a.offset + (i - 1),
        a.lda.max(1),
        a.cols(),
    ))
}
