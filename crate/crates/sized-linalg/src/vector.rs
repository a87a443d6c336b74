//! Sized, contiguity-tracked vectors of f64.
//!
//! All indices are 1-based, following BLAS/LAPACK conventions. Operations
//! taking two vectors of the same brand perform no dynamic length
//! comparison; the shared type parameter `N` is the proof.

use std::fmt;
use std::marker::PhantomData;

use crate::contiguity::{Contiguity, Dsc};
use crate::error::Error;
use crate::size::{self, Add, Size, Succ};
use crate::storage::Storage;

/// A vector of branded length `N` with contiguity tag `CD`.
///
/// Cloning is cheap and produces an aliasing view of the same storage.
pub struct Vector<N, CD> {
    data: Storage,
    offset: usize,
    stride: usize,
    len: Size<N>,
    _cd: PhantomData<fn(CD) -> CD>,
}

impl<N, CD> Clone for Vector<N, CD> {
    fn clone(&self) -> Self {
        Vector {
            data: self.data.clone(),
            offset: self.offset,
            stride: self.stride,
            len: self.len,
            _cd: PhantomData,
        }
    }
}

impl<N, CD> fmt::Debug for Vector<N, CD> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vector({:?})", self.to_vec())
    }
}

impl<N, CD> Vector<N, CD> {
    /// Invariants assumed, not checked: the view fits in `data`, and
    /// `stride == 1` whenever `CD` is instantiated at [`Cnt`].
    pub(crate) fn from_raw_parts(
        data: Storage,
        offset: usize,
        stride: usize,
        len: Size<N>,
    ) -> Vector<N, CD> {
        debug_assert!(stride >= 1);
        debug_assert!(len.to_int() == 0 || offset + (len.to_int() - 1) * stride < data.len());
        Vector {
            data,
            offset,
            stride,
            len,
            _cd: PhantomData,
        }
    }

    pub fn dim(&self) -> Size<N> {
        self.len
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    /// Element at 0-based index, no bound check beyond the backing array's.
    pub(crate) fn at(&self, i: usize) -> f64 {
        self.data.get(self.offset + i * self.stride)
    }

    pub(crate) fn set_at(&self, i: usize, x: f64) {
        self.data.set(self.offset + i * self.stride, x);
    }

    /// Element at 1-based index `i`.
    pub fn get_dyn(&self, i: usize) -> Result<f64, Error> {
        if i < 1 || i > self.len.to_int() {
            return Err(Error::IndexOutOfRange(format!(
                "{} not in 1..={}",
                i,
                self.len.to_int()
            )));
        }
        Ok(self.at(i - 1))
    }

    /// Overwrite the 1-based element `i`. Caller holds exclusive access.
    pub fn set_dyn(&self, i: usize, x: f64) -> Result<(), Error> {
        if i < 1 || i > self.len.to_int() {
            return Err(Error::IndexOutOfRange(format!(
                "{} not in 1..={}",
                i,
                self.len.to_int()
            )));
        }
        self.set_at(i - 1, x);
        Ok(())
    }

    /// Copy out as a plain array.
    pub fn to_vec(&self) -> Vec<f64> {
        (0..self.len.to_int()).map(|i| self.at(i)).collect()
    }
}

impl<N, CD: Contiguity> Vector<N, CD> {
    /// Fresh vector with element `i` (1-based) set to `f(i)`.
    pub fn init(n: Size<N>, f: impl Fn(usize) -> f64) -> Vector<N, CD> {
        let data = Storage::from_fn(n.to_int(), |i| f(i + 1));
        Vector::from_raw_parts(data, 0, 1, n)
    }

    /// Copy a plain array into a vector under the caller-supplied brand.
    /// The redundant-looking length check is the price of introducing the
    /// brand from outside rather than generatively.
    pub fn of_array_dyn(n: Size<N>, a: &[f64]) -> Result<Vector<N, CD>, Error> {
        if a.len() != n.to_int() {
            return Err(Error::LengthMismatch {
                expected: n.to_int(),
                actual: a.len(),
            });
        }
        Ok(Vector::init(n, |i| a[i - 1]))
    }
}

/// Element-wise combination of two vectors of the same brand.
pub fn map2<N, CDX, CDY, CD: Contiguity>(
    f: impl Fn(f64, f64) -> f64,
    x: &Vector<N, CDX>,
    y: &Vector<N, CDY>,
) -> Vector<N, CD> {
    Vector::init(x.dim(), |i| f(x.at(i - 1), y.at(i - 1)))
}

/// Concatenation; the result length is the free brand `Add<M, N>`.
pub fn append<M, N, CDX, CDY, CD: Contiguity>(
    x: &Vector<M, CDX>,
    y: &Vector<N, CDY>,
) -> Vector<Add<M, N>, CD> {
    let m = x.dim().to_int();
    Vector::init(size::add(x.dim(), y.dim()), |i| {
        if i <= m {
            x.at(i - 1)
        } else {
            y.at(i - m - 1)
        }
    })
}

/// Prepend an element; the result length is the free brand `Succ<N>`.
pub fn cons<N, CDV, CD: Contiguity>(x: f64, v: &Vector<N, CDV>) -> Vector<Succ<N>, CD> {
    Vector::init(size::succ(v.dim()), |i| if i == 1 { x } else { v.at(i - 2) })
}

/// View of everything but the head. Nonemptiness is static: the argument
/// brand must be syntactically `Succ<N>`.
pub fn tl<N, CD>(v: &Vector<Succ<N>, CD>) -> Vector<N, Dsc> {
    let n = Size::new_unchecked(v.dim().to_int() - 1);
    Vector::from_raw_parts(v.data.clone(), v.offset + v.stride, v.stride, n)
}

/// Strided view: element `i` maps to `v[ofs + (i-1)*inc]`. Shares storage
/// with `v`, so writes through the view are visible in the parent.
pub fn subvec_dyn<N, K, CD>(
    n: Size<N>,
    ofs: usize,
    inc: usize,
    v: &Vector<K, CD>,
) -> Result<Vector<N, Dsc>, Error> {
    let len = v.dim().to_int();
    if ofs < 1 || inc < 1 || (n.to_int() > 0 && ofs + (n.to_int() - 1) * inc > len) {
        return Err(Error::SubRange(format!(
            "subvec n={} ofs={ofs} inc={inc} of a vector of length {len}",
            n.to_int()
        )));
    }
    Ok(Vector::from_raw_parts(
        v.data.clone(),
        v.offset + (ofs - 1) * v.stride,
        v.stride * inc,
        n,
    ))
}
