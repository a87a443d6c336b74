//! Runtime flag values whose phantom parameters encode the dimension
//! transformations they select.
//!
//! Each flag family follows one scheme: a flag type with one phantom slot
//! per dimension the flag controls, and one constant per runtime tag whose
//! phantom instantiation is exactly the shape transformation that tag
//! induces. Substituting the instantiation into the kernel's signature
//! yields the kernel's type for that flag, so shape errors under any flag
//! combination are type errors. Flags carry no size values; swapping one
//! constant for another of the same family changes types only.

use std::marker::PhantomData;
use std::str::FromStr;

use crate::error::Error;

/// Runtime tag of a transpose flag (BLAS `N` / `T` / `C`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransTag {
    NoTrans,
    Trans,
    ConjTrans,
}

/// Transpose flag mapping an `AM`-by-`AN` operand to an `M`-by-`N` one.
pub struct Trans<AM, AN, M, N> {
    tag: TransTag,
    _shape: PhantomData<fn(AM, AN) -> (M, N)>,
}

impl<AM, AN, M, N> Clone for Trans<AM, AN, M, N> {
    fn clone(&self) -> Self {
        *self
    }
}
impl<AM, AN, M, N> Copy for Trans<AM, AN, M, N> {}

impl<AM, AN, M, N> Trans<AM, AN, M, N> {
    pub fn tag(self) -> TransTag {
        self.tag
    }

    pub(crate) fn is_transposed(self) -> bool {
        self.tag != TransTag::NoTrans
    }
}

/// `op(A) = A`.
pub fn normal<M, N>() -> Trans<M, N, M, N> {
    Trans {
        tag: TransTag::NoTrans,
        _shape: PhantomData,
    }
}

/// `op(A) = A^T`.
pub fn trans<M, N>() -> Trans<M, N, N, M> {
    Trans {
        tag: TransTag::Trans,
        _shape: PhantomData,
    }
}

/// `op(A) = A^H`; identical to [`trans`] over real elements.
pub fn conjtr<M, N>() -> Trans<M, N, N, M> {
    Trans {
        tag: TransTag::ConjTrans,
        _shape: PhantomData,
    }
}

/// Runtime tag of a side flag (BLAS `L` / `R`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideTag {
    Left,
    Right,
}

/// Side flag for multiplying a `K`-by-`K` symmetric matrix onto an
/// `M`-by-`N` one: `K` unifies with `M` for [`left`] and `N` for [`right`].
pub struct Side<K, M, N> {
    tag: SideTag,
    _shape: PhantomData<fn(K, M, N)>,
}

impl<K, M, N> Clone for Side<K, M, N> {
    fn clone(&self) -> Self {
        *self
    }
}
impl<K, M, N> Copy for Side<K, M, N> {}

impl<K, M, N> Side<K, M, N> {
    pub fn tag(self) -> SideTag {
        self.tag
    }
}

/// `C := alpha*A*B + beta*C`.
pub fn left<M, N>() -> Side<M, M, N> {
    Side {
        tag: SideTag::Left,
        _shape: PhantomData,
    }
}

/// `C := alpha*B*A + beta*C`.
pub fn right<M, N>() -> Side<N, M, N> {
    Side {
        tag: SideTag::Right,
        _shape: PhantomData,
    }
}

/// Runtime tag of an SVD job flag (LAPACK `A` / `S` / `O` / `N`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvdJobTag {
    All,
    Top,
    Overwrite,
    No,
}

/// SVD job flag: the first parameter is unified with the column picked by
/// the constant, so the factor shapes demanded by each job are decided by
/// the flag value alone.
pub struct SvdJob<A, B, C, D, E> {
    tag: SvdJobTag,
    _shape: PhantomData<fn(A, B, C, D, E)>,
}

impl<A, B, C, D, E> Clone for SvdJob<A, B, C, D, E> {
    fn clone(&self) -> Self {
        *self
    }
}
impl<A, B, C, D, E> Copy for SvdJob<A, B, C, D, E> {}

impl<A, B, C, D, E> SvdJob<A, B, C, D, E> {
    pub fn tag(self) -> SvdJobTag {
        self.tag
    }
}

/// `A`: all singular vectors.
pub fn svd_all<A, C, D, E>() -> SvdJob<A, A, C, D, E> {
    SvdJob {
        tag: SvdJobTag::All,
        _shape: PhantomData,
    }
}

/// `S`: the top `min(m, n)` singular vectors.
pub fn svd_top<A, B, D, E>() -> SvdJob<A, B, A, D, E> {
    SvdJob {
        tag: SvdJobTag::Top,
        _shape: PhantomData,
    }
}

/// `O`: overwrite the input matrix with the top singular vectors.
pub fn svd_overwrite<A, B, C, E>() -> SvdJob<A, B, C, A, E> {
    SvdJob {
        tag: SvdJobTag::Overwrite,
        _shape: PhantomData,
    }
}

/// `N`: no singular vectors.
pub fn svd_no<A, B, C, D>() -> SvdJob<A, B, C, D, A> {
    SvdJob {
        tag: SvdJobTag::No,
        _shape: PhantomData,
    }
}

/// Triangle selector for symmetric input; no phantom content.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UpLo {
    #[default]
    Upper,
    Lower,
}

/// Norm selector for [`crate::kernels::lange`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NormKind {
    #[default]
    OneNorm,
    InfNorm,
    Frobenius,
    MaxAbs,
}

impl FromStr for TransTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "N" => Ok(TransTag::NoTrans),
            "T" => Ok(TransTag::Trans),
            "C" => Ok(TransTag::ConjTrans),
            _ => Err(Error::Parse(format!("bad trans flag {s:?}, expected N|T|C"))),
        }
    }
}

impl FromStr for SideTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "L" => Ok(SideTag::Left),
            "R" => Ok(SideTag::Right),
            _ => Err(Error::Parse(format!("bad side flag {s:?}, expected L|R"))),
        }
    }
}

impl FromStr for SvdJobTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" => Ok(SvdJobTag::All),
            "S" => Ok(SvdJobTag::Top),
            "O" => Ok(SvdJobTag::Overwrite),
            "N" => Ok(SvdJobTag::No),
            _ => Err(Error::Parse(format!("bad SVD job {s:?}, expected A|S|O|N"))),
        }
    }
}

impl FromStr for NormKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "one" => Ok(NormKind::OneNorm),
            "inf" => Ok(NormKind::InfNorm),
            "fro" => Ok(NormKind::Frobenius),
            "max" => Ok(NormKind::MaxAbs),
            _ => Err(Error::Parse(format!(
                "bad norm kind {s:?}, expected one|inf|fro|max"
            ))),
        }
    }
}
