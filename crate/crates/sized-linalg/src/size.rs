//! Size brands and runtime size witnesses.
//!
//! A [`Size<N>`] is a plain non-negative integer whose type parameter `N`
//! pins its value: all witnesses sharing one brand hold the same number,
//! because a brand is only ever introduced together with exactly one value.
//!
//! Brands for sizes that are unknown until runtime are minted by
//! [`of_int_dyn`], which hands the witness to a caller-supplied closure
//! under a fresh, invariant lifetime. Two calls never unify, and the brand
//! cannot leak out of the closure. Sizes that are functions of other sizes
//! get *free* constructor brands instead ([`Add`], [`Min`], [`Succ`],
//! [`GeBand`]): free means no equational theory, so `Add<M, N>` and
//! `Add<N, M>` stay distinct types even though the values coincide.

use std::fmt;
use std::marker::PhantomData;

use crate::error::Error;

/// Brand minted by a generative introduction. The lifetime is invariant so
/// witnesses from distinct scopes can never be coerced into one another.
pub struct Fresh<'id>(PhantomData<fn(&'id ()) -> &'id ()>);

/// Brand for the size 0.
pub struct Zero(());

/// Free constructor brand: value is `m + n`.
pub struct Add<M, N>(PhantomData<fn(M, N)>);

/// Free constructor brand: value is `min(m, n)`.
pub struct Min<M, N>(PhantomData<fn(M, N)>);

/// Free constructor brand: value is `n + 1`.
pub struct Succ<N>(PhantomData<fn(N)>);

/// Free constructor brand for the row count `kl + ku + 1` of a band-storage
/// matrix; carrying `M` and `N` here is what lets [`crate::kernels::gbmv`]
/// skip every dynamic bound check.
pub struct GeBand<M, N, KL, KU>(PhantomData<fn(M, N, KL, KU)>);

/// A runtime element count branded with the type-level size `N`.
pub struct Size<N> {
    value: usize,
    brand: PhantomData<fn(N) -> N>,
}

impl<N> Clone for Size<N> {
    fn clone(&self) -> Self {
        *self
    }
}
impl<N> Copy for Size<N> {}

impl<N> fmt::Debug for Size<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Size({})", self.value)
    }
}

impl<N> Size<N> {
    /// Trusted constructor. Every call site must guarantee the singleton
    /// property: one brand, one value.
    pub(crate) fn new_unchecked(value: usize) -> Size<N> {
        Size {
            value,
            brand: PhantomData,
        }
    }

    pub fn to_int(self) -> usize {
        self.value
    }
}

/// The witness for [`Zero`].
pub fn zero() -> Size<Zero> {
    Size::new_unchecked(0)
}

/// Generative introduction of a runtime-determined size.
///
/// If `k` is non-negative, `body` runs exactly once with a witness of value
/// `k` under a brand distinct from the brand of every other introduction.
/// Values typed with the fresh brand cannot escape `body`: the result type
/// `R` is fixed before the brand exists.
pub fn of_int_dyn<R>(
    k: i64,
    body: impl for<'n> FnOnce(Size<Fresh<'n>>) -> R,
) -> Result<R, Error> {
    if k < 0 {
        return Err(Error::NegativeSize(k));
    }
    Ok(body(Size::new_unchecked(k as usize)))
}

/// Witness addition under the free brand `Add<M, N>`.
pub fn add<M, N>(a: Size<M>, b: Size<N>) -> Size<Add<M, N>> {
    Size::new_unchecked(a.value + b.value)
}

/// Witness minimum under the free brand `Min<M, N>`.
pub fn min_size<M, N>(a: Size<M>, b: Size<N>) -> Size<Min<M, N>> {
    Size::new_unchecked(a.value.min(b.value))
}

pub(crate) fn succ<N>(n: Size<N>) -> Size<Succ<N>> {
    Size::new_unchecked(n.value + 1)
}
