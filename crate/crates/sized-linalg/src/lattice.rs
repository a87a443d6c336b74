//! Encoding a finite subtyping lattice with phantom parameters.
//!
//! The contiguity pair `Cnt <= Dsc` used across this crate is the two-point
//! instance of a general pattern: represent each lattice point `X` by the
//! set `S_X` of atoms below it in a powerset lattice, give the encoded type
//! one phantom slot per atom, and then
//!
//! * a *producer* of `X` pins slot `i` to [`W`] when `i` is in `S_X` and
//!   leaves it a free parameter otherwise;
//! * a *consumer* of `X` leaves slot `i` free when `i` is in `S_X` and pins
//!   it to [`Z`] otherwise.
//!
//! Passing a produced value to a consumer forces unification slot by slot:
//! it succeeds exactly when `S_producer` is a subset of `S_consumer`, since
//! any atom in the producer's set but not the consumer's pins the same slot
//! to both `W` and `Z`. Subtyping checks thus compile to plain type
//! equality, with no trait machinery.
//!
//! This module instantiates the pattern for the six-point lattice
//!
//! ```text
//!        A            S_A = {1,2,3,4}
//!      / | \          S_B = {1,2}
//!     B  C  |         S_C = {1,3,4}
//!     | /|  |         S_D = {2,3}
//!     |/ |  D         S_E = {4}
//!     F  E /          S_F = {1}
//! ```
//!
//! over four atoms, giving a compile-time accept/reject matrix of all 36
//! producer/consumer pairs.

use std::marker::PhantomData;

/// Pinned by producers on atoms inside their set.
pub struct W;
/// Pinned by consumers on atoms outside their set.
pub struct Z;

/// A value whose four phantom slots encode a lattice point.
pub struct Token<S1, S2, S3, S4> {
    _slots: PhantomData<fn(S1, S2, S3, S4) -> (S1, S2, S3, S4)>,
}

impl<S1, S2, S3, S4> Token<S1, S2, S3, S4> {
    fn new() -> Self {
        Token { _slots: PhantomData }
    }
}

// producers: W on atoms in the set, free elsewhere

pub fn make_a() -> Token<W, W, W, W> {
    Token::new()
}

pub fn make_b<A3, A4>() -> Token<W, W, A3, A4> {
    Token::new()
}

pub fn make_c<A2>() -> Token<W, A2, W, W> {
    Token::new()
}

pub fn make_d<A1, A4>() -> Token<A1, W, W, A4> {
    Token::new()
}

pub fn make_e<A1, A2, A3>() -> Token<A1, A2, A3, W> {
    Token::new()
}

pub fn make_f<A2, A3, A4>() -> Token<W, A2, A3, A4> {
    Token::new()
}

// consumers: free on atoms in the set, Z elsewhere

pub fn use_as_a<A1, A2, A3, A4>(_: Token<A1, A2, A3, A4>) {}

pub fn use_as_b<A1, A2>(_: Token<A1, A2, Z, Z>) {}

pub fn use_as_c<A1, A3, A4>(_: Token<A1, Z, A3, A4>) {}

pub fn use_as_d<A2, A3>(_: Token<Z, A2, A3, Z>) {}

pub fn use_as_e<A4>(_: Token<Z, Z, Z, A4>) {}

pub fn use_as_f<A1>(_: Token<A1, Z, Z, Z>) {}
