//! Contiguity tags for vectors and matrices.
//!
//! A vector (or matrix) is *contiguous* when it occupies a stride-1
//! (resp. `lda == rows`) slice of its backing storage, and *discrete*
//! otherwise. The tag is the third phantom parameter of
//! [`crate::Vector`] / [`crate::Matrix`]:
//!
//! * argument positions that accept either kind are generic over
//!   `CD: Contiguity`;
//! * argument positions that require contiguous storage are written
//!   `Vector<N, Cnt>`;
//! * constructors that always produce contiguous data return a free
//!   `CD` parameter so their results mix with discrete values;
//! * view operations that may be strided return `Dsc` concretely.
//!
//! This is the two-point instance of the powerset-lattice encoding in
//! [`crate::lattice`], with `Dsc` the supertype and `Cnt` the subtype.

mod sealed {
    pub trait Sealed {}
}

/// Contiguous: stride 1 / `lda == rows`.
pub struct Cnt(());

/// Discrete: possibly strided. Every contiguous layout is also a valid
/// discrete one, so tagging stride-1 data as `Dsc` is always sound.
pub struct Dsc(());

pub trait Contiguity: sealed::Sealed {}

impl sealed::Sealed for Cnt {}
impl sealed::Sealed for Dsc {}
impl Contiguity for Cnt {}
impl Contiguity for Dsc {}
