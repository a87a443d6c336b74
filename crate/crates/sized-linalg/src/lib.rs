//! Dimension-checked dense linear algebra over `f64`.
//!
//! Vector and matrix sizes live in phantom type parameters, so mismatched
//! operands are compile errors rather than runtime panics — including under
//! BLAS/LAPACK-style mode flags (transpose, side, SVD jobs), whose effect
//! on shapes is encoded in the flag values' own types. Sizes only known at
//! runtime enter the type system generatively: [`of_int_dyn`], [`loadvec`]
//! and [`loadmat`] mint a brand per introduction and scope it to a closure.
//!
//! See the `examples/` directory for a tour, one capability per example.

mod contiguity;
mod error;
mod size;
mod storage;

pub mod flags;
pub mod io;
pub mod kernels;
pub mod lattice;
pub mod matrix;
pub mod svd;
pub mod vector;

pub use contiguity::{Cnt, Contiguity, Dsc};
pub use error::Error;
pub use io::{loadmat, loadvec, savemat, savevec};
pub use matrix::Matrix;
pub use size::{add, min_size, of_int_dyn, zero, Add, Fresh, GeBand, Min, Size, Succ, Zero};
pub use vector::Vector;
