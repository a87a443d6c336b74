//! Shared flat storage backing vectors and matrices.
//!
//! Views alias their parent, so the element cells must be shared and
//! interior-mutable. Elements are f64 bit patterns in relaxed atomics:
//! reads may be shared freely across threads, writes require exclusive
//! access by convention (concurrent writes are not data races, just
//! unspecified interleavings).

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

#[derive(Clone)]
pub(crate) struct Storage(Arc<[AtomicU64]>);

impl Storage {
    pub fn from_fn(len: usize, f: impl Fn(usize) -> f64) -> Storage {
        let cells: Vec<AtomicU64> = (0..len).map(|i| AtomicU64::new(f(i).to_bits())).collect();
        Storage(cells.into())
    }

    pub fn get(&self, i: usize) -> f64 {
        f64::from_bits(self.0[i].load(Ordering::Relaxed))
    }

    pub fn set(&self, i: usize, x: f64) {
        self.0[i].store(x.to_bits(), Ordering::Relaxed);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}
