//! Pure desk-scale implementations of the typed BLAS-level operations.
//!
//! Every shape constraint is static: two operands that must agree share a
//! brand, and flag-dependent shapes come from the phantom instantiation of
//! the flag constants in [`crate::flags`]. The only dynamic checks left are
//! the band inequalities in [`geband_dyn`], which are then carried by the
//! `GeBand` brand so [`gbmv`] needs none. Kernels are plain sequential
//! loops; no blocking or reassociation.

use crate::contiguity::Contiguity;
use crate::error::Error;
use crate::flags::{NormKind, Side, SideTag, Trans, UpLo};
use crate::matrix::Matrix;
use crate::size::{GeBand, Size};
use crate::vector::Vector;

/// `y := x`; allocates when `y` is not given.
pub fn copy<N, CDX, CDY: Contiguity>(
    x: &Vector<N, CDX>,
    y: Option<Vector<N, CDY>>,
) -> Vector<N, CDY> {
    match y {
        Some(y) => {
            for i in 0..x.dim().to_int() {
                y.set_at(i, x.at(i));
            }
            y
        }
        None => Vector::init(x.dim(), |i| x.at(i - 1)),
    }
}

/// `x := alpha * x` in place.
pub fn scal<N, CD>(alpha: f64, x: &Vector<N, CD>) {
    for i in 0..x.dim().to_int() {
        x.set_at(i, alpha * x.at(i));
    }
}

/// `y := alpha * x + y` in place.
pub fn axpy<N, CDX, CDY>(alpha: f64, x: &Vector<N, CDX>, y: &Vector<N, CDY>) {
    for i in 0..x.dim().to_int() {
        y.set_at(i, alpha * x.at(i) + y.at(i));
    }
}

pub fn dot<N, CDX, CDY>(x: &Vector<N, CDX>, y: &Vector<N, CDY>) -> f64 {
    (0..x.dim().to_int()).map(|i| x.at(i) * y.at(i)).sum()
}

/// `C := alpha * op(A) * op(B) + beta * C`.
///
/// The inner dimension `K` is shared between the two flags, so a mismatch
/// under any transpose combination fails to type-check. When `c` is not
/// given a fresh zero matrix is allocated and `beta` is ignored.
pub fn gemm<AM, AK, BK, BN, M, N, K, CDA, CDB, CDC: Contiguity>(
    transa: Trans<AM, AK, M, K>,
    a: &Matrix<AM, AK, CDA>,
    transb: Trans<BK, BN, K, N>,
    b: &Matrix<BK, BN, CDB>,
    alpha: f64,
    beta: f64,
    c: Option<Matrix<M, N, CDC>>,
) -> Matrix<M, N, CDC> {
    let ta = transa.is_transposed();
    let tb = transb.is_transposed();
    let m = if ta { a.cols().to_int() } else { a.rows().to_int() };
    let k = if ta { a.rows().to_int() } else { a.cols().to_int() };
    let n = if tb { b.rows().to_int() } else { b.cols().to_int() };
    let opa = |i: usize, l: usize| if ta { a.at(l, i) } else { a.at(i, l) };
    let opb = |l: usize, j: usize| if tb { b.at(j, l) } else { b.at(l, j) };

    let c = alloc_or_scale(c, m, n, beta);
    for j in 0..n {
        for i in 0..m {
            let mut acc = 0.0;
            for l in 0..k {
                acc += opa(i, l) * opb(l, j);
            }
            c.set_at(i, j, c.at(i, j) + alpha * acc);
        }
    }
    c
}

/// `C := alpha*A*B + beta*C` (left) or `alpha*B*A + beta*C` (right), with
/// `A` symmetric; only the `uplo` triangle of `A` is read, mirrored to the
/// other one.
pub fn symm<K, M, N, CDA, CDB, CDC: Contiguity>(
    side: Side<K, M, N>,
    uplo: UpLo,
    a: &Matrix<K, K, CDA>,
    b: &Matrix<M, N, CDB>,
    alpha: f64,
    beta: f64,
    c: Option<Matrix<M, N, CDC>>,
) -> Matrix<M, N, CDC> {
    let m = b.rows().to_int();
    let n = b.cols().to_int();
    let asym = |i: usize, j: usize| {
        let stored = match uplo {
            UpLo::Upper => j >= i,
            UpLo::Lower => j <= i,
        };
        if stored {
            a.at(i, j)
        } else {
            a.at(j, i)
        }
    };

    let c = alloc_or_scale(c, m, n, beta);
    for j in 0..n {
        for i in 0..m {
            let mut acc = 0.0;
            match side.tag() {
                SideTag::Left => {
                    for l in 0..m {
                        acc += asym(i, l) * b.at(l, j);
                    }
                }
                SideTag::Right => {
                    for l in 0..n {
                        acc += b.at(i, l) * asym(l, j);
                    }
                }
            }
            c.set_at(i, j, c.at(i, j) + alpha * acc);
        }
    }
    c
}

fn alloc_or_scale<M, N, CDC: Contiguity>(
    c: Option<Matrix<M, N, CDC>>,
    m: usize,
    n: usize,
    beta: f64,
) -> Matrix<M, N, CDC> {
    match c {
        Some(c) => {
            for j in 0..n {
                for i in 0..m {
                    c.set_at(i, j, beta * c.at(i, j));
                }
            }
            c
        }
        None => Matrix::init(Size::new_unchecked(m), Size::new_unchecked(n), |_, _| 0.0),
    }
}

/// Matrix norm; needs no dynamic checks at all. Empty matrices have norm 0.
pub fn lange<M, N, CD>(norm: NormKind, a: &Matrix<M, N, CD>) -> f64 {
    let m = a.rows().to_int();
    let n = a.cols().to_int();
    match norm {
        NormKind::OneNorm => (0..n)
            .map(|j| (0..m).map(|i| a.at(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max),
        NormKind::InfNorm => (0..m)
            .map(|i| (0..n).map(|j| a.at(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max),
        NormKind::Frobenius => {
            let mut s = 0.0;
            for j in 0..n {
                for i in 0..m {
                    s += a.at(i, j) * a.at(i, j);
                }
            }
            s.sqrt()
        }
        NormKind::MaxAbs => {
            let mut s = 0.0f64;
            for j in 0..n {
                for i in 0..m {
                    s = s.max(a.at(i, j).abs());
                }
            }
            s
        }
    }
}

/// Pack an `m`-by-`n` band matrix with `kl` sub- and `ku` superdiagonals
/// into the `(kl+ku+1)`-by-`n` band-storage layout: element `(i, j)` goes
/// to row `ku+1+i-j` of column `j`. Unused slots are zero-filled.
///
/// The inequalities `kl < m` and `ku < n` are checked here, once; the
/// resulting row brand `GeBand<M, N, KL, KU>` carries them from then on.
pub fn geband_dyn<M, N, KL, KU, CDA, CDB: Contiguity>(
    kl: Size<KL>,
    ku: Size<KU>,
    a: &Matrix<M, N, CDA>,
) -> Result<Matrix<GeBand<M, N, KL, KU>, N, CDB>, Error> {
    let m = a.rows().to_int();
    let n = a.cols().to_int();
    let (klv, kuv) = (kl.to_int(), ku.to_int());
    if klv >= m || kuv >= n {
        return Err(Error::BandBound {
            kl: klv,
            ku: kuv,
            m,
            n,
        });
    }
    let height: Size<GeBand<M, N, KL, KU>> = Size::new_unchecked(klv + kuv + 1);
    Ok(Matrix::init(height, a.cols(), |r, j| {
        // r = ku+1+i-j  =>  i = r+j-ku-1
        let i = (r + j) as i64 - kuv as i64 - 1;
        if i >= 1 && i <= m as i64 {
            a.at(i as usize - 1, j - 1)
        } else {
            0.0
        }
    }))
}

/// Band matrix-vector multiply: `y := alpha * op(A) * x + beta * y` where
/// `A` is the logical `AM`-by-`AN` band matrix packed in `ab`.
///
/// No dynamic check of `kl < m` or `ku < n` is performed; the `GeBand`
/// brand of `ab` guarantees them. The explicit `m` witness is needed
/// because the packed representation does not store the logical row count.
#[allow(clippy::too_many_arguments)]
pub fn gbmv<AM, AN, KL, KU, M, N, CDAB, CDX, CDY: Contiguity>(
    m: Size<AM>,
    trans: Trans<AM, AN, M, N>,
    ab: &Matrix<GeBand<AM, AN, KL, KU>, AN, CDAB>,
    kl: Size<KL>,
    ku: Size<KU>,
    x: &Vector<N, CDX>,
    alpha: f64,
    beta: f64,
    y: Option<Vector<M, CDY>>,
) -> Vector<M, CDY> {
    let am = m.to_int();
    let an = ab.cols().to_int();
    let (klv, kuv) = (kl.to_int(), ku.to_int());
    let transposed = trans.is_transposed();
    let out_len = if transposed { an } else { am };

    let y = match y {
        Some(y) => {
            for i in 0..out_len {
                y.set_at(i, beta * y.at(i));
            }
            y
        }
        None => Vector::init(Size::new_unchecked(out_len), |_| 0.0),
    };

    for j in 1..=an {
        let lo = 1.max(j as i64 - kuv as i64) as usize;
        let hi = am.min(j + klv);
        for i in lo..=hi {
            // in-band element A(i, j) lives at band row ku+1+i-j
            let aij = ab.at(kuv + i - j, j - 1);
            if transposed {
                y.set_at(j - 1, y.at(j - 1) + alpha * aij * x.at(i - 1));
            } else {
                y.set_at(i - 1, y.at(i - 1) + alpha * aij * x.at(j - 1));
            }
        }
    }
    y
}
