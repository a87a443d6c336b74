//! Singular value decomposition drivers `gesdd` and `gesvd`.
//!
//! The factor shapes demanded and produced by each job flag are decided by
//! the phantom instantiation of the [`crate::flags::SvdJob`] constants; the
//! numerics underneath are a one-sided Jacobi iteration, run on the taller
//! orientation of the input, which is plenty accurate at desk scale.

use crate::contiguity::{Cnt, Dsc};
use crate::error::Error;
use crate::flags::{SvdJob, SvdJobTag};
use crate::matrix::Matrix;
use crate::size::{min_size, Min, Size, Zero};
use crate::vector::Vector;

const MAX_SWEEPS: usize = 30;
/// Relative off-diagonal threshold for the rotation criterion.
const JACOBI_TOL: f64 = 1e-14;

/// Result of [`gesdd`]: factor presence is decided by the job tag alone.
pub struct SvdResultD<M, N, UC, VR> {
    /// Singular values, non-negative and non-increasing.
    pub s: Vector<Min<M, N>, Cnt>,
    pub u: Option<Matrix<M, UC, Cnt>>,
    pub vt: Option<Matrix<VR, N, Cnt>>,
}

/// Result of [`gesvd`]: both factors are always present, possibly
/// zero-sized (for `N` jobs) or views of the overwritten input (for `O`).
pub struct SvdResultV<M, N, UC, VR> {
    pub s: Vector<Min<M, N>, Cnt>,
    pub u: Matrix<M, UC, Dsc>,
    pub vt: Matrix<VR, N, Dsc>,
}

// ---------------------------------------------------------------------
// dense column-major scratch used only inside this module

struct Dense {
    m: usize,
    n: usize,
    a: Vec<f64>,
}

impl Dense {
    fn zeros(m: usize, n: usize) -> Dense {
        Dense {
            m,
            n,
            a: vec![0.0; m * n],
        }
    }

    fn identity(n: usize) -> Dense {
        let mut d = Dense::zeros(n, n);
        for i in 0..n {
            d.set(i, i, 1.0);
        }
        d
    }

    fn at(&self, i: usize, j: usize) -> f64 {
        self.a[i + j * self.m]
    }

    fn set(&mut self, i: usize, j: usize, x: f64) {
        self.a[i + j * self.m] = x;
    }

    fn col_dot(&self, p: usize, q: usize) -> f64 {
        let mut s = 0.0;
        for i in 0..self.m {
            s += self.at(i, p) * self.at(i, q);
        }
        s
    }

    fn rotate_cols(&mut self, p: usize, q: usize, c: f64, s: f64) {
        for i in 0..self.m {
            let xp = self.at(i, p);
            let xq = self.at(i, q);
            self.set(i, p, c * xp - s * xq);
            self.set(i, q, s * xp + c * xq);
        }
    }

    fn permute_cols(&mut self, order: &[usize]) {
        let mut out = Dense::zeros(self.m, self.n);
        for (jnew, &jold) in order.iter().enumerate() {
            for i in 0..self.m {
                out.set(i, jnew, self.at(i, jold));
            }
        }
        *self = out;
    }
}

/// One-sided Jacobi on a tall matrix (`m >= n`). Returns singular values in
/// descending order, `U` (`m`-by-`n`, orthonormal columns, zero-sigma
/// columns completed) and `V` (`n`-by-`n`, orthogonal).
fn one_sided_jacobi(mut w: Dense) -> Result<(Vec<f64>, Dense, Dense), Error> {
    let n = w.n;
    let mut v = Dense::identity(n);

    // rotations preserve the Frobenius norm, so this scale is loop-invariant;
    // columns below it are numerically zero and must not be rotated (the
    // relative criterion below is meaningless for pure rounding noise)
    let fro: f64 = (0..n).map(|j| w.col_dot(j, j)).sum::<f64>().sqrt();
    let tiny = f64::EPSILON * fro;

    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let app = w.col_dot(p, p);
                let aqq = w.col_dot(q, q);
                let apq = w.col_dot(p, q);
                if app.sqrt() <= tiny
                    || aqq.sqrt() <= tiny
                    || apq.abs() <= JACOBI_TOL * (app * aqq).sqrt()
                {
                    continue;
                }
                rotated = true;
                let zeta = (aqq - app) / (2.0 * apq);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                w.rotate_cols(p, q, c, s);
                v.rotate_cols(p, q, c, s);
            }
        }
        converged = !rotated;
    }
    if !converged {
        return Err(Error::NonConvergence(MAX_SWEEPS));
    }

    let mut sigma: Vec<f64> = (0..n).map(|j| w.col_dot(j, j).sqrt()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| sigma[b].partial_cmp(&sigma[a]).unwrap());
    w.permute_cols(&order);
    v.permute_cols(&order);
    sigma = order.iter().map(|&j| sigma[j]).collect();

    let mut rank = 0;
    for (j, &sj) in sigma.iter().enumerate() {
        // numerically-zero columns are rebuilt by the completion below
        // instead of normalized; their direction is rounding noise
        if sj > tiny {
            rank = j + 1;
            for i in 0..w.m {
                let x = w.at(i, j) / sj;
                w.set(i, j, x);
            }
            // sign convention: largest-magnitude entry of the U column
            // is non-negative
            let mut best = 0;
            for i in 0..w.m {
                if w.at(i, j).abs() > w.at(best, j).abs() {
                    best = i;
                }
            }
            if w.at(best, j) < 0.0 {
                for i in 0..w.m {
                    let x = -w.at(i, j);
                    w.set(i, j, x);
                }
                for i in 0..n {
                    let x = -v.at(i, j);
                    v.set(i, j, x);
                }
            }
        }
    }
    complete_orthonormal(&mut w, rank);
    Ok((sigma, w, v))
}

/// Fill columns `start..` of `u` with vectors orthonormal to the columns
/// before them (Gram-Schmidt against the best-conditioned basis vector).
fn complete_orthonormal(u: &mut Dense, start: usize) {
    for j in start..u.n {
        let mut best: Option<(f64, Vec<f64>)> = None;
        for t in 0..u.m {
            let mut cand = vec![0.0; u.m];
            cand[t] = 1.0;
            for l in 0..j {
                let proj: f64 = (0..u.m).map(|i| u.at(i, l) * cand[i]).sum();
                for i in 0..u.m {
                    cand[i] -= proj * u.at(i, l);
                }
            }
            let norm = cand.iter().map(|x| x * x).sum::<f64>().sqrt();
            if best.as_ref().map_or(true, |(bn, _)| norm > *bn) {
                best = Some((norm, cand));
            }
        }
        if let Some((norm, cand)) = best {
            for i in 0..u.m {
                u.set(i, j, cand[i] / norm);
            }
        }
    }
}

/// Shared factorization: singular values (descending, length `min`),
/// `u_thin` (`m`-by-`min`) and `v_thin` (`n`-by-`min`).
struct Factors {
    sigma: Vec<f64>,
    u_thin: Dense,
    v_thin: Dense,
}

impl Factors {
    fn u_full(&self, m: usize) -> Dense {
        let mut u = Dense::zeros(m, m);
        for j in 0..self.u_thin.n {
            for i in 0..m {
                u.set(i, j, self.u_thin.at(i, j));
            }
        }
        complete_orthonormal(&mut u, self.u_thin.n);
        u
    }

    fn v_full(&self, n: usize) -> Dense {
        let mut v = Dense::zeros(n, n);
        for j in 0..self.v_thin.n {
            for i in 0..n {
                v.set(i, j, self.v_thin.at(i, j));
            }
        }
        complete_orthonormal(&mut v, self.v_thin.n);
        v
    }
}

fn factorize<M, N, CD>(a: &Matrix<M, N, CD>) -> Result<Factors, Error> {
    let m = a.rows().to_int();
    let n = a.cols().to_int();
    if m >= n {
        let mut w = Dense::zeros(m, n);
        for j in 0..n {
            for i in 0..m {
                w.set(i, j, a.at(i, j));
            }
        }
        let (sigma, u, v) = one_sided_jacobi(w)?;
        Ok(Factors {
            sigma,
            u_thin: u,
            v_thin: v,
        })
    } else {
        // A^T = V S U^T: the Jacobi U of A^T is V of A and vice versa
        let mut w = Dense::zeros(n, m);
        for j in 0..n {
            for i in 0..m {
                w.set(j, i, a.at(i, j));
            }
        }
        let (sigma, vt_u, q) = one_sided_jacobi(w)?;
        Ok(Factors {
            sigma,
            u_thin: q,
            v_thin: vt_u,
        })
    }
}

fn emit_vector<B>(buf: Option<Vector<B, Cnt>>, fresh_len: Size<B>, src: &[f64]) -> Vector<B, Cnt> {
    match buf {
        Some(v) => {
            for (i, &x) in src.iter().enumerate() {
                v.set_at(i, x);
            }
            v
        }
        None => Vector::init(fresh_len, |i| src[i - 1]),
    }
}

fn emit_matrix<R, C>(
    buf: Option<Matrix<R, C, Cnt>>,
    rows: usize,
    cols: usize,
    src: impl Fn(usize, usize) -> f64,
) -> Matrix<R, C, Cnt> {
    match buf {
        Some(out) => {
            for j in 0..cols {
                for i in 0..rows {
                    out.set_at(i, j, src(i, j));
                }
            }
            out
        }
        None => Matrix::init(Size::new_unchecked(rows), Size::new_unchecked(cols), |i, j| {
            src(i - 1, j - 1)
        }),
    }
}

/// Divide-and-conquer-style driver: one job flag controls both factors.
///
/// Factor shapes per job: `A` gives `m`-by-`m` and `n`-by-`n`; `S` gives
/// `m`-by-`min` and `min`-by-`n`; `O` overwrites `a` with the top columns
/// of `U` when `m >= n` (returning only `V^T`) or with the top rows of
/// `V^T` when `m < n` (returning only `U`); `N` computes values only.
/// Preallocated `s`/`u`/`vt` storage is honored when given.
pub fn gesdd<M, N, UC, VR, CDA>(
    jobz: SvdJob<(UC, VR), (M, N), (Min<M, N>, Min<M, N>), (M, N), (Zero, Zero)>,
    s: Option<Vector<Min<M, N>, Cnt>>,
    u: Option<Matrix<M, UC, Cnt>>,
    vt: Option<Matrix<VR, N, Cnt>>,
    a: &Matrix<M, N, CDA>,
) -> Result<SvdResultD<M, N, UC, VR>, Error> {
    let m = a.rows().to_int();
    let n = a.cols().to_int();
    let minw = min_size(a.rows(), a.cols());
    let min = minw.to_int();
    let f = factorize(a)?;
    let s_out = emit_vector(s, minw, &f.sigma);

    let (u_out, vt_out) = match jobz.tag() {
        SvdJobTag::All => {
            let uf = f.u_full(m);
            let vf = f.v_full(n);
            (
                Some(emit_matrix(u, m, m, |i, j| uf.at(i, j))),
                Some(emit_matrix(vt, n, n, |i, j| vf.at(j, i))),
            )
        }
        SvdJobTag::Top => (
            Some(emit_matrix(u, m, min, |i, j| f.u_thin.at(i, j))),
            Some(emit_matrix(vt, min, n, |i, j| f.v_thin.at(j, i))),
        ),
        SvdJobTag::Overwrite => {
            if m >= n {
                // a receives the top min(m,n) = n columns of U
                for j in 0..n {
                    for i in 0..m {
                        a.set_at(i, j, f.u_thin.at(i, j));
                    }
                }
                let vf = f.v_full(n);
                (None, Some(emit_matrix(vt, n, n, |i, j| vf.at(j, i))))
            } else {
                // a receives the top min(m,n) = m rows of V^T
                for j in 0..n {
                    for i in 0..m {
                        a.set_at(i, j, f.v_thin.at(j, i));
                    }
                }
                let uf = f.u_full(m);
                (Some(emit_matrix(u, m, m, |i, j| uf.at(i, j))), None)
            }
        }
        SvdJobTag::No => (None, None),
    };
    Ok(SvdResultD {
        s: s_out,
        u: u_out,
        vt: vt_out,
    })
}

/// General driver: independent job flags for `U` and `V^T`.
///
/// Giving `O` for both flags is a runtime error ([`Error::BothOverwrite`]):
/// `a` cannot hold both factors. For a single `O` the factor is written
/// into `a`'s storage and the returned matrix is a view of it.
pub fn gesvd<M, N, UC, VR, CDA>(
    jobu: SvdJob<UC, M, Min<M, N>, Min<M, N>, Zero>,
    jobvt: SvdJob<VR, N, Min<M, N>, Min<M, N>, Zero>,
    s: Option<Vector<Min<M, N>, Cnt>>,
    u: Option<Matrix<M, UC, Cnt>>,
    vt: Option<Matrix<VR, N, Cnt>>,
    a: &Matrix<M, N, CDA>,
) -> Result<SvdResultV<M, N, UC, VR>, Error> {
    if jobu.tag() == SvdJobTag::Overwrite && jobvt.tag() == SvdJobTag::Overwrite {
        return Err(Error::BothOverwrite);
    }
    let m = a.rows().to_int();
    let n = a.cols().to_int();
    let minw = min_size(a.rows(), a.cols());
    let min = minw.to_int();
    let f = factorize(a)?;
    let s_out = emit_vector(s, minw, &f.sigma);

    let u_out: Matrix<M, UC, Dsc> = match jobu.tag() {
        SvdJobTag::All => {
            let uf = f.u_full(m);
            emit_matrix(u, m, m, |i, j| uf.at(i, j)).retag()
        }
        SvdJobTag::Top => emit_matrix(u, m, min, |i, j| f.u_thin.at(i, j)).retag(),
        SvdJobTag::Overwrite => {
            for j in 0..min {
                for i in 0..m {
                    a.set_at(i, j, f.u_thin.at(i, j));
                }
            }
            // view of a's first min(m,n) columns
            Matrix::from_raw_parts(
                a.storage().clone(),
                a.offset(),
                a.lda(),
                a.rows(),
                Size::new_unchecked(min),
            )
        }
        SvdJobTag::No => emit_matrix(u, m, 0, |_, _| 0.0).retag(),
    };

    let vt_out: Matrix<VR, N, Dsc> = match jobvt.tag() {
        SvdJobTag::All => {
            let vf = f.v_full(n);
            emit_matrix(vt, n, n, |i, j| vf.at(j, i)).retag()
        }
        SvdJobTag::Top => emit_matrix(vt, min, n, |i, j| f.v_thin.at(j, i)).retag(),
        SvdJobTag::Overwrite => {
            for j in 0..n {
                for i in 0..min {
                    a.set_at(i, j, f.v_thin.at(j, i));
                }
            }
            // view of a's first min(m,n) rows
            Matrix::from_raw_parts(
                a.storage().clone(),
                a.offset(),
                a.lda(),
                Size::new_unchecked(min),
                a.cols(),
            )
        }
        SvdJobTag::No => emit_matrix(vt, 0, n, |_, _| 0.0).retag(),
    };

    Ok(SvdResultV {
        s: s_out,
        u: u_out,
        vt: vt_out,
    })
}
