//! Batch CLI over text-file matrices and vectors.
//!
//! Inside the library, size agreement is a typing fact; here at the
//! process boundary every operand arrives with unknown dimensions, so each
//! subcommand first reconciles the raw sizes explicitly (reporting
//! `DimensionMismatch` on failure) and only then mints brands and calls
//! the typed kernels.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sized_linalg::flags::{
    conjtr, left, normal, right, svd_all, svd_no, svd_overwrite, svd_top, NormKind, SideTag,
    TransTag, UpLo,
};
use sized_linalg::io::{format_matrix, format_vector, read_raw_matrix, read_raw_vector, RawMatrix};
use sized_linalg::kernels::{gbmv, geband_dyn, gemm, lange, symm};
use sized_linalg::matrix::submat_dyn;
use sized_linalg::svd::{gesdd, gesvd, SvdResultD, SvdResultV};
use sized_linalg::vector::append;
use sized_linalg::{of_int_dyn, Cnt, Error, Fresh, Matrix, Size, Vector};

const PRECISION: usize = 17;

#[derive(Parser)]
#[command(name = "sized-linalg", about = "dimension-checked linear algebra on text files")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// C := alpha*op(A)*op(B) + beta*C
    Gemm {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        c: Option<PathBuf>,
        #[arg(long, default_value = "N")]
        transa: String,
        #[arg(long, default_value = "N")]
        transb: String,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// C := alpha*A*B + beta*C (or B*A), A symmetric
    Symm {
        #[arg(long)]
        side: String,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        c: Option<PathBuf>,
        #[arg(long, default_value = "U")]
        uplo: String,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// y := alpha*op(A)*x with A banded (kl sub-, ku superdiagonals)
    Gbmv {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        kl: usize,
        #[arg(long)]
        ku: usize,
        #[arg(long)]
        x: PathBuf,
        #[arg(long, default_value = "N")]
        trans: String,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Singular values (and vectors per --job)
    Svd {
        #[arg(long)]
        a: PathBuf,
        #[arg(long, default_value = "N")]
        job: String,
        #[arg(long, default_value = "dd")]
        driver: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Matrix norm, printed as a single float
    Norm {
        #[arg(long)]
        a: PathBuf,
        #[arg(long, default_value = "one")]
        kind: String,
    },
    /// Concatenate two vectors
    Append {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// m-by-n submatrix of A starting at (--ar, --ac)
    Submat {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        ar: usize,
        #[arg(long, default_value_t = 1)]
        ac: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

/// Generative introduction of a size already known to be a valid `usize`.
fn with_size<R>(n: usize, body: impl for<'a> FnOnce(Size<Fresh<'a>>) -> R) -> R {
    of_int_dyn(n as i64, body).expect("usize is never negative")
}

fn emit(out: Option<PathBuf>, text: String) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Dimensions of op(A) given the raw file dimensions and a transpose tag.
fn op_dims(r: &RawMatrix, tag: TransTag) -> (usize, usize) {
    match tag {
        TransTag::NoTrans => (r.rows, r.cols),
        TransTag::Trans | TransTag::ConjTrans => (r.cols, r.rows),
    }
}

fn read_c(path: &Option<PathBuf>, m: usize, n: usize) -> Result<Option<RawMatrix>, Error> {
    match path {
        None => Ok(None),
        Some(p) => {
            let r = read_raw_matrix(p)?;
            if (r.rows, r.cols) != (m, n) {
                return Err(Error::DimensionMismatch(format!(
                    "C is {}x{}, result is {m}x{n}",
                    r.rows, r.cols
                )));
            }
            Ok(Some(r))
        }
    }
}

fn parse_uplo(s: &str) -> Result<UpLo, Error> {
    match s {
        "U" => Ok(UpLo::Upper),
        "L" => Ok(UpLo::Lower),
        _ => Err(Error::Parse(format!("bad uplo flag {s:?}, expected U|L"))),
    }
}

fn run(cmd: Cmd) -> Result<(), Error> {
    match cmd {
        Cmd::Gemm {
            a,
            b,
            c,
            transa,
            transb,
            alpha,
            beta,
            out,
        } => {
            let ta: TransTag = transa.parse()?;
            let tb: TransTag = transb.parse()?;
            let ra = read_raw_matrix(&a)?;
            let rb = read_raw_matrix(&b)?;
            let (m, k) = op_dims(&ra, ta);
            let (k2, n) = op_dims(&rb, tb);
            if k != k2 {
                return Err(Error::DimensionMismatch(format!(
                    "gemm inner dimension: op(A) is {m}x{k}, op(B) is {k2}x{n}"
                )));
            }
            let rc = read_c(&c, m, n)?;
            let text = with_size(m, |mw| {
                with_size(k, |kw| {
                    with_size(n, |nw| -> Result<String, Error> {
                        let cm: Option<Matrix<_, _, Cnt>> = match &rc {
                            Some(r) => Some(Matrix::of_array_dyn(mw, nw, &r.data)?),
                            None => None,
                        };
                        let result = match (ta, tb) {
                            (TransTag::NoTrans, TransTag::NoTrans) => {
                                let am: Matrix<_, _, Cnt> = Matrix::of_array_dyn(mw, kw, &ra.data)?;
                                let bm: Matrix<_, _, Cnt> = Matrix::of_array_dyn(kw, nw, &rb.data)?;
                                gemm(normal(), &am, normal(), &bm, alpha, beta, cm)
                            }
                            (TransTag::NoTrans, tbt) => {
                                let am: Matrix<_, _, Cnt> = Matrix::of_array_dyn(mw, kw, &ra.data)?;
                                let bm: Matrix<_, _, Cnt> = Matrix::of_array_dyn(nw, kw, &rb.data)?;
                                let fb = if tbt == TransTag::ConjTrans { conjtr() } else { trans_flag() };
                                gemm(normal(), &am, fb, &bm, alpha, beta, cm)
                            }
                            (tat, TransTag::NoTrans) => {
                                let am: Matrix<_, _, Cnt> = Matrix::of_array_dyn(kw, mw, &ra.data)?;
                                let bm: Matrix<_, _, Cnt> = Matrix::of_array_dyn(kw, nw, &rb.data)?;
                                let fa = if tat == TransTag::ConjTrans { conjtr() } else { trans_flag() };
                                gemm(fa, &am, normal(), &bm, alpha, beta, cm)
                            }
                            (tat, tbt) => {
                                let am: Matrix<_, _, Cnt> = Matrix::of_array_dyn(kw, mw, &ra.data)?;
                                let bm: Matrix<_, _, Cnt> = Matrix::of_array_dyn(nw, kw, &rb.data)?;
                                let fa = if tat == TransTag::ConjTrans { conjtr() } else { trans_flag() };
                                let fb = if tbt == TransTag::ConjTrans { conjtr() } else { trans_flag() };
                                gemm(fa, &am, fb, &bm, alpha, beta, cm)
                            }
                        };
                        Ok(format_matrix(&result, PRECISION))
                    })
                })
            })?;
            emit(out, text)
        }

        Cmd::Symm {
            side,
            a,
            b,
            c,
            uplo,
            alpha,
            beta,
            out,
        } => {
            let st: SideTag = side.parse()?;
            let ul = parse_uplo(&uplo)?;
            let ra = read_raw_matrix(&a)?;
            let rb = read_raw_matrix(&b)?;
            if ra.rows != ra.cols {
                return Err(Error::DimensionMismatch(format!(
                    "symm needs square A, got {}x{}",
                    ra.rows, ra.cols
                )));
            }
            let needed = match st {
                SideTag::Left => rb.rows,
                SideTag::Right => rb.cols,
            };
            if ra.rows != needed {
                return Err(Error::DimensionMismatch(format!(
                    "symm side mismatch: A is {}x{}, B is {}x{}",
                    ra.rows, ra.cols, rb.rows, rb.cols
                )));
            }
            let rc = read_c(&c, rb.rows, rb.cols)?;
            let text = with_size(rb.rows, |mw| {
                with_size(rb.cols, |nw| -> Result<String, Error> {
                    let bm: Matrix<_, _, Cnt> = Matrix::of_array_dyn(mw, nw, &rb.data)?;
                    let cm: Option<Matrix<_, _, Cnt>> = match &rc {
                        Some(r) => Some(Matrix::of_array_dyn(mw, nw, &r.data)?),
                        None => None,
                    };
                    let result = match st {
                        SideTag::Left => {
                            let am: Matrix<_, _, Cnt> = Matrix::of_array_dyn(mw, mw, &ra.data)?;
                            symm(left(), ul, &am, &bm, alpha, beta, cm)
                        }
                        SideTag::Right => {
                            let am: Matrix<_, _, Cnt> = Matrix::of_array_dyn(nw, nw, &ra.data)?;
                            symm(right(), ul, &am, &bm, alpha, beta, cm)
                        }
                    };
                    Ok(format_matrix(&result, PRECISION))
                })
            })?;
            emit(out, text)
        }

        Cmd::Gbmv {
            a,
            kl,
            ku,
            x,
            trans,
            alpha,
            out,
        } => {
            let tt: TransTag = trans.parse()?;
            let ra = read_raw_matrix(&a)?;
            let rx = read_raw_vector(&x)?;
            let (_, xlen) = op_dims(&ra, tt);
            if rx.len() != xlen {
                return Err(Error::DimensionMismatch(format!(
                    "gbmv: op(A) has {xlen} columns, x has {} elements",
                    rx.len()
                )));
            }
            let text = with_size(ra.rows, |mw| {
                with_size(ra.cols, |nw| {
                    with_size(kl, |klw| {
                        with_size(ku, |kuw| -> Result<String, Error> {
                            let dense: Matrix<_, _, Cnt> = Matrix::of_array_dyn(mw, nw, &ra.data)?;
                            let ab: Matrix<_, _, Cnt> = geband_dyn(klw, kuw, &dense)?;
                            let result = match tt {
                                TransTag::NoTrans => {
                                    let xv: Vector<_, Cnt> = Vector::of_array_dyn(nw, &rx)?;
                                    let y: Vector<_, Cnt> =
                                        gbmv(mw, normal(), &ab, klw, kuw, &xv, alpha, 0.0, None);
                                    format_vector(&y, PRECISION)
                                }
                                tat => {
                                    let xv: Vector<_, Cnt> = Vector::of_array_dyn(mw, &rx)?;
                                    let ft = if tat == TransTag::ConjTrans { conjtr() } else { trans_flag() };
                                    let y: Vector<_, Cnt> =
                                        gbmv(mw, ft, &ab, klw, kuw, &xv, alpha, 0.0, None);
                                    format_vector(&y, PRECISION)
                                }
                            };
                            Ok(result)
                        })
                    })
                })
            })?;
            emit(out, text)
        }

        Cmd::Svd { a, job, driver, out } => {
            let jt: sized_linalg::flags::SvdJobTag = job.parse()?;
            let ra = read_raw_matrix(&a)?;
            let text = with_size(ra.rows, |mw| {
                with_size(ra.cols, |nw| -> Result<String, Error> {
                    let am: Matrix<_, _, Cnt> = Matrix::of_array_dyn(mw, nw, &ra.data)?;
                    use sized_linalg::flags::SvdJobTag as J;
                    match driver.as_str() {
                        "dd" => Ok(match jt {
                            J::All => format_svd_d(&gesdd(svd_all(), None, None, None, &am)?),
                            J::Top => format_svd_d(&gesdd(svd_top(), None, None, None, &am)?),
                            J::Overwrite => {
                                format_svd_d(&gesdd(svd_overwrite(), None, None, None, &am)?)
                            }
                            J::No => format_svd_d(&gesdd(svd_no(), None, None, None, &am)?),
                        }),
                        "vd" => Ok(match jt {
                            J::All => {
                                format_svd_v(&gesvd(svd_all(), svd_all(), None, None, None, &am)?)
                            }
                            J::Top => {
                                format_svd_v(&gesvd(svd_top(), svd_top(), None, None, None, &am)?)
                            }
                            J::Overwrite => format_svd_v(&gesvd(
                                svd_overwrite(),
                                svd_overwrite(),
                                None,
                                None,
                                None,
                                &am,
                            )?),
                            J::No => {
                                format_svd_v(&gesvd(svd_no(), svd_no(), None, None, None, &am)?)
                            }
                        }),
                        other => Err(Error::Parse(format!(
                            "bad driver {other:?}, expected dd|vd"
                        ))),
                    }
                })
            })?;
            emit(out, text)
        }

        Cmd::Norm { a, kind } => {
            let nk: NormKind = kind.parse()?;
            let ra = read_raw_matrix(&a)?;
            let value = with_size(ra.rows, |mw| {
                with_size(ra.cols, |nw| -> Result<f64, Error> {
                    let am: Matrix<_, _, Cnt> = Matrix::of_array_dyn(mw, nw, &ra.data)?;
                    Ok(lange(nk, &am))
                })
            })?;
            println!("{value:.16e}");
            Ok(())
        }

        Cmd::Append { x, y, out } => {
            let rx = read_raw_vector(&x)?;
            let ry = read_raw_vector(&y)?;
            let text = with_size(rx.len(), |nx| {
                with_size(ry.len(), |ny| -> Result<String, Error> {
                    let xv: Vector<_, Cnt> = Vector::of_array_dyn(nx, &rx)?;
                    let yv: Vector<_, Cnt> = Vector::of_array_dyn(ny, &ry)?;
                    let z: Vector<_, Cnt> = append(&xv, &yv);
                    Ok(format_vector(&z, PRECISION))
                })
            })?;
            emit(out, text)
        }

        Cmd::Submat {
            a,
            m,
            n,
            ar,
            ac,
            out,
        } => {
            let ra = read_raw_matrix(&a)?;
            let text = with_size(ra.rows, |rw| {
                with_size(ra.cols, |cw| {
                    with_size(m, |mw| {
                        with_size(n, |nw| -> Result<String, Error> {
                            let am: Matrix<_, _, Cnt> = Matrix::of_array_dyn(rw, cw, &ra.data)?;
                            let s = submat_dyn(mw, nw, ar, ac, &am)?;
                            Ok(format_matrix(&s, PRECISION))
                        })
                    })
                })
            })?;
            emit(out, text)
        }
    }
}

// `trans` the CLI flag string shadows the flag constant in scope; alias it
fn trans_flag<M, N>() -> sized_linalg::flags::Trans<M, N, N, M> {
    sized_linalg::flags::trans()
}

fn format_svd_d<M, N, UC, VR>(r: &SvdResultD<M, N, UC, VR>) -> String {
    let mut t = format_vector(&r.s, PRECISION);
    if let Some(u) = &r.u {
        t.push_str(&format_matrix(u, PRECISION));
    }
    if let Some(vt) = &r.vt {
        t.push_str(&format_matrix(vt, PRECISION));
    }
    t
}

fn format_svd_v<M, N, UC, VR>(r: &SvdResultV<M, N, UC, VR>) -> String {
    let mut t = format_vector(&r.s, PRECISION);
    t.push_str(&format_matrix(&r.u, PRECISION));
    t.push_str(&format_matrix(&r.vt, PRECISION));
    t
}
