//! Singular value decomposition with job-flag-dependent result shapes.
//!
//! The job constants decide, in the types, whether factor buffers must be
//! full, thin, absent, or replaced by writing into the input's storage.

use sized_linalg::flags::{svd_all, svd_no, svd_overwrite, svd_top};
use sized_linalg::kernels::gemm;
use sized_linalg::flags::normal;
use sized_linalg::svd::{gesdd, gesvd};
use sized_linalg::{of_int_dyn, Cnt, Matrix, Vector};

fn main() {
    of_int_dyn(4, |m| {
        of_int_dyn(3, |n| {
            let a: Matrix<_, _, Cnt> = Matrix::init(m, n, |i, j| ((i * j) as f64).sin() + i as f64);

            // job N: singular values only — passing a u or vt buffer here
            // would not type-check
            let r = gesdd(svd_no(), None, None, None, &a).unwrap();
            println!("sigma = {:?}", r.s.to_vec());

            // job A: full m x m and n x n factors, caller-allocated buffers
            // (they must be Cnt: a strided view in these positions is a
            // compile error)
            let s: Vector<_, Cnt> = Vector::init(sized_linalg::min_size(m, n), |_| 0.0);
            let u: Matrix<_, _, Cnt> = Matrix::init(m, m, |_, _| 0.0);
            let vt: Matrix<_, _, Cnt> = Matrix::init(n, n, |_, _| 0.0);
            let full = gesdd(svd_all(), Some(s), Some(u), Some(vt), &a).unwrap();
            let (u, vt) = (full.u.unwrap(), full.vt.unwrap());
            println!("full factors: u {}x{}, vt {}x{}",
                u.rows().to_int(), u.cols().to_int(), vt.rows().to_int(), vt.cols().to_int());

            // job S: thin factors, allocated by the driver when no buffer
            // is supplied
            let thin = gesdd(svd_top(), None, None, None, &a).unwrap();
            let (tu, tvt) = (thin.u.unwrap(), thin.vt.unwrap());
            println!("thin factors: u {}x{}, vt {}x{}",
                tu.rows().to_int(), tu.cols().to_int(), tvt.rows().to_int(), tvt.cols().to_int());

            // reconstruction with the thin factors: A == U diag(s) Vt
            let sd: Matrix<_, _, Cnt> = Matrix::init(
                sized_linalg::min_size(m, n),
                sized_linalg::min_size(m, n),
                |i, j| if i == j { thin.s.get_dyn(i).unwrap() } else { 0.0 },
            );
            let usd: Matrix<_, _, Cnt> = gemm(normal(), &tu, normal(), &sd, 1.0, 0.0, None);
            let approx: Matrix<_, _, Cnt> = gemm(normal(), &usd, normal(), &tvt, 1.0, 0.0, None);
            let dev = a
                .to_row_major()
                .iter()
                .zip(approx.to_row_major())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0_f64, f64::max);
            println!("|A - U diag(s) Vt|_max = {dev:.2e}");

            // job O (gesdd): since m >= n here, U overwrites A's storage and
            // the driver returns Vt
            let b: Matrix<_, _, Cnt> = Matrix::init(m, n, |i, j| (i + 2 * j) as f64);
            let o = gesdd(svd_overwrite(), None, None, None, &b).unwrap();
            println!("after job O, b's first column holds u[:,1]: {:?}",
                (1..=m.to_int()).map(|i| b.get_dyn(i, 1).unwrap()).collect::<Vec<_>>());
            let ovt = o.vt.unwrap();
            println!("vt from job O: {}x{}", ovt.rows().to_int(), ovt.cols().to_int());

            // gesvd takes independent jobs per factor; requesting overwrite
            // for both is the one combination rejected at runtime
            let c: Matrix<_, _, Cnt> = Matrix::init(m, n, |i, j| (i * 3 + j) as f64);
            let v = gesvd(svd_top(), svd_no(), None, None, None, &c).unwrap();
            println!("gesvd(S, N): u is thin, vt has zero rows: {}x{} / {}x{}",
                v.u.rows().to_int(), v.u.cols().to_int(),
                v.vt.rows().to_int(), v.vt.cols().to_int());
            match gesvd(svd_overwrite(), svd_overwrite(), None, None, None, &c) {
                Ok(_) => unreachable!(),
                Err(e) => println!("gesvd(O, O): {e}"),
            }
        })
        .unwrap()
    })
    .unwrap();
}
