// expect: accept
use sized_linalg::flags::{normal, svd_all, svd_no, svd_overwrite, trans};
use sized_linalg::kernels::{gbmv, geband_dyn};
use sized_linalg::svd::gesvd;
use sized_linalg::{of_int_dyn, Cnt, Matrix, Vector};

fn main() {
    of_int_dyn(3, |m| {
        of_int_dyn(2, |n| {
            let a: Matrix<_, _, Cnt> = Matrix::init(m, n, |i, j| (i * 2 + j) as f64);
            let r = gesvd(svd_all(), svd_no(), None, None, None, &a).unwrap();
            assert_eq!(r.u.cols().to_int(), 3);
            assert_eq!(r.vt.rows().to_int(), 0);
            let w: Matrix<_, _, Cnt> = Matrix::init(m, n, |i, j| (i + j) as f64);
            let r2 = gesvd(svd_overwrite(), svd_no(), None, None, None, &w).unwrap();
            assert_eq!(r2.u.cols().to_int(), 2);

            of_int_dyn(1, |kl| {
                let ab: Matrix<_, _, Cnt> = geband_dyn(kl, kl, &a).unwrap();
                let x: Vector<_, Cnt> = Vector::init(n, |_| 1.0);
                let y: Vector<_, Cnt> = gbmv(m, normal(), &ab, kl, kl, &x, 1.0, 0.0, None);
                assert_eq!(y.dim().to_int(), 3);
                let xt: Vector<_, Cnt> = Vector::init(m, |_| 1.0);
                let yt: Vector<_, Cnt> = gbmv(m, trans(), &ab, kl, kl, &xt, 1.0, 0.0, None);
                assert_eq!(yt.dim().to_int(), 2);
            })
            .unwrap();
        })
        .unwrap();
    })
    .unwrap();
}
