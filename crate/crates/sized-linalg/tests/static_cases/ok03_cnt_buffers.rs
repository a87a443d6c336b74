// expect: accept
use sized_linalg::flags::{svd_no, svd_top};
use sized_linalg::svd::gesdd;
use sized_linalg::{min_size, of_int_dyn, Cnt, Matrix, Vector};

fn main() {
    of_int_dyn(3, |m| {
        of_int_dyn(2, |n| {
            let a: Matrix<_, _, Cnt> = Matrix::init(m, n, |i, j| (2 * i + j) as f64);
            let s: Vector<_, Cnt> = Vector::init(min_size(m, n), |_| 0.0);
            let r = gesdd(svd_no(), Some(s), None, None, &a).unwrap();
            assert!(r.s.to_vec()[0] >= r.s.to_vec()[1]);
            let u: Matrix<_, _, Cnt> = Matrix::init(m, min_size(m, n), |_, _| 0.0);
            let vt: Matrix<_, _, Cnt> = Matrix::init(min_size(m, n), n, |_, _| 0.0);
            let r2 = gesdd(svd_top(), None, Some(u), Some(vt), &a).unwrap();
            assert_eq!(r2.u.unwrap().cols().to_int(), 2);
        })
        .unwrap();
    })
    .unwrap();
}
