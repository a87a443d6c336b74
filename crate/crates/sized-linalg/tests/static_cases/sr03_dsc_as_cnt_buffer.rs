// expect: reject
// the s buffer must be contiguous; a strided view is Dsc
use sized_linalg::flags::svd_no;
use sized_linalg::svd::gesdd;
use sized_linalg::vector::subvec_dyn;
use sized_linalg::{min_size, of_int_dyn, Cnt, Matrix, Vector};

fn main() {
    of_int_dyn(3, |m| {
        of_int_dyn(2, |n| {
            let a: Matrix<_, _, Cnt> = Matrix::init(m, n, |i, j| (i + j) as f64);
            let big: Vector<_, Cnt> = Vector::init(m, |_| 0.0);
            let s = subvec_dyn(min_size(m, n), 1, 1, &big).unwrap();
            gesdd(svd_no(), Some(s), None, None, &a).unwrap();
        })
        .unwrap();
    })
    .unwrap();
}
