//! Flag-dependent typing: the same gemm call site accepts different
//! operand shapes depending only on which flag constants are passed.

use sized_linalg::flags::{conjtr, left, normal, right, trans, UpLo};
use sized_linalg::kernels::{gemm, lange, symm};
use sized_linalg::flags::NormKind;
use sized_linalg::{of_int_dyn, Cnt, Matrix};

fn main() {
    of_int_dyn(2, |m| {
        of_int_dyn(3, |k| {
            of_int_dyn(4, |n| {
                let a: Matrix<_, _, Cnt> = Matrix::init(m, k, |i, j| (i + j) as f64); // 2x3
                let at: Matrix<_, _, Cnt> = Matrix::init(k, m, |i, j| (j + i) as f64); // 3x2
                let b: Matrix<_, _, Cnt> = Matrix::init(k, n, |i, j| (i * j) as f64); // 3x4

                // C = A B: the flag `normal` leaves shapes alone
                let c1: Matrix<_, _, Cnt> = gemm(normal(), &a, normal(), &b, 1.0, 0.0, None);
                // C = A^T B with the 3x2 operand: `trans` swaps its dims
                // *in the type*, so both calls produce a 2x4 result and a
                // shape mistake under either flag is a compile error
                let c2: Matrix<_, _, Cnt> = gemm(trans(), &at, normal(), &b, 1.0, 0.0, None);
                // conjtr is trans over the reals
                let c3: Matrix<_, _, Cnt> = gemm(conjtr(), &at, normal(), &b, -1.0, 1.0, Some(c2));
                println!("A B           = {:?}", c1.to_row_major());
                println!("A^T' B - A^T B = {:?} (zeros)", c3.to_row_major());

                // symm's side flag decides which dimension the symmetric
                // operand must share: left -> rows of B, right -> columns
                let sm: Matrix<_, _, Cnt> = Matrix::init(m, m, |i, j| (i + j) as f64);
                let sn: Matrix<_, _, Cnt> = Matrix::init(n, n, |i, j| (i * j) as f64);
                let l: Matrix<_, _, Cnt> = symm(left(), UpLo::Upper, &sm, &c1, 1.0, 0.0, None);
                let r: Matrix<_, _, Cnt> = symm(right(), UpLo::Lower, &sn, &c1, 1.0, 0.0, None);
                println!("symm left  1-norm = {}", lange(NormKind::OneNorm, &l));
                println!("symm right inf-norm = {}", lange(NormKind::InfNorm, &r));
            })
            .unwrap()
        })
        .unwrap()
    })
    .unwrap();
}
