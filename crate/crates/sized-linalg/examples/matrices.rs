//! Matrix construction and views: submatrices, rows, columns.

use sized_linalg::matrix::{col_dyn, of_cols_dyn, row_dyn, submat_dyn};
use sized_linalg::{of_int_dyn, Cnt, Matrix, Vector};

fn main() {
    of_int_dyn(3, |n| {
        // element (i, j) = 3(i-1) + j, i.e. [[1,2,3],[4,5,6],[7,8,9]]
        let a: Matrix<_, _, Cnt> = Matrix::init(n, n, |i, j| ((i - 1) * 3 + j) as f64);
        println!("a = {:?}", a.to_row_major());

        of_int_dyn(2, |k| {
            let s = submat_dyn(k, k, 2, 2, &a).unwrap();
            println!("2x2 submatrix at (2,2): {:?}", s.to_row_major());
            // views alias: writes are visible in the parent
            s.set_dyn(1, 1, 50.0).unwrap();
            println!("after s[1,1] := 50, a[2,2] = {}", a.get_dyn(2, 2).unwrap());
        })
        .unwrap();

        // rows are strided views (stride = leading dimension), columns are
        // contiguous; both are checked at the 1-based index only
        let r = row_dyn(2, &a).unwrap();
        let c: Vector<_, Cnt> = col_dyn(3, &a).unwrap();
        println!("row 2 = {r:?} (stride {}), col 3 = {c:?}", r.stride());

        // out-of-range views are the dynamic part
        println!("submat too large: {}", submat_dyn(n, n, 2, 1, &a).unwrap_err());
    })
    .unwrap();

    // building a matrix from same-branded columns mints a fresh brand for
    // the column count (the list length is only known at runtime)
    of_int_dyn(2, |m| {
        let c1: Vector<_, Cnt> = Vector::of_array_dyn(m, &[1.0, 2.0]).unwrap();
        let c2: Vector<_, Cnt> = Vector::of_array_dyn(m, &[3.0, 4.0]).unwrap();
        of_cols_dyn::<_, _, Cnt, _>(&[c1, c2], |b| {
            println!("of_cols: {}x{} = {:?}", b.rows().to_int(), b.cols().to_int(), b.to_row_major());
        })
        .unwrap();
    })
    .unwrap();
}
