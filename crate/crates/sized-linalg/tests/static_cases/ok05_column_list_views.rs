// expect: accept
use sized_linalg::matrix::{col_dyn, of_cols_dyn, row_dyn, submat_dyn};
use sized_linalg::{of_int_dyn, Cnt, Vector};

fn main() {
    of_int_dyn(2, |m| {
        let c1: Vector<_, Cnt> = Vector::init(m, |i| i as f64);
        let c2: Vector<_, Cnt> = Vector::init(m, |i| (10 * i) as f64);
        of_cols_dyn::<_, _, Cnt, _>(&[c1, c2], |a| {
            let col: Vector<_, Cnt> = col_dyn(2, &a).unwrap();
            assert_eq!(col.to_vec(), vec![10.0, 20.0]);
            let row = row_dyn(1, &a).unwrap();
            assert_eq!(row.to_vec(), vec![1.0, 10.0]);
            let s = submat_dyn(a.rows(), a.cols(), 1, 1, &a).unwrap();
            assert_eq!(s.to_row_major(), a.to_row_major());
        })
        .unwrap();
    })
    .unwrap();
}
