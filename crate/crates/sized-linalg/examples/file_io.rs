//! Reading and writing sized data from text files.
//!
//! Dimensions live in file headers, so they are only known at runtime.
//! `loadvec` / `loadmat` mint a fresh brand per load; data from two loads
//! can only interact after the dimensions are reconciled at runtime, which
//! this example does for a matrix-vector product.

use sized_linalg::kernels::dot;
use sized_linalg::matrix::row_dyn;
use sized_linalg::{loadmat, loadvec, of_int_dyn, savemat, savevec, Cnt, Matrix, Vector};

fn main() {
    let dir = std::env::temp_dir().join("sized_linalg_file_io_example");
    std::fs::create_dir_all(&dir).unwrap();
    let a_path = dir.join("a.mat");
    let x_path = dir.join("x.vec");
    let y_path = dir.join("y.vec");

    // write a 2x3 matrix and a length-3 vector
    of_int_dyn(2, |m| {
        of_int_dyn(3, |n| {
            let a: Matrix<_, _, Cnt> = Matrix::init(m, n, |i, j| (10 * i + j) as f64 / 3.0);
            let x: Vector<_, Cnt> = Vector::init(n, |i| 1.0 / i as f64);
            savemat(&a_path, &a, 17).unwrap();
            savevec(&x_path, &x, 17).unwrap();
        })
        .unwrap()
    })
    .unwrap();
    println!("a.mat:\n{}", std::fs::read_to_string(&a_path).unwrap());

    // load both; their brands are distinct even though the values match, so
    // y = A x requires an explicit runtime equality check, after which x is
    // rebuilt under the brand of A's column count
    loadmat::<Cnt, _>(&a_path, |a| {
        loadvec::<Cnt, _>(&x_path, |x| {
            let n = a.cols();
            if x.dim().to_int() != n.to_int() {
                eprintln!("dimension mismatch: {} vs {}", x.dim().to_int(), n.to_int());
                return;
            }
            let xn: Vector<_, Cnt> = Vector::of_array_dyn(n, &x.to_vec()).unwrap();
            // y_i = <row_i(A), x> -- rows and x now share the column brand
            let y: Vector<_, Cnt> =
                Vector::init(a.rows(), |i| dot(&row_dyn(i, &a).unwrap(), &xn));
            savevec(&y_path, &y, 17).unwrap();
        })
        .unwrap()
    })
    .unwrap();
    println!("y.vec:\n{}", std::fs::read_to_string(&y_path).unwrap());

    // the 17-significant-digit format round-trips f64 bit-exactly; these are
    // the same formats the `sized-linalg` command-line driver reads and
    // writes, so files produced here compose with, for example,
    //     sized-linalg norm --a a.mat --kind fro
}
