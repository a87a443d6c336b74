//! Band storage: one dynamic check at packing time, none afterwards.

use sized_linalg::flags::{normal, trans};
use sized_linalg::kernels::{gbmv, geband_dyn};
use sized_linalg::{of_int_dyn, Cnt, Matrix, Vector};

fn main() {
    of_int_dyn(5, |m| {
        of_int_dyn(4, |n| {
            // tridiagonal-ish 5x4: one sub-, one superdiagonal
            let a: Matrix<_, _, Cnt> = Matrix::init(m, n, |i, j| {
                let (i, j) = (i as i64, j as i64);
                if (i - j).abs() <= 1 { (10 * i + j) as f64 } else { 0.0 }
            });

            of_int_dyn(1, |kl| {
                of_int_dyn(1, |ku| {
                    // kl < m and ku < n are checked here, once; the result's
                    // row brand GeBand<M,N,KL,KU> carries the proof
                    let ab: Matrix<_, _, Cnt> = geband_dyn(kl, ku, &a).unwrap();
                    println!(
                        "packed {}x{} (kl+ku+1 rows): {:?}",
                        ab.rows().to_int(),
                        ab.cols().to_int(),
                        ab.to_row_major()
                    );

                    // gbmv needs no dynamic checks at all; the explicit m
                    // witness recovers the logical row count the packed
                    // layout no longer stores
                    let x: Vector<_, Cnt> = Vector::init(n, |_| 1.0);
                    let y: Vector<_, Cnt> = gbmv(m, normal(), &ab, kl, ku, &x, 1.0, 0.0, None);
                    println!("A * ones  = {y:?}");
                    let xt: Vector<_, Cnt> = Vector::init(m, |_| 1.0);
                    let yt: Vector<_, Cnt> = gbmv(m, trans(), &ab, kl, ku, &xt, 1.0, 0.0, None);
                    println!("A' * ones = {yt:?}");
                })
                .unwrap()
            })
            .unwrap();

            // too-wide bandwidths fail at the packing boundary
            of_int_dyn(5, |kl| {
                of_int_dyn(0, |ku| {
                    println!("kl=5 on 5 rows: {}", geband_dyn::<_, _, _, _, _, Cnt>(kl, ku, &a).unwrap_err());
                })
                .unwrap()
            })
            .unwrap();
        })
        .unwrap()
    })
    .unwrap();
}
