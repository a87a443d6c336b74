//! Criteria 3-5: randomized oracle comparisons for gemm, symm and the
//! band-storage pipeline.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sized_linalg::flags::{conjtr, left, normal, right, trans, SideTag, TransTag, UpLo};
use sized_linalg::kernels::{gbmv, geband_dyn, gemm, symm};
use sized_linalg::{of_int_dyn, Cnt, Error, Fresh, Matrix, Size, Vector};

use crate::{criterion, oracle_gemm, rel_dev, transpose};

fn with_size<R>(n: usize, body: impl for<'a> FnOnce(Size<Fresh<'a>>) -> R) -> R {
    of_int_dyn(n as i64, body).unwrap()
}

fn rand_data(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.gen_range(-3.0..3.0)).collect()
}

fn mat<M, N>(m: Size<M>, n: Size<N>, row_major: &[f64]) -> Matrix<M, N, Cnt> {
    Matrix::of_array_dyn(m, n, row_major).unwrap()
}

/// Library gemm over raw row-major operands stored in their file shape
/// (`a` is k-by-m when `ta` transposes, etc.).
#[allow(clippy::too_many_arguments)]
fn typed_gemm(
    ta: TransTag,
    tb: TransTag,
    m: usize,
    k: usize,
    n: usize,
    a: &[f64],
    b: &[f64],
    alpha: f64,
    beta: f64,
    c: Option<&[f64]>,
) -> Vec<f64> {
    with_size(m, |mw| {
        with_size(k, |kw| {
            with_size(n, |nw| {
                let cm = c.map(|c| mat(mw, nw, c));
                let result = match (ta, tb) {
                    (TransTag::NoTrans, TransTag::NoTrans) => gemm(
                        normal(),
                        &mat(mw, kw, a),
                        normal(),
                        &mat(kw, nw, b),
                        alpha,
                        beta,
                        cm,
                    ),
                    (TransTag::NoTrans, tbt) => {
                        let fb = if tbt == TransTag::ConjTrans { conjtr() } else { trans() };
                        gemm(normal(), &mat(mw, kw, a), fb, &mat(nw, kw, b), alpha, beta, cm)
                    }
                    (tat, TransTag::NoTrans) => {
                        let fa = if tat == TransTag::ConjTrans { conjtr() } else { trans() };
                        gemm(fa, &mat(kw, mw, a), normal(), &mat(kw, nw, b), alpha, beta, cm)
                    }
                    (tat, tbt) => {
                        let fa = if tat == TransTag::ConjTrans { conjtr() } else { trans() };
                        let fb = if tbt == TransTag::ConjTrans { conjtr() } else { trans() };
                        gemm(fa, &mat(kw, mw, a), fb, &mat(nw, kw, b), alpha, beta, cm)
                    }
                };
                result.to_row_major()
            })
        })
    })
}

#[test]
fn criterion_3_gemm_oracle() {
    criterion("criterion 3 (gemm vs triple-loop oracle, 200 instances)", || {
        use TransTag::*;
        let combos = [
            (NoTrans, NoTrans),
            (NoTrans, Trans),
            (Trans, NoTrans),
            (Trans, Trans),
            (ConjTrans, NoTrans),
            (NoTrans, ConjTrans),
            (ConjTrans, ConjTrans),
            (Trans, ConjTrans),
        ];
        let coeffs = [0.0, 1.0, -0.5, 2.0];
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut worst = 0.0f64;
        for case in 0..200 {
            let (m, k, n) = (
                rng.gen_range(1..=8),
                rng.gen_range(1..=8),
                rng.gen_range(1..=8),
            );
            let (ta, tb) = combos[case % combos.len()];
            let alpha = coeffs[rng.gen_range(0..4)];
            let beta = coeffs[rng.gen_range(0..4)];
            let a = rand_data(&mut rng, m * k);
            let b = rand_data(&mut rng, k * n);
            let c = rand_data(&mut rng, m * n);
            let give_c = case % 3 != 2;

            // raw operands are stored pre-transposed when the flag says so
            let a_stored = if ta == NoTrans { a.clone() } else { transpose(m, k, &a) };
            let b_stored = if tb == NoTrans { b.clone() } else { transpose(k, n, &b) };

            let want = oracle_gemm(
                m,
                k,
                n,
                &a,
                &b,
                alpha,
                if give_c { beta } else { 0.0 },
                &c,
            );
            let got = typed_gemm(
                ta,
                tb,
                m,
                k,
                n,
                &a_stored,
                &b_stored,
                alpha,
                beta,
                if give_c { Some(&c) } else { None },
            );
            worst = worst.max(rel_dev(&got, &want));
        }
        assert!(worst <= 1e-12, "gemm deviates from oracle by {worst:e}");
    });
}

#[test]
fn criterion_4_symm_oracle() {
    criterion("criterion 4 (symm vs symmetrized-gemm oracle, 100 instances)", || {
        let coeffs = [0.0, 1.0, -0.5, 2.0];
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut worst = 0.0f64;
        for case in 0..100 {
            let (m, n) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
            let side = if case % 2 == 0 { SideTag::Left } else { SideTag::Right };
            let uplo = if case % 4 < 2 { UpLo::Upper } else { UpLo::Lower };
            let k = match side {
                SideTag::Left => m,
                SideTag::Right => n,
            };
            let alpha = coeffs[rng.gen_range(0..4)];
            let beta = coeffs[rng.gen_range(0..4)];
            let a = rand_data(&mut rng, k * k);
            let b = rand_data(&mut rng, m * n);
            let c = rand_data(&mut rng, m * n);

            // the oracle multiplies by the explicitly symmetrized A
            let mut asym = vec![0.0; k * k];
            for i in 0..k {
                for j in 0..k {
                    let stored = match uplo {
                        UpLo::Upper => j >= i,
                        UpLo::Lower => j <= i,
                    };
                    asym[i * k + j] = if stored { a[i * k + j] } else { a[j * k + i] };
                }
            }
            let want = match side {
                SideTag::Left => oracle_gemm(m, m, n, &asym, &b, alpha, beta, &c),
                SideTag::Right => oracle_gemm(m, n, n, &b, &asym, alpha, beta, &c),
            };

            let got = with_size(m, |mw| {
                with_size(n, |nw| {
                    let bm = mat(mw, nw, &b);
                    let cm = Some(mat(mw, nw, &c));
                    match side {
                        SideTag::Left => {
                            symm(left(), uplo, &mat(mw, mw, &a), &bm, alpha, beta, cm)
                        }
                        SideTag::Right => {
                            symm(right(), uplo, &mat(nw, nw, &a), &bm, alpha, beta, cm)
                        }
                    }
                    .to_row_major()
                })
            });
            worst = worst.max(rel_dev(&got, &want));
        }
        assert!(worst <= 1e-12, "symm deviates from oracle by {worst:e}");
    });
}

#[test]
fn criterion_5_band_pipeline() {
    criterion("criterion 5 (band storage round-trip and gbmv, 100 instances)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let (m, n) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
            let kl = rng.gen_range(0..m);
            let ku = rng.gen_range(0..n);
            // dense matrix that is exactly banded
            let mut dense = vec![0.0; m * n];
            for i in 0..m {
                for j in 0..n {
                    let in_band = j as i64 - i as i64 <= ku as i64
                        && i as i64 - j as i64 <= kl as i64;
                    if in_band {
                        dense[i * n + j] = rng.gen_range(-3.0..3.0);
                    }
                }
            }
            let x_n = rand_data(&mut rng, n);
            let x_m = rand_data(&mut rng, m);
            let alpha = rng.gen_range(-2.0..2.0);

            let want_n = oracle_gemm(m, n, 1, &dense, &x_n, alpha, 0.0, &vec![0.0; m]);
            let want_t = oracle_gemm(n, m, 1, &transpose(m, n, &dense), &x_m, alpha, 0.0, &vec![0.0; n]);

            let (unpacked, got_n, got_t) = with_size(m, |mw| {
                with_size(n, |nw| {
                    with_size(kl, |klw| {
                        with_size(ku, |kuw| {
                            let a = mat(mw, nw, &dense);
                            let ab: Matrix<_, _, Cnt> = geband_dyn(klw, kuw, &a).unwrap();
                            assert_eq!(ab.rows().to_int(), kl + ku + 1);
                            // invert the index map to reconstruct the dense matrix
                            let mut unpacked = vec![0.0; m * n];
                            for j in 1..=n {
                                for r in 1..=kl + ku + 1 {
                                    let i = r as i64 + j as i64 - ku as i64 - 1;
                                    if i >= 1 && i <= m as i64 {
                                        unpacked[(i as usize - 1) * n + (j - 1)] =
                                            ab.get_dyn(r, j).unwrap();
                                    }
                                }
                            }
                            let xn: Vector<_, Cnt> = Vector::of_array_dyn(nw, &x_n).unwrap();
                            let yn: Vector<_, Cnt> =
                                gbmv(mw, normal(), &ab, klw, kuw, &xn, alpha, 0.0, None);
                            let xm: Vector<_, Cnt> = Vector::of_array_dyn(mw, &x_m).unwrap();
                            let yt: Vector<_, Cnt> =
                                gbmv(mw, trans(), &ab, klw, kuw, &xm, alpha, 0.0, None);
                            (unpacked, yn.to_vec(), yt.to_vec())
                        })
                    })
                })
            });
            assert_eq!(unpacked, dense, "band round-trip must be exact");
            worst = worst.max(rel_dev(&got_n, &want_n));
            worst = worst.max(rel_dev(&got_t, &want_t));
        }
        assert!(worst <= 1e-12, "gbmv deviates from dense oracle by {worst:e}");

        // out-of-range bandwidths are dynamic errors
        for (m, n, kl, ku) in [(3, 4, 3, 0), (3, 4, 0, 4), (2, 2, 5, 5)] {
            let err = with_size(m, |mw| {
                with_size(n, |nw| {
                    with_size(kl, |klw| {
                        with_size(ku, |kuw| {
                            let a: Matrix<_, _, Cnt> = Matrix::init(mw, nw, |_, _| 1.0);
                            geband_dyn::<_, _, _, _, _, Cnt>(klw, kuw, &a).err()
                        })
                    })
                })
            });
            assert!(matches!(err, Some(Error::BandBound { .. })));
        }
    });
}
