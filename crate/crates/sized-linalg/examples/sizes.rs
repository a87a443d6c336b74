//! Size witnesses and generative brands.
//!
//! `of_int_dyn` turns a runtime integer into a `Size<N>` whose type
//! parameter is fresh and scoped to a closure. Everything sized with that
//! witness shares the brand, so length agreement needs no runtime checks.

use sized_linalg::{add, min_size, of_int_dyn, zero, Cnt, Vector};

fn main() {
    let total = of_int_dyn(4, |n| {
        // n: Size<Fresh<'_>> with value 4; every use shares the brand
        let x: Vector<_, Cnt> = Vector::init(n, |i| i as f64);
        let y: Vector<_, Cnt> = Vector::init(n, |i| (10 * i) as f64);
        // no length check happens here: the shared brand is the proof
        let s = sized_linalg::kernels::dot(&x, &y);

        // witness arithmetic: values combine, brands stay free constructors
        let m = add(n, zero());
        println!("n = {}, n + 0 = {} (brand Add<N, Zero>, not N)", n.to_int(), m.to_int());
        println!("min(n, n) = {}", min_size(n, n).to_int());
        s
    })
    .unwrap();
    println!("dot = {total}");

    // negative sizes are rejected before any brand exists
    let err = of_int_dyn(-3, |_| ()).unwrap_err();
    println!("of_int_dyn(-3) -> {err}");

    // Brands from two introductions never unify, even for equal values:
    //
    //     of_int_dyn(4, |n| of_int_dyn(4, |m| {
    //         let x: Vector<_, Cnt> = Vector::init(n, |_| 0.0);
    //         let y: Vector<_, Cnt> = Vector::init(m, |_| 0.0);
    //         sized_linalg::kernels::dot(&x, &y) // <- does not compile
    //     }));
    //
    // and a branded value cannot escape its scope: returning `x` from the
    // closure above is also a compile error.
}
