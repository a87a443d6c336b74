// expect: reject
// two generative introductions never share a brand, even for equal values
use sized_linalg::kernels::axpy;
use sized_linalg::{of_int_dyn, Cnt, Vector};

fn main() {
    of_int_dyn(3, |n| {
        of_int_dyn(3, |m| {
            let x: Vector<_, Cnt> = Vector::init(n, |i| i as f64);
            let y: Vector<_, Cnt> = Vector::init(m, |i| i as f64);
            axpy(1.0, &x, &y);
        })
        .unwrap();
    })
    .unwrap();
}
