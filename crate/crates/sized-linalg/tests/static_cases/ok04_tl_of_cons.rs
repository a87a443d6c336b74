// expect: accept
use sized_linalg::vector::{cons, tl};
use sized_linalg::{of_int_dyn, Cnt, Vector};

fn main() {
    of_int_dyn(3, |n| {
        let v: Vector<_, Cnt> = Vector::init(n, |i| i as f64);
        let c: Vector<_, Cnt> = cons(7.0, &v);
        let t = tl(&c);
        assert_eq!(t.to_vec(), v.to_vec());
    })
    .unwrap();
}
