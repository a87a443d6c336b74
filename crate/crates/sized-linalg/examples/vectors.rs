//! Vector construction, free size constructors, and strided views.

use sized_linalg::vector::{append, cons, map2, subvec_dyn, tl};
use sized_linalg::{of_int_dyn, Cnt, Vector};

fn main() {
    of_int_dyn(3, |n| {
        let x: Vector<_, Cnt> = Vector::init(n, |i| i as f64);
        let y: Vector<_, Cnt> = Vector::of_array_dyn(n, &[0.5, 0.25, 0.125]).unwrap();

        // same brand in, same brand out
        let sum: Vector<_, Cnt> = map2(|a, b| a + b, &x, &y);
        println!("x + y = {sum:?}");

        // append's result length is the free brand Add of the two inputs;
        // Add<M, N> and Add<N, M> are distinct brands, so concatenations
        // only unify when built in the same order
        let xy: Vector<_, Cnt> = append(&x, &y);
        println!("append(x, y) has length {}", xy.dim().to_int());

        // cons produces a Succ<N> brand, which is what tl demands:
        // tl on a vector without syntactic nonemptiness does not compile
        let c: Vector<_, Cnt> = cons(9.0, &x);
        println!("cons(9, x) = {c:?}, tl of it = {:?}", tl(&c));

        // views alias the parent
        of_int_dyn(2, |k| {
            let v = subvec_dyn(k, 1, 2, &x).unwrap(); // elements 1 and 3
            println!("subvec(ofs=1, inc=2) = {v:?}");
            v.set_dyn(2, -7.0).unwrap();
            println!("after writing through the view, x = {x:?}");
        })
        .unwrap();

        // the only dynamic failures are inequalities
        of_int_dyn(3, |k| {
            println!("too-long subvec: {}", subvec_dyn(k, 2, 2, &x).unwrap_err());
        })
        .unwrap();
    })
    .unwrap();
}
