// expect: accept
use sized_linalg::lattice::{make_b, make_e, make_f, use_as_a, use_as_b, use_as_c, Z};

fn main() {
    use_as_a(make_e::<Z, Z, Z>());
    use_as_b(make_b::<Z, Z>());
    use_as_b(make_f::<Z, Z, Z>());
    use_as_c(make_f::<Z, Z, Z>());
}
