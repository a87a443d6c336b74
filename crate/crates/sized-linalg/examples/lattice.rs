//! Encoding an arbitrary finite subtyping lattice with invariant type
//! parameters, so that coercions along lattice edges type-check and all
//! others fail to compile.
//!
//! Each lattice point is a set over four atoms. A producer pins the slots
//! in its set to `W` and leaves the rest as free type variables; a consumer
//! leaves the slots in its set free and pins the rest to `Z`. Unification
//! then succeeds exactly when the producer's set is contained in the
//! consumer's — i.e. exactly along the subtype edges.

use sized_linalg::lattice::{
    make_b, make_d, make_e, make_f, use_as_a, use_as_b, use_as_c, use_as_d, Z,
};

fn main() {
    // A producer's free slots are unconstrained type variables; consumers
    // whose sets cover them fix them during unification, but a consumer
    // that pins every slot (like use_as_a for top) leaves nothing to infer
    // them from, so we instantiate the free slots at Z explicitly. That is
    // the most permissive choice and never changes whether a pair unifies.

    // B <= A: S_B = {1,2} is a subset of S_A = {1,2,3,4}
    use_as_a(make_b::<Z, Z>());
    // F <= B: {1} subset of {1,2}
    use_as_b(make_f::<Z, Z, Z>());
    // F <= C: {1} subset of {1,3,4}
    use_as_c(make_f::<Z, Z, Z>());
    // D <= A and E <= C
    use_as_a(make_d::<Z, Z>());
    use_as_c(make_e::<Z, Z, Z>());
    // reflexivity
    use_as_d(make_d::<Z, Z>());

    println!("all lattice-edge coercions type-checked");

    // Incomparable or reversed pairs do not compile, e.g.:
    //     use_as_d(make_b());   // {1,2} is not a subset of {2,3}
    //     use_as_b(make_a());   // top is not below B
    //     use_as_f(make_e());   // {4} vs {1}: incomparable
}
