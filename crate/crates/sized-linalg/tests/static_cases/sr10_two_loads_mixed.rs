// expect: reject
// each load mints a fresh brand, even for the same file
use sized_linalg::kernels::dot;
use sized_linalg::{loadvec, Cnt};

fn main() {
    let p = std::env::temp_dir().join("sr10.txt");
    std::fs::write(&p, "2\n1 2\n").unwrap();
    loadvec::<Cnt, _>(&p, |x| {
        loadvec::<Cnt, _>(&p, |y| {
            dot(&x, &y);
        })
        .unwrap();
    })
    .unwrap();
}
