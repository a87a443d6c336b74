// expect: accept
use sized_linalg::flags::NormKind;
use sized_linalg::kernels::{dot, lange};
use sized_linalg::{loadmat, loadvec, savevec, Cnt};

fn main() {
    let dir = std::env::temp_dir();
    let vp = dir.join("ok10-v.txt");
    let mp = dir.join("ok10-m.txt");
    std::fs::write(&vp, "2\n3 4\n").unwrap();
    std::fs::write(&mp, "2 2\n1 2\n3 4\n").unwrap();
    let n2 = loadvec::<Cnt, _>(&vp, |x| {
        savevec(dir.join("ok10-out.txt"), &x, 17).unwrap();
        dot(&x, &x)
    })
    .unwrap();
    assert_eq!(n2, 25.0);
    let fro = loadmat::<Cnt, _>(&mp, |a| lange(NormKind::Frobenius, &a)).unwrap();
    assert!((fro * fro - 30.0).abs() < 1e-12);
}
