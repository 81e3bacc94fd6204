use faer::prelude::*;
use std::time::Instant;

fn main() {
    // API probe: thin_svd dims, S ordering, full svd V for wide matrices
    let m = Mat::<f64>::from_fn(6, 4, |i, j| ((i * 7 + j * 3) % 11) as f64 - 5.0);
    let thin = m.thin_svd().unwrap();
    println!(
        "thin: U {}x{}, S len {}, V {}x{}",
        thin.U().nrows(), thin.U().ncols(),
        thin.S().dim(),
        thin.V().nrows(), thin.V().ncols()
    );
    let s = thin.S();
    println!("S: {:?}", (0..s.dim()).map(|i| s[i]).collect::<Vec<_>>());
    let full = m.svd().unwrap();
    println!(
        "full: U {}x{}, V {}x{}",
        full.U().nrows(), full.U().ncols(),
        full.V().nrows(), full.V().ncols()
    );
    // reconstruction with thin
    let rec = thin.U() * thin.S().column_vector().as_diagonal() * thin.V().transpose();
    let mut maxdev: f64 = 0.0;
    for i in 0..6 { for j in 0..4 { maxdev = maxdev.max((rec[(i,j)] - m[(i,j)]).abs()); } }
    println!("thin reconstruction maxdev {maxdev:e}");

    let t = Instant::now();
    let big = Mat::<f64>::from_fn(3600, 144, |i, j| ((i * 37 + j * 13) % 101) as f64 / 101.0);
    let sv = big.thin_svd().unwrap();
    println!("faer thin svd 3600x144: {:?} (first s {})", t.elapsed(), sv.S()[0]);
}
