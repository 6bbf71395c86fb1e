pub fn probe() {
    use faer::Mat;
    use num_complex::Complex64;
    type C = faer::c64;
    let g1 = C::new(0.05, -0.1194);
    let m = 5usize;
    // periodic 1-exc chain: diag 0, hop -i*g1/2
    let hop = C::new(0.0, -1.0) * g1 * C::new(0.5, 0.0);
    let a = Mat::<C>::from_fn(m, m, |i, j| {
        if (i + 1) % m == j || (j + 1) % m == i { hop } else { C::new(0.0, 0.0) }
    });
    let evd = a.eigen().unwrap();
    let s = evd.S();
    let u = evd.U();
    for i in 0..m {
        println!("lambda[{}] = {}", i, s[i]);
    }
    // check residual of first eigenpair
    let mut max_res: f64 = 0.0;
    for col in 0..m {
        for row in 0..m {
            let mut acc = C::new(0.0, 0.0);
            for k in 0..m {
                acc += a[(row, k)] * u[(k, col)];
            }
            let r = acc - s[col] * u[(row, col)];
            max_res = max_res.max((r.re * r.re + r.im * r.im).sqrt());
        }
    }
    println!("max residual = {:.3e}", max_res);
    let _ = Complex64::new(1.0, 0.0);
}
