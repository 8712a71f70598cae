use gausscomp::matrix::SymMatrix;
use gausscomp::rng::RngStream;
use gausscomp::solver;
use num_complex::Complex64;
use rand_distr::StandardNormal;
use std::time::Instant;

fn random_sym(d: usize, seed: u64) -> SymMatrix {
    let mut rng = RngStream::new(seed).rng();
    let mut e = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..=i {
            let x: f64 = rand::Rng::sample(&mut rng, StandardNormal);
            e[i * d + j] = x;
            e[j * d + i] = x;
        }
    }
    SymMatrix::from_real(d, e).unwrap()
}

fn random_herm(d: usize, seed: u64) -> SymMatrix {
    let mut rng = RngStream::new(seed).rng();
    let mut e = vec![Complex64::new(0.0, 0.0); d * d];
    for i in 0..d {
        for j in 0..i {
            let re: f64 = rand::Rng::sample(&mut rng, StandardNormal);
            let im: f64 = rand::Rng::sample(&mut rng, StandardNormal);
            e[i * d + j] = Complex64::new(re, im);
            e[j * d + i] = Complex64::new(re, -im);
        }
        let x: f64 = rand::Rng::sample(&mut rng, StandardNormal);
        e[i * d + i] = Complex64::new(x, 0.0);
    }
    SymMatrix::from_complex(d, e).unwrap()
}

fn main() {
    for &d in &[256usize, 400, 500, 999] {
        let a = random_sym(d, d as u64);
        let t = Instant::now();
        let (lo, hi) = solver::eig_extremes(&a);
        println!("real dense eig d={d}: {:?} (lo={lo:.3}, hi={hi:.3})", t.elapsed());
        let t = Instant::now();
        let (lo2, hi2) = solver::lanczos_extremes(&a, 1e-8, 10 * d, RngStream::new(3));
        println!("  lanczos d={d}: {:?} (dlo={:.2e}, dhi={:.2e})", t.elapsed(), (lo-lo2).abs(), (hi-hi2).abs());
    }
    for &d in &[256usize] {
        let a = random_herm(d, 17);
        let t = Instant::now();
        let _ = solver::eig_extremes(&a);
        println!("complex dense eig d={d}: {:?}", t.elapsed());
    }
}
