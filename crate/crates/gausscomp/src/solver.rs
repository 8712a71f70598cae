//! Eigenvalue extraction for self-adjoint matrices and operators.
//!
//! Dense symmetric/Hermitian eigensolves handle matrices up to dimension
//! 4096; beyond that, and for matrix-free operators, a Lanczos iteration
//! with full reorthogonalization extracts the extreme eigenvalues to a
//! relative tolerance of 1e-8 within at most `10 * dim` iterations.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand_distr::StandardNormal;

use crate::matrix::{Field, Spectrum, SymMatrix};
use crate::rng::RngStream;

/// Largest dimension routed to the dense full-spectrum path.
pub const DENSE_EIG_LIMIT: usize = 4096;
/// Default relative tolerance of the Lanczos extreme-eigenvalue solve.
pub const LANCZOS_TOL: f64 = 1e-8;

/// Full spectrum of a self-adjoint matrix, sorted descending.
pub fn spectrum(a: &SymMatrix) -> Spectrum {
    assert!(
        a.dim() <= DENSE_EIG_LIMIT,
        "dense eigensolve limited to dimension {DENSE_EIG_LIMIT}"
    );
    let values = if a.is_real() {
        let m = DMatrix::<f64>::from_fn(a.dim(), a.dim(), |i, j| a.get(i, j).re);
        m.symmetric_eigen().eigenvalues.as_slice().to_vec()
    } else {
        let m = DMatrix::<Complex64>::from_fn(a.dim(), a.dim(), |i, j| a.get(i, j));
        m.symmetric_eigen().eigenvalues.as_slice().to_vec()
    };
    Spectrum::from_unsorted(values)
}

/// Smallest and largest eigenvalue of a self-adjoint matrix.
pub fn eig_extremes(a: &SymMatrix) -> (f64, f64) {
    let s = spectrum(a);
    (s.min(), s.max())
}

/// λ_max of a self-adjoint matrix.
pub fn lambda_max(a: &SymMatrix) -> f64 {
    eig_extremes(a).1
}

/// λ_min of a self-adjoint matrix.
pub fn lambda_min(a: &SymMatrix) -> f64 {
    eig_extremes(a).0
}

/// Spectral norm of a self-adjoint matrix: max(λ_max, -λ_min).
pub fn sym_norm(a: &SymMatrix) -> f64 {
    let (lo, hi) = eig_extremes(a);
    hi.max(-lo)
}

/// Unit eigenvector attached to the largest eigenvalue.
pub fn top_eigenvector(a: &SymMatrix) -> Vec<Complex64> {
    let d = a.dim();
    if a.is_real() {
        let m = DMatrix::<f64>::from_fn(d, d, |i, j| a.get(i, j).re);
        let eig = m.symmetric_eigen();
        let mut idx = 0;
        for i in 1..d {
            if eig.eigenvalues[i] > eig.eigenvalues[idx] {
                idx = i;
            }
        }
        (0..d)
            .map(|i| Complex64::new(eig.eigenvectors[(i, idx)], 0.0))
            .collect()
    } else {
        let m = DMatrix::<Complex64>::from_fn(d, d, |i, j| a.get(i, j));
        let eig = m.symmetric_eigen();
        let mut idx = 0;
        for i in 1..d {
            if eig.eigenvalues[i] > eig.eigenvalues[idx] {
                idx = i;
            }
        }
        (0..d).map(|i| eig.eigenvectors[(i, idx)]).collect()
    }
}

/// A self-adjoint operator given by its action on vectors.
pub trait HermitianOp: Sync {
    fn dim(&self) -> usize;
    /// y = A x.
    fn apply(&self, x: &[Complex64], y: &mut [Complex64]);
}

impl HermitianOp for SymMatrix {
    fn dim(&self) -> usize {
        SymMatrix::dim(self)
    }

    fn apply(&self, x: &[Complex64], y: &mut [Complex64]) {
        self.matvec(x, y);
    }
}

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Extreme eigenvalues of a self-adjoint operator by Lanczos iteration with
/// full reorthogonalization. The start vector is drawn from `stream`, so the
/// result is deterministic for a fixed stream.
pub fn lanczos_extremes(op: &dyn HermitianOp, tol: f64, max_iter: usize, stream: RngStream) -> (f64, f64) {
    let d = op.dim();
    if d == 1 {
        let mut y = vec![Complex64::ZERO; 1];
        op.apply(&[Complex64::ONE], &mut y);
        return (y[0].re, y[0].re);
    }
    let mut rng = stream.rng();
    let mut v: Vec<Complex64> = (0..d)
        .map(|_| {
            let x: f64 = rand::Rng::sample(&mut rng, StandardNormal);
            Complex64::new(x, 0.0)
        })
        .collect();
    let nv = norm(&v);
    for z in v.iter_mut() {
        *z /= nv;
    }

    let max_iter = max_iter.min(d).max(2);
    let mut basis: Vec<Vec<Complex64>> = vec![v.clone()];
    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut w = vec![Complex64::ZERO; d];

    for j in 0..max_iter {
        op.apply(&basis[j], &mut w);
        if j > 0 {
            let b = betas[j - 1];
            for (wi, pi) in w.iter_mut().zip(&basis[j - 1]) {
                *wi -= pi * b;
            }
        }
        let alpha = dot(&basis[j], &w).re;
        alphas.push(alpha);
        for (wi, vi) in w.iter_mut().zip(&basis[j]) {
            *wi -= vi * alpha;
        }
        // Full reorthogonalization, twice for stability.
        for _ in 0..2 {
            for q in &basis {
                let c = dot(q, &w);
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi -= qi * c;
                }
            }
        }
        let beta = norm(&w);

        let (lo, hi, res_lo, res_hi) = tridiag_extremes(&alphas, &betas, beta);
        let scale = hi.abs().max(lo.abs()).max(1.0);
        let converged = res_lo <= tol * scale && res_hi <= tol * scale;
        if converged || beta < 1e-14 * scale || j + 1 == max_iter {
            return (lo, hi);
        }
        betas.push(beta);
        let next: Vec<Complex64> = w.iter().map(|z| z / beta).collect();
        basis.push(next);
    }
    unreachable!("lanczos loop always returns");
}

/// Extremes of the Lanczos tridiagonal together with their residual bounds
/// |beta_last * s_last|.
fn tridiag_extremes(alphas: &[f64], betas: &[f64], beta_last: f64) -> (f64, f64, f64, f64) {
    let m = alphas.len();
    let mut t = DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        t[(i, i)] = alphas[i];
        if i > 0 {
            t[(i, i - 1)] = betas[i - 1];
            t[(i - 1, i)] = betas[i - 1];
        }
    }
    let eig = t.symmetric_eigen();
    let vals: &DVector<f64> = &eig.eigenvalues;
    let mut idx_min = 0;
    let mut idx_max = 0;
    for i in 1..m {
        if vals[i] < vals[idx_min] {
            idx_min = i;
        }
        if vals[i] > vals[idx_max] {
            idx_max = i;
        }
    }
    let res_min = (beta_last * eig.eigenvectors[(m - 1, idx_min)]).abs();
    let res_max = (beta_last * eig.eigenvectors[(m - 1, idx_max)]).abs();
    (vals[idx_min], vals[idx_max], res_min, res_max)
}
