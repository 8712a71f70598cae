//! Gaussian-comparison machinery for the extreme eigenvalues of sums of
//! independent random matrices.
//!
//! The library is organized around one pipeline:
//!
//! 1. [`ensemble`] samples an independent-sum random matrix model and declares
//!    its summand statistics (`R₊`, `R₋`, `R±`) together with a matching
//!    Gaussian proxy.
//! 2. [`gaussian`] evaluates the statistics of the proxy: matrix variance σ²,
//!    weak variance σ*², interaction energy w, and the fluctuations φ, φ±.
//! 3. [`bounds`] turns those statistics into closed-form expectation and tail
//!    bounds for the extreme eigenvalues of the sum.
//! 4. [`montecarlo`] estimates the same statistics empirically, with
//!    reproducible seeded streams, and renders a verdict on each bound.
//! 5. [`applications`] packages the end-to-end experiments (regular graphs,
//!    random Pauli sums, sample covariance, sparse subspace embeddings).
//!
//! [`tracemgf`] holds numerical diagnostics for the trace-exponential
//! machinery that underpins the comparison theorems.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod applications;
pub mod bounds;
pub mod ensemble;
pub mod error;
pub mod gaussian;
pub mod matrix;
pub mod montecarlo;
pub mod rng;
pub mod solver;
pub mod tracemgf;

pub use error::{Error, Result};
pub use matrix::{Field, RectMatrix, Spectrum, SymMatrix};
pub use rng::RngStream;
