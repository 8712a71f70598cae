//! Gaussian proxy models as finite Gaussian series, with their summary
//! statistics.
//!
//! A model is a mean matrix Δ plus a covariance structure realizing
//! `Z = Δ + Σ_k γ_k A_k` with iid standard normal γ_k. The statistics are
//!
//! * matrix variance  σ²(Z) = ‖Σ_k A_k²‖,
//! * weak variance    σ*²(Z) = sup_{‖u‖=1} Var[u* Z u],
//! * interaction energy w(Z) = λ_max of the Gram matrix ⟨A_k, A_l⟩,
//! * matrix fluctuation φ(Z) = E λ_max(Z − Δ) and φ±(Z) = E ‖Z − Δ‖.
//!
//! The canonical ensembles (GOE, GUE, iid rectangular, the off-diagonal
//! Wigner series) carry structured covariances with closed-form or exactly
//! computed statistics; generic coefficient lists fall back to certified
//! lower bounds for σ*². Every reported figure carries an [`Exactness`] flag.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{dilate, spectral_norm, Field, RectMatrix, SymMatrix};
use crate::rng::RngStream;
use crate::solver;

/// How a reported statistic was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    ClosedForm,
    ComputedExact,
    McEstimate,
    LowerBound,
}

/// A value with its provenance; `stderr` is zero unless `mc_estimate`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Estimate {
    pub value: f64,
    pub stderr: f64,
    pub exactness: Exactness,
}

impl Estimate {
    pub fn exact(value: f64, exactness: Exactness) -> Self {
        Estimate {
            value,
            stderr: 0.0,
            exactness,
        }
    }
}

/// Weak variance report: a certified lower bound plus an upper bound (the
/// interaction energy) for generic models, a single exact value otherwise.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct WeakVariance {
    pub value: f64,
    pub upper: f64,
    pub exactness: Exactness,
}

/// Structure tag carried in serialized models.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureTag {
    GoeScaled { scale: f64 },
    GueScaled { scale: f64 },
    IidRect { rows: usize, cols: usize, scale: f64 },
    WignerOffdiag { scale: f64 },
    Generic,
}

#[derive(Clone, Debug)]
enum Covariance {
    /// Explicit coefficient list.
    Series { dim: usize, coeffs: Vec<SymMatrix> },
    /// c · X_goe: iid N(0, c²) above the diagonal, N(0, 2c²) on it.
    Goe { dim: usize, scale: f64 },
    /// c · X_gue: iid complex standard normals (times c) above the diagonal.
    Gue { dim: usize, scale: f64 },
    /// c · Σ_{j<k} γ_jk (E_jk + E_kj): Gaussian Wigner with zero diagonal.
    WignerOffdiag { dim: usize, scale: f64 },
    /// Self-adjoint dilation of a rows×cols real matrix with iid N(0, c²) entries.
    RectIid { rows: usize, cols: usize, scale: f64 },
    /// Independent blocks.
    DirectSum { left: Box<Covariance>, right: Box<Covariance> },
}

impl Covariance {
    fn dim(&self) -> usize {
        match self {
            Covariance::Series { dim, .. } => *dim,
            Covariance::Goe { dim, .. }
            | Covariance::Gue { dim, .. }
            | Covariance::WignerOffdiag { dim, .. } => *dim,
            Covariance::RectIid { rows, cols, .. } => rows + cols,
            Covariance::DirectSum { left, right } => left.dim() + right.dim(),
        }
    }

    fn field(&self) -> Field {
        match self {
            Covariance::Series { coeffs, .. } => coeffs
                .iter()
                .map(|a| a.field())
                .fold(Field::Real, Field::join),
            Covariance::Gue { .. } => Field::Complex,
            Covariance::Goe { .. } | Covariance::WignerOffdiag { .. } | Covariance::RectIid { .. } => {
                Field::Real
            }
            Covariance::DirectSum { left, right } => left.field().join(right.field()),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Covariance::Series { coeffs, .. } => coeffs.is_empty(),
            Covariance::Goe { scale, .. }
            | Covariance::Gue { scale, .. }
            | Covariance::WignerOffdiag { scale, .. }
            | Covariance::RectIid { scale, .. } => *scale == 0.0,
            Covariance::DirectSum { left, right } => left.is_zero() && right.is_zero(),
        }
    }
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    rand::Rng::sample(rng, StandardNormal)
}

/// Gaussian self-adjoint matrix model `Z = Δ + Σ_k γ_k A_k`.
#[derive(Clone, Debug)]
pub struct GaussianModel {
    mean: SymMatrix,
    cov: Covariance,
}

impl GaussianModel {
    // --- constructors ---

    /// Gaussian orthogonal ensemble, σ² = d + 1, σ*² = w = 2.
    pub fn goe(dim: usize) -> Self {
        GaussianModel {
            mean: SymMatrix::zeros(dim, Field::Real),
            cov: Covariance::Goe { dim, scale: 1.0 },
        }
    }

    /// Gaussian unitary ensemble, σ² = d, σ*² = w = 1.
    pub fn gue(dim: usize) -> Self {
        GaussianModel {
            mean: SymMatrix::zeros(dim, Field::Complex),
            cov: Covariance::Gue { dim, scale: 1.0 },
        }
    }

    /// Self-adjoint dilation of a rows×cols real Gaussian matrix with iid
    /// standard normal entries; σ² = rows ∨ cols, σ*² = 1, w = 2.
    pub fn iid_rect(rows: usize, cols: usize) -> Self {
        GaussianModel {
            mean: SymMatrix::zeros(rows + cols, Field::Real),
            cov: Covariance::RectIid {
                rows,
                cols,
                scale: 1.0,
            },
        }
    }

    /// Gaussian Wigner series over the off-diagonal positions only; this is
    /// the proxy of the Rademacher Wigner matrix. σ² = d−1, σ*² = 2(d−1)/d.
    pub fn wigner_offdiag(dim: usize) -> Self {
        GaussianModel {
            mean: SymMatrix::zeros(dim, Field::Real),
            cov: Covariance::WignerOffdiag { dim, scale: 1.0 },
        }
    }

    /// Deterministic model (no coefficients).
    pub fn deterministic(mean: SymMatrix) -> Self {
        let dim = mean.dim();
        GaussianModel {
            mean,
            cov: Covariance::Series {
                dim,
                coeffs: Vec::new(),
            },
        }
    }

    /// Generic Gaussian series from an explicit coefficient list.
    pub fn from_series(mean: SymMatrix, coeffs: Vec<SymMatrix>) -> Result<Self> {
        let dim = mean.dim();
        for a in &coeffs {
            if a.dim() != dim {
                return Err(Error::dims(format!(
                    "coefficient dim {} vs mean dim {}",
                    a.dim(),
                    dim
                )));
            }
        }
        Ok(GaussianModel {
            mean,
            cov: Covariance::Series { dim, coeffs },
        })
    }

    /// Multiply every coefficient by `c`; the mean is unchanged.
    pub fn scale(&self, c: f64) -> Self {
        let cov = match &self.cov {
            Covariance::Series { dim, coeffs } => Covariance::Series {
                dim: *dim,
                coeffs: coeffs.iter().map(|a| a.scale(c)).collect(),
            },
            Covariance::Goe { dim, scale } => Covariance::Goe {
                dim: *dim,
                scale: scale * c.abs(),
            },
            Covariance::Gue { dim, scale } => Covariance::Gue {
                dim: *dim,
                scale: scale * c.abs(),
            },
            Covariance::WignerOffdiag { dim, scale } => Covariance::WignerOffdiag {
                dim: *dim,
                scale: scale * c.abs(),
            },
            Covariance::RectIid { rows, cols, scale } => Covariance::RectIid {
                rows: *rows,
                cols: *cols,
                scale: scale * c.abs(),
            },
            Covariance::DirectSum { .. } => Covariance::Series {
                dim: self.dim(),
                coeffs: self.to_series().into_iter().map(|a| a.scale(c)).collect(),
            },
        };
        GaussianModel {
            mean: self.mean.clone(),
            cov,
        }
    }

    /// Add `delta` to the mean; the coefficients are unchanged.
    pub fn shift(&self, delta: &SymMatrix) -> Result<Self> {
        Ok(GaussianModel {
            mean: self.mean.add(delta)?,
            cov: self.cov.clone(),
        })
    }

    /// Independent block-diagonal join of two models.
    pub fn direct_sum(&self, other: &GaussianModel) -> Self {
        GaussianModel {
            mean: self.mean.direct_sum(&other.mean),
            cov: Covariance::DirectSum {
                left: Box::new(self.cov.clone()),
                right: Box::new(other.cov.clone()),
            },
        }
    }

    // --- accessors ---

    pub fn dim(&self) -> usize {
        self.mean.dim()
    }

    pub fn mean(&self) -> &SymMatrix {
        &self.mean
    }

    pub fn field(&self) -> Field {
        self.mean.field().join(self.cov.field())
    }

    pub fn is_deterministic(&self) -> bool {
        self.cov.is_zero()
    }

    pub fn structure_tag(&self) -> StructureTag {
        match &self.cov {
            Covariance::Goe { scale, .. } => StructureTag::GoeScaled { scale: *scale },
            Covariance::Gue { scale, .. } => StructureTag::GueScaled { scale: *scale },
            Covariance::RectIid { rows, cols, scale } => StructureTag::IidRect {
                rows: *rows,
                cols: *cols,
                scale: *scale,
            },
            Covariance::WignerOffdiag { scale, .. } => StructureTag::WignerOffdiag { scale: *scale },
            Covariance::Series { .. } | Covariance::DirectSum { .. } => StructureTag::Generic,
        }
    }

    // --- sampling ---

    /// One draw Z = Δ + Σ_k γ_k A_k.
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> SymMatrix {
        let mut z = self.sample_centered(rng);
        z = z.add(&self.mean).expect("dims agree by construction");
        z
    }

    /// One centered draw Z − Δ.
    pub fn sample_centered(&self, rng: &mut ChaCha8Rng) -> SymMatrix {
        sample_cov(&self.cov, rng)
    }

    /// (λ_max, ‖·‖) of one centered draw; rectangular models avoid forming
    /// the dilation by taking the spectral norm of the rectangular draw.
    fn sample_fluctuations(&self, rng: &mut ChaCha8Rng) -> (f64, f64) {
        if let Covariance::RectIid { rows, cols, scale } = self.cov {
            let x = sample_rect_iid(rows, cols, scale, rng);
            let nrm = spectral_norm(&x);
            return (nrm, nrm);
        }
        let z = self.sample_centered(rng);
        let (lo, hi) = solver::eig_extremes(&z);
        (hi, hi.max(-lo))
    }

    // --- exact statistics ---

    /// Variance form Var[⟨Z, M⟩] = Σ_k ⟨A_k, M⟩².
    pub fn var_form(&self, m: &SymMatrix) -> Result<f64> {
        if m.dim() != self.dim() {
            return Err(Error::dims(format!("probe dim {} vs {}", m.dim(), self.dim())));
        }
        Ok(var_form_cov(&self.cov, m))
    }

    /// Matrix variance σ² = ‖Σ_k A_k²‖.
    pub fn matrix_variance(&self) -> Estimate {
        sigma2_cov(&self.cov)
    }

    /// Weak variance σ*² = sup_{‖u‖=1} Var[u* Z u]. Closed form for tagged
    /// structures; a certified lower bound (with w as the upper bound) for
    /// generic series.
    pub fn weak_variance(&self) -> WeakVariance {
        weak_cov(&self.cov)
    }

    /// Interaction energy w = λ_max of the coefficient Gram matrix.
    pub fn interaction_energy(&self) -> Estimate {
        interaction_cov(&self.cov)
    }

    // --- Monte-Carlo statistics ---

    /// Monte-Carlo estimate of φ (kind = Eig) or φ± (kind = Norm) with its
    /// standard error. Trials map to substreams of `stream`, so the result
    /// does not depend on the parallel schedule.
    pub fn fluctuation_mc(
        &self,
        trials: usize,
        stream: RngStream,
        kind: FluctuationKind,
    ) -> Result<(f64, f64)> {
        if self.is_deterministic() {
            return Ok((0.0, 0.0));
        }
        if trials < 2 {
            return Err(Error::invalid("fluctuation_mc requires at least 2 trials"));
        }
        let values: Vec<f64> = (0..trials)
            .into_par_iter()
            .map(|i| {
                let mut rng = stream.substream(i as u64).rng();
                let (eig, nrm) = self.sample_fluctuations(&mut rng);
                match kind {
                    FluctuationKind::Eig => eig,
                    FluctuationKind::Norm => nrm,
                }
            })
            .collect();
        Ok(mean_stderr(&values))
    }

    /// Matrix Khinchin brackets evaluated from σ².
    pub fn khinchin_bounds(&self) -> KhinchinBounds {
        let sigma2 = self.matrix_variance().value;
        let d = self.dim() as f64;
        KhinchinBounds {
            phi_upper_eig: (2.0 * sigma2 * d.ln()).sqrt(),
            phi_pm_upper: (2.0 * sigma2 * (2.0 * d).ln()).sqrt(),
            phi_pm_lower: (2.0 / std::f64::consts::PI * sigma2).sqrt(),
        }
    }

    /// Intrinsic-freeness bound 2√σ² + const · (σ² w log³ d)^{1/4}.
    pub fn intrinsic_freeness_upper(&self, constant: f64) -> Result<f64> {
        if constant <= 0.0 {
            return Err(Error::invalid("constant must be positive"));
        }
        let sigma2 = self.matrix_variance().value;
        let w = self.interaction_energy().value;
        let logd = (self.dim() as f64).ln();
        Ok(2.0 * sigma2.sqrt() + constant * (sigma2 * w * logd.powi(3)).powf(0.25))
    }

    /// Full statistics report; φ and φ± are estimated with `mc_trials` draws.
    pub fn stats(&self, mc_trials: usize, stream: RngStream) -> Result<GaussianStats> {
        let weak = self.weak_variance();
        let (phi, phi_pm) = if self.is_deterministic() {
            (
                Estimate::exact(0.0, Exactness::ClosedForm),
                Estimate::exact(0.0, Exactness::ClosedForm),
            )
        } else {
            let pairs: Vec<(f64, f64)> = (0..mc_trials.max(2))
                .into_par_iter()
                .map(|i| {
                    let mut rng = stream.substream(i as u64).rng();
                    self.sample_fluctuations(&mut rng)
                })
                .collect();
            let eig: Vec<f64> = pairs.iter().map(|p| p.0).collect();
            let nrm: Vec<f64> = pairs.iter().map(|p| p.1).collect();
            let (m1, s1) = mean_stderr(&eig);
            let (m2, s2) = mean_stderr(&nrm);
            (
                Estimate {
                    value: m1,
                    stderr: s1,
                    exactness: Exactness::McEstimate,
                },
                Estimate {
                    value: m2,
                    stderr: s2,
                    exactness: Exactness::McEstimate,
                },
            )
        };
        Ok(GaussianStats {
            dim: self.dim(),
            structure_tag: self.structure_tag(),
            sigma2: self.matrix_variance(),
            sigma_star2: Estimate::exact(weak.value, weak.exactness),
            sigma_star2_upper: weak.upper,
            w: self.interaction_energy(),
            phi,
            phi_pm,
        })
    }

    /// Materialize the coefficient list (intended for small dimensions; a
    /// tagged model of dimension d expands to O(d²) dense coefficients).
    pub fn to_series(&self) -> Vec<SymMatrix> {
        series_of(&self.cov)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FluctuationKind {
    Eig,
    Norm,
}

/// Khinchin-type closed-form brackets on φ and φ±.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct KhinchinBounds {
    /// φ ≤ √(2 σ² log d)
    pub phi_upper_eig: f64,
    /// φ± ≤ √(2 σ² log 2d)
    pub phi_pm_upper: f64,
    /// φ± ≥ √((2/π) σ²)
    pub phi_pm_lower: f64,
}

/// Statistics report for a Gaussian model.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GaussianStats {
    pub dim: usize,
    pub structure_tag: StructureTag,
    pub sigma2: Estimate,
    pub sigma_star2: Estimate,
    /// Upper companion of σ*²: equals σ*² when exact, w for generic series.
    pub sigma_star2_upper: f64,
    pub w: Estimate,
    pub phi: Estimate,
    pub phi_pm: Estimate,
}

pub(crate) fn mean_stderr(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    let mean = values.iter().sum::<f64>() / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n as f64 - 1.0);
    (mean, (var / n as f64).sqrt())
}

// --- covariance internals ---

fn sample_rect_iid(rows: usize, cols: usize, scale: f64, rng: &mut ChaCha8Rng) -> RectMatrix {
    let mut x = RectMatrix::zeros(rows, cols, Field::Real);
    for i in 0..rows {
        for j in 0..cols {
            x.set(i, j, Complex64::new(scale * normal(rng), 0.0));
        }
    }
    x
}

fn sample_cov(cov: &Covariance, rng: &mut ChaCha8Rng) -> SymMatrix {
    match cov {
        Covariance::Series { dim, coeffs } => {
            let mut z = SymMatrix::zeros(*dim, Field::Real);
            for a in coeffs {
                z.axpy(normal(rng), a);
            }
            z
        }
        Covariance::Goe { dim, scale } => {
            let d = *dim;
            let mut e = vec![Complex64::ZERO; d * d];
            for i in 0..d {
                e[i * d + i] = Complex64::new(scale * std::f64::consts::SQRT_2 * normal(rng), 0.0);
                for j in (i + 1)..d {
                    let v = Complex64::new(scale * normal(rng), 0.0);
                    e[i * d + j] = v;
                    e[j * d + i] = v;
                }
            }
            SymMatrix::from_parts_unchecked(d, Field::Real, e)
        }
        Covariance::Gue { dim, scale } => {
            let d = *dim;
            let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
            let mut e = vec![Complex64::ZERO; d * d];
            for i in 0..d {
                e[i * d + i] = Complex64::new(scale * normal(rng), 0.0);
                for j in (i + 1)..d {
                    let v = Complex64::new(
                        scale * inv_sqrt2 * normal(rng),
                        scale * inv_sqrt2 * normal(rng),
                    );
                    e[i * d + j] = v;
                    e[j * d + i] = v.conj();
                }
            }
            SymMatrix::from_parts_unchecked(d, Field::Complex, e)
        }
        Covariance::WignerOffdiag { dim, scale } => {
            let d = *dim;
            let mut e = vec![Complex64::ZERO; d * d];
            for i in 0..d {
                for j in (i + 1)..d {
                    let v = Complex64::new(scale * normal(rng), 0.0);
                    e[i * d + j] = v;
                    e[j * d + i] = v;
                }
            }
            SymMatrix::from_parts_unchecked(d, Field::Real, e)
        }
        Covariance::RectIid { rows, cols, scale } => {
            dilate(&sample_rect_iid(*rows, *cols, *scale, rng))
        }
        Covariance::DirectSum { left, right } => {
            let a = sample_cov(left, rng);
            let b = sample_cov(right, rng);
            a.direct_sum(&b)
        }
    }
}

fn var_form_cov(cov: &Covariance, m: &SymMatrix) -> f64 {
    match cov {
        Covariance::Series { coeffs, .. } => coeffs.iter().map(|a| a.inner(m).powi(2)).sum(),
        Covariance::Goe { scale, .. } => 2.0 * scale * scale * m.frobenius_norm().powi(2),
        Covariance::Gue { scale, .. } => scale * scale * m.frobenius_norm().powi(2),
        Covariance::WignerOffdiag { dim, scale } => {
            // Σ_{j<k} ⟨E_jk + E_kj, M⟩² = Σ_{j<k} (2 Re m_jk)²
            let d = *dim;
            let mut acc = 0.0;
            for j in 0..d {
                for k in (j + 1)..d {
                    acc += (2.0 * m.get(j, k).re).powi(2);
                }
            }
            scale * scale * acc
        }
        Covariance::RectIid { rows, cols, scale } => {
            // ⟨H(E_jk), M⟩ = 2 Re m12_jk for the off-diagonal block M12.
            let mut acc = 0.0;
            for j in 0..*rows {
                for k in 0..*cols {
                    acc += (2.0 * m.get(j, rows + k).re).powi(2);
                }
            }
            scale * scale * acc
        }
        Covariance::DirectSum { left, right } => {
            let m1 = principal_block(m, 0, left.dim());
            let m2 = principal_block(m, left.dim(), right.dim());
            var_form_cov(left, &m1) + var_form_cov(right, &m2)
        }
    }
}

fn principal_block(m: &SymMatrix, offset: usize, size: usize) -> SymMatrix {
    let mut e = vec![Complex64::ZERO; size * size];
    for i in 0..size {
        for j in 0..size {
            e[i * size + j] = m.get(offset + i, offset + j);
        }
    }
    SymMatrix::from_parts_unchecked(size, m.field(), e)
}

fn sigma2_cov(cov: &Covariance) -> Estimate {
    match cov {
        Covariance::Series { dim, coeffs } => {
            if coeffs.is_empty() {
                return Estimate::exact(0.0, Exactness::ComputedExact);
            }
            let mut sq = SymMatrix::zeros(*dim, Field::Real);
            for a in coeffs {
                sq = sq.add(&a.square()).expect("dims agree");
            }
            Estimate::exact(solver::lambda_max(&sq), Exactness::ComputedExact)
        }
        Covariance::Goe { dim, scale } => {
            Estimate::exact(scale * scale * (*dim as f64 + 1.0), Exactness::ClosedForm)
        }
        Covariance::Gue { dim, scale } => {
            Estimate::exact(scale * scale * *dim as f64, Exactness::ClosedForm)
        }
        Covariance::WignerOffdiag { dim, scale } => {
            // Σ_{j<k} (E_jk + E_kj)² = (d−1) I
            Estimate::exact(scale * scale * (*dim as f64 - 1.0), Exactness::ComputedExact)
        }
        Covariance::RectIid { rows, cols, scale } => Estimate::exact(
            scale * scale * (*rows).max(*cols) as f64,
            Exactness::ClosedForm,
        ),
        Covariance::DirectSum { left, right } => {
            let a = sigma2_cov(left);
            let b = sigma2_cov(right);
            Estimate::exact(
                a.value.max(b.value),
                weaker_exactness(a.exactness, b.exactness),
            )
        }
    }
}

fn weaker_exactness(a: Exactness, b: Exactness) -> Exactness {
    use Exactness::*;
    match (a, b) {
        (LowerBound, _) | (_, LowerBound) => LowerBound,
        (McEstimate, _) | (_, McEstimate) => McEstimate,
        (ComputedExact, _) | (_, ComputedExact) => ComputedExact,
        _ => ClosedForm,
    }
}

fn interaction_cov(cov: &Covariance) -> Estimate {
    match cov {
        Covariance::Series { coeffs, .. } => {
            if coeffs.is_empty() {
                return Estimate::exact(0.0, Exactness::ComputedExact);
            }
            let m = coeffs.len();
            let mut gram = vec![0.0; m * m];
            for k in 0..m {
                for l in k..m {
                    let v = coeffs[k].inner(&coeffs[l]);
                    gram[k * m + l] = v;
                    gram[l * m + k] = v;
                }
            }
            let g = SymMatrix::from_real(m, gram).expect("gram is symmetric");
            Estimate::exact(solver::lambda_max(&g), Exactness::ComputedExact)
        }
        Covariance::Goe { scale, .. } | Covariance::WignerOffdiag { scale, .. } => {
            Estimate::exact(2.0 * scale * scale, Exactness::ClosedForm)
        }
        Covariance::Gue { scale, .. } => Estimate::exact(scale * scale, Exactness::ClosedForm),
        Covariance::RectIid { scale, .. } => {
            Estimate::exact(2.0 * scale * scale, Exactness::ClosedForm)
        }
        Covariance::DirectSum { left, right } => {
            let a = interaction_cov(left);
            let b = interaction_cov(right);
            Estimate::exact(
                a.value.max(b.value),
                weaker_exactness(a.exactness, b.exactness),
            )
        }
    }
}

fn weak_cov(cov: &Covariance) -> WeakVariance {
    match cov {
        Covariance::Goe { scale, .. } => exact_weak(2.0 * scale * scale, Exactness::ClosedForm),
        Covariance::Gue { scale, .. } => exact_weak(scale * scale, Exactness::ClosedForm),
        Covariance::RectIid { scale, .. } => exact_weak(scale * scale, Exactness::ClosedForm),
        Covariance::WignerOffdiag { dim, scale } => {
            // sup_u 2c² (1 − Σ_j u_j⁴) = 2c² (d−1)/d, attained at the flat vector.
            let d = *dim as f64;
            exact_weak(2.0 * scale * scale * (d - 1.0) / d, Exactness::ComputedExact)
        }
        Covariance::Series { dim, coeffs } => {
            if coeffs.is_empty() {
                return exact_weak(0.0, Exactness::ComputedExact);
            }
            let lower = series_weak_lower(*dim, coeffs);
            let upper = interaction_cov(cov).value;
            WeakVariance {
                value: lower,
                upper,
                exactness: Exactness::LowerBound,
            }
        }
        Covariance::DirectSum { left, right } => {
            // sup splits across blocks: max of the two block suprema.
            let a = weak_cov(left);
            let b = weak_cov(right);
            WeakVariance {
                value: a.value.max(b.value),
                upper: a.upper.max(b.upper),
                exactness: weaker_exactness(a.exactness, b.exactness),
            }
        }
    }
}

fn exact_weak(value: f64, exactness: Exactness) -> WeakVariance {
    WeakVariance {
        value,
        upper: value,
        exactness,
    }
}

/// Multi-start projected ascent of u ↦ Σ_k (u* A_k u)² over the unit sphere.
/// Starts: the top eigenvector of each coefficient, padded with random unit
/// vectors to 32 starts; 200 normalized-gradient iterations each. Returns the
/// best objective value seen, a certified lower bound on σ*².
fn series_weak_lower(dim: usize, coeffs: &[SymMatrix]) -> f64 {
    const STARTS: usize = 32;
    const ITERS: usize = 200;
    let complex = coeffs.iter().any(|a| !a.is_real());

    let mut starts: Vec<Vec<Complex64>> = coeffs
        .iter()
        .take(STARTS)
        .map(solver::top_eigenvector)
        .collect();
    let stream = RngStream::new(0x5745_414b);
    let mut idx = 0u64;
    while starts.len() < STARTS {
        let mut rng = stream.substream(idx).rng();
        idx += 1;
        let mut u: Vec<Complex64> = (0..dim)
            .map(|_| {
                let re = normal(&mut rng);
                let im = if complex { normal(&mut rng) } else { 0.0 };
                Complex64::new(re, im)
            })
            .collect();
        normalize(&mut u);
        starts.push(u);
    }

    let objective =
        |u: &[Complex64]| -> f64 { coeffs.iter().map(|a| a.quad_form(u).powi(2)).sum() };

    let mut best = 0.0f64;
    let mut au = vec![Complex64::ZERO; dim];
    for mut u in starts {
        best = best.max(objective(&u));
        for it in 0..ITERS {
            // gradient: 4 Σ_k (u* A_k u) A_k u
            let mut grad = vec![Complex64::ZERO; dim];
            for a in coeffs {
                let q = a.quad_form(&u);
                if q == 0.0 {
                    continue;
                }
                a.matvec(&u, &mut au);
                for (g, v) in grad.iter_mut().zip(&au) {
                    *g += v * (4.0 * q);
                }
            }
            let gn = grad.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if gn < 1e-15 {
                break;
            }
            let step = 0.3 / (1.0 + it as f64 / 50.0);
            for (ui, g) in u.iter_mut().zip(&grad) {
                *ui += g * (step / gn);
            }
            normalize(&mut u);
            best = best.max(objective(&u));
        }
    }
    best
}

fn normalize(u: &mut [Complex64]) {
    let n = u.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if n > 0.0 {
        for z in u.iter_mut() {
            *z /= n;
        }
    }
}

fn series_of(cov: &Covariance) -> Vec<SymMatrix> {
    match cov {
        Covariance::Series { coeffs, .. } => coeffs.clone(),
        Covariance::Goe { dim, scale } => {
            let d = *dim;
            let mut out = Vec::with_capacity(d * (d + 1) / 2);
            for j in 0..d {
                for k in (j + 1)..d {
                    out.push(basis_sym(d, j, k, *scale));
                }
            }
            for j in 0..d {
                let mut diag = vec![0.0; d];
                diag[j] = scale * std::f64::consts::SQRT_2;
                out.push(SymMatrix::diagonal(&diag));
            }
            out
        }
        Covariance::Gue { dim, scale } => {
            let d = *dim;
            let c = scale * std::f64::consts::FRAC_1_SQRT_2;
            let mut out = Vec::new();
            for j in 0..d {
                for k in (j + 1)..d {
                    out.push(basis_sym(d, j, k, c));
                    out.push(basis_antisym(d, j, k, c));
                }
            }
            for j in 0..d {
                let mut diag = vec![0.0; d];
                diag[j] = *scale;
                out.push(SymMatrix::diagonal(&diag));
            }
            out
        }
        Covariance::WignerOffdiag { dim, scale } => {
            let d = *dim;
            let mut out = Vec::with_capacity(d * (d - 1) / 2);
            for j in 0..d {
                for k in (j + 1)..d {
                    out.push(basis_sym(d, j, k, *scale));
                }
            }
            out
        }
        Covariance::RectIid { rows, cols, scale } => {
            let mut out = Vec::with_capacity(rows * cols);
            for j in 0..*rows {
                for k in 0..*cols {
                    let mut rect = RectMatrix::zeros(*rows, *cols, Field::Real);
                    rect.set(j, k, Complex64::new(*scale, 0.0));
                    out.push(dilate(&rect));
                }
            }
            out
        }
        Covariance::DirectSum { left, right } => {
            let dl = left.dim();
            let dr = right.dim();
            let mut out = Vec::new();
            for a in series_of(left) {
                out.push(a.direct_sum(&SymMatrix::zeros(dr, Field::Real)));
            }
            for b in series_of(right) {
                out.push(SymMatrix::zeros(dl, Field::Real).direct_sum(&b));
            }
            out
        }
    }
}

/// c · (E_jk + E_kj)
fn basis_sym(d: usize, j: usize, k: usize, c: f64) -> SymMatrix {
    let mut e = vec![Complex64::ZERO; d * d];
    e[j * d + k] = Complex64::new(c, 0.0);
    e[k * d + j] = Complex64::new(c, 0.0);
    SymMatrix::from_parts_unchecked(d, Field::Real, e)
}

/// c · i(E_jk − E_kj)
fn basis_antisym(d: usize, j: usize, k: usize, c: f64) -> SymMatrix {
    let mut e = vec![Complex64::ZERO; d * d];
    e[j * d + k] = Complex64::new(0.0, c);
    e[k * d + j] = Complex64::new(0.0, -c);
    SymMatrix::from_parts_unchecked(d, Field::Complex, e)
}

/// Build an S-sample Gaussian approximation of the distribution of the given
/// samples: mean = sample mean (or the override), coefficients = centered
/// samples scaled by 1/√S.
pub fn empirical_proxy(
    samples: &[SymMatrix],
    mean_override: Option<SymMatrix>,
) -> Result<GaussianModel> {
    if samples.len() < 2 {
        return Err(Error::invalid("empirical proxy requires at least 2 samples"));
    }
    let dim = samples[0].dim();
    for s in samples {
        if s.dim() != dim {
            return Err(Error::dims("samples must share a common dimension"));
        }
    }
    let mean = match mean_override {
        Some(m) => {
            if m.dim() != dim {
                return Err(Error::dims("mean override dim"));
            }
            m
        }
        None => {
            let mut acc = SymMatrix::zeros(dim, Field::Real);
            for s in samples {
                acc.axpy(1.0 / samples.len() as f64, s);
            }
            acc
        }
    };
    let inv_sqrt_s = 1.0 / (samples.len() as f64).sqrt();
    let coeffs: Vec<SymMatrix> = samples
        .iter()
        .map(|s| s.sub(&mean).map(|c| c.scale(inv_sqrt_s)))
        .collect::<Result<_>>()?;
    GaussianModel::from_series(mean, coeffs)
}

// --- JSON: {mean, coeffs[], structure_tag} ---

#[derive(Serialize, Deserialize)]
struct GaussianModelRepr {
    mean: SymMatrix,
    structure_tag: StructureTag,
    coeffs: Vec<SymMatrix>,
}

impl Serialize for GaussianModel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let tag = self.structure_tag();
        let coeffs = match tag {
            StructureTag::Generic => self.to_series(),
            _ => Vec::new(),
        };
        GaussianModelRepr {
            mean: self.mean.clone(),
            structure_tag: tag,
            coeffs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GaussianModel {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = GaussianModelRepr::deserialize(deserializer)?;
        let dim = repr.mean.dim();
        if let StructureTag::Generic = repr.structure_tag {
            for a in &repr.coeffs {
                if a.dim() != dim {
                    return Err(D::Error::custom("coefficient dimension mismatch"));
                }
            }
        }
        let cov = match repr.structure_tag {
            StructureTag::GoeScaled { scale } => Covariance::Goe { dim, scale },
            StructureTag::GueScaled { scale } => Covariance::Gue { dim, scale },
            StructureTag::WignerOffdiag { scale } => Covariance::WignerOffdiag { dim, scale },
            StructureTag::IidRect { rows, cols, scale } => {
                if rows + cols != dim {
                    return Err(D::Error::custom("iid_rect tag inconsistent with mean dim"));
                }
                Covariance::RectIid { rows, cols, scale }
            }
            StructureTag::Generic => Covariance::Series {
                dim,
                coeffs: repr.coeffs,
            },
        };
        Ok(GaussianModel {
            mean: repr.mean,
            cov,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stream() -> RngStream {
        RngStream::new(1234)
    }

    #[test]
    fn closed_form_tables() {
        for d in [4usize, 64, 256] {
            let goe = GaussianModel::goe(d);
            assert_eq!(goe.matrix_variance().value, d as f64 + 1.0);
            assert_eq!(goe.weak_variance().value, 2.0);
            assert_eq!(goe.interaction_energy().value, 2.0);

            let gue = GaussianModel::gue(d);
            assert_eq!(gue.matrix_variance().value, d as f64);
            assert_eq!(gue.weak_variance().value, 1.0);
            assert_eq!(gue.interaction_energy().value, 1.0);

            let rect = GaussianModel::iid_rect(d, 2 * d);
            assert_eq!(rect.matrix_variance().value, 2.0 * d as f64);
            assert_eq!(rect.weak_variance().value, 1.0);
            assert_eq!(rect.interaction_energy().value, 2.0);
        }
    }

    #[test]
    fn deterministic_model_sampling() {
        let mean = SymMatrix::diagonal(&[1.0, -3.0]);
        let model = GaussianModel::deterministic(mean.clone());
        let mut rng = stream().rng();
        assert_eq!(model.sample(&mut rng), mean);
        assert_eq!(
            model
                .fluctuation_mc(10, stream(), FluctuationKind::Eig)
                .unwrap(),
            (0.0, 0.0)
        );
    }

    #[test]
    fn goe_entrywise_variances() {
        let d = 100;
        let model = GaussianModel::goe(d);
        let trials = 10_000;
        let mut off = 0.0;
        let mut diag = 0.0;
        for i in 0..trials {
            let mut rng = stream().substream(i).rng();
            let z = model.sample(&mut rng);
            off += z.get(0, 1).re.powi(2);
            diag += z.get(0, 0).re.powi(2);
        }
        off /= trials as f64;
        diag /= trials as f64;
        assert!((off - 1.0).abs() < 0.05, "off-diagonal variance {off}");
        assert!((diag - 2.0).abs() < 0.10, "diagonal variance {diag}");
    }

    #[test]
    fn variance_form_matches_empirical_on_probe() {
        let mut rng = stream().rng();
        let d = 5;
        let mk = |rng: &mut ChaCha8Rng| {
            let mut e = vec![0.0; d * d];
            for i in 0..d {
                for j in 0..=i {
                    let x = normal(rng);
                    e[i * d + j] = x;
                    e[j * d + i] = x;
                }
            }
            SymMatrix::from_real(d, e).unwrap()
        };
        let coeffs = vec![mk(&mut rng), mk(&mut rng), mk(&mut rng)];
        let probe = mk(&mut rng);
        let model =
            GaussianModel::from_series(SymMatrix::zeros(d, Field::Real), coeffs.clone()).unwrap();

        let analytic: f64 = coeffs.iter().map(|a| a.inner(&probe).powi(2)).sum();
        assert!((model.var_form(&probe).unwrap() - analytic).abs() < 1e-12);

        let trials = 20_000;
        let vals: Vec<f64> = (0..trials)
            .map(|i| {
                let mut r = stream().substream(i).rng();
                model.sample(&mut r).inner(&probe)
            })
            .collect();
        let (m, _) = mean_stderr(&vals);
        let var = vals.iter().map(|v| (v - m).powi(2)).sum::<f64>() / (trials as f64 - 1.0);
        // stderr of a variance estimate ~ var * sqrt(2/n)
        let se = analytic * (2.0 / trials as f64).sqrt();
        assert!(
            (var - analytic).abs() < 5.0 * se,
            "empirical {var} vs analytic {analytic}"
        );
    }

    #[test]
    fn weak_variance_lower_bound_single_coeff() {
        let a = SymMatrix::diagonal(&[3.0, 1.0]);
        let model = GaussianModel::from_series(SymMatrix::zeros(2, Field::Real), vec![a]).unwrap();
        let weak = model.weak_variance();
        assert_eq!(weak.exactness, Exactness::LowerBound);
        assert!(weak.value >= 9.0 - 1e-6, "lower bound {}", weak.value);
        assert!(weak.value <= weak.upper + 1e-12);
    }

    #[test]
    fn wigner_offdiag_stats() {
        let d = 400usize;
        let model = GaussianModel::wigner_offdiag(d);
        assert_eq!(model.matrix_variance().value, d as f64 - 1.0);
        let weak = model.weak_variance();
        assert!((weak.value - 2.0 * (d as f64 - 1.0) / d as f64).abs() < 1e-12);
        assert!(weak.value < 2.0);
        assert_eq!(model.interaction_energy().value, 2.0);
    }

    #[test]
    fn sandwich_inequalities_for_tagged_models() {
        for model in [
            GaussianModel::goe(16),
            GaussianModel::gue(16),
            GaussianModel::iid_rect(8, 8),
            GaussianModel::wigner_offdiag(16),
        ] {
            let d = model.dim() as f64;
            let s2 = model.matrix_variance().value;
            let ws = model.weak_variance().value;
            let w = model.interaction_energy().value;
            assert!(ws <= s2 + 1e-12);
            assert!(s2 <= d * ws + 1e-12);
            assert!(ws <= w + 1e-12);
            assert!(w <= d * ws + 1e-12);
        }
    }

    #[test]
    fn khinchin_closed_values() {
        let model = GaussianModel::goe(100);
        let kb = model.khinchin_bounds();
        assert!((kb.phi_upper_eig - (2.0 * 101.0 * (100f64).ln()).sqrt()).abs() < 1e-12);
        assert!((kb.phi_pm_lower - (2.0 / std::f64::consts::PI * 101.0).sqrt()).abs() < 1e-12);
        assert!((kb.phi_pm_lower - 8.018).abs() < 1e-3);
        assert!((kb.phi_upper_eig - 30.50).abs() < 5e-3);
    }

    #[test]
    fn khinchin_d1_vanishes() {
        let model = GaussianModel::gue(1);
        assert_eq!(model.khinchin_bounds().phi_upper_eig, 0.0);
    }

    #[test]
    fn intrinsic_freeness_evaluation() {
        let model = GaussianModel::goe(100);
        let logd = (100f64).ln();
        let expected = 2.0 * (101f64).sqrt() + (101.0 * 2.0 * logd.powi(3)).powf(0.25);
        let got = model.intrinsic_freeness_upper(1.0).unwrap();
        assert!((got - expected).abs() < 1e-12);
        // monotone in the constant
        assert!(model.intrinsic_freeness_upper(2.0).unwrap() > got);
        assert!(model.intrinsic_freeness_upper(0.0).is_err());
        // deterministic model: bound is 0 when σ² = 0
        let det = GaussianModel::deterministic(SymMatrix::zeros(3, Field::Real));
        assert_eq!(det.intrinsic_freeness_upper(1.0).unwrap(), 0.0);
    }

    #[test]
    fn empirical_proxy_basics() {
        // all samples equal → zero variance
        let s = SymMatrix::diagonal(&[1.0, 2.0]);
        let model = empirical_proxy(&[s.clone(), s.clone()], None).unwrap();
        assert_eq!(model.matrix_variance().value, 0.0);

        // {A, -A} with mean 0 reproduces Var(M) = ⟨A, M⟩²
        let a = SymMatrix::from_real(2, vec![1.0, 2.0, 2.0, -0.5]).unwrap();
        let model = empirical_proxy(
            &[a.clone(), a.scale(-1.0)],
            Some(SymMatrix::zeros(2, Field::Real)),
        )
        .unwrap();
        for probe in [
            SymMatrix::diagonal(&[1.0, 0.0]),
            SymMatrix::diagonal(&[0.0, 1.0]),
            SymMatrix::from_real(2, vec![0.0, 1.0, 1.0, 0.0]).unwrap(),
        ] {
            let expected = a.inner(&probe).powi(2);
            assert!((model.var_form(&probe).unwrap() - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn empirical_proxy_of_goe_matches_sigma2() {
        let d = 20;
        let model = GaussianModel::goe(d);
        let s = 2000;
        let samples: Vec<SymMatrix> = (0..s)
            .map(|i| {
                let mut rng = stream().substream(i).rng();
                model.sample(&mut rng)
            })
            .collect();
        let proxy = empirical_proxy(&samples, None).unwrap();
        let sigma2 = proxy.matrix_variance().value;
        assert!(
            (sigma2 - 21.0).abs() < 2.1,
            "empirical sigma2 {sigma2} not within 10% of 21"
        );
    }

    #[test]
    fn direct_sum_and_scale_and_shift() {
        let m1 = GaussianModel::goe(3);
        let m2 = GaussianModel::gue(2);
        let sum = m1.direct_sum(&m2);
        assert_eq!(sum.dim(), 5);
        assert_eq!(sum.matrix_variance().value, 4.0); // max(3+1, 2)
        assert_eq!(sum.weak_variance().value, 2.0);
        assert_eq!(sum.interaction_energy().value, 2.0);

        let scaled = m1.scale(2.0);
        assert_eq!(scaled.matrix_variance().value, 16.0); // 4 (d+1) = 16

        let shifted = m1.shift(&SymMatrix::identity(3, Field::Real)).unwrap();
        assert_eq!(shifted.mean().trace(), 3.0);
        assert_eq!(shifted.matrix_variance().value, 4.0);
    }

    #[test]
    fn tagged_series_realize_variance_function() {
        // materialized coefficients must reproduce the structured Var on probes
        let mut rng = stream().rng();
        for model in [
            GaussianModel::goe(4),
            GaussianModel::gue(4),
            GaussianModel::wigner_offdiag(4),
            GaussianModel::iid_rect(2, 3),
        ] {
            let d = model.dim();
            let coeffs = model.to_series();
            for _ in 0..6 {
                let mut e = vec![Complex64::ZERO; d * d];
                let complex = model.field() == Field::Complex;
                for i in 0..d {
                    e[i * d + i] = Complex64::new(normal(&mut rng), 0.0);
                    for j in (i + 1)..d {
                        let v = Complex64::new(
                            normal(&mut rng),
                            if complex { normal(&mut rng) } else { 0.0 },
                        );
                        e[i * d + j] = v;
                        e[j * d + i] = v.conj();
                    }
                }
                let probe = SymMatrix::from_parts_unchecked(d, model.field(), e);
                let structured = model.var_form(&probe).unwrap();
                let from_series: f64 = coeffs.iter().map(|a| a.inner(&probe).powi(2)).sum();
                assert!(
                    (structured - from_series).abs() <= 1e-9 * structured.max(1.0),
                    "var mismatch {structured} vs {from_series}"
                );
            }
        }
    }

    #[test]
    fn model_json_roundtrip() {
        let model = GaussianModel::goe(3);
        let s = serde_json::to_string(&model).unwrap();
        let back: GaussianModel = serde_json::from_str(&s).unwrap();
        assert_eq!(back.structure_tag(), model.structure_tag());
        assert_eq!(back.matrix_variance().value, 4.0);

        let gen = GaussianModel::from_series(
            SymMatrix::zeros(2, Field::Real),
            vec![SymMatrix::diagonal(&[1.0, -1.0])],
        )
        .unwrap();
        let s = serde_json::to_string(&gen).unwrap();
        let back: GaussianModel = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_series().len(), 1);
    }
}
