//! Closed-form comparison bounds for the extreme eigenvalues of an
//! independent sum, stated in terms of the Gaussian proxy statistics.
//!
//! With μ the proxy's expected extreme eigenvalue (or norm), φ its
//! fluctuation, σ*² its weak variance, and R the one-sided summand bound, the
//! expectation and tail families read
//!
//! ```text
//! level(s) = μ ± [ √((Rφ/3 + σ*²) · 2s) + (R/3) s ],    P ≤ d · e^{−s},
//! ```
//!
//! with `s = log d` giving the expectation bound. The sign is `+` for the
//! maximum eigenvalue and the spectral norm (dimension d₁+d₂), `−` for the
//! minimum eigenvalue. The tail guarantee requires `s ≥ log d`; smaller
//! values still evaluate but are flagged `out_of_regime`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where the μ statistic came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MuProvenance {
    ClosedForm,
    Mc,
    User,
}

/// Statistics feeding a bound evaluation.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BoundInputs {
    /// Matrix dimension; d₁+d₂ for rectangular (spectral norm) bounds.
    pub d: usize,
    /// E λ_max(Z), E λ_min(Z), or E‖Z‖ of the Gaussian proxy.
    pub mu: f64,
    pub mu_provenance: MuProvenance,
    /// Matrix fluctuation φ(Z) (φ±(Z) for norm bounds).
    pub phi: f64,
    /// Weak variance σ*²(Z).
    pub sigma_star2: f64,
    /// One-sided summand bound: R₊, R₋, or R±.
    pub r: f64,
}

impl BoundInputs {
    pub fn new(
        d: usize,
        mu: f64,
        mu_provenance: MuProvenance,
        phi: f64,
        sigma_star2: f64,
        r: f64,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("dimension must be positive"));
        }
        for (name, v) in [("phi", phi), ("sigma_star2", sigma_star2), ("r", r)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::invalid(format!(
                    "{name} must be finite and nonnegative, got {v}"
                )));
            }
        }
        if !mu.is_finite() {
            return Err(Error::invalid("mu must be finite"));
        }
        Ok(BoundInputs {
            d,
            mu,
            mu_provenance,
            phi,
            sigma_star2,
            r,
        })
    }

    pub fn log_d(&self) -> f64 {
        (self.d as f64).ln()
    }

    /// The bracket √((Rφ/3 + σ*²)·2s) + (R/3)s.
    fn bracket(&self, s: f64) -> f64 {
        ((self.r * self.phi / 3.0 + self.sigma_star2) * 2.0 * s).sqrt() + self.r / 3.0 * s
    }
}

/// Kind of bound evaluated in a [`BoundReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    MaxEigExpect,
    MaxEigTail,
    MinEigExpect,
    MinEigTail,
    NormExpect,
    NormTail,
    UnboundedTail,
    PsdIidExpect,
    PsdIidTail,
    BernsteinBaseline,
    BennettTail,
    BernsteinTail,
}

/// Evaluated bound with every input recorded.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub inputs: BoundInputs,
    /// Expectation bound, or the tail level.
    pub value: f64,
    /// Tail probability of the d·e^{−s} family, when applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prob_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    /// Set when a tail was evaluated at s < log d, outside the guarantee.
    pub out_of_regime: bool,
}

/// Level and probability of one tail evaluation.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct TailLevel {
    pub level: f64,
    pub prob: f64,
    pub out_of_regime: bool,
}

/// E λ_max(Y) ≤ μ + √((R₊φ/3 + σ*²)·2 log d) + (R₊/3) log d.
pub fn maxeig_expect_bound(inputs: &BoundInputs) -> f64 {
    maxeig_tail_level(inputs, inputs.log_d()).level
}

/// P[λ_max(Y) ≥ level(s)] ≤ d·e^{−s}.
pub fn maxeig_tail_level(inputs: &BoundInputs, s: f64) -> TailLevel {
    TailLevel {
        level: inputs.mu + inputs.bracket(s),
        prob: inputs.d as f64 * (-s).exp(),
        out_of_regime: s < inputs.log_d(),
    }
}

/// E λ_min(Y) ≥ μ − [√((R₋φ/3 + σ*²)·2 log d) + (R₋/3) log d].
pub fn mineig_expect_bound(inputs: &BoundInputs) -> f64 {
    mineig_tail_level(inputs, inputs.log_d()).level
}

/// P[λ_min(Y) ≤ level(s)] ≤ d·e^{−s}.
pub fn mineig_tail_level(inputs: &BoundInputs, s: f64) -> TailLevel {
    TailLevel {
        level: inputs.mu - inputs.bracket(s),
        prob: inputs.d as f64 * (-s).exp(),
        out_of_regime: s < inputs.log_d(),
    }
}

/// E‖Y‖ ≤ μ + √((R±φ±/3 + σ*²)·2 log(d₁+d₂)) + (R±/3) log(d₁+d₂);
/// `inputs.d` must hold d₁+d₂.
pub fn norm_expect_bound(inputs: &BoundInputs) -> f64 {
    norm_tail_level(inputs, inputs.log_d()).level
}

/// P[‖Y‖ ≥ level(s)] ≤ (d₁+d₂)·e^{−s}.
pub fn norm_tail_level(inputs: &BoundInputs, s: f64) -> TailLevel {
    maxeig_tail_level(inputs, s)
}

/// Unbounded summands: same level with truncation parameter R, probability
/// P[M > R] + d·e^{−s}.
pub fn unbounded_tail(inputs: &BoundInputs, s: f64, prob_m_exceeds_r: f64) -> Result<TailLevel> {
    if !(0.0..=1.0).contains(&prob_m_exceeds_r) {
        return Err(Error::invalid("prob_M must lie in [0, 1]"));
    }
    let base = maxeig_tail_level(inputs, s);
    Ok(TailLevel {
        level: base.level,
        prob: prob_m_exceeds_r + base.prob,
        out_of_regime: base.out_of_regime,
    })
}

/// Matrix Bernstein baseline: λ_max(EY) + √(2σ² log d) + (R₊/3) log d.
pub fn bernstein_baseline(sigma2: f64, r_plus: f64, d: usize, lam_max_mean: f64) -> f64 {
    let log_d = (d as f64).ln();
    lam_max_mean + (2.0 * sigma2 * log_d).sqrt() + r_plus / 3.0 * log_d
}

/// Sum of iid psd matrices: expectation bound μ_min − √(σ*²·2 log 2d), tail
/// level μ_min − √(σ*²·2s) with probability 2d·e^{−s} (s ≥ log 2d).
pub fn psd_iid_bounds(mu_min: f64, sigma_star2: f64, d: usize, s: f64) -> (f64, TailLevel) {
    let two_d = 2.0 * d as f64;
    let expect = mu_min - (sigma_star2 * 2.0 * two_d.ln()).sqrt();
    let tail = TailLevel {
        level: mu_min - (sigma_star2 * 2.0 * s).sqrt(),
        prob: two_d * (-s).exp(),
        out_of_regime: s < two_d.ln(),
    };
    (expect, tail)
}

/// g_R(θ) = [(e^{θR} − θR − 1) / (R²/2)]^{1/2}, with the limit g_0(θ) = θ.
pub fn g_r(theta: f64, r: f64) -> Result<f64> {
    if theta < 0.0 || r < 0.0 {
        return Err(Error::invalid("g_R requires theta ≥ 0 and R ≥ 0"));
    }
    if r == 0.0 {
        return Ok(theta);
    }
    let x = theta * r;
    // exp_m1 keeps precision for small θR where e^x − x − 1 ≈ x²/2.
    let numer = x.exp_m1() - x;
    Ok((numer / (r * r / 2.0)).sqrt())
}

/// Bennett-form tail: at level μ + (φ/3 + σ*²/R)·t,
/// P ≤ d · (e^t/(1+t)^{1+t})^{φ/(3R) + σ*²/R²}. Requires R > 0.
pub fn bennett_tail(
    phi: f64,
    sigma_star2: f64,
    r: f64,
    d: usize,
    mu: f64,
    t: f64,
) -> Result<TailLevel> {
    if r <= 0.0 {
        return Err(Error::invalid("Bennett tail requires R > 0"));
    }
    if t < 0.0 {
        return Err(Error::invalid("t must be nonnegative"));
    }
    let level = mu + (phi / 3.0 + sigma_star2 / r) * t;
    let exponent = phi / (3.0 * r) + sigma_star2 / (r * r);
    // log of e^t/(1+t)^{1+t} = t − (1+t) log(1+t)
    let log_base = t - (1.0 + t) * (1.0 + t).ln();
    Ok(TailLevel {
        level,
        prob: d as f64 * (exponent * log_base).exp(),
        out_of_regime: false,
    })
}

/// Bernstein-form tail: P[λ_max ≥ μ + t] ≤ d·exp(−t²/2 / (Rφ/3 + σ*² + Rt/3)).
pub fn bernstein_tail(
    phi: f64,
    sigma_star2: f64,
    r: f64,
    d: usize,
    mu: f64,
    t: f64,
) -> Result<TailLevel> {
    if t < 0.0 {
        return Err(Error::invalid("t must be nonnegative"));
    }
    let denom = r * phi / 3.0 + sigma_star2 + r * t / 3.0;
    let prob = if denom == 0.0 {
        if t > 0.0 {
            0.0
        } else {
            d as f64
        }
    } else {
        d as f64 * (-(t * t / 2.0) / denom).exp()
    };
    Ok(TailLevel {
        level: mu + t,
        prob,
        out_of_regime: false,
    })
}

/// Tail family selector for [`invert_tail`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TailFamily {
    MaxEig,
    MinEig,
    Norm,
    PsdIid,
}

/// Given a target probability p, solve d_eff·e^{−s} = p for s (clamped to the
/// regime boundary) and return the resulting level.
pub fn invert_tail(
    target_prob: f64,
    family: TailFamily,
    inputs: &BoundInputs,
) -> Result<(f64, f64)> {
    if !(target_prob > 0.0 && target_prob <= 1.0) {
        return Err(Error::invalid("target probability must lie in (0, 1]"));
    }
    let d_eff = match family {
        TailFamily::PsdIid => 2.0 * inputs.d as f64,
        _ => inputs.d as f64,
    };
    let s = (d_eff / target_prob).ln().max(d_eff.ln());
    let level = match family {
        TailFamily::MaxEig | TailFamily::Norm => maxeig_tail_level(inputs, s).level,
        TailFamily::MinEig => mineig_tail_level(inputs, s).level,
        TailFamily::PsdIid => {
            psd_iid_bounds(inputs.mu, inputs.sigma_star2, inputs.d, s)
                .1
                .level
        }
    };
    Ok((s, level))
}

/// Assemble a serializable report for one evaluation.
///
/// For `BernsteinBaseline` the inputs are repurposed: `phi` holds σ² and `mu`
/// holds λ_max(EY).
pub fn report(
    kind: BoundKind,
    inputs: BoundInputs,
    s: Option<f64>,
    prob_m: Option<f64>,
) -> Result<BoundReport> {
    let (value, prob_bound, out_of_regime) = match (kind, s) {
        (BoundKind::MaxEigExpect, _) => (maxeig_expect_bound(&inputs), None, false),
        (BoundKind::MinEigExpect, _) => (mineig_expect_bound(&inputs), None, false),
        (BoundKind::NormExpect, _) => (norm_expect_bound(&inputs), None, false),
        (BoundKind::BernsteinBaseline, _) => (
            bernstein_baseline(inputs.phi, inputs.r, inputs.d, inputs.mu),
            None,
            false,
        ),
        (BoundKind::PsdIidExpect, _) => (
            psd_iid_bounds(
                inputs.mu,
                inputs.sigma_star2,
                inputs.d,
                (2.0 * inputs.d as f64).ln(),
            )
            .0,
            None,
            false,
        ),
        (BoundKind::MaxEigTail, Some(s)) | (BoundKind::NormTail, Some(s)) => {
            let t = maxeig_tail_level(&inputs, s);
            (t.level, Some(t.prob), t.out_of_regime)
        }
        (BoundKind::MinEigTail, Some(s)) => {
            let t = mineig_tail_level(&inputs, s);
            (t.level, Some(t.prob), t.out_of_regime)
        }
        (BoundKind::PsdIidTail, Some(s)) => {
            let t = psd_iid_bounds(inputs.mu, inputs.sigma_star2, inputs.d, s).1;
            (t.level, Some(t.prob), t.out_of_regime)
        }
        (BoundKind::UnboundedTail, Some(s)) => {
            let t = unbounded_tail(&inputs, s, prob_m.unwrap_or(0.0))?;
            (t.level, Some(t.prob), t.out_of_regime)
        }
        _ => return Err(Error::invalid("tail bound requires a tail parameter s")),
    };
    if !value.is_finite() {
        return Err(Error::invalid("bound evaluated to a non-finite value"));
    }
    Ok(BoundReport {
        kind,
        inputs,
        value,
        prob_bound,
        s,
        out_of_regime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wigner_1000_inputs() -> BoundInputs {
        let mu = 2.0 * 1000f64.sqrt();
        BoundInputs::new(1000, mu, MuProvenance::ClosedForm, mu, 2.0, 1.0).unwrap()
    }

    #[test]
    fn maxeig_d1_collapses_to_mu() {
        let inputs = BoundInputs::new(1, 5.0, MuProvenance::User, 3.0, 1.0, 1.0).unwrap();
        assert_eq!(maxeig_expect_bound(&inputs), 5.0);
    }

    #[test]
    fn maxeig_deterministic_case() {
        let inputs = BoundInputs::new(50, 7.0, MuProvenance::User, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(maxeig_expect_bound(&inputs), 7.0);
    }

    #[test]
    fn wigner_expectation_value() {
        // μ = φ = 2√1000, σ*² = 2, R = 1, d = 1000 → ≈ 83.41
        let b = maxeig_expect_bound(&wigner_1000_inputs());
        let mu = 2.0 * 1000f64.sqrt();
        let log_d = 1000f64.ln();
        let expected = mu + ((mu / 3.0 + 2.0) * 2.0 * log_d).sqrt() + log_d / 3.0;
        assert!((b - expected).abs() < 1e-12);
        assert!((b - 83.41).abs() < 5e-3, "got {b}");
    }

    #[test]
    fn wigner_tail_value() {
        let s = 2.0 * 1000f64.ln();
        let t = maxeig_tail_level(&wigner_1000_inputs(), s);
        assert!((t.prob - 1.0e-3).abs() < 1e-6, "prob {}", t.prob);
        assert!((t.level - 93.11).abs() < 5e-3, "level {}", t.level);
        assert!(!t.out_of_regime);
    }

    #[test]
    fn tail_at_log_d_is_vacuous_and_matches_expectation() {
        let inputs = wigner_1000_inputs();
        let t = maxeig_tail_level(&inputs, inputs.log_d());
        assert!((t.prob - 1.0).abs() < 1e-12);
        assert_eq!(t.level, maxeig_expect_bound(&inputs));
        // s slightly below log d flags the regime
        assert!(maxeig_tail_level(&inputs, inputs.log_d() - 0.1).out_of_regime);
    }

    #[test]
    fn doubling_s_monotonicity() {
        let inputs = wigner_1000_inputs();
        let s = inputs.log_d();
        let t1 = maxeig_tail_level(&inputs, s);
        let t2 = maxeig_tail_level(&inputs, 2.0 * s);
        assert!(t2.level > t1.level);
        assert!((t2.prob - t1.prob * (-s).exp()).abs() < 1e-12 * t1.prob);
    }

    #[test]
    fn mineig_covariance_value() {
        // d = 500, n = 2000: μ = 0, φ = 1, σ*² = 1e−3, R₋ = 5e−4 → ≈ −0.1214
        let inputs = BoundInputs::new(500, 0.0, MuProvenance::ClosedForm, 1.0, 1e-3, 5e-4).unwrap();
        let b = mineig_expect_bound(&inputs);
        assert!((b + 0.1214).abs() < 1e-4, "got {b}");
        // R₋ = 0, σ*² = 0 → μ
        let z = BoundInputs::new(500, 0.25, MuProvenance::User, 1.0, 0.0, 0.0).unwrap();
        assert_eq!(mineig_expect_bound(&z), 0.25);
    }

    #[test]
    fn mineig_d1_is_mu() {
        let inputs = BoundInputs::new(1, -2.0, MuProvenance::User, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(mineig_expect_bound(&inputs), -2.0);
    }

    #[test]
    fn norm_bound_rect_rademacher() {
        // d = 500, n = 2000 rectangular Rademacher: μ = φ± = 1.5, σ*² = 5e−4,
        // R± = 1/√2000, dimension d₁+d₂ = 2500.
        let r = 1.0 / 2000f64.sqrt();
        let inputs = BoundInputs::new(2500, 1.5, MuProvenance::ClosedForm, 1.5, 5e-4, r).unwrap();
        let b = norm_expect_bound(&inputs);
        let log_d = 2500f64.ln();
        let expected = 1.5 + ((r * 1.5 / 3.0 + 5e-4) * 2.0 * log_d).sqrt() + r / 3.0 * log_d;
        assert!((b - expected).abs() < 1e-12);
        // vacuous boundary: prob at s = log(d1+d2) is 1
        let t = norm_tail_level(&inputs, log_d);
        assert!((t.prob - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unbounded_tail_reduces_and_saturates() {
        let inputs = wigner_1000_inputs();
        let s = 2.0 * inputs.log_d();
        let base = maxeig_tail_level(&inputs, s);
        let t0 = unbounded_tail(&inputs, s, 0.0).unwrap();
        assert_eq!(t0.prob, base.prob);
        assert_eq!(t0.level, base.level);
        let t1 = unbounded_tail(&inputs, s, 1.0).unwrap();
        assert!(t1.prob >= 1.0);
        assert!(unbounded_tail(&inputs, s, 1.5).is_err());
    }

    #[test]
    fn bernstein_baseline_wigner() {
        // σ² = 999, d = 1000 → ≈ 119.78, and the comparison bound is sharper.
        let b = bernstein_baseline(999.0, 1.0, 1000, 0.0);
        assert!((b - 119.78).abs() < 5e-3, "got {b}");
        assert!(maxeig_expect_bound(&wigner_1000_inputs()) < b);
        // d = 1 → λ_max(EY)
        assert_eq!(bernstein_baseline(5.0, 1.0, 1, 3.0), 3.0);
    }

    #[test]
    fn psd_iid_values() {
        let (expect, tail) = psd_iid_bounds(0.0, 1e-3, 500, 1000f64.ln());
        assert!((expect + 0.11754).abs() < 1e-5, "got {expect}");
        assert!((tail.prob - 1.0).abs() < 1e-12);
        assert_eq!(expect, tail.level); // s = log 2d
        let (e0, t0) = psd_iid_bounds(0.7, 0.0, 10, 5.0);
        assert_eq!(e0, 0.7);
        assert_eq!(t0.level, 0.7);
    }

    #[test]
    fn g_r_values() {
        assert_eq!(g_r(0.0, 1.0).unwrap(), 0.0);
        assert_eq!(g_r(0.0, 0.0).unwrap(), 0.0);
        let g11 = g_r(1.0, 1.0).unwrap();
        assert!((g11 - (2.0 * (std::f64::consts::E - 2.0)).sqrt()).abs() < 1e-12);
        assert!((g11 - 1.19864).abs() < 1e-5);
        // R → 0 limit is θ
        assert_eq!(g_r(0.7, 0.0).unwrap(), 0.7);
        assert!((g_r(0.7, 1e-8).unwrap() - 0.7).abs() < 1e-8);
    }

    #[test]
    fn g_r_dominates_theta_on_grid() {
        for &r in &[0.1, 1.0, 3.0] {
            for i in 1..=30 {
                let theta = 0.1 * i as f64;
                let g = g_r(theta, r).unwrap();
                assert!(g >= theta - 1e-12);
                let slack = ((theta * r).exp() - theta * r - 1.0) / r / 3.0;
                assert!(g - theta <= slack + 1e-12, "theta={theta} r={r}");
            }
        }
    }

    #[test]
    fn bennett_and_bernstein_tails() {
        let mu = 2.0 * 1000f64.sqrt();
        // t = 0 → prob = d (vacuous)
        let b0 = bennett_tail(mu, 2.0, 1.0, 1000, mu, 0.0).unwrap();
        assert!((b0.prob - 1000.0).abs() < 1e-9);
        let n0 = bernstein_tail(mu, 2.0, 1.0, 1000, mu, 0.0).unwrap();
        assert!((n0.prob - 1000.0).abs() < 1e-9);
        // Wigner d=1000 inputs at t = 25 → ≈ 0.0478
        let nb = bernstein_tail(mu, 2.0, 1.0, 1000, mu, 25.0).unwrap();
        assert!((nb.prob - 0.0478).abs() < 2e-4, "got {}", nb.prob);
        assert_eq!(nb.level, mu + 25.0);
        // Bennett dominates Bernstein on a grid
        for i in 1..=20 {
            let t = 0.5 * i as f64;
            let be = bennett_tail(mu, 2.0, 1.0, 1000, mu, t).unwrap();
            let br = bernstein_tail(mu, 2.0, 1.0, 1000, mu, t).unwrap();
            assert!(be.prob <= br.prob * (1.0 + 1e-12), "t={t}");
        }
        assert!(bennett_tail(1.0, 1.0, 0.0, 10, 0.0, 1.0).is_err());
    }

    #[test]
    fn invert_tail_values() {
        let inputs = BoundInputs::new(10, 0.0, MuProvenance::User, 1.0, 1.0, 1.0).unwrap();
        let (s, _) = invert_tail(1.0, TailFamily::MaxEig, &inputs).unwrap();
        assert!((s - 10f64.ln()).abs() < 1e-12);
        let inputs = BoundInputs::new(500, 0.0, MuProvenance::User, 1.0, 1.0, 1.0).unwrap();
        let (s, _) = invert_tail(0.1, TailFamily::MaxEig, &inputs).unwrap();
        assert!((s - 5000f64.ln()).abs() < 1e-12);
        assert!((s - 8.517).abs() < 1e-3);
        // level is monotone decreasing in p (maxeig family: smaller p, higher s and level)
        let (_, l1) = invert_tail(0.5, TailFamily::MaxEig, &inputs).unwrap();
        let (_, l2) = invert_tail(0.05, TailFamily::MaxEig, &inputs).unwrap();
        assert!(l2 > l1);
        assert!(invert_tail(0.0, TailFamily::MaxEig, &inputs).is_err());
    }

    #[test]
    fn monotone_in_each_input() {
        let base = BoundInputs::new(100, 1.0, MuProvenance::User, 2.0, 0.5, 0.3).unwrap();
        let v0 = maxeig_expect_bound(&base);
        for (dphi, dsig, dr) in [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)] {
            let bumped = BoundInputs::new(
                100,
                1.0,
                MuProvenance::User,
                2.0 + dphi,
                0.5 + dsig,
                0.3 + dr,
            )
            .unwrap();
            assert!(maxeig_expect_bound(&bumped) > v0);
        }
        // monotone in s
        let t1 = maxeig_tail_level(&base, 5.0);
        let t2 = maxeig_tail_level(&base, 6.0);
        assert!(t2.level > t1.level && t2.prob < t1.prob);
    }

    #[test]
    fn rejects_negative_inputs() {
        assert!(BoundInputs::new(10, 0.0, MuProvenance::User, -1.0, 0.0, 0.0).is_err());
        assert!(BoundInputs::new(10, 0.0, MuProvenance::User, 0.0, -1.0, 0.0).is_err());
        assert!(BoundInputs::new(10, f64::NAN, MuProvenance::User, 0.0, 0.0, 0.0).is_err());
        assert!(BoundInputs::new(0, 0.0, MuProvenance::User, 0.0, 0.0, 0.0).is_err());
    }
}
