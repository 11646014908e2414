//! The asymmetric Student-t (AST) model: density, sampling, likelihood and
//! descriptive statistics.
//!
//! The density is piecewise around the location `mu`: observations at or
//! below `mu` see the scale `2 * alpha * sigma`, observations above it see
//! `2 * (1 - alpha) * sigma`, which puts exactly mass `alpha` on the left
//! branch. The degrees of freedom `nu` run over the integers 1..=30, where
//! 30 encodes the skew-normal limit of the family (branch-wise normal
//! kernel with the same scale convention).

use once_cell::sync::Lazy;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{ChiSquared, Distribution, StandardNormal};
use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

/// The `nu` value that encodes the skew-normal endpoint of the family.
pub const NU_NORMAL: u32 = 30;

/// Largest admissible degrees-of-freedom index.
pub const NU_MAX: u32 = 30;

const LN_2PI: f64 = 1.8378770664093453;

/// ln K(nu) for the Student-t normalizing constant
/// K(nu) = Gamma((nu+1)/2) / (sqrt(pi nu) Gamma(nu/2)), nu = 1..=30.
static LN_K: Lazy<[f64; 31]> = Lazy::new(|| {
    let mut table = [0.0; 31];
    for (nu, slot) in table.iter_mut().enumerate().skip(1) {
        let nu = nu as f64;
        *slot = ln_gamma((nu + 1.0) / 2.0) - 0.5 * (std::f64::consts::PI * nu).ln() - ln_gamma(nu / 2.0);
    }
    table
});

/// Parameters (alpha, nu, mu, sigma) of the AST model.
///
/// Invariants are enforced at construction: `alpha` in (0, 1), `sigma > 0`,
/// `nu` in 1..=30. `nu = 30` selects the skew-normal endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ASTParams {
    alpha: f64,
    nu: u32,
    mu: f64,
    sigma: f64,
}

impl ASTParams {
    pub fn new(alpha: f64, nu: u32, mu: f64, sigma: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 || alpha >= 1.0 {
            return Err(Error::InvalidParams(format!("alpha must lie in (0, 1), got {alpha}")));
        }
        if nu < 1 || nu > NU_MAX {
            return Err(Error::InvalidParams(format!("nu must lie in 1..={NU_MAX}, got {nu}")));
        }
        if !mu.is_finite() {
            return Err(Error::InvalidParams(format!("mu must be finite, got {mu}")));
        }
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(Error::InvalidParams(format!("sigma must be positive, got {sigma}")));
        }
        Ok(Self { alpha, nu, mu, sigma })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn nu(&self) -> u32 {
        self.nu
    }
    pub fn mu(&self) -> f64 {
        self.mu
    }
    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Same parameters with a different `nu`; caller guarantees range.
    pub(crate) fn with_nu(&self, nu: u32) -> Self {
        debug_assert!((1..=NU_MAX).contains(&nu));
        Self { nu, ..*self }
    }
    pub(crate) fn with_mu(&self, mu: f64) -> Self {
        debug_assert!(mu.is_finite());
        Self { mu, ..*self }
    }
    pub(crate) fn with_sigma(&self, sigma: f64) -> Self {
        debug_assert!(sigma > 0.0 && sigma.is_finite());
        Self { sigma, ..*self }
    }
    pub(crate) fn with_alpha(&self, alpha: f64) -> Self {
        debug_assert!(alpha > 0.0 && alpha < 1.0);
        Self { alpha, ..*self }
    }
}

/// Hoisted per-parameter constants for repeated density evaluation.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LogPdfContext {
    mu: f64,
    inv_left: f64,
    inv_right: f64,
    log_norm: f64,
    neg_half_nu1: f64,
    inv_nu: f64,
    normal_limit: bool,
}

impl LogPdfContext {
    pub(crate) fn new(p: &ASTParams) -> Self {
        let normal_limit = p.nu == NU_NORMAL;
        let log_norm = if normal_limit {
            -p.sigma.ln() - 0.5 * LN_2PI
        } else {
            LN_K[p.nu as usize] - p.sigma.ln()
        };
        Self {
            mu: p.mu,
            inv_left: 1.0 / (2.0 * p.alpha * p.sigma),
            inv_right: 1.0 / (2.0 * (1.0 - p.alpha) * p.sigma),
            log_norm,
            neg_half_nu1: -0.5 * (p.nu as f64 + 1.0),
            inv_nu: 1.0 / p.nu as f64,
            normal_limit,
        }
    }

    #[inline]
    pub(crate) fn log_pdf(&self, x: f64) -> f64 {
        let z = if x <= self.mu {
            (x - self.mu) * self.inv_left
        } else {
            (x - self.mu) * self.inv_right
        };
        if self.normal_limit {
            self.log_norm - 0.5 * z * z
        } else {
            self.log_norm + self.neg_half_nu1 * (z * z * self.inv_nu).ln_1p()
        }
    }
}

/// Log-density of the AST model at `x`.
pub fn ast_log_pdf(x: f64, p: &ASTParams) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("x must be finite, got {x}")));
    }
    Ok(LogPdfContext::new(p).log_pdf(x))
}

/// Density of the AST model at `x`.
pub fn ast_pdf(x: f64, p: &ASTParams) -> Result<f64> {
    ast_log_pdf(x, p).map(f64::exp)
}

/// A set of observations, optionally recorded on the log scale.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
    log_transformed: bool,
}

impl Sample {
    /// Wraps raw observations; they must be non-empty and finite.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        Self::build(values, false)
    }

    /// Applies the natural logarithm to strictly positive raw observations.
    pub fn log_transformed(raw: &[f64]) -> Result<Self> {
        if let Some(i) = raw.iter().position(|v| !(*v > 0.0)) {
            return Err(Error::Domain(format!(
                "log transform requires strictly positive values; offending value {} at index {i}",
                raw[i]
            )));
        }
        Self::build(raw.iter().map(|v| v.ln()).collect(), true)
    }

    /// Wraps values that are already on the log scale.
    pub fn from_log_values(values: Vec<f64>) -> Result<Self> {
        Self::build(values, true)
    }

    fn build(values: Vec<f64>, log_transformed: bool) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("sample must not be empty".into()));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Domain(format!(
                "sample values must be finite; offending value {} at index {i}",
                values[i]
            )));
        }
        Ok(Self { values, log_transformed })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a Sample is non-empty by construction
    }

    pub fn log_transformed(&self) -> bool {
        self.log_transformed
    }

    /// Sample median (average of the central order statistics for even n).
    pub fn median(&self) -> f64 {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        let n = v.len();
        if n % 2 == 1 {
            v[n / 2]
        } else {
            0.5 * (v[n / 2 - 1] + v[n / 2])
        }
    }

    /// Interquartile-range based scale estimate, consistent for the normal
    /// distribution; falls back to the standard deviation, then to 1.0, when
    /// the IQR degenerates. Used to center proposal kernels, where a rough
    /// but outlier-resistant figure beats the raw standard deviation on
    /// heavy-tailed data.
    pub fn robust_scale(&self) -> f64 {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        let q = |p: f64| {
            let rank = ((p * v.len() as f64).ceil() as usize).clamp(1, v.len());
            v[rank - 1]
        };
        let iqr = q(0.75) - q(0.25);
        if iqr > 0.0 {
            return iqr / 1.349;
        }
        let sd = std_dev(&self.values);
        if sd > 0.0 {
            sd
        } else {
            1.0
        }
    }
}

/// Mean, standard deviation and skewness of a sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DescriptiveStats {
    pub mean: f64,
    pub std_dev: f64,
    pub skewness: f64,
}

fn std_dev(values: &[f64]) -> f64 {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let ss = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>();
    (ss / (n - 1.0)).sqrt()
}

/// Computes mean, sample standard deviation (n-1 denominator) and the
/// moment skewness m3 / m2^(3/2). Requires at least three observations.
pub fn descriptive_stats(s: &Sample) -> Result<DescriptiveStats> {
    let n = s.len();
    if n < 3 {
        return Err(Error::Domain(format!(
            "skewness requires at least 3 observations, got {n}"
        )));
    }
    let nf = n as f64;
    let mean = s.values().iter().sum::<f64>() / nf;
    let (mut m2, mut m3) = (0.0, 0.0);
    for v in s.values() {
        let d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= nf;
    m3 /= nf;
    let skewness = if m2 > 0.0 { m3 / m2.powf(1.5) } else { 0.0 };
    Ok(DescriptiveStats { mean, std_dev: std_dev(s.values()), skewness })
}

/// One standard Student-t variate with `nu` degrees of freedom, built as a
/// standard normal over the square root of a chi-square divided by `nu`;
/// `nu = 30` short-circuits to the normal itself.
fn standard_t_draw<R: Rng + ?Sized>(nu: u32, rng: &mut R) -> f64 {
    if nu == NU_NORMAL {
        return rng.sample(StandardNormal);
    }
    let chi2 = ChiSquared::new(nu as f64).expect("nu >= 1");
    loop {
        let z: f64 = rng.sample(StandardNormal);
        let c = chi2.sample(rng);
        let t = z / (c / nu as f64).sqrt();
        if t.is_finite() {
            return t;
        }
    }
}

/// One draw from the AST model.
pub(crate) fn ast_draw<R: Rng + ?Sized>(p: &ASTParams, rng: &mut R) -> f64 {
    let t = standard_t_draw(p.nu, rng).abs();
    let u: f64 = rng.gen();
    if u < p.alpha {
        p.mu - 2.0 * p.alpha * p.sigma * t
    } else {
        p.mu + 2.0 * (1.0 - p.alpha) * p.sigma * t
    }
}

/// Draws `n` i.i.d. observations using the supplied generator.
pub fn ast_sample_with_rng<R: Rng + ?Sized>(p: &ASTParams, n: usize, rng: &mut R) -> Result<Sample> {
    if n == 0 {
        return Err(Error::Domain("sample size must be at least 1".into()));
    }
    let values = (0..n).map(|_| ast_draw(p, rng)).collect();
    Sample::new(values)
}

/// Draws `n` i.i.d. observations from a generator seeded with `rng_seed`.
pub fn ast_sample(p: &ASTParams, n: usize, rng_seed: u64) -> Result<Sample> {
    let mut rng = ChaCha12Rng::seed_from_u64(rng_seed);
    ast_sample_with_rng(p, n, &mut rng)
}

/// Sum of log-densities over the sample.
pub fn ast_log_likelihood(s: &Sample, p: &ASTParams) -> f64 {
    let ctx = LogPdfContext::new(p);
    s.values().iter().map(|&x| ctx.log_pdf(x)).sum()
}
