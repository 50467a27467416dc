//! Samplers for the three random-matrix models used to validate the
//! determinant formulas: Hermitian matrix bridges (whose ordered eigenvalues
//! realize non-intersecting Brownian bridges), the antisymmetric Gaussian
//! ensemble, and Wishart matrices, plus a stationary matrix
//! Ornstein-Uhlenbeck cross-check.
//!
//! Reproducibility contract: each draw uses its own counter-based RNG stream
//! derived from `(seed, draw index)`, so parallel and serial runs produce
//! bit-identical batches.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A batch of scalar draws from one model, with the seed that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleBatch {
    pub values: Vec<f64>,
    pub model: String,
    pub seed: u64,
    pub n: usize,
}

impl SampleBatch {
    fn assemble(model: String, seed: u64, values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("{model}: non-finite sample")));
        }
        let n = values.len();
        Ok(SampleBatch { values, model, seed, n })
    }

    /// Checks the stored invariants (finite values, consistent count).
    pub fn validate(&self) -> Result<()> {
        if self.values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("{}: non-finite sample", self.model)));
        }
        if self.n != self.values.len() {
            return Err(Error::Dimension(format!(
                "{}: n={} but {} values",
                self.model,
                self.n,
                self.values.len()
            )));
        }
        Ok(())
    }
}

/// Configuration of the matrix-bridge sampler.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatrixBridgeConfig {
    /// Number of non-intersecting paths (matrix dimension).
    pub n: usize,
    /// Right endpoint of the restriction window, in (0, 1].
    pub p: f64,
    /// Number of uniform time steps covering [0, p].
    pub steps: usize,
    pub seed: u64,
}

impl MatrixBridgeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Config("bridge sampler requires N >= 1".into()));
        }
        if !(self.p > 0.0 && self.p <= 1.0) {
            return Err(Error::Config(format!("p must lie in (0, 1], got {}", self.p)));
        }
        if self.steps < 2 {
            return Err(Error::Config(format!("steps must be >= 2, got {}", self.steps)));
        }
        Ok(())
    }
}

fn draw_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Dense Hermitian matrix stored as a real diagonal plus the strict upper
/// triangle (row-major), split into real and imaginary parts.
#[derive(Debug, Clone)]
pub(crate) struct Hermitian {
    n: usize,
    diag: Vec<f64>,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl Hermitian {
    fn zeros(n: usize) -> Self {
        let off = n * (n - 1) / 2;
        Hermitian { n, diag: vec![0.0; n], re: vec![0.0; off], im: vec![0.0; off] }
    }

    /// Flat index of the strict-upper entry `(j, k)`, `j < k`.
    fn off(&self, j: usize, k: usize) -> usize {
        j * self.n - j * (j + 1) / 2 + (k - j - 1)
    }

    /// `[[Re, -Im], [Im, Re]]`: a real symmetric matrix whose spectrum is
    /// the Hermitian spectrum doubled.
    fn embed(&self) -> DMatrix<f64> {
        let n = self.n;
        let mut m = DMatrix::zeros(2 * n, 2 * n);
        for j in 0..n {
            m[(j, j)] = self.diag[j];
            m[(n + j, n + j)] = self.diag[j];
            for k in j + 1..n {
                let (re, im) = (self.re[self.off(j, k)], self.im[self.off(j, k)]);
                m[(j, k)] = re;
                m[(k, j)] = re;
                m[(n + j, n + k)] = re;
                m[(n + k, n + j)] = re;
                // Upper-right block -Im, lower-left block Im.
                m[(j, n + k)] = -im;
                m[(k, n + j)] = im;
                m[(n + j, k)] = im;
                m[(n + k, j)] = -im;
            }
        }
        m
    }

    /// Largest eigenvalue; closed forms for n <= 3, real embedding above.
    pub(crate) fn top_eigenvalue(&self) -> f64 {
        match self.n {
            1 => self.diag[0],
            2 => {
                let (a, b) = (self.diag[0], self.diag[1]);
                let z2 = self.re[0] * self.re[0] + self.im[0] * self.im[0];
                let h = 0.5 * (a - b);
                0.5 * (a + b) + (h * h + z2).sqrt()
            }
            3 => self.top_eigenvalue_3(),
            _ => {
                let eig = self.embed().symmetric_eigen();
                eig.eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max)
            }
        }
    }

    /// Trigonometric closed form for the largest eigenvalue of a 3x3
    /// Hermitian matrix.
    fn top_eigenvalue_3(&self) -> f64 {
        let d = &self.diag;
        let z12 = (self.re[0], self.im[0]);
        let z13 = (self.re[1], self.im[1]);
        let z23 = (self.re[2], self.im[2]);
        let n12 = z12.0 * z12.0 + z12.1 * z12.1;
        let n13 = z13.0 * z13.0 + z13.1 * z13.1;
        let n23 = z23.0 * z23.0 + z23.1 * z23.1;
        let p1 = n12 + n13 + n23;
        if p1 == 0.0 {
            return d[0].max(d[1]).max(d[2]);
        }
        let q = (d[0] + d[1] + d[2]) / 3.0;
        let p2 = (d[0] - q).powi(2) + (d[1] - q).powi(2) + (d[2] - q).powi(2) + 2.0 * p1;
        let p = (p2 / 6.0).sqrt();
        // det((A - qI)/p), real for Hermitian input:
        // d1 d2 d3 + 2 Re(z12 z23 conj(z13)) - d1 n23 - d2 n13 - d3 n12.
        let (b1, b2, b3) = (d[0] - q, d[1] - q, d[2] - q);
        let cross = z12.0 * (z23.0 * z13.0 + z23.1 * z13.1)
            - z12.1 * (z23.1 * z13.0 - z23.0 * z13.1);
        let det = (b1 * b2 * b3 + 2.0 * cross - b1 * n23 - b2 * n13 - b3 * n12)
            / (p * p * p);
        let phi = (det / 2.0).clamp(-1.0, 1.0).acos() / 3.0;
        q + 2.0 * p * phi.cos()
    }

    /// All eigenvalues in ascending order (each once), via the embedding.
    #[cfg(test)]
    pub(crate) fn eigenvalues(&self) -> Vec<f64> {
        let eig = self.embed().symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| a.total_cmp(b));
        // The embedding doubles every eigenvalue.
        vals.into_iter().step_by(2).collect()
    }

    /// One conditional bridge step from time `s` to time `t` (both in
    /// [0, 1), `s < t`): every entry is an independent scalar Brownian
    /// bridge pinned at 0 at times 0 and 1, with variance `t(1-t)` on the
    /// diagonal and `t(1-t)/2` per off-diagonal real/imaginary part.
    fn bridge_step(&mut self, rng: &mut ChaCha8Rng, s: f64, t: f64) {
        let shrink = (1.0 - t) / (1.0 - s);
        let sd = ((t - s) * shrink).sqrt();
        let sd_off = sd / std::f64::consts::SQRT_2;
        for v in &mut self.diag {
            let g: f64 = rng.sample(StandardNormal);
            *v = *v * shrink + sd * g;
        }
        for v in self.re.iter_mut().chain(self.im.iter_mut()) {
            let g: f64 = rng.sample(StandardNormal);
            *v = *v * shrink + sd_off * g;
        }
    }

    /// One exact Ornstein-Uhlenbeck transition over time `dt` with the
    /// stationary law matching the fixed-time bridge marginal (diagonal
    /// variance 1/2, off-diagonal part variance 1/4).
    fn ou_step(&mut self, rng: &mut ChaCha8Rng, dt: f64) {
        let decay = (-dt).exp();
        let sd_diag = (0.5 * (1.0 - decay * decay)).sqrt();
        let sd_off = (0.25 * (1.0 - decay * decay)).sqrt();
        for v in &mut self.diag {
            let g: f64 = rng.sample(StandardNormal);
            *v = *v * decay + sd_diag * g;
        }
        for v in self.re.iter_mut().chain(self.im.iter_mut()) {
            let g: f64 = rng.sample(StandardNormal);
            *v = *v * decay + sd_off * g;
        }
    }

    /// Draw from the stationary Ornstein-Uhlenbeck law directly.
    fn ou_stationary(n: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut h = Hermitian::zeros(n);
        for v in &mut h.diag {
            let g: f64 = rng.sample(StandardNormal);
            *v = g * 0.5f64.sqrt();
        }
        for v in h.re.iter_mut().chain(h.im.iter_mut()) {
            let g: f64 = rng.sample(StandardNormal);
            *v = g * 0.5;
        }
        h
    }
}

/// One bridge draw: the maximum over the uniform grid `t_i = p i/steps`
/// of the top eigenvalue (the grid includes `t = 0` where the value is 0).
pub(crate) fn nibb_draw(cfg: &MatrixBridgeConfig, rng: &mut ChaCha8Rng) -> f64 {
    let mut h = Hermitian::zeros(cfg.n);
    let mut max = 0.0f64;
    let mut s = 0.0;
    for i in 1..=cfg.steps {
        let t = cfg.p * i as f64 / cfg.steps as f64;
        // Guard the p = 1 endpoint where the bridge is pinned back at 0.
        let t = t.min(1.0 - 1e-12);
        h.bridge_step(rng, s, t);
        max = max.max(h.top_eigenvalue());
        s = t;
    }
    max
}

/// Empirical draws of the restricted maximum `M_N(p)`: the maximum over a
/// `steps`-point uniform grid on `[0, p]` of the top eigenvalue of an
/// N x N Hermitian Brownian bridge. Grid maxima undershoot the continuous
/// maximum by `O(sqrt(p/steps))`.
pub fn sample_nibb_restricted_max(cfg: &MatrixBridgeConfig, count: usize) -> Result<SampleBatch> {
    cfg.validate()?;
    if count == 0 {
        return Err(Error::Config("count must be >= 1".into()));
    }
    let values: Vec<f64> = (0..count)
        .into_par_iter()
        .map(|i| nibb_draw(cfg, &mut draw_rng(cfg.seed, i as u64)))
        .collect();
    SampleBatch::assemble(
        format!("nibb(N={},p={},steps={})", cfg.n, cfg.p, cfg.steps),
        cfg.seed,
        values,
    )
}

/// Largest singular value of `A = (X - X^T)/2` with `X` an n x n standard
/// Gaussian matrix; equals the largest eigenvalue of the antisymmetric
/// ensemble member `iA` (the spectrum comes in +/- pairs).
pub fn sample_antige_top(n: usize, count: usize, seed: u64) -> Result<SampleBatch> {
    if n < 2 {
        return Err(Error::Config(format!("antisymmetric sampler requires n >= 2, got {n}")));
    }
    if count == 0 {
        return Err(Error::Config("count must be >= 1".into()));
    }
    let values: Vec<f64> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = draw_rng(seed, i as u64);
            // a_{jk} = (X_{jk} - X_{kj})/2 ~ N(0, 1/2) independently for j < k.
            let mut a = DMatrix::zeros(n, n);
            for j in 0..n {
                for k in j + 1..n {
                    let g: f64 = rng.sample(StandardNormal);
                    let v = g * 0.5f64.sqrt();
                    a[(j, k)] = v;
                    a[(k, j)] = -v;
                }
            }
            // Top singular value via the PSD matrix A^T A = -A^2.
            let ata = -(&a * &a);
            ata.symmetric_eigen()
                .eigenvalues
                .iter()
                .copied()
                .fold(0.0f64, f64::max)
                .sqrt()
        })
        .collect();
    SampleBatch::assemble(format!("antige(n={n})"), seed, values)
}

/// Largest eigenvalue of the Wishart matrix `X X^T`, `X` an N x m real
/// standard Gaussian matrix.
pub fn sample_wishart_loe_top(n: usize, m: usize, count: usize, seed: u64) -> Result<SampleBatch> {
    if n == 0 || m < n {
        return Err(Error::Config(format!(
            "Wishart sampler requires m >= N >= 1, got N={n}, m={m}"
        )));
    }
    if count == 0 {
        return Err(Error::Config("count must be >= 1".into()));
    }
    let values: Vec<f64> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = draw_rng(seed, i as u64);
            let x = DMatrix::from_fn(n, m, |_, _| rng.sample::<f64, _>(StandardNormal));
            let w = &x * x.transpose();
            w.symmetric_eigen()
                .eigenvalues
                .iter()
                .copied()
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    SampleBatch::assemble(format!("wishart(N={n},m={m})"), seed, values)
}

/// Stationary matrix Ornstein-Uhlenbeck cross-check: records
/// `sup_i lambda_max(t_i) / cosh(t_i)` over the given times, using exact
/// OU transitions between grid times.
pub fn sample_dyson_stationary_top(
    n: usize,
    times: &[f64],
    count: usize,
    seed: u64,
) -> Result<SampleBatch> {
    if n == 0 {
        return Err(Error::Config("stationary sampler requires N >= 1".into()));
    }
    if times.is_empty() || times.iter().any(|t| !t.is_finite()) {
        return Err(Error::Config("times must be nonempty and finite".into()));
    }
    if times.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Config("times must be strictly increasing".into()));
    }
    if count == 0 {
        return Err(Error::Config("count must be >= 1".into()));
    }
    let values: Vec<f64> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = draw_rng(seed, i as u64);
            let mut h = Hermitian::ou_stationary(n, &mut rng);
            let mut sup = h.top_eigenvalue() / times[0].cosh();
            for w in times.windows(2) {
                h.ou_step(&mut rng, w[1] - w[0]);
                sup = sup.max(h.top_eigenvalue() / w[1].cosh());
            }
            sup
        })
        .collect();
    SampleBatch::assemble(format!("dyson(N={n},times={})", times.len()), seed, values)
}

/// Largest eigenvalue of a dense real symmetric matrix.
pub fn symmetric_top_eigenvalue(m: &DMatrix<f64>) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "top eigenvalue of a {}x{} matrix",
            m.nrows(),
            m.ncols()
        )));
    }
    let scale = m.abs().max().max(1.0);
    for j in 0..m.nrows() {
        for k in j + 1..m.ncols() {
            if (m[(j, k)] - m[(k, j)]).abs() > 1e-12 * scale {
                return Err(Error::Domain(format!(
                    "matrix is not symmetric at ({j},{k}): {} vs {}",
                    m[(j, k)],
                    m[(k, j)]
                )));
            }
        }
    }
    Ok(m.clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max))
}
