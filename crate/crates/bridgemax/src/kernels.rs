//! Finite matrices reducing the Fredholm determinants to ordinary
//! determinants: the general-p matrix `M`, the Hermite-side matrices `Q`,
//! `F`, `S`, `T`, `A`, and the Laguerre kernel reduction.

use nalgebra::DMatrix;

use crate::orthopoly::dd::Dd;
use crate::orthopoly::{
    erfc, gauss_legendre, gauss_legendre_dd, hermite_function_scaled,
    hermite_imag_poly,
    hermite_poly, laguerre_poly, ln_gamma, semi_infinite_rule,
};
use crate::{Error, Result};

/// Labeled dense real matrix with explicit (inclusive) index ranges.
///
/// The matrices in this module are indexed over 0-based ranges of different
/// lengths (`N` versus `floor((N+1)/2)`), so every product checks that the
/// inner ranges agree instead of silently aligning offsets.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelMatrix {
    pub label: String,
    /// Inclusive row index bounds `(lo, hi)`.
    pub row_range: (usize, usize),
    /// Inclusive column index bounds `(lo, hi)`.
    pub col_range: (usize, usize),
    pub entries: DMatrix<f64>,
}

impl KernelMatrix {
    pub fn new(
        label: impl Into<String>,
        row_range: (usize, usize),
        col_range: (usize, usize),
        entries: DMatrix<f64>,
    ) -> Result<Self> {
        let label = label.into();
        if entries.nrows() != row_range.1 - row_range.0 + 1
            || entries.ncols() != col_range.1 - col_range.0 + 1
        {
            return Err(Error::Dimension(format!(
                "{label}: {}x{} entries do not match ranges {row_range:?} x {col_range:?}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("{label}: non-finite entry")));
        }
        Ok(KernelMatrix { label, row_range, col_range, entries })
    }

    /// Square builder over `{0, ..., n-1}`.
    fn square(label: impl Into<String>, entries: DMatrix<f64>) -> Result<Self> {
        let n = entries.nrows();
        Self::new(label, (0, n - 1), (0, n - 1), entries)
    }

    pub fn nrows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.entries.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    /// Matrix product; the inner index ranges must coincide.
    pub fn matmul(&self, rhs: &KernelMatrix) -> Result<KernelMatrix> {
        if self.col_range != rhs.row_range {
            return Err(Error::Dimension(format!(
                "{} * {}: inner ranges {:?} vs {:?} do not match",
                self.label, rhs.label, self.col_range, rhs.row_range
            )));
        }
        KernelMatrix::new(
            format!("{}*{}", self.label, rhs.label),
            self.row_range,
            rhs.col_range,
            &self.entries * &rhs.entries,
        )
    }

    pub fn scale(&self, c: f64) -> KernelMatrix {
        KernelMatrix {
            label: self.label.clone(),
            row_range: self.row_range,
            col_range: self.col_range,
            entries: &self.entries * c,
        }
    }

    /// Max-norm of the entrywise difference.
    pub fn max_abs_diff(&self, other: &KernelMatrix) -> f64 {
        (&self.entries - &other.entries).abs().max()
    }
}

/// Parity bookkeeping for the size-`floor((N+1)/2)` reduction: `b = 1` for
/// odd `N`, `b = 2` for even `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParitySplit {
    pub n: usize,
    pub b: usize,
    /// `floor((N+1)/2) = (N - b)/2 + 1`, the reduced matrix size.
    pub half: usize,
}

impl ParitySplit {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("parity split requires N >= 1".into()));
        }
        let b = if n % 2 == 1 { 1 } else { 2 };
        Ok(ParitySplit { n, b, half: (n - b) / 2 + 1 })
    }
}

fn binom(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let mut acc = 1.0;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|v| v as f64).product()
}

/// `C_j^2 = 1/(sqrt(pi) 2^j j!)`, the squared Hermite normalization.
///
/// `2^j j!` is exact in f64 up to j = 20, which keeps the result within a
/// couple of ulps; the log form would lose ~3e-15 relative.
fn hermite_norm_sq(j: usize) -> f64 {
    if j <= 20 {
        let pow_fact: f64 = (1..=j).map(|v| 2.0 * v as f64).product();
        1.0 / (std::f64::consts::PI.sqrt() * pow_fact)
    } else {
        (-0.5 * std::f64::consts::PI.ln() - j as f64 * std::f64::consts::LN_2
            - ln_gamma(j as f64 + 1.0))
        .exp()
    }
}

/// Composite Gauss-Legendre integration of a scaled-exponent integrand over
/// `[lo, hi]`: `f` returns `(value, log_scale)` and the integral of
/// `value * exp(log_scale)` is accumulated.
fn integrate_scaled<F: Fn(f64) -> (f64, f64)>(lo: f64, hi: f64, f: F) -> f64 {
    if hi <= lo {
        return 0.0;
    }
    const PANEL_WIDTH: f64 = 2.0;
    const POINTS: usize = 24;
    let npanels = (((hi - lo) / PANEL_WIDTH).ceil() as usize).max(1);
    let step = (hi - lo) / npanels as f64;
    let (gn, gw) = gauss_legendre(POINTS);
    let mut total = 0.0;
    for p in 0..npanels {
        let mid = lo + (p as f64 + 0.5) * step;
        let half = 0.5 * step;
        for (&t, &w) in gn.iter().zip(&gw) {
            let (v, ls) = f(mid + half * t);
            total += w * half * v * ls.exp();
        }
    }
    total
}

/// The `N x N` matrix whose determinant complement gives
/// `P(sqrt(2) M_N(p) <= r)`: with `c = r cosh(alpha)`, `s = r sinh(alpha)`,
///
/// `M_{jk} = int_c^inf phi_j phi_k + int_c^inf e^{2s(z-c)} phi_j(z) phi_k(2c-z) dz`.
///
/// Both integrals are evaluated with exponent-scaled Hermite functions, so
/// the reflected term stays finite even when `c` and `s` are in the
/// hundreds (p close to 0 or 1).
pub fn m_matrix_general_p(n: usize, r: f64, alpha: f64) -> Result<KernelMatrix> {
    if !alpha.is_finite() {
        return Err(Error::Domain(format!("alpha must be finite, got {alpha}")));
    }
    if n == 0 {
        return Err(Error::Domain("m_matrix_general_p requires N >= 1".into()));
    }
    let c = r * alpha.cosh();
    let s = r * alpha.sinh();
    build_reflected_matrix(n, c, s)
}

/// The p -> 0 limit matrix (`c = r`, `s = -r`): the reflected kernel of the
/// limiting determinant.
pub fn m_matrix_limit(n: usize, r: f64) -> Result<KernelMatrix> {
    build_reflected_matrix(n, r, -r)
}

fn build_reflected_matrix(n: usize, c: f64, s: f64) -> Result<KernelMatrix> {
    // Hermite mass for degree < N ends near sqrt(2N); pad generously.
    let band = (2.0 * n as f64).sqrt() + 10.0;
    let direct_hi = c.max(band);
    let reflect_hi = c + s.max(0.0) + band;
    let mut entries = DMatrix::zeros(n, n);
    for j in 0..n {
        for k in j..n {
            let direct = integrate_scaled(c, direct_hi, |z| {
                let a = hermite_function_scaled(j, z);
                let b = hermite_function_scaled(k, z);
                (a.value * b.value, a.log_scale + b.log_scale)
            });
            entries[(j, k)] = direct;
            entries[(k, j)] = direct;
        }
    }
    for j in 0..n {
        for k in 0..n {
            let reflected = integrate_scaled(c, reflect_hi, |z| {
                let a = hermite_function_scaled(j, z);
                let b = hermite_function_scaled(k, 2.0 * c - z);
                (a.value * b.value, a.log_scale + b.log_scale + 2.0 * s * (z - c))
            });
            entries[(j, k)] += reflected;
        }
    }
    KernelMatrix::square(format!("M(N={n},c={c},s={s})"), entries)
}

/// `Q_{jk} = C_j^2 int_r^inf H_j H_k e^{-z^2} dz` in closed form, via the
/// Hermite product expansion and the tail identity
/// `int_r^inf H_l e^{-z^2} = H_{l-1}(r) e^{-r^2}`.
///
/// The `C_j^2` prefactor is stored exactly as defined, so `Q` is not
/// symmetric entrywise (only after diagonal rescaling); in particular
/// `Q_{00} = erfc(r)/2` with the normalization folded in.
pub fn q_matrix_closed(n: usize, r: f64) -> Result<KernelMatrix> {
    let er = (-r * r).exp();
    let tail0 = 0.5 * std::f64::consts::PI.sqrt() * erfc(r);
    let mut entries = DMatrix::zeros(n, n);
    for j in 0..n {
        let cj2 = hermite_norm_sq(j);
        for k in 0..n {
            let mut sum = 0.0;
            for l in 0..=j.min(k) {
                let weight = 2f64.powi(l as i32) * factorial(l) * binom(j, l) * binom(k, l);
                let m = j + k - 2 * l;
                let tail = if m == 0 { tail0 } else { hermite_poly(m - 1, r) * er };
                sum += weight * tail;
            }
            entries[(j, k)] = cj2 * sum;
        }
    }
    KernelMatrix::square(format!("Q(N={n},r={r})"), entries)
}

/// `Q` by direct quadrature of the defining integral; the oracle for
/// [`q_matrix_closed`].
///
/// Off-diagonal entries reach ~1e4 under the `C_j^2` convention, so an
/// absolute agreement of 1e-11 with the closed form sits a few ulps above
/// machine precision. The Hermite recurrence and the weighted sum are
/// therefore carried in double-double arithmetic; the only f64-limited
/// factors left are `e^(-z^2)` and `C_j^2` (both a couple of ulps).
pub fn q_matrix_quadrature(n: usize, r: f64) -> Result<KernelMatrix> {
    if n == 0 {
        return Err(Error::Domain("q_matrix_quadrature requires N >= 1".into()));
    }
    let upper = r + f64::max(10.0, r + 10.0);
    let points = 200;
    let npanels = (((upper - r) / 8.0).ceil() as usize).max(1);
    let step = Dd::from(upper - r).div(Dd::from(npanels as f64));
    let (gn, gw) = gauss_legendre_dd(points);
    // Per node: weight with the Gaussian factor folded in, all in dd.
    let mut nodes = Vec::with_capacity(npanels * points);
    let mut weights = Vec::with_capacity(npanels * points);
    for panel in 0..npanels {
        let half = step.scale(0.5);
        let mid = Dd::from(r).add(step.scale(panel as f64 + 0.5));
        for (&t, &w) in gn.iter().zip(&gw) {
            let z = mid.add(half.mul(t));
            let gauss = z.mul(z).scale(-1.0).exp();
            nodes.push(z);
            weights.push(w.mul(half).mul(gauss));
        }
    }
    // H_m(z) per node by the dd recurrence H_m = 2z H_{m-1} - 2(m-1) H_{m-2}.
    let hvals: Vec<Vec<Dd>> = nodes
        .iter()
        .map(|&z| {
            let two_z = z.scale(2.0);
            let mut row = Vec::with_capacity(n);
            row.push(Dd::from(1.0));
            if n > 1 {
                row.push(two_z);
            }
            for m in 2..n {
                let next = row[m - 1]
                    .mul(two_z)
                    .sub(row[m - 2].scale(2.0 * (m as f64 - 1.0)));
                row.push(next);
            }
            row
        })
        .collect();
    let mut entries = DMatrix::zeros(n, n);
    for j in 0..n {
        let cj2 = hermite_norm_sq(j);
        for k in 0..n {
            let mut acc = Dd::ZERO;
            for (i, &w) in weights.iter().enumerate() {
                acc = acc.add(hvals[i][j].mul(hvals[i][k]).mul(w));
            }
            entries[(j, k)] = cj2 * acc.to_f64();
        }
    }
    KernelMatrix::square(format!("Qquad(N={n},r={r})"), entries)
}

/// `F_{jk} = binom(k,j) (4r)^{k-j} (-1)^j 1_{j<=k} + delta_{jk}`; upper
/// triangular.
pub fn f_matrix(n: usize, r: f64) -> Result<KernelMatrix> {
    let mut entries = DMatrix::zeros(n, n);
    for j in 0..n {
        for k in j..n {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            entries[(j, k)] = binom(k, j) * (4.0 * r).powi((k - j) as i32) * sign;
        }
        entries[(j, j)] += 1.0;
    }
    KernelMatrix::square(format!("F(N={n},r={r})"), entries)
}

/// `S_{jt} = t!/(2^{2j} (t-N+2j+b)!) H_{t-N+2j+b}(r)`, with the convention
/// that `H_m = 0` and `1/m! = 0` for negative `m`.
pub fn s_matrix(n: usize, r: f64) -> Result<KernelMatrix> {
    let parity = ParitySplit::new(n)?;
    let rows = parity.half;
    let mut entries = DMatrix::zeros(rows, n);
    for j in 0..rows {
        for t in 0..n {
            let idx = t as i64 - n as i64 + 2 * j as i64 + parity.b as i64;
            if idx < 0 {
                continue;
            }
            let m = idx as usize;
            // t!/m! = (m+1)(m+2)...t  (m <= t always holds here).
            let ratio: f64 = (m + 1..=t).map(|v| v as f64).product();
            entries[(j, t)] = ratio / 4f64.powi(j as i32) * hermite_poly(m, r);
        }
    }
    KernelMatrix::new(format!("S(N={n},r={r})"), (0, rows - 1), (0, n - 1), entries)
}

/// `T_{uk}`, reduced to real arithmetic:
/// `T_{uk} = (-1)^u 2^{2k} P_{N-2k-b-u}(r) / (u! (N-2k-b-u)!)` where
/// `P_m` is the real polynomial with `H_m(i r) = i^m P_m(r)`.
///
/// This sign simplification of the complex-valued definition is verified
/// against direct complex evaluation in the tests.
pub fn t_matrix(n: usize, r: f64) -> Result<KernelMatrix> {
    let parity = ParitySplit::new(n)?;
    let cols = parity.half;
    let mut entries = DMatrix::zeros(n, cols);
    for u in 0..n {
        for k in 0..cols {
            let idx = n as i64 - 2 * k as i64 - parity.b as i64 - u as i64;
            if idx < 0 {
                continue;
            }
            let m = idx as usize;
            let sign = if u % 2 == 0 { 1.0 } else { -1.0 };
            entries[(u, k)] =
                sign * 4f64.powi(k as i32) * hermite_imag_poly(m, r) / (factorial(u) * factorial(m));
        }
    }
    KernelMatrix::new(format!("T(N={n},r={r})"), (0, n - 1), (0, cols - 1), entries)
}

/// `A_{jk} = 2 Q_{2j+b-1, 2k+b-1}`, the reduced square matrix of size
/// `floor((N+1)/2)`.
pub fn a_matrix(n: usize, r: f64) -> Result<KernelMatrix> {
    let parity = ParitySplit::new(n)?;
    let q = q_matrix_closed(n, r)?;
    let size = parity.half;
    let mut entries = DMatrix::zeros(size, size);
    for j in 0..size {
        for k in 0..size {
            entries[(j, k)] = 2.0 * q.entries[(2 * j + parity.b - 1, 2 * k + parity.b - 1)];
        }
    }
    KernelMatrix::square(format!("A(N={n},r={r})"), entries)
}

/// Rank-`m` reduction of the Laguerre kernel:
/// `G_{jk} = int_x^inf psi_j^(a) psi_k^(a) dz`.
///
/// Evaluated after the substitution `z = u^2`, which removes the `x^{a/2}`
/// endpoint singularity and leaves a polynomial against the Gaussian
/// weight, handled exactly by the semi-infinite rule.
pub fn laguerre_kernel_matrix(m: usize, a: f64, x: f64) -> Result<KernelMatrix> {
    if a <= -1.0 {
        return Err(Error::Domain(format!("laguerre kernel requires a > -1, got {a}")));
    }
    if x < 0.0 {
        return Err(Error::Domain(format!("laguerre kernel requires x >= 0, got {x}")));
    }
    if m == 0 {
        return Err(Error::Domain("laguerre kernel requires m >= 1".into()));
    }
    let rule = semi_infinite_rule(x.sqrt(), 200)?;
    let pref: Vec<f64> = (0..m)
        .map(|k| 0.5 * (ln_gamma(k as f64 + 1.0) - ln_gamma(k as f64 + a + 1.0)))
        .collect();
    let mut entries = DMatrix::zeros(m, m);
    for j in 0..m {
        for k in j..m {
            let pjk = (pref[j] + pref[k]).exp();
            let val = rule.integrate_weighted(|u| {
                2.0 * pjk
                    * u.powf(1.0 + 2.0 * a)
                    * laguerre_poly(j, a, u * u)
                    * laguerre_poly(k, a, u * u)
            });
            entries[(j, k)] = val;
            entries[(k, j)] = val;
        }
    }
    KernelMatrix::square(format!("G(m={m},a={a},x={x})"), entries)
}
