//! Determinants and the CDF evaluators built on the kernel matrices, plus
//! Kolmogorov-Smirnov statistics for the Monte Carlo comparisons.

use serde::{Deserialize, Serialize};

use crate::kernels::{
    f_matrix, laguerre_kernel_matrix, m_matrix_general_p, q_matrix_closed, KernelMatrix,
    ParitySplit,
};
use crate::{Error, Result};

/// `det(I - M)` by pivoted LU; the finite determinant realizing the
/// rank-reduced Fredholm determinants.
pub fn det_id_minus(m: &KernelMatrix) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "{}: determinant of a non-square matrix",
            m.label
        )));
    }
    let n = m.nrows();
    let mut a = -m.entries.clone();
    for i in 0..n {
        a[(i, i)] += 1.0;
    }
    Ok(a.lu().determinant())
}

/// `P(M_N(p) <= r)`: the maximum over `[0, p]` of the top of `N`
/// non-intersecting Brownian bridges on `[0, 1]`.
///
/// Computed as `det(I - M)` with the reflected kernel matrix at
/// `(sqrt(2) r, alpha = log(p/(1-p))/2)`; the `sqrt(2)` converts from the
/// scaled variable the kernel is stated in. Negative `r` returns 0.
pub fn restricted_max_cdf(n: usize, p: f64, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) || p == 0.0 || p == 1.0 {
        return Err(Error::Domain(format!("p must lie in (0, 1), got {p}")));
    }
    if r <= 0.0 {
        return Ok(0.0);
    }
    let alpha = 0.5 * (p / (1.0 - p)).ln();
    det_id_minus(&m_matrix_general_p(n, std::f64::consts::SQRT_2 * r, alpha)?)
}

/// The small-p limit law `P(lim M_N(p)/sqrt(p) <= x)` through the Hermite
/// reduction: `det(I - Q F)` at `r = x/sqrt(2)`.
pub fn limit_cdf_hermite(n: usize, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Ok(0.0);
    }
    let r = x / std::f64::consts::SQRT_2;
    let qf = q_matrix_closed(n, r)?.matmul(&f_matrix(n, r)?)?;
    det_id_minus(&qf)
}

/// Largest-charge CDF of the generalized Laguerre unitary ensemble,
/// `det(I - G)` with the rank-m kernel reduction.
pub fn lue_cdf(m: usize, a: f64, x: f64) -> Result<f64> {
    if x < 0.0 {
        return Ok(0.0);
    }
    det_id_minus(&laguerre_kernel_matrix(m, a, x)?)
}

/// The same limit law as [`limit_cdf_hermite`] through the Laguerre side:
/// `F_{LUE, floor((N+1)/2)}^{(pm 1/2)}(x^2/2)` with sign `(-1)^N`.
pub fn limit_cdf_laguerre(n: usize, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Ok(0.0);
    }
    let parity = ParitySplit::new(n)?;
    let a = if n % 2 == 0 { 0.5 } else { -0.5 };
    lue_cdf(parity.half, a, 0.5 * x * x)
}

/// One-sample Kolmogorov-Smirnov statistic: sup-norm gap between the
/// empirical CDF of `values` and `theory`, both one-sided gaps included.
pub fn ks_one_sample<F: Fn(f64) -> f64>(values: &[f64], theory: F) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::Domain("KS statistic of an empty sample".into()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let n = sorted.len() as f64;
    let mut sup: f64 = 0.0;
    for (i, &v) in sorted.iter().enumerate() {
        let f = theory(v);
        let above = (i as f64 + 1.0) / n - f;
        let below = f - i as f64 / n;
        sup = sup.max(above).max(below);
    }
    Ok(sup)
}

/// Two-sample Kolmogorov-Smirnov statistic.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Domain("KS statistic of an empty sample".into()));
    }
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_by(|x, y| x.total_cmp(y));
    sb.sort_by(|x, y| x.total_cmp(y));
    let (na, nb) = (sa.len() as f64, sb.len() as f64);
    let mut sup: f64 = 0.0;
    let (mut i, mut j) = (0usize, 0usize);
    while i < sa.len() || j < sb.len() {
        // Advance past all copies of the smaller value on both sides, so
        // tied observations move the two empirical CDFs together.
        let v = match (sa.get(i), sb.get(j)) {
            (Some(&x), Some(&y)) => x.min(y),
            (Some(&x), None) => x,
            (None, Some(&y)) => y,
            (None, None) => break,
        };
        while i < sa.len() && sa[i] == v {
            i += 1;
        }
        while j < sb.len() && sb[j] == v {
            j += 1;
        }
        sup = sup.max((i as f64 / na - j as f64 / nb).abs());
    }
    Ok(sup)
}

/// Descriptor attached to a [`CdfCurve`]: which model produced it and by
/// which method.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveMeta {
    pub model: String,
    pub method: String,
}

/// A theoretical or empirical CDF sampled on an increasing grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CdfCurve {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub meta: CurveMeta,
}

/// Slack for CDF monotonicity (quadrature noise between neighboring grid
/// points) and for the [0, 1] range.
const MONOTONE_SLACK: f64 = 1e-8;
const RANGE_SLACK: f64 = 1e-9;

impl CdfCurve {
    /// Validated constructor; see [`CdfCurve::validate`].
    pub fn new(grid: Vec<f64>, values: Vec<f64>, meta: CurveMeta) -> Result<Self> {
        let curve = CdfCurve { grid, values, meta };
        curve.validate()?;
        Ok(curve)
    }

    /// Evaluates `f` over `grid` and assembles a validated curve.
    pub fn from_fn<F: Fn(f64) -> Result<f64>>(
        grid: Vec<f64>,
        meta: CurveMeta,
        f: F,
    ) -> Result<Self> {
        let values = grid.iter().map(|&r| f(r)).collect::<Result<Vec<_>>>()?;
        CdfCurve::new(grid, values, meta)
    }

    /// Checks the curve invariants: strictly increasing grid, matching
    /// lengths, values in `[-1e-9, 1+1e-9]`, nondecreasing up to 1e-8 slack.
    pub fn validate(&self) -> Result<()> {
        if self.grid.is_empty() {
            return Err(Error::Config("empty CDF grid".into()));
        }
        if self.grid.len() != self.values.len() {
            return Err(Error::Dimension(format!(
                "grid length {} != value length {}",
                self.grid.len(),
                self.values.len()
            )));
        }
        if self.grid.iter().any(|g| !g.is_finite()) || self.values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("non-finite entry in CDF curve".into()));
        }
        if self.grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config("CDF grid is not strictly increasing".into()));
        }
        for w in self.values.windows(2) {
            if w[1] < w[0] - MONOTONE_SLACK {
                return Err(Error::Domain(format!(
                    "CDF values decrease: {} -> {}",
                    w[0], w[1]
                )));
            }
        }
        let first = self.values[0];
        let last = *self.values.last().unwrap();
        if first < -RANGE_SLACK || last > 1.0 + RANGE_SLACK {
            return Err(Error::Domain(format!(
                "CDF values out of range: first {first}, last {last}"
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::{erf, erfc};
    use nalgebra::DMatrix;

    fn km(entries: DMatrix<f64>) -> KernelMatrix {
        let n = entries.nrows();
        KernelMatrix::new("t", (0, n - 1), (0, entries.ncols() - 1), entries).unwrap()
    }

    #[test]
    fn det_hand_cases() {
        assert_eq!(det_id_minus(&km(DMatrix::zeros(2, 2))).unwrap(), 1.0);
        assert_eq!(det_id_minus(&km(DMatrix::identity(3, 3))).unwrap(), 0.0);
        let one = km(DMatrix::from_element(1, 1, erfc(1.0)));
        assert!((det_id_minus(&one).unwrap() - erf(1.0)).abs() < 1e-15);
        let rect = km(DMatrix::zeros(2, 3));
        assert!(det_id_minus(&rect).is_err());
    }

    #[test]
    fn det_cyclic_invariance() {
        for n in [2usize, 5, 9] {
            let r = 0.8;
            let q = q_matrix_closed(n, r).unwrap();
            let f = f_matrix(n, r).unwrap();
            let qf = det_id_minus(&q.matmul(&f).unwrap()).unwrap();
            let fq = det_id_minus(&f.matmul(&q).unwrap()).unwrap();
            assert!((qf - fq).abs() < 1e-12, "N={n}: {qf} vs {fq}");
        }
    }

    #[test]
    fn limit_n1_is_folded_normal() {
        for i in 0..=40 {
            let x = 0.1 * i as f64;
            let expect = erf(x / std::f64::consts::SQRT_2);
            let h = limit_cdf_hermite(1, x).unwrap();
            let l = limit_cdf_laguerre(1, x).unwrap();
            assert!((h - expect).abs() < 1e-12, "x={x}");
            assert!((l - expect).abs() < 1e-10, "x={x}");
        }
    }

    #[test]
    fn hermite_laguerre_sides_agree() {
        // The central finite-N equivalence of the two determinant formulas.
        for n in 1..=10usize {
            for i in 0..=20 {
                let x = 0.2 * i as f64;
                let h = limit_cdf_hermite(n, x).unwrap();
                let l = limit_cdf_laguerre(n, x).unwrap();
                assert!((h - l).abs() < 1e-8, "N={n} x={x}: {h} vs {l}");
            }
        }
    }

    #[test]
    fn limit_cdf_endpoints() {
        for n in 1..=10usize {
            assert_eq!(limit_cdf_hermite(n, 0.0).unwrap(), 0.0);
            assert_eq!(limit_cdf_laguerre(n, 0.0).unwrap(), 0.0);
            assert_eq!(limit_cdf_hermite(n, -1.0).unwrap(), 0.0);
            // The tail at x = 8 is genuine mass for larger N (2.5e-5 at
            // N=10, confirmed by both determinant routes), so the hard
            // bound moves with the spectral edge sqrt(2N).
            let top = limit_cdf_hermite(n, (2.0 * n as f64).sqrt() + 6.0).unwrap();
            assert!((top - 1.0).abs() < 1e-6, "N={n}: {top}");
            if n <= 5 {
                let at8 = limit_cdf_hermite(n, 8.0).unwrap();
                assert!((at8 - 1.0).abs() < 1e-8, "N={n}: {at8}");
            }
        }
    }

    #[test]
    fn lue_scalar_closed_forms() {
        for i in 1..=10 {
            let x = 0.3 * i as f64;
            let half = lue_cdf(1, -0.5, x).unwrap();
            assert!((half - erf(x.sqrt())).abs() < 1e-11, "x={x}");
            let three_half = lue_cdf(1, 0.5, x).unwrap();
            let expect =
                erf(x.sqrt()) - 2.0 / std::f64::consts::PI.sqrt() * x.sqrt() * (-x).exp();
            assert!((three_half - expect).abs() < 1e-11, "x={x}");
        }
        // At x = 0 the kernel is the identity up to quadrature noise.
        assert!(lue_cdf(3, 0.5, 0.0).unwrap().abs() < 1e-10);
        assert_eq!(lue_cdf(2, -0.5, -1.0).unwrap(), 0.0);
    }

    #[test]
    fn restricted_max_basics() {
        assert!(restricted_max_cdf(2, 0.0, 1.0).is_err());
        assert!(restricted_max_cdf(2, 1.0, 1.0).is_err());
        assert_eq!(restricted_max_cdf(3, 0.4, 0.0).unwrap(), 0.0);
        // Monotone in p: larger interval, stochastically larger maximum.
        for n in [1usize, 2] {
            let r = 0.9;
            let lo = restricted_max_cdf(n, 0.2, r).unwrap();
            let mid = restricted_max_cdf(n, 0.5, r).unwrap();
            let hi = restricted_max_cdf(n, 0.8, r).unwrap();
            assert!(lo >= mid && mid >= hi, "N={n}: {lo} {mid} {hi}");
        }
    }

    #[test]
    fn restricted_max_n1_full_bridge_limit() {
        // p -> 1 recovers the classical Brownian bridge maximum law.
        let p = 1.0 - 1e-6;
        for i in 1..=8 {
            let r = 0.25 * i as f64;
            let got = restricted_max_cdf(1, p, r).unwrap();
            let expect = 1.0 - (-2.0 * r * r).exp();
            assert!((got - expect).abs() < 1e-3, "r={r}: {got} vs {expect}");
        }
    }

    #[test]
    fn small_p_converges_to_limit_law() {
        for n in [1usize, 3] {
            for &x in &[0.7, 1.5] {
                let limit = limit_cdf_laguerre(n, x).unwrap();
                let mut prev_gap = f64::INFINITY;
                for &p in &[1e-2, 1e-4, 1e-6] {
                    let scaled = restricted_max_cdf(n, p, p.sqrt() * x).unwrap();
                    let gap = (scaled - limit).abs();
                    assert!(gap < prev_gap, "N={n} x={x} p={p}: {gap} !< {prev_gap}");
                    prev_gap = gap;
                }
                assert!(prev_gap < 1e-3, "N={n} x={x}: final gap {prev_gap}");
            }
        }
    }

    #[test]
    fn ks_statistics() {
        assert!(ks_one_sample(&[], |_| 0.0).is_err());
        // Quantiles at (i - 1/2)/n give exactly 1/(2n).
        let n = 50usize;
        let uniform: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
        let ks = ks_one_sample(&uniform, |x| x.clamp(0.0, 1.0)).unwrap();
        assert!((ks - 0.5 / n as f64).abs() < 1e-14);
        // Degenerate sample against a continuous CDF.
        let ks = ks_one_sample(&[0.25; 10], |x| x.clamp(0.0, 1.0)).unwrap();
        assert!((ks - 0.75).abs() < 1e-14);
        // Two-sample: identical samples have distance 0.
        assert_eq!(ks_two_sample(&uniform, &uniform).unwrap(), 0.0);
        // Disjoint supports have distance 1.
        let shifted: Vec<f64> = uniform.iter().map(|v| v + 2.0).collect();
        assert_eq!(ks_two_sample(&uniform, &shifted).unwrap(), 1.0);
        assert!(ks_two_sample(&[], &[1.0]).is_err());
    }

    #[test]
    fn curve_validation() {
        let meta = CurveMeta { model: "limit(2)".into(), method: "hermite".into() };
        let grid: Vec<f64> = (0..=20).map(|i| 0.3 * i as f64).collect();
        let curve =
            CdfCurve::from_fn(grid.clone(), meta.clone(), |x| limit_cdf_hermite(2, x)).unwrap();
        assert!(curve.values[0].abs() < 1e-9);
        assert!(curve.values.last().unwrap() > &0.999999);

        let bad_grid = CdfCurve::new(vec![0.0, 0.0, 1.0], vec![0.0, 0.1, 0.2], meta.clone());
        assert!(bad_grid.is_err());
        let decreasing = CdfCurve::new(vec![0.0, 1.0], vec![0.5, 0.2], meta.clone());
        assert!(decreasing.is_err());
        let out_of_range = CdfCurve::new(vec![0.0, 1.0], vec![0.0, 1.5], meta);
        assert!(out_of_range.is_err());
    }
}
