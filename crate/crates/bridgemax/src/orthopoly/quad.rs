use crate::orthopoly::dd::Dd;
use crate::{Error, Result};

/// Nodes and weights for integrals of the form `int_lower^inf f(z) e^(-z^2) dz`.
///
/// The Gaussian factor is folded into the weights, so
/// [`QuadratureRule::integrate_weighted`] applies the rule to the smooth
/// factor `f` alone.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub lower: f64,
    pub description: String,
}

impl QuadratureRule {
    /// `sum_i w_i f(x_i)`, approximating `int_lower^inf f(z) e^(-z^2) dz`.
    pub fn integrate_weighted<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-like initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let prev = x;
            x -= p / d;
            // Iterate to the fixed point so nodes are accurate to the ulp.
            if x == prev {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Gauss-Legendre nodes and weights on `[-1, 1]` in double-double precision:
/// the f64 nodes polished by two Newton steps carried in dd arithmetic.
///
/// Used by the quadrature oracles whose tolerance sits a few ulps above f64.
pub(crate) fn gauss_legendre_dd(n: usize) -> (Vec<Dd>, Vec<Dd>) {
    let (nodes, _) = gauss_legendre(n);
    let mut dd_nodes = Vec::with_capacity(n);
    let mut dd_weights = Vec::with_capacity(n);
    for &x0 in &nodes {
        let mut x = Dd::from(x0);
        let mut d = Dd::from(1.0);
        for _ in 0..2 {
            let (p, dp) = legendre_with_derivative_dd(n, x);
            d = dp;
            x = x.sub(p.div(dp));
        }
        let one_minus_x2 = Dd::from(1.0).sub(x.mul(x));
        let w = Dd::from(2.0).div(one_minus_x2.mul(d).mul(d));
        dd_nodes.push(x);
        dd_weights.push(w);
    }
    (dd_nodes, dd_weights)
}

fn legendre_with_derivative_dd(n: usize, x: Dd) -> (Dd, Dd) {
    let mut p0 = Dd::from(1.0);
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = x
            .mul(p1)
            .scale(2.0 * kf - 1.0)
            .sub(p0.scale(kf - 1.0))
            .div(Dd::from(kf));
        p0 = p1;
        p1 = p2;
    }
    let d = x
        .mul(p1)
        .sub(p0)
        .scale(n as f64)
        .div(x.mul(x).sub(Dd::from(1.0)));
    (p1, d)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Rule for `int_r^inf f(z) e^(-z^2) dz`, exact to ~1e-12 (relative) for the
/// polynomial degrees used here.
///
/// Composite mapped Gauss-Legendre on `[r, 2r+10]`; the Gaussian mass beyond
/// the truncation point is below 1e-16 of the total for every `r >= 0`
/// arising in the kernel matrices. `points` nodes are used per panel of
/// width at most 8.
pub fn semi_infinite_rule(r: f64, points: usize) -> Result<QuadratureRule> {
    if points < 2 {
        return Err(Error::Config(format!(
            "semi_infinite_rule requires points >= 2, got {points}"
        )));
    }
    let upper = r + f64::max(10.0, r + 10.0);
    let rule = gaussian_weighted_panels(r, upper, 8.0, points);
    Ok(QuadratureRule {
        description: format!("composite Gauss-Legendre x e^(-z^2), [{r}, {upper}], {points} pts/panel"),
        ..rule
    })
}

/// Composite Gauss-Legendre on `[lo, hi]` with the factor `e^(-z^2)` folded
/// into the weights.
pub(crate) fn gaussian_weighted_panels(
    lo: f64,
    hi: f64,
    panel_width: f64,
    points: usize,
) -> QuadratureRule {
    let span = hi - lo;
    let npanels = ((span / panel_width).ceil() as usize).max(1);
    let step = span / npanels as f64;
    let (gl_nodes, gl_weights) = gauss_legendre(points);
    let mut nodes = Vec::with_capacity(npanels * points);
    let mut weights = Vec::with_capacity(npanels * points);
    for panel in 0..npanels {
        let a = lo + panel as f64 * step;
        let half = 0.5 * step;
        let mid = a + half;
        for (&t, &w) in gl_nodes.iter().zip(&gl_weights) {
            let z = mid + half * t;
            nodes.push(z);
            weights.push(w * half * (-z * z).exp());
        }
    }
    QuadratureRule {
        nodes,
        weights,
        lower: lo,
        description: String::new(),
    }
}
