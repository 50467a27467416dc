//! Zero-tolerance verification of the matrix and Hermite-polynomial
//! identities in exact rational arithmetic.
//!
//! Everything here is literal equality over the rationals: big-rational
//! matrices for the S/T/F/Q-side identities and symbolic polynomials (one
//! or two indeterminates) for the combinatorial lemmas. Imaginary Hermite
//! arguments are eliminated up front through `H_m(ir) = i^m P_m(r)` with
//! `P_m` real, so no complex numbers appear.

use num::{BigInt, BigRational, One, Zero};
use serde::Serialize;

use crate::kernels::ParitySplit;
use crate::orthopoly::{hermite_imag_reduced, hermite_poly_exact, umbral_hermite, PolyRat};
use crate::{Error, Result};

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn factorial(n: usize) -> BigRational {
    let mut acc = BigInt::one();
    for v in 1..=n {
        acc *= BigInt::from(v);
    }
    BigRational::from_integer(acc)
}

fn binom(n: usize, k: usize) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= BigRational::from_integer(BigInt::from((n - i) as i64));
        acc /= BigRational::from_integer(BigInt::from((i + 1) as i64));
    }
    acc
}

/// `H_0(r), ..., H_top(r)` at an exact rational point.
fn hermite_values(top: usize, r: &BigRational) -> Vec<BigRational> {
    let two_r = r * int(2);
    let mut vals = Vec::with_capacity(top + 1);
    vals.push(BigRational::one());
    if top >= 1 {
        vals.push(two_r.clone());
    }
    for m in 2..=top {
        let next = &two_r * &vals[m - 1] - int(2 * (m as i64 - 1)) * &vals[m - 2];
        vals.push(next);
    }
    vals
}

/// `P_0(r), ..., P_top(r)` with `H_m(ir) = i^m P_m(r)`.
fn hermite_imag_values(top: usize, r: &BigRational) -> Vec<BigRational> {
    let two_r = r * int(2);
    let mut vals = Vec::with_capacity(top + 1);
    vals.push(BigRational::one());
    if top >= 1 {
        vals.push(two_r.clone());
    }
    for m in 2..=top {
        let next = &two_r * &vals[m - 1] + int(2 * (m as i64 - 1)) * &vals[m - 2];
        vals.push(next);
    }
    vals
}

/// Dense matrix of exact rationals with the same inclusive index-range
/// bookkeeping as the floating-point kernel matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub label: String,
    pub row_range: (usize, usize),
    pub col_range: (usize, usize),
    pub entries: Vec<Vec<BigRational>>,
}

impl RatMatrix {
    pub fn new(
        label: impl Into<String>,
        row_range: (usize, usize),
        col_range: (usize, usize),
        entries: Vec<Vec<BigRational>>,
    ) -> Result<Self> {
        let label = label.into();
        let rows = row_range.1 - row_range.0 + 1;
        let cols = col_range.1 - col_range.0 + 1;
        if entries.len() != rows || entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "{label}: entries do not match ranges {row_range:?} x {col_range:?}"
            )));
        }
        Ok(RatMatrix { label, row_range, col_range, entries })
    }

    fn zeros(label: impl Into<String>, rows: usize, cols: usize) -> Self {
        RatMatrix {
            label: label.into(),
            row_range: (0, rows - 1),
            col_range: (0, cols - 1),
            entries: vec![vec![BigRational::zero(); cols]; rows],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = RatMatrix::zeros("I", size, size);
        for i in 0..size {
            m.entries[i][i] = BigRational::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.entries[0].len()
    }

    /// Exact product; inner index ranges must coincide.
    pub fn matmul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.col_range != rhs.row_range {
            return Err(Error::Dimension(format!(
                "{} * {}: inner ranges {:?} vs {:?} do not match",
                self.label, rhs.label, self.col_range, rhs.row_range
            )));
        }
        let mut out = RatMatrix::zeros(
            format!("{}*{}", self.label, rhs.label),
            self.nrows(),
            rhs.ncols(),
        );
        out.row_range = self.row_range;
        out.col_range = rhs.col_range;
        for i in 0..self.nrows() {
            for k in 0..self.ncols() {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols() {
                    let prod = &self.entries[i][k] * &rhs.entries[k][j];
                    out.entries[i][j] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> RatMatrix {
        let mut out = self.clone();
        for row in &mut out.entries {
            for e in row.iter_mut() {
                *e *= c;
            }
        }
        out
    }

    /// Literal entrywise equality ignoring labels.
    pub fn same_entries(&self, other: &RatMatrix) -> bool {
        self.row_range == other.row_range
            && self.col_range == other.col_range
            && self.entries == other.entries
    }
}

/// Exact `S`: `S_{jt} = t!/(4^j (t-N+2j+b)!) H_{t-N+2j+b}(r)`.
pub fn exact_s(n: usize, r: &BigRational) -> Result<RatMatrix> {
    let parity = ParitySplit::new(n)?;
    let h = hermite_values(n, r);
    let mut out = RatMatrix::zeros("S", parity.half, n);
    for j in 0..parity.half {
        for t in 0..n {
            let idx = t as i64 - n as i64 + 2 * j as i64 + parity.b as i64;
            if idx < 0 {
                continue;
            }
            let m = idx as usize;
            let ratio = factorial(t) / factorial(m);
            let four_j = BigRational::from_integer(BigInt::from(4).pow(j as u32));
            out.entries[j][t] = ratio / four_j * &h[m];
        }
    }
    out.row_range = (0, parity.half - 1);
    out.col_range = (0, n - 1);
    Ok(out)
}

/// Exact `T` through the real reduction:
/// `T_{uk} = (-1)^u 4^k P_{N-2k-b-u}(r) / (u! (N-2k-b-u)!)`.
pub fn exact_t(n: usize, r: &BigRational) -> Result<RatMatrix> {
    let parity = ParitySplit::new(n)?;
    let p = hermite_imag_values(n, r);
    let mut out = RatMatrix::zeros("T", n, parity.half);
    for u in 0..n {
        for k in 0..parity.half {
            let idx = n as i64 - 2 * k as i64 - parity.b as i64 - u as i64;
            if idx < 0 {
                continue;
            }
            let m = idx as usize;
            let four_k = BigRational::from_integer(BigInt::from(4).pow(k as u32));
            let mut val = four_k * &p[m] / (factorial(u) * factorial(m));
            if u % 2 == 1 {
                val = -val;
            }
            out.entries[u][k] = val;
        }
    }
    out.row_range = (0, n - 1);
    out.col_range = (0, parity.half - 1);
    Ok(out)
}

/// Exact `F`: `F_{jk} = binom(k,j)(4r)^{k-j}(-1)^j 1_{j<=k} + delta_{jk}`.
pub fn exact_f(n: usize, r: &BigRational) -> Result<RatMatrix> {
    if n == 0 {
        return Err(Error::Domain("F requires N >= 1".into()));
    }
    let four_r = r * int(4);
    let mut out = RatMatrix::zeros("F", n, n);
    for j in 0..n {
        for k in j..n {
            let mut pow = BigRational::one();
            for _ in 0..(k - j) {
                pow *= &four_r;
            }
            let mut val = binom(k, j) * pow;
            if j % 2 == 1 {
                val = -val;
            }
            out.entries[j][k] = val;
        }
        let diag = out.entries[j][j].clone() + BigRational::one();
        out.entries[j][j] = diag;
    }
    Ok(out)
}

/// The rescaled centered matrix `R = sqrt(pi) e^{r^2} (Q - erfc(r)/2 I)`,
/// which is rational: `R_{jk} = (1/(2^j j!)) sum_l 2^l l! binom(j,l)
/// binom(k,l) H_{j+k-2l-1}(r)`, with `l < j` on the diagonal (the
/// `erfc` part has been subtracted) and `R_00 = 0`.
pub fn exact_r_centered(n: usize, r: &BigRational) -> Result<RatMatrix> {
    if n == 0 {
        return Err(Error::Domain("R requires N >= 1".into()));
    }
    let h = hermite_values(2 * n, r);
    let mut out = RatMatrix::zeros("R", n, n);
    for j in 0..n {
        let pref = BigRational::one()
            / (BigRational::from_integer(BigInt::from(2).pow(j as u32)) * factorial(j));
        for k in 0..n {
            let l_top = if j == k { j } else { j.min(k) + 1 };
            let mut sum = BigRational::zero();
            for l in 0..l_top {
                let m = j + k - 2 * l;
                // m >= 1 here: off-diagonal |j-k| >= 1, diagonal l < j.
                let two_l = BigRational::from_integer(BigInt::from(2).pow(l as u32));
                sum += two_l * factorial(l) * binom(j, l) * binom(k, l) * &h[m - 1];
            }
            out.entries[j][k] = &pref * sum;
        }
    }
    Ok(out)
}

/// `2TS = F`, literally.
pub fn exact_ts_is_f(n: usize, r: &BigRational) -> Result<bool> {
    let lhs = exact_t(n, r)?.matmul(&exact_s(n, r)?)?.scale(&int(2));
    Ok(lhs.same_entries(&exact_f(n, r)?))
}

/// `ST = I` on the reduced index set, literally.
pub fn exact_st_is_identity(n: usize, r: &BigRational) -> Result<bool> {
    let st = exact_s(n, r)?.matmul(&exact_t(n, r)?)?;
    Ok(st.same_entries(&RatMatrix::identity(ParitySplit::new(n)?.half)))
}

/// The reduced product identity on the rescaled centered matrices:
/// `2 S R T = R_A` where `R_A` selects the odd/even rows and columns of `R`
/// (doubled), exactly as the reduced matrix does for `Q`. The transcendental
/// `erfc`/Gaussian factors cancel through `ST = I`, so the check is rational.
pub fn exact_sqt_is_a(n: usize, r: &BigRational) -> Result<bool> {
    let parity = ParitySplit::new(n)?;
    let rc = exact_r_centered(n, r)?;
    let lhs = exact_s(n, r)?.matmul(&rc)?.matmul(&exact_t(n, r)?)?.scale(&int(2));
    let mut ra = RatMatrix::zeros("RA", parity.half, parity.half);
    for j in 0..parity.half {
        for k in 0..parity.half {
            ra.entries[j][k] =
                &rc.entries[2 * j + parity.b - 1][2 * k + parity.b - 1] * int(2);
        }
    }
    Ok(lhs.same_entries(&ra))
}

fn half_four_r_pow(m: usize) -> PolyRat {
    let c = BigRational::from_integer(BigInt::from(4).pow(m as u32)) / int(2);
    PolyRat::monomial(c, m)
}

/// The three combinatorial Hermite identities, checked as exact polynomial
/// identities in `r` after the `H(ir) = i^m P(r)` reduction:
///
/// 1. (m > 0) `sum_s binom(m,2s+1) P_{m-2s-1} H_{2s+1} = (4r)^m / 2` and the
///    even-split companion `sum_s binom(m,2s) P_{m-2s} H_{2s} = (4r)^m / 2`.
/// 2. `sum_t (-1)^t binom(m,t) H_t P_{m-t} = delta_{m,0}`.
/// 3. (d + m >= 0) `sum_u (-1)^u binom(m,u) P_{m-u} H_{u+m+d}
///    = 2^m (m+d)!/d! H_d`, with `H_neg = 0` and `1/(neg)! = 0` read
///    literally.
///
/// `d` enters only part 3. For `m = 0` part 1 is skipped (its statement
/// requires `m > 0`).
pub fn lemma1_identities(m: i64, d: i64) -> Result<bool> {
    if m < 0 {
        return Err(Error::Domain(format!("lemma 1 requires m >= 0, got {m}")));
    }
    if d + m < 0 {
        return Err(Error::Domain(format!(
            "lemma 1 part 3 requires d + m >= 0, got d={d}, m={m}"
        )));
    }
    let m = m as usize;
    let top = 2 * m + d.max(0) as usize;
    let h: Vec<PolyRat> = (0..=top).map(hermite_poly_exact).collect();
    let p: Vec<PolyRat> = (0..=m).map(hermite_imag_reduced).collect();

    if m > 0 {
        let mut odd = PolyRat::zero();
        let mut even = PolyRat::zero();
        for s in 0..=m / 2 {
            if 2 * s + 1 <= m {
                let term = h[2 * s + 1].mul(&p[m - 2 * s - 1]).scale(&binom(m, 2 * s + 1));
                odd = odd.add(&term);
            }
            even = even.add(&h[2 * s].mul(&p[m - 2 * s]).scale(&binom(m, 2 * s)));
        }
        let rhs = half_four_r_pow(m);
        if odd != rhs || even != rhs {
            return Ok(false);
        }
    }

    let mut alternating = PolyRat::zero();
    for t in 0..=m {
        let mut c = binom(m, t);
        if t % 2 == 1 {
            c = -c;
        }
        alternating = alternating.add(&h[t].mul(&p[m - t]).scale(&c));
    }
    let expect = if m == 0 { PolyRat::one() } else { PolyRat::zero() };
    if alternating != expect {
        return Ok(false);
    }

    let mut third = PolyRat::zero();
    for u in 0..=m {
        let idx = u as i64 + m as i64 + d;
        if idx < 0 {
            continue;
        }
        let mut c = binom(m, u);
        if u % 2 == 1 {
            c = -c;
        }
        third = third.add(&h[idx as usize].mul(&p[m - u]).scale(&c));
    }
    let rhs3 = if d < 0 {
        PolyRat::zero()
    } else {
        let d = d as usize;
        let c = BigRational::from_integer(BigInt::from(2).pow(m as u32)) * factorial(m + d)
            / factorial(d);
        h[d].scale(&c)
    };
    Ok(third == rhs3)
}

/// The two big-integer binomial identities:
///
/// (i) for `t >= m+1`: `sum_l (-1)^l binom(t,l) binom(t-l-1, m-l) = (-1)^m`
/// (skipped when `t <= m`);
/// (ii) `sum_u (-1)^u (t+u)!/(u!(k-u)!(t+u-h)!) = (-1)^k (h!/k!) binom(t, h-k)`
/// with `1/(neg)! = 0`.
pub fn lemma2_identities(t: usize, m: usize, k: usize, h: usize) -> bool {
    if t >= m + 1 {
        let mut sum = BigRational::zero();
        for l in 0..=m {
            let mut term = binom(t, l) * binom(t - l - 1, m - l);
            if l % 2 == 1 {
                term = -term;
            }
            sum += term;
        }
        let expect = if m % 2 == 0 { int(1) } else { int(-1) };
        if sum != expect {
            return false;
        }
    }

    let mut sum = BigRational::zero();
    for u in 0..=k {
        if ((t + u) as i64) < h as i64 {
            continue;
        }
        let mut term =
            factorial(t + u) / (factorial(u) * factorial(k - u) * factorial(t + u - h));
        if u % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    let mut expect = factorial(h) / factorial(k)
        * if h >= k { binom(t, h - k) } else { BigRational::zero() };
    if k % 2 == 1 {
        expect = -expect;
    }
    sum == expect
}

/// Dense bivariate polynomial with exact rational coefficients;
/// `coeffs[i][j]` multiplies `x^i y^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPolyRat {
    coeffs: Vec<Vec<BigRational>>,
}

impl BiPolyRat {
    pub fn zero() -> Self {
        BiPolyRat { coeffs: vec![] }
    }

    fn normalize(mut self) -> Self {
        for row in &mut self.coeffs {
            while row.last().is_some_and(|c| c.is_zero()) {
                row.pop();
            }
        }
        while self.coeffs.last().is_some_and(|r| r.is_empty()) {
            self.coeffs.pop();
        }
        self
    }

    /// Lifts a univariate polynomial into `x` (`in_x = true`) or `y`.
    pub fn from_univariate(p: &PolyRat, in_x: bool) -> Self {
        let mut coeffs = vec![];
        for (i, c) in p.coeffs().iter().enumerate() {
            if in_x {
                coeffs.push(vec![c.clone()]);
            } else {
                if coeffs.is_empty() {
                    coeffs.push(vec![]);
                }
                coeffs[0].push(c.clone());
            }
            let _ = i;
        }
        BiPolyRat { coeffs }.normalize()
    }

    pub fn add(&self, other: &BiPolyRat) -> BiPolyRat {
        let rows = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![vec![]; rows];
        for (i, row) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            let cols = a.map_or(0, |r| r.len()).max(b.map_or(0, |r| r.len()));
            for j in 0..cols {
                let mut v = BigRational::zero();
                if let Some(c) = a.and_then(|r| r.get(j)) {
                    v += c;
                }
                if let Some(c) = b.and_then(|r| r.get(j)) {
                    v += c;
                }
                row.push(v);
            }
        }
        BiPolyRat { coeffs: out }.normalize()
    }

    pub fn mul(&self, other: &BiPolyRat) -> BiPolyRat {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return BiPolyRat::zero();
        }
        let rows = self.coeffs.len() + other.coeffs.len() - 1;
        let cols = self
            .coeffs
            .iter()
            .map(|r| r.len())
            .max()
            .unwrap_or(0)
            + other.coeffs.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut out = vec![vec![BigRational::zero(); cols]; rows];
        for (i1, r1) in self.coeffs.iter().enumerate() {
            for (j1, c1) in r1.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (i2, r2) in other.coeffs.iter().enumerate() {
                    for (j2, c2) in r2.iter().enumerate() {
                        out[i1 + i2][j1 + j2] += c1 * c2;
                    }
                }
            }
        }
        BiPolyRat { coeffs: out }.normalize()
    }

    pub fn scale(&self, c: &BigRational) -> BiPolyRat {
        let coeffs = self
            .coeffs
            .iter()
            .map(|r| r.iter().map(|v| v * c).collect())
            .collect();
        BiPolyRat { coeffs }.normalize()
    }
}

/// Per-identity outcome of [`auxiliary_identities`].
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub parameters: String,
    pub pass: bool,
    pub counterexample: Option<String>,
}

impl IdentityReport {
    fn pass(identity: &str, parameters: String) -> Self {
        IdentityReport {
            identity: identity.into(),
            parameters,
            pass: true,
            counterexample: None,
        }
    }

    fn fail(identity: &str, parameters: String, witness: String) -> Self {
        IdentityReport {
            identity: identity.into(),
            parameters,
            pass: false,
            counterexample: Some(witness),
        }
    }
}

/// The auxiliary polynomial identities behind the matrix proofs, each checked
/// for all degrees `<= n_max` and reported individually:
///
/// * Hermite product expansion `H_j H_k = sum_l 2^l l! binom(j,l) binom(k,l)
///   H_{j+k-2l}`.
/// * Translation `H_n(x+y) = sum_k binom(n,k) H_k(x) (2y)^{n-k}` (bivariate).
/// * The argument-scaling identity at the imaginary unit, reduced to
///   `P_n = sum_l 2^l binom(n,2l) (2l)!/l! H_{n-2l}`.
/// * The umbral convolution `sum_s binom(n,s) H_s^[alpha](x) H_{n-s}^[-alpha](y)
///   = (x+y)^n` for `alpha` in `{1/2, -1/2, 1, -1}`.
/// * The hockey-stick sum `sum_{i=t}^{s} binom(i,t) = binom(s+1, t+1)`.
pub fn auxiliary_identities(n_max: usize) -> Result<Vec<IdentityReport>> {
    if n_max == 0 {
        return Err(Error::Domain("auxiliary identities require n_max >= 1".into()));
    }
    let mut reports = Vec::new();
    let h: Vec<PolyRat> = (0..=2 * n_max).map(hermite_poly_exact).collect();

    let params = format!("degrees <= {n_max}");
    let mut witness = None;
    'product: for j in 0..=n_max {
        for k in 0..=n_max {
            let mut rhs = PolyRat::zero();
            for l in 0..=j.min(k) {
                let c = BigRational::from_integer(BigInt::from(2).pow(l as u32))
                    * factorial(l)
                    * binom(j, l)
                    * binom(k, l);
                rhs = rhs.add(&h[j + k - 2 * l].scale(&c));
            }
            if h[j].mul(&h[k]) != rhs {
                witness = Some(format!("j={j}, k={k}"));
                break 'product;
            }
        }
    }
    reports.push(match witness {
        None => IdentityReport::pass("hermite-product", params),
        Some(w) => IdentityReport::fail("hermite-product", params, w),
    });

    let params = format!("n <= {n_max}");
    let mut witness = None;
    let x = BiPolyRat::from_univariate(&PolyRat::from_integers(&[0, 1]), true);
    let y = BiPolyRat::from_univariate(&PolyRat::from_integers(&[0, 1]), false);
    let x_plus_y = x.add(&y);
    for n in 0..=n_max {
        // H_n(x+y) by the recurrence in the bivariate ring.
        let mut prev = BiPolyRat::from_univariate(&PolyRat::one(), true);
        let mut cur = x_plus_y.scale(&int(2));
        let lhs = if n == 0 {
            prev.clone()
        } else {
            for l in 2..=n {
                let next = x_plus_y
                    .scale(&int(2))
                    .mul(&cur)
                    .add(&prev.scale(&int(-2 * (l as i64 - 1))));
                prev = cur;
                cur = next;
            }
            cur
        };
        let mut rhs = BiPolyRat::zero();
        for k in 0..=n {
            let hk_x = BiPolyRat::from_univariate(&h[k], true);
            let two_y_pow = {
                let mut acc = BiPolyRat::from_univariate(&PolyRat::one(), true);
                for _ in 0..(n - k) {
                    acc = acc.mul(&y.scale(&int(2)));
                }
                acc
            };
            rhs = rhs.add(&hk_x.mul(&two_y_pow).scale(&binom(n, k)));
        }
        if lhs != rhs {
            witness = Some(format!("n={n}"));
            break;
        }
    }
    reports.push(match witness {
        None => IdentityReport::pass("hermite-translation", params),
        Some(w) => IdentityReport::fail("hermite-translation", params, w),
    });

    let params = format!("n <= {n_max}");
    let mut witness = None;
    for n in 0..=n_max {
        let mut rhs = PolyRat::zero();
        for l in 0..=n / 2 {
            let c = BigRational::from_integer(BigInt::from(2).pow(l as u32))
                * binom(n, 2 * l)
                * factorial(2 * l)
                / factorial(l);
            rhs = rhs.add(&h[n - 2 * l].scale(&c));
        }
        if hermite_imag_reduced(n) != rhs {
            witness = Some(format!("n={n}"));
            break;
        }
    }
    reports.push(match witness {
        None => IdentityReport::pass("argument-scaling-at-i", params),
        Some(w) => IdentityReport::fail("argument-scaling-at-i", params, w),
    });

    let params = format!("n <= {n_max}, alpha in {{1/2, -1/2, 1, -1}}");
    let mut witness = None;
    'umbral: for (num, den) in [(1i64, 2i64), (-1, 2), (1, 1), (-1, 1)] {
        let alpha = BigRational::new(BigInt::from(num), BigInt::from(den));
        for n in 0..=n_max {
            let mut lhs = BiPolyRat::zero();
            for s in 0..=n {
                let hs = BiPolyRat::from_univariate(&umbral_hermite(s, &alpha), true);
                let ht = BiPolyRat::from_univariate(&umbral_hermite(n - s, &(-&alpha)), false);
                lhs = lhs.add(&hs.mul(&ht).scale(&binom(n, s)));
            }
            let mut rhs = BiPolyRat::from_univariate(&PolyRat::one(), true);
            for _ in 0..n {
                rhs = rhs.mul(&x_plus_y);
            }
            if lhs != rhs {
                witness = Some(format!("alpha={num}/{den}, n={n}"));
                break 'umbral;
            }
        }
    }
    reports.push(match witness {
        None => IdentityReport::pass("umbral-convolution", params),
        Some(w) => IdentityReport::fail("umbral-convolution", params, w),
    });

    let params = format!("s, t <= {n_max}");
    let mut witness = None;
    'hockey: for t in 0..=n_max {
        for s in t..=n_max {
            let sum: BigRational = (t..=s).map(|i| binom(i, t)).sum();
            if sum != binom(s + 1, t + 1) {
                witness = Some(format!("s={s}, t={t}"));
                break 'hockey;
            }
        }
    }
    reports.push(match witness {
        None => IdentityReport::pass("hockey-stick", params),
        Some(w) => IdentityReport::fail("hockey-stick", params, w),
    });

    Ok(reports)
}
