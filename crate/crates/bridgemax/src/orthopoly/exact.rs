use num::{BigInt, BigRational, One, Signed, Zero};

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`; the top stored coefficient is
/// nonzero unless the polynomial is zero (empty vector). All arithmetic is
/// exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRat {
    coeffs: Vec<BigRational>,
}

impl PolyRat {
    pub fn zero() -> Self {
        PolyRat { coeffs: vec![] }
    }

    pub fn constant(c: BigRational) -> Self {
        PolyRat::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyRat { coeffs }
    }

    pub fn from_integers(ints: &[i64]) -> Self {
        Self::from_coeffs(
            ints.iter()
                .map(|&i| BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Monomial `c x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        PolyRat { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &PolyRat) -> PolyRat {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        PolyRat::from_coeffs(out)
    }

    pub fn sub(&self, other: &PolyRat) -> PolyRat {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyRat {
        PolyRat {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &PolyRat) -> PolyRat {
        if self.is_zero() || other.is_zero() {
            return PolyRat::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyRat::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> PolyRat {
        if c.is_zero() {
            return PolyRat::zero();
        }
        PolyRat {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation in `f64`; used only for float-vs-exact cross checks.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * x + rational_to_f64(c)
        })
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    // Exact for the magnitudes used in cross checks; large operands are
    // reduced through a common power of two first.
    let n = r.numer();
    let d = r.denom();
    let nf = bigint_to_f64(n);
    let df = bigint_to_f64(d);
    if nf.is_finite() && df.is_finite() && df != 0.0 {
        return nf / df;
    }
    // Fall back to scaling by 2^k.
    let shift = (n.bits().max(d.bits()) as i64 - 900).max(0) as u64;
    let nf = bigint_to_f64(&(n >> shift));
    let df = bigint_to_f64(&(d >> shift));
    nf / df
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    let s = x.to_string();
    s.parse::<f64>().unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Exact Hermite polynomial `H_n` (integer coefficients, leading `2^n`).
pub fn hermite_poly_exact(n: usize) -> PolyRat {
    let x2 = PolyRat::from_integers(&[0, 2]);
    let mut prev = PolyRat::one();
    if n == 0 {
        return prev;
    }
    let mut cur = x2.clone();
    for l in 2..=n {
        let next = x2.mul(&cur).sub(
            &prev.scale(&BigRational::from_integer(BigInt::from(2 * (l as i64 - 1)))),
        );
        prev = cur;
        cur = next;
    }
    cur
}

/// The real polynomial `P_n` with `H_n(i r) = i^n P_n(r)`.
///
/// From the Hermite recurrence, `P_n = 2r P_{n-1} + 2(n-1) P_{n-2}`; all
/// coefficients are positive integers.
pub fn hermite_imag_reduced(n: usize) -> PolyRat {
    let x2 = PolyRat::from_integers(&[0, 2]);
    let mut prev = PolyRat::one();
    if n == 0 {
        return prev;
    }
    let mut cur = x2.clone();
    for l in 2..=n {
        let next = x2.mul(&cur).add(
            &prev.scale(&BigRational::from_integer(BigInt::from(2 * (l as i64 - 1)))),
        );
        prev = cur;
        cur = next;
    }
    cur
}

/// Umbral Hermite family `H_n^[alpha]`, defined for rational `alpha` by the
/// recurrence `H_0 = 1`, `H_1 = x`, `H_{n+1} = x H_n - alpha n H_{n-1}`.
///
/// For `alpha = 1/2` this is `2^-n H_n(x)`; the negative-`alpha` members
/// reach the imaginary-argument Hermite values without leaving the rationals.
pub fn umbral_hermite(n: usize, alpha: &BigRational) -> PolyRat {
    let x = PolyRat::from_integers(&[0, 1]);
    let mut prev = PolyRat::one();
    if n == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for l in 1..n {
        let factor = alpha * BigRational::from_integer(BigInt::from(l as i64));
        let next = x.mul(&cur).sub(&prev.scale(&factor));
        prev = cur;
        cur = next;
    }
    cur
}
