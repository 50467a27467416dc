//! Minimal double-double arithmetic for the quadrature oracles.
//!
//! A value is an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`, giving
//! roughly 32 significant digits. Only the operations needed to accumulate
//! Hermite recurrences and weighted sums are provided.

/// Double-double number `hi + lo`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // Requires |a| >= |b|.
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    #[inline]
    pub fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let e = e + self.lo + o.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(Dd { hi: -o.hi, lo: -o.lo })
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn scale(self, c: f64) -> Dd {
        self.mul(Dd::from(c))
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q0 = self.hi / o.hi;
        let rem = self.sub(o.scale(q0));
        let q1 = (rem.hi + rem.lo) / o.hi;
        let (hi, lo) = quick_two_sum(q0, q1);
        Dd { hi, lo }
    }

    /// `e^self` by argument reduction against ln 2 and a Taylor tail; good to
    /// ~1e-30 relative for the magnitudes used here (|self| < 750).
    pub fn exp(self) -> Dd {
        // ln 2 as an unevaluated double-double sum.
        const LN2_HI: f64 = std::f64::consts::LN_2;
        const LN2_LO: f64 = 2.3190468138462996e-17;
        let k = (self.hi / LN2_HI).round();
        let r = self.sub(Dd { hi: LN2_HI, lo: LN2_LO }.scale(k));
        // |r| <= ln2/2; 24 Taylor terms are far below dd precision.
        let mut term = Dd::from(1.0);
        let mut sum = Dd::from(1.0);
        for i in 1..=24 {
            term = term.mul(r).div(Dd::from(i as f64));
            sum = sum.add(term);
        }
        let scale = 2f64.powi(k as i32);
        Dd { hi: sum.hi * scale, lo: sum.lo * scale }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_recovers_lost_bits() {
        let a = Dd::from(1.0).add(Dd::from(1e-20));
        assert_eq!(a.hi, 1.0);
        assert_eq!(a.lo, 1e-20);
        let b = a.sub(Dd::from(1.0));
        assert_eq!(b.to_f64(), 1e-20);
    }

    #[test]
    fn mul_is_exact_for_small_integers() {
        let a = Dd::from(1e8 + 1.0);
        let p = a.mul(a);
        // (1e8+1)^2 = 1e16 + 2e8 + 1; the +1 exceeds f64 precision.
        assert_eq!(p.hi, 1.0e16 + 2.0e8);
        assert_eq!(p.lo, 1.0);
    }

    #[test]
    fn div_recovers_reciprocal_bits() {
        let x = Dd::from(1.0).div(Dd::from(3.0));
        // 1/3 = hi + lo with hi the f64 rounding; residual 1 - 3(hi+lo) ~ 1e-33.
        let back = x.scale(3.0);
        assert!((back.hi - 1.0).abs() < 1e-31);
        assert!(back.sub(Dd::from(1.0)).to_f64().abs() < 1e-31);
    }

    #[test]
    fn exp_matches_known_values() {
        // e and 1/e to double-double precision.
        let e = Dd::from(1.0).exp();
        assert_eq!(e.hi, std::f64::consts::E);
        assert!((e.lo - 1.4456468917292502e-16).abs() < 1e-30);
        let inv = Dd::from(-1.0).exp();
        let prod = e.mul(inv);
        assert!(prod.sub(Dd::from(1.0)).to_f64().abs() < 1e-30);
        // A Gaussian-tail magnitude.
        let g = Dd::from(-100.0).exp();
        assert!((g.to_f64() / 3.720075976020836e-44 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn dot_product_precision() {
        // Sum of many terms near cancellation stays exact.
        let mut acc = Dd::ZERO;
        for i in 0..1000 {
            acc = acc.add(Dd::from(0.1).scale(if i % 2 == 0 { 1.0 } else { -1.0 }));
        }
        assert_eq!(acc.to_f64(), 0.0);
    }
}
