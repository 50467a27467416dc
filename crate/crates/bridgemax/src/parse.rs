//! Textual input parsers: grid specifications (`min:max:points`) and exact
//! rationals (`p/q`). These are the untrusted-input entry points of the CLI
//! and are also exercised by the fuzz targets.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;

use crate::{Error, Result};

/// An evaluation grid parsed from `min:max:points`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() {
            return Err(Error::Parse(format!("grid endpoints must be finite: {min}:{max}")));
        }
        if !(min < max) {
            return Err(Error::Parse(format!("grid requires min < max, got {min}:{max}")));
        }
        if points < 2 {
            return Err(Error::Parse(format!("grid requires at least 2 points, got {points}")));
        }
        Ok(GridSpec { min, max, points })
    }

    /// The `points` equally spaced values, endpoints included exactly.
    pub fn values(&self) -> Vec<f64> {
        let step = (self.max - self.min) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    self.max
                } else {
                    self.min + step * i as f64
                }
            })
            .collect()
    }
}

/// Parses `min:max:points`, e.g. `0:4:41`.
pub fn parse_grid(s: &str) -> Result<GridSpec> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!(
            "grid spec must be min:max:points, got {s:?}"
        )));
    }
    let min: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad grid minimum {:?}", parts[0])))?;
    let max: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad grid maximum {:?}", parts[1])))?;
    let points: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad grid point count {:?}", parts[2])))?;
    GridSpec::new(min, max, points)
}

/// Parses an exact rational `p/q` (or a bare integer `p`), e.g. `7/3`, `-1/2`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator {num_str:?}")))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator {d:?}")))?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::ToPrimitive;
    use proptest::prelude::*;

    #[test]
    fn grid_happy_path() {
        let g = parse_grid("0:4:41").unwrap();
        assert_eq!(g, GridSpec { min: 0.0, max: 4.0, points: 41 });
        let v = g.values();
        assert_eq!(v.len(), 41);
        assert_eq!(v[0], 0.0);
        assert_eq!(v[40], 4.0);
        assert!((v[1] - 0.1).abs() < 1e-15);
        let g2 = parse_grid(" -1.5 : 2.5 : 2 ").unwrap();
        assert_eq!(g2.values(), vec![-1.5, 2.5]);
    }

    #[test]
    fn grid_rejections() {
        for bad in ["", "1:2", "1:2:3:4", "a:2:3", "1:b:3", "1:2:c", "2:1:5", "1:1:5",
                    "0:4:1", "0:4:0", "nan:4:5", "0:inf:5", "0:4:-3"] {
            assert!(parse_grid(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn rational_happy_path() {
        assert_eq!(parse_rational("7/3").unwrap(), BigRational::new(7.into(), 3.into()));
        assert_eq!(parse_rational("-1/2").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational("5").unwrap(), BigRational::from_integer(5.into()));
        // Normalization: 2/4 == 1/2, 1/-2 == -1/2.
        assert_eq!(parse_rational("2/4").unwrap(), parse_rational("1/2").unwrap());
        assert_eq!(parse_rational("1/-2").unwrap(), parse_rational("-1/2").unwrap());
    }

    #[test]
    fn rational_rejections() {
        for bad in ["", "/", "1/", "/2", "1/0", "a/2", "1/b", "1.5/2", "1//2"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    proptest! {
        #[test]
        fn grid_parser_never_panics(s in ".{0,40}") {
            let _ = parse_grid(&s);
        }

        #[test]
        fn rational_parser_never_panics(s in ".{0,40}") {
            let _ = parse_rational(&s);
        }

        #[test]
        fn rational_round_trip(p in -1000i64..1000, q in 1i64..1000) {
            let r = parse_rational(&format!("{p}/{q}")).unwrap();
            prop_assert!((r.to_f64().unwrap() - p as f64 / q as f64).abs() < 1e-12);
        }
    }
}
