//! Acceptance gate: ten end-to-end criteria covering the closed forms, the
//! determinant equivalences, the exact rational identity sweeps, the
//! quadrature cross-check, the Monte Carlo validations and the CDF sanity
//! properties. One PASS/FAIL line is printed per criterion (run with
//! `--nocapture` to see them); the test fails if any criterion fails.

use bridgemax::exactcheck::{
    auxiliary_identities, exact_sqt_is_a, exact_st_is_identity, exact_ts_is_f,
    lemma1_identities, lemma2_identities,
};
use bridgemax::fredholm::{
    ks_one_sample, ks_two_sample, limit_cdf_hermite, limit_cdf_laguerre, lue_cdf,
    restricted_max_cdf, CdfCurve, CurveMeta,
};
use bridgemax::kernels::{q_matrix_closed, q_matrix_quadrature};
use bridgemax::montecarlo::{
    sample_antige_top, sample_nibb_restricted_max, sample_wishart_loe_top,
    MatrixBridgeConfig,
};
use bridgemax::orthopoly::erf;
use bridgemax::parse::parse_rational;

type Check = std::result::Result<(), String>;

fn grid(min: f64, max: f64, points: usize) -> Vec<f64> {
    let step = (max - min) / (points - 1) as f64;
    (0..points).map(|i| min + step * i as f64).collect()
}

/// N=1 closed forms: both limit CDFs equal erf(x / sqrt(2)) to 1e-10.
fn criterion_1() -> Check {
    for x in grid(0.0, 4.0, 41) {
        let oracle = erf(x / 2f64.sqrt());
        let h = limit_cdf_hermite(1, x).map_err(|e| e.to_string())?;
        let l = limit_cdf_laguerre(1, x).map_err(|e| e.to_string())?;
        if (h - oracle).abs() > 1e-10 {
            return Err(format!("hermite({x}) = {h}, oracle {oracle}"));
        }
        if (l - oracle).abs() > 1e-10 {
            return Err(format!("laguerre({x}) = {l}, oracle {oracle}"));
        }
    }
    Ok(())
}

/// The two determinant routes to the limit law agree to 1e-8 for N <= 10.
fn criterion_2() -> Check {
    let mut worst: f64 = 0.0;
    for n in 1..=10 {
        for x in grid(0.0, 4.0, 41) {
            let h = limit_cdf_hermite(n, x).map_err(|e| e.to_string())?;
            let l = limit_cdf_laguerre(n, x).map_err(|e| e.to_string())?;
            worst = worst.max((h - l).abs());
        }
    }
    if worst < 1e-8 {
        Ok(())
    } else {
        Err(format!("max |hermite - laguerre| = {worst:.3e}"))
    }
}

/// Exact matrix identities, zero tolerance, at four rational r values.
fn criterion_3() -> Check {
    let rs: Vec<_> = ["0", "1/2", "1", "7/3"]
        .iter()
        .map(|s| parse_rational(s).unwrap())
        .collect();
    for r in &rs {
        for n in 1..=12 {
            if !exact_ts_is_f(n, r).map_err(|e| e.to_string())? {
                return Err(format!("2TS=F false at N={n}, r={r}"));
            }
            if !exact_st_is_identity(n, r).map_err(|e| e.to_string())? {
                return Err(format!("ST=I false at N={n}, r={r}"));
            }
        }
        for n in 1..=10 {
            if !exact_sqt_is_a(n, r).map_err(|e| e.to_string())? {
                return Err(format!("2SRT=A false at N={n}, r={r}"));
            }
        }
    }
    Ok(())
}

/// Summation identity sweeps and the auxiliary polynomial identities.
fn criterion_4() -> Check {
    for m in 0..=20i64 {
        for d in -m..=10 {
            if !lemma1_identities(m, d).map_err(|e| e.to_string())? {
                return Err(format!("binomial-Hermite sums false at m={m}, d={d}"));
            }
        }
    }
    for t in 0..=20 {
        for m in 0..=20 {
            for k in 0..=20 {
                for h in 0..=20 {
                    if !lemma2_identities(t, m, k, h) {
                        return Err(format!(
                            "alternating binomial sums false at t={t}, m={m}, k={k}, h={h}"
                        ));
                    }
                }
            }
        }
    }
    for report in auxiliary_identities(15).map_err(|e| e.to_string())? {
        if !report.pass {
            return Err(format!(
                "{} ({}) failed: {:?}",
                report.identity, report.parameters, report.counterexample
            ));
        }
    }
    Ok(())
}

/// Closed-form Q matrix against the double-double quadrature oracle.
fn criterion_5() -> Check {
    let mut worst: f64 = 0.0;
    for n in 1..=12 {
        for r in [0.0, 0.5, 1.0, 2.0] {
            let closed = q_matrix_closed(n, r).map_err(|e| e.to_string())?;
            let quad = q_matrix_quadrature(n, r).map_err(|e| e.to_string())?;
            let diff = closed.max_abs_diff(&quad);
            worst = worst.max(diff);
        }
    }
    if worst < 1e-11 {
        Ok(())
    } else {
        Err(format!("max |closed - quadrature| = {worst:.3e}"))
    }
}

/// sqrt(2) x antisymmetric-ensemble top values against the limit law.
fn criterion_6() -> Check {
    for n in [2usize, 3, 4, 5] {
        let batch = sample_antige_top(n + 1, 10000, 0).map_err(|e| e.to_string())?;
        let scaled: Vec<f64> = batch.values.iter().map(|v| v * 2f64.sqrt()).collect();
        let ks = ks_one_sample(&scaled, |x| limit_cdf_laguerre(n, x).unwrap())
            .map_err(|e| e.to_string())?;
        if ks >= 0.02 {
            return Err(format!("N={n}: KS = {ks:.4} >= 0.02"));
        }
    }
    Ok(())
}

/// Small-p bridge maxima scaled by 1/sqrt(p) against the limit law, plus
/// shrinking KS along the p-sweep (1e-3 slack: at N=1 the finite-p bias sits
/// below the common-random-numbers resolution).
fn criterion_7() -> Check {
    for n in [1usize, 2, 3] {
        let mut previous: Option<f64> = None;
        for p in [1e-2, 1e-3, 1e-4] {
            let cfg = MatrixBridgeConfig { n, p, steps: 8192, seed: 0 };
            let batch = sample_nibb_restricted_max(&cfg, 10000).map_err(|e| e.to_string())?;
            let scaled: Vec<f64> = batch.values.iter().map(|v| v / p.sqrt()).collect();
            let ks = ks_one_sample(&scaled, |x| limit_cdf_laguerre(n, x).unwrap())
                .map_err(|e| e.to_string())?;
            if p == 1e-3 && ks >= 0.03 {
                return Err(format!("N={n}, p=1e-3: KS = {ks:.4} >= 0.03"));
            }
            if let Some(prev) = previous {
                if ks > prev + 1e-3 {
                    return Err(format!(
                        "N={n}: KS grew along the p-sweep: {prev:.5} -> {ks:.5} at p={p}"
                    ));
                }
            }
            previous = Some(ks);
        }
    }
    Ok(())
}

/// Bridge maxima at moderate p against the finite-N determinant CDF.
fn criterion_8() -> Check {
    for (n, p) in [(1usize, 0.5), (2, 0.3), (2, 0.7), (3, 0.5)] {
        let cfg = MatrixBridgeConfig { n, p, steps: 4096, seed: 0 };
        let batch = sample_nibb_restricted_max(&cfg, 10000).map_err(|e| e.to_string())?;
        let ks = ks_one_sample(&batch.values, |r| restricted_max_cdf(n, p, r).unwrap())
            .map_err(|e| e.to_string())?;
        if ks >= 0.02 {
            return Err(format!("N={n}, p={p}: KS = {ks:.4} >= 0.02"));
        }
    }
    Ok(())
}

/// 4 M_N(1)^2 against Wishart N x (N+1) top eigenvalues, plus the N=1
/// closed form of the full-bridge maximum law.
fn criterion_9() -> Check {
    for n in [1usize, 2, 3] {
        let cfg = MatrixBridgeConfig { n, p: 1.0, steps: 4096, seed: 0 };
        let bridges = sample_nibb_restricted_max(&cfg, 10000).map_err(|e| e.to_string())?;
        let squared: Vec<f64> = bridges.values.iter().map(|v| 4.0 * v * v).collect();
        let wishart =
            sample_wishart_loe_top(n, n + 1, 10000, 1).map_err(|e| e.to_string())?;
        let ks = ks_two_sample(&squared, &wishart.values).map_err(|e| e.to_string())?;
        if ks >= 0.03 {
            return Err(format!("N={n}: two-sample KS = {ks:.4} >= 0.03"));
        }
    }
    for r in grid(0.0, 2.0, 41) {
        let det = restricted_max_cdf(1, 1.0 - 1e-6, r).map_err(|e| e.to_string())?;
        let oracle = 1.0 - (-2.0 * r * r).exp();
        if (det - oracle).abs() > 1e-3 {
            return Err(format!("N=1 closed form at r={r}: {det} vs {oracle}"));
        }
    }
    Ok(())
}

/// Default-grid CDF curves are valid CDFs: nondecreasing, ~0 at the left
/// end, above 1 - 1e-6 at the right end.
fn criterion_10() -> Check {
    let mut curves: Vec<CdfCurve> = Vec::new();
    for n in 1..=10usize {
        let end = (2.0 * n as f64).sqrt() + 6.0;
        let meta = CurveMeta { model: format!("limit(N={n})"), method: "hermite".into() };
        curves.push(
            CdfCurve::from_fn(grid(0.0, end, 121), meta, |x| limit_cdf_hermite(n, x))
                .map_err(|e| e.to_string())?,
        );
    }
    for (n, p) in [(1usize, 0.5f64), (2, 0.3), (2, 0.7), (3, 0.5), (5, 0.9)] {
        let end = p.sqrt() * ((2.0 * n as f64).sqrt() + 6.0);
        let meta = CurveMeta {
            model: format!("restricted-max(N={n},p={p})"),
            method: "determinant".into(),
        };
        curves.push(
            CdfCurve::from_fn(grid(0.0, end, 121), meta, |r| restricted_max_cdf(n, p, r))
                .map_err(|e| e.to_string())?,
        );
    }
    for (m, a) in [(1usize, -0.5f64), (2, 0.5), (4, 0.5)] {
        let end = 4.0 * m as f64 + 2.0 * a.max(0.0) + 30.0;
        let meta = CurveMeta { model: format!("lue(m={m},a={a})"), method: "determinant".into() };
        curves.push(
            CdfCurve::from_fn(grid(0.0, end, 121), meta, |x| lue_cdf(m, a, x))
                .map_err(|e| e.to_string())?,
        );
    }
    for curve in &curves {
        // `from_fn` already enforces monotonicity with 1e-8 slack and range.
        let first = curve.values[0];
        let last = *curve.values.last().unwrap();
        if first.abs() > 1e-6 {
            return Err(format!("{}: value {first} at the left end", curve.meta.model));
        }
        if last <= 1.0 - 1e-6 {
            return Err(format!("{}: value {last} at the grid end", curve.meta.model));
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Check)> = vec![
        ("criterion 1: N=1 closed forms (erf oracle, 1e-10)", criterion_1),
        ("criterion 2: hermite/laguerre determinant equivalence (1e-8)", criterion_2),
        ("criterion 3: exact matrix identity suite (zero tolerance)", criterion_3),
        ("criterion 4: summation and polynomial identity sweeps", criterion_4),
        ("criterion 5: closed-form Q vs quadrature oracle (1e-11)", criterion_5),
        ("criterion 6: antisymmetric-ensemble law, KS < 0.02", criterion_6),
        ("criterion 7: small-p convergence, KS < 0.03 and shrinking", criterion_7),
        ("criterion 8: bridge sampler vs determinant CDF, KS < 0.02", criterion_8),
        ("criterion 9: squared maxima vs Wishart, KS < 0.03", criterion_9),
        ("criterion 10: default-grid CDF sanity", criterion_10),
    ];
    let mut failures = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(()) => println!("PASS {name}"),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failures.push(format!("{name}: {why}"));
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}
