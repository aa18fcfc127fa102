//! Verification suites shared by `zetavals verify` and the acceptance tests.

use std::f64::consts::PI;

use clap::ValueEnum;
use num_complex::Complex64;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use zetavals_core::analysis::{default_a_grid, grid_max_abs};
use zetavals_core::numeric::{combined, functional_equation_residual, multiplication_residual};
use zetavals_core::{
    li_neg_euler, li_neg_stirling, special_value, vanishing_pattern, ArgumentSpec,
    CyclotomicElement, FunctionTag, Result, ValueBody,
};

use crate::render::Tabular;

pub const DEFAULT_TOL: f64 = 1e-9;
/// Threshold for "identically zero" on the a-grid; fixed, independent of `--tol`.
pub const VANISHING_TOL: f64 = 1e-10;
pub const FE_POINTS: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ExactVsNumeric,
    FunctionalEquations,
    DualRoute,
    Vanishing,
    All,
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub check: String,
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Check {
    fn within(suite: &str, check: String, residual: f64, tol: f64) -> Check {
        Check {
            suite: suite.into(),
            check,
            residual,
            tol,
            pass: residual <= tol,
        }
    }

    fn exact(suite: &str, check: String, equal: bool) -> Check {
        Check {
            suite: suite.into(),
            check,
            residual: if equal { 0.0 } else { 1.0 },
            tol: 0.0,
            pass: equal,
        }
    }
}

impl Tabular for Check {
    fn headers() -> &'static [&'static str] {
        &["suite", "check", "residual", "tol", "pass"]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.suite.clone(),
            self.check.clone(),
            format!("{:e}", self.residual),
            format!("{:e}", self.tol),
            self.pass.to_string(),
        ]
    }
}

pub fn run(suite: Suite, tol: f64, seed: u64) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::ExactVsNumeric => exact_vs_numeric(tol)?,
        Suite::FunctionalEquations => functional_equations(seed, tol)?,
        Suite::DualRoute => dual_route()?,
        Suite::Vanishing => vanishing()?,
        Suite::All => {
            let mut all = exact_vs_numeric(tol)?;
            all.extend(functional_equations(seed, tol)?);
            all.extend(dual_route()?);
            all.extend(vanishing()?);
            all
        }
    })
}

/// Coprime `(r, q)` with `2 <= q <= max_q` and `r/q <= 1/2`.
pub fn rational_points(max_q: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for q in 2..=max_q {
        for r in 1..=q / 2 {
            if r.gcd(&q) == 1 {
                out.push((r, q));
            }
        }
    }
    out
}

fn scaled(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm().max(1.0)
}

/// Exact values at `a ∈ {1/3, 1/4, 1/5, 2/5, 1/2}`, `|s| <= 9`, against the
/// numeric evaluator, plus a few hand-derived closed forms.
pub fn exact_vs_numeric(tol: f64) -> Result<Vec<Check>> {
    const SUITE: &str = "exact-vs-numeric";
    let pts = [(1, 3), (1, 4), (1, 5), (2, 5), (1, 2)];
    let mut jobs = Vec::new();
    for f in FunctionTag::ALL {
        for s in -9i64..=9 {
            for &(r, q) in &pts {
                jobs.push((f, s, r, q));
            }
        }
    }
    let mut checks = jobs
        .par_iter()
        .map(|&(f, s, r, q)| {
            let Ok(v) = special_value(f, s, ArgumentSpec::rational(r, q)?) else {
                return Ok(None);
            };
            let exact = v.to_complex(None)?;
            let num = combined(f, Complex64::new(s as f64, 0.0), r as f64 / q as f64)?;
            Ok(Some(Check::within(SUITE, format!("{f}({s}, {r}/{q})"), scaled(num, exact), tol)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    let spots = [
        (FunctionTag::Z, 2.0, 0.5, PI * PI),
        (FunctionTag::P, 2.0, 0.5, -PI * PI / 6.0),
        (FunctionTag::O, 1.0, 0.25, PI / 2.0),
        (FunctionTag::Y, 3.0, 0.25, 2.0 * PI.powi(3)),
        (FunctionTag::O, -2.0, 0.25, -1.0),
    ];
    for (f, s, a, want) in spots {
        let got = combined(f, Complex64::new(s, 0.0), a)?;
        let res = scaled(got, Complex64::new(want, 0.0));
        checks.push(Check::within(SUITE, format!("closed form {f}({s}, {a})"), res, tol));
    }
    Ok(checks)
}

/// Seeded reflection-identity residuals and the multiplication formula for `q <= 8`.
pub fn functional_equations(seed: u64, tol: f64) -> Result<Vec<Check>> {
    const SUITE: &str = "functional-equations";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = Vec::with_capacity(FE_POINTS);
    while pts.len() < FE_POINTS {
        let s = Complex64::new(rng.gen_range(-6.0..7.0), rng.gen_range(-8.0..8.0));
        let a: f64 = rng.gen_range(0.02..0.5);
        // stay clear of s = 0, 1 where the identities are singular
        if s.norm() < 0.05 || (s - 1.0).norm() < 0.05 {
            continue;
        }
        pts.push((FunctionTag::ALL[pts.len() % 6], s, a));
    }
    let mut checks = pts
        .par_iter()
        .map(|&(f, s, a)| {
            let r = functional_equation_residual(f, s, a)?;
            let tag = if r.independent { "" } else { " [reflected]" };
            Ok(Check::within(SUITE, format!("{f} s={s:.6} a={a:.6}{tag}"), r.residual, tol))
        })
        .collect::<Result<Vec<_>>>()?;
    let svals = [
        Complex64::new(2.5, 0.0),
        Complex64::new(0.5, 7.0),
        Complex64::new(-3.3, 1.0),
        Complex64::new(-7.5, 0.0),
    ];
    for q in 2..=8u64 {
        for r in (1..q).filter(|r| r.gcd(&q) == 1) {
            for &s in &svals {
                let res = multiplication_residual(s, r, q)?;
                checks.push(Check::within(SUITE, format!("multiplication {r}/{q} s={s}"), res, tol));
            }
        }
    }
    Ok(checks)
}

fn as_cyclotomic(body: &ValueBody) -> Option<CyclotomicElement> {
    match body {
        ValueBody::Rational(q) => Some(CyclotomicElement::from_rational(q.clone())),
        ValueBody::Cyclotomic(e) => Some(e.clone()),
        _ => None,
    }
}

/// Exact agreement of independent constructions: the Stirling and Euler
/// formulas for `Li_{-n}`, and symbolic values specialised at `c = -ζ_q^r`
/// against the direct values at `a = r/q` (`|s| <= 8`, `q <= 12`).
pub fn dual_route() -> Result<Vec<Check>> {
    const SUITE: &str = "dual-route";
    let mut checks = Vec::new();
    for n in 1..=12 {
        let same = li_neg_stirling(n)? == li_neg_euler(n)?;
        checks.push(Check::exact(SUITE, format!("Li_-{n} stirling = euler"), same));
    }
    let mut jobs = Vec::new();
    for f in FunctionTag::ALL {
        for s in -8i64..=8 {
            jobs.push((f, s));
        }
    }
    let per_value = jobs
        .par_iter()
        .map(|&(f, s)| {
            let Ok(symbolic) = special_value(f, s, ArgumentSpec::Symbolic) else {
                return Ok(Vec::new());
            };
            rational_points(12)
                .into_iter()
                .map(|(r, q)| {
                    let point = special_value(f, s, ArgumentSpec::rational(r, q)?)?;
                    let spec = symbolic.at_rational(r, q)?;
                    let same = spec.pi_exponent == point.pi_exponent
                        && as_cyclotomic(&spec.body).is_some()
                        && as_cyclotomic(&spec.body) == as_cyclotomic(&point.body);
                    Ok(Check::exact(SUITE, format!("{f}({s}) at c = -ζ_{q}^{r}"), same))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    checks.extend(per_value.into_iter().flatten());
    Ok(checks)
}

/// For `s = -1, ..., -8` and every function: the numeric maximum over the
/// a-grid is below `1e-10` exactly when the symbolic value is identically zero,
/// and above ten times that otherwise.
pub fn vanishing() -> Result<Vec<Check>> {
    const SUITE: &str = "vanishing";
    let grid = default_a_grid();
    let mut jobs = Vec::new();
    for f in FunctionTag::ALL {
        let zeros = vanishing_pattern(f, -8, -1)?;
        for s in -8i64..=-1 {
            jobs.push((f, s, zeros.contains(&s)));
        }
    }
    jobs.par_iter()
        .map(|&(f, s, expect_zero)| {
            let max = grid_max_abs(f, Complex64::new(s as f64, 0.0), &grid)?;
            let (pass, what) = if expect_zero {
                (max <= VANISHING_TOL, "vanishes")
            } else {
                (max > 10.0 * VANISHING_TOL, "does not vanish")
            };
            Ok(Check {
                suite: SUITE.into(),
                check: format!("{f}({s}, ·) {what}"),
                residual: max,
                tol: VANISHING_TOL,
                pass,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_are_reduced() {
        let p = rational_points(6);
        assert_eq!(p, vec![(1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (1, 6)]);
    }

    #[test]
    fn vanishing_suite_matches_parity() {
        let checks = vanishing().unwrap();
        assert_eq!(checks.len(), 48);
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
        let z4 = checks.iter().find(|c| c.check.starts_with("Z(-4")).unwrap();
        assert!(z4.check.ends_with("vanishes"));
    }
}
