use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::combined;
use crate::values::FunctionTag;

const REFINE_TOL: f64 = 1e-10;
const MATCH_TOL: f64 = 1e-8;
const SIMPLE_FLOOR: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroLocation {
    pub location: f64,
    /// Width of the final bracket (0 when the grid hit the zero exactly).
    pub refined_tol: f64,
    /// Sign change across the zero and `|f| >= 1e-6` half a unit either side.
    pub simple: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroReport {
    pub function: FunctionTag,
    pub a: f64,
    pub window: [f64; 2],
    pub zeros: Vec<ZeroLocation>,
    pub expected: Vec<i64>,
    pub verdict: Verdict,
}

fn real_part(f: FunctionTag, x: f64, a: f64) -> Result<f64> {
    Ok(combined(f, Complex64::new(x, 0.0), a)?.re)
}

/// Integers where `f(·, a)` is known to vanish on the real axis in `[lo, hi]`.
///
/// `Z` vanishes at the non-positive even integers, `P` and `Q` at the negative
/// even ones, and `Y`, `O`, `X` at the negative odd ones. For `a = 1/2` the
/// odd family is identically zero and has no isolated zeros.
pub fn expected_zeros(f: FunctionTag, a: f64, lo: f64, hi: f64) -> Result<Vec<i64>> {
    if !f.even_family() && a == 0.5 {
        return Err(Error::InvalidArgument(format!("{f}(s, 1/2) is identically zero")));
    }
    let top = if f == FunctionTag::Z { 0 } else { -1 };
    let want_even = f.even_family();
    Ok((lo.ceil() as i64..=(hi.floor() as i64).min(top))
        .filter(|n| (n % 2 == 0) == want_even)
        .collect())
}

/// Scan `f(σ, a)` for sign changes on `lo + i·step` and refine each by bisection.
pub fn scan_real_zeros(f: FunctionTag, a: f64, lo: f64, hi: f64, step: f64) -> Result<ZeroReport> {
    if !(a > 0.0 && a <= 0.5) {
        return Err(Error::InvalidArgument(format!("a = {a} must lie in (0, 1/2]")));
    }
    if !(step > 0.0 && step <= 0.05) || !(lo < hi) {
        return Err(Error::InvalidArgument(format!(
            "need lo < hi and 0 < step <= 0.05 (window [{lo}, {hi}], step {step})"
        )));
    }
    if matches!(f, FunctionTag::Z | FunctionTag::Q) && lo <= 1.0 && 1.0 <= hi {
        return Err(Error::Pole(format!("{f}(s, a) has a pole at s = 1 inside the window")));
    }
    let expected = expected_zeros(f, a, lo, hi)?;

    let n = ((hi - lo) / step).floor() as usize;
    let xs: Vec<f64> = (0..=n).map(|i| lo + i as f64 * step).collect();
    let ys = xs
        .par_iter()
        .map(|&x| real_part(f, x, a))
        .collect::<Result<Vec<_>>>()?;

    let mut zeros = Vec::new();
    for i in 0..xs.len() {
        if ys[i] == 0.0 {
            zeros.push((xs[i], 0.0));
        } else if i + 1 < xs.len() && ys[i + 1] != 0.0 && ys[i].signum() != ys[i + 1].signum() {
            zeros.push(bisect(f, a, xs[i], xs[i + 1], ys[i])?);
        }
    }
    let zeros = zeros
        .into_iter()
        .map(|(location, refined_tol)| {
            Ok(ZeroLocation {
                location,
                refined_tol,
                simple: is_simple(f, a, location)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let matches = zeros.len() == expected.len()
        && zeros
            .iter()
            .zip(&expected)
            .all(|(z, &k)| (z.location - k as f64).abs() <= MATCH_TOL);
    Ok(ZeroReport {
        function: f,
        a,
        window: [lo, hi],
        zeros,
        expected,
        verdict: if matches { Verdict::Match } else { Verdict::Mismatch },
    })
}

fn bisect(f: FunctionTag, a: f64, mut lo: f64, mut hi: f64, mut f_lo: f64) -> Result<(f64, f64)> {
    while hi - lo > REFINE_TOL {
        let mid = 0.5 * (lo + hi);
        let v = real_part(f, mid, a)?;
        if v == 0.0 {
            return Ok((mid, 0.0));
        }
        if v.signum() == f_lo.signum() {
            lo = mid;
            f_lo = v;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi), hi - lo))
}

fn is_simple(f: FunctionTag, a: f64, x: f64) -> Result<bool> {
    let left = real_part(f, x - 0.5, a)?;
    let right = real_part(f, x + 0.5, a)?;
    Ok(left.signum() != right.signum() && left.abs() >= SIMPLE_FLOOR && right.abs() >= SIMPLE_FLOOR)
}

/// The point `a₀` where `Q(1/2, a)` changes sign, together with `Z` and `P` there.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct A0 {
    pub a0: f64,
    pub z_half: f64,
    pub p_half: f64,
}

/// Bisection of `a ↦ Q(1/2, a)` on `[0.05, 0.2]` down to `1e-11`.
pub fn find_a0() -> Result<A0> {
    let half = Complex64::new(0.5, 0.0);
    let q = |a: f64| -> Result<f64> { Ok(combined(FunctionTag::Q, half, a)?.re) };
    let (mut lo, mut hi) = (0.05, 0.2);
    let mut q_lo = q(lo)?;
    if q_lo * q(hi)? >= 0.0 {
        return Err(Error::Bracket { lo, hi });
    }
    while hi - lo > 1e-11 {
        let mid = 0.5 * (lo + hi);
        let v = q(mid)?;
        if v == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if v.signum() == q_lo.signum() {
            lo = mid;
            q_lo = v;
        } else {
            hi = mid;
        }
    }
    let a0 = 0.5 * (lo + hi);
    Ok(A0 {
        a0,
        z_half: combined(FunctionTag::Z, half, a0)?.re,
        p_half: combined(FunctionTag::P, half, a0)?.re,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use FunctionTag::*;

    #[test]
    fn scan_examples() {
        let r = scan_real_zeros(Z, 0.3, -20.5, 0.5, 0.01).unwrap();
        assert_eq!(r.verdict, Verdict::Match, "{r:?}");
        assert_eq!(r.expected.len(), 11);
        assert!(r.zeros.iter().all(|z| z.simple));
        let r = scan_real_zeros(Y, 0.2, -20.5, 0.5, 0.01).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
        assert_eq!(r.expected, (1..=10).map(|k| 1 - 2 * k).rev().collect::<Vec<_>>());
        let r = scan_real_zeros(Q, 0.4, -20.5, 0.5, 0.01).unwrap();
        assert_eq!(r.verdict, Verdict::Match);
    }

    #[test]
    fn scan_errors() {
        assert!(matches!(scan_real_zeros(Z, 0.3, -2.5, 1.5, 0.01), Err(Error::Pole(_))));
        assert!(scan_real_zeros(P, 0.3, -2.5, 0.5, 0.1).is_err());
        assert!(scan_real_zeros(O, 0.5, -2.5, 0.5, 0.01).is_err());
        assert!(scan_real_zeros(P, 0.7, -2.5, 0.5, 0.01).is_err());
    }

    #[test]
    fn a0_value() {
        let r = find_a0().unwrap();
        assert!((r.a0 - 0.1183751396).abs() < 1e-9, "{}", r.a0);
        assert!(r.z_half.abs() <= 1e-8 && r.p_half.abs() <= 1e-8);
    }
}
