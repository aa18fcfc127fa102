use std::f64::consts::PI;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::gamma::{digamma_real, gamma_complex};
use super::hermite::hurwitz_zeta_hermite;
use super::hurwitz::{hurwitz_em, hurwitz_zeta};
use super::periodic::{periodic_series, periodic_zeta};
use super::phase::{cis_2pi_multiple, cos_pi_complex, sin_pi_complex};
use super::{check_a_open, finite, ComplexScalar, ComplexSum, PrecisionContract, DIRECT_RE_MIN};
use crate::error::{Error, Result};
use crate::values::FunctionTag;

fn c(re: f64) -> ComplexScalar {
    ComplexScalar::new(re, 0.0)
}

/// `2Γ(t)(2π)^{-t} cos(πt/2)`, the factor in `Z(1-t) = χ_c(t) P(t)`.
fn chi_cos(t: ComplexScalar) -> Result<ComplexScalar> {
    Ok(gamma_complex(t)? * (-t * (2.0 * PI).ln()).exp() * cos_pi_complex(t * 0.5) * 2.0)
}

/// `2Γ(t)(2π)^{-t} sin(πt/2)`, the factor in `Y(1-t) = χ_s(t) O(t)`.
fn chi_sin(t: ComplexScalar) -> Result<ComplexScalar> {
    Ok(gamma_complex(t)? * (-t * (2.0 * PI).ln()).exp() * sin_pi_complex(t * 0.5) * 2.0)
}

/// `(Li_s(e^{2πia}), Li_s(e^{-2πia}))` from the series.
fn li_pair(s: ComplexScalar, a: f64) -> Result<(ComplexScalar, ComplexScalar)> {
    let l = periodic_series(s, a)?;
    if s.im == 0.0 {
        Ok((l, l.conj()))
    } else {
        Ok((l, periodic_series(s, 1.0 - a)?))
    }
}

fn z_direct(s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
    Ok(hurwitz_em(s, a)? + hurwitz_em(s, 1.0 - a)?)
}

fn y_direct(s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
    if s == c(1.0) {
        // the poles cancel: ψ(1-a) - ψ(a)
        return Ok(c(digamma_real(1.0 - a)? - digamma_real(a)?));
    }
    Ok(hurwitz_em(s, a)? - hurwitz_em(s, 1.0 - a)?)
}

fn p_direct(s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
    let (l, m) = li_pair(s, a)?;
    Ok(l + m)
}

fn o_direct(s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
    let (l, m) = li_pair(s, a)?;
    Ok(-ComplexScalar::i() * (l - m))
}

fn pole_check(f: FunctionTag, s: ComplexScalar) -> Result<()> {
    if matches!(f, FunctionTag::Z | FunctionTag::Q) && s == c(1.0) {
        return Err(Error::Pole(format!("{f}(s, a) has a pole at s = 1")));
    }
    Ok(())
}

/// `Z, P, Q, Y, O, X` at complex `s` and `0 < a < 1`.
///
/// For `Re s < -1/2` the value comes from the partner function at `1 - s`:
/// `Z(s) = χ_c(1-s) P(1-s)`, `P(s) = χ_c(1-s) Z(1-s)`, `Y(s) = χ_s(1-s) O(1-s)`,
/// `O(s) = χ_s(1-s) Y(1-s)`.
pub fn combined(f: FunctionTag, s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
    check_a_open(a)?;
    pole_check(f, s)?;
    let direct = s.re >= DIRECT_RE_MIN;
    let t = c(1.0) - s;
    let v = match f {
        FunctionTag::Z if direct => z_direct(s, a)?,
        FunctionTag::Z => chi_cos(t)? * p_direct(t, a)?,
        FunctionTag::P if direct => p_direct(s, a)?,
        FunctionTag::P => chi_cos(t)? * z_direct(t, a)?,
        FunctionTag::Y if direct => y_direct(s, a)?,
        FunctionTag::Y => chi_sin(t)? * o_direct(t, a)?,
        FunctionTag::O if direct => o_direct(s, a)?,
        FunctionTag::O => chi_sin(t)? * y_direct(t, a)?,
        FunctionTag::Q => (combined(FunctionTag::Z, s, a)? + combined(FunctionTag::P, s, a)?) * 0.5,
        FunctionTag::X => (combined(FunctionTag::Y, s, a)? + combined(FunctionTag::O, s, a)?) * 0.5,
    };
    finite(v, "combined")
}

/// A numeric value together with whether it lies outside the precision contract.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub value: ComplexScalar,
    pub degraded: bool,
}

pub fn combined_with_contract(
    f: FunctionTag,
    s: ComplexScalar,
    a: f64,
    contract: &PrecisionContract,
) -> Result<Evaluation> {
    Ok(Evaluation {
        value: combined(f, s, a)?,
        degraded: !contract.covers(s, a),
    })
}

/// Outcome of checking one functional equation at one point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FunctionalEquationCheck {
    pub lhs: ComplexScalar,
    pub rhs: ComplexScalar,
    /// `|lhs - rhs| / max(1, |lhs|, |rhs|)`.
    pub residual: f64,
    /// True when no side was obtained from a reflection formula, so the two
    /// sides come from unrelated code paths.
    pub independent: bool,
}

/// Evaluator used on either side of a functional equation: Hurwitz-type
/// pieces always come from the Hermite integral; periodic pieces come from
/// the series where it applies.
struct Sides {
    a: f64,
    used_reflection: bool,
}

impl Sides {
    fn hurwitz_pair(&mut self, s: ComplexScalar) -> Result<(ComplexScalar, ComplexScalar)> {
        Ok((
            hurwitz_zeta_hermite(s, self.a)?,
            hurwitz_zeta_hermite(s, 1.0 - self.a)?,
        ))
    }

    fn periodic(&mut self, f: FunctionTag, s: ComplexScalar) -> Result<ComplexScalar> {
        if s.re < DIRECT_RE_MIN {
            self.used_reflection = true;
        }
        combined(f, s, self.a)
    }

    fn eval(&mut self, f: FunctionTag, s: ComplexScalar) -> Result<ComplexScalar> {
        Ok(match f {
            FunctionTag::Z => {
                let (x, y) = self.hurwitz_pair(s)?;
                x + y
            }
            FunctionTag::Y => {
                let (x, y) = self.hurwitz_pair(s)?;
                x - y
            }
            FunctionTag::P | FunctionTag::O => self.periodic(f, s)?,
            FunctionTag::Q => (self.eval(FunctionTag::Z, s)? + self.eval(FunctionTag::P, s)?) * 0.5,
            FunctionTag::X => (self.eval(FunctionTag::Y, s)? + self.eval(FunctionTag::O, s)?) * 0.5,
        })
    }
}

/// Residual of the reflection identity for `f`:
///
/// ```text
/// Z(1-s) = χ_c(s) P(s)    P(1-s) = χ_c(s) Z(s)    Q(1-s) = χ_c(s) Q(s)
/// Y(1-s) = χ_s(s) O(s)    O(1-s) = χ_s(s) Y(s)    X(1-s) = χ_s(s) X(s)
/// ```
pub fn functional_equation_residual(
    f: FunctionTag,
    s: ComplexScalar,
    a: f64,
) -> Result<FunctionalEquationCheck> {
    check_a_open(a)?;
    let t = c(1.0) - s;
    let near = |z: ComplexScalar| (z - c(1.0)).norm() < 1e-8;
    let gamma_pole = s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round();
    if gamma_pole || near(s) || near(t) {
        return Err(Error::Pole(format!("functional equation singular at s = {s}")));
    }
    let (partner, chi) = match f {
        FunctionTag::Z => (FunctionTag::P, chi_cos(s)?),
        FunctionTag::P => (FunctionTag::Z, chi_cos(s)?),
        FunctionTag::Q => (FunctionTag::Q, chi_cos(s)?),
        FunctionTag::Y => (FunctionTag::O, chi_sin(s)?),
        FunctionTag::O => (FunctionTag::Y, chi_sin(s)?),
        FunctionTag::X => (FunctionTag::X, chi_sin(s)?),
    };
    let mut sides = Sides {
        a,
        used_reflection: false,
    };
    let lhs = sides.eval(f, t)?;
    let rhs = chi * sides.eval(partner, s)?;
    let scale = 1f64.max(lhs.norm()).max(rhs.norm());
    Ok(FunctionalEquationCheck {
        lhs,
        rhs,
        residual: (lhs - rhs).norm() / scale,
        independent: !sides.used_reflection,
    })
}

/// Relative residual of `Li_s(e^{2πir/q}) = q^{-s} Σ_{m=1}^{q} e^{2πirm/q} ζ(s, m/q)`.
pub fn multiplication_residual(s: ComplexScalar, r: u64, q: u64) -> Result<f64> {
    if q < 2 || r == 0 || r >= q || r.gcd(&q) != 1 {
        return Err(Error::InvalidArgument(format!(
            "multiplication formula needs gcd(r, q) = 1 and 0 < r < q, got {r}/{q}"
        )));
    }
    if s == c(1.0) {
        return Err(Error::Pole("ζ(s, m/q) has a pole at s = 1".into()));
    }
    let a = r as f64 / q as f64;
    let lhs = periodic_zeta(s, a)?;
    let mut sum = ComplexSum::default();
    for m in 1..=q {
        let phase = cis_2pi_multiple(a, m as f64);
        sum.add(phase * hurwitz_zeta(s, m as f64 / q as f64)?);
    }
    let rhs = sum.value() * (-s * (q as f64).ln()).exp();
    Ok((lhs - rhs).norm() / 1f64.max(lhs.norm()).max(rhs.norm()))
}
