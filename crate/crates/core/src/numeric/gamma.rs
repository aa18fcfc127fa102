use std::f64::consts::PI;

use super::phase::{cos_pi, sin_pi, sin_pi_complex};
use super::{finite, ComplexScalar};
use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer(s: ComplexScalar) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

/// `Γ(s)` by the Lanczos approximation, reflected for `Re s < 1/2`.
pub fn gamma_complex(s: ComplexScalar) -> Result<ComplexScalar> {
    if is_nonpositive_integer(s) {
        return Err(Error::Pole(format!("Γ has a pole at s = {}", s.re)));
    }
    if s.re < 0.5 {
        let g = gamma_complex(ComplexScalar::new(1.0, 0.0) - s)?;
        return finite(PI / (sin_pi_complex(s) * g), "gamma_complex");
    }
    let z = s - 1.0;
    let mut x = ComplexScalar::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    let v = (2.0 * PI).sqrt() * ((z + 0.5) * t.ln() - t).exp() * x;
    finite(v, "gamma_complex")
}

/// `ψ(x)` for real `x`, by upward recurrence and the asymptotic series.
pub fn digamma_real(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument(format!("digamma of {x}")));
    }
    if x <= 0.0 && x == x.round() {
        return Err(Error::Pole(format!("ψ has a pole at {x}")));
    }
    if x < 0.0 {
        // ψ(x) = ψ(1 - x) - π cot(πx)
        return Ok(digamma_real(1.0 - x)? - PI * cos_pi(x) / sin_pi(x));
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 10.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    // B_{2k}/(2k) for k = 1..7
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let y2 = 1.0 / (y * y);
    let mut series = 0.0;
    let mut p = y2;
    for c in C {
        series += c * p;
        p *= y2;
    }
    Ok(acc + y.ln() - 0.5 / y - series)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    fn re(x: f64) -> ComplexScalar {
        ComplexScalar::new(x, 0.0)
    }

    #[test]
    fn gamma_examples() {
        assert!((gamma_complex(re(1.0)).unwrap() - 1.0).norm() < 1e-14);
        assert!((gamma_complex(re(0.5)).unwrap() - PI.sqrt()).norm() < 1e-14);
        assert!((gamma_complex(re(5.0)).unwrap() - 24.0).norm() < 1e-12);
        assert!(gamma_complex(re(0.0)).is_err());
        assert!(gamma_complex(re(-3.0)).is_err());
    }

    #[test]
    fn gamma_factorials_and_recurrence() {
        let mut f = 1.0f64;
        for n in 1..=30 {
            let g = gamma_complex(re(n as f64)).unwrap();
            assert!((g.re / f - 1.0).abs() < 1e-13, "Γ({n})");
            f *= n as f64;
        }
        for &(x, y) in &[(0.3, 2.0), (-4.7, 11.0), (12.5, -25.0), (-20.2, 0.4)] {
            let s = ComplexScalar::new(x, y);
            let lhs = gamma_complex(s + 1.0).unwrap();
            let rhs = s * gamma_complex(s).unwrap();
            assert!((lhs - rhs).norm() <= 1e-13 * lhs.norm(), "s = {s}");
        }
    }

    #[test]
    fn gamma_reflection_on_imaginary_axis() {
        // |Γ(iy)|² = π / (y sinh πy)
        for &y in &[0.5, 3.0, 10.0, 25.0] {
            let g = gamma_complex(ComplexScalar::new(0.0, y)).unwrap();
            let want = PI / (y * (PI * y).sinh());
            assert!((g.norm_sqr() / want - 1.0).abs() < 1e-12, "y = {y}");
        }
    }

    #[test]
    fn digamma_examples() {
        assert!((digamma_real(1.0).unwrap() + EULER_GAMMA).abs() < 1e-13);
        assert!((digamma_real(2.0).unwrap() - digamma_real(1.0).unwrap() - 1.0).abs() < 1e-13);
        let half = -EULER_GAMMA - 2.0 * 2f64.ln();
        assert!((digamma_real(0.5).unwrap() - half).abs() < 1e-13);
        let refl = digamma_real(0.75).unwrap() - digamma_real(0.25).unwrap();
        assert!((refl - PI).abs() < 1e-12);
        assert!(digamma_real(0.0).is_err());
        assert!(digamma_real(-2.0).is_err());
    }
}
