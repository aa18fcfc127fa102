//! `sin(πx)`, `cos(πx)` and `e^{iπu}` with exact argument reduction.

use std::f64::consts::PI;

use super::ComplexScalar;

/// `x - 2·round(x/2)`, exact in floating point, in `[-1, 1]`.
fn reduce(x: f64) -> f64 {
    x - 2.0 * (x / 2.0).round()
}

/// `sin(πx)`; exactly zero at integers and `±1` at half-integers.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = reduce(x);
    let t = r.abs();
    let v = if t == 0.0 || t == 1.0 {
        0.0
    } else if t == 0.5 {
        1.0
    } else if t < 0.25 {
        (PI * t).sin()
    } else if t <= 0.75 {
        (PI * (0.5 - t)).cos()
    } else {
        (PI * (1.0 - t)).sin()
    };
    if r < 0.0 {
        -v
    } else {
        v
    }
}

/// `cos(πx)`; exactly zero at half-integers and `±1` at integers.
pub fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let t = reduce(x).abs();
    if t == 0.5 {
        0.0
    } else if t == 0.0 {
        1.0
    } else if t == 1.0 {
        -1.0
    } else if t < 0.25 {
        (PI * t).cos()
    } else if t <= 0.75 {
        (PI * (0.5 - t)).sin()
    } else {
        -(PI * (1.0 - t)).cos()
    }
}

pub fn sin_pi_complex(z: ComplexScalar) -> ComplexScalar {
    let y = PI * z.im;
    ComplexScalar::new(sin_pi(z.re) * y.cosh(), cos_pi(z.re) * y.sinh())
}

pub fn cos_pi_complex(z: ComplexScalar) -> ComplexScalar {
    let y = PI * z.im;
    ComplexScalar::new(cos_pi(z.re) * y.cosh(), -sin_pi(z.re) * y.sinh())
}

/// `e^{iπu}`.
pub fn exp_i_pi(u: ComplexScalar) -> ComplexScalar {
    let m = (-PI * u.im).exp();
    ComplexScalar::new(cos_pi(u.re) * m, sin_pi(u.re) * m)
}

/// `e^{2πi·a·n}`, with the fractional part of `a·n` carried to full precision.
pub(crate) fn cis_2pi_multiple(a: f64, n: f64) -> ComplexScalar {
    let p = a * n;
    let err = a.mul_add(n, -p);
    let f = (p - p.floor()) + err;
    ComplexScalar::new(cos_pi(2.0 * f), sin_pi(2.0 * f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_special_points() {
        for k in -40..=40 {
            let x = k as f64;
            assert_eq!(sin_pi(x), 0.0);
            assert_eq!(cos_pi(x).abs(), 1.0);
            assert_eq!(cos_pi(x + 0.5), 0.0);
            assert_eq!(sin_pi(x + 0.5).abs(), 1.0);
        }
        assert_eq!(sin_pi(0.5), 1.0);
        assert_eq!(sin_pi(-0.5), -1.0);
        assert_eq!(cos_pi(1.0), -1.0);
    }

    #[test]
    fn matches_library_trig() {
        let mut x = -7.3;
        while x < 7.3 {
            assert!((sin_pi(x) - (PI * x).sin()).abs() < 1e-14, "sin {x}");
            assert!((cos_pi(x) - (PI * x).cos()).abs() < 1e-14, "cos {x}");
            x += 0.0137;
        }
    }

    #[test]
    fn complex_versions() {
        let z = ComplexScalar::new(0.3, -0.7);
        let w = z * PI;
        assert!((sin_pi_complex(z) - w.sin()).norm() < 1e-14);
        assert!((cos_pi_complex(z) - w.cos()).norm() < 1e-14);
        let e = exp_i_pi(z);
        assert!((e - (ComplexScalar::i() * w).exp()).norm() < 1e-14);
    }

    #[test]
    fn cis_of_exact_multiples() {
        assert_eq!(cis_2pi_multiple(0.5, 3.0), ComplexScalar::new(-1.0, 0.0));
        assert_eq!(cis_2pi_multiple(0.25, 1.0), ComplexScalar::new(0.0, 1.0));
        let z = cis_2pi_multiple(0.3, 12345.0);
        let f = (0.3f64 * 12345.0).fract();
        assert!((z - ComplexScalar::from_polar(1.0, 2.0 * PI * f)).norm() < 1e-10);
    }
}
