use std::f64::consts::PI;

use super::gamma::gamma_complex;
use super::hurwitz::hurwitz_em;
use super::phase::{cis_2pi_multiple, exp_i_pi};
use super::{check_a_open, finite, ComplexScalar, ComplexSum, DIRECT_RE_MIN};
use crate::error::{Error, Result};

const TAIL_TERMS: usize = 60;
const MAX_TERMS: f64 = 4.0e6;

/// `Σ_{n>=1} z^n n^{-s}`, `z = e^{2πia}`, as a partial sum up to `N - 1`
/// plus the tail expansion
/// `Σ_{n>=N} z^n n^{-s} = z^N N^{-s} Σ_j C(-s, j) N^{-j} Σ_{m>=0} m^j z^m`.
///
/// The inner sums are `Li_{-j}(z)` (with the `m = 0` term for `j = 0`); the
/// expansion is asymptotic in `1/N` and needs `N·|1 - z| ≫ |s| + j`.
pub(crate) fn periodic_series(s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
    check_a_open(a)?;
    let z = cis_2pi_multiple(a, 1.0);
    let one_minus_z = ComplexScalar::new(1.0, 0.0) - z;
    let theta = 2.0 * PI * a.min(1.0 - a);
    let mut n_cut = (3.0 * (s.norm() + 30.0) / theta).ceil().max(20.0);

    // h_j = Li_{-j}(z) / j!, with h_0 = 1/(1-z)
    let ratio = z / one_minus_z;
    let mut h = vec![ComplexScalar::new(0.0, 0.0); TAIL_TERMS];
    h[0] = 1.0 / one_minus_z;
    for j in 1..TAIL_TERMS {
        let mut acc = ComplexScalar::new(0.0, 0.0);
        let mut inv_fact = 1.0;
        for k in (0..j).rev() {
            inv_fact /= (j - k) as f64;
            acc += h[k] * inv_fact;
        }
        h[j] = ratio * acc;
    }

    loop {
        if let Some(tail) = tail_sum(s, &h, n_cut) {
            let n = n_cut as u64;
            let mut sum = ComplexSum::default();
            for k in (1..n).rev() {
                let kf = k as f64;
                sum.add(cis_2pi_multiple(a, kf) * (-s * kf.ln()).exp());
            }
            let zn = cis_2pi_multiple(a, n_cut);
            sum.add(zn * (-s * n_cut.ln()).exp() * tail);
            return finite(sum.value(), "periodic_zeta");
        }
        n_cut *= 2.0;
        if n_cut > MAX_TERMS {
            return Err(Error::NonFinite("periodic_zeta tail did not converge"));
        }
    }
}

/// `Σ_j C(-s, j) N^{-j} j! h_j`, or `None` if the asymptotic series starts
/// growing before it has converged.
fn tail_sum(s: ComplexScalar, h: &[ComplexScalar], n: f64) -> Option<ComplexScalar> {
    let mut sum = ComplexSum::default();
    // C(-s, j) j! / N^j = Π_{i<j} (-s - i) / N
    let mut coef = ComplexScalar::new(1.0, 0.0);
    // h_j vanishes for every other j when z = -1, so look at pairs of terms.
    let mut prev = [f64::INFINITY; 2];
    for (j, hj) in h.iter().enumerate() {
        if j > 0 {
            coef *= (-s - (j - 1) as f64) / n;
        }
        let term = coef * hj;
        sum.add(term);
        let size = term.norm();
        let total = sum.value().norm();
        if coef == ComplexScalar::new(0.0, 0.0) {
            return Some(sum.value());
        }
        let pair = size.max(prev[1]);
        if j > 1 && pair <= 1e-17 * total.max(1e-300) {
            return Some(sum.value());
        }
        if j > 4 && pair > prev[0].max(prev[1]) {
            return None;
        }
        prev = [prev[1], size];
    }
    None
}

fn one() -> ComplexScalar {
    ComplexScalar::new(1.0, 0.0)
}

/// `Li_s(e^{2πia}) = Σ_{n>=1} e^{2πina} n^{-s}`, continued to all `s`, `0 < a < 1`.
pub fn periodic_zeta(s: ComplexScalar, a: f64) -> Result<ComplexScalar> {
    check_a_open(a)?;
    if s.re >= DIRECT_RE_MIN {
        return periodic_series(s, a);
    }
    // Γ(1-s)/(2π)^{1-s} (e^{iπ(1-s)/2} ζ(1-s,a) + e^{-iπ(1-s)/2} ζ(1-s,1-a))
    let t = one() - s;
    let w = t * 0.5;
    let bracket = exp_i_pi(w) * hurwitz_em(t, a)? + exp_i_pi(-w) * hurwitz_em(t, 1.0 - a)?;
    let v = gamma_complex(t)? * (-t * (2.0 * PI).ln()).exp() * bracket;
    finite(v, "periodic_zeta")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> ComplexScalar {
        ComplexScalar::new(x, 0.0)
    }

    #[test]
    fn examples() {
        let v = periodic_zeta(re(2.0), 0.5).unwrap();
        assert!((v - re(-PI * PI / 12.0)).norm() < 1e-14);
        let v = periodic_zeta(re(0.0), 0.25).unwrap();
        assert!((v - ComplexScalar::new(-0.5, 0.5)).norm() < 1e-14);
        let v = periodic_zeta(re(1.0), 1.0 / 6.0).unwrap();
        assert!((v - ComplexScalar::new(0.0, PI / 3.0)).norm() < 1e-14);
        assert!(periodic_zeta(re(2.0), 0.0).is_err());
    }

    /// `Li_{-n}(z) = z A_n(z) / (1-z)^{n+1}` with Eulerian polynomials.
    fn li_neg_eulerian(n: usize, z: ComplexScalar) -> ComplexScalar {
        let mut row = vec![1.0f64];
        for m in 1..=n {
            let mut next = vec![0.0; m];
            for k in 0..m {
                let left = if k < row.len() { row[k] } else { 0.0 };
                let right = if k >= 1 && k - 1 < row.len() { row[k - 1] } else { 0.0 };
                next[k] = (k + 1) as f64 * left + (m - k) as f64 * right;
            }
            row = next;
        }
        let poly = row.iter().rev().fold(re(0.0), |acc, &c| acc * z + c);
        z * poly / (one() - z).powi(n as i32 + 1)
    }

    #[test]
    fn negative_integers_match_eulerian_closed_form() {
        for n in 1..=12usize {
            for &a in &[0.05, 0.2, 1.0 / 3.0, 0.45, 0.7] {
                let z = ComplexScalar::from_polar(1.0, 2.0 * PI * a);
                let want = li_neg_eulerian(n, z);
                let got = periodic_zeta(re(-(n as f64)), a).unwrap();
                assert!((got - want).norm() < 1e-11 * want.norm().max(1.0), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn series_and_reflection_agree_near_the_switch() {
        for &(x, y) in &[(-0.5, 0.0), (-0.5, 3.0), (-0.49, -7.0)] {
            let s = ComplexScalar::new(x, y);
            for &a in &[0.1, 0.3, 0.5] {
                let t = one() - s;
                let w = t * 0.5;
                let bracket = exp_i_pi(w) * hurwitz_em(t, a).unwrap()
                    + exp_i_pi(-w) * hurwitz_em(t, 1.0 - a).unwrap();
                let refl = gamma_complex(t).unwrap() * (-t * (2.0 * PI).ln()).exp() * bracket;
                let direct = periodic_series(s, a).unwrap();
                assert!((refl - direct).norm() < 1e-12 * direct.norm().max(1.0), "s={s} a={a}");
            }
        }
    }

    #[test]
    fn log_and_sawtooth_at_one() {
        for &a in &[0.01, 0.13, 0.37, 0.5, 0.92] {
            let v = periodic_zeta(re(1.0), a).unwrap();
            let want_re = -(2.0 * (PI * a).sin()).ln();
            let want_im = PI * (1.0 - 2.0 * a) / 2.0;
            assert!((v.re - want_re).abs() < 1e-12 && (v.im - want_im).abs() < 1e-12, "a = {a}");
        }
    }
}
