//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` reduced modulo
//! the cyclotomic polynomial `Φ_N`. Elements of different orders are combined
//! after lifting both to the least common multiple of their orders, so
//! `cos(2πk/q)` and `sin(2πk/q)` for any `q` can be mixed freely.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, rational_to_f64, Rational};
use crate::poly::{Poly, QPolynomial};

pub fn euler_phi(n: u64) -> u64 {
    let mut n_rem = n;
    let mut phi = n;
    let mut p = 2;
    while p * p <= n_rem {
        if n_rem % p == 0 {
            while n_rem % p == 0 {
                n_rem /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n_rem > 1 {
        phi -= phi / n_rem;
    }
    phi
}

fn phi_cache() -> &'static RwLock<HashMap<u64, QPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, QPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `Φ_N`, from `x^N - 1 = Π_{d|N} Φ_d` by exact division.
pub fn cyclotomic_polynomial(n: u64) -> QPolynomial {
    assert!(n >= 1, "cyclotomic_polynomial requires N >= 1");
    if let Some(p) = phi_cache().read().expect("Φ cache poisoned").get(&n) {
        return p.clone();
    }
    let mut p = QPolynomial::monomial(n as usize, rat(1, 1)).sub(&QPolynomial::one());
    for d in (1..n).filter(|d| n % d == 0) {
        let (q, r) = p.div_rem(&cyclotomic_polynomial(d)).expect("Φ_d is nonzero");
        debug_assert!(r.is_zero());
        p = q;
    }
    phi_cache()
        .write()
        .expect("Φ cache poisoned")
        .insert(n, p.clone());
    p
}

/// An element of `Q(ζ_N)`, `ζ_N = e^{2πi/N}` under the standard embedding.
#[derive(Clone)]
pub struct CyclotomicElement {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CyclotomicElement {
    /// Reduces an arbitrary polynomial in `ζ_N` to canonical form.
    pub fn from_poly(order: u64, p: &QPolynomial) -> Self {
        let phi = cyclotomic_polynomial(order);
        let r = p.rem(&phi).expect("Φ_N is nonzero");
        let mut coeffs = r.into_coeffs();
        coeffs.resize(euler_phi(order) as usize, Rational::zero());
        CyclotomicElement { order, coeffs }
    }

    pub fn from_rational(q: Rational) -> Self {
        CyclotomicElement {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(rat(1, 1))
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn root_of_unity(order: u64, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        Self::from_poly(order, &QPolynomial::monomial(e, rat(1, 1)))
    }

    /// The imaginary unit, living in `Q(ζ_4)`.
    pub fn i() -> Self {
        Self::root_of_unity(4, 1)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn as_poly(&self) -> QPolynomial {
        Poly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-expresses the element in `Q(ζ_M)`; `M` must be a multiple of the order.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m % self.order == 0, "cannot lift order {} to {m}", self.order);
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut spread = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            spread[k * step] = c.clone();
        }
        Self::from_poly(m, &Poly::new(spread))
    }

    /// Inverse of [`lift`](Self::lift): the same element expressed in
    /// `Q(ζ_d)` if it lies in that subfield, `d` dividing the order.
    pub fn restrict(&self, d: u64) -> Option<Self> {
        if self.order % d != 0 {
            return None;
        }
        let rows = self.coeffs.len();
        let cols = euler_phi(d) as usize;
        // Columns are the lifted basis vectors ζ_d^k; solve by elimination.
        let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); cols + 1]; rows];
        for k in 0..cols {
            let lifted = Self::root_of_unity(d, k as i64).lift(self.order);
            for (r, row) in m.iter_mut().enumerate() {
                row[k] = lifted.coeffs[r].clone();
            }
        }
        for (r, row) in m.iter_mut().enumerate() {
            row[cols] = self.coeffs[r].clone();
        }
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..cols {
            let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, p);
            let inv = m[pivot_row][col].recip();
            for x in m[pivot_row].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..rows {
                if r != pivot_row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..=cols {
                        let v = &m[pivot_row][c] * &f;
                        m[r][c] = &m[r][c] - v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        if m[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
            return None;
        }
        let mut sol = vec![Rational::zero(); cols];
        for (r, &col) in pivots.iter().enumerate() {
            sol[col] = m[r][cols].clone();
        }
        Some(CyclotomicElement {
            order: d,
            coeffs: sol,
        })
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.order.lcm(&other.order);
        (self.lift(m), other.lift(m))
    }

    pub fn scalar_mul(&self, q: &Rational) -> Self {
        CyclotomicElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Field inverse via the extended Euclidean algorithm against `Φ_N`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, u, _) = self.as_poly().ext_gcd(&cyclotomic_polynomial(self.order));
        debug_assert_eq!(g, QPolynomial::one());
        Ok(Self::from_poly(self.order, &u))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Complex conjugate, `ζ^k ↦ ζ^{-k}`.
    pub fn conjugate(&self) -> Self {
        let n = self.order as usize;
        let mut p = vec![Rational::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            p[(n - k) % n] += c;
        }
        Self::from_poly(self.order, &Poly::new(p))
    }

    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    /// The rational value, if every coefficient past the constant term vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// Value under `ζ_N ↦ e^{2πi/N}`.
    pub fn embed_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / n;
                Complex64::from_polar(rational_to_f64(c), theta)
            })
            .sum()
    }

    /// `Σ |coeffs|`, the scale of the embedding error bound.
    pub fn coefficient_mass(&self) -> f64 {
        self.coeffs.iter().map(|c| rational_to_f64(&c.abs())).sum()
    }
}

/// `cos(2πk/q)` in `Q(ζ_N)`, `N = lcm(4, q)`.
pub fn cos_frac(k: i64, q: u64) -> CyclotomicElement {
    let n = 4u64.lcm(&q);
    let e = k * (n / q) as i64;
    let z = CyclotomicElement::root_of_unity(n, e);
    let zi = CyclotomicElement::root_of_unity(n, -e);
    (&z + &zi).scalar_mul(&rat(1, 2))
}

/// `sin(2πk/q)` in `Q(ζ_N)`, `N = lcm(4, q)`, with `i = ζ_N^{N/4}`.
pub fn sin_frac(k: i64, q: u64) -> CyclotomicElement {
    let n = 4u64.lcm(&q);
    let e = k * (n / q) as i64;
    let z = CyclotomicElement::root_of_unity(n, e);
    let zi = CyclotomicElement::root_of_unity(n, -e);
    // 1/(2i) = -i/2 = ζ_N^{3N/4} / 2
    let minus_i = CyclotomicElement::root_of_unity(n, 3 * (n / 4) as i64);
    (&(&z - &zi) * &minus_i).scalar_mul(&rat(1, 2))
}

pub fn embed_complex(e: &CyclotomicElement) -> Complex64 {
    e.embed_complex()
}

impl PartialEq for CyclotomicElement {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(ζ_{})", self.order)?;
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| c.to_string()))
            .finish()
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != rat(1, 1) {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "z{}", self.order)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a CyclotomicElement> for &'a CyclotomicElement {
    type Output = CyclotomicElement;
    fn add(self, other: &CyclotomicElement) -> CyclotomicElement {
        let (a, b) = self.common(other);
        CyclotomicElement {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CyclotomicElement> for &'a CyclotomicElement {
    type Output = CyclotomicElement;
    fn sub(self, other: &CyclotomicElement) -> CyclotomicElement {
        self + &(-other)
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a CyclotomicElement> for &'a CyclotomicElement {
    type Output = CyclotomicElement;
    fn mul(self, other: &CyclotomicElement) -> CyclotomicElement {
        let (a, b) = self.common(other);
        CyclotomicElement::from_poly(a.order, &a.as_poly().mul(&b.as_poly()))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicElement {
            type Output = CyclotomicElement;
            fn $m(self, other: CyclotomicElement) -> CyclotomicElement {
                (&self).$m(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CyclotomicElement {
    type Output = CyclotomicElement;
    fn neg(self) -> CyclotomicElement {
        -&self
    }
}

impl crate::poly::Field for CyclotomicElement {
    fn zero() -> Self {
        CyclotomicElement::zero()
    }
    fn one() -> Self {
        CyclotomicElement::one()
    }
    fn is_zero(&self) -> bool {
        CyclotomicElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn from_rational(q: &Rational) -> Self {
        CyclotomicElement::from_rational(q.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn qp(v: &[i64]) -> QPolynomial {
        Poly::new(v.iter().map(|&n| rat(n, 1)).collect())
    }

    fn mobius(n: u64) -> i32 {
        let mut n = n;
        let mut mu = 1;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if n > 1 {
            mu = -mu;
        }
        mu
    }

    #[test]
    fn cyclotomic_polynomial_examples() {
        assert_eq!(cyclotomic_polynomial(1), qp(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), qp(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), qp(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_polynomial_matches_mobius_product() {
        // Φ_N = Π_{d|N} (x^d - 1)^{μ(N/d)}
        for n in 1..=40u64 {
            let mut num = QPolynomial::one();
            let mut den = QPolynomial::one();
            for d in (1..=n).filter(|d| n % d == 0) {
                let f = QPolynomial::monomial(d as usize, rat(1, 1)).sub(&QPolynomial::one());
                match mobius(n / d) {
                    1 => num = num.mul(&f),
                    -1 => den = den.mul(&f),
                    _ => {}
                }
            }
            let (q, r) = num.div_rem(&den).unwrap();
            assert!(r.is_zero());
            assert_eq!(cyclotomic_polynomial(n), q, "N = {n}");
            assert_eq!(q.degree(), Some(euler_phi(n) as usize));
        }
    }

    #[test]
    fn arithmetic_examples() {
        let z4 = CyclotomicElement::root_of_unity(4, 1);
        assert_eq!(&z4 * &z4, CyclotomicElement::from_rational(rat(-1, 1)));
        let z3 = CyclotomicElement::root_of_unity(3, 1);
        let z3sq = CyclotomicElement::root_of_unity(3, 2);
        assert_eq!(&z3 + &z3sq, CyclotomicElement::from_rational(rat(-1, 1)));
        let z8 = CyclotomicElement::root_of_unity(8, 1);
        let sq = &z8 * &z8;
        assert_eq!(sq.order(), 8);
        assert_eq!(sq, z4);
        assert_eq!(sq.restrict(4).unwrap().coeffs(), z4.coeffs());
    }

    #[test]
    fn cos_sin_examples() {
        assert_eq!(cos_frac(1, 4).as_rational(), Some(rat(0, 1)));
        assert_eq!(cos_frac(1, 3).as_rational(), Some(rat(-1, 2)));
        assert_eq!(cos_frac(1, 1).as_rational(), Some(rat(1, 1)));
        assert_eq!(cos_frac(1, 2).as_rational(), Some(rat(-1, 1)));
        assert_eq!(sin_frac(1, 4).as_rational(), Some(rat(1, 1)));
        assert_eq!(sin_frac(1, 2).as_rational(), Some(rat(0, 1)));
        assert_eq!(sin_frac(1, 12).as_rational(), Some(rat(1, 2)));
        assert!(cos_frac(1, 5).as_rational().is_none());
    }

    #[test]
    fn embedding_examples() {
        assert!((cos_frac(1, 3).embed_complex() - Complex64::new(-0.5, 0.0)).norm() < 1e-15);
        assert!((CyclotomicElement::i().embed_complex() - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        let c5 = cos_frac(1, 5).embed_complex();
        assert!((c5.re - 0.309_016_994_374_947_4).abs() < 1e-15 && c5.im.abs() < 1e-15);
    }

    #[test]
    fn as_rational_examples() {
        let e = &(&CyclotomicElement::root_of_unity(3, 1) + &CyclotomicElement::root_of_unity(3, 2))
            + &CyclotomicElement::one();
        assert_eq!(e.as_rational(), Some(rat(0, 1)));
        assert!(CyclotomicElement::i().as_rational().is_none());
    }

    #[test]
    fn trig_embeddings_match_floats() {
        for q in 1..=24u64 {
            for k in -(q as i64)..=(2 * q as i64) {
                let th = 2.0 * PI * k as f64 / q as f64;
                let c = cos_frac(k, q).embed_complex();
                let s = sin_frac(k, q).embed_complex();
                assert!((c.re - th.cos()).abs() < 1e-12 && c.im.abs() < 1e-12, "cos {k}/{q}");
                assert!((s.re - th.sin()).abs() < 1e-12 && s.im.abs() < 1e-12, "sin {k}/{q}");
            }
        }
    }

    #[test]
    fn pythagorean_identity_exact() {
        for q in 1..=24u64 {
            for k in 0..q as i64 {
                let c = cos_frac(k, q);
                let s = sin_frac(k, q);
                assert_eq!(&(&c * &c) + &(&s * &s), CyclotomicElement::one(), "{k}/{q}");
                assert!(c.is_real() && s.is_real());
            }
        }
    }

    #[test]
    fn geometric_sums_vanish() {
        for q in 2..=24u64 {
            for r in (1..q).filter(|r| r.gcd(&q) == 1) {
                let (mut cs, mut ss) = (CyclotomicElement::zero(), CyclotomicElement::zero());
                for m in 1..=q {
                    cs = &cs + &cos_frac((r * m) as i64, q);
                    ss = &ss + &sin_frac((r * m) as i64, q);
                }
                assert!(cs.is_zero() && ss.is_zero(), "r/q = {r}/{q}");
            }
        }
    }

    #[test]
    fn lift_then_restrict_is_identity() {
        for q in [3u64, 4, 5, 6, 10, 12] {
            let e = &cos_frac(1, q) + &sin_frac(2, q).scalar_mul(&rat(3, 7));
            let n = e.order();
            let back = e.lift(3 * n).restrict(n).unwrap();
            assert_eq!(back.order(), n);
            assert_eq!(back.coeffs(), e.coeffs());
        }
        assert!(CyclotomicElement::i().lift(12).restrict(3).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let e = &cos_frac(1, 5) + &CyclotomicElement::from_rational(rat(2, 3));
        let inv = e.inverse().unwrap();
        assert_eq!(&e * &inv, CyclotomicElement::one());
        assert_eq!(CyclotomicElement::zero().inverse(), Err(Error::DivisionByZero));
    }
}
