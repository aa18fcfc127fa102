//! The field `Q(i)(c)` in the symbol `c = -e^{2πia}`, generalized Euler
//! polynomials `E_{c,n}(t)`, and the two symbolic routes to `Li_{-n}(e^{2πia})`.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Signed;

use crate::cyclotomic::CyclotomicElement;
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, int, rat, rational_to_f64, stirling2, Rational};
use crate::poly::{Field, Poly};
use crate::values::{ExactValue, ValueBody};

/// `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    /// `re + im·ζ_4` as a cyclotomic element.
    pub fn to_cyclotomic(&self) -> CyclotomicElement {
        let re = CyclotomicElement::from_rational(self.re.clone());
        let im = CyclotomicElement::i().scalar_mul(&self.im);
        &re + &im
    }

    /// `i^k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::real(rat(1, 1)),
            1 => Self::i(),
            2 => Self::real(rat(-1, 1)),
            _ => Self::new(Rational::zero(), rat(-1, 1)),
        }
    }
}

impl Field for GaussianRational {
    fn zero() -> Self {
        GaussianRational::real(Rational::zero())
    }
    fn one() -> Self {
        GaussianRational::real(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul(&self, o: &Self) -> Self {
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    fn neg(&self) -> Self {
        GaussianRational::new(-&self.re, -&self.im)
    }
    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }
    fn from_rational(q: &Rational) -> Self {
        GaussianRational::real(q.clone())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "({}{}{}i)", self.re, sign, self.im.abs())
            }
        }
    }
}

/// Polynomial in `c` with Gaussian-rational coefficients.
pub type GaussianPoly = Poly<GaussianRational>;

/// A reduced quotient of polynomials in `c`. The denominator is monic and
/// coprime to the numerator, so structural equality is field equality.
#[derive(Clone, PartialEq)]
pub struct RationalFunctionC {
    numerator: GaussianPoly,
    denominator: GaussianPoly,
}

impl RationalFunctionC {
    pub fn new(numerator: GaussianPoly, denominator: GaussianPoly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numerator.is_zero() {
            return Ok(Self::zero());
        }
        let g = numerator.gcd(&denominator);
        let (mut num, _) = numerator.div_rem(&g).expect("gcd is nonzero");
        let (mut den, _) = denominator.div_rem(&g).expect("gcd is nonzero");
        let lead_inv = den.leading().and_then(Field::inv).expect("nonzero");
        num = num.scale(&lead_inv);
        den = den.scale(&lead_inv);
        Ok(RationalFunctionC {
            numerator: num,
            denominator: den,
        })
    }

    pub fn from_poly(p: GaussianPoly) -> Self {
        RationalFunctionC {
            numerator: p,
            denominator: GaussianPoly::one(),
        }
    }

    pub fn constant(g: GaussianRational) -> Self {
        Self::from_poly(GaussianPoly::constant(g))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::constant(GaussianRational::real(q))
    }

    pub fn zero() -> Self {
        Self::from_poly(GaussianPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(GaussianPoly::one())
    }

    /// The symbol `c` itself.
    pub fn c() -> Self {
        Self::from_poly(GaussianPoly::x())
    }

    /// `b = -1/(1+c)`.
    pub fn b() -> Self {
        Self::new(
            GaussianPoly::constant(GaussianRational::real(rat(-1, 1))),
            one_plus_c(),
        )
        .expect("1 + c is nonzero")
    }

    pub fn numerator(&self) -> &GaussianPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &GaussianPoly {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The constant value when the function does not depend on `c`.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match (self.numerator.degree(), self.denominator.degree()) {
            (None, _) => Some(<GaussianRational as Field>::zero()),
            (Some(0), Some(0)) => Some(self.numerator.coeff(0)),
            _ => None,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            self.numerator
                .mul(&o.denominator)
                .add(&o.numerator.mul(&self.denominator)),
            self.denominator.mul(&o.denominator),
        )
        .expect("product of nonzero denominators")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunctionC {
            numerator: self.numerator.neg(),
            denominator: self.denominator.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            self.numerator.mul(&o.numerator),
            self.denominator.mul(&o.denominator),
        )
        .expect("product of nonzero denominators")
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inverse()?))
    }

    pub fn scale(&self, g: &GaussianRational) -> Self {
        self.mul(&Self::constant(g.clone()))
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        self.scale(&GaussianRational::real(q.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// The substitution `c ↦ 1/c`.
    pub fn invert_symbol(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.numerator.degree().unwrap_or(0);
        let dd = self.denominator.degree().unwrap_or(0);
        let d = dn.max(dd);
        // p(1/c)·c^d reverses coefficients into degree d.
        let flip = |p: &GaussianPoly| {
            let mut v = vec![<GaussianRational as Field>::zero(); d + 1];
            for (k, coef) in p.coeffs().iter().enumerate() {
                v[d - k] = coef.clone();
            }
            Poly::new(v)
        };
        Self::new(flip(&self.numerator), flip(&self.denominator))
            .expect("reversed denominator is nonzero")
    }

    /// Complex conjugation of the coefficients (not of `c`).
    pub fn conj_coeffs(&self) -> Self {
        Self::new(
            self.numerator.map(GaussianRational::conj),
            self.denominator.map(GaussianRational::conj),
        )
        .expect("conjugate denominator is nonzero")
    }

    /// Evaluation at `c = x` in any field that `Q(i)` embeds into.
    pub fn eval_in<F: Field>(&self, x: &F, embed: impl Fn(&GaussianRational) -> F) -> Result<F> {
        let horner = |p: &GaussianPoly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(F::zero(), |acc, c| acc.mul(x).add(&embed(c)))
        };
        let den = horner(&self.denominator);
        let inv = den
            .inv()
            .ok_or_else(|| Error::Pole("denominator vanishes at the substituted c".into()))?;
        Ok(horner(&self.numerator).mul(&inv))
    }

    pub fn eval_gaussian(&self, c: &GaussianRational) -> Result<GaussianRational> {
        self.eval_in(c, Clone::clone)
    }
}

fn one_plus_c() -> GaussianPoly {
    Poly::new(vec![
        <GaussianRational as Field>::one(),
        <GaussianRational as Field>::one(),
    ])
}

fn fmt_gauss_poly(p: &GaussianPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (k, coef) in p.coeffs().iter().enumerate().rev() {
        if Field::is_zero(coef) {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "c".into(),
            _ => format!("c^{k}"),
        };
        let term = match (mono.is_empty(), coef.is_one()) {
            (true, _) => coef.to_string(),
            (false, true) => mono,
            (false, false) => format!("{coef}*{mono}"),
        };
        terms.push(term);
    }
    terms.join(" + ").replace("+ -", "- ")
}

impl fmt::Display for RationalFunctionC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = fmt_gauss_poly(&self.numerator);
        if self.denominator.degree() == Some(0) {
            return f.write_str(&num);
        }
        write!(f, "({num})/({})", fmt_gauss_poly(&self.denominator))
    }
}

impl fmt::Debug for RationalFunctionC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Field for RationalFunctionC {
    fn zero() -> Self {
        RationalFunctionC::zero()
    }
    fn one() -> Self {
        RationalFunctionC::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunctionC::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RationalFunctionC::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RationalFunctionC::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RationalFunctionC::mul(self, o)
    }
    fn neg(&self) -> Self {
        RationalFunctionC::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn from_rational(q: &Rational) -> Self {
        RationalFunctionC::from_rational(q.clone())
    }
}

/// `E_{c,n}(t)`: a polynomial in `t` whose coefficients lie in `Q(i)(c)`.
#[derive(Clone, PartialEq, Debug)]
pub struct EulerPolynomialC {
    poly: Poly<RationalFunctionC>,
}

impl EulerPolynomialC {
    pub fn from_poly(poly: Poly<RationalFunctionC>) -> Self {
        EulerPolynomialC { poly }
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[RationalFunctionC] {
        self.poly.coeffs()
    }

    pub fn as_poly(&self) -> &Poly<RationalFunctionC> {
        &self.poly
    }

    pub fn eval(&self, t: &RationalFunctionC) -> RationalFunctionC {
        self.poly.eval(t)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&RationalFunctionC) -> RationalFunctionC) -> Self {
        EulerPolynomialC {
            poly: self.poly.map(f),
        }
    }
}

fn euler_cache() -> &'static RwLock<Vec<EulerPolynomialC>> {
    static CACHE: OnceLock<RwLock<Vec<EulerPolynomialC>>> = OnceLock::new();
    CACHE.get_or_init(|| {
        RwLock::new(vec![EulerPolynomialC {
            poly: Poly::one(),
        }])
    })
}

/// `E_{c,n}(t) = t^n + b Σ_{k<n} C(n,k) E_{c,k}(t)` with `b = -1/(1+c)`.
pub fn euler_poly(n: usize) -> EulerPolynomialC {
    if let Some(p) = euler_cache().read().expect("euler cache poisoned").get(n) {
        return p.clone();
    }
    let mut table = euler_cache().write().expect("euler cache poisoned");
    let b = RationalFunctionC::b();
    while table.len() <= n {
        let m = table.len();
        let mut acc: Poly<RationalFunctionC> = Poly::zero();
        for (k, e) in table.iter().enumerate() {
            let coef = RationalFunctionC::from_rational(int(binomial(m as u64, k as u64)));
            acc = acc.add(&e.poly.scale(&coef));
        }
        let next = Poly::monomial(m, RationalFunctionC::one()).add(&acc.scale(&b));
        table.push(EulerPolynomialC { poly: next });
    }
    table[n].clone()
}

/// `E_{c,n}(0)` as a reduced rational function of `c`.
pub fn euler_at_zero(n: usize) -> RationalFunctionC {
    euler_poly(n).poly.coeff(0)
}

fn reject_zero(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(format!("{what} requires n >= 1")));
    }
    Ok(())
}

/// `Li_{-n}(e^{2πia}) = Σ_{r=0}^{n} r! (-c)^r S(n,r) / (1+c)^{r+1}`.
pub fn li_neg_stirling(n: usize) -> Result<RationalFunctionC> {
    reject_zero(n, "li_neg_stirling")?;
    let opc = RationalFunctionC::from_poly(one_plus_c());
    let minus_c = RationalFunctionC::c().neg();
    let mut acc = RationalFunctionC::zero();
    for r in 0..=n {
        let s = stirling2(n as u32, r as u32)?;
        if num_traits::Zero::is_zero(&s) {
            continue;
        }
        let coef = int(factorial(r as u64) * s);
        let term = minus_c
            .pow(r as u32)
            .scale_rational(&coef)
            .div(&opc.pow(r as u32 + 1))?;
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `Li_{-n}(e^{2πia}) = (-1)^{n+1} c E_{c,n}(0) / (1+c)`.
pub fn li_neg_euler(n: usize) -> Result<RationalFunctionC> {
    reject_zero(n, "li_neg_euler")?;
    let sign = if n.is_odd() { rat(1, 1) } else { rat(-1, 1) };
    RationalFunctionC::c()
        .mul(&euler_at_zero(n))
        .scale_rational(&sign)
        .div(&RationalFunctionC::from_poly(one_plus_c()))
}

/// `1 + c^{-1}`.
pub fn one_plus_c_inv() -> RationalFunctionC {
    RationalFunctionC::one().add(&RationalFunctionC::c().inverse().expect("c is nonzero"))
}

/// The lattice sum `Σ_{l∈Z} (l+a)^{-(n+1)}` as `π^{n+1} · (2i)^{n+1} E_{c,n}(0) / (n!(1+c^{-1}))`.
pub fn f_lattice_symbolic(n: usize) -> Result<ExactValue> {
    reject_zero(n, "f_lattice_symbolic")?;
    let two_i_pow = GaussianRational::i_pow(n as i64 + 1)
        .mul(&GaussianRational::real(int(num_traits::pow(num_bigint::BigInt::from(2), n + 1))));
    let body = euler_at_zero(n)
        .scale(&two_i_pow)
        .scale_rational(&int(factorial(n as u64)).recip())
        .div(&one_plus_c_inv())?;
    Ok(ExactValue::new(n as i32 + 1, ValueBody::RationalFunction(body)))
}

/// Floating-point value at `c = -e^{2πia}`.
pub fn substitute_c_numeric(f: &RationalFunctionC, a: f64) -> Result<Complex64> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::InvalidArgument(format!("a = {a} must lie in (0, 1)")));
    }
    let theta = 2.0 * std::f64::consts::PI * a;
    let c = Complex64::new(-theta.cos(), -theta.sin());
    let horner = |p: &GaussianPoly| {
        p.coeffs()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, k| acc * c + k.to_complex())
    };
    let den = horner(&f.denominator);
    let scale: f64 = f
        .denominator
        .coeffs()
        .iter()
        .map(|k| k.to_complex().norm())
        .sum();
    if den.norm() <= 1e-13 * scale.max(1.0) {
        return Err(Error::Pole(format!("denominator vanishes at a = {a}")));
    }
    Ok(horner(&f.numerator) / den)
}

/// Exact value at `c = -ζ_q^r` in `Q(ζ_N)`, `N = lcm(4, 2q)`.
pub fn substitute_c_cyclotomic(f: &RationalFunctionC, r: i64, q: u64) -> Result<CyclotomicElement> {
    if q == 0 || r <= 0 || r as u64 >= q || (r as u64).gcd(&q) != 1 {
        return Err(Error::InvalidArgument(format!(
            "substitution needs gcd(r, q) = 1 and 0 < r < q, got {r}/{q}"
        )));
    }
    let n = 4u64.lcm(&(2 * q));
    let c = -CyclotomicElement::root_of_unity(q, r).lift(n);
    let i = CyclotomicElement::i().lift(n);
    let embed = |g: &GaussianRational| {
        &CyclotomicElement::from_rational(g.re.clone()).lift(n) + &i.scalar_mul(&g.im)
    };
    f.eval_in(&c, embed)
}

/// Exact value at `c = -e^{2πia}` for a Gaussian-rational point `c`.
pub fn substitute_c_gaussian(f: &RationalFunctionC, c: &GaussianRational) -> Result<GaussianRational> {
    f.eval_gaussian(c)
}
