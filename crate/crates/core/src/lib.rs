//! Exact and floating-point special values of six zeta functions built from
//! the Hurwitz zeta function `ζ(s, a)` and the periodic zeta function
//! `Li_s(e^{2πia})`:
//!
//! ```text
//! Z = ζ(s,a) + ζ(s,1-a)     P = Li_s(e^{2πia}) + Li_s(e^{-2πia})     2Q = Z + P
//! Y = ζ(s,a) - ζ(s,1-a)     O = -i(Li_s(e^{2πia}) - Li_s(e^{-2πia}))  2X = Y + O
//! ```

pub mod analysis;
pub mod cyclotomic;
pub mod error;
pub mod euler;
pub mod exact;
pub mod numeric;
pub mod poly;
pub mod values;

pub use cyclotomic::{cos_frac, sin_frac, CyclotomicElement};
pub use error::{Error, Result};
pub use euler::{
    euler_at_zero, euler_poly, f_lattice_symbolic, li_neg_euler, li_neg_stirling,
    substitute_c_cyclotomic, substitute_c_numeric, EulerPolynomialC, GaussianRational,
    RationalFunctionC,
};
pub use exact::{bernoulli_number, bernoulli_poly, rat, stirling2, Rational};
pub use numeric::{
    combined, combined_with_contract, functional_equation_residual, hurwitz_zeta,
    hurwitz_zeta_hermite, periodic_zeta, Evaluation, FunctionalEquationCheck, PrecisionContract,
};
pub use poly::{Poly, QPolynomial};
pub use values::{
    classify_value, special_value, value_at_negative_int, value_at_positive_int,
    vanishing_pattern, ArgumentSpec, ExactValue, FunctionTag, ValueBody, ValueClass,
};
