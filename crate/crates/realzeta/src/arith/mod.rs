//! Exact arithmetic: rationals, univariate and bivariate polynomials,
//! factorization over the rationals, Laurent fractions and the two
//! zeta-function containers.

pub mod bipoly;
pub mod factor;
pub mod laurent;
mod modp;
pub mod ratfunc;
pub mod unipoly;
pub mod zeta_beta;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub use bipoly::BiPoly;
pub use laurent::{LaurentFraction, LaurentPoly};
pub use ratfunc::RationalFunctionS;
pub use unipoly::UniPoly;
pub use zeta_beta::{TuPoly, ZetaBetaFunction};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: &BigInt) -> Q {
    Q::from_integer(n.clone())
}

/// Coefficient field for the polynomial types. Implemented by `Q` and by
/// number-field elements.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_q(r: &Q) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_q(&q(n))
    }

    /// Some(r) when the element is known to be the rational constant r.
    fn as_q(&self) -> Option<Q>;
}

impl Field for Q {
    fn from_q(r: &Q) -> Self {
        r.clone()
    }
    fn as_q(&self) -> Option<Q> {
        Some(self.clone())
    }
}

pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    a.lcm(b)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a.lcm(&b)
    }
}

/// 2-adic valuation; `None` for zero.
pub fn v2(n: u64) -> Option<u32> {
    if n == 0 {
        None
    } else {
        Some(n.trailing_zeros())
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn sign_q(r: &Q) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Denominator-clearing: returns (content-free integer vector, scale) with
/// `values[i] = ints[i] * scale`.
pub fn integer_primitive(values: &[Q]) -> (Vec<BigInt>, Q) {
    let mut den = BigInt::one();
    for v in values {
        den = den.lcm(v.denom());
    }
    let ints: Vec<BigInt> = values.iter().map(|v| (v * Q::from_integer(den.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for i in &ints {
        g = g.gcd(i);
    }
    if g.is_zero() {
        return (ints, Q::one());
    }
    let ints: Vec<BigInt> = ints.into_iter().map(|i| i / &g).collect();
    (ints, Q::new(g, den))
}

pub fn fmt_q(r: &Q) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
