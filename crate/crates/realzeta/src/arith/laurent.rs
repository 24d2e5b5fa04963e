use super::{fmt_q, integer_primitive, lcm_u64, Q, UniPoly};
use crate::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial with integer coefficients in one variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    t: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn one() -> Self {
        Self::monomial(1, 0)
    }
    pub fn monomial(c: i64, e: i64) -> Self {
        Self::monomial_big(BigInt::from(c), e)
    }
    pub fn monomial_big(c: BigInt, e: i64) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert(e, c);
        }
        LaurentPoly { t }
    }
    /// From coefficients of u^0, u^1, ...
    pub fn from_coeffs(c: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, a) in c.iter().enumerate() {
            p.add_term(i as i64, BigInt::from(*a));
        }
        p
    }
    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let v = self.t.remove(&e).unwrap_or_default() + c;
        if !v.is_zero() {
            self.t.insert(e, v);
        }
    }
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.t.iter()
    }
    pub fn coeff(&self, e: i64) -> BigInt {
        self.t.get(&e).cloned().unwrap_or_default()
    }
    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }
    pub fn min_exp(&self) -> Option<i64> {
        self.t.keys().next().copied()
    }
    pub fn max_exp(&self) -> Option<i64> {
        self.t.keys().next_back().copied()
    }
    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.t {
            r.add_term(*e, c.clone());
        }
        r
    }
    pub fn neg(&self) -> Self {
        LaurentPoly { t: self.t.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (e1, c1) in &self.t {
            for (e2, c2) in &o.t {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }
    pub fn scale(&self, c: &BigInt) -> Self {
        let mut r = Self::zero();
        for (e, a) in &self.t {
            r.add_term(*e, a * c);
        }
        r
    }
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { t: self.t.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
    /// Substitute u -> u^k.
    pub fn inflate(&self, k: i64) -> Self {
        LaurentPoly { t: self.t.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }
    pub fn eval_one(&self) -> BigInt {
        self.t.values().sum()
    }
    pub fn eval_q(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.t {
            let p = if *e >= 0 { num_traits::pow(x.clone(), *e as usize) } else { Q::one() / num_traits::pow(x.clone(), (-*e) as usize) };
            acc += Q::from_integer(c.clone()) * p;
        }
        acc
    }
    /// Polynomial coefficients for nonnegative exponents; None if a negative exponent occurs.
    pub fn to_coeffs(&self) -> Option<Vec<BigInt>> {
        if self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let n = self.max_exp().map_or(0, |e| e as usize + 1);
        let mut v = vec![BigInt::zero(); n];
        for (e, c) in &self.t {
            v[*e as usize] = c.clone();
        }
        Some(v)
    }

    /// Render in variable `var`, highest power first.
    pub fn fmt_var(&self, var: &str) -> String {
        fmt_terms(self.t.iter().rev().map(|(e, c)| (Q::from_integer(c.clone()), mono(var, *e, 1))))
    }
}

fn mono(var: &str, e: i64, d: u32) -> String {
    if e == 0 {
        return String::new();
    }
    let g = e.gcd(&(d as i64));
    let (n, dd) = (e / g, d as i64 / g);
    if dd == 1 {
        if n == 1 {
            var.to_string()
        } else {
            format!("{}^{}", var, n)
        }
    } else {
        format!("{}^({}/{})", var, n, dd)
    }
}

fn fmt_terms(it: impl Iterator<Item = (Q, String)>) -> String {
    let mut s = String::new();
    for (c, m) in it {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if m.is_empty() {
            s.push_str(&fmt_q(&a));
        } else if a.is_one() {
            s.push_str(&m);
        } else {
            s.push_str(&format!("{}*{}", fmt_q(&a), m));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("u"))
    }
}

/// Element of Q(w) with w = u^(1/d), stored as w^shift * num(w) / den(w)
/// where num(0), den(0) are nonzero, gcd(num, den) = 1, den is monic and d is minimal.
#[derive(Clone, Debug)]
pub struct LaurentFraction {
    d: u32,
    shift: i64,
    num: UniPoly<Q>,
    den: UniPoly<Q>,
}

impl LaurentFraction {
    pub fn zero() -> Self {
        LaurentFraction { d: 1, shift: 0, num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_q(Q::one())
    }

    pub fn from_q(c: Q) -> Self {
        Self::build(1, 0, UniPoly::constant(c), UniPoly::one())
    }

    /// From a Laurent polynomial in u.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        match p.min_exp() {
            None => Self::zero(),
            Some(lo) => {
                let c: Vec<Q> = (lo..=p.max_exp().unwrap()).map(|e| Q::from_integer(p.coeff(e))).collect();
                Self::build(1, lo, UniPoly::new(c), UniPoly::one())
            }
        }
    }

    /// u^(n/d)
    pub fn u_power(n: i64, d: u32) -> Self {
        Self::build(d, n, UniPoly::one(), UniPoly::one())
    }

    /// (u - 1) / (u^alpha - 1) for a nonzero rational alpha.
    pub fn geometric_ratio(alpha: &Q) -> Result<Self, Error> {
        if alpha.is_zero() {
            return Err(Error::Zeta("(u-1)/(u^0-1) is undefined".into()));
        }
        let dd: u32 = alpha.denom().try_into().map_err(|_| Error::Zeta("exponent denominator too large".into()))?;
        let a: i64 = (alpha * Q::from_integer(BigInt::from(dd))).to_integer().try_into().map_err(|_| Error::Zeta("exponent too large".into()))?;
        let wd = wpow_minus_one(dd as i64);
        if a > 0 {
            Ok(Self::build(dd, 0, wd, wpow_minus_one(a)))
        } else {
            // w^a - 1 = -w^a (w^{-a} - 1)
            Ok(Self::build(dd, -a, wd.scale(&-Q::one()), wpow_minus_one(-a)))
        }
    }

    fn build(d: u32, shift: i64, num: UniPoly<Q>, den: UniPoly<Q>) -> Self {
        assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let lo_n = num.low_order();
        let lo_d = den.low_order();
        let num = UniPoly::new(num.coeffs()[lo_n..].to_vec());
        let den = UniPoly::new(den.coeffs()[lo_d..].to_vec());
        let shift = shift + lo_n as i64 - lo_d as i64;
        let g = UniPoly::gcd(&num, &den);
        let mut num = num.exact_div(&g).unwrap();
        let mut den = den.exact_div(&g).unwrap();
        let l = den.lc();
        num = num.scale(&(Q::one() / l.clone()));
        den = den.scale(&(Q::one() / l));
        let mut f = LaurentFraction { d, shift, num, den };
        f.reduce_scale();
        f
    }

    fn reduce_scale(&mut self) {
        let mut g = (self.d as i64).gcd(&self.shift);
        for p in [&self.num, &self.den] {
            for (i, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    g = g.gcd(&(i as i64));
                }
            }
        }
        if g > 1 {
            let squash = |p: &UniPoly<Q>| -> UniPoly<Q> {
                UniPoly::new(p.coeffs().iter().step_by(g as usize).cloned().collect())
            };
            self.num = squash(&self.num);
            self.den = squash(&self.den);
            self.shift /= g;
            self.d /= g as u32;
        }
    }

    fn rescale(&self, d: u32) -> (i64, UniPoly<Q>, UniPoly<Q>) {
        let k = (d / self.d) as usize;
        let inflate = |p: &UniPoly<Q>| -> UniPoly<Q> {
            let mut c = vec![Q::zero(); p.deg() * k + 1];
            for (i, a) in p.coeffs().iter().enumerate() {
                c[i * k] = a.clone();
            }
            UniPoly::new(c)
        };
        (self.shift * k as i64, inflate(&self.num), inflate(&self.den))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale_d(&self) -> u32 {
        self.d
    }

    fn combine(&self, o: &Self, sub: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sub { o.neg() } else { o.clone() };
        }
        let d = lcm_u64(self.d as u64, o.d as u64) as u32;
        let (s1, n1, d1) = self.rescale(d);
        let (s2, n2, d2) = o.rescale(d);
        let lo = s1.min(s2);
        let a = &UniPoly::monomial(Q::one(), (s1 - lo) as usize) * &(&n1 * &d2);
        let mut b = &UniPoly::monomial(Q::one(), (s2 - lo) as usize) * &(&n2 * &d1);
        if sub {
            b = -b;
        }
        Self::build(d, lo, &a + &b, &d1 * &d2)
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    pub fn neg(&self) -> Self {
        LaurentFraction { d: self.d, shift: self.shift, num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let d = lcm_u64(self.d as u64, o.d as u64) as u32;
        let (s1, n1, d1) = self.rescale(d);
        let (s2, n2, d2) = o.rescale(d);
        Self::build(d, s1 + s2, &n1 * &n2, &d1 * &d2)
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::Zeta("division by zero Laurent fraction".into()));
        }
        Ok(Self::build(self.d, -self.shift, self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self, Error> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        self.mul(&Self::from_q(c.clone()))
    }

    /// Value at u = 1, if the reduced denominator does not vanish there.
    pub fn limit_u_to_1(&self) -> Result<Q, Error> {
        let one = Q::one();
        let dv = self.den.eval(&one);
        if dv.is_zero() {
            return Err(Error::Zeta("limit at u = 1 is not removable".into()));
        }
        Ok(self.num.eval(&one) / dv)
    }

    /// Laurent polynomial in u if the fraction is one.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if !self.den.is_constant() {
            return None;
        }
        let mut p = LaurentPoly::zero();
        for (i, c) in self.num.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.shift + i as i64;
            if e % self.d as i64 != 0 || !c.is_integer() {
                return None;
            }
            p.add_term(e / self.d as i64, c.to_integer());
        }
        Some(p)
    }

    /// Integer numerator and denominator coefficient lists (low to high in w),
    /// together with the w-shift and the scale d.
    pub fn integer_parts(&self) -> (u32, i64, Vec<BigInt>, Vec<BigInt>) {
        let (ni, ns) = integer_primitive(self.num.coeffs());
        let (di, ds) = integer_primitive(self.den.coeffs());
        let ratio = ns / ds;
        let num: Vec<BigInt> = ni.iter().map(|c| c * ratio.numer()).collect();
        let den: Vec<BigInt> = di.iter().map(|c| c * ratio.denom()).collect();
        (self.d, self.shift, num, den)
    }
}

fn wpow_minus_one(k: i64) -> UniPoly<Q> {
    let mut c = vec![Q::zero(); k as usize + 1];
    c[0] = -Q::one();
    c[k as usize] = Q::one();
    UniPoly::new(c)
}

impl PartialEq for LaurentFraction {
    fn eq(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }
}

impl fmt::Display for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (d, shift, num, den) = self.integer_parts();
        let render = |c: &[BigInt], base: i64| -> String {
            fmt_terms(
                c.iter().enumerate().rev().map(|(i, a)| (Q::from_integer(a.clone()), mono("u", base + i as i64, d))),
            )
        };
        let n = render(&num, shift);
        if den.len() == 1 && den[0].is_one() {
            return write!(f, "{}", n);
        }
        let dstr = render(&den, 0);
        let wrap = |s: String| if s.contains(' ') { format!("({})", s) } else { s };
        write!(f, "{}/{}", wrap(n), wrap(dstr))
    }
}
