use super::factor::factor_q;
use super::{fmt_q, integer_primitive, q, Q, UniPoly};
use crate::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Reduced rational function in s: `num / den` with `den` monic and coprime to `num`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunctionS {
    num: UniPoly<Q>,
    den: UniPoly<Q>,
}

/// A pole with its order and the leading Laurent coefficient at it.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalPole {
    pub location: Q,
    pub order: usize,
    pub residue: Q,
}

impl RationalFunctionS {
    pub fn new(num: UniPoly<Q>, den: UniPoly<Q>) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::Zeta("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = UniPoly::gcd(&num, &den);
        let num = num.exact_div(&g).unwrap();
        let den = den.exact_div(&g).unwrap();
        let l = den.lc();
        Ok(RationalFunctionS { num: num.scale(&(Q::one() / l.clone())), den: den.scale(&(Q::one() / l)) })
    }

    pub fn zero() -> Self {
        RationalFunctionS { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn constant(c: Q) -> Self {
        RationalFunctionS { num: UniPoly::constant(c), den: UniPoly::one() }
    }

    /// c / prod (nu_i + s N_i)
    pub fn term(c: &Q, factors: &[(u64, u64)]) -> Self {
        let mut den = UniPoly::one();
        for (nu, n) in factors {
            den = &den * &UniPoly::new(vec![q(*nu as i64), q(*n as i64)]);
        }
        Self::new(UniPoly::constant(c.clone()), den).expect("nonzero denominator")
    }

    /// Sum of terms `c_I / prod_{i in I} (nu_i + s N_i)`.
    pub fn from_terms(terms: &[(Q, Vec<(u64, u64)>)]) -> Self {
        let mut acc = Self::zero();
        for (c, f) in terms {
            if !c.is_zero() {
                acc = acc.add(&Self::term(c, f));
            }
        }
        acc
    }

    pub fn numerator(&self) -> &UniPoly<Q> {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly<Q> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).unwrap()
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den).unwrap()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).unwrap()
    }

    /// Multiply by (s - s0).
    pub fn mul_linear(&self, s0: &Q) -> Self {
        self.mul(&Self { num: UniPoly::linear_root(s0.clone()), den: UniPoly::one() })
    }

    pub fn eval(&self, s: &Q) -> Result<Q, Error> {
        let d = self.den.eval(s);
        if d.is_zero() {
            return Err(Error::Zeta(format!("pole at s = {}", fmt_q(s))));
        }
        Ok(self.num.eval(s) / d)
    }

    /// Rational poles with their orders and leading coefficients
    /// `lim (s - s0)^k Z(s)`, sorted by location (descending).
    pub fn poles(&self) -> Vec<RationalPole> {
        let mut out = Vec::new();
        if self.den.deg() == 0 {
            return out;
        }
        let fac = factor_q(&self.den).expect("nonzero denominator");
        for (p, k) in fac.factors {
            if p.deg() != 1 {
                continue;
            }
            let s0 = -p.coeff(0);
            let mut rest = self.den.clone();
            for _ in 0..k {
                rest = rest.exact_div(&p).unwrap();
            }
            let residue = self.num.eval(&s0) / rest.eval(&s0);
            out.push(RationalPole { location: s0, order: k, residue });
        }
        out.sort_by(|a, b| b.location.cmp(&a.location));
        out
    }

    /// Display as `num/((a + bs)(c + ds)...)` with integer-primitive linear factors.
    pub fn display(&self) -> String {
        if self.num.is_zero() {
            return "0".into();
        }
        let mut num = self.num.clone();
        let mut dens: Vec<String> = Vec::new();
        if self.den.deg() > 0 {
            let fac = factor_q(&self.den).unwrap();
            let mut lin: Vec<(Q, usize)> = Vec::new();
            for (p, k) in &fac.factors {
                if p.deg() == 1 {
                    lin.push((p.coeff(0), *k));
                } else {
                    let pw = if *k > 1 { format!("^{}", k) } else { String::new() };
                    dens.push(format!("({}){}", fmt_s(p), pw));
                }
            }
            lin.sort_by(|a, b| (a.0.denom(), a.0.numer()).cmp(&(b.0.denom(), b.0.numer())));
            let mut lin_s = Vec::new();
            for (c, k) in lin {
                // s + c = (a + b s)/b with a/b = c
                let b = c.denom().clone();
                let a = c.numer().clone();
                for _ in 0..k {
                    num = num.scale(&Q::from_integer(b.clone()));
                }
                let body = fmt_ab(&a, &b);
                lin_s.push(if k > 1 { format!("({})^{}", body, k) } else { format!("({})", body) });
            }
            lin_s.extend(dens);
            dens = lin_s;
        }
        let ns = fmt_s_ascending(&num);
        if dens.is_empty() {
            return ns;
        }
        let nwrap = if num.deg() > 0 || ns.contains(' ') { format!("({})", ns) } else { ns };
        let dj = dens.concat();
        if dens.len() == 1 {
            format!("{}/{}", nwrap, dj)
        } else {
            format!("{}/({})", nwrap, dj)
        }
    }
}

fn fmt_ab(a: &BigInt, b: &BigInt) -> String {
    let bs = if b.is_one() { "s".to_string() } else { format!("{}s", b) };
    if a.is_zero() {
        bs
    } else if a.is_negative() {
        format!("-{} + {}", -a, bs)
    } else {
        format!("{} + {}", a, bs)
    }
}

fn fmt_s_ascending(p: &UniPoly<Q>) -> String {
    let mut s = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
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
        let m = match i {
            0 => String::new(),
            1 => "s".into(),
            _ => format!("s^{}", i),
        };
        if m.is_empty() {
            s.push_str(&fmt_q(&a));
        } else if a.is_one() {
            s.push_str(&m);
        } else if a.is_integer() {
            s.push_str(&format!("{}{}", fmt_q(&a), m));
        } else {
            s.push_str(&format!("({}){}", fmt_q(&a), m));
        }
    }
    s
}

fn fmt_s(p: &UniPoly<Q>) -> String {
    let (ints, _) = integer_primitive(p.coeffs());
    let iq: Vec<Q> = ints.into_iter().map(Q::from_integer).collect();
    fmt_s_ascending(&UniPoly::new(iq))
}

impl fmt::Display for RationalFunctionS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}
