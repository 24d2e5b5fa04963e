use super::{fmt_q, Field, Q};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense univariate polynomial, coefficients stored from degree 0 upwards.
/// Trailing zeros are never stored, so the zero polynomial is an empty vector.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F> {
    c: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(a: F) -> Self {
        Self::new(vec![a])
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(a: F, k: usize) -> Self {
        let mut c = vec![F::zero(); k + 1];
        c[k] = a;
        Self::new(c)
    }

    /// `x - a`
    pub fn linear_root(a: F) -> Self {
        Self::new(vec![-a, F::one()])
    }

    pub fn from_q_slice(v: &[Q]) -> Self {
        Self::new(v.iter().map(F::from_q).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.c
    }

    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> F {
        self.c.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn scale(&self, a: &F) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Self::new(self.c.iter().map(|x| x.clone() * a.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = F::one() / self.lc();
        self.scale(&inv)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for a in self.c.iter().rev() {
            acc = acc * x.clone() + a.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// p(q(x))
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * q) + &Self::constant(a.clone());
        }
        acc
    }

    /// p(x + a)
    pub fn shift(&self, a: &F) -> Self {
        self.compose(&Self::new(vec![a.clone(), F::one()]))
    }

    /// x^deg * p(1/x)
    pub fn reversed(&self) -> Self {
        let mut c = self.c.clone();
        c.reverse();
        Self::new(c)
    }

    /// Order of vanishing at 0.
    pub fn low_order(&self) -> usize {
        self.c.iter().position(|a| !a.is_zero()).unwrap_or(0)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.c.iter().map(f).collect())
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let inv = F::one() / d.lc();
        let mut r = self.c.clone();
        let mut quo = vec![F::zero(); r.len() - dd];
        for i in (0..quo.len()).rev() {
            let t = r[i + dd].clone() * inv.clone();
            if !t.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[i + j] = r[i + j].clone() - t.clone() * b.clone();
                }
            }
            quo[i] = t;
        }
        r.truncate(dd);
        (Self::new(quo), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient when `d` divides `self`, otherwise None.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (qq, r) = self.div_rem(d);
        if r.is_zero() {
            Some(qq)
        } else {
            None
        }
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// (g, s, t) with s*a + t*b = g, g monic.
    pub fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (qq, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&qq * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&qq * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = F::one() / r0.lc();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Squarefree decomposition (Yun). Returns monic `(a_i, i)` with
    /// `self = lc * prod a_i^i`; factors that are 1 are skipped.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = Self::gcd(&f, &fp);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = fp.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.deg() > 0 {
            let a = Self::gcd(&b, &d);
            b = b.exact_div(&a).expect("gcd divides");
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            if a.deg() > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> Self {
        let mut acc = Self::one();
        for (a, _) in self.squarefree_decomposition() {
            acc = &acc * &a;
        }
        acc
    }

    /// Resultant via the Euclidean remainder sequence.
    pub fn resultant(a: &Self, b: &Self) -> F {
        if a.is_zero() || b.is_zero() {
            return F::zero();
        }
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut acc = F::one();
        loop {
            let m = a.deg();
            let n = b.deg();
            if n == 0 {
                let mut p = F::one();
                for _ in 0..m {
                    p = p * b.lc();
                }
                return acc * p;
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return F::zero();
            }
            let k = r.deg();
            if (m * n) % 2 == 1 {
                acc = -acc;
            }
            for _ in 0..(m - k) {
                acc = acc * b.lc();
            }
            a = b;
            b = r;
        }
    }

    /// Multiplicity of the monic irreducible `p` in `self` (self nonzero).
    pub fn multiplicity_of(&self, p: &Self) -> usize {
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(qq) = cur.exact_div(p) {
            if cur.is_zero() {
                break;
            }
            k += 1;
            cur = qq;
        }
        k
    }
}

impl UniPoly<Q> {
    /// Human-readable form in the given variable, highest degree first.
    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let abs = a.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, i),
            };
            if mono.is_empty() {
                s.push_str(&fmt_q(&abs));
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{}*{}", fmt_q(&abs), mono));
            }
        }
        s
    }

    /// Rational roots with multiplicity, from linear factors of the squarefree parts.
    pub fn rational_roots(&self) -> Vec<(Q, usize)> {
        let mut out = Vec::new();
        if self.is_zero() {
            return out;
        }
        if let Ok(fac) = super::factor::factor_q(self) {
            for (p, m) in fac.factors {
                if p.deg() == 1 {
                    out.push((-p.coeff(0) / p.coeff(1), m));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

impl fmt::Display for UniPoly<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("t"))
    }
}

impl<'a, F: Field> Add<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, o: &UniPoly<F>) -> UniPoly<F> {
        let n = self.c.len().max(o.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a.clone() + b.clone(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UniPoly::new(c)
    }
}

impl<'a, F: Field> Sub<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, o: &UniPoly<F>) -> UniPoly<F> {
        self + &(-o)
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly { c: self.c.iter().map(|a| -a.clone()).collect() }
    }
}

impl<'a, F: Field> Mul<&'a UniPoly<F>> for &'a UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, o: &UniPoly<F>) -> UniPoly<F> {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(c)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr<UniPoly<F>> for UniPoly<F> {
            type Output = UniPoly<F>;
            fn $m(self, o: UniPoly<F>) -> UniPoly<F> {
                (&self).$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<F: Field> Neg for UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        -&self
    }
}
