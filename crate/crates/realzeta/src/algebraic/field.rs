use crate::arith::{fmt_q, Field, Q, UniPoly};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

/// Q(a) with a given monic irreducible minimal polynomial. A real field
/// carries an isolating interval for the chosen real root; a non-real field
/// stands for a Galois orbit of non-real roots and has no embedding data.
pub struct NumberField {
    minpoly: UniPoly<Q>,
    real: Option<Mutex<(Q, Q)>>,
}

pub type Nf = Arc<NumberField>;

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.real {
            Some(iv) => {
                let iv = iv.lock().unwrap();
                write!(f, "Q[a]/({}) a in ({}, {})", self.minpoly.fmt_var("a"), fmt_q(&iv.0), fmt_q(&iv.1))
            }
            None => write!(f, "Q[a]/({}) non-real", self.minpoly.fmt_var("a")),
        }
    }
}

impl NumberField {
    /// Real field; `(lo, hi)` must isolate exactly one root of `minpoly`, with
    /// `minpoly(lo)` and `minpoly(hi)` of opposite signs.
    pub fn real(minpoly: UniPoly<Q>, lo: Q, hi: Q) -> Nf {
        assert!(minpoly.deg() >= 2);
        Arc::new(NumberField { minpoly: minpoly.monic(), real: Some(Mutex::new((lo, hi))) })
    }

    pub fn non_real(minpoly: UniPoly<Q>) -> Nf {
        assert!(minpoly.deg() >= 2);
        Arc::new(NumberField { minpoly: minpoly.monic(), real: None })
    }

    pub fn minpoly(&self) -> &UniPoly<Q> {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn is_real(&self) -> bool {
        self.real.is_some()
    }

    /// Current isolating interval of the generator.
    pub fn interval(&self) -> Option<(Q, Q)> {
        self.real.as_ref().map(|m| m.lock().unwrap().clone())
    }

    /// Halve the isolating interval of the generator.
    pub fn refine(&self) {
        if let Some(m) = &self.real {
            let mut iv = m.lock().unwrap();
            let (lo, hi) = iv.clone();
            let mid = (&lo + &hi) / Q::from_integer(2.into());
            let slo = self.minpoly.eval(&lo).signum();
            let smid = self.minpoly.eval(&mid).signum();
            if smid.is_zero() {
                // only possible for reducible input
                *iv = (mid.clone(), mid);
            } else if smid == slo {
                *iv = (mid, hi);
            } else {
                *iv = (lo, mid);
            }
        }
    }

    pub fn describe(&self) -> String {
        format!("{:?}", self)
    }
}

/// Element of a number field, or a rational constant (`field == None`)
/// that is valid in every field.
#[derive(Clone)]
pub struct NfElem {
    field: Option<Nf>,
    c: Vec<Q>,
}

fn trim(mut c: Vec<Q>) -> Vec<Q> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

fn join(a: &Option<Nf>, b: &Option<Nf>) -> Option<Nf> {
    match (a, b) {
        (Some(x), Some(y)) => {
            debug_assert!(Arc::ptr_eq(x, y), "mixing elements of different number fields");
            Some(x.clone())
        }
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    }
}

impl NfElem {
    pub fn rational(r: Q) -> Self {
        NfElem { field: None, c: trim(vec![r]) }
    }

    pub fn generator(nf: &Nf) -> Self {
        Self::from_poly(nf, &UniPoly::x())
    }

    /// p(a) reduced modulo the minimal polynomial.
    pub fn from_poly(nf: &Nf, p: &UniPoly<Q>) -> Self {
        let r = p.rem(nf.minpoly());
        NfElem { field: Some(nf.clone()), c: r.into_coeffs() }
    }

    pub fn field(&self) -> Option<&Nf> {
        self.field.as_ref()
    }

    pub fn to_poly(&self) -> UniPoly<Q> {
        UniPoly::new(self.c.clone())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn is_rational(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn inv(&self) -> Self {
        assert!(!self.c.is_empty(), "inverse of zero");
        if self.c.len() == 1 {
            return NfElem { field: self.field.clone(), c: vec![Q::one() / &self.c[0]] };
        }
        let nf = self.field.as_ref().expect("non-rational element carries a field");
        let (g, s, _) = UniPoly::xgcd(&self.to_poly(), nf.minpoly());
        debug_assert_eq!(g.deg(), 0);
        Self::from_poly(nf, &s)
    }

    /// Sign under the real embedding. Rational constants need no field.
    pub fn sign(&self) -> i8 {
        if self.c.is_empty() {
            return 0;
        }
        if self.c.len() == 1 {
            return if self.c[0].is_positive() { 1 } else { -1 };
        }
        let nf = self.field.as_ref().unwrap();
        assert!(nf.is_real(), "sign requested in a non-real field");
        loop {
            let (lo, hi) = self.enclosure();
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            nf.refine();
        }
    }

    /// Interval containing the value, from the current generator interval.
    pub fn enclosure(&self) -> (Q, Q) {
        if self.c.len() <= 1 {
            let v = self.c.first().cloned().unwrap_or_else(Q::zero);
            return (v.clone(), v);
        }
        let (lo, hi) = self.field.as_ref().unwrap().interval().expect("real field");
        let mut acc = (Q::zero(), Q::zero());
        for a in self.c.iter().rev() {
            acc = imul(&acc, &(lo.clone(), hi.clone()));
            acc = (&acc.0 + a, &acc.1 + a);
        }
        acc
    }

    /// Enclosure of width at most `w`.
    pub fn enclosure_within(&self, w: &Q) -> (Q, Q) {
        loop {
            let e = self.enclosure();
            if &(&e.1 - &e.0) <= w {
                return e;
            }
            self.field.as_ref().unwrap().refine();
        }
    }

    /// Decimal approximation with the given number of digits after the point.
    pub fn approx(&self, digits: u32) -> String {
        let w = Q::new(1.into(), num_bigint::BigInt::from(10).pow(digits + 2));
        let (lo, hi) = if self.c.len() <= 1 || self.field.as_ref().is_some_and(|f| f.is_real()) {
            self.enclosure_within(&w)
        } else {
            return format!("{}", self);
        };
        let mid = (lo + hi) / Q::from_integer(2.into());
        decimal(&mid, digits)
    }
}

pub fn decimal(x: &Q, digits: u32) -> String {
    let scale = num_bigint::BigInt::from(10).pow(digits);
    let v = (x * Q::from_integer(scale.clone())).round().to_integer();
    let neg = v.is_negative();
    let a = v.abs();
    let ip = &a / &scale;
    let fp = &a % &scale;
    let s = format!("{}.{:0>width$}", ip, fp.to_string(), width = digits as usize);
    if neg {
        format!("-{}", s)
    } else {
        s
    }
}

fn imul(a: &(Q, Q), b: &(Q, Q)) -> (Q, Q) {
    let p = [&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1];
    let lo = p.iter().min().unwrap().clone();
    let hi = p.iter().max().unwrap().clone();
    (lo, hi)
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly().fmt_var("a"))
    }
}

impl PartialEq for NfElem {
    fn eq(&self, o: &Self) -> bool {
        self.c == o.c
    }
}

impl Zero for NfElem {
    fn zero() -> Self {
        NfElem { field: None, c: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl One for NfElem {
    fn one() -> Self {
        NfElem { field: None, c: vec![Q::one()] }
    }
}

impl Add for NfElem {
    type Output = NfElem;
    fn add(self, o: NfElem) -> NfElem {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| match (self.c.get(i), o.c.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                _ => unreachable!(),
            })
            .collect();
        NfElem { field: join(&self.field, &o.field), c: trim(c) }
    }
}

impl Neg for NfElem {
    type Output = NfElem;
    fn neg(self) -> NfElem {
        NfElem { field: self.field, c: self.c.into_iter().map(|a| -a).collect() }
    }
}

impl Sub for NfElem {
    type Output = NfElem;
    fn sub(self, o: NfElem) -> NfElem {
        self + (-o)
    }
}

impl Mul for NfElem {
    type Output = NfElem;
    fn mul(self, o: NfElem) -> NfElem {
        let field = join(&self.field, &o.field);
        if self.c.is_empty() || o.c.is_empty() {
            return NfElem { field, c: Vec::new() };
        }
        if self.c.len() == 1 || o.c.len() == 1 {
            let (s, v) = if self.c.len() == 1 { (&self.c[0], &o.c) } else { (&o.c[0], &self.c) };
            return NfElem { field, c: trim(v.iter().map(|a| a * s).collect()) };
        }
        let p = &self.to_poly() * &o.to_poly();
        let nf = field.expect("non-rational elements carry a field");
        NfElem::from_poly(&nf, &p)
    }
}

impl Div for NfElem {
    type Output = NfElem;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: NfElem) -> NfElem {
        self * o.inv()
    }
}

impl Field for NfElem {
    fn from_q(r: &Q) -> Self {
        NfElem::rational(r.clone())
    }
    fn as_q(&self) -> Option<Q> {
        if self.c.len() <= 1 {
            Some(self.c.first().cloned().unwrap_or_else(Q::zero))
        } else {
            None
        }
    }
}
