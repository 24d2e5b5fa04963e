use super::{LaurentPoly, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in T with Laurent-polynomial coefficients in u; keys are (T-exponent, u-exponent).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TuPoly {
    t: BTreeMap<(u32, i64), BigInt>,
}

impl TuPoly {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }
    pub fn monomial(c: BigInt, te: u32, ue: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(te, ue, c);
        p
    }
    /// A Laurent polynomial in u as a T-constant.
    pub fn from_u(p: &LaurentPoly) -> Self {
        let mut r = Self::zero();
        for (e, c) in p.terms() {
            r.add_term(0, *e, c.clone());
        }
        r
    }
    /// 1 - u^{-nu} T^n
    pub fn factor(nu: u64, n: u64) -> Self {
        let mut p = Self::one();
        p.add_term(n as u32, -(nu as i64), -BigInt::one());
        p
    }
    fn add_term(&mut self, te: u32, ue: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let v = self.t.remove(&(te, ue)).unwrap_or_default() + c;
        if !v.is_zero() {
            self.t.insert((te, ue), v);
        }
    }
    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, i64), &BigInt)> {
        self.t.iter()
    }
    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for ((a, b), c) in &o.t {
            r.add_term(*a, *b, c.clone());
        }
        r
    }
    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for ((a, b), c) in &o.t {
            r.add_term(*a, *b, -c.clone());
        }
        r
    }
    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for ((a1, b1), c1) in &self.t {
            for ((a2, b2), c2) in &o.t {
                r.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        r
    }
    /// Truncate to T-degree <= n.
    pub fn truncate(&self, n: u32) -> Self {
        TuPoly { t: self.t.iter().filter(|((a, _), _)| *a <= n).map(|(k, v)| (*k, v.clone())).collect() }
    }
    /// Coefficient of T^k as a Laurent polynomial in u.
    pub fn t_coeff(&self, k: u32) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for ((a, b), c) in &self.t {
            if *a == k {
                p.add_term(*b, c.clone());
            }
        }
        p
    }
    pub fn t_degree(&self) -> u32 {
        self.t.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// k-th T-derivative evaluated at T = u^{p/q}, as a Laurent polynomial in w = u^{1/q}.
    fn derivative_at(&self, k: u32, p: i64, q: i64) -> LaurentPoly {
        let mut r = LaurentPoly::zero();
        for ((a, b), c) in &self.t {
            if *a < k {
                continue;
            }
            let mut f = BigInt::one();
            for j in 0..k {
                f *= BigInt::from(a - j);
            }
            let e = (*a - k) as i64 * p + b * q;
            r.add_term(e, c * f);
        }
        r
    }

    fn fmt(&self) -> String {
        if self.t.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for ((a, b), c) in &self.t {
            let neg = c.is_negative();
            let abs = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut parts = Vec::new();
            if !abs.is_one() || (*a == 0 && *b == 0) {
                parts.push(abs.to_string());
            }
            match *b {
                0 => {}
                1 => parts.push("u".into()),
                e => parts.push(format!("u^{}", e)),
            }
            match *a {
                0 => {}
                1 => parts.push("T".into()),
                e => parts.push(format!("T^{}", e)),
            }
            s.push_str(&parts.join("*"));
        }
        s
    }
}

/// Z(T) = numerator / prod (1 - u^{-nu} T^N) over the listed factors (with repetition).
#[derive(Clone, Debug)]
pub struct ZetaBetaFunction {
    num: TuPoly,
    factors: Vec<(u64, u64)>,
}

impl ZetaBetaFunction {
    pub fn zero() -> Self {
        ZetaBetaFunction { num: TuPoly::zero(), factors: Vec::new() }
    }

    /// Sum over strata of `c_I prod_{i in I} u^{-nu_i} T^{N_i} / (1 - u^{-nu_i} T^{N_i})`.
    pub fn from_strata(strata: &[(LaurentPoly, Vec<(u64, u64)>)]) -> Self {
        let mut mult: BTreeMap<(u64, u64), usize> = BTreeMap::new();
        let live: Vec<_> = strata.iter().filter(|(c, _)| !c.is_zero()).collect();
        for (_, fs) in &live {
            let mut cnt: BTreeMap<(u64, u64), usize> = BTreeMap::new();
            for f in fs {
                *cnt.entry(*f).or_default() += 1;
            }
            for (f, k) in cnt {
                let e = mult.entry(f).or_default();
                *e = (*e).max(k);
            }
        }
        let mut num = TuPoly::zero();
        for (c, fs) in &live {
            let mut term = TuPoly::from_u(c);
            let mut cnt: BTreeMap<(u64, u64), usize> = BTreeMap::new();
            for (nu, n) in fs {
                term = term.mul(&TuPoly::monomial(BigInt::one(), *n as u32, -(*nu as i64)));
                *cnt.entry((*nu, *n)).or_default() += 1;
            }
            for (f, m) in &mult {
                let have = cnt.get(f).copied().unwrap_or(0);
                for _ in have..*m {
                    term = term.mul(&TuPoly::factor(f.0, f.1));
                }
            }
            num = num.add(&term);
        }
        let mut factors = Vec::new();
        for (f, m) in mult {
            for _ in 0..m {
                factors.push(f);
            }
        }
        ZetaBetaFunction { num, factors }
    }

    pub fn numerator(&self) -> &TuPoly {
        &self.num
    }

    pub fn factors(&self) -> &[(u64, u64)] {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn denominator(&self) -> TuPoly {
        let mut d = TuPoly::one();
        for (nu, n) in &self.factors {
            d = d.mul(&TuPoly::factor(*nu, *n));
        }
        d
    }

    /// Equality as rational functions by cross-multiplication.
    pub fn same_function(&self, o: &Self) -> bool {
        self.num.mul(&o.denominator()) == o.num.mul(&self.denominator())
    }

    /// Coefficients of T^0 .. T^n of the power-series expansion.
    pub fn series(&self, n: u32) -> Vec<LaurentPoly> {
        let mut acc = self.num.truncate(n);
        for (nu, nn) in &self.factors {
            let mut geo = TuPoly::zero();
            let mut k = 0u32;
            while (k as u64) * nn <= n as u64 {
                geo = geo.add(&TuPoly::monomial(BigInt::one(), k * *nn as u32, -((k as u64 * nu) as i64)));
                k += 1;
            }
            acc = acc.mul(&geo).truncate(n);
        }
        (0..=n).map(|k| acc.t_coeff(k)).collect()
    }

    /// Order of the pole at s0 = -p/q, where T = u^{-s}; 0 if not a pole.
    pub fn pole_order_at(&self, s0: &Q) -> usize {
        let p: i64 = (-s0.numer()).try_into().unwrap_or(0);
        let q: i64 = s0.denom().try_into().unwrap_or(1);
        let target = -s0.clone();
        let ord_den = self
            .factors
            .iter()
            .filter(|(nu, n)| Q::new(BigInt::from(*nu), BigInt::from(*n)) == target)
            .count();
        if ord_den == 0 || self.num.is_zero() {
            return 0;
        }
        let mut k = 0u32;
        while (k as usize) < ord_den {
            if !self.num.derivative_at(k, p, q).is_zero() {
                break;
            }
            k += 1;
        }
        ord_den - k as usize
    }

    /// Ratios nu/N of the denominator factors, as candidate poles -nu/N.
    pub fn candidate_poles(&self) -> Vec<Q> {
        let mut v: Vec<Q> = self.factors.iter().map(|(nu, n)| -Q::new(BigInt::from(*nu), BigInt::from(*n))).collect();
        v.sort();
        v.dedup();
        v.reverse();
        v
    }

    pub fn display(&self) -> String {
        if self.num.is_zero() {
            return "0".into();
        }
        let mut d = String::new();
        let mut grouped: BTreeMap<(u64, u64), usize> = BTreeMap::new();
        for f in &self.factors {
            *grouped.entry(*f).or_default() += 1;
        }
        for ((nu, n), k) in grouped {
            let t = if n == 1 { "T".to_string() } else { format!("T^{}", n) };
            let pw = if k > 1 { format!("^{}", k) } else { String::new() };
            d.push_str(&format!("(1 - u^-{}*{}){}", nu, t, pw));
        }
        if d.is_empty() {
            self.num.fmt()
        } else {
            format!("({})/({})", self.num.fmt(), d)
        }
    }
}

impl fmt::Display for ZetaBetaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}
