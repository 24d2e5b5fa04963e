use super::field::{decimal, Nf, NfElem, NumberField};
use crate::arith::factor::factor_q;
use crate::arith::{q, Q, UniPoly};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

pub fn sturm_chain(p: &UniPoly<Q>) -> Vec<UniPoly<Q>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn variations(chain: &[UniPoly<Q>], x: &Q) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for p in chain {
        let s = p.eval(x);
        let s = if s.is_zero() { 0 } else if s.is_positive() { 1 } else { -1 };
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// Number of distinct real roots in (a, b] of a squarefree polynomial.
pub fn count_roots(chain: &[UniPoly<Q>], a: &Q, b: &Q) -> usize {
    variations(chain, a) - variations(chain, b)
}

pub fn cauchy_bound(p: &UniPoly<Q>) -> Q {
    let lc = p.lc().abs();
    let m = p.coeffs()[..p.deg()].iter().map(|c| c.abs() / &lc).max().unwrap_or_else(Q::zero);
    m + Q::one()
}

/// Disjoint isolating intervals (lo, hi), sorted, for the real roots of a
/// squarefree polynomial without rational roots.
pub fn isolate_irrational(p: &UniPoly<Q>) -> Vec<(Q, Q)> {
    let chain = sturm_chain(p);
    let b = cauchy_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = count_roots(&chain, &lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / q(2);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort();
    out
}

/// A real algebraic number: either rational or an element of a real number field.
#[derive(Clone, Debug)]
pub enum RealAlg {
    Rational(Q),
    Field(NfElem),
}

impl RealAlg {
    pub fn field(&self) -> Option<Nf> {
        match self {
            RealAlg::Rational(_) => None,
            RealAlg::Field(e) => e.field().cloned(),
        }
    }

    pub fn elem(&self) -> NfElem {
        match self {
            RealAlg::Rational(r) => NfElem::rational(r.clone()),
            RealAlg::Field(e) => e.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<Q> {
        match self {
            RealAlg::Rational(r) => Some(r.clone()),
            RealAlg::Field(e) => {
                if e.is_rational() {
                    Some(e.coeffs().first().cloned().unwrap_or_else(Q::zero))
                } else {
                    None
                }
            }
        }
    }

    pub fn enclosure(&self) -> (Q, Q) {
        match self {
            RealAlg::Rational(r) => (r.clone(), r.clone()),
            RealAlg::Field(e) => e.enclosure(),
        }
    }

    fn refine(&self) {
        if let RealAlg::Field(e) = self {
            if let Some(f) = e.field() {
                f.refine();
            }
        }
    }

    pub fn sign(&self) -> i8 {
        match self {
            RealAlg::Rational(r) => crate::arith::sign_q(r),
            RealAlg::Field(e) => e.sign(),
        }
    }

    /// Order of two real algebraic numbers. Numbers from different fields are
    /// assumed distinct (they come from distinct irreducible factors).
    pub fn cmp_real(&self, o: &RealAlg) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_rational(), o.as_rational()) {
            return a.cmp(&b);
        }
        let same_field = match (self.field(), o.field()) {
            (Some(a), Some(b)) => std::sync::Arc::ptr_eq(&a, &b),
            _ => false,
        };
        if same_field || self.as_rational().is_some() || o.as_rational().is_some() {
            let d = self.elem() - o.elem();
            return match d.sign() {
                1 => Ordering::Greater,
                -1 => Ordering::Less,
                _ => Ordering::Equal,
            };
        }
        loop {
            let (a0, a1) = self.enclosure();
            let (b0, b1) = o.enclosure();
            if a1 < b0 {
                return Ordering::Less;
            }
            if b1 < a0 {
                return Ordering::Greater;
            }
            self.refine();
            o.refine();
        }
    }

    /// Simple rational strictly between self < o.
    pub fn sample_between(&self, o: &RealAlg) -> Q {
        let ea = self.as_rational().is_some();
        let eb = o.as_rational().is_some();
        loop {
            let (_, a1) = self.enclosure();
            let (b0, _) = o.enclosure();
            if a1 < b0 {
                return simplest_between(&a1, &b0, ea, eb);
            }
            if a1 == b0 && !ea && !eb {
                return a1;
            }
            self.refine();
            o.refine();
        }
    }

    /// A rational strictly greater (`above`) or smaller than self.
    pub fn sample_beyond(&self, above: bool) -> Q {
        let (lo, hi) = self.enclosure();
        if above {
            hi.floor() + Q::one()
        } else {
            lo.ceil() - Q::one()
        }
    }

    pub fn approx(&self, digits: u32) -> String {
        match self {
            RealAlg::Rational(r) => decimal(r, digits),
            RealAlg::Field(e) => e.approx(digits),
        }
    }
}

impl fmt::Display for RealAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealAlg::Rational(r) => write!(f, "{}", crate::arith::fmt_q(r)),
            RealAlg::Field(e) => match e.field() {
                Some(nf) => write!(f, "{} [a^{} root of {}]", e.approx(6), nf.degree(), nf.minpoly().fmt_var("a")),
                None => write!(f, "{}", e),
            },
        }
    }
}

/// Rational with the smallest denominator between lo < hi (integers closest
/// to zero first); each endpoint is excluded when its flag is set.
pub fn simplest_between(lo: &Q, hi: &Q, excl_lo: bool, excl_hi: bool) -> Q {
    debug_assert!(lo < hi);
    let ok = |x: &Q| (if excl_lo { x > lo } else { x >= lo }) && (if excl_hi { x < hi } else { x <= hi });
    if ok(&Q::zero()) {
        return Q::zero();
    }
    let int_cand = if lo.is_negative() {
        let f = hi.floor();
        if ok(&f) { f } else { f - Q::one() }
    } else {
        let c = lo.ceil();
        if ok(&c) { c } else { c + Q::one() }
    };
    if ok(&int_cand) {
        return int_cand;
    }
    let mut den = BigInt::from(2);
    loop {
        let dq = Q::from_integer(den.clone());
        let n = (lo * &dq).floor();
        for k in 0..3 {
            let x = (&n + Q::from_integer(k.into())) / &dq;
            if ok(&x) {
                return x;
            }
        }
        den += 1;
    }
}

/// Real roots of p over Q with multiplicity, sorted. Irrational roots live in
/// their own real number fields.
pub fn real_roots_q(p: &UniPoly<Q>) -> Vec<(RealAlg, usize)> {
    let mut out = Vec::new();
    if p.is_zero() || p.deg() == 0 {
        return out;
    }
    let fac = factor_q(p).expect("nonzero");
    for (f, m) in fac.factors {
        if f.deg() == 1 {
            out.push((RealAlg::Rational(-f.coeff(0)), m));
        } else {
            for (lo, hi) in isolate_irrational(&f) {
                let nf = NumberField::real(f.clone(), lo, hi);
                out.push((RealAlg::Field(NfElem::generator(&nf)), m));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp_real(&b.0));
    out
}

/// Real roots of an irreducible polynomial over Q, each as generator of its own field.
pub fn real_fields_of_irreducible(f: &UniPoly<Q>) -> Vec<Nf> {
    isolate_irrational(f).into_iter().map(|(lo, hi)| NumberField::real(f.clone(), lo, hi)).collect()
}
