//! A'Campo monodromy zeta function at the origin, characteristic polynomials
//! in degrees 0 and 1, and eigenvalue witnesses for poles.

use crate::arith::{gcd_u64, q, UniPoly, Q};
use crate::covering::CoverSummary;
use crate::resolution::ResolutionModel;
use crate::zeta::Mode;
use crate::Error;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// prod (t^m - 1)^{e_m}
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycloProduct {
    exps: BTreeMap<u64, i64>,
}

impl CycloProduct {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn single(m: u64, e: i64) -> Self {
        let mut c = Self::one();
        c.add(m, e);
        c
    }

    pub fn add(&mut self, m: u64, e: i64) {
        let v = self.exps.get(&m).copied().unwrap_or(0) + e;
        if v == 0 {
            self.exps.remove(&m);
        } else {
            self.exps.insert(m, v);
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&m, &e) in &o.exps {
            r.add(m, e);
        }
        r
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Multiplicity of a primitive q-th root of unity: sum of e_m over q | m.
    pub fn root_multiplicity(&self, q: u64) -> i64 {
        self.exps.iter().filter(|(m, _)| *m % q == 0).map(|(_, e)| *e).sum()
    }

    fn orders(&self) -> BTreeSet<u64> {
        let mut s = BTreeSet::new();
        for &m in self.exps.keys() {
            for d in 1..=m {
                if m % d == 0 {
                    s.insert(d);
                }
            }
        }
        s
    }

    /// True when every root multiplicity is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.orders().into_iter().all(|d| self.root_multiplicity(d) >= 0)
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|(m, e)| *m as i64 * e).sum()
    }

    /// Expanded polynomial in t.
    pub fn to_poly(&self) -> Result<UniPoly<Q>, Error> {
        if !self.is_polynomial() {
            return Err(Error::Zeta("A'Campo inconsistency: negative root multiplicity".into()));
        }
        let mut p = UniPoly::one();
        let mut cyc: BTreeMap<u64, UniPoly<Q>> = BTreeMap::new();
        for d in self.orders() {
            let phi = cyclotomic(d, &mut cyc);
            for _ in 0..self.root_multiplicity(d) {
                p = &p * &phi;
            }
        }
        Ok(p)
    }

    pub fn display_expanded(&self) -> String {
        match self.to_poly() {
            Ok(p) => p.fmt_var("t"),
            Err(_) => self.to_string(),
        }
    }
}

fn cyclotomic(n: u64, memo: &mut BTreeMap<u64, UniPoly<Q>>) -> UniPoly<Q> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut c = vec![Q::zero(); n as usize + 1];
    c[0] = -Q::one();
    c[n as usize] = Q::one();
    let mut p = UniPoly::new(c);
    for d in 1..n {
        if n.is_multiple_of(d) {
            let f = cyclotomic(d, memo);
            p = p.exact_div(&f).expect("cyclotomic division");
        }
    }
    memo.insert(n, p.clone());
    p
}

impl fmt::Display for CycloProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |m: u64, e: i64| {
            let base = if m == 1 { "(t - 1)".to_string() } else { format!("(t^{} - 1)", m) };
            if e == 1 {
                base
            } else {
                format!("{}^{}", base, e)
            }
        };
        let num: Vec<String> = self.exps.iter().filter(|(_, e)| **e > 0).map(|(m, e)| term(*m, *e)).collect();
        let den: Vec<String> = self.exps.iter().filter(|(_, e)| **e < 0).map(|(m, e)| term(*m, -e)).collect();
        let n = if num.is_empty() { "1".to_string() } else { num.join("") };
        match den.len() {
            0 => write!(f, "{}", n),
            1 => write!(f, "{}/{}", n, den[0]),
            _ => write!(f, "{}/({})", n, den.join("")),
        }
    }
}

/// zeta_0 = prod (t^N - 1)^{-chi(E^0 over 0)} over the components meeting the origin fiber.
pub fn acampo_zeta_origin(model: &ResolutionModel) -> CycloProduct {
    let mut z = CycloProduct::one();
    if model.identity {
        // with one branch the origin lies on S^0; with two it is their crossing
        let s: Vec<_> = model.strict().collect();
        if let [b] = s.as_slice() {
            z.add(b.n, -1);
        }
        return z;
    }
    for c in model.exceptional() {
        let w: u64 = model.crossings_of(c.id).map(|x| x.weight).sum();
        let chi = 2 * c.weight as i64 - w as i64;
        z.add(c.n, -chi);
    }
    z
}

/// gcd of the multiplicities of the branches through the origin.
pub fn branch_gcd(model: &ResolutionModel) -> u64 {
    model.strict().fold(0, |g, c| gcd_u64(g, c.n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OriginMonodromy {
    pub zeta: CycloProduct,
    pub p0: CycloProduct,
    pub p1: CycloProduct,
}

pub fn char_polys_origin(model: &ResolutionModel) -> Result<OriginMonodromy, Error> {
    let zeta = acampo_zeta_origin(model);
    let p0 = CycloProduct::single(branch_gcd(model), 1);
    let p1 = zeta.mul(&p0);
    if !p1.is_polynomial() {
        return Err(Error::Zeta("A'Campo inconsistency: P1 is not a polynomial".into()));
    }
    Ok(OriginMonodromy { zeta, p0, p1 })
}

/// At a generic point of branch `id`: P0 = t^N - 1, P1 = 1.
pub fn char_polys_branch(model: &ResolutionModel, id: usize) -> Result<(CycloProduct, CycloProduct), Error> {
    let c = model
        .components
        .iter()
        .find(|c| c.id == id && !c.is_exceptional())
        .ok_or_else(|| Error::Input(format!("E{} is not a branch of the strict transform", id)))?;
    Ok((CycloProduct::single(c.n, 1), CycloProduct::one()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    OriginH0,
    OriginH1,
    BranchPoint(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SignedRegion {
    None,
    PlusClosure,
    MinusClosure,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueWitness {
    pub s0: Q,
    /// Denominator of s0 in lowest terms: exp(2 pi i s0) is a primitive q-th root of unity.
    pub q: u64,
    pub kind: WitnessKind,
    pub region: SignedRegion,
}

impl EigenvalueWitness {
    pub fn describe(&self) -> String {
        let at = match self.kind {
            WitnessKind::OriginH0 => "origin, H^0".to_string(),
            WitnessKind::OriginH1 => "origin, H^1".to_string(),
            WitnessKind::BranchPoint(b) => format!("generic point of E{}, H^0", b),
        };
        let region = match self.region {
            SignedRegion::None => "",
            SignedRegion::PlusClosure => " in closure of {f > 0}",
            SignedRegion::MinusClosure => " in closure of {f < 0}",
        };
        format!("primitive root of unity of order {} at {}{}", self.q, at, region)
    }
}

/// Certify exp(2 pi i s0) as a monodromy eigenvalue at the origin or at a
/// generic point of a branch. `Ok(None)` means no witness was found.
pub fn eigenvalue_witness(
    model: &ResolutionModel,
    cover: &CoverSummary,
    origin: &OriginMonodromy,
    s0: &Q,
    mode: Mode,
    poles: &BTreeSet<Q>,
) -> Result<Option<EigenvalueWitness>, Error> {
    if !poles.contains(s0) {
        return Err(Error::Input(format!("{} is not a pole", s0)));
    }
    if !s0.is_negative() {
        return Ok(None);
    }
    let qd = s0.denom().to_u64().ok_or_else(|| Error::Zeta("denominator overflow".into()))?;
    let region = match mode.sign() {
        Some(1) => SignedRegion::PlusClosure,
        Some(_) => SignedRegion::MinusClosure,
        None => SignedRegion::None,
    };
    let origin_ok = match mode.sign() {
        Some(e) => !cover.j(e).is_empty(),
        None => true,
    };
    let found = |kind| Some(EigenvalueWitness { s0: s0.clone(), q: qd, kind, region });
    if origin_ok {
        if origin.p0.root_multiplicity(qd) > 0 {
            return Ok(found(WitnessKind::OriginH0));
        }
        if origin.p1.root_multiplicity(qd) > 0 {
            return Ok(found(WitnessKind::OriginH1));
        }
    }
    for c in model.strict() {
        let allowed = match mode {
            Mode::Complex => true,
            Mode::Naive => c.is_real(),
            m => c.is_real() && cover.j(m.sign().unwrap()).contains(&c.id),
        };
        if allowed && (-s0.clone()) == Q::new(1.into(), (c.n as i64).into()) && c.n % qd == 0 {
            let (p0, _) = char_polys_branch(model, c.id)?;
            if p0.root_multiplicity(qd) > 0 {
                return Ok(found(WitnessKind::BranchPoint(c.id)));
            }
        }
    }
    Ok(None)
}

/// (t - 1) helper for tests and display.
pub fn t_minus_one() -> UniPoly<Q> {
    UniPoly::new(vec![q(-1), q(1)])
}
