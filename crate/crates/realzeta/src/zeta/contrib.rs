use super::{ratio, DLDatum, Mode};
use crate::arith::{LaurentFraction, RationalFunctionS, Q};
use crate::covering::CoverSummary;
use crate::resolution::{Realness, ResolutionModel};
use crate::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

/// Contribution of one component to the residue at its candidate pole.
#[derive(Clone, Debug, PartialEq)]
pub struct Contribution {
    pub component: usize,
    pub s0: Q,
    pub r_top: Q,
    pub r_beta: LaurentFraction,
    pub intersection_total: Option<u64>,
}

fn data_of(datum: &DLDatum, id: usize) -> Option<(u64, u64)> {
    datum.strata.iter().find_map(|s| s.components.iter().position(|&c| c == id).map(|k| s.factors[k]))
}

/// R_top = (1/N) sum_I mu_I prod_{j != i} 1/alpha_j and its virtual-Poincare
/// analogue with (u-1)/(u^alpha_j - 1), the unit u^{nu/N} omitted.
pub fn contribution(datum: &DLDatum, id: usize, mode: Mode) -> Result<Contribution, Error> {
    if mode == Mode::Complex {
        return Err(Error::Zeta("contributions are defined for naive and signed modes".into()));
    }
    let (nu, n) = data_of(datum, id).ok_or_else(|| Error::Zeta(format!("E{} is not in the datum", id)))?;
    let r = ratio(nu, n);
    let mut top = Q::zero();
    let mut beta = LaurentFraction::zero();
    for s in datum.strata.iter().filter(|s| s.components.contains(&id)) {
        if !s.is_live(mode) {
            continue;
        }
        let mut t = s.mu(mode);
        let mut b = LaurentFraction::from_laurent(s.beta(mode));
        for (k, &c) in s.components.iter().enumerate() {
            if c == id {
                continue;
            }
            let (nj, mj) = s.factors[k];
            let alpha = Q::from_integer(BigInt::from(nj)) - r.clone() * Q::from_integer(BigInt::from(mj));
            if alpha.is_zero() {
                return Err(Error::Zeta(format!("order-2 case: E{} and E{} share the ratio {}", id, c, r)));
            }
            t /= alpha.clone();
            b = b.mul(&LaurentFraction::geometric_ratio(&alpha)?);
        }
        top += t;
        beta = beta.add(&b);
    }
    let inv_n = Q::new(BigInt::one(), BigInt::from(n));
    Ok(Contribution { component: id, s0: -r, r_top: top * inv_n.clone(), r_beta: beta.scale_q(&inv_n), intersection_total: None })
}

/// Contributions of every real component in J (naive) or J^+/J^- (signed).
/// Components caught in an order-2 collision are returned separately.
pub fn contributions(
    model: &ResolutionModel,
    cover: &CoverSummary,
    datum: &DLDatum,
    mode: Mode,
) -> (Vec<Contribution>, Vec<(usize, Q)>) {
    let mut out = Vec::new();
    let mut collisions = Vec::new();
    for c in model.components.iter().filter(|c| c.is_real()) {
        let member = match mode.sign() {
            Some(e) => cover.j(e).contains(&c.id),
            None => true,
        };
        if !member {
            continue;
        }
        match contribution(datum, c.id, mode) {
            Ok(mut r) => {
                r.intersection_total = Some(model.intersection_total(c.id));
                out.push(r);
            }
            Err(_) => collisions.push((c.id, -c.ratio())),
        }
    }
    (out, collisions)
}

/// The two shapes set aside before the general pole theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpecialShape {
    /// f is analytically lambda x^N y^M (M = 0 for a single smooth branch).
    NormalCrossing { n: u64, m: u64, lambda_sign: i8 },
    /// One blowup; the strict transform meets E only in a conjugate pair. N = 2M.
    ComplexTangency { m: u64, sign: i8 },
}

pub fn special_shape(model: &ResolutionModel) -> Option<SpecialShape> {
    if model.identity {
        let s: Vec<_> = model.strict().collect();
        return match s.as_slice() {
            [a] => Some(SpecialShape::NormalCrossing { n: a.n, m: 0, lambda_sign: model.origin_sign.unwrap_or(1) }),
            [a, b] => {
                let sign = model.crossings.first().and_then(|x| x.unit_sign).unwrap_or(1);
                Some(SpecialShape::NormalCrossing { n: a.n.max(b.n), m: a.n.min(b.n), lambda_sign: sign })
            }
            _ => None,
        };
    }
    let exc: Vec<_> = model.exceptional().collect();
    if let [e] = exc.as_slice() {
        if e.is_real() && model.real_crossing_count(e.id) == 0 && model.intersection_total(e.id) == 2 {
            let c = model.circle(e.id)?;
            return Some(SpecialShape::ComplexTangency { m: e.n / 2, sign: c.arc_signs[0] });
        }
    }
    None
}

impl SpecialShape {
    /// The stated closed form. The boolean marks the signed normal-crossing
    /// case with both exponents even, whose stated form drops a factor and
    /// disagrees with the stratum formula.
    pub fn closed_form(&self, mode: Mode) -> (RationalFunctionS, bool) {
        let one = Q::one();
        let lin = |k: u64| vec![(1u64, k)];
        match *self {
            SpecialShape::NormalCrossing { n, m, lambda_sign } => {
                let mut f = lin(n);
                if m > 0 {
                    f.push((1, m));
                }
                let generic = RationalFunctionS::term(&one, &f);
                match mode.sign() {
                    Some(eps) if n % 2 == 0 && m % 2 == 0 => {
                        if lambda_sign != eps {
                            (RationalFunctionS::zero(), false)
                        } else {
                            (RationalFunctionS::term(&Q::from_integer(2.into()), &lin(n)), m > 0)
                        }
                    }
                    _ => (generic, false),
                }
            }
            SpecialShape::ComplexTangency { m, sign } => match mode {
                Mode::Naive => (RationalFunctionS::term(&one, &lin(m)), false),
                Mode::Complex => (RationalFunctionS::term(&one, &[(1, m), (1, m)]), false),
                _ => {
                    if Some(sign) == mode.sign() {
                        (RationalFunctionS::term(&one, &lin(m)), false)
                    } else {
                        (RationalFunctionS::zero(), false)
                    }
                }
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum PredictionTag {
    #[serde(rename = "PREDICTED_EXACT")]
    PredictedExact,
    #[serde(rename = "PREDICTED_UPPER")]
    PredictedUpper,
    #[serde(rename = "PREDICTED_CERTAIN")]
    PredictedCertain,
}

impl PredictionTag {
    pub fn as_str(self) -> &'static str {
        match self {
            PredictionTag::PredictedExact => "PREDICTED_EXACT",
            PredictionTag::PredictedUpper => "PREDICTED_UPPER",
            PredictionTag::PredictedCertain => "PREDICTED_CERTAIN",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Prediction {
    pub location: Q,
    pub tag: PredictionTag,
    /// Components inducing the candidate.
    pub sources: Vec<usize>,
}

/// Graph-criterion contributors: real exceptional curves meeting the rest in
/// at least three points (over C) and real strict branches.
fn contributors(model: &ResolutionModel) -> BTreeMap<Q, Vec<usize>> {
    let mut m: BTreeMap<Q, Vec<usize>> = BTreeMap::new();
    if let Some(SpecialShape::ComplexTangency { .. }) = special_shape(model) {
        let e = model.exceptional().next().unwrap();
        m.entry(-e.ratio()).or_default().push(e.id);
        return m;
    }
    for c in model.components.iter().filter(|c| c.realness == Realness::Real) {
        let hit = if c.is_exceptional() { model.intersection_total(c.id) >= 3 } else { true };
        if hit {
            m.entry(-c.ratio()).or_default().push(c.id);
        }
    }
    m
}

/// Predicted poles: exact set for the naive function; for a signed mode the
/// upper bound over J^+/J^- together with the candidates certain at the
/// virtual-Poincare level (a unique contributor). Sorted descending.
pub fn predicted_poles(model: &ResolutionModel, cover: &CoverSummary, mode: Mode) -> Vec<Prediction> {
    let all = contributors(model);
    let mut out = Vec::new();
    match mode.sign() {
        None if mode == Mode::Naive => {
            for (s0, src) in all.iter().rev() {
                out.push(Prediction { location: s0.clone(), tag: PredictionTag::PredictedExact, sources: src.clone() });
            }
        }
        None => {}
        Some(eps) => {
            let j = cover.j(eps);
            let special = special_shape(model).is_some();
            for (s0, src) in all.iter().rev() {
                let inside: Vec<usize> = src.iter().copied().filter(|i| j.contains(i)).collect();
                // J-members sharing the candidate ratio, for the upper bound
                let any_j = model.components.iter().any(|c| c.is_real() && j.contains(&c.id) && -c.ratio() == *s0);
                if any_j {
                    out.push(Prediction { location: s0.clone(), tag: PredictionTag::PredictedUpper, sources: src.clone() });
                }
                if !special && inside.len() == 1 {
                    out.push(Prediction { location: s0.clone(), tag: PredictionTag::PredictedCertain, sources: inside });
                }
            }
        }
    }
    out
}
