//! Zeta functions from resolution data: the stratum datum, the four
//! topological variants, the virtual-Poincare level, poles, contributions
//! and graph-based pole predictions.

mod contrib;
mod poles;

pub use contrib::{contribution, contributions, predicted_poles, special_shape, Contribution, Prediction, PredictionTag, SpecialShape};
pub use poles::{locations, poles_beta, poles_top, PoleRecord};

use crate::arith::{LaurentPoly, RationalFunctionS, ZetaBetaFunction, Q};
use crate::covering::CoverSummary;
use crate::resolution::{Realness, ResolutionModel};
use crate::Error;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Naive,
    Plus,
    Minus,
    Complex,
}

impl Mode {
    pub const ALL: [Mode; 4] = [Mode::Naive, Mode::Plus, Mode::Minus, Mode::Complex];

    pub fn sign(self) -> Option<i8> {
        match self {
            Mode::Plus => Some(1),
            Mode::Minus => Some(-1),
            _ => None,
        }
    }

    pub fn has_beta_level(self) -> bool {
        self != Mode::Complex
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Naive => "naive",
            Mode::Plus => "plus",
            Mode::Minus => "minus",
            Mode::Complex => "complex",
        })
    }
}

/// One stratum E_I^0 over the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct Stratum {
    pub components: Vec<usize>,
    pub beta_real: LaurentPoly,
    pub beta_plus: LaurentPoly,
    pub beta_minus: LaurentPoly,
    pub chi_complex: i64,
    pub factors: Vec<(u64, u64)>,
}

impl Stratum {
    pub fn beta(&self, mode: Mode) -> &LaurentPoly {
        match mode {
            Mode::Plus => &self.beta_plus,
            Mode::Minus => &self.beta_minus,
            _ => &self.beta_real,
        }
    }

    /// Euler-characteristic-level weight used by the topological formula.
    pub fn mu(&self, mode: Mode) -> Q {
        match mode {
            Mode::Complex => Q::from_integer(self.chi_complex.into()),
            m => Q::from_integer(self.beta(m).eval_one()),
        }
    }

    pub fn is_live(&self, mode: Mode) -> bool {
        match mode {
            Mode::Complex => self.chi_complex != 0,
            m => !self.beta(m).is_zero(),
        }
    }
}

/// Denef-Loeser style datum: the strata and their numerical data.
#[derive(Clone, Debug, PartialEq)]
pub struct DLDatum {
    pub dimension: u32,
    pub strata: Vec<Stratum>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StratumJson {
    components: Vec<usize>,
    #[serde(rename = "betaReal")]
    beta_real: Vec<i64>,
    #[serde(rename = "betaPlus")]
    beta_plus: Vec<i64>,
    #[serde(rename = "betaMinus")]
    beta_minus: Vec<i64>,
    #[serde(rename = "chiComplex")]
    chi_complex: i64,
    factors: Vec<(u64, u64)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DatumJson {
    dimension: u32,
    strata: Vec<StratumJson>,
}

/// Ascending coefficient list of a polynomial in u.
fn poly_to_coeffs(p: &LaurentPoly) -> Result<Vec<i64>, Error> {
    match p.to_coeffs() {
        None => Err(Error::Zeta(format!("{} has negative powers of u", p))),
        Some(c) => c.iter().map(|x| x.to_i64().ok_or_else(|| Error::Zeta("coefficient overflow".into()))).collect(),
    }
}

fn coeffs_to_poly(c: &[i64]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (i, a) in c.iter().enumerate() {
        p.add_term(i as i64, BigInt::from(*a));
    }
    p
}

impl DLDatum {
    pub fn to_json(&self) -> Result<String, Error> {
        let raw = DatumJson {
            dimension: self.dimension,
            strata: self
                .strata
                .iter()
                .map(|s| {
                    Ok(StratumJson {
                        components: s.components.clone(),
                        beta_real: poly_to_coeffs(&s.beta_real)?,
                        beta_plus: poly_to_coeffs(&s.beta_plus)?,
                        beta_minus: poly_to_coeffs(&s.beta_minus)?,
                        chi_complex: s.chi_complex,
                        factors: s.factors.clone(),
                    })
                })
                .collect::<Result<_, Error>>()?,
        };
        serde_json::to_string_pretty(&raw).map_err(|e| Error::Zeta(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<DLDatum, Error> {
        let raw: DatumJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("datum JSON: {}", e)))?;
        if raw.dimension == 0 {
            return Err(Error::Input("datum JSON: dimension must be positive".into()));
        }
        let mut strata = Vec::new();
        for (k, s) in raw.strata.into_iter().enumerate() {
            if s.factors.is_empty() {
                return Err(Error::Input(format!("datum JSON: stratum {} has no factors", k)));
            }
            if s.factors.iter().any(|&(nu, n)| nu == 0 || n == 0) {
                return Err(Error::Input(format!("datum JSON: stratum {} has a nonpositive (nu, N)", k)));
            }
            strata.push(Stratum {
                components: s.components,
                beta_real: coeffs_to_poly(&s.beta_real),
                beta_plus: coeffs_to_poly(&s.beta_plus),
                beta_minus: coeffs_to_poly(&s.beta_minus),
                chi_complex: s.chi_complex,
                factors: s.factors,
            });
        }
        Ok(DLDatum { dimension: raw.dimension, strata })
    }

    /// Candidate poles -nu/N over the factors of strata that carry weight in this mode,
    /// sorted descending.
    pub fn candidate_poles(&self, mode: Mode) -> Vec<Q> {
        let mut set = BTreeSet::new();
        for s in &self.strata {
            if mode == Mode::Complex || s.is_live(mode) {
                for &(nu, n) in &s.factors {
                    set.insert(-ratio(nu, n));
                }
            }
        }
        set.into_iter().rev().collect()
    }
}

pub fn ratio(nu: u64, n: u64) -> Q {
    Q::new(BigInt::from(nu), BigInt::from(n))
}

/// Strata over the origin for a plane resolution model.
pub fn dl_datum(model: &ResolutionModel, cover: &CoverSummary) -> Result<DLDatum, Error> {
    let mut strata = Vec::new();
    let nu_n = |id: usize| {
        let c = model.component(id);
        (c.nu, c.n)
    };
    if model.identity {
        let strict: Vec<usize> = model.strict().map(|c| c.id).collect();
        match strict.as_slice() {
            [s] => {
                let c = model.component(*s);
                let sign = model.origin_sign.unwrap_or(1);
                let pts = |eps: i8| crate::covering::points_for(c.n, sign, eps) as i64;
                strata.push(Stratum {
                    components: vec![*s],
                    beta_real: LaurentPoly::one(),
                    beta_plus: LaurentPoly::from_coeffs(&[pts(1)]),
                    beta_minus: LaurentPoly::from_coeffs(&[pts(-1)]),
                    chi_complex: 1,
                    factors: vec![nu_n(*s)],
                });
            }
            [_, _] => {
                let (i, x) = model
                    .crossings
                    .iter()
                    .enumerate()
                    .next()
                    .ok_or_else(|| Error::Resolution("two branches without a crossing".into()))?;
                let cc = cover.crossing(i).ok_or_else(|| Error::Resolution("crossing cover missing".into()))?;
                strata.push(Stratum {
                    components: vec![x.a, x.b],
                    beta_real: LaurentPoly::one(),
                    beta_plus: LaurentPoly::from_coeffs(&[cc.points_plus as i64]),
                    beta_minus: LaurentPoly::from_coeffs(&[cc.points_minus as i64]),
                    chi_complex: 1,
                    factors: vec![nu_n(x.a), nu_n(x.b)],
                });
            }
            _ => return Err(Error::Resolution("identity model must have one or two branches".into())),
        }
        return Ok(DLDatum { dimension: 2, strata });
    }
    for comp in model.exceptional() {
        let id = comp.id;
        let crossing_weight: u64 = model.crossings_of(id).map(|x| x.weight).sum();
        let chi = 2 * comp.weight as i64 - crossing_weight as i64;
        let (beta_real, bp, bm) = if comp.is_real() {
            let k = model.real_crossing_count(id) as i64;
            let cc = cover.component(id).ok_or_else(|| Error::Resolution(format!("cover data missing for E{}", id)))?;
            (LaurentPoly::from_coeffs(&[1 - k, 1]), cc.beta_plus.clone(), cc.beta_minus.clone())
        } else {
            (LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::zero())
        };
        strata.push(Stratum {
            components: vec![id],
            beta_real,
            beta_plus: bp,
            beta_minus: bm,
            chi_complex: chi,
            factors: vec![(comp.nu, comp.n)],
        });
    }
    for (i, x) in model.crossings.iter().enumerate() {
        let (bp, bm, br) = if x.realness == Realness::Real {
            let cc = cover.crossing(i).ok_or_else(|| Error::Resolution("crossing cover missing".into()))?;
            (
                LaurentPoly::from_coeffs(&[cc.points_plus as i64]),
                LaurentPoly::from_coeffs(&[cc.points_minus as i64]),
                LaurentPoly::one(),
            )
        } else {
            (LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::zero())
        };
        let (a, b) = (x.a.min(x.b), x.a.max(x.b));
        strata.push(Stratum {
            components: vec![a, b],
            beta_real: br,
            beta_plus: bp,
            beta_minus: bm,
            chi_complex: x.weight as i64,
            factors: vec![nu_n(a), nu_n(b)],
        });
    }
    Ok(DLDatum { dimension: 2, strata })
}

/// Topological zeta function: sum of mu_I / prod (nu_i + s N_i).
pub fn z_top(datum: &DLDatum, mode: Mode) -> RationalFunctionS {
    let terms: Vec<(Q, Vec<(u64, u64)>)> = datum.strata.iter().map(|s| (s.mu(mode), s.factors.clone())).collect();
    RationalFunctionS::from_terms(&terms)
}

/// Virtual-Poincare level zeta function. Naive strata carry (u-1)^{|I|},
/// signed strata (u-1)^{|I|-1}.
pub fn z_beta(datum: &DLDatum, mode: Mode) -> Result<ZetaBetaFunction, Error> {
    if mode == Mode::Complex {
        return Err(Error::Zeta("no virtual-Poincare level for the complexified function".into()));
    }
    let um1 = LaurentPoly::from_coeffs(&[-1, 1]);
    let strata: Vec<(LaurentPoly, Vec<(u64, u64)>)> = datum
        .strata
        .iter()
        .map(|s| {
            let k = s.factors.len() as u32 - u32::from(mode != Mode::Naive);
            (s.beta(mode).mul(&um1.pow(k)), s.factors.clone())
        })
        .collect();
    Ok(ZetaBetaFunction::from_strata(&strata))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn datum_json_round_trip() {
        let d = DLDatum {
            dimension: 3,
            strata: vec![Stratum {
                components: vec![1],
                beta_real: LaurentPoly::from_coeffs(&[1]),
                beta_plus: LaurentPoly::from_coeffs(&[0, 2]),
                beta_minus: LaurentPoly::zero(),
                chi_complex: 1,
                factors: vec![(1, 2)],
            }],
        };
        let back = DLDatum::from_json(&d.to_json().unwrap()).unwrap();
        assert_eq!(back, d);
        assert_eq!(z_top(&back, Mode::Naive).to_string(), "1/(1 + 2s)");
    }
}
