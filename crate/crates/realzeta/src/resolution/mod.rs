//! Embedded resolution of a plane curve germ at the origin by point blowups,
//! with exact tracking of numerical data, fields of definition, Galois orbit
//! weights, crossing points and real sign data along exceptional curves.

mod engine;

use crate::algebraic::RealAlg;
use crate::arith::{BiPoly, Q};
use crate::Error;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use engine::ExtraBlowup;

/// A germ at the origin given as `unit * prod g_k^{e_k}` with the `g_k`
/// squarefree, pairwise coprime and primitive over Q.
#[derive(Clone, Debug)]
pub struct Germ {
    pub unit: Q,
    pub factors: Vec<(BiPoly<Q>, u32)>,
}

impl Germ {
    /// Squarefree decomposition of an expanded polynomial.
    pub fn from_poly(f: &BiPoly<Q>) -> Result<Germ, Error> {
        if f.is_zero() {
            return Err(Error::Input("the zero polynomial defines no germ".into()));
        }
        if f.total_degree() == 0 {
            return Err(Error::Input("constant polynomial".into()));
        }
        let dec = f.squarefree_decomposition();
        let mut prod = BiPoly::one();
        for (g, e) in &dec {
            prod = prod.mul(&g.pow(*e));
        }
        let c = f.exact_div(&prod).ok_or_else(|| Error::Algebra("squarefree decomposition failed".into()))?;
        if c.total_degree() != 0 {
            return Err(Error::Algebra("squarefree decomposition failed".into()));
        }
        let g = Germ { unit: c.constant_term(), factors: dec };
        g.check_origin()?;
        Ok(g)
    }

    /// From a user-supplied factor list; factors are made squarefree and pairwise coprime.
    pub fn from_factors(list: &[(BiPoly<Q>, u32)]) -> Result<Germ, Error> {
        let mut unit = Q::one();
        let mut pieces: Vec<(BiPoly<Q>, u32)> = Vec::new();
        for (g, e) in list {
            if *e == 0 {
                continue;
            }
            if g.is_zero() {
                return Err(Error::Input("zero factor".into()));
            }
            let sub = Germ::from_poly_unchecked(g)?;
            unit *= num_traits::pow(sub.unit.clone(), *e as usize);
            for (h, k) in sub.factors {
                pieces.push((h, k * e));
            }
        }
        // coprime refinement
        loop {
            let mut changed = false;
            'outer: for i in 0..pieces.len() {
                for j in i + 1..pieces.len() {
                    let d = BiPoly::gcd(&pieces[i].0, &pieces[j].0);
                    if d.total_degree() > 0 {
                        let (gi, ei) = pieces[i].clone();
                        let (gj, ej) = pieces[j].clone();
                        let ri = gi.exact_div(&d).unwrap();
                        let rj = gj.exact_div(&d).unwrap();
                        let mut next: Vec<(BiPoly<Q>, u32)> =
                            pieces.iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, p)| p.clone()).collect();
                        for (r, e) in [(ri, ei), (rj, ej)] {
                            if r.total_degree() > 0 {
                                next.push((r, e));
                            } else {
                                unit *= num_traits::pow(r.constant_term(), e as usize);
                            }
                        }
                        next.push((d, ei + ej));
                        pieces = next;
                        changed = true;
                        break 'outer;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        // merge equal factors is impossible after refinement; normalize
        let mut factors = Vec::new();
        for (g, e) in pieces {
            let p = g.primitive_part();
            let c = g.exact_div(&p).unwrap().constant_term();
            unit *= num_traits::pow(c, e as usize);
            factors.push((p, e));
        }
        if factors.is_empty() {
            return Err(Error::Input("constant polynomial".into()));
        }
        let g = Germ { unit, factors };
        g.check_origin()?;
        Ok(g)
    }

    fn from_poly_unchecked(f: &BiPoly<Q>) -> Result<Germ, Error> {
        if f.total_degree() == 0 {
            return Ok(Germ { unit: f.constant_term(), factors: vec![] });
        }
        let dec = f.squarefree_decomposition();
        let mut prod = BiPoly::one();
        for (g, e) in &dec {
            prod = prod.mul(&g.pow(*e));
        }
        let c = f.exact_div(&prod).ok_or_else(|| Error::Algebra("squarefree decomposition failed".into()))?;
        Ok(Germ { unit: c.constant_term(), factors: dec })
    }

    fn check_origin(&self) -> Result<(), Error> {
        if !self.factors.iter().any(|(g, _)| g.vanishes_at_origin()) {
            return Err(Error::Input("f(0,0) != 0: the origin is not on the curve".into()));
        }
        Ok(())
    }

    pub fn expanded(&self) -> BiPoly<Q> {
        let mut p = BiPoly::constant(self.unit.clone());
        for (g, e) in &self.factors {
            p = p.mul(&g.pow(*e));
        }
        p
    }

    pub fn display(&self) -> String {
        let mut parts = Vec::new();
        let neg_one = self.unit == -Q::one();
        if self.unit != Q::one() && !neg_one {
            parts.push(crate::arith::fmt_q(&self.unit));
        }
        for (g, e) in &self.factors {
            let s = g.fmt_xy();
            let bare = g.len() == 1 && !s.contains('*') && (*e == 1 || !(s.contains('^') || s.starts_with('-')));
            let s = if bare { s } else { format!("({})", s) };
            parts.push(if *e > 1 { format!("{}^{}", s, e) } else { s });
        }
        let body = parts.join("*");
        if neg_one {
            format!("-{}", body)
        } else {
            body
        }
    }

    pub fn is_zero_unit(&self) -> bool {
        self.unit.is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentKind {
    Exceptional,
    StrictBranch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Realness {
    Real,
    ComplexPair,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Component {
    /// 1-based label, rendered as E<id>.
    pub id: usize,
    pub kind: ComponentKind,
    pub nu: u64,
    pub n: u64,
    pub realness: Realness,
    /// Number of geometric components over C represented by this record.
    pub weight: u64,
    pub creation_step: Option<usize>,
    pub branch_tag: Option<String>,
    pub field_degree: usize,
}

impl Component {
    pub fn is_real(&self) -> bool {
        self.realness == Realness::Real
    }
    pub fn is_exceptional(&self) -> bool {
        self.kind == ComponentKind::Exceptional
    }
    pub fn ratio(&self) -> Q {
        Q::new((self.nu as i64).into(), (self.n as i64).into())
    }
    pub fn label(&self) -> String {
        format!("E{}", self.id)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Crossing {
    pub a: usize,
    pub b: usize,
    pub realness: Realness,
    pub weight: u64,
    /// Coordinate of the point on each exceptional component (creation chart; "inf" for the chart-2 point).
    pub coord_a: Option<String>,
    pub coord_b: Option<String>,
    /// Sign of the unit at a real crossing.
    pub unit_sign: Option<i8>,
    pub gcd: u64,
}

impl Crossing {
    pub fn other(&self, id: usize) -> Option<usize> {
        if self.a == id {
            Some(self.b)
        } else if self.b == id {
            Some(self.a)
        } else {
            None
        }
    }
    pub fn involves(&self, id: usize) -> bool {
        self.a == id || self.b == id
    }
    pub fn is_real(&self) -> bool {
        self.realness == Realness::Real
    }
}

#[derive(Clone, Debug)]
pub enum CircleCoord {
    Finite(RealAlg),
    Infinity,
}

#[derive(Clone, Debug)]
pub struct MarkedPoint {
    pub coord: CircleCoord,
    /// Order of vanishing of the restricted unit at the point.
    pub d: u64,
    pub crossing: usize,
    pub partner: usize,
}

/// Real sign data along a real exceptional curve in its creation chart.
/// Arcs: arc 0 is (-inf, r_1), arc j is (r_j, r_{j+1}), arc k is (r_k, +inf);
/// with no finite marked point there is a single arc.
#[derive(Clone, Debug)]
pub struct RealCircle {
    pub component: usize,
    pub n: u64,
    pub finite: Vec<MarkedPoint>,
    pub infinity: Option<MarkedPoint>,
    pub d_inf: u64,
    pub arc_signs: Vec<i8>,
}

impl RealCircle {
    pub fn has_sign(&self, s: i8) -> bool {
        self.arc_signs.contains(&s)
    }
    pub fn marked_count(&self) -> usize {
        self.finite.len() + usize::from(self.infinity.is_some())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BadReason {
    Tangency,
    SingularBranch,
    TripleOrWorse,
    Forced,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlowupRecord {
    pub index: usize,
    pub parent: Option<usize>,
    pub component: usize,
    pub center: String,
    pub field: String,
    pub real: bool,
    pub weight: u64,
    pub reason: BadReason,
    pub multiplicity: u32,
}

#[derive(Clone, Debug)]
pub struct ResolutionModel {
    pub germ_display: String,
    pub components: Vec<Component>,
    pub crossings: Vec<Crossing>,
    pub circles: Vec<RealCircle>,
    pub blowups: Vec<BlowupRecord>,
    pub identity: bool,
    pub minimal: bool,
    /// Sign of the unit at the origin when the germ is a single smooth branch.
    pub origin_sign: Option<i8>,
}

impl ResolutionModel {
    pub fn component(&self, id: usize) -> &Component {
        &self.components[id - 1]
    }

    pub fn exceptional(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.is_exceptional())
    }

    pub fn strict(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| !c.is_exceptional())
    }

    pub fn crossings_of(&self, id: usize) -> impl Iterator<Item = &Crossing> {
        self.crossings.iter().filter(move |c| c.involves(id))
    }

    /// Number of geometric intersection points on one copy of E_id with the other components.
    pub fn intersection_total(&self, id: usize) -> u64 {
        let w = self.component(id).weight;
        self.crossings_of(id).map(|c| c.weight).sum::<u64>() / w
    }

    /// Number of real crossing points on E_id.
    pub fn real_crossing_count(&self, id: usize) -> u64 {
        self.crossings_of(id).filter(|c| c.realness == Realness::Real).count() as u64
    }

    pub fn circle(&self, id: usize) -> Option<&RealCircle> {
        self.circles.iter().find(|c| c.component == id)
    }

    pub fn is_zero_sized(&self) -> bool {
        self.components.is_empty()
    }
}

/// Resolve the germ at the origin.
pub fn resolve(germ: &Germ) -> Result<ResolutionModel, Error> {
    engine::Resolver::run(germ, ExtraBlowup::None)
}

/// Resolve with one additional blowup at a good real point (non-minimal model).
pub fn resolve_with_extra(germ: &Germ, extra: ExtraBlowup) -> Result<ResolutionModel, Error> {
    engine::Resolver::run(germ, extra)
}
