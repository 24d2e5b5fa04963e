//! Sign coverings over real components: sheet gluing along real exceptional
//! curves, cover point counts at crossings, signed virtual Poincare
//! polynomials, and membership in the positive/negative component sets.

use crate::arith::{v2, LaurentPoly};
use crate::resolution::{Crossing, Realness, ResolutionModel};
use crate::Error;
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::BTreeSet;

/// How the two sheet ends on either side of a gluing point are joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GlueKind {
    /// The two sheets on each side join each other.
    Fold,
    /// Sheet with label s on the left continues as label s on the right.
    Straight,
    /// Sheet with label s on the left continues as label -s on the right.
    Swap,
}

/// Local model y^n = c w^m with n even: compare 2-adic valuations.
pub fn glue_kind(n: u64, m: u64) -> GlueKind {
    let vn = v2(n).expect("n > 0");
    match v2(m) {
        None => GlueKind::Straight,
        Some(vm) if vm > vn => GlueKind::Straight,
        Some(vm) if vm < vn => GlueKind::Fold,
        _ => GlueKind::Swap,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCount {
    /// Connected components of the smooth compactification.
    pub c: u64,
    /// Points added over gluing points by the normalization.
    pub points: u64,
    /// Part of `points` lying over the chart seam at infinity.
    pub seam: u64,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut j = i;
        while self.0[j] != r {
            let n = self.0[j];
            self.0[j] = r;
            j = n;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Count components of the sign cover over a real projective line.
///
/// `arc_signs` has one entry per arc (a single arc when `finite_d` is
/// empty); `finite_d` holds the vanishing orders at the sorted finite
/// marked points; `d_inf` is the order at infinity in the second chart,
/// whose normal coordinate differs from the first by the affine coordinate
/// when `flip_at_infinity` is set.
pub fn count_cover(
    n: u64,
    arc_signs: &[i8],
    finite_d: &[u64],
    d_inf: u64,
    flip_at_infinity: bool,
    eps: i8,
) -> Result<CoverCount, Error> {
    if n % 2 == 1 {
        return Err(Error::Input("cover trivial for odd N, use the odd-case formula".into()));
    }
    let k = finite_d.len();
    let arcs = if k == 0 { 1 } else { k + 1 };
    if arc_signs.len() != arcs {
        return Err(Error::Input(format!("expected {} arc signs, got {}", arcs, arc_signs.len())));
    }
    let has = |a: usize| arc_signs[a] == eps;
    let mut dsu = Dsu((0..2 * arcs).collect());
    let mut points = 0u64;
    let glue = |dsu: &mut Dsu, left: usize, right: usize, kind: GlueKind, m: u64| -> Result<u64, Error> {
        let same = arc_signs[left] == arc_signs[right];
        if same != m.is_multiple_of(2) {
            return Err(Error::Resolution("arc signs contradict the vanishing order parity".into()));
        }
        let mut pts = 0;
        match kind {
            GlueKind::Fold => {
                for side in [left, right] {
                    if has(side) {
                        dsu.union(2 * side, 2 * side + 1);
                        pts += 1;
                    }
                }
            }
            GlueKind::Straight | GlueKind::Swap => {
                if has(left) {
                    let sw = usize::from(kind == GlueKind::Swap);
                    dsu.union(2 * left, 2 * right + sw);
                    dsu.union(2 * left + 1, 2 * right + 1 - sw);
                    pts += 2;
                }
            }
        }
        Ok(pts)
    };
    for (j, &d) in finite_d.iter().enumerate() {
        points += glue(&mut dsu, j, j + 1, glue_kind(n, d), d)?;
    }
    let mut kind = glue_kind(n, d_inf);
    if flip_at_infinity {
        kind = match kind {
            GlueKind::Straight => GlueKind::Swap,
            GlueKind::Swap => GlueKind::Straight,
            GlueKind::Fold => GlueKind::Fold,
        };
    }
    let seam = glue(&mut dsu, arcs - 1, 0, kind, d_inf)?;
    points += seam;
    let mut roots = BTreeSet::new();
    for a in 0..arcs {
        if has(a) {
            roots.insert(dsu.find(2 * a));
            roots.insert(dsu.find(2 * a + 1));
        }
    }
    Ok(CoverCount { c: roots.len() as u64, points, seam })
}

/// Number of real cover points over a real crossing for the requested sign.
pub fn cover_points_at_crossing(x: &Crossing, eps: i8) -> Result<u64, Error> {
    if x.realness != Realness::Real {
        return Err(Error::Input("complex crossing has no real cover points".into()));
    }
    Ok(points_for(x.gcd, x.unit_sign.unwrap_or(1), eps))
}

/// Points of {t^g * unit = eps} for a unit of sign `unit_sign`.
pub fn points_for(g: u64, unit_sign: i8, eps: i8) -> u64 {
    if g % 2 == 1 {
        1
    } else if unit_sign == eps {
        2
    } else {
        0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComponentCover {
    pub id: usize,
    pub beta_plus: LaurentPoly,
    pub beta_minus: LaurentPoly,
    pub c_plus: Option<u64>,
    pub c_minus: Option<u64>,
    /// Normalization points from the gluing, for the consistency check.
    pub glue_points_plus: Option<u64>,
    pub glue_points_minus: Option<u64>,
    pub crossing_points_plus: u64,
    pub crossing_points_minus: u64,
    pub in_j_plus: bool,
    pub in_j_minus: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrossingCover {
    pub index: usize,
    pub points_plus: u64,
    pub points_minus: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoverSummary {
    pub components: Vec<ComponentCover>,
    pub crossings: Vec<CrossingCover>,
    pub j_plus: BTreeSet<usize>,
    pub j_minus: BTreeSet<usize>,
}

impl CoverSummary {
    pub fn component(&self, id: usize) -> Option<&ComponentCover> {
        self.components.iter().find(|c| c.id == id)
    }
    pub fn crossing(&self, index: usize) -> Option<&CrossingCover> {
        self.crossings.iter().find(|c| c.index == index)
    }
    pub fn j(&self, eps: i8) -> &BTreeSet<usize> {
        if eps > 0 {
            &self.j_plus
        } else {
            &self.j_minus
        }
    }
}

fn u_plus(c: i64) -> LaurentPoly {
    LaurentPoly::from_coeffs(&[c, 1])
}

/// Sign cover data for every real component and crossing of the model.
pub fn cover_summary(model: &ResolutionModel) -> Result<CoverSummary, Error> {
    let mut crossings = Vec::new();
    for (i, x) in model.crossings.iter().enumerate() {
        if x.realness == Realness::Real {
            crossings.push(CrossingCover {
                index: i,
                points_plus: cover_points_at_crossing(x, 1)?,
                points_minus: cover_points_at_crossing(x, -1)?,
            });
        }
    }
    let mut components = Vec::new();
    let mut j_plus = BTreeSet::new();
    let mut j_minus = BTreeSet::new();
    for comp in &model.components {
        if !comp.is_real() {
            continue;
        }
        let id = comp.id;
        let real_x: Vec<usize> = model
            .crossings
            .iter()
            .enumerate()
            .filter(|(_, x)| x.involves(id) && x.realness == Realness::Real)
            .map(|(i, _)| i)
            .collect();
        let pts = |eps: i8| -> u64 {
            real_x
                .iter()
                .map(|&i| points_for(model.crossings[i].gcd, model.crossings[i].unit_sign.unwrap_or(1), eps))
                .sum()
        };
        let (pp, pm) = (pts(1), pts(-1));
        let k = real_x.len() as i64;
        let mut cc = ComponentCover {
            id,
            beta_plus: LaurentPoly::zero(),
            beta_minus: LaurentPoly::zero(),
            c_plus: None,
            c_minus: None,
            glue_points_plus: None,
            glue_points_minus: None,
            crossing_points_plus: pp,
            crossing_points_minus: pm,
            in_j_plus: false,
            in_j_minus: false,
        };
        if comp.is_exceptional() {
            if comp.n % 2 == 1 {
                cc.beta_plus = u_plus(1 - k);
                cc.beta_minus = u_plus(1 - k);
                cc.in_j_plus = true;
                cc.in_j_minus = true;
            } else {
                let circle = model
                    .circle(id)
                    .ok_or_else(|| Error::Resolution(format!("missing sign data for E{}", id)))?;
                let ds: Vec<u64> = circle.finite.iter().map(|m| m.d).collect();
                for eps in [1i8, -1] {
                    let cnt = count_cover(comp.n, &circle.arc_signs, &ds, circle.d_inf, true, eps)?;
                    let crossing_pts = if eps > 0 { pp } else { pm };
                    let glued = if circle.infinity.is_none() { cnt.points - cnt.seam } else { cnt.points };
                    let beta = u_plus(1).scale(&BigInt::from(cnt.c)).sub(&LaurentPoly::from_coeffs(&[crossing_pts as i64]));
                    if eps > 0 {
                        cc.c_plus = Some(cnt.c);
                        cc.glue_points_plus = Some(glued);
                        cc.beta_plus = beta;
                        cc.in_j_plus = circle.has_sign(1);
                    } else {
                        cc.c_minus = Some(cnt.c);
                        cc.glue_points_minus = Some(glued);
                        cc.beta_minus = beta;
                        cc.in_j_minus = circle.has_sign(-1);
                    }
                }
            }
        } else {
            let (plus, minus) = strict_membership(model, id);
            cc.in_j_plus = plus;
            cc.in_j_minus = minus;
        }
        if cc.in_j_plus {
            j_plus.insert(id);
        }
        if cc.in_j_minus {
            j_minus.insert(id);
        }
        components.push(cc);
    }
    Ok(CoverSummary { components, crossings, j_plus, j_minus })
}

fn strict_membership(model: &ResolutionModel, id: usize) -> (bool, bool) {
    let comp = model.component(id);
    if comp.n % 2 == 1 {
        return (true, true);
    }
    let x = model.crossings.iter().find(|x| x.involves(id) && x.realness == Realness::Real);
    let sign = match x {
        Some(x) => {
            let partner = model.component(x.other(id).unwrap());
            if partner.n % 2 == 1 {
                return (true, true);
            }
            x.unit_sign.unwrap_or(1)
        }
        None => model.origin_sign.unwrap_or(1),
    };
    (sign > 0, sign < 0)
}
