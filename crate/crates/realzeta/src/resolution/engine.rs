use super::{
    BadReason, BlowupRecord, CircleCoord, Component, ComponentKind, Crossing, Germ, MarkedPoint, RealCircle, Realness,
    ResolutionModel,
};
use crate::algebraic::extend::{embed, factor_over, norm, roots_of_irreducible, KPoly, RootInExtension};
use crate::algebraic::{Nf, NfElem, RealAlg};
use crate::arith::{gcd_u64, BiPoly, Field, UniPoly};
use crate::Error;
use num_traits::{One, Zero};

const MAX_DEPTH: usize = 64;
const STRICT_BASE: usize = 1_000_000;

/// Where to put one additional blowup, producing a non-minimal model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraBlowup {
    None,
    /// A generic real point of the first real exceptional curve (the origin if there is none).
    GenericPoint,
    /// The first real point reached that is already good.
    FirstGoodPoint,
}

#[derive(Clone)]
struct Axis {
    comp: usize,
    n: u64,
    nu: u64,
    coord: String,
}

#[derive(Clone)]
struct LocalFactor {
    g: BiPoly<NfElem>,
    e: u64,
    tag: usize,
}

#[derive(Clone)]
struct Local {
    field: Option<Nf>,
    real: bool,
    weight: u64,
    ax: Option<Axis>,
    ay: Option<Axis>,
    factors: Vec<LocalFactor>,
    unit: NfElem,
    depth: usize,
    parent: Option<usize>,
    center: String,
    force: bool,
}

/// Crossing indices assigned to the axes present at a point.
#[derive(Default)]
struct Outcome {
    ax: Option<usize>,
    ay: Option<usize>,
}

enum Verdict {
    Good,
    Bad(BadReason),
}

pub(crate) struct Resolver {
    exc: Vec<Component>,
    strict: Vec<Component>,
    crossings: Vec<Crossing>,
    circles: Vec<RealCircle>,
    blowups: Vec<BlowupRecord>,
    extra: ExtraBlowup,
    extra_done: bool,
    branch_count: Vec<usize>,
    origin_sign: Option<i8>,
}

fn powf(a: &NfElem, e: u64) -> NfElem {
    let mut r = NfElem::one();
    for _ in 0..e {
        r = r * a.clone();
    }
    r
}

fn field_degree(k: &Option<Nf>) -> usize {
    k.as_ref().map_or(1, |nf| nf.degree())
}

fn describe_field(k: &Option<Nf>) -> String {
    match k {
        None => "Q".into(),
        Some(nf) => nf.describe(),
    }
}

fn real_alg(e: &NfElem) -> RealAlg {
    match e.as_q() {
        Some(r) => RealAlg::Rational(r),
        None => RealAlg::Field(e.clone()),
    }
}

fn linear_coeffs(g: &BiPoly<NfElem>) -> (NfElem, NfElem) {
    (g.coeff(1, 0), g.coeff(0, 1))
}

fn normalizer(a: &NfElem, b: &NfElem) -> NfElem {
    if b.is_zero() {
        a.clone()
    } else {
        b.clone()
    }
}

impl Resolver {
    pub(crate) fn run(germ: &Germ, extra: ExtraBlowup) -> Result<ResolutionModel, Error> {
        let mut r = Resolver {
            exc: Vec::new(),
            strict: Vec::new(),
            crossings: Vec::new(),
            circles: Vec::new(),
            blowups: Vec::new(),
            extra,
            extra_done: false,
            branch_count: vec![0; germ.factors.len()],
            origin_sign: None,
        };
        let mut unit = NfElem::rational(germ.unit.clone());
        let mut factors = Vec::new();
        for (k, (g, e)) in germ.factors.iter().enumerate() {
            if g.vanishes_at_origin() {
                factors.push(LocalFactor { g: g.map(|c| NfElem::rational(c.clone())), e: *e as u64, tag: k });
            } else {
                unit = unit * powf(&NfElem::rational(g.constant_term()), *e as u64);
            }
        }
        let st = Local {
            field: None,
            real: true,
            weight: 1,
            ax: None,
            ay: None,
            factors,
            unit,
            depth: 0,
            parent: None,
            center: "origin".into(),
            force: false,
        };
        let identity = matches!(r.verdict(&st)?, Verdict::Good);
        r.process(st)?;
        Ok(r.finish(germ, identity))
    }

    fn finish(self, germ: &Germ, identity: bool) -> ResolutionModel {
        let identity = identity && self.blowups.is_empty();
        let ne = self.exc.len();
        let map = |id: usize| if id >= STRICT_BASE { id - STRICT_BASE + ne + 1 } else { id };
        let mut components = self.exc;
        for mut c in self.strict {
            c.id = map(c.id);
            components.push(c);
        }
        let crossings = self
            .crossings
            .into_iter()
            .map(|mut c| {
                c.a = map(c.a);
                c.b = map(c.b);
                c
            })
            .collect();
        let circles = self
            .circles
            .into_iter()
            .map(|mut c| {
                for m in c.finite.iter_mut().chain(c.infinity.iter_mut()) {
                    m.partner = map(m.partner);
                }
                c
            })
            .collect();
        ResolutionModel {
            germ_display: germ.display(),
            components,
            crossings,
            circles,
            blowups: self.blowups,
            identity,
            minimal: self.extra == ExtraBlowup::None,
            origin_sign: self.origin_sign,
        }
    }

    fn comp_n(&self, id: usize) -> u64 {
        if id >= STRICT_BASE {
            self.strict[id - STRICT_BASE].n
        } else {
            self.exc[id - 1].n
        }
    }

    fn verdict(&self, st: &Local) -> Result<Verdict, Error> {
        let axes = u32::from(st.ax.is_some()) + u32::from(st.ay.is_some());
        let mult: u32 = axes + st.factors.iter().map(|f| f.g.mult()).sum::<u32>();
        if mult >= 3 {
            return Ok(Verdict::Bad(BadReason::TripleOrWorse));
        }
        if mult <= 1 {
            return Ok(Verdict::Good);
        }
        if let [f] = st.factors.as_slice() {
            if f.g.mult() == 2 {
                let (a, b, c) = (f.g.coeff(2, 0), f.g.coeff(1, 1), f.g.coeff(0, 2));
                let disc = b.clone() * b - NfElem::from_i64(4) * a * c;
                if disc.is_zero() {
                    return Ok(Verdict::Bad(BadReason::SingularBranch));
                }
                if !st.real {
                    return Err(Error::Resolution("ordinary double point over a non-real field".into()));
                }
                return Ok(if disc.sign() < 0 { Verdict::Bad(BadReason::SingularBranch) } else { Verdict::Good });
            }
        }
        let mut lines: Vec<(NfElem, NfElem)> = Vec::new();
        if st.ax.is_some() {
            lines.push((NfElem::one(), NfElem::zero()));
        }
        if st.ay.is_some() {
            lines.push((NfElem::zero(), NfElem::one()));
        }
        for f in &st.factors {
            lines.push(linear_coeffs(&f.g));
        }
        let det = lines[0].0.clone() * lines[1].1.clone() - lines[0].1.clone() * lines[1].0.clone();
        Ok(if det.is_zero() { Verdict::Bad(BadReason::Tangency) } else { Verdict::Good })
    }

    fn process(&mut self, st: Local) -> Result<Outcome, Error> {
        if st.depth > MAX_DEPTH {
            return Err(Error::Resolution(format!("resolution did not terminate within {} blowups", MAX_DEPTH)));
        }
        if st.force {
            return self.blowup(st, BadReason::Forced);
        }
        match self.verdict(&st)? {
            Verdict::Bad(reason) => self.blowup(st, reason),
            Verdict::Good => {
                let force = !self.extra_done
                    && st.real
                    && match self.extra {
                        ExtraBlowup::None => false,
                        ExtraBlowup::FirstGoodPoint => true,
                        ExtraBlowup::GenericPoint => st.depth == 0,
                    };
                if force {
                    self.extra_done = true;
                    return self.blowup(st, BadReason::Forced);
                }
                Ok(self.good_point(&st))
            }
        }
    }

    fn new_strict(&mut self, st: &Local, f: &LocalFactor) -> usize {
        self.branch_count[f.tag] += 1;
        let id = STRICT_BASE + self.strict.len();
        self.strict.push(Component {
            id,
            kind: ComponentKind::StrictBranch,
            nu: 1,
            n: f.e,
            realness: if st.real { Realness::Real } else { Realness::ComplexPair },
            weight: st.weight,
            creation_step: None,
            branch_tag: Some(format!("f{}.{}", f.tag + 1, self.branch_count[f.tag])),
            field_degree: field_degree(&st.field),
        });
        id
    }

    fn cross(&mut self, st: &Local, a: (usize, Option<String>), b: (usize, Option<String>), u: &NfElem) -> usize {
        let gcd = gcd_u64(self.comp_n(a.0), self.comp_n(b.0));
        self.crossings.push(Crossing {
            a: a.0,
            b: b.0,
            realness: if st.real { Realness::Real } else { Realness::ComplexPair },
            weight: st.weight,
            coord_a: a.1,
            coord_b: b.1,
            unit_sign: if st.real { Some(u.sign()) } else { None },
            gcd,
        });
        self.crossings.len() - 1
    }

    fn good_point(&mut self, st: &Local) -> Outcome {
        let axis = |a: &Axis| (a.comp, Some(a.coord.clone()));
        match (&st.ax, &st.ay, st.factors.as_slice()) {
            (Some(ax), Some(ay), []) => {
                let c = self.cross(st, axis(ax), axis(ay), &st.unit);
                Outcome { ax: Some(c), ay: Some(c) }
            }
            (Some(ax), None, [f]) => {
                let s = self.new_strict(st, f);
                let (_, b) = linear_coeffs(&f.g);
                let u = st.unit.clone() * powf(&b, f.e);
                let c = self.cross(st, axis(ax), (s, None), &u);
                Outcome { ax: Some(c), ay: None }
            }
            (None, Some(ay), [f]) => {
                let s = self.new_strict(st, f);
                let (a, b) = linear_coeffs(&f.g);
                let u = st.unit.clone() * powf(&normalizer(&a, &b), f.e);
                let c = self.cross(st, axis(ay), (s, None), &u);
                Outcome { ax: None, ay: Some(c) }
            }
            (None, None, [f1, f2]) => {
                let s1 = self.new_strict(st, f1);
                let s2 = self.new_strict(st, f2);
                let (a1, b1) = linear_coeffs(&f1.g);
                let (a2, b2) = linear_coeffs(&f2.g);
                let u = st.unit.clone() * powf(&normalizer(&a1, &b1), f1.e) * powf(&normalizer(&a2, &b2), f2.e);
                self.cross(st, (s1, None), (s2, None), &u);
                Outcome::default()
            }
            (None, None, [f]) if f.g.mult() == 2 => {
                // ordinary real node of one factor: two branches
                let s1 = self.new_strict(st, f);
                let s2 = self.new_strict(st, f);
                let (b, c) = (f.g.coeff(1, 1), f.g.coeff(0, 2));
                let u = st.unit.clone() * powf(&normalizer(&b, &c), f.e);
                self.cross(st, (s1, None), (s2, None), &u);
                Outcome::default()
            }
            (None, None, [f]) => {
                if st.depth == 0 {
                    self.origin_sign = Some(st.unit.sign());
                }
                self.new_strict(st, f);
                Outcome::default()
            }
            _ => Outcome::default(),
        }
    }

    fn blowup(&mut self, st: Local, reason: BadReason) -> Result<Outcome, Error> {
        let (n_ax, nu_ax) = st.ax.as_ref().map_or((0, 1), |a| (a.n, a.nu));
        let (n_ay, nu_ay) = st.ay.as_ref().map_or((0, 1), |a| (a.n, a.nu));
        let m_sum: u64 = st.factors.iter().map(|f| f.e * f.g.mult() as u64).sum();
        let n_new = n_ax + n_ay + m_sum;
        let nu_new = 2 + (nu_ax - 1) + (nu_ay - 1);
        let comp = self.exc.len() + 1;
        let mult = u32::from(st.ax.is_some()) + u32::from(st.ay.is_some()) + st.factors.iter().map(|f| f.g.mult()).sum::<u32>();
        self.exc.push(Component {
            id: comp,
            kind: ComponentKind::Exceptional,
            nu: nu_new,
            n: n_new,
            realness: if st.real { Realness::Real } else { Realness::ComplexPair },
            weight: st.weight,
            creation_step: Some(self.blowups.len()),
            branch_tag: None,
            field_degree: field_degree(&st.field),
        });
        let bidx = self.blowups.len();
        self.blowups.push(BlowupRecord {
            index: bidx,
            parent: st.parent,
            component: comp,
            center: st.center.clone(),
            field: describe_field(&st.field),
            real: st.real,
            weight: st.weight,
            reason,
            multiplicity: mult,
        });

        // restriction of the unit part to the new curve in chart 1
        let inits: Vec<KPoly> = st.factors.iter().map(|f| f.g.initial_form().dehomog_x1()).collect();
        let v = UniPoly::<NfElem>::x();
        let mut rv = UniPoly::constant(st.unit.clone()) * v.pow(n_ay as u32);
        for (i, f) in inits.iter().zip(&st.factors) {
            rv = &rv * &i.pow(f.e as u32);
        }
        let mut irr: Vec<KPoly> = Vec::new();
        if st.ay.is_some() {
            irr.push(v.clone());
        }
        for i in &inits {
            if i.deg() == 0 {
                continue;
            }
            for (q, _) in factor_over(&st.field, i)? {
                let q = q.monic();
                if !irr.contains(&q) {
                    irr.push(q);
                }
            }
        }

        let mut finite = Vec::new();
        let mut ay_out = None;
        for q in &irr {
            let is_v = *q == v;
            let d_q: u64 = if is_v { n_ay } else { 0 }
                + inits.iter().zip(&st.factors).map(|(i, f)| f.e * i.multiplicity_of(q) as u64).sum::<u64>();
            for root in roots_of_irreducible(&st.field, q, st.real)? {
                let coord = if root.real && st.real {
                    real_alg(&root.theta).to_string()
                } else {
                    format!("root of {}", norm(&st.field, q).fmt_var("v"))
                };
                let child = self.chart1_child(&st, &root, is_v, comp, n_new, nu_new, coord, bidx);
                let real = child.real;
                let out = self.process(child)?;
                if is_v {
                    ay_out = out.ay;
                }
                if real {
                    let c = out.ax.ok_or_else(|| Error::Resolution("special point without crossing".into()))?;
                    finite.push(MarkedPoint {
                        coord: CircleCoord::Finite(real_alg(&root.theta)),
                        d: d_q,
                        crossing: c,
                        partner: self.crossings[c].other(comp).unwrap(),
                    });
                }
            }
        }

        if st.real && self.extra == ExtraBlowup::GenericPoint && !self.extra_done {
            self.extra_done = true;
            let mut t = 1i64;
            let theta = loop {
                let cand = NfElem::from_i64(t);
                if !rv.eval(&cand).is_zero() {
                    break cand;
                }
                t = if t > 0 { -t } else { -t + 1 };
            };
            let root = RootInExtension { field: st.field.clone(), alpha: None, theta: theta.clone(), real: true, multiplicity_of_orbit: 1 };
            let mut child = self.chart1_child(&st, &root, false, comp, n_new, nu_new, real_alg(&theta).to_string(), bidx);
            child.force = true;
            let out = self.process(child)?;
            let c = out.ax.ok_or_else(|| Error::Resolution("forced point without crossing".into()))?;
            finite.push(MarkedPoint {
                coord: CircleCoord::Finite(real_alg(&theta)),
                d: 0,
                crossing: c,
                partner: self.crossings[c].other(comp).unwrap(),
            });
        }

        let d_inf = n_new - rv.deg() as u64;
        let mut ax_out = None;
        let mut infinity = None;
        if st.ax.is_some() || d_inf > 0 {
            let child = self.chart2_child(&st, comp, n_new, nu_new, bidx);
            let out = self.process(child)?;
            ax_out = out.ax;
            if st.real {
                let c = out.ay.ok_or_else(|| Error::Resolution("point at infinity without crossing".into()))?;
                infinity = Some(MarkedPoint {
                    coord: CircleCoord::Infinity,
                    d: d_inf,
                    crossing: c,
                    partner: self.crossings[c].other(comp).unwrap(),
                });
            }
        }

        if st.real {
            finite.sort_by(|a, b| match (&a.coord, &b.coord) {
                (CircleCoord::Finite(x), CircleCoord::Finite(y)) => x.cmp_real(y),
                _ => std::cmp::Ordering::Equal,
            });
            let pts: Vec<RealAlg> = finite
                .iter()
                .map(|m| match &m.coord {
                    CircleCoord::Finite(x) => x.clone(),
                    CircleCoord::Infinity => unreachable!(),
                })
                .collect();
            let mut samples = Vec::new();
            if pts.is_empty() {
                samples.push(crate::arith::q(0));
            } else {
                samples.push(pts[0].sample_beyond(false));
                for w in pts.windows(2) {
                    samples.push(w[0].sample_between(&w[1]));
                }
                samples.push(pts[pts.len() - 1].sample_beyond(true));
            }
            let arc_signs = samples.iter().map(|s| rv.eval(&NfElem::rational(s.clone())).sign()).collect();
            self.circles.push(RealCircle { component: comp, n: n_new, finite, infinity, d_inf, arc_signs });
        }
        Ok(Outcome { ax: ax_out, ay: ay_out })
    }

    #[allow(clippy::too_many_arguments)]
    fn chart1_child(
        &self,
        st: &Local,
        root: &RootInExtension,
        is_v: bool,
        comp: usize,
        n_new: u64,
        nu_new: u64,
        coord: String,
        bidx: usize,
    ) -> Local {
        let map = |e: &NfElem| match &root.alpha {
            Some(a) => embed(e, a),
            None => e.clone(),
        };
        let theta = root.theta.clone();
        let mut unit = map(&st.unit);
        let mut factors = Vec::new();
        for f in &st.factors {
            let g = f.g.chart1().map(|c| map(c)).shift_y(&theta);
            let c0 = g.constant_term();
            if c0.is_zero() {
                factors.push(LocalFactor { g, e: f.e, tag: f.tag });
            } else {
                unit = unit * powf(&c0, f.e);
            }
        }
        let ay = if is_v {
            st.ay.clone()
        } else {
            if let Some(a) = &st.ay {
                unit = unit * powf(&theta, a.n);
            }
            None
        };
        let label = format!("E{}", comp);
        Local {
            field: root.field.clone(),
            real: st.real && root.real,
            weight: st.weight * root.multiplicity_of_orbit as u64,
            ax: Some(Axis { comp, n: n_new, nu: nu_new, coord: coord.clone() }),
            ay,
            factors,
            unit,
            depth: st.depth + 1,
            parent: Some(bidx),
            center: format!("{} at v = {}", label, coord),
            force: false,
        }
    }

    fn chart2_child(&self, st: &Local, comp: usize, n_new: u64, nu_new: u64, bidx: usize) -> Local {
        let mut unit = st.unit.clone();
        let mut factors = Vec::new();
        for f in &st.factors {
            let g = f.g.chart2();
            let c0 = g.constant_term();
            if c0.is_zero() {
                factors.push(LocalFactor { g, e: f.e, tag: f.tag });
            } else {
                unit = unit * powf(&c0, f.e);
            }
        }
        Local {
            field: st.field.clone(),
            real: st.real,
            weight: st.weight,
            ax: st.ax.clone(),
            ay: Some(Axis { comp, n: n_new, nu: nu_new, coord: "inf".into() }),
            factors,
            unit,
            depth: st.depth + 1,
            parent: Some(bidx),
            center: format!("E{} at v = inf", comp),
            force: false,
        }
    }
}
