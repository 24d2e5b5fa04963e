use super::{all_pole_sets, Level, Pipeline};
use crate::arith::{LaurentPoly, Q};
use crate::covering::cover_summary;
use crate::dual_graph::build_graph;
use crate::monodromy::{char_polys_origin, eigenvalue_witness};
use crate::resolution::{resolve_with_extra, ExtraBlowup, ResolutionModel};
use crate::zeta::{
    contributions, dl_datum, locations, poles_beta, poles_top, predicted_poles, ratio, special_shape, z_beta,
    z_top, Contribution, DLDatum, Mode, PredictionTag,
};
use crate::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// A stated closed form disagrees with the general formula; the general one is kept.
    Flagged,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flagged => "FLAGGED",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Default)]
struct Log(Vec<CheckResult>);

impl Log {
    fn push(&mut self, name: &str, status: Status, detail: impl Into<String>) {
        self.0.push(CheckResult { name: name.into(), status, detail: detail.into() });
    }

    /// PASS when `failures` is empty, otherwise FAIL listing them.
    fn verdict(&mut self, name: &str, failures: Vec<String>, ok_detail: impl Into<String>) {
        if failures.is_empty() {
            self.push(name, Status::Pass, ok_detail);
        } else {
            self.push(name, Status::Fail, failures.join("; "));
        }
    }
}

fn set_str(s: &BTreeSet<Q>) -> String {
    let v: Vec<String> = s.iter().rev().map(crate::arith::fmt_q).collect();
    format!("{{{}}}", v.join(", "))
}

const BETA_MODES: [Mode; 3] = [Mode::Naive, Mode::Plus, Mode::Minus];

/// alpha_j = nu_j - (nu_i/N_i) N_j for the partner j of a crossing on E_i.
fn alpha(model: &ResolutionModel, i: usize, j: usize) -> Q {
    let ci = model.component(i);
    let cj = model.component(j);
    Q::from_integer(BigInt::from(cj.nu)) - ci.ratio() * Q::from_integer(BigInt::from(cj.n))
}

fn resolution_checks(p: &Pipeline, log: &mut Log) {
    let m = &p.model;
    let mut sum_fail = Vec::new();
    let mut range_fail = Vec::new();
    for e in m.exceptional() {
        let total = m.intersection_total(e.id);
        let mut sum = Q::zero();
        for x in m.crossings_of(e.id) {
            let j = x.other(e.id).unwrap();
            let a = alpha(m, e.id, j);
            let per_copy = Q::new(BigInt::from(x.weight), BigInt::from(e.weight));
            sum += a.clone() * per_copy;
            let lo = -Q::one();
            if a < lo || a >= Q::one() || ((a == lo) != (total == 1)) {
                range_fail.push(format!("E{}: alpha for E{} is {}", e.id, j, a));
            }
        }
        let want = Q::from_integer(BigInt::from(total as i64 - 2));
        if sum != want {
            sum_fail.push(format!("E{}: sum {} != {}", e.id, sum, want));
        }
    }
    log.verdict("resolution.alpha-sum", sum_fail, "weighted alpha sums equal k + 2r - 2");
    if m.minimal {
        log.verdict("resolution.alpha-range", range_fail, "-1 <= alpha < 1, with -1 only for a single neighbor");
    } else {
        log.push("resolution.alpha-range", Status::Skip, "model is not minimal");
    }

    let mut strict_fail = Vec::new();
    if !m.identity {
        for s in m.strict() {
            let xs: Vec<_> = m.crossings_of(s.id).collect();
            let ok = xs.len() == 1
                && m.component(xs[0].other(s.id).unwrap()).is_exceptional()
                && xs[0].weight == s.weight;
            if !ok {
                strict_fail.push(format!("E{} meets {} components", s.id, xs.len()));
            }
        }
    }
    log.verdict("resolution.strict-branches", strict_fail, "each branch meets one exceptional curve transversally");

    let mut parity_fail = Vec::new();
    for c in &m.circles {
        if c.n % 2 == 1 {
            continue;
        }
        let arcs = c.arc_signs.len();
        for (j, mp) in c.finite.iter().enumerate() {
            if (c.arc_signs[j] == c.arc_signs[j + 1]) != (mp.d % 2 == 0) {
                parity_fail.push(format!("E{} at marked point {}", c.component, j + 1));
            }
        }
        if (c.arc_signs[arcs - 1] == c.arc_signs[0]) != (c.d_inf % 2 == 0) {
            parity_fail.push(format!("E{} at infinity", c.component));
        }
    }
    log.verdict("resolution.arc-parity", parity_fail, "arc signs flip exactly at odd vanishing orders");
}

fn graph_checks(p: &Pipeline, log: &mut Log) {
    let g = &p.graph;
    let tree = g.is_tree();
    log.push(
        "graph.tree",
        if tree { Status::Pass } else { Status::Fail },
        format!("{} vertices, {} edges", g.vertices.len(), g.edges.len()),
    );
    let conn = g.minimal_connected();
    log.push(
        "graph.minimal-connected",
        if conn { Status::Pass } else { Status::Fail },
        format!("minimal set {:?}", g.minimal),
    );
    match g.monotonicity_check() {
        Ok(()) => log.push("graph.monotone-exits", Status::Pass, "ratios increase along paths leaving the minimal set"),
        Err(path) => log.push("graph.monotone-exits", Status::Fail, format!("path {:?}", path)),
    }
    match g.local_ordering_check() {
        Ok(()) => log.push("graph.local-ordering", Status::Pass, "at most one smaller neighbor, all others larger"),
        Err(v) => log.push("graph.local-ordering", Status::Fail, format!("vertex E{}", v)),
    }
}

fn covering_checks(p: &Pipeline, log: &mut Log) {
    let m = &p.model;
    let mut glue_fail = Vec::new();
    let mut euler_fail = Vec::new();
    let mut odd_fail = Vec::new();
    let mut deg2_fail = Vec::new();
    let neg_one = -Q::one();
    for cc in &p.cover.components {
        let c = m.component(cc.id);
        if !c.is_exceptional() {
            continue;
        }
        let k = m.real_crossing_count(c.id) as i64;
        let naive = LaurentPoly::from_coeffs(&[1 - k, 1]);
        if c.n % 2 == 1 {
            if cc.beta_plus != naive || cc.beta_minus != naive {
                odd_fail.push(format!("E{}", c.id));
            }
            continue;
        }
        if cc.glue_points_plus != Some(cc.crossing_points_plus) || cc.glue_points_minus != Some(cc.crossing_points_minus) {
            glue_fail.push(format!("E{}", c.id));
        }
        for (b, pts) in [(&cc.beta_plus, cc.crossing_points_plus), (&cc.beta_minus, cc.crossing_points_minus)] {
            if b.eval_q(&neg_one) != -Q::from_integer(BigInt::from(pts)) {
                euler_fail.push(format!("E{}", c.id));
            }
        }
        {
            // compactly supported Euler characteristics; point counts at u = 1 do not add up over open arcs
            let lhs = naive.eval_q(&neg_one) * Q::from_integer(BigInt::from(2));
            let rhs = cc.beta_plus.eval_q(&neg_one) + cc.beta_minus.eval_q(&neg_one);
            if lhs != rhs {
                deg2_fail.push(format!("E{}: {} != {}", c.id, lhs, rhs));
            }
        }
    }
    let mut pts_fail = Vec::new();
    for xc in &p.cover.crossings {
        let x = &m.crossings[xc.index];
        let ok = if x.gcd.is_multiple_of(2) {
            xc.points_plus + xc.points_minus == 2
        } else {
            xc.points_plus == 1 && xc.points_minus == 1
        };
        if !ok {
            pts_fail.push(format!("E{}-E{}", x.a, x.b));
        }
    }
    log.verdict("covering.glue-points", glue_fail, "normalization points match crossing points");
    log.verdict("covering.crossing-points", pts_fail, "two points for even gcd split by sign, one each for odd gcd");
    log.verdict("covering.odd-n", odd_fail, "odd-N covers equal the naive stratum");
    log.verdict("covering.euler", euler_fail, "beta at u = -1 equals minus the point count");
    log.verdict("covering.degree-two", deg2_fail, "2 chi_c(E) = chi_c(E+) + chi_c(E-)");
}

/// Residue-sum and limit checks shared by model and datum inputs.
/// Contributions and same-ratio collisions of one mode.
type ModeRows = (Vec<Contribution>, Vec<(usize, Q)>);

fn contribution_checks(
    datum: &DLDatum,
    rows: &BTreeMap<Mode, ModeRows>,
    log: &mut Log,
) -> Result<(), Error> {
    let mut limit_fail = Vec::new();
    let mut sum_fail = Vec::new();
    for (&mode, (cs, collisions)) in rows {
        for c in cs {
            let lim = c.r_beta.limit_u_to_1()?;
            if lim != c.r_top {
                limit_fail.push(format!("{} E{}: {} != {}", mode, c.component, lim, c.r_top));
            }
        }
        let poles = poles_top(&z_top(datum, mode));
        let collided: BTreeSet<Q> = collisions.iter().map(|(_, s)| s.clone()).collect();
        let mut grouped: BTreeMap<Q, Q> = BTreeMap::new();
        for c in cs {
            *grouped.entry(c.s0.clone()).or_insert_with(Q::zero) += c.r_top.clone();
        }
        for (s0, sum) in &grouped {
            if collided.contains(s0) {
                continue;
            }
            let res = match poles.iter().find(|p| &p.location == s0) {
                Some(p) if p.order == 1 => p.residue_top.clone().unwrap(),
                Some(_) => continue,
                None => Q::zero(),
            };
            if &res != sum {
                sum_fail.push(format!("{} at {}: residue {} vs contributions {}", mode, s0, res, sum));
            }
        }
    }
    log.verdict("zeta.contribution-limit", limit_fail, "R_beta tends to R_top as u -> 1");
    log.verdict("zeta.residue-sum", sum_fail, "residues equal summed contributions");
    Ok(())
}

fn specialization_check(datum: &DLDatum, log: &mut Log) -> Result<(), Error> {
    let mut fail = Vec::new();
    for mode in BETA_MODES {
        let sets = all_pole_sets(datum, mode)?;
        let (top, beta) = (&sets[0].1, &sets[1].1);
        let ok = if mode == Mode::Naive { top == beta } else { top.is_subset(beta) };
        if !ok {
            fail.push(format!("{}: top {} beta {}", mode, set_str(top), set_str(beta)));
        }
    }
    log.verdict("zeta.specialization", fail, "top poles within beta poles, equal in naive mode");
    Ok(())
}

fn order_two_check(datum: &DLDatum, log: &mut Log) {
    let mut fail = Vec::new();
    for mode in Mode::ALL {
        for p in poles_top(&z_top(datum, mode)).iter().filter(|p| p.order >= 2) {
            let r = -p.location.clone();
            let shared = datum.strata.iter().any(|s| {
                s.factors.len() == 2 && s.factors.iter().all(|&(nu, n)| ratio(nu, n) == r) && (mode == Mode::Complex || s.is_live(mode))
            });
            if !shared {
                fail.push(format!("{} order {} at {}", mode, p.order, p.location));
            }
        }
    }
    log.verdict("zeta.order-two", fail, "higher-order poles come from crossings of equal ratio");
}

pub(crate) fn datum_checks(datum: &DLDatum) -> Result<Vec<CheckResult>, Error> {
    let mut log = Log::default();
    let mut rows = BTreeMap::new();
    for mode in BETA_MODES {
        rows.insert(mode, super::datum_contributions(datum, mode));
    }
    specialization_check(datum, &mut log)?;
    order_two_check(datum, &mut log);
    contribution_checks(datum, &rows, &mut log)?;
    Ok(log.0)
}

fn zeta_checks(p: &Pipeline, log: &mut Log) -> Result<(), Error> {
    let (m, d) = (&p.model, &p.datum);
    let mut rows = BTreeMap::new();
    for mode in BETA_MODES {
        rows.insert(mode, contributions(m, &p.cover, d, mode));
    }
    let top = |mode| locations(&poles_top(&z_top(d, mode)));
    let beta = |mode| -> Result<BTreeSet<Q>, Error> { Ok(locations(&poles_beta(&z_beta(d, mode)?, &d.candidate_poles(mode)))) };

    let naive_top = top(Mode::Naive);
    let naive_beta = beta(Mode::Naive)?;
    let predicted: BTreeSet<Q> = predicted_poles(m, &p.cover, Mode::Naive).into_iter().map(|r| r.location).collect();
    let mut fail = Vec::new();
    if predicted != naive_top {
        fail.push(format!("top {} predicted {}", set_str(&naive_top), set_str(&predicted)));
    }
    if predicted != naive_beta {
        fail.push(format!("beta {} predicted {}", set_str(&naive_beta), set_str(&predicted)));
    }
    log.verdict("zeta.naive-prediction", fail, format!("poles {}", set_str(&naive_top)));

    let real_ratios: BTreeSet<Q> = m.components.iter().filter(|c| c.is_real()).map(|c| -c.ratio()).collect();
    let cx: BTreeSet<Q> = top(Mode::Complex).intersection(&real_ratios).cloned().collect();
    let inducing = |v: &Q| {
        m.components.iter().any(|c| {
            c.is_real() && -c.ratio() == *v && (!c.is_exceptional() || m.intersection_total(c.id) >= 3)
        })
    };
    let extra: BTreeSet<Q> = cx.difference(&naive_top).cloned().collect();
    if cx == naive_top {
        log.push("zeta.complexified", Status::Pass, "naive poles = complexified poles among real candidates");
    } else if naive_top.is_subset(&cx) && !extra.iter().any(inducing) {
        // the complex pole comes from non-real components and only shares its value with a real ratio
        log.push(
            "zeta.complexified",
            Status::Flagged,
            format!("{} coincide with real ratios but are induced by non-real components", set_str(&extra)),
        );
    } else {
        log.push("zeta.complexified", Status::Fail, format!("complex part {} vs {}", set_str(&cx), set_str(&naive_top)));
    }

    let mut incl = Vec::new();
    let mut certain = Vec::new();
    for mode in [Mode::Plus, Mode::Minus] {
        let j = p.cover.j(mode.sign().unwrap());
        let jr: BTreeSet<Q> = j.iter().map(|&i| -m.component(i).ratio()).collect();
        let bound_top: BTreeSet<Q> = naive_top.intersection(&jr).cloned().collect();
        let bound_beta: BTreeSet<Q> = naive_beta.intersection(&jr).cloned().collect();
        let (t, b) = (top(mode), beta(mode)?);
        if !t.is_subset(&bound_top) {
            incl.push(format!("{} top {} not within {}", mode, set_str(&t), set_str(&bound_top)));
        }
        if !b.is_subset(&bound_beta) {
            incl.push(format!("{} beta {} not within {}", mode, set_str(&b), set_str(&bound_beta)));
        }
        for pr in predicted_poles(m, &p.cover, mode).iter().filter(|r| r.tag == PredictionTag::PredictedCertain) {
            if !b.contains(&pr.location) {
                certain.push(format!("{} {}", mode, pr.location));
            }
        }
    }
    log.verdict("zeta.signed-inclusion", incl, "signed poles within naive poles over J+/J- candidates");
    log.verdict("zeta.signed-certain", certain, "unique signed contributors give beta-level poles");

    specialization_check(d, log)?;
    order_two_check(d, log);
    contribution_checks(d, &rows, log)?;

    match special_shape(m) {
        None => log.push("zeta.special-shape", Status::Skip, "general shape"),
        Some(shape) => {
            let mut status = Status::Pass;
            let mut notes = Vec::new();
            for mode in Mode::ALL {
                let (stated, flagged) = shape.closed_form(mode);
                let z = z_top(d, mode);
                if stated != z {
                    if flagged {
                        if status == Status::Pass {
                            status = Status::Flagged;
                        }
                        notes.push(format!("{}: stated {} vs computed {}", mode, stated, z));
                    } else {
                        status = Status::Fail;
                        notes.push(format!("{}: stated {} vs computed {}", mode, stated, z));
                    }
                }
            }
            let detail = if notes.is_empty() { format!("{:?} closed forms agree", shape) } else { notes.join("; ") };
            log.push("zeta.special-shape", status, detail);
        }
    }
    Ok(())
}

/// Same zeta functions and monodromy after one more blowup.
fn independence_checks(p: &Pipeline, log: &mut Log) -> Result<(), Error> {
    let mut fail = Vec::new();
    let mut mono_fail = Vec::new();
    let deg = char_polys_origin(&p.model)?.p1.degree();
    for extra in [ExtraBlowup::GenericPoint, ExtraBlowup::FirstGoodPoint] {
        let m2 = resolve_with_extra(&p.germ, extra)?;
        let c2 = cover_summary(&m2)?;
        let d2 = dl_datum(&m2, &c2)?;
        for mode in Mode::ALL {
            if z_top(&d2, mode) != z_top(&p.datum, mode) {
                fail.push(format!("{:?} {} top", extra, mode));
            }
            if mode.has_beta_level() && !z_beta(&d2, mode)?.same_function(&z_beta(&p.datum, mode)?) {
                fail.push(format!("{:?} {} beta", extra, mode));
            }
        }
        if !build_graph(&m2).is_tree() {
            fail.push(format!("{:?} graph", extra));
        }
        let d2p = char_polys_origin(&m2)?.p1.degree();
        if d2p != deg {
            mono_fail.push(format!("{:?}: degree {} vs {}", extra, d2p, deg));
        }
    }
    log.verdict("resolution.independence", fail, "an extra blowup leaves every zeta function unchanged");
    log.verdict("monodromy.extra-blowup", mono_fail, format!("deg P1 = {}", deg));
    Ok(())
}

fn monodromy_checks(p: &Pipeline, log: &mut Log) -> Result<(), Error> {
    let origin = match char_polys_origin(&p.model) {
        Ok(o) => o,
        Err(e) => {
            log.push("monodromy.polynomial", Status::Fail, e.to_string());
            return Ok(());
        }
    };
    log.push("monodromy.polynomial", Status::Pass, format!("P1 = {}", origin.p1.display_expanded()));
    let mut fail = Vec::new();
    let mut count = 0;
    for mode in Mode::ALL {
        for (level, poles) in all_pole_sets(&p.datum, mode)? {
            for s0 in &poles {
                count += 1;
                if eigenvalue_witness(&p.model, &p.cover, &origin, s0, mode, &poles)?.is_none() {
                    let lv = if level == Level::Top { "top" } else { "beta" };
                    fail.push(format!("{} {} pole {}", mode, lv, s0));
                }
            }
        }
    }
    log.verdict("monodromy.witnesses", fail, format!("{} poles witnessed", count));
    Ok(())
}

pub(crate) fn model_checks(p: &Pipeline) -> Result<Vec<CheckResult>, Error> {
    let mut log = Log::default();
    resolution_checks(p, &mut log);
    graph_checks(p, &mut log);
    covering_checks(p, &mut log);
    zeta_checks(p, &mut log)?;
    independence_checks(p, &mut log)?;
    monodromy_checks(p, &mut log)?;
    Ok(log.0)
}
