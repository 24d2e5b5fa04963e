//! Orchestration: run the full pipeline on one input and collect a
//! deterministic, serializable report with every consistency verdict.

mod checks;
mod render;
pub mod selftest;

use crate::arith::{fmt_q, LaurentFraction, Q};
use crate::covering::{cover_summary, CoverSummary};
use crate::dual_graph::{build_graph, DualGraph};
use crate::monodromy::{char_polys_origin, eigenvalue_witness, SignedRegion, WitnessKind};
use crate::parse::{parse_factor, parse_polynomial};
use crate::resolution::{resolve, Germ, ResolutionModel};
use crate::zeta::{
    contribution, contributions, dl_datum, locations, poles_beta, poles_top, predicted_poles, special_shape, z_beta, z_top,
    DLDatum, Mode, PoleRecord,
};
use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

pub use checks::{CheckResult, Status};
pub use render::{to_dot, to_text};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Poly(String),
    /// `EXPR[:EXP]` items.
    Factored(Vec<String>),
    /// DLDatum JSON text.
    DlJson(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Top,
    Beta,
    All,
}

impl Level {
    fn top(self) -> bool {
        self != Level::Beta
    }
    fn beta(self) -> bool {
        self != Level::Top
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub modes: Vec<Mode>,
    pub level: Level,
    pub series: Option<u32>,
}

impl Default for Options {
    fn default() -> Self {
        Options { modes: Mode::ALL.to_vec(), level: Level::All, series: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ZetaReport {
    pub schema_version: u32,
    pub input: InputEcho,
    pub resolution: Option<ResolutionSummary>,
    pub covering: Option<CoveringSummary>,
    pub dual_graph: Option<GraphSummary>,
    pub zeta: Vec<ZetaSection>,
    pub monodromy: Option<MonodromySummary>,
    pub checks: Vec<CheckResult>,
}

impl ZetaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<ZetaReport, Error> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("report JSON: {}", e)))
    }

    pub fn section(&self, mode: Mode) -> Option<&ZetaSection> {
        self.zeta.iter().find(|s| s.mode == mode)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct InputEcho {
    pub source: String,
    pub text: Vec<String>,
    pub germ: Option<String>,
    pub modes: Vec<Mode>,
    pub level: Level,
    pub series: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ResolutionSummary {
    pub identity: bool,
    pub minimal: bool,
    pub blowups: usize,
    pub components: Vec<ComponentRow>,
    pub crossings: Vec<CrossingRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ComponentRow {
    pub id: usize,
    pub kind: String,
    pub nu: u64,
    pub n: u64,
    pub real: bool,
    pub weight: u64,
    pub intersection_total: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CrossingRow {
    pub a: usize,
    pub b: usize,
    pub real: bool,
    pub weight: u64,
    pub gcd: u64,
    pub unit_sign: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CoverRow {
    pub id: usize,
    pub beta_plus: String,
    pub beta_minus: String,
    pub c_plus: Option<u64>,
    pub c_minus: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CoveringSummary {
    pub components: Vec<CoverRow>,
    pub j_plus: Vec<usize>,
    pub j_minus: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct VertexRow {
    pub id: usize,
    pub nu: u64,
    pub n: u64,
    pub strict: bool,
    pub ratio: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct GraphSummary {
    pub vertices: Vec<VertexRow>,
    pub edges: Vec<(usize, usize)>,
    pub minimal: Vec<usize>,
}

impl GraphSummary {
    fn from_graph(g: &DualGraph) -> Self {
        GraphSummary {
            vertices: g
                .vertices
                .iter()
                .map(|v| VertexRow { id: v.id, nu: v.nu, n: v.n, strict: v.strict, ratio: fmt_q(&v.ratio) })
                .collect(),
            edges: g.edges.clone(),
            minimal: g.minimal.iter().copied().collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct PoleRow {
    pub location: String,
    pub order: usize,
    pub residue: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct LevelSection {
    pub function: String,
    pub poles: Vec<PoleRow>,
    pub series: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct PredictionRow {
    pub location: String,
    pub tag: String,
    pub sources: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ContributionRow {
    pub component: usize,
    pub s0: String,
    pub r_top: String,
    pub r_beta: String,
    pub intersection_total: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CollisionRow {
    pub component: usize,
    pub s0: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SpecialRow {
    pub shape: String,
    pub stated: String,
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ZetaSection {
    pub mode: Mode,
    pub top: Option<LevelSection>,
    pub beta: Option<LevelSection>,
    pub candidates: Vec<String>,
    pub predicted: Vec<PredictionRow>,
    pub contributions: Vec<ContributionRow>,
    pub collisions: Vec<CollisionRow>,
    pub special: Option<SpecialRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct WitnessRow {
    pub mode: Mode,
    pub level: Level,
    pub pole: String,
    pub q: u64,
    pub kind: Option<String>,
    pub region: Option<String>,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct MonodromySummary {
    pub zeta0: String,
    pub p0: String,
    pub p1: String,
    pub p1_expanded: String,
    pub degree_p1: i64,
    pub witnesses: Vec<WitnessRow>,
}

/// Everything computed for a germ, kept for checks and rendering.
pub(crate) struct Pipeline {
    pub germ: Germ,
    pub model: ResolutionModel,
    pub cover: CoverSummary,
    pub datum: DLDatum,
    pub graph: DualGraph,
}

impl Pipeline {
    pub fn new(germ: Germ) -> Result<Pipeline, Error> {
        let model = resolve(&germ)?;
        let cover = cover_summary(&model)?;
        let datum = dl_datum(&model, &cover)?;
        let graph = build_graph(&model);
        Ok(Pipeline { germ, model, cover, datum, graph })
    }
}

pub fn germ_from_input(input: &Input) -> Result<Germ, Error> {
    match input {
        Input::Poly(t) => Germ::from_poly(&parse_polynomial(t)?),
        Input::Factored(items) => {
            if items.is_empty() {
                return Err(Error::Input("empty factor list".into()));
            }
            let list = items.iter().map(|s| parse_factor(s)).collect::<Result<Vec<_>, _>>()?;
            Germ::from_factors(&list)
        }
        Input::DlJson(_) => Err(Error::Input("a DLDatum has no germ".into())),
    }
}

fn pole_rows(p: &[PoleRecord]) -> Vec<PoleRow> {
    p.iter()
        .map(|r| PoleRow {
            location: fmt_q(&r.location),
            order: r.order,
            residue: r
                .residue_top
                .as_ref()
                .map(fmt_q)
                .or_else(|| r.residue_beta.as_ref().map(|b| b.to_string())),
        })
        .collect()
}

/// Sum of beta-level contributions grouped by candidate location.
fn grouped_beta(rows: &[crate::zeta::Contribution]) -> BTreeMap<Q, LaurentFraction> {
    let mut m: BTreeMap<Q, LaurentFraction> = BTreeMap::new();
    for c in rows {
        let e = m.entry(c.s0.clone()).or_insert_with(LaurentFraction::zero);
        *e = e.add(&c.r_beta);
    }
    m
}

fn contribution_rows(rows: &[crate::zeta::Contribution]) -> Vec<ContributionRow> {
    rows.iter()
        .map(|c| ContributionRow {
            component: c.component,
            s0: fmt_q(&c.s0),
            r_top: fmt_q(&c.r_top),
            r_beta: c.r_beta.to_string(),
            intersection_total: c.intersection_total,
        })
        .collect()
}

fn series_rows(z: &crate::arith::ZetaBetaFunction, n: Option<u32>) -> Vec<String> {
    match n {
        None => Vec::new(),
        Some(n) => z.series(n).iter().map(|c| c.to_string()).collect(),
    }
}

fn datum_contributions(datum: &DLDatum, mode: Mode) -> (Vec<crate::zeta::Contribution>, Vec<(usize, Q)>) {
    let mut ids = BTreeSet::new();
    for s in datum.strata.iter().filter(|s| s.is_live(mode)) {
        ids.extend(s.components.iter().copied());
    }
    let mut out = Vec::new();
    let mut collisions = Vec::new();
    for id in ids {
        match contribution(datum, id, mode) {
            Ok(c) => out.push(c),
            Err(_) => {
                let (nu, n) = datum
                    .strata
                    .iter()
                    .find_map(|s| s.components.iter().position(|&c| c == id).map(|k| s.factors[k]))
                    .unwrap();
                collisions.push((id, -crate::zeta::ratio(nu, n)));
            }
        }
    }
    (out, collisions)
}

fn section(
    datum: &DLDatum,
    pipe: Option<&Pipeline>,
    mode: Mode,
    opts: &Options,
) -> Result<ZetaSection, Error> {
    let (contribs, collisions) = if mode.has_beta_level() {
        match pipe {
            Some(p) => contributions(&p.model, &p.cover, datum, mode),
            None => datum_contributions(datum, mode),
        }
    } else {
        (Vec::new(), Vec::new())
    };
    let top = if opts.level.top() {
        let z = z_top(datum, mode);
        Some(LevelSection { function: z.to_string(), poles: pole_rows(&poles_top(&z)), series: Vec::new() })
    } else {
        None
    };
    let beta = if opts.level.beta() && mode.has_beta_level() {
        let z = z_beta(datum, mode)?;
        let mut poles = poles_beta(&z, &datum.candidate_poles(mode));
        let grouped = grouped_beta(&contribs);
        for p in poles.iter_mut().filter(|p| p.order == 1) {
            p.residue_beta = grouped.get(&p.location).cloned();
        }
        Some(LevelSection { function: z.to_string(), poles: pole_rows(&poles), series: series_rows(&z, opts.series) })
    } else {
        None
    };
    let predicted = match pipe {
        Some(p) => predicted_poles(&p.model, &p.cover, mode)
            .into_iter()
            .map(|r| PredictionRow { location: fmt_q(&r.location), tag: r.tag.as_str().into(), sources: r.sources })
            .collect(),
        None => Vec::new(),
    };
    let special = pipe.and_then(|p| special_shape(&p.model)).map(|s| {
        let (f, flagged) = s.closed_form(mode);
        SpecialRow { shape: format!("{:?}", s), stated: f.to_string(), flagged }
    });
    Ok(ZetaSection {
        mode,
        top,
        beta,
        candidates: datum.candidate_poles(mode).iter().map(fmt_q).collect(),
        predicted,
        contributions: contribution_rows(&contribs),
        collisions: collisions.iter().map(|(c, s)| CollisionRow { component: *c, s0: fmt_q(s) }).collect(),
        special,
    })
}

fn monodromy_summary(p: &Pipeline, opts: &Options) -> Result<MonodromySummary, Error> {
    let origin = char_polys_origin(&p.model)?;
    let mut witnesses = Vec::new();
    for &mode in &opts.modes {
        for (level, poles) in all_pole_sets(&p.datum, mode)? {
            if !((level == Level::Top && opts.level.top()) || (level == Level::Beta && opts.level.beta())) {
                continue;
            }
            for s0 in poles.iter().rev() {
                let w = eigenvalue_witness(&p.model, &p.cover, &origin, s0, mode, &poles)?;
                let q = s0.denom().try_into().unwrap_or(0);
                witnesses.push(match w {
                    Some(w) => WitnessRow {
                        mode,
                        level,
                        pole: fmt_q(s0),
                        q,
                        kind: Some(kind_name(w.kind)),
                        region: Some(region_name(w.region).into()),
                        description: w.describe(),
                    },
                    None => WitnessRow {
                        mode,
                        level,
                        pole: fmt_q(s0),
                        q,
                        kind: None,
                        region: None,
                        description: "NOT_FOUND".into(),
                    },
                });
            }
        }
    }
    Ok(MonodromySummary {
        zeta0: origin.zeta.to_string(),
        p0: origin.p0.display_expanded(),
        p1: origin.p1.to_string(),
        p1_expanded: origin.p1.display_expanded(),
        degree_p1: origin.p1.degree(),
        witnesses,
    })
}

pub(crate) fn kind_name(k: WitnessKind) -> String {
    match k {
        WitnessKind::OriginH0 => "OriginH0".into(),
        WitnessKind::OriginH1 => "OriginH1".into(),
        WitnessKind::BranchPoint(b) => format!("BranchPoint(E{})", b),
    }
}

fn region_name(r: SignedRegion) -> &'static str {
    match r {
        SignedRegion::None => "none",
        SignedRegion::PlusClosure => "PlusClosure",
        SignedRegion::MinusClosure => "MinusClosure",
    }
}

/// Pole sets of the top-level and, when defined, beta-level functions.
pub(crate) fn all_pole_sets(datum: &DLDatum, mode: Mode) -> Result<Vec<(Level, BTreeSet<Q>)>, Error> {
    let mut v = vec![(Level::Top, locations(&poles_top(&z_top(datum, mode))))];
    if mode.has_beta_level() {
        let z = z_beta(datum, mode)?;
        v.push((Level::Beta, locations(&poles_beta(&z, &datum.candidate_poles(mode)))));
    }
    Ok(v)
}

fn echo(input: &Input, germ: Option<&Germ>, opts: &Options) -> InputEcho {
    let (source, text) = match input {
        Input::Poly(t) => ("poly", vec![t.clone()]),
        Input::Factored(v) => ("factored", v.clone()),
        Input::DlJson(t) => ("dl-json", vec![t.trim().to_string()]),
    };
    InputEcho {
        source: source.into(),
        text,
        germ: germ.map(|g| g.display()),
        modes: opts.modes.clone(),
        level: opts.level,
        series: opts.series,
    }
}

/// Run the pipeline on one input.
pub fn run(input: &Input, opts: &Options) -> Result<ZetaReport, Error> {
    if let Input::DlJson(text) = input {
        let datum = DLDatum::from_json(text)?;
        let zeta = opts.modes.iter().map(|&m| section(&datum, None, m, opts)).collect::<Result<Vec<_>, _>>()?;
        return Ok(ZetaReport {
            schema_version: SCHEMA_VERSION,
            input: echo(input, None, opts),
            resolution: None,
            covering: None,
            dual_graph: None,
            zeta,
            monodromy: None,
            checks: checks::datum_checks(&datum)?,
        });
    }
    let germ = germ_from_input(input)?;
    let pipe = Pipeline::new(germ)?;
    run_pipeline(input, &pipe, opts)
}

fn run_pipeline(input: &Input, p: &Pipeline, opts: &Options) -> Result<ZetaReport, Error> {
    let m = &p.model;
    let resolution = ResolutionSummary {
        identity: m.identity,
        minimal: m.minimal,
        blowups: m.blowups.len(),
        components: m
            .components
            .iter()
            .map(|c| ComponentRow {
                id: c.id,
                kind: if c.is_exceptional() { "exceptional".into() } else { "strict".into() },
                nu: c.nu,
                n: c.n,
                real: c.is_real(),
                weight: c.weight,
                intersection_total: m.intersection_total(c.id),
            })
            .collect(),
        crossings: m
            .crossings
            .iter()
            .map(|x| CrossingRow { a: x.a, b: x.b, real: x.is_real(), weight: x.weight, gcd: x.gcd, unit_sign: x.unit_sign })
            .collect(),
    };
    let covering = CoveringSummary {
        components: p
            .cover
            .components
            .iter()
            .map(|c| CoverRow {
                id: c.id,
                beta_plus: c.beta_plus.to_string(),
                beta_minus: c.beta_minus.to_string(),
                c_plus: c.c_plus,
                c_minus: c.c_minus,
            })
            .collect(),
        j_plus: p.cover.j_plus.iter().copied().collect(),
        j_minus: p.cover.j_minus.iter().copied().collect(),
    };
    let zeta = opts.modes.iter().map(|&md| section(&p.datum, Some(p), md, opts)).collect::<Result<Vec<_>, _>>()?;
    Ok(ZetaReport {
        schema_version: SCHEMA_VERSION,
        input: echo(input, Some(&p.germ), opts),
        resolution: Some(resolution),
        covering: Some(covering),
        dual_graph: Some(GraphSummary::from_graph(&p.graph)),
        zeta,
        monodromy: Some(monodromy_summary(p, opts)?),
        checks: checks::model_checks(p)?,
    })
}

/// DOT text of the real total dual graph of a germ input.
pub fn dual_graph_dot(input: &Input) -> Result<String, Error> {
    let germ = germ_from_input(input)?;
    let model = resolve(&germ)?;
    Ok(build_graph(&model).to_dot())
}
