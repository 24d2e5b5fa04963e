//! Built-in verification suite: one verdict per acceptance criterion.

use super::{run, Input, Options, Pipeline, Status, ZetaReport};
use crate::arith::{fmt_q, q, qf, LaurentPoly, RationalFunctionS, UniPoly, ZetaBetaFunction, Q};
use crate::covering::count_cover;
use crate::monodromy::{char_polys_branch, CycloProduct};
use crate::zeta::{contribution, poles_beta, poles_top, predicted_poles, z_beta, z_top, DLDatum, Mode};
use crate::Error;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Unattainable as stated; the independently verified values hold instead.
    Deviation,
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub verdict: Verdict,
    pub detail: String,
    pub millis: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let v = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Deviation => "FAIL (documented deviation)",
        };
        format!("criterion {:>2} {}: {} [{} ms] {}", self.id, v, self.title, self.millis, self.detail)
    }
}

pub const SEED: u64 = 20240611;
pub const RANDOM_COUNT: usize = 20;

/// (a_0 + a_1 s + ...) / prod (c + d s)
pub fn rf(num: &[i64], den: &[(i64, i64)]) -> RationalFunctionS {
    let n = UniPoly::new(num.iter().map(|&c| q(c)).collect());
    let mut d = UniPoly::new(vec![q(1)]);
    for &(c, e) in den {
        d = &d * &UniPoly::new(vec![q(c), q(e)]);
    }
    RationalFunctionS::new(n, d).expect("nonzero denominator")
}

fn set(v: &[Q]) -> BTreeSet<Q> {
    v.iter().cloned().collect()
}

fn show(s: &BTreeSet<Q>) -> String {
    let v: Vec<String> = s.iter().rev().map(fmt_q).collect();
    format!("{{{}}}", v.join(", "))
}

pub(crate) fn pipeline(text: &str) -> Result<Pipeline, Error> {
    Pipeline::new(super::germ_from_input(&Input::Poly(text.into()))?)
}

fn top_poles(d: &DLDatum, mode: Mode) -> BTreeSet<Q> {
    crate::zeta::locations(&poles_top(&z_top(d, mode)))
}

fn beta_poles(d: &DLDatum, mode: Mode) -> Result<BTreeSet<Q>, Error> {
    Ok(crate::zeta::locations(&poles_beta(&z_beta(d, mode)?, &d.candidate_poles(mode))))
}

struct Acc {
    fails: Vec<String>,
}

impl Acc {
    fn new() -> Self {
        Acc { fails: Vec::new() }
    }
    fn expect<T: PartialEq + std::fmt::Display>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.fails.push(format!("{}: got {}, want {}", what, got, want));
        }
    }
    fn expect_set(&mut self, what: &str, got: &BTreeSet<Q>, want: &BTreeSet<Q>) {
        if got != want {
            self.fails.push(format!("{}: got {}, want {}", what, show(got), show(want)));
        }
    }
    fn truth(&mut self, what: &str, ok: bool) {
        if !ok {
            self.fails.push(what.to_string());
        }
    }
    fn finish(self, ok_detail: &str) -> (Verdict, String) {
        if self.fails.is_empty() {
            (Verdict::Pass, ok_detail.to_string())
        } else {
            (Verdict::Fail, self.fails.join("; "))
        }
    }
}

/// Cusp values against a datum, so a tampered datum can be fed in as a negative control.
pub fn check_cusp_datum(d: &DLDatum) -> (Verdict, String) {
    let mut a = Acc::new();
    a.expect("Z_top", z_top(d, Mode::Naive), rf(&[5, 4], &[(1, 1), (5, 6)]));
    a.expect("Z+", z_top(d, Mode::Plus), rf(&[7, 6], &[(1, 1), (5, 6)]));
    a.expect("Z-", z_top(d, Mode::Minus), rf(&[3, 2], &[(1, 1), (5, 6)]));
    let want = set(&[q(-1), qf(-5, 6)]);
    for m in [Mode::Naive, Mode::Plus, Mode::Minus] {
        a.expect_set(&format!("{} poles", m), &top_poles(d, m), &want);
    }
    a.finish("three cusp functions and poles {-1, -5/6}")
}

fn c1() -> Result<(Verdict, String), Error> {
    Ok(check_cusp_datum(&pipeline("y^2 - x^3")?.datum))
}

fn c2() -> Result<(Verdict, String), Error> {
    let p = pipeline("x^3 + y^3")?;
    let um1 = LaurentPoly::from_coeffs(&[-1, 1]);
    let stated = ZetaBetaFunction::from_strata(&[
        (LaurentPoly::from_coeffs(&[0, -1, 1]), vec![(2, 3)]),
        (um1.mul(&um1), vec![(2, 3), (1, 1)]),
    ]);
    let z = z_beta(&p.datum, Mode::Naive)?;
    let mut a = Acc::new();
    a.truth("Z_beta differs from the two-term presentation", z.same_function(&stated));
    a.expect_set("beta poles", &beta_poles(&p.datum, Mode::Naive)?, &set(&[q(-1), qf(-2, 3)]));
    Ok(a.finish("two-term presentation, poles {-1, -2/3}"))
}

fn c3() -> Result<(Verdict, String), Error> {
    let mut a = Acc::new();
    for k in 1..=3i64 {
        let p = pipeline(&format!("x^{} + y^{}", 2 * k, 2 * k))?;
        let (naive, cx, poles) = if k == 1 {
            (rf(&[1], &[(1, 1)]), rf(&[1], &[(1, 1), (1, 1)]), set(&[q(-1)]))
        } else {
            (rf(&[2], &[(2, 2 * k)]), rf(&[2, 2 - 2 * k], &[(1, 1), (2, 2 * k)]), set(&[q(-1), qf(-1, k)]))
        };
        a.expect(&format!("k={} Z_top", k), z_top(&p.datum, Mode::Naive), naive);
        a.expect(&format!("k={} complexified", k), z_top(&p.datum, Mode::Complex), cx);
        a.expect_set(&format!("k={} complexified poles", k), &top_poles(&p.datum, Mode::Complex), &poles);
    }
    Ok(a.finish("k = 1, 2, 3"))
}

fn c4() -> Result<(Verdict, String), Error> {
    let germ = super::germ_from_input(&Input::Factored(vec!["x^2+y^6:2".into(), "x^2-y^3:3".into()]))?;
    let p = Pipeline::new(germ)?;
    let z = z_top(&p.datum, Mode::Naive);
    let mut a = Acc::new();
    a.expect("Z_top", z.clone(), rf(&[20, 141, 216], &[(5, 30), (4, 21), (1, 3)]));
    let poles = poles_top(&z);
    let want = set(&[qf(-1, 6), qf(-4, 21), qf(-1, 3)]);
    a.expect_set("poles", &crate::zeta::locations(&poles), &want);
    for (s0, sign) in [(qf(-1, 6), 1), (qf(-1, 3), -1), (qf(-4, 21), -1)] {
        let r = poles.iter().find(|r| r.location == s0).and_then(|r| r.residue_top.clone());
        let ok = r.map(|r| if sign > 0 { r.is_positive() } else { r.is_negative() }).unwrap_or(false);
        a.truth(&format!("residue sign at {}", s0), ok);
    }
    let pred: BTreeSet<Q> = predicted_poles(&p.model, &p.cover, Mode::Naive).into_iter().map(|r| r.location).collect();
    a.expect_set("predicted", &pred, &want);
    a.truth("complexified poles lack -1/2", top_poles(&p.datum, Mode::Complex).contains(&qf(-1, 2)));
    Ok(a.finish("Z_top, poles, residue signs (+, -, -), prediction, complexified -1/2"))
}

/// T^n coefficients of the naive or signed zeta function of x^{2p} + y^{2q},
/// summed directly over arc orders (a, b) = (ord x, ord y).
pub fn arc_series(p: u64, qq: u64, n_max: u32, mode: Mode) -> Vec<LaurentPoly> {
    let um1 = LaurentPoly::from_coeffs(&[-1, 1]);
    let mono = |e: i64| LaurentPoly::monomial(1, e);
    let mut out = vec![LaurentPoly::zero()];
    for n in 1..=n_max as u64 {
        let mut tot = LaurentPoly::zero();
        // a = n + 1 stands for ord > n
        for a in 1..=n + 1 {
            for b in 1..=n + 1 {
                let ox = if a <= n { 2 * p * a } else { u64::MAX };
                let oy = if b <= n { 2 * qq * b } else { u64::MAX };
                if ox.min(oy) != n {
                    continue;
                }
                let w = |k: u64| if k <= n { um1.mul(&mono((n - k) as i64)) } else { LaurentPoly::one() };
                let term = match mode {
                    Mode::Naive => w(a).mul(&w(b)),
                    Mode::Plus => {
                        if ox < oy {
                            mono((n - a) as i64).scale(&2.into()).mul(&w(b))
                        } else if oy < ox {
                            mono((n - b) as i64).scale(&2.into()).mul(&w(a))
                        } else {
                            // a^{2p} + b^{2q} = 1 with ab != 0: an oval minus four points
                            LaurentPoly::from_coeffs(&[-3, 1]).mul(&mono((2 * n - a - b) as i64))
                        }
                    }
                    _ => LaurentPoly::zero(),
                };
                tot = tot.add(&term);
            }
        }
        out.push(tot.mul(&mono(-2 * n as i64)));
    }
    out
}

fn c5() -> Result<(Verdict, String), Error> {
    let p = pipeline("x^2 + y^6")?;
    let d = &p.datum;
    let mut a = Acc::new();
    a.truth("Z- is not 0", z_top(d, Mode::Minus).is_zero());
    for mode in [Mode::Naive, Mode::Plus, Mode::Minus] {
        let got = z_beta(d, mode)?.series(24);
        a.truth(&format!("{} series disagrees with the arc oracle", mode), got == arc_series(1, 3, 24, mode));
    }
    a.expect("naive", z_top(d, Mode::Naive), rf(&[2], &[(2, 3)]));
    a.expect("plus", z_top(d, Mode::Plus), rf(&[3], &[(2, 3)]));
    if !a.fails.is_empty() {
        return Ok(a.finish(""));
    }
    let stated_plus = rf(&[4], &[(3, 4)]);
    let stated_naive = rf(&[3], &[(3, 4)]);
    let hit = z_top(d, Mode::Plus) == stated_plus && z_top(d, Mode::Naive) == stated_naive;
    if hit {
        return Ok((Verdict::Pass, "Z- = 0, Z+ = 4/(3 + 4s), naive 3/(3 + 4s)".into()));
    }
    Ok((
        Verdict::Deviation,
        "Z- = 0 holds; stated Z+ = 4/(3 + 4s) and naive 3/(3 + 4s) stop at E2 (3,4), \
         the resolution ends on E3 (4,6); the arc oracle confirms Z+ = 3/(2 + 3s), naive 2/(2 + 3s)"
            .into(),
    ))
}

fn c6() -> Result<(Verdict, String), Error> {
    let mut a = Acc::new();
    let r1 = |text: &str| -> Result<(crate::zeta::Contribution, Pipeline), Error> {
        let p = pipeline(text)?;
        let id = p.model.exceptional().next().map(|c| c.id).ok_or_else(|| Error::Input("no exceptional curve".into()))?;
        Ok((contribution(&p.datum, id, Mode::Plus)?, p))
    };
    let (c7, _) = r1("x*y*(x-y)^3*(x-2*y)^7")?;
    a.truth(&format!("R+ for exponent 7 is {}, not < 0", c7.r_top), c7.r_top.is_negative());
    let (c9, _) = r1("x*y*(x-y)^3*(x-2*y)^9")?;
    a.truth(&format!("R+ for exponent 9 is {}, not > 0", c9.r_top), c9.r_top.is_positive());
    let (c5, p5) = r1("x*y*(x-y)*(x-2*y)^5")?;
    a.truth(&format!("R+ for exponent 5 is {}, not 0", c5.r_top), c5.r_top.is_zero());
    a.truth("R+_beta for exponent 5 vanishes", !c5.r_beta.is_zero());
    a.expect_set("Z+ top poles", &top_poles(&p5.datum, Mode::Plus), &set(&[q(-1), qf(-1, 5)]));
    a.expect_set("Z top poles", &top_poles(&p5.datum, Mode::Naive), &set(&[q(-1), qf(-1, 4), qf(-1, 5)]));
    a.truth("-1/4 missing from beta-level Z+ poles", beta_poles(&p5.datum, Mode::Plus)?.contains(&qf(-1, 4)));
    Ok(a.finish("R+ signs -, +, 0 with R+_beta != 0; -1/4 survives at beta level"))
}

fn c7() -> Result<(Verdict, String), Error> {
    let p = pipeline("x^2 + y^2")?;
    let got = z_beta(&p.datum, Mode::Naive)?.series(2)[2].clone();
    let want = LaurentPoly::from_coeffs(&[-1, 0, 1]).mul(&LaurentPoly::monomial(1, -2));
    let mut a = Acc::new();
    a.expect("T^2 coefficient", got, want);
    Ok(a.finish("T^2 coefficient u^-4 u^2 (u^2 - 1)"))
}

/// Sign cover of x^{2m} t^{2p} = 1 over the exceptional circle: a circle with
/// two marked points of orders 2m and 2pe - 2m, e = ceil(m/p).
pub fn two_point_family_beta(m: u64, p: u64) -> Result<LaurentPoly, Error> {
    let e = m.div_ceil(p);
    let n = 2 * p;
    let d0 = 2 * m;
    let d_inf = 2 * p * e - 2 * m;
    let cnt = count_cover(n, &[1, 1], &[d0], d_inf, e % 2 == 1, 1)?;
    Ok(LaurentPoly::from_coeffs(&[1, 1]).scale(&cnt.c.into()).sub(&LaurentPoly::from_coeffs(&[cnt.points as i64])))
}

fn c8() -> Result<(Verdict, String), Error> {
    let mut a = Acc::new();
    let p = pipeline("x^2 + y^2")?;
    let e1 = p.cover.components.iter().find(|c| p.model.component(c.id).is_exceptional());
    match e1 {
        Some(c) => {
            a.expect("x^2+y^2 beta+", c.beta_plus.clone(), LaurentPoly::from_coeffs(&[1, 1]));
            a.expect("x^2+y^2 c", c.c_plus.unwrap_or(0), 1);
        }
        None => a.truth("x^2+y^2 has no exceptional curve", false),
    }
    for m in 1..=4 {
        for pp in 1..=4 {
            a.expect(&format!("m={} p={}", m, pp), two_point_family_beta(m, pp)?, LaurentPoly::from_coeffs(&[-2, 2]));
        }
    }
    // six simple real roots of the unit along E; positive at infinity
    let hyper = count_cover(8, &[1, -1, 1, -1, 1, -1, 1], &[1, 1, 1, 1, 1, 1], 0, true, 1)?;
    a.expect("hyperelliptic c", hyper.c, 3);
    Ok(a.finish("x^2+y^2 c = 1, 2(u-1) for 1 <= m,p <= 4, hyperelliptic c = 3"))
}

pub fn suite_inputs() -> Vec<Input> {
    let polys = [
        "y^2 - x^3",
        "x^3 + y^3",
        "x^2 + y^2",
        "x^4 + y^4",
        "x^6 + y^6",
        "x^2 + y^6",
        "x*y*(x-y)^3*(x-2*y)^7",
        "x*y*(x-y)^3*(x-2*y)^9",
        "x*y*(x-y)*(x-2*y)^5",
        "x^3*y^4",
        "x*y",
        "x",
        "-x^2 - y^2",
        "x^2*y^2",
        "x^3 - y^4",
    ];
    let mut v: Vec<Input> = polys.iter().map(|s| Input::Poly(s.to_string())).collect();
    v.push(Input::Factored(vec!["x^2+y^6:2".into(), "x^2-y^3:3".into()]));
    v
}

fn c9() -> Result<(Verdict, String), Error> {
    let mut a = Acc::new();
    let p = pipeline("x^3*y^4")?;
    let o = crate::monodromy::char_polys_origin(&p.model)?;
    let tm1 = CycloProduct::single(1, 1);
    a.expect("x^3y^4 P0", o.p0.to_string(), tm1.to_string());
    a.expect("x^3y^4 P1", o.p1.to_string(), tm1.to_string());
    let mut branch = Vec::new();
    for s in p.model.strict() {
        branch.push(char_polys_branch(&p.model, s.id)?.0.to_string());
    }
    branch.sort();
    a.expect("branch P0", branch.join(" / "), "(t^3 - 1) / (t^4 - 1)".to_string());
    let cusp = pipeline("y^2 - x^3")?;
    let oc = crate::monodromy::char_polys_origin(&cusp.model)?;
    a.expect("cusp P1", oc.p1.display_expanded(), "t^2 - t + 1".to_string());
    let mut poles = 0;
    for input in suite_inputs() {
        let r = run(&input, &Options::default())?;
        if let Some(m) = &r.monodromy {
            poles += m.witnesses.len();
            for w in m.witnesses.iter().filter(|w| w.kind.is_none()) {
                a.fails.push(format!("{:?}: no witness for {} pole {}", input, w.mode, w.pole));
            }
        }
    }
    Ok(a.finish(&format!("P0/P1 values; {} suite poles witnessed", poles)))
}

/// Seeded polynomials of degree <= 6 with no constant term.
pub fn random_polynomials(seed: u64, count: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut terms = Vec::new();
        let nterms = rng.gen_range(2..=4);
        for _ in 0..nterms {
            let deg = rng.gen_range(2..=6);
            let i = rng.gen_range(0..=deg);
            let mut c: i64 = rng.gen_range(-3..=3);
            if c == 0 {
                c = 1;
            }
            terms.push(format!("{}*x^{}*y^{}", c, i, deg - i));
        }
        let text = terms.join(" + ");
        if let Ok(f) = crate::parse::parse_polynomial(&text) {
            if crate::resolution::Germ::from_poly(&f).is_ok() {
                out.push(text);
            }
        }
    }
    out
}

fn failing_checks(r: &ZetaReport) -> Vec<String> {
    r.checks.iter().filter(|c| c.status == Status::Fail).map(|c| format!("{} ({})", c.name, c.detail)).collect()
}

fn c10() -> Result<(Verdict, String), Error> {
    let mut a = Acc::new();
    let mut inputs = suite_inputs();
    inputs.extend(random_polynomials(SEED, RANDOM_COUNT).into_iter().map(Input::Poly));
    let total = inputs.len();
    let mut checks = 0;
    for input in inputs {
        match run(&input, &Options::default()) {
            Ok(r) => {
                checks += r.checks.len();
                for f in failing_checks(&r) {
                    a.fails.push(format!("{:?}: {}", input, f));
                }
            }
            Err(e) => a.fails.push(format!("{:?}: {}", input, e)),
        }
    }
    Ok(a.finish(&format!("{} inputs, {} checks", total, checks)))
}

pub const TITLES: [&str; 10] = [
    "cusp zeta functions",
    "x^3+y^3 beta level",
    "x^2k+y^2k family",
    "(x^2+y^6)^2 (x^2-y^3)^3",
    "x^2+y^6 signed values",
    "signed contributions family",
    "series coefficient",
    "covering counts",
    "monodromy",
    "property suites",
];

pub fn criterion(id: u32) -> CriterionResult {
    let start = Instant::now();
    let out = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        _ => Err(Error::Input(format!("no criterion {}", id))),
    };
    let (verdict, detail) = out.unwrap_or_else(|e| (Verdict::Fail, e.to_string()));
    CriterionResult {
        id,
        title: TITLES.get(id as usize - 1).copied().unwrap_or("unknown"),
        verdict,
        detail,
        millis: start.elapsed().as_millis(),
    }
}

pub fn run_self_test() -> Vec<CriterionResult> {
    (1..=10).map(criterion).collect()
}
