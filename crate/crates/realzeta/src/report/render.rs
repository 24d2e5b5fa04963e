use super::{Status, ZetaReport};
use crate::dual_graph::{DualGraph, Vertex};
use crate::zeta::ratio;
use crate::Error;
use std::fmt::Write;

/// DOT text rebuilt from the report's graph data.
pub fn to_dot(r: &ZetaReport) -> Result<String, Error> {
    let g = r.dual_graph.as_ref().ok_or_else(|| Error::Input("no dual graph for a DLDatum input".into()))?;
    let vertices = g
        .vertices
        .iter()
        .map(|v| Vertex { id: v.id, nu: v.nu, n: v.n, strict: v.strict, ratio: ratio(v.nu, v.n) })
        .collect();
    Ok(DualGraph::from_parts(vertices, &g.edges).to_dot())
}

fn opt<T: std::fmt::Display>(o: &Option<T>) -> String {
    o.as_ref().map(|x| x.to_string()).unwrap_or_else(|| "-".into())
}

pub fn to_text(r: &ZetaReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "input ({}): {}", r.input.source, r.input.text.join(" | "));
    if let Some(g) = &r.input.germ {
        let _ = writeln!(s, "germ: {}", g);
    }
    if let Some(res) = &r.resolution {
        let _ = writeln!(
            s,
            "\nresolution: {} blowup(s){}{}",
            res.blowups,
            if res.identity { ", identity" } else { "" },
            if res.minimal { ", minimal" } else { "" }
        );
        let _ = writeln!(s, "  {:<5} {:<12} {:>4} {:>4} {:<8} {:>6} {:>5}", "comp", "kind", "nu", "N", "field", "weight", "meets");
        for c in &res.components {
            let _ = writeln!(
                s,
                "  E{:<4} {:<12} {:>4} {:>4} {:<8} {:>6} {:>5}",
                c.id,
                c.kind,
                c.nu,
                c.n,
                if c.real { "real" } else { "complex" },
                c.weight,
                c.intersection_total
            );
        }
        for x in &res.crossings {
            let _ = writeln!(
                s,
                "  E{} x E{}: {}, weight {}, gcd {}, unit sign {}",
                x.a,
                x.b,
                if x.real { "real" } else { "complex" },
                x.weight,
                x.gcd,
                opt(&x.unit_sign)
            );
        }
    }
    if let Some(cv) = &r.covering {
        let _ = writeln!(s, "\nsign covers: J+ = {:?}, J- = {:?}", cv.j_plus, cv.j_minus);
        for c in &cv.components {
            let _ = writeln!(
                s,
                "  E{}: beta+ = {} (c = {}), beta- = {} (c = {})",
                c.id,
                c.beta_plus,
                opt(&c.c_plus),
                c.beta_minus,
                opt(&c.c_minus)
            );
        }
    }
    if let Some(g) = &r.dual_graph {
        let _ = writeln!(s, "\ndual graph: minimal set {:?}", g.minimal);
        for v in &g.vertices {
            let _ = writeln!(s, "  E{} ({},{}) ratio {}{}", v.id, v.nu, v.n, v.ratio, if v.strict { " strict" } else { "" });
        }
        for (a, b) in &g.edges {
            let _ = writeln!(s, "  E{} -- E{}", a, b);
        }
    }
    for z in &r.zeta {
        let _ = writeln!(s, "\n[{}]", z.mode);
        if let Some(t) = &z.top {
            let _ = writeln!(s, "  Z_top = {}", t.function);
            for p in &t.poles {
                let _ = writeln!(s, "    pole {} order {} residue {}", p.location, p.order, opt(&p.residue));
            }
        }
        if let Some(b) = &z.beta {
            let _ = writeln!(s, "  Z_beta = {}", b.function);
            for p in &b.poles {
                let _ = writeln!(s, "    pole {} order {} residue {}", p.location, p.order, opt(&p.residue));
            }
            for (k, c) in b.series.iter().enumerate() {
                let _ = writeln!(s, "    T^{}: {}", k, c);
            }
        }
        let _ = writeln!(s, "  candidates: {}", z.candidates.join(", "));
        for p in &z.predicted {
            let _ = writeln!(s, "  predicted {} {} from {:?}", p.location, p.tag, p.sources);
        }
        for c in &z.contributions {
            let _ = writeln!(s, "  R(E{}) at {}: top {}, beta {}", c.component, c.s0, c.r_top, c.r_beta);
        }
        for c in &z.collisions {
            let _ = writeln!(s, "  E{} at {}: shared ratio with a neighbor (order-2 candidate)", c.component, c.s0);
        }
        if let Some(sp) = &z.special {
            let _ = writeln!(s, "  special shape {}: stated {}{}", sp.shape, sp.stated, if sp.flagged { " (flagged)" } else { "" });
        }
    }
    if let Some(m) = &r.monodromy {
        let _ = writeln!(s, "\nmonodromy at the origin");
        let _ = writeln!(s, "  zeta_0 = {}", m.zeta0);
        let _ = writeln!(s, "  P0 = {}", m.p0);
        let _ = writeln!(s, "  P1 = {} = {}", m.p1, m.p1_expanded);
        for w in &m.witnesses {
            let lv = serde_json::to_value(w.level).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            let _ = writeln!(s, "  {} {} pole {}: {}", w.mode, lv, w.pole, w.description);
        }
    }
    let _ = writeln!(s, "\nchecks");
    for c in &r.checks {
        let _ = writeln!(s, "  {:<7} {:<28} {}", c.status.as_str(), c.name, c.detail);
    }
    let fails = r.checks.iter().filter(|c| c.status == Status::Fail).count();
    let _ = writeln!(s, "{} checks, {} failed", r.checks.len(), fails);
    s
}
