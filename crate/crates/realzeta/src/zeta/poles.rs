use crate::arith::{LaurentFraction, RationalFunctionS, ZetaBetaFunction, Q};

/// A pole s0 < 0 with its order. `residue_top` is lim (s - s0)^order Z(s);
/// `residue_beta` is the grouped contribution sum at the virtual-Poincare level
/// (filled in only for order-1 poles).
#[derive(Clone, Debug, PartialEq)]
pub struct PoleRecord {
    pub location: Q,
    pub order: usize,
    pub residue_top: Option<Q>,
    pub residue_beta: Option<LaurentFraction>,
}

pub fn poles_top(z: &RationalFunctionS) -> Vec<PoleRecord> {
    z.poles()
        .into_iter()
        .map(|p| PoleRecord { location: p.location, order: p.order, residue_top: Some(p.residue), residue_beta: None })
        .collect()
}

/// Poles among the candidates, in the order given.
pub fn poles_beta(z: &ZetaBetaFunction, candidates: &[Q]) -> Vec<PoleRecord> {
    candidates
        .iter()
        .filter_map(|s0| {
            let k = z.pole_order_at(s0);
            (k > 0).then(|| PoleRecord { location: s0.clone(), order: k, residue_top: None, residue_beta: None })
        })
        .collect()
}

/// Locations of a pole list as a sorted set.
pub fn locations(p: &[PoleRecord]) -> std::collections::BTreeSet<Q> {
    p.iter().map(|r| r.location.clone()).collect()
}
