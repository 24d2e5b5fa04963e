//! Field extensions K(theta) flattened to a single primitive element over Q,
//! norms, and factorization over number fields (Trager).

use super::field::{Nf, NfElem, NumberField};
use super::roots::{isolate_irrational, real_fields_of_irreducible, RealAlg};
use crate::arith::factor::factor_q;
use crate::arith::{q, Field, Q, UniPoly};
use crate::Error;
use num_traits::{One, Zero};
use std::cmp::Ordering;

pub type KPoly = UniPoly<NfElem>;

/// Lift a rational polynomial to K[t].
pub fn lift_q(p: &UniPoly<Q>) -> KPoly {
    p.map(|c| NfElem::rational(c.clone()))
}

/// Rational polynomial if all coefficients are rational.
pub fn lower_q(p: &KPoly) -> Option<UniPoly<Q>> {
    let mut c = Vec::new();
    for a in p.coeffs() {
        c.push(a.as_q()?);
    }
    Some(UniPoly::new(c))
}

fn lagrange(xs: &[Q], ys: &[Q]) -> UniPoly<Q> {
    let mut acc = UniPoly::zero();
    for i in 0..xs.len() {
        let mut basis = UniPoly::constant(Q::one());
        let mut den = Q::one();
        for j in 0..xs.len() {
            if i != j {
                basis = &basis * &UniPoly::linear_root(xs[j].clone());
                den *= &xs[i] - &xs[j];
            }
        }
        acc = &acc + &basis.scale(&(&ys[i] / den));
    }
    acc
}

/// Norm from K[t] to Q[t]: Res_z(m(z), p(t; z)).
pub fn norm(k: &Option<Nf>, p: &KPoly) -> UniPoly<Q> {
    let nf = match k {
        None => return lower_q(p).expect("rational polynomial over Q"),
        Some(nf) => nf,
    };
    let m = nf.minpoly();
    let bound = nf.degree() * p.deg();
    let xs: Vec<Q> = (0..=bound as i64).map(q).collect();
    let ys: Vec<Q> = xs
        .iter()
        .map(|t| {
            // p(t; z) as a polynomial in z
            let mut acc = UniPoly::<Q>::zero();
            let mut tp = Q::one();
            for c in p.coeffs() {
                acc = &acc + &c.to_poly().scale(&tp);
                tp *= t;
            }
            UniPoly::resultant(m, &acc)
        })
        .collect();
    lagrange(&xs, &ys)
}

/// Map an element of K = Q(a) into L given the image of a.
pub fn embed(e: &NfElem, a_img: &NfElem) -> NfElem {
    if e.is_rational() {
        return e.clone();
    }
    let mut acc = NfElem::zero();
    for c in e.coeffs().iter().rev() {
        acc = acc * a_img.clone() + NfElem::rational(c.clone());
    }
    acc
}

pub fn embed_poly(p: &KPoly, a_img: &Option<NfElem>) -> KPoly {
    match a_img {
        None => p.clone(),
        Some(a) => p.map(|c| embed(c, a)),
    }
}

/// Result of adjoining a root theta of an irreducible q over K.
#[derive(Clone, Debug)]
pub struct Extension {
    /// Minimal polynomial over Q of the primitive element gamma of L = K(theta).
    pub minpoly: UniPoly<Q>,
    /// Image of K's generator as a polynomial in gamma (None when K = Q).
    pub alpha: Option<UniPoly<Q>>,
    /// theta as a polynomial in gamma.
    pub theta: UniPoly<Q>,
}

fn shift_candidates() -> impl Iterator<Item = i64> {
    (0..).flat_map(|k: i64| if k == 0 { vec![0] } else { vec![k, -k] })
}

fn is_squarefree(p: &UniPoly<Q>) -> bool {
    UniPoly::gcd(p, &p.derivative()).deg() == 0
}

/// Adjoin a root of the irreducible `qk` (degree >= 2) to K.
pub fn primitive_extension(k: &Option<Nf>, qk: &KPoly) -> Result<Extension, Error> {
    let nf = match k {
        None => {
            let qq = lower_q(qk).ok_or_else(|| Error::Algebra("field mismatch".into()))?.monic();
            return Ok(Extension { minpoly: qq, alpha: None, theta: UniPoly::x() });
        }
        Some(nf) => nf,
    };
    let a = NfElem::generator(nf);
    for s in shift_candidates().take(64) {
        // q(t - s a): its roots are theta + s a
        let sub = UniPoly::new(vec![-(a.clone() * NfElem::from_i64(s)), NfElem::one()]);
        let shifted = qk.compose(&sub);
        let nrm = norm(k, &shifted);
        if !is_squarefree(&nrm) {
            continue;
        }
        let minpoly = nrm.monic();
        let l = NumberField::non_real(minpoly.clone());
        let gamma = NfElem::generator(&l);
        // q(gamma - s X; X) and m(X) share exactly the root X = a
        let mut qx = UniPoly::<NfElem>::zero();
        let lin = UniPoly::new(vec![gamma.clone(), NfElem::from_i64(-s)]);
        let mut pw = UniPoly::<NfElem>::one();
        for c in qk.coeffs() {
            let cx = lift_q(&c.to_poly());
            qx = &qx + &(&cx * &pw);
            pw = &pw * &lin;
        }
        let mx = lift_q(nf.minpoly());
        let g = UniPoly::gcd(&mx, &qx);
        if g.deg() != 1 {
            return Err(Error::Algebra("primitive element construction failed".into()));
        }
        let a_img = -g.coeff(0);
        let theta = gamma - a_img.clone() * NfElem::from_i64(s);
        return Ok(Extension { minpoly, alpha: Some(a_img.to_poly()), theta: theta.to_poly() });
    }
    Err(Error::Algebra("no separating shift found".into()))
}

fn key(p: &KPoly) -> (usize, Vec<Vec<Q>>) {
    (p.deg(), p.coeffs().iter().map(|c| c.coeffs().to_vec()).collect())
}

/// Monic irreducible factors over K with multiplicities.
pub fn factor_over(k: &Option<Nf>, p: &KPoly) -> Result<Vec<(KPoly, usize)>, Error> {
    if p.is_zero() {
        return Err(Error::Algebra("cannot factor zero".into()));
    }
    if let Some(pq) = lower_q(p) {
        // rational polynomials split over Q first
        let mut out = Vec::new();
        for (f, m) in factor_q(&pq)?.factors {
            let fk = lift_q(&f);
            if k.is_some() && f.deg() > 1 {
                for (g, m2) in factor_over_sqfree(k, &fk)? {
                    out.push((g, m * m2));
                }
            } else {
                out.push((fk, m));
            }
        }
        out.sort_by_key(|a| key(&a.0));
        return Ok(out);
    }
    let mut out = Vec::new();
    for (a, m) in p.squarefree_decomposition() {
        for (g, m2) in factor_over_sqfree(k, &a)? {
            out.push((g, m * m2));
        }
    }
    out.sort_by_key(|a| key(&a.0));
    Ok(out)
}

fn factor_over_sqfree(k: &Option<Nf>, p: &KPoly) -> Result<Vec<(KPoly, usize)>, Error> {
    if p.deg() <= 1 {
        return Ok(vec![(p.monic(), 1)]);
    }
    let nf = match k {
        None => {
            let pq = lower_q(p).unwrap();
            return Ok(factor_q(&pq)?.factors.into_iter().map(|(f, m)| (lift_q(&f), m)).collect());
        }
        Some(nf) => nf,
    };
    let a = NfElem::generator(nf);
    for s in shift_candidates().take(64) {
        let sub = UniPoly::new(vec![-(a.clone() * NfElem::from_i64(s)), NfElem::one()]);
        let shifted = p.compose(&sub);
        let nrm = norm(k, &shifted);
        if !is_squarefree(&nrm) {
            continue;
        }
        let back = UniPoly::new(vec![a.clone() * NfElem::from_i64(s), NfElem::one()]);
        let mut out = Vec::new();
        for (ni, _) in factor_q(&nrm)?.factors {
            let nk = lift_q(&ni).compose(&back);
            let g = UniPoly::gcd(p, &nk);
            if g.deg() > 0 {
                out.push((g, 1));
            }
        }
        return Ok(out);
    }
    Err(Error::Algebra("no separating shift found".into()))
}

/// A root of an irreducible polynomial over K, realized in L = K(theta).
#[derive(Clone, Debug)]
pub struct RootInExtension {
    /// None when theta already lies in K.
    pub field: Option<Nf>,
    /// Image of K's generator in L (None when K = Q or L = K).
    pub alpha: Option<NfElem>,
    pub theta: NfElem,
    pub real: bool,
    /// Number of conjugate roots represented (1 for a real root).
    pub multiplicity_of_orbit: usize,
}

/// Roots of an irreducible `qk` over K. Over a real K: every real root
/// separately, plus one representative for the non-real roots (if any).
/// Over a non-real K: one representative for all roots.
pub fn roots_of_irreducible(k: &Option<Nf>, qk: &KPoly, k_real: bool) -> Result<Vec<RootInExtension>, Error> {
    let d = qk.deg();
    if d == 1 {
        let theta = -(qk.coeff(0) / qk.coeff(1));
        return Ok(vec![RootInExtension { field: k.clone(), alpha: None, theta, real: k_real, multiplicity_of_orbit: 1 }]);
    }
    let ext = primitive_extension(k, qk)?;
    let mut out = Vec::new();
    let mut real_count = 0;
    if k_real {
        let k_index = k.as_ref().map(root_index);
        for l in real_fields_of_irreducible(&ext.minpoly) {
            let alpha = ext.alpha.as_ref().map(|a| NfElem::from_poly(&l, a));
            if let (Some(nf), Some(ai)) = (k, &alpha) {
                if !same_root(nf, k_index.unwrap(), ai) {
                    continue;
                }
            }
            let theta = NfElem::from_poly(&l, &ext.theta);
            real_count += 1;
            out.push(RootInExtension { field: Some(l), alpha, theta, real: true, multiplicity_of_orbit: 1 });
        }
        out.sort_by(|a, b| RealAlg::Field(a.theta.clone()).cmp_real(&RealAlg::Field(b.theta.clone())));
    }
    if real_count < d {
        let l = NumberField::non_real(ext.minpoly.clone());
        let alpha = ext.alpha.as_ref().map(|a| NfElem::from_poly(&l, a));
        let theta = NfElem::from_poly(&l, &ext.theta);
        out.push(RootInExtension { field: Some(l), alpha, theta, real: false, multiplicity_of_orbit: d - real_count });
    }
    Ok(out)
}

/// Index of K's embedded generator among the sorted real roots of its minimal polynomial.
fn root_index(nf: &Nf) -> usize {
    let ivs = isolate_irrational(nf.minpoly());
    loop {
        let (lo, hi) = nf.interval().unwrap();
        let hits: Vec<usize> = ivs.iter().enumerate().filter(|(_, (a, b))| !(hi <= *a || lo >= *b)).map(|(i, _)| i).collect();
        if hits.len() == 1 {
            return hits[0];
        }
        nf.refine();
    }
}

/// Whether the real number `v` equals the `idx`-th real root of K's minimal polynomial.
fn same_root(nf: &Nf, idx: usize, v: &NfElem) -> bool {
    let ivs = isolate_irrational(nf.minpoly());
    loop {
        let (lo, hi) = v.enclosure();
        let hits: Vec<usize> = ivs.iter().enumerate().filter(|(_, (a, b))| !(hi <= *a || lo > *b)).map(|(i, _)| i).collect();
        if hits.len() == 1 {
            return hits[0] == idx;
        }
        if hits.is_empty() {
            return false;
        }
        v.field().unwrap().refine();
    }
}

/// Real roots of p over a real K, sorted, as (root, multiplicity).
pub fn real_roots_over(k: &Option<Nf>, p: &KPoly) -> Result<Vec<(RootInExtension, usize)>, Error> {
    let mut out = Vec::new();
    for (f, m) in factor_over(k, p)? {
        for r in roots_of_irreducible(k, &f, true)? {
            if r.real {
                out.push((r, m));
            }
        }
    }
    out.sort_by(|a, b| cmp_roots(&a.0, &b.0));
    Ok(out)
}

pub fn cmp_roots(a: &RootInExtension, b: &RootInExtension) -> Ordering {
    RealAlg::Field(a.theta.clone()).cmp_real(&RealAlg::Field(b.theta.clone()))
}
