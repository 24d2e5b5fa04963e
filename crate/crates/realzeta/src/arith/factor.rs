//! Factorization of univariate polynomials over Q: squarefree decomposition,
//! Cantor-Zassenhaus modulo a small prime, Hensel lifting and recombination.

use super::modp::{factor_squarefree_monic, inv_mod, Pp};
use super::{integer_primitive, Q, UniPoly};
use crate::Error;
use itertools::Itertools;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `p = unit * prod f_i^{m_i}` with monic irreducible `f_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Q,
    pub factors: Vec<(UniPoly<Q>, usize)>,
}

pub fn factor_q(p: &UniPoly<Q>) -> Result<Factorization, Error> {
    if p.is_zero() {
        return Err(Error::Algebra("cannot factor the zero polynomial".into()));
    }
    let unit = p.lc();
    let mut factors = Vec::new();
    for (a, m) in p.squarefree_decomposition() {
        let (ints, _) = integer_primitive(a.coeffs());
        for g in factor_squarefree_int(&ints) {
            let gq = UniPoly::new(g.iter().map(|c| Q::from_integer(c.clone())).collect()).monic();
            factors.push((gq, m));
        }
    }
    factors.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)).then(a.1.cmp(&b.1)));
    Ok(Factorization { unit, factors })
}

/// Monic irreducible factors without multiplicities.
pub fn irreducible_factors(p: &UniPoly<Q>) -> Result<Vec<UniPoly<Q>>, Error> {
    Ok(factor_q(p)?.factors.into_iter().map(|(f, _)| f).collect())
}

pub fn is_irreducible(p: &UniPoly<Q>) -> bool {
    match factor_q(p) {
        Ok(f) => f.factors.len() == 1 && f.factors[0].1 == 1,
        Err(_) => false,
    }
}

pub(crate) fn poly_key(p: &UniPoly<Q>) -> (usize, Vec<Q>) {
    (p.deg(), p.coeffs().to_vec())
}

type Zx = Vec<BigInt>;

fn trim(mut v: Zx) -> Zx {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..20000).filter(|n| (2..).take_while(|d| d * d <= *n).all(|d| n % d != 0))
}

fn to_pp(f: &Zx, p: u64) -> Pp {
    let pb = BigInt::from(p);
    Pp::new(f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn sym_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn zmul(a: &Zx, b: &Zx, m: &BigInt) -> Zx {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(c.into_iter().map(|v| v.mod_floor(m)).collect())
}

fn zsub(a: &Zx, b: &Zx, m: &BigInt) -> Zx {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_default();
                let y = b.get(i).cloned().unwrap_or_default();
                (x - y).mod_floor(m)
            })
            .collect(),
    )
}

fn pp_to_z(a: &Pp) -> Zx {
    a.c.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lift `a = u0 * w0 (mod p)` to `a = U * W (mod p^k)`; all monic.
fn lift2(a: &Zx, u0: &Pp, w0: &Pp, p: u64, k: u32) -> (Zx, Zx) {
    let (_, _, t) = Pp::xgcd(u0, w0, p);
    let pb = BigInt::from(p);
    let mut u = pp_to_z(u0);
    let mut w = pp_to_z(w0);
    let mut m = pb.clone();
    for _ in 1..k {
        let next = &m * &pb;
        let diff = zsub(a, &zmul(&u, &w, &next), &next);
        let e = Pp::new(diff.iter().map(|c| (c / &m).mod_floor(&pb).to_u64().unwrap()).collect());
        let tu = e.mul(&t, p).rem(u0, p);
        let tw = e.sub(&tu.mul(w0, p), p).div_rem(u0, p).0;
        let add = |x: &Zx, d: &Pp| -> Zx {
            let n = x.len().max(d.c.len());
            trim(
                (0..n)
                    .map(|i| {
                        let xi = x.get(i).cloned().unwrap_or_default();
                        let di = BigInt::from(d.c.get(i).copied().unwrap_or(0));
                        (xi + &m * di).mod_floor(&next)
                    })
                    .collect(),
            )
        };
        u = add(&u, &tu);
        w = add(&w, &tw);
        m = next;
    }
    (u, w)
}

fn lift_all(a: &Zx, gs: &[Pp], p: u64, k: u32) -> Vec<Zx> {
    if gs.len() == 1 {
        return vec![a.clone()];
    }
    let mut w0 = Pp::one();
    for g in &gs[1..] {
        w0 = w0.mul(g, p);
    }
    let (u, w) = lift2(a, &gs[0], &w0, p, k);
    let mut out = vec![u];
    out.extend(lift_all(&w, &gs[1..], p, k));
    out
}

fn content(f: &Zx) -> BigInt {
    f.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(f: &Zx) -> Zx {
    let c = content(f);
    let mut v: Zx = f.iter().map(|x| x / &c).collect();
    if v.last().is_some_and(|l| l.sign() == Sign::Minus) {
        v = v.into_iter().map(|x| -x).collect();
    }
    v
}

fn zdiv_exact(a: &Zx, b: &Zx) -> Option<Zx> {
    let aq = UniPoly::new(a.iter().map(|c| Q::from_integer(c.clone())).collect());
    let bq = UniPoly::new(b.iter().map(|c| Q::from_integer(c.clone())).collect());
    let qq = aq.exact_div(&bq)?;
    if qq.coeffs().iter().all(|c| c.is_integer()) {
        Some(qq.coeffs().iter().map(|c| c.to_integer()).collect())
    } else {
        None
    }
}

/// Irreducible factors over Z of a squarefree primitive polynomial.
fn factor_squarefree_int(f: &Zx) -> Vec<Zx> {
    let f = primitive(&trim(f.clone()));
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    if f[0].is_zero() {
        let rest: Zx = f[1..].to_vec();
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree_int(&rest));
        return out;
    }
    let lc = f[n].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<Pp>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        let pb = BigInt::from(p);
        if lc.mod_floor(&pb).is_zero() {
            continue;
        }
        let fp = to_pp(&f, p);
        if Pp::gcd(&fp, &fp.derivative(p), p).deg() > 0 {
            continue;
        }
        let facs = factor_squarefree_monic(&fp.monic(p), p, &mut rng);
        if facs.len() == 1 {
            return vec![f];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, gs) = best.expect("a good prime exists");
    let pb = BigInt::from(p);

    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (norm2.sqrt() + 1) * lc.abs() * 2;
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    let lc_inv = BigInt::from(inv_mod(lc.mod_floor(&pb).to_u64().unwrap(), p));
    // lc^{-1} mod p^k by Newton iteration from the inverse mod p
    let mut inv = lc_inv;
    let mut mm = pb.clone();
    while mm < m {
        mm = &mm * &mm;
        inv = (&inv * (BigInt::from(2) - &lc * &inv)).mod_floor(&mm);
    }
    let inv = inv.mod_floor(&m);
    let a: Zx = trim(f.iter().map(|c| (c * &inv).mod_floor(&m)).collect());
    let lifted = lift_all(&a, &gs, p, k);

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut cur = f.clone();
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut found: Option<(Vec<usize>, Zx, Zx)> = None;
        for combo in remaining.iter().copied().combinations(s) {
            let clc = cur.last().unwrap().clone();
            let mut g: Zx = vec![clc.mod_floor(&m)];
            for &i in &combo {
                g = zmul(&g, &lifted[i], &m);
            }
            let g: Zx = g.iter().map(|c| sym_mod(c, &m)).collect();
            let g = primitive(&trim(g));
            if let Some(quo) = zdiv_exact(&cur, &g) {
                found = Some((combo, g, quo));
                break;
            }
        }
        match found {
            Some((combo, g, quo)) => {
                out.push(g);
                cur = primitive(&quo);
                remaining.retain(|i| !combo.contains(i));
            }
            None => s += 1,
        }
    }
    if cur.len() > 1 {
        out.push(cur);
    }
    out
}
