//! Dense polynomials over Z/p for a word-sized prime p.

use num_bigint::BigUint;
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pp {
    pub c: Vec<u64>,
}

fn norm(mut c: Vec<u64>) -> Vec<u64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

impl Pp {
    pub fn new(c: Vec<u64>) -> Self {
        Pp { c: norm(c) }
    }
    pub fn one() -> Self {
        Pp { c: vec![1] }
    }
    pub fn x() -> Self {
        Pp { c: vec![0, 1] }
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    pub fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }
    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn sub(&self, o: &Pp, p: u64) -> Pp {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| (self.c.get(i).copied().unwrap_or(0) + p - o.c.get(i).copied().unwrap_or(0)) % p)
            .collect();
        Pp::new(c)
    }

    pub fn mul(&self, o: &Pp, p: u64) -> Pp {
        if self.is_zero() || o.is_zero() {
            return Pp::new(vec![]);
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % p;
            }
        }
        Pp::new(c)
    }

    pub fn scale(&self, a: u64, p: u64) -> Pp {
        Pp::new(self.c.iter().map(|x| x * (a % p) % p).collect())
    }

    pub fn monic(&self, p: u64) -> Pp {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), p), p)
    }

    pub fn div_rem(&self, d: &Pp, p: u64) -> (Pp, Pp) {
        assert!(!d.is_zero());
        if self.c.len() < d.c.len() {
            return (Pp::new(vec![]), self.clone());
        }
        let dd = d.deg();
        let inv = inv_mod(d.lc(), p);
        let mut r = self.c.clone();
        let mut qv = vec![0u64; r.len() - dd];
        for i in (0..qv.len()).rev() {
            let t = r[i + dd] * inv % p;
            if t != 0 {
                for (j, b) in d.c.iter().enumerate() {
                    r[i + j] = (r[i + j] + p - t * b % p) % p;
                }
            }
            qv[i] = t;
        }
        r.truncate(dd);
        (Pp::new(qv), Pp::new(r))
    }

    pub fn rem(&self, d: &Pp, p: u64) -> Pp {
        self.div_rem(d, p).1
    }

    pub fn derivative(&self, p: u64) -> Pp {
        Pp::new(self.c.iter().enumerate().skip(1).map(|(i, a)| (i as u64 % p) * a % p).collect())
    }

    pub fn gcd(a: &Pp, b: &Pp, p: u64) -> Pp {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(&b, p);
            a = b;
            b = r;
        }
        a.monic(p)
    }

    /// (g, s, t) with s a + t b = g monic.
    pub fn xgcd(a: &Pp, b: &Pp, p: u64) -> (Pp, Pp, Pp) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Pp::one(), Pp::new(vec![]));
        let (mut t0, mut t1) = (Pp::new(vec![]), Pp::one());
        while !r1.is_zero() {
            let (qq, r) = r0.div_rem(&r1, p);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&qq.mul(&s1, p), p);
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&qq.mul(&t1, p), p);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = inv_mod(r0.lc(), p);
        (r0.scale(inv, p), s0.scale(inv, p), t0.scale(inv, p))
    }

    pub fn powmod(&self, e: &BigUint, m: &Pp, p: u64) -> Pp {
        let mut result = Pp::one().rem(m, p);
        let base = self.rem(m, p);
        for i in (0..e.bits()).rev() {
            result = result.mul(&result, p).rem(m, p);
            if e.bit(i) {
                result = result.mul(&base, p).rem(m, p);
            }
        }
        result
    }
}

/// Distinct-degree then equal-degree factorization of a monic squarefree polynomial.
pub fn factor_squarefree_monic(f: &Pp, p: u64, rng: &mut impl Rng) -> Vec<Pp> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = Pp::x();
    let mut d = 0usize;
    let pb = BigUint::from(p);
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(&pb, &rest, p);
        let g = Pp::gcd(&h.sub(&Pp::x(), p), &rest, p);
        if g.deg() > 0 {
            out.extend(equal_degree(&g, d, p, rng));
            rest = rest.div_rem(&g, p).0;
            h = h.rem(&rest, p);
        }
    }
    if rest.deg() > 0 {
        out.push(rest.monic(p));
    }
    out.sort_by(|a, b| (a.deg(), &a.c).cmp(&(b.deg(), &b.c)));
    out
}

fn equal_degree(f: &Pp, d: usize, p: u64, rng: &mut impl Rng) -> Vec<Pp> {
    if f.deg() == d {
        return vec![f.monic(p)];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = Pp::new((0..f.deg()).map(|_| rng.gen_range(0..p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let g = Pp::gcd(&a, f, p);
        let split = if g.deg() > 0 && g.deg() < f.deg() {
            Some(g)
        } else {
            let b = a.powmod(&e, f, p).sub(&Pp::one(), p);
            let g = Pp::gcd(&b, f, p);
            if g.deg() > 0 && g.deg() < f.deg() {
                Some(g)
            } else {
                None
            }
        };
        if let Some(g) = split {
            let h = f.div_rem(&g, p).0;
            let mut v = equal_degree(&g, d, p, rng);
            v.extend(equal_degree(&h.monic(p), d, p, rng));
            return v;
        }
    }
}
