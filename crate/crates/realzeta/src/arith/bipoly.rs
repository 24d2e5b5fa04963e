use super::{fmt_q, Field, Q, UniPoly};
use num_traits::{One, Signed};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse bivariate polynomial; keys are `(i, j)` for `x^i y^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<F> {
    t: BTreeMap<(u32, u32), F>,
}

impl<F: Field> BiPoly<F> {
    pub fn zero() -> Self {
        BiPoly { t: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(a: F) -> Self {
        Self::monomial(a, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(F::one(), 0, 1)
    }

    pub fn monomial(a: F, i: u32, j: u32) -> Self {
        let mut t = BTreeMap::new();
        if !a.is_zero() {
            t.insert((i, j), a);
        }
        BiPoly { t }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), F)>) -> Self {
        let mut p = Self::zero();
        for (k, a) in terms {
            p.add_term(k, a);
        }
        p
    }

    fn add_term(&mut self, k: (u32, u32), a: F) {
        if a.is_zero() {
            return;
        }
        let v = match self.t.remove(&k) {
            Some(b) => b + a,
            None => a,
        };
        if !v.is_zero() {
            self.t.insert(k, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &F)> {
        self.t.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> F {
        self.t.get(&(i, j)).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.t.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn deg_x(&self) -> u32 {
        self.t.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> u32 {
        self.t.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// Order at the origin (lowest total degree); 0 for the zero polynomial.
    pub fn mult(&self) -> u32 {
        self.t.keys().map(|(i, j)| i + j).min().unwrap_or(0)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(0, 0)
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Homogeneous part of lowest degree.
    pub fn initial_form(&self) -> Self {
        let m = self.mult();
        BiPoly { t: self.t.iter().filter(|(k, _)| k.0 + k.1 == m).map(|(k, v)| (*k, v.clone())).collect() }
    }

    /// Homogeneous part of degree d.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        BiPoly { t: self.t.iter().filter(|(k, _)| k.0 + k.1 == d).map(|(k, v)| (*k, v.clone())).collect() }
    }

    /// For a homogeneous form h of degree d, the polynomial h(1, v).
    pub fn dehomog_x1(&self) -> UniPoly<F> {
        let d = self.total_degree() as usize;
        let mut c = vec![F::zero(); d + 1];
        for ((_, j), a) in &self.t {
            c[*j as usize] = c[*j as usize].clone() + a.clone();
        }
        UniPoly::new(c)
    }

    /// For a homogeneous form h, the polynomial h(w, 1).
    pub fn dehomog_y1(&self) -> UniPoly<F> {
        let d = self.total_degree() as usize;
        let mut c = vec![F::zero(); d + 1];
        for ((i, _), a) in &self.t {
            c[*i as usize] = c[*i as usize].clone() + a.clone();
        }
        UniPoly::new(c)
    }

    pub fn scale(&self, a: &F) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.t.iter().map(|(k, v)| (*k, v.clone() * a.clone())))
    }

    pub fn neg(&self) -> Self {
        BiPoly { t: self.t.iter().map(|(k, v)| (*k, -v.clone())).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, v) in &o.t {
            r.add_term(*k, v.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for ((i, j), a) in &self.t {
            for ((k, l), b) in &o.t {
                r.add_term((i + k, j + l), a.clone() * b.clone());
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        let mut acc = F::zero();
        for ((i, j), a) in &self.t {
            let mut term = a.clone();
            for _ in 0..*i {
                term = term * x.clone();
            }
            for _ in 0..*j {
                term = term * y.clone();
            }
            acc = acc + term;
        }
        acc
    }

    /// g(0, y)
    pub fn at_x0(&self) -> UniPoly<F> {
        let d = self.deg_y() as usize;
        let mut c = vec![F::zero(); d + 1];
        for ((i, j), a) in &self.t {
            if *i == 0 {
                c[*j as usize] = a.clone();
            }
        }
        UniPoly::new(c)
    }

    /// g(x, 0)
    pub fn at_y0(&self) -> UniPoly<F> {
        let d = self.deg_x() as usize;
        let mut c = vec![F::zero(); d + 1];
        for ((i, j), a) in &self.t {
            if *j == 0 {
                c[*i as usize] = a.clone();
            }
        }
        UniPoly::new(c)
    }

    /// Strict transform in the chart x = x1, y = x1*y1: g(x1, x1 y1) / x1^m.
    pub fn chart1(&self) -> Self {
        let m = self.mult();
        BiPoly { t: self.t.iter().map(|((i, j), a)| ((i + j - m, *j), a.clone())).collect() }
    }

    /// Strict transform in the chart x = x2*y2, y = y2: g(x2 y2, y2) / y2^m.
    pub fn chart2(&self) -> Self {
        let m = self.mult();
        BiPoly { t: self.t.iter().map(|((i, j), a)| ((*i, i + j - m), a.clone())).collect() }
    }

    /// g(x, y + a)
    pub fn shift_y(&self, a: &F) -> Self {
        if a.is_zero() {
            return self.clone();
        }
        let mut r = Self::zero();
        let dy = self.deg_y() as usize;
        // binomial coefficients and powers of a
        let mut pw = vec![F::one()];
        for k in 1..=dy {
            let prev = pw[k - 1].clone();
            pw.push(prev * a.clone());
        }
        for ((i, j), c) in &self.t {
            let j = *j as usize;
            let mut binom: u64 = 1;
            for l in 0..=j {
                // term: c * C(j,l) * a^(j-l) * x^i y^l
                let coef = c.clone() * F::from_i64(binom as i64) * pw[j - l].clone();
                r.add_term((*i, l as u32), coef);
                binom = binom * (j - l) as u64 / (l + 1) as u64;
            }
        }
        r
    }

    /// Swap x and y.
    pub fn swap_xy(&self) -> Self {
        BiPoly { t: self.t.iter().map(|((i, j), a)| ((*j, *i), a.clone())).collect() }
    }

    pub fn d_dx(&self) -> Self {
        Self::from_terms(
            self.t.iter().filter(|((i, _), _)| *i > 0).map(|((i, j), a)| ((i - 1, *j), a.clone() * F::from_i64(*i as i64))),
        )
    }

    pub fn d_dy(&self) -> Self {
        Self::from_terms(
            self.t.iter().filter(|((_, j), _)| *j > 0).map(|((i, j), a)| ((*i, j - 1), a.clone() * F::from_i64(*j as i64))),
        )
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> BiPoly<G> {
        BiPoly::from_terms(self.t.iter().map(|(k, v)| (*k, f(v))))
    }

    /// Coefficients as polynomials in x, indexed by the power of y.
    pub fn y_coeffs(&self) -> Vec<UniPoly<F>> {
        let dy = self.deg_y() as usize;
        let dx = self.deg_x() as usize;
        let mut rows = vec![vec![F::zero(); dx + 1]; dy + 1];
        for ((i, j), a) in &self.t {
            rows[*j as usize][*i as usize] = a.clone();
        }
        rows.into_iter().map(UniPoly::new).collect()
    }

    pub fn from_y_coeffs(rows: &[UniPoly<F>]) -> Self {
        let mut p = Self::zero();
        for (j, r) in rows.iter().enumerate() {
            for (i, a) in r.coeffs().iter().enumerate() {
                p.add_term((i as u32, j as u32), a.clone());
            }
        }
        p
    }

    /// Leading term in lex order with y > x.
    fn lead_lex(&self) -> Option<((u32, u32), F)> {
        self.t.iter().max_by(|a, b| (a.0 .1, a.0 .0).cmp(&(b.0 .1, b.0 .0))).map(|(k, v)| (*k, v.clone()))
    }

    /// Exact quotient `self / d`, or None if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (dk, dc) = d.lead_lex()?;
        let mut r = self.clone();
        let mut quo = Self::zero();
        while let Some((rk, rc)) = r.lead_lex() {
            if rk.0 < dk.0 || rk.1 < dk.1 {
                return None;
            }
            let t = Self::monomial(rc / dc.clone(), rk.0 - dk.0, rk.1 - dk.1);
            r = r.sub(&t.mul(d));
            quo = quo.add(&t);
        }
        Some(quo)
    }
}

impl BiPoly<Q> {
    /// Polynomial with integer-primitive coefficients and positive leading term (lex, y > x).
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let vals: Vec<Q> = self.t.values().cloned().collect();
        let (_, scale) = super::integer_primitive(&vals);
        let mut p = self.scale(&(Q::one() / scale));
        if p.lead_lex().is_some_and(|(_, c)| c.is_negative()) {
            p = p.neg();
        }
        p
    }

    /// Gcd over Q[x, y], normalized as in `primitive_part`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive_part();
        }
        if b.is_zero() {
            return a.primitive_part();
        }
        let (ca, pa) = content_y(a);
        let (cb, pb) = content_y(b);
        let c = UniPoly::gcd(&ca, &cb);
        let mut r0 = pa;
        let mut r1 = pb;
        if r0.deg_y() < r1.deg_y() {
            std::mem::swap(&mut r0, &mut r1);
        }
        while !r1.is_zero() && r1.deg_y() > 0 {
            let r = pseudo_rem_y(&r0, &r1);
            r0 = r1;
            r1 = if r.is_zero() { r } else { content_y(&r).1 };
        }
        let g = if r1.is_zero() { r0 } else { Self::one() };
        let cpoly = BiPoly::from_y_coeffs(&[c]);
        cpoly.mul(&g).primitive_part()
    }

    /// Squarefree decomposition over Q: `self = c * prod g_i^i` with the `g_i`
    /// squarefree and pairwise coprime. Trivial factors are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut by_exp: BTreeMap<u32, Self> = BTreeMap::new();
        let (cont, pp) = content_y(self);
        for (a, i) in cont.squarefree_decomposition() {
            let g = BiPoly::from_y_coeffs(&[a]);
            merge(&mut by_exp, i as u32, g);
        }
        if pp.deg_y() > 0 {
            let dy = pp.d_dy();
            let a0 = Self::gcd(&pp, &dy);
            let mut b = pp.exact_div(&a0).expect("gcd divides");
            let c0 = dy.exact_div(&a0).expect("gcd divides");
            let mut d = c0.sub(&b.d_dy());
            let mut i = 1;
            while b.total_degree() > 0 {
                let a = Self::gcd(&b, &d);
                b = b.exact_div(&a).expect("gcd divides");
                let c = d.exact_div(&a).expect("gcd divides");
                d = c.sub(&b.d_dy());
                if a.total_degree() > 0 {
                    merge(&mut by_exp, i, a);
                }
                i += 1;
            }
        }
        by_exp.into_iter().map(|(i, g)| (g.primitive_part(), i)).collect()
    }

    pub fn fmt_xy(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        let mut keys: Vec<_> = self.t.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        for k in keys {
            let a = &self.t[&k];
            let neg = a.is_negative();
            let abs = a.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut mono = Vec::new();
            match k.0 {
                0 => {}
                1 => mono.push("x".to_string()),
                e => mono.push(format!("x^{}", e)),
            }
            match k.1 {
                0 => {}
                1 => mono.push("y".to_string()),
                e => mono.push(format!("y^{}", e)),
            }
            if mono.is_empty() {
                s.push_str(&fmt_q(&abs));
            } else if abs.is_one() {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&format!("{}*{}", fmt_q(&abs), mono.join("*")));
            }
        }
        s
    }
}

fn merge(m: &mut BTreeMap<u32, BiPoly<Q>>, i: u32, g: BiPoly<Q>) {
    let e = m.remove(&i).unwrap_or_else(BiPoly::one);
    m.insert(i, e.mul(&g));
}

/// (content in Q[x], primitive part) with respect to y.
fn content_y(a: &BiPoly<Q>) -> (UniPoly<Q>, BiPoly<Q>) {
    let rows = a.y_coeffs();
    let mut c = UniPoly::zero();
    for r in &rows {
        c = UniPoly::gcd(&c, r);
    }
    if c.is_zero() {
        return (c, a.clone());
    }
    let rows: Vec<UniPoly<Q>> = rows.iter().map(|r| r.exact_div(&c).expect("content divides")).collect();
    (c, BiPoly::from_y_coeffs(&rows))
}

/// Pseudo-remainder of a by b as polynomials in y over Q[x].
fn pseudo_rem_y(a: &BiPoly<Q>, b: &BiPoly<Q>) -> BiPoly<Q> {
    let mut r = a.y_coeffs();
    let bc = b.y_coeffs();
    let db = bc.len() - 1;
    let lb = bc[db].clone();
    while r.len() > db && r.iter().any(|x| !x.is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x = &*x * &lb;
        }
        for (j, bj) in bc.iter().enumerate() {
            r[j + shift] = &r[j + shift] - &(&lr * bj);
        }
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    BiPoly::from_y_coeffs(&r)
}

impl fmt::Display for BiPoly<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_xy())
    }
}
