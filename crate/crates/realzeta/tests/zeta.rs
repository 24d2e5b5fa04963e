use num_rational::BigRational;
use num_traits::Signed;
use realzeta::arith::LaurentPoly;
use realzeta::covering::cover_summary;
use realzeta::parse::parse_polynomial;
use realzeta::report::selftest::{arc_series, rf};
use realzeta::resolution::{resolve, Germ};
use realzeta::zeta::{contribution, dl_datum, locations, poles_beta, poles_top, z_beta, z_top, DLDatum, Mode};

fn datum(text: &str) -> DLDatum {
    let m = resolve(&Germ::from_poly(&parse_polynomial(text).unwrap()).unwrap()).unwrap();
    dl_datum(&m, &cover_summary(&m).unwrap()).unwrap()
}

fn u(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, e)
}

fn qq(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// x^{2p} + y^{2q}: arcs where one term dominates, with the tail in the other
/// variable summed in closed form (ord >= b has measure u^{n-b+1} on n-jets).
fn brieskorn_oracle(p: u64, q: u64, n_max: u64, mode: Mode) -> Vec<LaurentPoly> {
    let um1 = LaurentPoly::from_coeffs(&[-1, 1]);
    let mut out = vec![LaurentPoly::zero()];
    for n in 1..=n_max {
        let mut tot = LaurentPoly::zero();
        let lead = |a: u64| -> LaurentPoly {
            match mode {
                Mode::Naive => um1.mul(&u((n - a) as i64)),
                Mode::Plus => u((n - a) as i64).scale(&2.into()),
                _ => LaurentPoly::zero(),
            }
        };
        for (e, other) in [(2 * p, 2 * q), (2 * q, 2 * p)] {
            if n % e == 0 {
                let a = n / e;
                let b0 = n / other + 1;
                tot = tot.add(&lead(a).mul(&u((n + 1 - b0) as i64)));
            }
        }
        if n % (2 * p) == 0 && n % (2 * q) == 0 {
            let (a, b) = (n / (2 * p), n / (2 * q));
            let w = match mode {
                Mode::Naive => um1.mul(&um1),
                Mode::Plus => LaurentPoly::from_coeffs(&[-3, 1]),
                _ => LaurentPoly::zero(),
            };
            tot = tot.add(&w.mul(&u((2 * n - a - b) as i64)));
        }
        out.push(tot.mul(&u(-2 * n as i64)));
    }
    out
}

/// x^A y^B with A, B even. Leading coefficients (c1, c2) range over (R*)^2 for
/// the naive count and over {c1^A c2^B = 1}, two copies of R*, for the plus count.
fn monomial_oracle(a: u64, b: u64, n_max: u64, mode: Mode) -> Vec<LaurentPoly> {
    let um1 = LaurentPoly::from_coeffs(&[-1, 1]);
    let lead = match mode {
        Mode::Naive => um1.mul(&um1),
        Mode::Plus => um1.scale(&2.into()),
        _ => LaurentPoly::zero(),
    };
    let mut out = vec![LaurentPoly::zero()];
    for n in 1..=n_max {
        let mut tot = LaurentPoly::zero();
        for i in 1..=n {
            for j in 1..=n {
                if a * i + b * j == n {
                    tot = tot.add(&lead.mul(&u(-((i + j) as i64))));
                }
            }
        }
        out.push(tot);
    }
    out
}

#[test]
fn brieskorn_series_match_arc_counts() {
    for (p, q) in [(1, 1), (1, 2), (1, 3), (2, 3), (2, 2)] {
        let d = datum(&format!("x^{} + y^{}", 2 * p, 2 * q));
        for mode in [Mode::Naive, Mode::Plus, Mode::Minus] {
            let got = z_beta(&d, mode).unwrap().series(20);
            assert_eq!(got, brieskorn_oracle(p, q, 20, mode), "p={} q={} {}", p, q, mode);
            assert_eq!(got, arc_series(p, q, 20, mode));
        }
    }
}

#[test]
fn even_monomials() {
    for (a, b) in [(2, 2), (2, 4), (4, 6)] {
        let d = datum(&format!("x^{}*y^{}", a, b));
        for mode in [Mode::Naive, Mode::Plus] {
            assert_eq!(z_beta(&d, mode).unwrap().series(16), monomial_oracle(a, b, 16, mode), "{}", mode);
        }
        assert!(z_top(&d, Mode::Minus).is_zero());
        assert_eq!(z_top(&d, Mode::Naive), rf(&[1], &[(1, a as i64), (1, b as i64)]));
    }
}

#[test]
fn odd_monomial_signs_are_symmetric() {
    let d = datum("x^3*y^2");
    assert_eq!(z_beta(&d, Mode::Plus).unwrap().series(12), z_beta(&d, Mode::Minus).unwrap().series(12));
}

#[test]
fn cusp_closed_forms() {
    let d = datum("y^2 - x^3");
    assert_eq!(z_top(&d, Mode::Naive), rf(&[5, 4], &[(1, 1), (5, 6)]));
    assert_eq!(z_top(&d, Mode::Plus), rf(&[7, 6], &[(1, 1), (5, 6)]));
    assert_eq!(z_top(&d, Mode::Minus), rf(&[3, 2], &[(1, 1), (5, 6)]));
    // complex strata: chi = 1, 1, -1 on the exceptional curves plus three points
    assert_eq!(z_top(&d, Mode::Complex), rf(&[5, 4], &[(1, 1), (5, 6)]));
}

#[test]
fn sign_of_f_flips_signed_functions() {
    let a = datum("y^2 - x^3");
    let b = datum("x^3 - y^2");
    assert_eq!(z_top(&a, Mode::Plus), z_top(&b, Mode::Minus));
    assert_eq!(z_top(&a, Mode::Naive), z_top(&b, Mode::Naive));
}

#[test]
fn residues_at_simple_poles() {
    let d = datum("y^2 - x^3");
    let z = z_top(&d, Mode::Naive);
    let poles = poles_top(&z);
    assert_eq!(locations(&poles).into_iter().collect::<Vec<_>>(), vec![qq(-1, 1), qq(-5, 6)]);
    // (5 + 4s) / ((1 + s)(5 + 6s)): residue 1 / (-1) at -1 and (5 - 10/3) / (6 (1 - 5/6)) at -5/6
    let res = |s0: BigRational| poles.iter().find(|p| p.location == s0).and_then(|p| p.residue_top.clone()).unwrap();
    assert_eq!(res(qq(-1, 1)), qq(-1, 1));
    assert_eq!(res(qq(-5, 6)), qq(5, 3));
    assert!(res(qq(-5, 6)).is_positive());
}

#[test]
fn contribution_of_the_rupture_curve() {
    let m = resolve(&Germ::from_poly(&parse_polynomial("y^2 - x^3").unwrap()).unwrap()).unwrap();
    let d = dl_datum(&m, &cover_summary(&m).unwrap()).unwrap();
    let e = m.exceptional().find(|c| c.n == 6).unwrap();
    let c = contribution(&d, e.id, Mode::Naive).unwrap();
    assert_eq!(c.s0, qq(-5, 6));
    // the residue at -5/6 is R_top divided by N and the omitted factor; only the sign is compared
    assert!(c.r_top.is_positive());
    assert!(contribution(&d, e.id, Mode::Complex).is_err());
}

#[test]
fn beta_poles_refine_top_poles() {
    for text in ["y^2 - x^3", "x^3 + y^3", "x*y*(x - y)*(x - 2*y)^5"] {
        let d = datum(text);
        for mode in [Mode::Naive, Mode::Plus, Mode::Minus] {
            let top = locations(&poles_top(&z_top(&d, mode)));
            let beta = locations(&poles_beta(&z_beta(&d, mode).unwrap(), &d.candidate_poles(mode)));
            assert!(top.is_subset(&beta), "{} {}", text, mode);
        }
    }
}

#[test]
fn datum_json_round_trip() {
    let d = datum("(y^2 - x^3)^2 - x^5*y");
    let back = DLDatum::from_json(&d.to_json().unwrap()).unwrap();
    assert_eq!(back, d);
    assert!(DLDatum::from_json("{\"dimension\": 2}").is_err());
}
