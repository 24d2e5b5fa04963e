use realzeta::covering::cover_summary;
use realzeta::monodromy::{char_polys_origin, eigenvalue_witness, CycloProduct, WitnessKind};
use realzeta::parse::parse_polynomial;
use realzeta::resolution::{resolve, Germ, ResolutionModel};
use realzeta::zeta::{dl_datum, locations, poles_top, z_top, Mode};
use num_integer::Integer;
use num_rational::BigRational;

fn model(text: &str) -> ResolutionModel {
    resolve(&Germ::from_poly(&parse_polynomial(text).unwrap()).unwrap()).unwrap()
}

fn phi(q: u64) -> i64 {
    (1..=q).filter(|k| k.gcd(&q) == 1).count() as i64
}

/// Eigenvalues of x^a + y^b are exp(2 pi i (i/a + j/b)), 0 < i < a, 0 < j < b.
/// Returns the multiplicity of one primitive q-th root.
fn brieskorn_multiplicity(a: u64, b: u64, q: u64) -> i64 {
    let l = a.lcm(&b);
    let mut m = 0;
    for i in 1..a {
        for j in 1..b {
            let num = (i * (l / a) + j * (l / b)) % l;
            if l / num.gcd(&l) == q {
                m += 1;
            }
        }
    }
    assert_eq!(m % phi(q), 0);
    m / phi(q)
}

#[test]
fn brieskorn_spectra() {
    for a in 2..=6u64 {
        for b in a..=7u64 {
            let o = char_polys_origin(&model(&format!("x^{} + y^{}", a, b))).unwrap();
            assert_eq!(o.p1.degree(), ((a - 1) * (b - 1)) as i64, "x^{}+y^{}", a, b);
            for q in 1..=a.lcm(&b) {
                assert_eq!(o.p1.root_multiplicity(q), brieskorn_multiplicity(a, b, q), "x^{}+y^{} q={}", a, b, q);
            }
        }
    }
}

#[test]
fn cusp_and_monomials() {
    let o = char_polys_origin(&model("y^2 - x^3")).unwrap();
    assert_eq!(o.p1.display_expanded(), "t^2 - t + 1");
    let o = char_polys_origin(&model("x^3*y^4")).unwrap();
    assert_eq!(o.p0, CycloProduct::single(1, 1));
    assert_eq!(o.p1, CycloProduct::single(1, 1));
    assert!(char_polys_origin(&model("x")).unwrap().p1.is_one());
}

#[test]
fn cyclotomic_products() {
    let mut z = CycloProduct::single(6, 1);
    z.add(1, 1);
    z.add(2, -1);
    z.add(3, -1);
    assert_eq!(z.to_string(), "(t - 1)(t^6 - 1)/((t^2 - 1)(t^3 - 1))");
    assert!(z.is_polynomial());
    assert_eq!(z.degree(), 2);
    assert_eq!(z.display_expanded(), "t^2 - t + 1");
    assert_eq!(z.root_multiplicity(6), 1);
    assert_eq!(z.root_multiplicity(2), 0);
    assert!(!CycloProduct::single(2, -1).is_polynomial());
}

#[test]
fn every_naive_pole_has_a_witness() {
    for text in ["y^2 - x^3", "x^2 + y^6", "x^3 + y^3", "x*y*(x - y)*(x - 2*y)^5", "x^3*y^4"] {
        let m = model(text);
        let cv = cover_summary(&m).unwrap();
        let d = dl_datum(&m, &cv).unwrap();
        let o = char_polys_origin(&m).unwrap();
        let poles = locations(&poles_top(&z_top(&d, Mode::Naive)));
        for s0 in &poles {
            let w = eigenvalue_witness(&m, &cv, &o, s0, Mode::Naive, &poles).unwrap();
            assert!(w.is_some(), "{} {}", text, s0);
        }
    }
    let m = model("y^2 - x^3");
    let cv = cover_summary(&m).unwrap();
    let o = char_polys_origin(&m).unwrap();
    let s0 = BigRational::new((-5).into(), 6.into());
    let poles = [s0.clone(), BigRational::from_integer((-1).into())].into_iter().collect();
    let w = eigenvalue_witness(&m, &cv, &o, &s0, Mode::Naive, &poles).unwrap().unwrap();
    assert_eq!((w.q, w.kind), (6, WitnessKind::OriginH1));
    assert!(eigenvalue_witness(&m, &cv, &o, &BigRational::new(1.into(), 7.into()), Mode::Naive, &poles).is_err());
}
