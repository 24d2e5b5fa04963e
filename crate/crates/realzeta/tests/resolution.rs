use realzeta::parse::parse_polynomial;
use realzeta::resolution::{resolve, resolve_with_extra, ComponentKind, ExtraBlowup, Germ, ResolutionModel};
use realzeta::zeta::{dl_datum, z_top, Mode};
use realzeta::covering::cover_summary;
use realzeta::Error;

fn model(text: &str) -> ResolutionModel {
    let f = parse_polynomial(text).unwrap();
    resolve(&Germ::from_poly(&f).unwrap()).unwrap()
}

fn data(m: &ResolutionModel, kind: ComponentKind) -> Vec<(u64, u64)> {
    let mut v: Vec<_> = m.components.iter().filter(|c| c.kind == kind).map(|c| (c.nu, c.n)).collect();
    v.sort_unstable();
    v
}

#[test]
fn cusp_numerical_data() {
    let m = model("y^2 - x^3");
    assert_eq!(data(&m, ComponentKind::Exceptional), vec![(2, 2), (3, 3), (5, 6)]);
    assert_eq!(data(&m, ComponentKind::StrictBranch), vec![(1, 1)]);
    assert!(m.minimal);
    assert!(!m.identity);
}

#[test]
fn nodes_and_smooth_germs_need_no_blowup() {
    for text in ["x", "x*y", "x^3*y^4", "y - x^2"] {
        let m = model(text);
        assert!(m.identity, "{}", text);
        assert!(m.blowups.is_empty(), "{}", text);
    }
}

#[test]
fn complex_conjugate_branches() {
    let m = model("x^2 + y^2");
    assert_eq!(data(&m, ComponentKind::Exceptional), vec![(2, 2)]);
    // one Galois orbit of two conjugate branches
    let strict: Vec<_> = m.strict().collect();
    assert_eq!(strict.len(), 1);
    assert!(!strict[0].is_real());
    assert_eq!(strict[0].weight, 2);
    let e = m.exceptional().next().unwrap();
    assert_eq!(m.real_crossing_count(e.id), 0);
    assert_eq!(m.intersection_total(e.id), 2);
}

// (x^2 - y^3)(x^2 + y^3): tangent cusps separate after the third blowup
#[test]
fn tangent_cusps() {
    let m = model("x^4 - y^6");
    assert_eq!(m.strict().count(), 2);
    assert!(m.strict().all(|c| c.n == 1));
    let top = m.exceptional().map(|c| c.n).max().unwrap();
    assert_eq!(top, 12);
}

#[test]
fn alpha_sum_over_exceptional_curves() {
    // sum over neighbours of (nu_j - nu N_j / N) weighted by crossing weight equals total - 2
    for text in ["y^2 - x^3", "y^3 - x^5", "(y^2 - x^3)^2 - x^5*y", "x^2 + y^6", "x*y*(x - y)*(x + y)"] {
        let m = model(text);
        for e in m.exceptional() {
            let mut sum = num_rational::BigRational::from_integer(0.into());
            for x in m.crossings_of(e.id) {
                let j = m.component(x.other(e.id).unwrap());
                let alpha = j.ratio() * num_rational::BigRational::from_integer((j.n as i64).into())
                    - e.ratio() * num_rational::BigRational::from_integer((j.n as i64).into());
                sum += alpha * num_rational::BigRational::new((x.weight as i64).into(), (e.weight as i64).into());
            }
            let want = m.intersection_total(e.id) as i64 - 2;
            assert_eq!(sum, num_rational::BigRational::from_integer(want.into()), "{} E{}", text, e.id);
        }
    }
}

#[test]
fn extra_blowups_keep_zeta() {
    for text in ["y^2 - x^3", "x*y", "x^2 + y^6", "-y^5 - y^4", "x^3 - x*y^2"] {
        let g = Germ::from_poly(&parse_polynomial(text).unwrap()).unwrap();
        let base = resolve(&g).unwrap();
        let d0 = dl_datum(&base, &cover_summary(&base).unwrap()).unwrap();
        for extra in [ExtraBlowup::GenericPoint, ExtraBlowup::FirstGoodPoint] {
            let m = resolve_with_extra(&g, extra).unwrap();
            assert!(!m.minimal);
            let d = dl_datum(&m, &cover_summary(&m).unwrap()).unwrap();
            for mode in Mode::ALL {
                assert_eq!(z_top(&d, mode), z_top(&d0, mode), "{} {:?} {}", text, extra, mode);
            }
        }
    }
}

#[test]
fn germ_must_vanish_at_origin() {
    let f = parse_polynomial("1 + x").unwrap();
    assert!(matches!(Germ::from_poly(&f), Err(Error::Input(_))));
    assert!(matches!(parse_polynomial("x^"), Err(Error::Parse { .. })));
}

#[test]
fn unit_factor_is_split_off() {
    let g = Germ::from_poly(&parse_polynomial("-y^5 - y^4").unwrap()).unwrap();
    assert!(g.display().starts_with('-'));
    let m = resolve(&g).unwrap();
    assert_eq!(data(&m, ComponentKind::StrictBranch), vec![(1, 4)]);
    assert_eq!(m.origin_sign, Some(-1));
}
