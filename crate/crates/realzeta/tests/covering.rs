use realzeta::covering::{count_cover, cover_summary, glue_kind, points_for, GlueKind};
use realzeta::parse::parse_polynomial;
use realzeta::report::selftest::{two_point_family_beta, suite_inputs};
use realzeta::report::germ_from_input;
use realzeta::resolution::{resolve, Germ};
use realzeta::arith::LaurentPoly;
use num_rational::BigRational;

/// Maximal intervals of RP^1 on which eps * g > 0, the two unbounded arcs joined.
fn positive_intervals(signs: &[i8], eps: i8) -> u64 {
    let on: Vec<bool> = signs.iter().map(|&s| s == eps).collect();
    let mut runs = 0;
    for i in 0..on.len() {
        let prev = if i == 0 { on[on.len() - 1] } else { on[i - 1] };
        if on[i] && !prev {
            runs += 1;
        }
    }
    runs
}

#[test]
fn double_covers_with_simple_roots() {
    // t^2 = eps g(x), g with 2k simple real roots: one oval per positive interval
    for k in 1..=6usize {
        let signs: Vec<i8> = (0..=2 * k).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
        let d = vec![1u64; 2 * k];
        for flip in [false, true] {
            for eps in [1i8, -1] {
                let cnt = count_cover(2, &signs, &d, 0, flip, eps).unwrap();
                assert_eq!(cnt.c, positive_intervals(&signs, eps), "k={} flip={} eps={}", k, flip, eps);
                assert_eq!(cnt.points - cnt.seam, 2 * k as u64);
            }
        }
    }
}

#[test]
fn constant_cover() {
    assert_eq!(count_cover(2, &[1], &[], 0, false, 1).unwrap().c, 2);
    assert_eq!(count_cover(2, &[1], &[], 0, true, 1).unwrap().c, 1);
    assert_eq!(count_cover(2, &[1], &[], 0, false, -1).unwrap().c, 0);
    assert!(count_cover(3, &[1], &[], 0, false, 1).is_err());
}

#[test]
fn parabola() {
    let cnt = count_cover(2, &[1, -1], &[1], 1, false, 1).unwrap();
    assert_eq!(cnt.c, 1);
}

#[test]
fn local_gluing() {
    assert_eq!(glue_kind(2, 1), GlueKind::Fold);
    assert_eq!(glue_kind(2, 2), GlueKind::Swap);
    assert_eq!(glue_kind(2, 4), GlueKind::Straight);
    assert_eq!(glue_kind(4, 2), GlueKind::Fold);
    assert_eq!(glue_kind(6, 0), GlueKind::Straight);
    assert_eq!(points_for(3, -1, 1), 1);
    assert_eq!(points_for(2, -1, 1), 0);
    assert_eq!(points_for(2, -1, -1), 2);
}

#[test]
fn two_point_family_is_two_open_arcs() {
    for m in 1..=6 {
        for p in 1..=6 {
            assert_eq!(two_point_family_beta(m, p).unwrap(), LaurentPoly::from_coeffs(&[-2, 2]), "m={} p={}", m, p);
        }
    }
}

#[test]
fn circle_of_x2_plus_y2() {
    let m = resolve(&Germ::from_poly(&parse_polynomial("x^2 + y^2").unwrap()).unwrap()).unwrap();
    let cv = cover_summary(&m).unwrap();
    let e = m.exceptional().next().unwrap();
    let c = cv.component(e.id).unwrap();
    assert_eq!(c.beta_plus, LaurentPoly::from_coeffs(&[1, 1]));
    assert!(c.beta_minus.is_zero());
    assert!(cv.j_plus.contains(&e.id));
    assert!(cv.j_minus.is_empty());
}

#[test]
fn euler_and_degree_two_over_suite() {
    let neg = BigRational::from_integer((-1).into());
    for input in suite_inputs() {
        let m = resolve(&germ_from_input(&input).unwrap()).unwrap();
        let cv = cover_summary(&m).unwrap();
        for c in &cv.components {
            let e = m.component(c.id);
            if !e.is_exceptional() || e.n % 2 == 1 {
                continue;
            }
            let k = m.real_crossing_count(e.id) as i64;
            // chi_c of a circle minus k points is -k; each sign cover is a union of circles minus its points
            let plus = c.beta_plus.eval_q(&neg);
            let minus = c.beta_minus.eval_q(&neg);
            assert_eq!(plus.clone() + minus.clone(), BigRational::from_integer((-2 * k).into()), "{:?} E{}", input, e.id);
            assert_eq!(plus, BigRational::from_integer((-(c.crossing_points_plus as i64)).into()));
            assert_eq!(minus, BigRational::from_integer((-(c.crossing_points_minus as i64)).into()));
        }
    }
}
