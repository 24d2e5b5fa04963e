use proptest::prelude::*;
use realzeta::algebraic::extend::{factor_over, lift_q, real_roots_over, roots_of_irreducible};
use realzeta::algebraic::{real_roots_q, Nf, NfElem, NumberField, RealAlg};
use realzeta::arith::{q, Field, UniPoly, Q};

fn up(c: &[i64]) -> UniPoly<Q> {
    UniPoly::new(c.iter().map(|&x| q(x)).collect())
}

fn sqrt2() -> Nf {
    NumberField::real(up(&[-2, 0, 1]), q(1), q(2))
}

fn to_f64(r: &RealAlg) -> f64 {
    r.approx(10).parse().unwrap()
}

#[test]
fn arithmetic_in_q_sqrt2() {
    let k = sqrt2();
    let a = NfElem::generator(&k);
    assert_eq!(a.clone() * a.clone(), NfElem::from_i64(2));
    let b = a.clone() + NfElem::from_i64(1);
    let inv = b.inv();
    assert_eq!(inv.clone() * b, NfElem::from_i64(1));
    // 1/(1 + sqrt2) = sqrt2 - 1 > 0
    assert_eq!(inv, a.clone() - NfElem::from_i64(1));
    assert_eq!(inv.sign(), 1);
    assert_eq!((NfElem::from_i64(1) - a.clone()).sign(), -1);
    // 3 - 2 sqrt2 is small but positive
    assert_eq!((NfElem::from_i64(3) - a.clone() * NfElem::from_i64(2)).sign(), 1);
    // 99 - 70 sqrt2 ~ 0.00505
    assert_eq!((NfElem::from_i64(99) - a * NfElem::from_i64(70)).sign(), 1);
}

#[test]
fn factor_over_number_fields() {
    let k = Some(sqrt2());
    let f = factor_over(&k, &lift_q(&up(&[-2, 0, 1]))).unwrap();
    assert_eq!(f.len(), 2);
    assert!(f.iter().all(|(g, m)| g.deg() == 1 && *m == 1));
    let f = factor_over(&k, &lift_q(&up(&[1, 0, 0, 0, 1]))).unwrap();
    assert_eq!(f.iter().map(|(g, _)| g.deg()).collect::<Vec<_>>(), vec![2, 2]);
    let f = factor_over(&k, &lift_q(&up(&[1, 0, 1]))).unwrap();
    assert_eq!(f.len(), 1);
    // cube root of 2: t^3 - 2 = (t - a)(t^2 + a t + a^2)
    let cbrt = NumberField::real(up(&[-2, 0, 0, 1]), q(1), q(2));
    let f = factor_over(&Some(cbrt), &lift_q(&up(&[-2, 0, 0, 1]))).unwrap();
    assert_eq!(f.iter().map(|(g, _)| g.deg()).collect::<Vec<_>>(), vec![1, 2]);
    // squared factor over K
    let k2 = sqrt2();
    let a = NfElem::generator(&k2);
    let lin = UniPoly::new(vec![-a.clone(), NfElem::from_i64(1)]);
    let p = &(&lin * &lin) * &lift_q(&up(&[1, 0, 1]));
    let f = factor_over(&Some(k2), &p).unwrap();
    assert_eq!(f.len(), 2);
    assert!(f.iter().any(|(g, m)| g.deg() == 1 && *m == 2));
}

#[test]
fn roots_over_real_extension() {
    // sqrt3 over Q(sqrt2): two real roots, each in a degree-4 field
    let k = Some(sqrt2());
    let roots = roots_of_irreducible(&k, &lift_q(&up(&[-3, 0, 1])), true).unwrap();
    assert_eq!(roots.len(), 2);
    for r in &roots {
        assert!(r.real);
        assert_eq!(r.field.as_ref().unwrap().degree(), 4);
        assert_eq!(r.theta.clone() * r.theta.clone(), NfElem::from_i64(3));
        let a = r.alpha.clone().unwrap();
        assert_eq!(a.clone() * a.clone(), NfElem::from_i64(2));
        assert_eq!(a.sign(), 1, "embedding must send a to +sqrt2");
    }
    assert_eq!(roots[0].theta.sign(), -1);
    assert_eq!(roots[1].theta.sign(), 1);
    // t^2 + 1 over Q: one non-real orbit of size 2
    let r = roots_of_irreducible(&None, &lift_q(&up(&[1, 0, 1])), true).unwrap();
    assert_eq!(r.len(), 1);
    assert!(!r[0].real);
    assert_eq!(r[0].multiplicity_of_orbit, 2);
    // t^3 - 2 over Q: one real root, one non-real orbit of size 2
    let r = roots_of_irreducible(&None, &lift_q(&up(&[-2, 0, 0, 1])), true).unwrap();
    assert_eq!(r.iter().filter(|x| x.real).count(), 1);
    assert_eq!(r.iter().find(|x| !x.real).unwrap().multiplicity_of_orbit, 2);
    // (t - sqrt2)(t + 1)(t^2 + 1) over Q(sqrt2): real roots -1 and sqrt2
    let k2 = sqrt2();
    let a = NfElem::generator(&k2);
    let p = &(&UniPoly::new(vec![-a, NfElem::from_i64(1)]) * &lift_q(&up(&[1, 1]))) * &lift_q(&up(&[1, 0, 1]));
    let rr = real_roots_over(&Some(k2), &p).unwrap();
    assert_eq!(rr.len(), 2);
    assert_eq!(rr[0].0.theta, NfElem::from_i64(-1));
}

#[test]
fn interval_and_sampling() {
    let roots = real_roots_q(&up(&[-2, 0, 1]));
    assert_eq!(roots.len(), 2);
    let s = roots[0].0.sample_between(&roots[1].0);
    assert_eq!(s, q(0));
    let r3 = real_roots_q(&(&up(&[-2, 0, 1]) * &up(&[-3, 0, 1])));
    assert_eq!(r3.len(), 4);
    let mid = r3[2].0.sample_between(&r3[3].0);
    assert!(mid > Q::new(14142.into(), 10000.into()) && mid < Q::new(17321.into(), 10000.into()));
    assert_eq!(r3[3].0.approx(4), "1.7321");
}

proptest! {
    #[test]
    fn real_root_counts(rs in prop::collection::vec(-9i64..10, 0..4), ks in prop::collection::vec(-6i64..7, 0..3)) {
        // product of linear factors and quadratics t^2 - k
        let mut p = up(&[1]);
        let mut expected: Vec<f64> = Vec::new();
        for r in &rs {
            p = &p * &up(&[-r, 1]);
            expected.push(*r as f64);
        }
        for k in &ks {
            p = &p * &up(&[-k, 0, 1]);
            if *k > 0 {
                let s = (*k as f64).sqrt();
                expected.push(s);
                expected.push(-s);
            } else if *k == 0 {
                expected.push(0.0);
                expected.push(0.0);
            }
        }
        let roots = real_roots_q(&p);
        let mut got: Vec<f64> = Vec::new();
        for (r, m) in &roots {
            for _ in 0..*m {
                got.push(to_f64(r));
            }
        }
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        prop_assert_eq!(got.len(), expected.len());
        for (g, e) in got.iter().zip(expected.iter()) {
            prop_assert!((g - e).abs() < 1e-6, "{} vs {}", g, e);
        }
    }
}
