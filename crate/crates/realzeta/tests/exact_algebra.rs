use num_traits::{One, Zero};
use proptest::prelude::*;
use realzeta::arith::factor::{factor_q, is_irreducible};
use realzeta::arith::{q, qf, BiPoly, LaurentFraction, LaurentPoly, RationalFunctionS, UniPoly, ZetaBetaFunction, Q};

fn up(c: &[i64]) -> UniPoly<Q> {
    UniPoly::new(c.iter().map(|&x| q(x)).collect())
}

/// Sylvester-matrix determinant by fraction-free Gaussian elimination over Q.
fn sylvester_resultant(a: &UniPoly<Q>, b: &UniPoly<Q>) -> Q {
    let m = a.deg();
    let n = b.deg();
    let size = m + n;
    let mut mat = vec![vec![Q::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.coeffs().iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.coeffs().iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    let mut det = Q::one();
    for col in 0..size {
        let piv = (col..size).find(|&r| !mat[r][col].is_zero());
        let Some(p) = piv else { return Q::zero() };
        if p != col {
            mat.swap(p, col);
            det = -det;
        }
        det *= mat[col][col].clone();
        for r in col + 1..size {
            let f = &mat[r][col] / &mat[col][col];
            for c in col..size {
                let v = &mat[col][c] * &f;
                mat[r][c] -= v;
            }
        }
    }
    det
}

#[test]
fn resultant_matches_sylvester() {
    let cases = [
        (vec![1, 0, 1], vec![-2, 0, 1]),
        (vec![3, -1, 4, 1], vec![5, 9, -2]),
        (vec![0, 1], vec![-1, 1]),
        (vec![1, 2, 1], vec![1, 1]),
        (vec![7, 0, 0, 2], vec![1, -3, 0, 0, 5]),
    ];
    for (a, b) in cases {
        let (a, b) = (up(&a), up(&b));
        assert_eq!(UniPoly::resultant(&a, &b), sylvester_resultant(&a, &b), "{} / {}", a, b);
    }
}

#[test]
fn factor_known_polynomials() {
    assert!(is_irreducible(&up(&[1, 0, -10, 0, 1])));
    assert!(is_irreducible(&up(&[-2, 0, 0, 1])));
    assert!(is_irreducible(&up(&[1, 0, 1])));
    let f = factor_q(&up(&[-1, 0, 0, 0, 1])).unwrap();
    // t^4 - 1 = (t - 1)(t + 1)(t^2 + 1)
    let degs: Vec<usize> = f.factors.iter().map(|(p, _)| p.deg()).collect();
    assert_eq!(degs, vec![1, 1, 2]);
    // repeated factors
    let p = &up(&[1, 1]).pow(3) * &up(&[-2, 0, 1]).pow(2);
    let f = factor_q(&p.scale(&q(5))).unwrap();
    assert_eq!(f.unit, q(5));
    assert_eq!(f.factors.len(), 2);
    assert!(f.factors.iter().any(|(g, m)| *g == up(&[1, 1]) && *m == 3));
    assert!(f.factors.iter().any(|(g, m)| *g == up(&[-2, 0, 1]) && *m == 2));
}

#[test]
fn factor_swinnerton_dyer_style() {
    // minimal polynomial of sqrt2 + sqrt3 + sqrt5, degree 8, irreducible but split mod every prime
    let p = up(&[576, 0, -960, 0, 352, 0, -40, 0, 1]);
    assert!(is_irreducible(&p));
    let prod = &p * &up(&[-3, 0, 1]);
    let f = factor_q(&prod).unwrap();
    assert_eq!(f.factors.len(), 2);
}

fn rebuild(f: &realzeta::arith::factor::Factorization) -> UniPoly<Q> {
    let mut acc = UniPoly::constant(f.unit.clone());
    for (g, m) in &f.factors {
        acc = &acc * &g.pow(*m as u32);
    }
    acc
}

proptest! {
    #[test]
    fn factorization_reconstructs(a in prop::collection::vec(-6i64..7, 1..4),
                                  b in prop::collection::vec(-6i64..7, 1..4),
                                  c in prop::collection::vec(-6i64..7, 1..3)) {
        let p = &(&up(&a) * &up(&b)) * &up(&c);
        prop_assume!(!p.is_zero());
        let f = factor_q(&p).unwrap();
        prop_assert_eq!(rebuild(&f), p);
        for (g, _) in &f.factors {
            prop_assert!(is_irreducible(g));
        }
    }

    #[test]
    fn gcd_divides_and_bezout(a in prop::collection::vec(-5i64..6, 1..5), b in prop::collection::vec(-5i64..6, 1..5)) {
        let (a, b) = (up(&a), up(&b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (g, s, t) = UniPoly::xgcd(&a, &b);
        prop_assert!(a.exact_div(&g).is_some());
        prop_assert!(b.exact_div(&g).is_some());
        prop_assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn bivariate_squarefree(e1 in 1u32..4, e2 in 1u32..3, s in -3i64..4) {
        // (x^2 - y^3)^e1 * (x + s y^2 + y)^e2
        let g1 = BiPoly::from_terms([((2, 0), q(1)), ((0, 3), q(-1))]);
        let g2 = BiPoly::from_terms([((1, 0), q(1)), ((0, 2), q(s)), ((0, 1), q(1))]);
        let f = g1.pow(e1).mul(&g2.pow(e2));
        let dec = f.squarefree_decomposition();
        let mut acc = BiPoly::one();
        for (g, i) in &dec {
            acc = acc.mul(&g.pow(*i));
        }
        prop_assert!(acc.exact_div(&f).is_some() && f.exact_div(&acc).is_some());
        if e1 != e2 {
            prop_assert_eq!(dec.len(), 2);
        }
    }
}

#[test]
fn bivariate_gcd_and_charts() {
    let a = BiPoly::from_terms([((2, 0), q(1)), ((0, 2), q(-1))]); // x^2 - y^2
    let b = BiPoly::from_terms([((1, 0), q(1)), ((0, 1), q(-1))]).mul(&BiPoly::from_terms([((0, 0), q(1)), ((1, 1), q(1))]));
    let g = BiPoly::gcd(&a, &b);
    assert_eq!(g.total_degree(), 1);
    // chart transforms of the cusp
    let cusp = BiPoly::from_terms([((2, 0), q(1)), ((0, 3), q(-1))]);
    assert_eq!(cusp.mult(), 2);
    let c1 = cusp.chart1(); // x^2 - x^3 y^3 over x^2 -> 1 - x y^3
    assert_eq!(c1, BiPoly::from_terms([((0, 0), q(1)), ((1, 3), q(-1))]));
    let c2 = cusp.chart2(); // x^2 y^2 - y^3 over y^2 -> x^2 - y
    assert_eq!(c2, BiPoly::from_terms([((2, 0), q(1)), ((0, 1), q(-1))]));
    // shift
    let s = BiPoly::from_terms([((0, 2), q(1))]).shift_y(&q(3));
    assert_eq!(s, BiPoly::from_terms([((0, 2), q(1)), ((0, 1), q(6)), ((0, 0), q(9))]));
}

#[test]
fn laurent_fraction_basics() {
    // (u - 1)/(u^(1/2) - 1) = u^(1/2) + 1, limit 2
    let r = LaurentFraction::geometric_ratio(&qf(1, 2)).unwrap();
    assert_eq!(r.limit_u_to_1().unwrap(), q(2));
    assert!(r.as_laurent().is_none());
    // (u-1)/(u^-1 - 1) = -u
    let r = LaurentFraction::geometric_ratio(&q(-1)).unwrap();
    assert_eq!(r.as_laurent().unwrap(), LaurentPoly::monomial(-1, 1));
    // 1/(u-1) is not removable at 1
    let one = LaurentFraction::from_laurent(&LaurentPoly::from_coeffs(&[-1, 1]));
    let inv = one.inv().unwrap();
    assert!(inv.limit_u_to_1().is_err());
    // limit of (u-1)/(u^a - 1) is 1/a
    for (n, d) in [(3, 4), (-1, 4), (7, 3), (-5, 2)] {
        let a = qf(n, d);
        let r = LaurentFraction::geometric_ratio(&a).unwrap();
        assert_eq!(r.limit_u_to_1().unwrap(), Q::one() / a);
    }
    // arithmetic consistency across scales
    let a = LaurentFraction::u_power(1, 2);
    let b = LaurentFraction::u_power(1, 3);
    let c = a.mul(&b);
    assert_eq!(c, LaurentFraction::u_power(5, 6));
    assert_eq!(c.sub(&c), LaurentFraction::zero());
}

#[test]
fn rational_function_display_and_poles() {
    // cusp: (5 + 4s)/((1 + s)(5 + 6s))
    let z = RationalFunctionS::from_terms(&[
        (q(1), vec![(2, 2)]),
        (q(1), vec![(3, 3)]),
        (q(-1), vec![(5, 6)]),
        (q(1), vec![(2, 2), (5, 6)]),
        (q(1), vec![(3, 3), (5, 6)]),
        (q(1), vec![(1, 1), (5, 6)]),
    ]);
    let expect = RationalFunctionS::new(up(&[5, 4]), &up(&[1, 1]) * &up(&[5, 6])).unwrap();
    assert_eq!(z, expect);
    assert_eq!(z.display(), "(5 + 4s)/((1 + s)(5 + 6s))");
    let poles = z.poles();
    assert_eq!(poles.len(), 2);
    assert_eq!(poles[0].location, qf(-5, 6));
    assert_eq!(poles[1].location, q(-1));
    // residue at -1: (5-4)/(5-6) = -1
    assert_eq!(poles[1].residue, q(-1));
    assert_eq!(RationalFunctionS::term(&q(3), &[(3, 4)]).display(), "3/(3 + 4s)");
    assert_eq!(RationalFunctionS::zero().display(), "0");
}

#[test]
fn zeta_beta_series_and_equality() {
    // single stratum: (u-1) * u^-1 T / (1 - u^-1 T)
    let z = ZetaBetaFunction::from_strata(&[(LaurentPoly::from_coeffs(&[-1, 1]), vec![(1, 1)])]);
    let s = z.series(3);
    assert!(s[0].is_zero());
    // coefficient of T^n: (u - 1) u^-n
    for (n, c) in s.iter().enumerate().skip(1) {
        let e = LaurentPoly::from_coeffs(&[-1, 1]).shift(-(n as i64));
        assert_eq!(c, &e);
    }
    assert_eq!(z.pole_order_at(&q(-1)), 1);
    assert_eq!(z.pole_order_at(&qf(-1, 2)), 0);
    // two presentations of the same function
    let a = ZetaBetaFunction::from_strata(&[(LaurentPoly::one(), vec![(1, 2)])]);
    let b = ZetaBetaFunction::from_strata(&[(LaurentPoly::one(), vec![(1, 2)]), (LaurentPoly::zero(), vec![(3, 4)])]);
    assert!(a.same_function(&b));
}
