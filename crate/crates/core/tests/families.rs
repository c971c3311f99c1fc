use multigrade::families::*;
use multigrade::rational::{int, rat, Rational};
use multigrade::Solution;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(200)
}

fn param() -> impl Strategy<Value = i64> {
    -50i64..=50
}

fn ratio() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=50).prop_map(|(n, d)| rat(n, d))
}

fn all_exponents(k: u32) -> Vec<u32> {
    (1..=k).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn k2_family_is_complete(p in param(), q in param()) {
        prop_assume!(p != 0 || q != 0);
        let c = k2_family(p, q).unwrap();
        prop_assert_eq!(c.verified_r(), &all_exponents(2)[..]);
        // homogeneous of degree two
        let scaled = k2_family(3 * p, 3 * q).unwrap();
        prop_assert_eq!(scaled.solution(), &c.solution().scaled(&BigInt::from(9)));
    }

    #[test]
    fn k3_pythagorean_is_complete(m in 1i64..=50, n in 0i64..=50, l in 1i64..=3) {
        prop_assume!(m > n);
        let (a, b, c) = (l * (m * m - n * n), l * 2 * m * n, l * (m * m + n * n));
        let cand = k3_pythagorean(a, b, c).unwrap();
        prop_assert_eq!(cand.verified_r(), &all_exponents(3)[..]);
        prop_assert!(k3_pythagorean(a, b, c + 1).is_err());
    }

    #[test]
    fn k3_family_is_complete(p in param(), q in param()) {
        prop_assume!(p != 0 || q != 0);
        let c = k3_family(p, q).unwrap();
        prop_assert_eq!(c.verified_r(), &all_exponents(3)[..]);
    }

    #[test]
    fn k3_partial_keeps_odd_exponents(p in ratio(), q in ratio(), r in ratio(), s in ratio()) {
        if let Ok(c) = k3_partial(&p, &q, &r, &s) {
            prop_assert!(c.solution().holds_for(1));
            prop_assert!(c.solution().holds_for(3));
        }
    }

    #[test]
    fn k3_partial_roots_complete_it(p in param(), q in param(), r in param()) {
        if let SRoots::Roots(roots) = k3_solve_s(p, q, r) {
            let (a, b, c) = k3_s_quadratic(&p.into(), &q.into(), &r.into());
            for s in roots {
                let value = Rational::from_integer(a.clone()) * &s * &s
                    + Rational::from_integer(b.clone()) * &s
                    + Rational::from_integer(c.clone());
                prop_assert!(value.is_zero());
                let pr = |v: i64| Rational::from_integer(v.into());
                if let Ok(cand) = k3_partial(&pr(p), &pr(q), &pr(r), &s) {
                    prop_assert_eq!(cand.verified_r(), &all_exponents(3)[..]);
                }
            }
        }
    }

    #[test]
    fn k4_raw_exponent_ladder(u in ratio(), v in ratio(), w in ratio()) {
        if let Ok(c) = k4_raw(&u, &v, &w) {
            prop_assert!(c.solution().holds_for(1) && c.solution().holds_for(2));
        }
        prop_assume!(!v.is_zero());
        let w = k4_w(&u, &v).unwrap();
        if let Ok(c) = k4_raw(&u, &v, &w) {
            let s = c.solution();
            prop_assert!(s.holds_for(1) && s.holds_for(2) && s.holds_for(3));
            if k4_v_quadratic(&u, &v).is_zero() {
                prop_assert!(s.holds_for(4));
            }
        }
    }

    #[test]
    fn k5_families_are_complete(m in param(), n in param()) {
        prop_assume!(m != 0 || n != 0);
        for c in [k5_family1(m, n).unwrap(), k5_family2(m, n).unwrap()] {
            prop_assert_eq!(c.verified_r(), &all_exponents(5)[..]);
        }
    }

    #[test]
    fn k5_symmetric_pairs_verify(m in param(), n in param(), x in param(), y in param()) {
        prop_assert!(k5_symmetric_raw(m, n, x, y).verify());
    }

    #[test]
    fn k5_ec_defects_are_exact(u in ratio(), v in ratio()) {
        let d = k5_quartic_defect(&u, &v);
        for r in [1, 3, 5] {
            prop_assert!(k5_ec_defect(&u, &v, r).is_zero());
        }
        let d2 = &d * &d;
        prop_assert_eq!(k5_ec_defect(&u, &v, 2), int(-8) * &d2);
        prop_assert_eq!(k5_ec_defect(&u, &v, 4), int(-32) * &d2 * &d2);
    }

    #[test]
    fn k5_family2_is_a_shifted_symmetric_pair(m in param(), n in param()) {
        prop_assume!(m != 0 || n != 0);
        // X2 = X3 with x = m + n, y = -m; the shared term becomes zero after the shift
        let te = k5_symmetric_raw(m, n, m + n, -m);
        let shift = -te.a()[2].clone();
        let moved = multigrade::system::frolov_shift(&te, &shift).unwrap();
        if let Ok(sol) = multigrade::system::drop_zeros(&moved) {
            prop_assert!(sol.verify());
            if sol.shape() == k5_family2(m, n).unwrap().solution().shape() {
                prop_assert_eq!(sol.normalize().unwrap(), k5_family2(m, n).unwrap().normalized().unwrap());
            }
        }
    }
}

#[test]
fn k4_candidates_lie_on_the_quadratic() {
    // -32u^4 + 32u^3 + 24u^2 - 16u + 1 = 529/81 at u = -2/3
    let (u, t) = (rat(-2, 3), rat(23, 9));
    assert_eq!(&t * &t, k4_quartic(&u));
    for v in k4_v_candidates(&u, &t).unwrap() {
        assert!(k4_v_quadratic(&u, &v).is_zero());
        let w = k4_w(&u, &v).unwrap();
        assert!(k4_raw(&u, &v, &w).unwrap().is_complete());
    }
}

#[test]
fn degenerate_parameters_are_rejected() {
    assert!(k2_family(0, 0).is_err());
    assert!(k3_family(0, 0).is_err());
    assert!(k5_family1(0, 0).is_err());
    assert!(k4_w(&int(1), &int(0)).is_err());
    assert!(k4_v_candidates(&int(0), &int(1)).is_err());
}

#[test]
fn worked_examples() {
    let k3 = k3_family(2, 1).unwrap().normalized().unwrap();
    assert_eq!(
        k3,
        Solution::from_i64(3, &[29, 22], &[30, 20, 4, -3]).unwrap()
    );
    let k5 = k5_family2(2, 1).unwrap().normalized().unwrap();
    let expected = Solution::from_i64(5, &[21, 14, -7, 14], &[18, -6, 9, 20, -4, 5]).unwrap();
    assert_eq!(k5, expected.normalize().unwrap());
}
