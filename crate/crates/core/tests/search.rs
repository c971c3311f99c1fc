use std::collections::BTreeSet;

use multigrade::families::k2_family;
use multigrade::search::*;
use multigrade::{Solution, SystemShape};
use num_bigint::BigInt;
use proptest::prelude::{any, prop_assert, prop_assert_eq, proptest, ProptestConfig};

fn shape(k: u32, s1: usize, s2: usize) -> SystemShape {
    SystemShape::new(k, s1, s2).unwrap()
}

fn run(spec: SearchSpec) -> SearchReport {
    exhaustive_search(&spec).unwrap()
}

/// Normalized nontrivial instances of the degree-2 family inside the box.
fn k2_family_image(height: i64) -> BTreeSet<Solution> {
    let h = BigInt::from(height);
    let mut image = BTreeSet::new();
    for p in -height..=height {
        for q in -height..=height {
            let Ok(c) = k2_family(p, q) else { continue };
            if c.is_trivial() {
                continue;
            }
            let s = c.normalized().unwrap();
            if s.height() <= h {
                image.insert(s);
            }
        }
    }
    image
}

#[test]
fn k2_search_matches_family_image() {
    for height in [3, 7, 12] {
        let report = run(SearchSpec::new(shape(2, 1, 3), height as u64));
        assert!(report.exhaustive);
        let found: BTreeSet<Solution> = report.solutions.into_iter().collect();
        assert_eq!(found, k2_family_image(height), "height {height}");
    }
}

#[test]
fn strategies_agree() {
    for (s, h) in [
        (shape(2, 2, 3), 6),
        (shape(3, 2, 4), 5),
        (shape(4, 3, 5), 3),
        (shape(3, 3, 3), 5),
    ] {
        let plain = run(SearchSpec::new(s, h).with_strategy(Strategy::Plain));
        let mitm = run(SearchSpec::new(s, h).with_strategy(Strategy::MeetInTheMiddle));
        assert!(plain.exhaustive && mitm.exhaustive);
        assert_eq!(plain.solutions, mitm.solutions, "{s}");
    }
}

#[test]
fn reports_do_not_depend_on_threads() {
    let spec = SearchSpec::new(shape(3, 2, 4), 6);
    let reference = run(spec.clone().with_threads(Some(1)));
    assert!(!reference.solutions.is_empty());
    for t in [2, 3, 8] {
        let report = run(spec.clone().with_threads(Some(t)));
        assert_eq!(report.solutions, reference.solutions);
        assert_eq!(report.nodes, reference.nodes);
    }
}

#[test]
fn below_the_bound_is_empty() {
    for k in 2..=4 {
        for s in shapes_below_bound(k) {
            let report = run(SearchSpec::new(s, 6));
            assert!(report.exhaustive && report.solutions.is_empty(), "{s}");
        }
    }
}

#[test]
fn audits() {
    assert!(k3_impossibility_audit(1).unwrap());
    assert!(k3_impossibility_audit(12).unwrap());
    let report = beta4_window_search(4).unwrap();
    assert!(report.exhaustive && report.solutions.is_empty());
    assert_eq!(k3_discriminant(1, 1), (BigInt::from(-8), false));
    assert_eq!(k3_discriminant(0, 5), (BigInt::from(0), true));
    assert_eq!(k3_discriminant(1, -1), (BigInt::from(-4), false));
}

#[test]
fn degree_one_counts_sums() {
    let report = run(SearchSpec::new(shape(1, 1, 2), 2));
    assert!(report
        .solutions
        .contains(&Solution::from_i64(1, &[2], &[1, 1]).unwrap()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_hit_is_sound(k in 1u32..=3, s1 in 1usize..=2, extra in 0usize..=2, h in 1u64..=4, zeros in any::<bool>()) {
        let s2 = s1 + extra + 1;
        let report = run(SearchSpec::new(shape(k, s1, s2), h).with_zero_terms(zeros));
        prop_assert!(report.exhaustive);
        let mut seen = BTreeSet::new();
        for s in &report.solutions {
            prop_assert!(s.verify());
            prop_assert!(!s.is_trivial());
            prop_assert!(s.height() <= BigInt::from(h));
            prop_assert_eq!(s.normalize().unwrap(), s.clone());
            prop_assert!(seen.insert(s.clone()));
            if !zeros {
                prop_assert!(s.lhs().iter().chain(s.rhs()).all(|t| t != &BigInt::from(0)));
            }
        }
        prop_assert!(report.solutions.windows(2).all(|w| w[0] < w[1]));
    }
}
