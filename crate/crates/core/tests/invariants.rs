//! Property-based invariants across the public API.

mod common;

use common::{instance, normal, rng};
use mattol_core::linalg;
use mattol_core::norms::{comparison_matrix, matrix_norm, regularity_radius};
use mattol_core::oracle::{falsify_radius, OracleConfig};
use mattol_core::parametrize::{self, Method};
use mattol_core::properties::{check, principal_index_sets};
use mattol_core::radius;
use mattol_core::{Direction, IndexSet, Matrix, NormKind, PropertyKind, Settings};
use proptest::prelude::*;

fn holds(a: &Matrix, kind: PropertyKind) -> bool {
    check(a, kind, &Settings::default()).unwrap().holds
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn consistent_norms_are_submultiplicative(seed in any::<u64>(), n in 1usize..=5) {
        let s = Settings::default();
        let mut r = rng(seed);
        let (a, b) = (normal(&mut r, n), normal(&mut r, n));
        for kind in NormKind::ALL.into_iter().filter(|k| k.capabilities().consistent) {
            let ab = matrix_norm(&(&a * &b), kind, &s).unwrap();
            let bound = matrix_norm(&a, kind, &s).unwrap() * matrix_norm(&b, kind, &s).unwrap();
            prop_assert!(ab <= bound * (1.0 + 1e-12) + 1e-14, "{kind}: {ab} > {bound}");
        }
    }

    #[test]
    fn regularity_radius_identities(seed in any::<u64>(), n in 1usize..=6) {
        let s = Settings::default();
        let mut r = rng(seed);
        let a = normal(&mut r, n);
        prop_assume!(linalg::relative_det(&a) > 1e-6);
        let smin = linalg::sigma_min(&a);
        for kind in [NormKind::Spectral, NormKind::Frobenius] {
            let rr = regularity_radius(&a, kind, &s).unwrap();
            prop_assert!((rr - smin).abs() <= 1e-10 * (1.0 + smin));
        }
        let inv = linalg::inverse(&a).unwrap();
        for kind in [NormKind::Induced1, NormKind::InducedInf] {
            let product = regularity_radius(&a, kind, &s).unwrap() * matrix_norm(&inv, kind, &s).unwrap();
            prop_assert!((product - 1.0).abs() <= 1e-10);
        }
        let rmax = regularity_radius(&a, NormKind::MaxNorm, &s).unwrap();
        let inf_one = matrix_norm(&inv, NormKind::InfOne, &s).unwrap();
        prop_assert!((rmax * inf_one - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn comparison_matrix_is_idempotent(seed in any::<u64>(), n in 1usize..=6) {
        let a = normal(&mut rng(seed), n);
        let c = comparison_matrix(&a);
        prop_assert_eq!(comparison_matrix(&c), c);
    }

    #[test]
    fn class_inclusions(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let pd = instance(PropertyKind::PositiveDefinite, &mut r, n);
        prop_assert!(holds(&pd, PropertyKind::PMatrix));
        let m = instance(PropertyKind::MMatrix, &mut r, n);
        for kind in [PropertyKind::PMatrix, PropertyKind::InverseNonnegative, PropertyKind::HMatrix] {
            prop_assert!(holds(&m, kind), "M-matrix is not {}", kind);
        }
        let h = instance(PropertyKind::HMatrix, &mut r, n);
        let positive_diagonal = (0..n).all(|i| h[(i, i)] > 0.0);
        if positive_diagonal {
            prop_assert!(holds(&h, PropertyKind::PMatrix));
        }
        let tp = instance(PropertyKind::TotallyPositive, &mut r, n);
        prop_assert!(holds(&tp, PropertyKind::PMatrix));
    }

    #[test]
    fn p_matrix_decider_matches_enumeration(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        // Mix P-matrices with arbitrary ones so both verdicts occur.
        let a = if seed % 2 == 0 { instance(PropertyKind::PMatrix, &mut r, n) } else { normal(&mut r, n) };
        let s = Settings::default();
        let mut all_positive = true;
        for mask in 1u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let k = idx.len();
            let sub = Matrix::from_row_major(
                k,
                &(0..k * k).map(|t| a[(idx[t / k], idx[t % k])]).collect::<Vec<_>>(),
            )
            .unwrap();
            let scale = linalg::det_scale(&sub);
            all_positive &= scale > 0.0 && linalg::det_raw(&sub) > s.rel_tol * scale;
        }
        prop_assert_eq!(holds(&a, PropertyKind::PMatrix), all_positive);
        prop_assert_eq!(principal_index_sets(n, &s).unwrap().len(), (1 << n) - 1);
    }

    #[test]
    fn simple_bounds_inside_exact(seed in any::<u64>(), n in 1usize..=5) {
        let s = Settings::default();
        let mut r = rng(seed);
        let a = instance(PropertyKind::MMatrix, &mut r, n);
        let d = normal(&mut r, n);
        let inner = parametrize::m_matrix_interval_simple(&a, &d, &s).unwrap();
        let exact = parametrize::m_matrix_interval_exact(&a, &Direction::General(d), &s).unwrap();
        prop_assert!(inner.contains(0.0) && exact.contains(0.0));
        prop_assert!(inner.lo >= exact.lo - 1e-9 * (1.0 + exact.lo.abs()), "{inner} vs {exact}");
        prop_assert!(inner.hi <= exact.hi + 1e-9 * (1.0 + exact.hi.abs()), "{inner} vs {exact}");
    }

    #[test]
    fn zero_is_always_admissible(seed in any::<u64>(), n in 1usize..=4, k in 0usize..8) {
        let s = Settings::default();
        let kind = PropertyKind::ALL[k];
        let mut r = rng(seed);
        let a = instance(kind, &mut r, n);
        let d = common::direction(kind, &mut r, n);
        let p = parametrize::parametrize(&a, &Direction::General(d), kind, Method::Auto, &s).unwrap();
        prop_assert!(p.set.contains(0.0), "{}", p.set);
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn certificates_leave_the_class(seed in any::<u64>(), n in 1usize..=4, k in 0usize..8, ni in 0usize..5) {
        let s = Settings::default();
        let kind = PropertyKind::ALL[k];
        let norm = [NormKind::Spectral, NormKind::Frobenius, NormKind::MaxNorm, NormKind::Induced1, NormKind::InducedInf][ni];
        let mut r = rng(seed);
        let a = instance(kind, &mut r, n);
        let Ok(est) = radius::radius(&a, kind, norm, &s) else {
            return Ok(());
        };
        prop_assert!(est.lower <= est.upper);
        if let Some(cert) = &est.certificate {
            let size = matrix_norm(&cert.perturbation, norm, &s).unwrap();
            prop_assert!((size - cert.norm).abs() <= 1e-8 * (1.0 + size), "{size} vs {}", cert.norm);
            prop_assert!(cert.norm <= est.upper * (1.0 + 1e-8));
            if cert.attained {
                // On the boundary up to rounding; every class here excludes singular matrices.
                let moved = &a + &cert.perturbation;
                prop_assert!(
                    !holds(&moved, kind) || linalg::sigma_min(&moved) <= 1e-9 * (1.0 + a.max_abs()),
                    "{kind}/{norm}: attained certificate keeps the class"
                );
            } else {
                let moved = &a + &cert.perturbation.scale(1.0 + 1e-6);
                prop_assert!(!holds(&moved, kind), "{kind}/{norm}: certificate keeps the class");
            }
        }
    }

    #[test]
    fn lower_bounds_are_sound(seed in any::<u64>(), n in 1usize..=4, ni in 0usize..5) {
        let s = Settings::default();
        let norm = [NormKind::Spectral, NormKind::Frobenius, NormKind::MaxNorm, NormKind::Induced1, NormKind::InducedInf][ni];
        let a = instance(PropertyKind::HMatrix, &mut rng(seed), n);
        let est = radius::h_radius(&a, norm, &s).unwrap();
        prop_assume!(est.lower > 0.0);
        let cfg = OracleConfig { random_trials: 100, seed, ..OracleConfig::default() };
        let v = falsify_radius(&a, PropertyKind::HMatrix, norm, est.lower, &cfg, &s);
        prop_assert!(v.consistent, "{}", v.detail);
    }

    #[test]
    fn symmetric_m_matrix_bounds_coincide(seed in any::<u64>(), n in 1usize..=5) {
        let s = Settings::default();
        let m = instance(PropertyKind::MMatrix, &mut rng(seed), n).symmetric_part();
        prop_assume!(holds(&m, PropertyKind::MMatrix));
        let est = radius::m_radius(&m, NormKind::Spectral, &s).unwrap();
        let (lo, hi) = est.bounds.unwrap();
        prop_assert!((lo - hi).abs() <= 1e-9 * (1.0 + hi), "{lo} vs {hi}");
        prop_assert!((est.lower - hi).abs() <= 1e-9 * (1.0 + hi));
    }

    #[test]
    fn oracle_is_deterministic(seed in any::<u64>(), n in 1usize..=3) {
        let s = Settings::default();
        let a = instance(PropertyKind::PMatrix, &mut rng(seed), n);
        let cfg = OracleConfig { random_trials: 50, seed, ..OracleConfig::default() };
        let x = falsify_radius(&a, PropertyKind::PMatrix, NormKind::Frobenius, 2.0, &cfg, &s);
        let y = falsify_radius(&a, PropertyKind::PMatrix, NormKind::Frobenius, 2.0, &cfg, &s);
        prop_assert_eq!(x, y);
    }
}

#[test]
fn index_set_round_trip() {
    let s = IndexSet::new(vec![0, 2, 3], 4).unwrap();
    assert_eq!(s.to_string(), "{1,3,4}");
}
