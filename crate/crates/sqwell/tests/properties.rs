//! Randomized invariants over the public API.

use proptest::prelude::*;
use sqwell::analysis::{best_variant, build_table, error_row};
use sqwell::dimensionless::{
    energy_fraction, energy_from_k, n_max_asymmetric, n_max_symmetric, well_strength_from_physical,
    AsymmetricWell, LevelIndex, PhysicalWell, UnitSystem, WellStrength,
};
use sqwell::garrett::{
    k_from_y, y_consistent, y_first_iteration, y_iterate, y_iteration_limit, y_lowest_order,
    y_two_iteration, Penetration, PenetrationResult, Variant,
};
use sqwell::reference::{
    asymmetric_residual, barker_k, solve_exact_asymmetric, solve_exact_symmetric,
    symmetric_residual,
};
use std::f64::consts::PI;

fn ws(v: f64) -> WellStrength {
    WellStrength::new(v).unwrap()
}

fn strength() -> impl Strategy<Value = WellStrength> {
    (0.05f64..50.0).prop_map(ws)
}

/// Tolerance for a transcendental residual at root `k`: float resolution
/// magnified by the local slope of the phase function.
fn sym_residual_tol(p: WellStrength, k: f64) -> f64 {
    let x = k / (2.0 * p.value());
    if x >= 1.0 {
        return 1e-10;
    }
    let slope = 0.5 + 1.0 / (2.0 * p.value() * (1.0 - x * x).sqrt());
    (slope * k * 1e-15).max(1e-13)
}

fn asym_residual_tol(w: &AsymmetricWell, k: f64) -> f64 {
    let term = |pw: f64| {
        let x = k / (2.0 * pw);
        if x >= 1.0 {
            f64::INFINITY
        } else {
            1.0 / (2.0 * pw * (1.0 - x * x).sqrt())
        }
    };
    let slope = 1.0 + term(w.left.value()) + term(w.right.value());
    if !slope.is_finite() {
        return 1e-10;
    }
    (slope * k * 1e-15).max(1e-13)
}

proptest! {
    #[test]
    fn strength_ignores_unit_rescaling(
        m in 0.1f64..10.0,
        v in 0.1f64..10.0,
        l in 0.1f64..10.0,
        c in 1e-3f64..1e3,
    ) {
        // mass up, depth down by the same factor: same strength
        let base = PhysicalWell { mass: m, depth: v, width: l };
        let scaled = PhysicalWell { mass: m * c, depth: v / c, width: l };
        let a = well_strength_from_physical(&base, UnitSystem::EvNm).unwrap();
        let b = well_strength_from_physical(&scaled, UnitSystem::EvNm).unwrap();
        prop_assert!((a.value() - b.value()).abs() <= 1e-12 * a.value());
    }

    #[test]
    fn energy_is_the_depth_fraction(
        m in 0.1f64..10.0,
        v in 0.1f64..10.0,
        l in 0.1f64..10.0,
        t in 0.0f64..1.0,
    ) {
        let w = PhysicalWell { mass: m, depth: v, width: l };
        let p = well_strength_from_physical(&w, UnitSystem::EvNm).unwrap();
        let k = t * 2.0 * p.value();
        let e = energy_from_k(&w, UnitSystem::EvNm, k).unwrap();
        let frac = energy_fraction(p, k);
        prop_assert!((e / v - frac).abs() <= 1e-15 + 1e-12 * frac);
    }

    #[test]
    fn exact_roots_bounded_and_resolved(p in strength(), seed in any::<u32>()) {
        let n = 1 + seed % n_max_symmetric(p);
        let est = solve_exact_symmetric(p, n).unwrap();
        let top = 2.0 * p.value();
        prop_assert!(est.k > 0.0);
        prop_assert!(est.k <= top);
        prop_assert!(est.k < n as f64 * PI);
        let r = symmetric_residual(p, n, est.k);
        let tol = if est.k == top { 1e-10 } else { sym_residual_tol(p, est.k) };
        prop_assert!(r.abs() <= tol, "P = {}, n = {n}: residual {r:e}", p.value());
    }

    #[test]
    fn spectrum_increases_with_level(p in strength()) {
        let mut prev = 0.0;
        for n in 1..=n_max_symmetric(p) {
            let k = solve_exact_symmetric(p, n).unwrap().k;
            prop_assert!(k > prev, "P = {}, n = {n}", p.value());
            prev = k;
        }
    }

    #[test]
    fn asym_solver_symmetries(
        a in 0.05f64..50.0,
        b in 0.05f64..50.0,
        seed in any::<u32>(),
    ) {
        let w = AsymmetricWell::new(ws(a), ws(b));
        let nmax = n_max_asymmetric(&w);
        prop_assume!(nmax >= 1);
        let n = 1 + seed % nmax;
        let est = solve_exact_asymmetric(&w, n).unwrap();
        let r = asymmetric_residual(&w, n, est.k);
        let top = 2.0 * a.min(b);
        let tol = if est.k == top { 1e-10 } else { asym_residual_tol(&w, est.k) };
        prop_assert!(r.abs() <= tol, "residual {r:e}");
        // wall order is a relabeling
        let sw = solve_exact_asymmetric(&w.swapped(), n).unwrap();
        prop_assert!((est.k - sw.k).abs() <= 1e-13 * est.k);
    }

    #[test]
    fn matched_walls_match_symmetric_spectrum(v in 0.05f64..50.0, seed in any::<u32>()) {
        let p = ws(v);
        let w = AsymmetricWell::symmetric(p);
        prop_assert_eq!(n_max_asymmetric(&w), n_max_symmetric(p));
        let n = 1 + seed % n_max_symmetric(p);
        let ka = solve_exact_asymmetric(&w, n).unwrap().k;
        let k = solve_exact_symmetric(p, n).unwrap().k;
        prop_assert!((ka - k).abs() <= 1e-12 * k);
    }

    #[test]
    fn closed_form_is_the_second_iterate(p in strength(), seed in any::<u32>()) {
        let n = 1 + seed % n_max_symmetric(p);
        let closed = y_two_iteration(p, n);
        match closed.y {
            Penetration::Unphysical => {
                prop_assert_eq!(y_iterate(p, n, 2).diverged_at, Some(1));
            }
            Penetration::Physical(y) => {
                let run = y_iterate(p, n, 2);
                prop_assert_eq!(run.terms.len(), 2);
                let second = run.terms[1].y.value().unwrap();
                prop_assert!((y - second).abs() <= 1e-12 * (1.0 + y));
            }
        }
    }

    #[test]
    fn iteration_reach_is_the_lip(p in strength(), n in 1u32..40) {
        let a = n as f64 * PI / (2.0 * p.value());
        prop_assert_eq!(y_first_iteration(p, n).y.is_unphysical(), a >= 1.0);
        prop_assert_eq!(y_two_iteration(p, n).y.is_unphysical(), a >= 1.0);
        let run = y_iterate(p, n, 50);
        prop_assert_eq!(run.diverged_at.is_some(), a >= 1.0);
    }

    #[test]
    fn consistent_root_satisfies_both_forms(p in strength(), seed in any::<u32>()) {
        let n = 1 + seed % n_max_symmetric(p);
        let y = y_consistent(p, n).unwrap().y.value().unwrap();
        let pv = p.shallowness();
        let a = n as f64 * PI / (2.0 * p.value());
        let q = sqwell::garrett::consistency_quartic(p, n, y);
        let scale = ((y + 2.0) * y + (1.0 + a * a + pv * pv)) * y * y
            + 2.0 * pv * pv * y
            + pv * pv;
        prop_assert!(q.abs() <= 1e-10 * scale, "quartic {q:e} vs scale {scale:e}");
        let d = sqwell::garrett::consistency_defect(p, n, y);
        prop_assert!(d.abs() <= 1e-10 * (1.0 + y), "defect {d:e}");
    }

    #[test]
    fn iteration_limit_agrees_with_consistent(p in strength(), seed in any::<u32>()) {
        let n = 1 + seed % n_max_symmetric(p);
        let a = n as f64 * PI / (2.0 * p.value());
        prop_assume!(a < 1.0);
        let lim = y_iteration_limit(p, n).y.value().unwrap();
        let root = y_consistent(p, n).unwrap().y.value().unwrap();
        prop_assert!((lim - root).abs() <= 1e-10 * (1.0 + root));
    }

    #[test]
    fn lowest_order_root_is_exact(v in 0.05f64..200.0) {
        let p = ws(v);
        let y = y_lowest_order(p).y.value().unwrap();
        let pv = p.shallowness();
        let q = y * y - 2.0 * pv * pv * y - pv * pv;
        let scale = y * y + 2.0 * pv * pv * y + pv * pv;
        prop_assert!(q.abs() <= 1e-13 * scale);
    }

    #[test]
    fn deep_ground_state_gap_is_second_order(v in 10.0f64..1000.0) {
        // consistent and lowest-order split at order p^2 for the ground
        // state of a deep well
        let p = ws(v);
        let pv = p.shallowness();
        let y4 = y_consistent(p, 1).unwrap().y.value().unwrap();
        let y0 = y_lowest_order(p).y.value().unwrap();
        prop_assert!((y4 - y0).abs() <= 1.01 * pv * pv);
    }

    #[test]
    fn wave_vector_falls_as_penetration_grows(
        n in 1u32..10,
        y1 in 0.0f64..3.0,
        dy in 1e-6f64..1.0,
    ) {
        let mk = |y: f64| PenetrationResult {
            variant: Variant::Consistent,
            y: Penetration::Physical(y),
            iterations_used: None,
        };
        let k1 = k_from_y(n, &mk(y1)).unwrap().k;
        let k2 = k_from_y(n, &mk(y1 + dy)).unwrap().k;
        prop_assert!(k2 < k1);
        prop_assert!(k1 <= n as f64 * PI);
    }

    #[test]
    fn best_variant_never_loses(p in strength(), seed in any::<u32>()) {
        let n = 1 + seed % n_max_symmetric(p);
        let row = error_row(p, n).unwrap();
        let ex = solve_exact_symmetric(p, n).unwrap();
        let (_, y) = best_variant(p, n).unwrap();
        let win = ((ex.k - n as f64 * PI / (1.0 + y)) / ex.k).abs();
        prop_assert!(win <= row.eps4.abs() + 1e-18);
        prop_assert!(win <= row.eps0.abs() + 1e-18);
        if let Some(e2) = row.eps2 {
            prop_assert!(win <= e2.abs() + 1e-18);
        }
    }

    #[test]
    fn barker_overshoots_moderate_wells(v in 1.0f64..50.0, seed in any::<u32>()) {
        let p = ws(v);
        let n = 1 + seed % n_max_symmetric(p);
        let ex = solve_exact_symmetric(p, n).unwrap().k;
        prop_assert!(barker_k(p, n).k > ex);
    }

    #[test]
    fn level_index_rejects_out_of_range(p in strength(), extra in 1u32..5) {
        let nmax = n_max_symmetric(p);
        prop_assert!(LevelIndex::new(0, nmax).is_err());
        prop_assert!(LevelIndex::new(nmax + extra, nmax).is_err());
        prop_assert!(solve_exact_symmetric(p, nmax + extra).is_err());
        prop_assert!(LevelIndex::for_symmetric(p, nmax).is_ok());
    }
}

#[test]
fn table_rebuild_is_bitwise_stable() {
    let grid: Vec<WellStrength> = (1..=10).map(|v| ws(v as f64)).collect();
    let a = build_table(&grid);
    let b = build_table(&grid);
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.eps4.to_bits(), y.eps4.to_bits());
        assert_eq!(x.eps0.to_bits(), y.eps0.to_bits());
        assert_eq!(x.eps2.map(f64::to_bits), y.eps2.map(f64::to_bits));
        assert_eq!(x.y4.to_bits(), y.y4.to_bits());
        assert_eq!(x.y2.map(f64::to_bits), y.y2.map(f64::to_bits));
        assert_eq!(x.eps_b.to_bits(), y.eps_b.to_bits());
    }
}
