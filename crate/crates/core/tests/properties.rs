//! Property suites: polynomial algebra laws on random inputs, the
//! Hadamard-product interlacing theorems and the derivative-interlacing
//! theorem on seeded random root configurations, the structural F/G
//! identities, and the asymptotic-expansion invariants (residual
//! vanishing, empirical convergence rate, enclosure soundness samples,
//! and round trips).

mod common;

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use baxter_core::asymptotics::{
    asymptotic_order, certify_ratio_enclosure, dominant_root, r2_expansion, ratio_expansion,
    ratio_from_sequence, sequence_expansion, verify_ratio_expansion,
};
use baxter_core::polycore::{rat, rat_int, Poly, Rat};
use baxter_core::precursive::{extend_sequence, PRecurrence};

// ---------------------------------------------------------------------------
// Random polynomial algebra (proptest)
// ---------------------------------------------------------------------------

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat_strategy(), 0..=7).prop_map(Poly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hadamard_is_bilinear(
        f in poly_strategy(),
        g in poly_strategy(),
        h in poly_strategy(),
        c in rat_strategy(),
    ) {
        let lhs = (&f + &g.scale(&c)).hadamard(&h);
        let rhs = &f.hadamard(&h) + &g.scale(&c).hadamard(&h);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_degree_adds(f in poly_strategy(), g in poly_strategy()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!((&f * &g).degree(), f.degree() + g.degree());
    }

    #[test]
    fn derivative_product_rule(f in poly_strategy(), g in poly_strategy()) {
        let lhs = (&f * &g).derivative();
        let rhs = &(&f.derivative() * &g) + &(&f * &g.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_is_linear(
        f in poly_strategy(),
        g in poly_strategy(),
        c in rat_strategy(),
    ) {
        let lhs = (&f + &g.scale(&c)).derivative();
        let rhs = &f.derivative() + &g.derivative().scale(&c);
        prop_assert_eq!(lhs, rhs);
    }
}

// ---------------------------------------------------------------------------
// Seeded interlacing suites and structural identities
// ---------------------------------------------------------------------------

#[test]
fn hadamard_interlacing_suite() {
    common::run_hadamard_interlacing_suite();
}

#[test]
fn derivative_interlacing_suite() {
    common::run_derivative_interlacing_suite();
}

#[test]
fn f_identity_via_hadamard_derivative() {
    common::check_f_identity();
}

#[test]
fn g_identity_via_hadamard_derivative() {
    common::check_g_identity();
}

// ---------------------------------------------------------------------------
// Asymptotic-expansion invariants
// ---------------------------------------------------------------------------

#[test]
fn residual_vanishes_for_every_expansion() {
    for rec in [PRecurrence::baxter(), PRecurrence::catalan()] {
        let rho = dominant_root(&rec).unwrap();
        for eta in 1..=6 {
            let rx = ratio_expansion(&rec, &rho, eta).unwrap();
            assert!(verify_ratio_expansion(&rec, &rx), "eta = {eta}");
        }
    }
}

#[test]
fn ansatz_error_decays_at_the_predicted_rate() {
    // |r(n) - rho(1 + sum d_i n^{-i})| ~ K n^{-(eta+1)}: the fitted K must
    // be stable within a factor of two across n = 100, 1000, 10000.
    let samples = [100i64, 1000, 10000];
    for rec in [PRecurrence::baxter(), PRecurrence::catalan()] {
        let rho = dominant_root(&rec).unwrap();
        let window = extend_sequence(&rec, samples[..].iter().max().unwrap() + 1).unwrap();
        for eta in [2u32, 3] {
            let rx = ratio_expansion(&rec, &rho, eta).unwrap();
            let ks: Vec<Rat> = samples
                .iter()
                .map(|&n| {
                    let ratio = window.get(n + 1).unwrap() / window.get(n).unwrap();
                    (ratio - rx.eval(n)).abs() * rat_int(n).pow(eta as i32 + 1)
                })
                .collect();
            let kmin = ks.iter().min().unwrap();
            let kmax = ks.iter().max().unwrap();
            assert!(!kmin.is_zero(), "eta = {eta}: exact ansatz unexpected here");
            assert!(
                kmax <= &(kmin * rat_int(2)),
                "eta = {eta}: K spread too wide: {} .. {}",
                kmin,
                kmax
            );
        }
    }
}

#[test]
fn certified_enclosures_hold_at_fifty_samples() {
    // Baxter at eta = 4: strict containment beyond the certified base
    let rec = PRecurrence::baxter();
    let rx = ratio_expansion(&rec, &rat_int(8), 4).unwrap();
    let enc = certify_ratio_enclosure(&rec, &rx, 4_000_000).unwrap();
    let window = extend_sequence(&rec, enc.n0 + 50 * 7 + 1).unwrap();
    for k in 0..50 {
        let n = enc.n0 + 7 * k;
        let ratio = window.get(n + 1).unwrap() / window.get(n).unwrap();
        assert!(enc.phi_minus.eval_int(n).unwrap() <= ratio, "n = {n}");
        assert!(ratio <= enc.phi_plus.eval_int(n).unwrap(), "n = {n}");
    }
    // Catalan: the degenerate enclosure is exact at every sample
    let rec = PRecurrence::catalan();
    let rx = ratio_expansion(&rec, &rat_int(4), 2).unwrap();
    let enc = certify_ratio_enclosure(&rec, &rx, 1000).unwrap();
    let window = extend_sequence(&rec, enc.n0 + 50 * 3 + 1).unwrap();
    for k in 0..50 {
        let n = enc.n0 + 3 * k;
        let ratio = window.get(n + 1).unwrap() / window.get(n).unwrap();
        assert_eq!(enc.phi_minus.eval_int(n).unwrap(), ratio, "n = {n}");
        assert_eq!(enc.phi_plus.eval_int(n).unwrap(), ratio, "n = {n}");
    }
}

#[test]
fn eta2_enclosure_brackets_the_ratio_at_100() {
    let rec = PRecurrence::baxter();
    let rx = ratio_expansion(&rec, &rat_int(8), 2).unwrap();
    let enc = certify_ratio_enclosure(&rec, &rx, 4_000_000).unwrap();
    assert!(enc.n0 >= 1);
    let window = extend_sequence(&rec, 101).unwrap();
    let ratio = window.get(101).unwrap() / window.get(100).unwrap();
    assert!(enc.phi_minus.eval_int(100).unwrap() < ratio);
    assert!(ratio < enc.phi_plus.eval_int(100).unwrap());
}

#[test]
fn sequence_roundtrip_regenerates_ratio_coefficients() {
    for rec in [PRecurrence::baxter(), PRecurrence::catalan()] {
        let rho = dominant_root(&rec).unwrap();
        for eta in 2..=6 {
            let rx = ratio_expansion(&rec, &rho, eta).unwrap();
            let sx = sequence_expansion(&rx).unwrap();
            assert_eq!(ratio_from_sequence(&sx, eta), rx.d, "eta = {eta}");
        }
    }
}

#[test]
fn asymptotic_order_is_monotone_in_beta() {
    let rec = PRecurrence::baxter();
    let mut last = 0;
    for eta in 2..=6 {
        let rx = ratio_expansion(&rec, &rat_int(8), eta).unwrap();
        let order = asymptotic_order(&r2_expansion(&rx).unwrap()).unwrap();
        assert!(order >= last, "order dropped at eta = {eta}");
        last = order;
    }
    assert_eq!(last, 3);
}
