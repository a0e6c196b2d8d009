//! Shared machinery for the randomized interlacing suites: seeded root
//! configurations, polynomial construction from roots, and the suite
//! runners themselves (each panics on the first failing case).

use std::collections::BTreeSet;

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use baxter_core::combinat::f_polynomial;
use baxter_core::polycore::{rat, rat_int, Poly, Rat};
use baxter_core::realroots::{interlace_verdict, isolate_real_roots};

/// `count` distinct rationals with numerators in [lo, hi], ascending.
fn distinct_rationals(rng: &mut ChaCha8Rng, count: usize, lo: i64, hi: i64) -> Vec<Rat> {
    let mut set: BTreeSet<Rat> = BTreeSet::new();
    while set.len() < count {
        set.insert(rat(rng.gen_range(lo..=hi), rng.gen_range(1..=8)));
    }
    set.into_iter().collect()
}

pub fn poly_from_roots(roots: &[Rat], lead: &Rat) -> Poly {
    let mut p = Poly::constant(lead.clone());
    for r in roots {
        p = &p * &Poly::new(vec![-r.clone(), Rat::one()]);
    }
    p
}

fn positive_lead(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(1..=5), rng.gen_range(1..=3))
}

/// A strictly interlacing pair (f, g): 2d-1 sorted distinct roots, f
/// taking the d even positions and g the d-1 odd ones.
fn interlacing_roots(rng: &mut ChaCha8Rng, d: usize, lo: i64, hi: i64) -> (Vec<Rat>, Vec<Rat>) {
    let vals = distinct_rationals(rng, 2 * d - 1, lo, hi);
    let f_roots: Vec<Rat> = vals.iter().step_by(2).cloned().collect();
    let g_roots: Vec<Rat> = vals.iter().skip(1).step_by(2).cloned().collect();
    (f_roots, g_roots)
}

/// Refines every isolating interval until it lies strictly left of zero,
/// then reports whether all roots are negative.
fn all_roots_negative(p: &Poly) -> bool {
    let mut iso = isolate_real_roots(p).expect("isolation");
    let mut width = rat(1, 2);
    for _ in 0..64 {
        let done = iso
            .intervals
            .iter()
            .all(|iv| (iv.is_exact() && iv.lo.is_negative()) || iv.hi.is_negative());
        if done {
            return true;
        }
        iso.refine(&width).expect("refine");
        width = width / rat_int(2);
    }
    false
}

/// 100 seeded cases of the Hadamard-product theorem: f*p real-rooted with
/// simple negative zeros, g*q (weakly) interlacing it, strictly when the
/// inputs interlace strictly. Every fourth case plants a shared root to
/// exercise the weak branch.
pub fn run_hadamard_interlacing_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4757_3231);
    for case in 0..100 {
        let df = rng.gen_range(2..=5usize);
        let dp = rng.gen_range(2..=5usize);
        let (f_roots, mut g_roots) = interlacing_roots(&mut rng, df, -600, -1);
        let (p_roots, q_roots) = interlacing_roots(&mut rng, dp, -600, -1);
        let weak = case % 4 == 0;
        if weak {
            g_roots[0] = f_roots[0].clone();
        }
        let f = poly_from_roots(&f_roots, &positive_lead(&mut rng));
        let g = poly_from_roots(&g_roots, &positive_lead(&mut rng));
        let p = poly_from_roots(&p_roots, &positive_lead(&mut rng));
        let q = poly_from_roots(&q_roots, &positive_lead(&mut rng));

        let fp = f.hadamard(&p);
        let iso = isolate_real_roots(&fp).unwrap();
        assert_eq!(
            iso.real_root_count_with_multiplicity as isize,
            fp.degree(),
            "case {case}: f*p not real-rooted"
        );
        assert!(
            iso.intervals.iter().all(|iv| iv.multiplicity == 1),
            "case {case}: repeated zero of f*p"
        );
        assert!(all_roots_negative(&fp), "case {case}: nonnegative zero of f*p");

        let gq = g.hadamard(&q);
        let verdict = interlace_verdict(&gq, &fp);
        assert!(
            verdict.relation.is_weak_or_strict(),
            "case {case}: g*q does not interlace f*p ({:?})",
            verdict.relation
        );
        if !weak {
            assert!(
                verdict.relation.is_strict(),
                "case {case}: expected strict interlacing, got {:?}",
                verdict.relation
            );
        }
    }
}

/// 100 seeded cases of derivative interlacing: g strictly interlacing f
/// (roots of any sign) implies g' strictly interlaces f'.
pub fn run_derivative_interlacing_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4D41_524B);
    for case in 0..100 {
        let d = rng.gen_range(3..=6usize);
        let (f_roots, g_roots) = interlacing_roots(&mut rng, d, -300, 300);
        let f = poly_from_roots(&f_roots, &positive_lead(&mut rng));
        let g = poly_from_roots(&g_roots, &positive_lead(&mut rng));
        assert!(
            interlace_verdict(&g, &f).relation.is_strict(),
            "case {case}: construction not strict"
        );
        let verdict = interlace_verdict(&g.derivative(), &f.derivative());
        assert!(
            verdict.relation.is_strict(),
            "case {case}: derivatives lost strict interlacing ({:?})",
            verdict.relation
        );
    }
}

/// (n+1) F_{n,2} = (F_{n,1} * F_{n+1,1})' for 2 <= n <= 15, exactly.
pub fn check_f_identity() {
    for n in 2..=15i64 {
        let lhs = f_polynomial(n, 2).scale(&rat_int(n + 1));
        let rhs = f_polynomial(n, 1).hadamard(&f_polynomial(n + 1, 1)).derivative();
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

/// G_{n,m} = F_{n,1} * F_{n-1,m-1} satisfies G' = n F_{n-1,m} for
/// 3 <= n <= 12, 2 <= m <= 4, exactly.
pub fn check_g_identity() {
    for n in 3..=12i64 {
        for m in 2..=4i64 {
            let g = f_polynomial(n, 1).hadamard(&f_polynomial(n - 1, m - 1));
            let rhs = f_polynomial(n - 1, m).scale(&rat_int(n));
            assert_eq!(g.derivative(), rhs, "n = {n}, m = {m}");
        }
    }
}
