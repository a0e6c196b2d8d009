//! Exact real-root isolation and certified interlacing verdicts.
//!
//! Two unrelated meanings of "Sturm" meet in this module, deliberately:
//!
//! - A *Sturm chain* (internal) is the classical signed-remainder sequence
//!   of a squarefree polynomial; its sign-variation counts drive exact root
//!   isolation by rational bisection.
//! - A *Sturm sequence* (public, [`check_family_sturm`]) is a chain of
//!   polynomials each strictly below the next in the interlacing order; a
//!   *generalized* Sturm sequence allows weak relations.
//!
//! Interlacing of g against f (ascending root lists with multiplicity,
//! x for f and y for g):
//!
//! - g interlaces f:        deg f = deg g + 1 and x1 <= y1 <= x2 <= ... <= xn
//! - g alternates left of f: deg f = deg g     and y1 <= x1 <= y2 <= ... <= xn
//!
//! plus the degenerate conventions for constants and the zero polynomial.
//! Strict versions forbid every equality. Verdicts are certified: shared
//! roots are recognized exactly through gcd isolation, and distinct roots
//! are separated by interval refinement, so no verdict ever rests on a
//! numeric approximation.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polycore::{Int, Poly, Rat};

// ---------------------------------------------------------------------------
// Public types
// ---------------------------------------------------------------------------

/// An interval containing exactly one distinct real root of a target
/// polynomial. Rational roots that the bisection lands on are reported as
/// degenerate intervals with `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: u32,
}

impl IsolatingInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

/// All real roots of a polynomial, isolated and sorted by position.
#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub poly: Poly,
    pub intervals: Vec<IsolatingInterval>,
    pub real_root_count_with_multiplicity: usize,
}

impl RootIsolation {
    /// Shrinks every non-degenerate interval below `width` by sign
    /// bisection on the squarefree part (which changes sign across each
    /// interval, its roots being simple).
    pub fn refine(&mut self, width: &Rat) -> Result<()> {
        if self.intervals.iter().all(|iv| iv.is_exact()) {
            return Ok(());
        }
        let sqf = self.poly.squarefree_part()?;
        for iv in &mut self.intervals {
            while !iv.is_exact() && iv.width() > *width {
                match bisect_once(&sqf, &iv.lo, &iv.hi) {
                    Bisection::Exact(x) => {
                        iv.lo = x.clone();
                        iv.hi = x;
                    }
                    Bisection::Left(hi) => iv.hi = hi,
                    Bisection::Right(lo) => iv.lo = lo,
                }
            }
        }
        Ok(())
    }
}

/// The certified relation between an ordered pair (g, f).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    StrictlyInterlaces,
    Interlaces,
    StrictlyAlternatesLeft,
    AlternatesLeft,
    Incomparable,
    NotRealRooted,
}

impl Relation {
    /// True for the two strict relations (g ≺ f).
    pub fn is_strict(self) -> bool {
        matches!(self, Relation::StrictlyInterlaces | Relation::StrictlyAlternatesLeft)
    }

    /// True whenever g ⪯ f holds at all (weakly or strictly).
    pub fn is_weak_or_strict(self) -> bool {
        !matches!(self, Relation::Incomparable | Relation::NotRealRooted)
    }
}

/// One distinct root position in the merged witness listing; owned by f,
/// by g, or by both (a shared root).
#[derive(Clone, Debug)]
pub struct WitnessRoot {
    pub lo: Rat,
    pub hi: Rat,
    pub mult_f: u32,
    pub mult_g: u32,
}

/// Verdict for interlace_verdict(g, f): the relation, the merged root
/// listing demonstrating (or refuting) the inequality chain, and the exact
/// gcd whose roots are the shared roots.
#[derive(Clone, Debug)]
pub struct InterlaceVerdict {
    pub relation: Relation,
    pub witness: Vec<WitnessRoot>,
    pub shared_roots: Poly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SturmMode {
    Strict,
    Generalized,
}

/// Result of a family-level chain check.
#[derive(Clone, Debug)]
pub struct FamilyCheck {
    pub ok: bool,
    /// Index i of the first adjacent pair (polys[i], polys[i+1]) that fails.
    pub first_failure: Option<usize>,
    pub per_pair: Vec<InterlaceVerdict>,
}

// ---------------------------------------------------------------------------
// Sturm chains and sign bookkeeping
// ---------------------------------------------------------------------------

fn sign_of(i: &Int) -> i32 {
    if i.is_zero() {
        0
    } else if i.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of an integer polynomial at p/q, by homogeneous Horner evaluation
/// (no rational reductions on the way).
fn sign_at(poly: &[Int], x: &Rat) -> i32 {
    let (p, q) = (x.numer(), x.denom());
    let d = poly.len() - 1;
    let mut acc = poly[d].clone();
    let mut qpow = Int::one();
    for i in (0..d).rev() {
        qpow = &qpow * q;
        acc = acc * p + &poly[i] * &qpow;
    }
    sign_of(&acc)
}

/// Classical Sturm chain of a squarefree primitive integer polynomial.
/// Remainders are computed by positive-scalar pseudo-division so sign
/// variations keep their root-counting meaning, then divided by their
/// (positive) integer content to tame coefficient growth.
struct SturmChain {
    chain: Vec<Vec<Int>>,
}

impl SturmChain {
    fn new(sqfree: &Poly) -> SturmChain {
        let p0 = sqfree
            .content_primitive()
            .1
            .int_coeffs()
            .expect("primitive part has integer coefficients");
        debug_assert!(p0.len() >= 2, "Sturm chain needs degree >= 1");
        let p1 = int_content_normalize(
            sqfree
                .derivative()
                .content_primitive()
                .1
                .int_coeffs()
                .unwrap(),
        );
        let mut chain = vec![p0, p1];
        loop {
            let k = chain.len();
            let r = positive_pseudo_rem(&chain[k - 2], &chain[k - 1]);
            if r.is_empty() {
                break;
            }
            let mut r = int_content_normalize(r);
            for c in &mut r {
                *c = -std::mem::take(c);
            }
            chain.push(r);
            if chain.last().unwrap().len() == 1 {
                break;
            }
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let signs = self.chain.iter().map(|p| sign_at(p, x));
        count_variations(signs)
    }

    fn variations_at_neg_inf(&self) -> usize {
        let signs = self.chain.iter().map(|p| {
            let s = sign_of(p.last().unwrap());
            if (p.len() - 1) % 2 == 1 {
                -s
            } else {
                s
            }
        });
        count_variations(signs)
    }

    fn variations_at_pos_inf(&self) -> usize {
        count_variations(self.chain.iter().map(|p| sign_of(p.last().unwrap())))
    }

    /// Number of roots in (lo, hi], which equals the open-interval count
    /// whenever hi is not a root.
    fn count_between(&self, var_lo: usize, var_hi: usize) -> usize {
        var_lo - var_hi
    }

    fn count_real_roots(&self) -> usize {
        self.count_between(self.variations_at_neg_inf(), self.variations_at_pos_inf())
    }
}

fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0i32;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Divides by the positive integer content (keeps the sign of the leading
/// coefficient, unlike full primitive normalization).
fn int_content_normalize(mut v: Vec<Int>) -> Vec<Int> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = Int::zero();
    for c in &v {
        g = num_integer::Integer::gcd(&g, c);
    }
    for c in &mut v {
        *c = &*c / &g;
    }
    v
}

/// Remainder of c·a divided by b for some positive integer c: every
/// reduction step scales by |lead(b)| rather than lead(b), so the result
/// has the same sign as the true remainder.
fn positive_pseudo_rem(a: &[Int], b: &[Int]) -> Vec<Int> {
    let db = b.len() - 1;
    let lead_abs = b[db].abs();
    let lead_sign = Int::from(sign_of(&b[db]));
    let mut rem: Vec<Int> = a.to_vec();
    while rem.len() > db {
        let da = rem.len() - 1;
        let coef = &rem[da] * &lead_sign;
        for c in rem.iter_mut() {
            *c = &*c * &lead_abs;
        }
        for j in 0..db {
            rem[da - db + j] = &rem[da - db + j] - &coef * &b[j];
        }
        rem.pop();
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    rem
}

// ---------------------------------------------------------------------------
// Root bounds and bisection
// ---------------------------------------------------------------------------

/// A power of two strictly larger than the absolute value of every root.
/// Uses the Cauchy bound 1 + max |a_i| / |a_d|, improved by the
/// Enestroem-Kakeya bound max a_k / a_{k+1} when all coefficients share a
/// sign (the generated families do, and their Cauchy bounds are enormous).
fn root_bound_pow2(p: &Poly) -> Rat {
    let coeffs = p.coeffs();
    let lead = p.leading().unwrap().abs();
    let mut top = Rat::zero();
    for c in &coeffs[..coeffs.len() - 1] {
        let v = c.abs() / &lead;
        if v > top {
            top = v;
        }
    }
    let mut bound = top + Rat::one();
    if coeffs.iter().all(|c| c.is_positive()) || coeffs.iter().all(|c| c.is_negative()) {
        let mut ek = Rat::zero();
        for w in coeffs.windows(2) {
            let v = (&w[0] / &w[1]).abs();
            if v > ek {
                ek = v;
            }
        }
        if ek < bound {
            bound = ek;
        }
    }
    let mut b = Rat::one();
    let two = Rat::from_integer(Int::from(2));
    while b <= bound {
        b = &b * &two;
    }
    b
}

enum Bisection {
    /// The midpoint is an exact root.
    Exact(Rat),
    /// The root lies in (lo, mid); carries the new hi.
    Left(Rat),
    /// The root lies in (mid, hi); carries the new lo.
    Right(Rat),
}

/// One bisection step on an interval across which `sqf` changes sign.
fn bisect_once(sqf: &Poly, lo: &Rat, hi: &Rat) -> Bisection {
    let ints = sqf.content_primitive().1.int_coeffs().unwrap();
    let mid = (lo + hi) / Rat::from_integer(Int::from(2));
    match sign_at(&ints, &mid) {
        0 => Bisection::Exact(mid),
        s if s == sign_at(&ints, lo) => Bisection::Right(mid),
        _ => Bisection::Left(mid),
    }
}

/// Finds points a < x < b close to x at which `ints` is nonzero,
/// by repeatedly halving the offset. Terminates because a polynomial has
/// finitely many roots.
fn nonroot_flanks(ints: &[Int], x: &Rat, initial: &Rat) -> (Rat, Rat) {
    let two = Rat::from_integer(Int::from(2));
    let mut step = initial.clone();
    loop {
        let a = x - &step;
        let b = x + &step;
        if sign_at(ints, &a) != 0 && sign_at(ints, &b) != 0 {
            return (a, b);
        }
        step = &step / &two;
    }
}

// ---------------------------------------------------------------------------
// Isolation
// ---------------------------------------------------------------------------

/// Isolates all distinct real roots of f into disjoint intervals, with
/// multiplicities recovered from the Yun squarefree decomposition.
pub fn isolate_real_roots(f: &Poly) -> Result<RootIsolation> {
    if f.is_zero() {
        return Err(Error::Domain("cannot isolate roots of the zero polynomial".into()));
    }
    if f.degree() == 0 {
        return Ok(RootIsolation {
            poly: f.clone(),
            intervals: Vec::new(),
            real_root_count_with_multiplicity: 0,
        });
    }
    let yun = f.yun_factors()?;
    let mut sqf = Poly::one();
    for (fe, _) in &yun {
        sqf = &sqf * fe;
    }
    let plain = isolate_squarefree(&sqf);

    // Attribute each distinct root to its (unique) Yun factor; roots of
    // linear factors are exactly rational and reported degenerate.
    let factor_ints: Vec<(Vec<Int>, u32)> = yun
        .iter()
        .map(|(fe, e)| (fe.int_coeffs().unwrap(), *e))
        .collect();
    let mut intervals = Vec::with_capacity(plain.len());
    let mut total = 0usize;
    for (mut lo, mut hi) in plain {
        let mut mult = 0u32;
        for (fe, e) in &factor_ints {
            let hit = if lo == hi {
                sign_at(fe, &lo) == 0
            } else {
                sign_at(fe, &lo) * sign_at(fe, &hi) < 0
            };
            if hit {
                mult = *e;
                if fe.len() == 2 {
                    let root = -Rat::new(fe[0].clone(), fe[1].clone());
                    lo = root.clone();
                    hi = root;
                }
                break;
            }
        }
        debug_assert!(mult > 0, "every isolated root belongs to a Yun factor");
        total += mult as usize;
        intervals.push(IsolatingInterval {
            lo,
            hi,
            multiplicity: mult,
        });
    }
    Ok(RootIsolation {
        poly: f.clone(),
        intervals,
        real_root_count_with_multiplicity: total,
    })
}

/// Core bisection isolation on a squarefree polynomial; returns sorted
/// (lo, hi) pairs, degenerate on exact rational hits, with all endpoints
/// non-roots (of the squarefree input).
fn isolate_squarefree(sqf: &Poly) -> Vec<(Rat, Rat)> {
    if sqf.degree() < 1 {
        return Vec::new();
    }
    let ints = sqf.content_primitive().1.int_coeffs().unwrap();
    let chain = SturmChain::new(sqf);
    let bound = root_bound_pow2(sqf);
    let lo = -&bound;
    let mut out = Vec::new();
    // Depth-first, left interval first, so results come out sorted.
    let mut stack = vec![(lo.clone(), chain.variations_at(&lo), bound.clone(), chain.variations_at(&bound))];
    let two = Rat::from_integer(Int::from(2));
    while let Some((lo, var_lo, hi, var_hi)) = stack.pop() {
        match chain.count_between(var_lo, var_hi) {
            0 => continue,
            1 => {
                // Tighten exact hits early: a midpoint root inside a
                // count-1 interval is the root.
                out.push((lo, hi));
                continue;
            }
            _ => {}
        }
        let mid = (&lo + &hi) / &two;
        if sign_at(&ints, &mid) == 0 {
            // mid is a root; flank it with non-root points and recurse on
            // the outer pieces once they exclude mid's neighborhood.
            let quarter = (&hi - &lo) / Rat::from_integer(Int::from(4));
            let (mut a, mut b) = nonroot_flanks(&ints, &mid, &quarter);
            // shrink until (a, b) contains only the root at mid
            loop {
                let va = chain.variations_at(&a);
                let vb = chain.variations_at(&b);
                if chain.count_between(va, vb) == 1 {
                    // push right side first so the left pops first
                    stack.push((b, vb, hi, var_hi));
                    out.push((mid.clone(), mid.clone()));
                    stack.push((lo, var_lo, a, va));
                    break;
                }
                let half = (&b - &mid) / &two;
                let (na, nb) = nonroot_flanks(&ints, &mid, &half);
                a = na;
                b = nb;
            }
        } else {
            let var_mid = chain.variations_at(&mid);
            stack.push((mid.clone(), var_mid, hi, var_hi));
            stack.push((lo, var_lo, mid, var_mid));
        }
    }
    // The stack discipline above emits left intervals after pushing the
    // right ones in the exact-hit branch; restore global order.
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// True iff every complex root of f is real, i.e. the real roots counted
/// with multiplicity exhaust the degree. Constants are vacuously real-rooted.
pub fn is_real_rooted(f: &Poly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::Domain("real-rootedness of the zero polynomial".into()));
    }
    if f.degree() == 0 {
        return Ok(true);
    }
    // Sum e * (#real roots of f_e) over the Yun factors; no isolation needed.
    let mut real = 0usize;
    for (fe, e) in f.yun_factors()? {
        if fe.degree() >= 1 {
            real += SturmChain::new(&fe).count_real_roots() * e as usize;
        }
    }
    Ok(real == f.degree() as usize)
}

// ---------------------------------------------------------------------------
// Interlacing verdicts
// ---------------------------------------------------------------------------

/// A root record during merging: position interval plus the owner's
/// multiplicity there.
#[derive(Clone, Debug)]
struct RootRec {
    lo: Rat,
    hi: Rat,
    mult: u32,
}

impl RootRec {
    fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Order {
    Before,
    After,
    Overlap,
    Same,
}

/// Compares two records whose endpoints are non-roots of their owners;
/// `Same` only for identical exact points.
fn rec_order(a: &RootRec, b: &RootRec) -> Order {
    if a.is_exact() && b.is_exact() {
        return match a.lo.cmp(&b.lo) {
            std::cmp::Ordering::Less => Order::Before,
            std::cmp::Ordering::Greater => Order::After,
            std::cmp::Ordering::Equal => Order::Same,
        };
    }
    if a.is_exact() {
        return match invert(rec_order(b, a)) {
            Order::Same => unreachable!(),
            o => o,
        };
    }
    if b.is_exact() {
        // a open, b a point: the root of a is strictly interior.
        if b.lo <= a.lo {
            return Order::After;
        }
        if b.lo >= a.hi {
            return Order::Before;
        }
        return Order::Overlap;
    }
    if a.hi <= b.lo {
        Order::Before
    } else if b.hi <= a.lo {
        Order::After
    } else {
        Order::Overlap
    }
}

fn invert(o: Order) -> Order {
    match o {
        Order::Before => Order::After,
        Order::After => Order::Before,
        other => other,
    }
}

/// Mutable isolation state for one polynomial during verdict merging.
struct IsoState {
    sqf_ints: Vec<Int>,
    sqf: Poly,
    recs: Vec<RootRec>,
}

impl IsoState {
    fn build(p: &Poly) -> Result<IsoState> {
        let iso = isolate_real_roots(p)?;
        let sqf = p.squarefree_part()?;
        Ok(IsoState {
            sqf_ints: sqf.content_primitive().1.int_coeffs().unwrap(),
            sqf,
            recs: iso
                .intervals
                .into_iter()
                .map(|iv| RootRec {
                    lo: iv.lo,
                    hi: iv.hi,
                    mult: iv.multiplicity,
                })
                .collect(),
        })
    }

    fn halve_all(&mut self) {
        for i in 0..self.recs.len() {
            if self.recs[i].is_exact() {
                continue;
            }
            match bisect_once(&self.sqf, &self.recs[i].lo, &self.recs[i].hi) {
                Bisection::Exact(x) => {
                    self.recs[i].lo = x.clone();
                    self.recs[i].hi = x;
                }
                Bisection::Left(hi) => self.recs[i].hi = hi,
                Bisection::Right(lo) => self.recs[i].lo = lo,
            }
        }
    }

    /// Splits an open record at an interior non-root point, keeping the
    /// half that still contains the root.
    fn split_at(&mut self, idx: usize, x: &Rat) {
        let rec = &mut self.recs[idx];
        debug_assert!(rec.lo < *x && *x < rec.hi);
        if sign_at(&self.sqf_ints, &rec.lo) != sign_at(&self.sqf_ints, x) {
            rec.hi = x.clone();
        } else {
            rec.lo = x.clone();
        }
    }

    /// Collapses a record to an exact point.
    fn collapse(&mut self, idx: usize, x: &Rat) {
        self.recs[idx].lo = x.clone();
        self.recs[idx].hi = x.clone();
    }

    /// Does recs[idx] contain the other record entirely?
    fn contains(&self, idx: usize, inner: &RootRec) -> bool {
        let r = &self.recs[idx];
        if r.is_exact() {
            return inner.is_exact() && inner.lo == r.lo;
        }
        if inner.is_exact() {
            return r.lo < inner.lo && inner.lo < r.hi;
        }
        r.lo <= inner.lo && inner.hi <= r.hi
    }
}

/// Resolves every point-vs-open overlap between two states: an exact point
/// either collapses the open record (same root) or splits it (different
/// roots). Open-open overlaps are left for halving rounds.
fn resolve_point_overlaps(a: &mut IsoState, b: &mut IsoState) {
    for i in 0..a.recs.len() {
        if !a.recs[i].is_exact() {
            continue;
        }
        let x = a.recs[i].lo.clone();
        for j in 0..b.recs.len() {
            if b.recs[j].is_exact() {
                continue;
            }
            if b.recs[j].lo < x && x < b.recs[j].hi {
                if sign_at(&b.sqf_ints, &x) == 0 {
                    b.collapse(j, &x);
                } else {
                    b.split_at(j, &x);
                }
            }
        }
    }
}

/// One merged distinct root position.
struct MergedRoot {
    lo: Rat,
    hi: Rat,
    mult_f: u32,
    mult_g: u32,
}

/// Aligns the isolations of f, g, and h = gcd(f, g) until every f/g pair of
/// records is disjoint or certified equal (both containing a common
/// h-record); returns the merged ascending position list.
fn merge_roots(f: &Poly, g: &Poly, h: &Poly) -> Result<Vec<MergedRoot>> {
    let mut fs = IsoState::build(f)?;
    let mut gs = IsoState::build(g)?;
    let mut hs = if h.degree() >= 1 {
        Some(IsoState::build(h)?)
    } else {
        None
    };

    let mut fuel = 1_000_000u32;
    loop {
        fuel -= 1;
        assert!(fuel > 0, "interval alignment failed to terminate");

        resolve_point_overlaps(&mut fs, &mut gs);
        {
            let (a, b) = (&mut fs, &mut gs);
            resolve_point_overlaps(b, a);
        }
        if let Some(hs) = hs.as_mut() {
            resolve_point_overlaps(hs, &mut fs);
            resolve_point_overlaps(hs, &mut gs);
            resolve_point_overlaps(&mut fs, hs);
            resolve_point_overlaps(&mut gs, hs);
        }

        // A shared root is a root of h; find, for each h-record, the f- and
        // g-records it sits inside. All three must align before we can
        // certify the pairing.
        let mut pair_of_h: Vec<Option<(usize, usize)>> = Vec::new();
        let mut aligned = true;
        if let Some(hs) = hs.as_ref() {
            for hr in &hs.recs {
                let fi = (0..fs.recs.len()).find(|&i| fs.contains(i, hr));
                let gi = (0..gs.recs.len()).find(|&i| gs.contains(i, hr));
                match (fi, gi) {
                    (Some(fi), Some(gi)) => pair_of_h.push(Some((fi, gi))),
                    _ => {
                        aligned = false;
                        pair_of_h.push(None);
                    }
                }
            }
        }

        if aligned {
            let shared: Vec<(usize, usize)> = pair_of_h.iter().flatten().copied().collect();
            // Every remaining f/g overlap must be one of the certified
            // shared pairs; otherwise keep refining.
            let mut ok = true;
            'scan: for i in 0..fs.recs.len() {
                for j in 0..gs.recs.len() {
                    let o = rec_order(&fs.recs[i], &gs.recs[j]);
                    let is_shared = shared.contains(&(i, j));
                    match o {
                        Order::Same => {
                            // identical exact points are shared roots even
                            // if h's isolation hasn't matched them yet
                            if !is_shared && h.degree() < 1 {
                                ok = false; // impossible: gcd must see it
                            }
                        }
                        Order::Overlap if !is_shared => {
                            ok = false;
                        }
                        _ => {}
                    }
                    if !ok {
                        break 'scan;
                    }
                }
            }
            if ok {
                return Ok(assemble_merged(&fs, &gs, &shared));
            }
        }

        fs.halve_all();
        gs.halve_all();
        if let Some(hs) = hs.as_mut() {
            hs.halve_all();
        }
    }
}

/// Builds the ascending merged list once all records are pairwise disjoint
/// or certified shared.
fn assemble_merged(fs: &IsoState, gs: &IsoState, shared: &[(usize, usize)]) -> Vec<MergedRoot> {
    let mut items: Vec<MergedRoot> = Vec::new();
    let g_shared: Vec<usize> = shared.iter().map(|&(_, j)| j).collect();
    for (i, fr) in fs.recs.iter().enumerate() {
        let mut mr = MergedRoot {
            lo: fr.lo.clone(),
            hi: fr.hi.clone(),
            mult_f: fr.mult,
            mult_g: 0,
        };
        if let Some(&(_, j)) = shared.iter().find(|&&(fi, _)| fi == i) {
            let gr = &gs.recs[j];
            mr.mult_g = gr.mult;
            // tightest enclosure of the shared root
            if gr.lo > mr.lo {
                mr.lo = gr.lo.clone();
            }
            if gr.hi < mr.hi {
                mr.hi = gr.hi.clone();
            }
        }
        items.push(mr);
    }
    for (j, gr) in gs.recs.iter().enumerate() {
        if g_shared.contains(&j) {
            continue;
        }
        // exact same point as an f-record counts as shared too
        if let Some(mr) = items
            .iter_mut()
            .find(|m| m.lo == gr.lo && m.hi == gr.hi && gr.is_exact())
        {
            mr.mult_g = gr.mult;
            continue;
        }
        items.push(MergedRoot {
            lo: gr.lo.clone(),
            hi: gr.hi.clone(),
            mult_f: 0,
            mult_g: gr.mult,
        });
    }
    items.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
    items
}

/// Checks the weak/strict interlace or alternate-left chains over merged
/// positions. Position indices stand in for the roots themselves: equal
/// indices mean equal roots, smaller index means strictly smaller root.
fn chain_holds(xs: &[usize], ys: &[usize], alternate: bool, strict: bool) -> bool {
    let le = |a: usize, b: usize| if strict { a < b } else { a <= b };
    if alternate {
        // y1 <= x1 <= y2 <= x2 <= ... (equal lengths)
        debug_assert_eq!(xs.len(), ys.len());
        for i in 0..xs.len() {
            if !le(ys[i], xs[i]) {
                return false;
            }
            if i + 1 < ys.len() && !le(xs[i], ys[i + 1]) {
                return false;
            }
        }
    } else {
        // x1 <= y1 <= x2 <= ... <= xn (xs one longer)
        debug_assert_eq!(xs.len(), ys.len() + 1);
        for i in 0..ys.len() {
            if !le(xs[i], ys[i]) || !le(ys[i], xs[i + 1]) {
                return false;
            }
        }
    }
    true
}

/// Classifies the ordered pair (g, f) per the interlacing definitions and
/// the degenerate conventions. Never errors: undecidable/violating inputs
/// map to `Incomparable` or `NotRealRooted`.
pub fn interlace_verdict(g: &Poly, f: &Poly) -> InterlaceVerdict {
    let gcd_or_zero = |a: &Poly, b: &Poly| a.gcd(b).unwrap_or_else(|_| Poly::zero());

    // Zero-polynomial conventions: 0 <= f and f <= 0 for real-rooted f.
    if g.is_zero() || f.is_zero() {
        let other = if g.is_zero() { f } else { g };
        let relation = if other.is_zero() || is_real_rooted(other).unwrap_or(false) {
            Relation::Interlaces
        } else {
            Relation::NotRealRooted
        };
        return InterlaceVerdict {
            relation,
            witness: Vec::new(),
            shared_roots: gcd_or_zero(g, f),
        };
    }

    if !is_real_rooted(f).unwrap() || !is_real_rooted(g).unwrap() {
        return InterlaceVerdict {
            relation: Relation::NotRealRooted,
            witness: Vec::new(),
            shared_roots: gcd_or_zero(g, f),
        };
    }

    let (df, dg) = (f.degree(), g.degree());

    // Two nonzero constants: only the convention "a <= bx + c for
    // nonnegative a, b, c" (here with b = 0) can relate them.
    if df == 0 && dg == 0 {
        let relation = if !g.coeff(0).is_negative() && !f.coeff(0).is_negative() {
            Relation::AlternatesLeft
        } else {
            Relation::Incomparable
        };
        return InterlaceVerdict {
            relation,
            witness: Vec::new(),
            shared_roots: Poly::one(),
        };
    }

    let alternate = match (df, dg) {
        _ if df == dg + 1 => false,
        _ if df == dg => true,
        _ => {
            return InterlaceVerdict {
                relation: Relation::Incomparable,
                witness: Vec::new(),
                shared_roots: gcd_or_zero(g, f),
            }
        }
    };

    let shared_roots = f.gcd(g).unwrap();
    let merged = merge_roots(f, g, &shared_roots).expect("nonzero real-rooted inputs");

    // Expand multiplicities into position-index lists.
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (pos, m) in merged.iter().enumerate() {
        xs.extend(std::iter::repeat(pos).take(m.mult_f as usize));
        ys.extend(std::iter::repeat(pos).take(m.mult_g as usize));
    }
    debug_assert_eq!(xs.len(), df as usize);
    debug_assert_eq!(ys.len(), dg as usize);

    let relation = if chain_holds(&xs, &ys, alternate, true) {
        debug_assert_eq!(shared_roots.degree(), 0);
        if alternate {
            Relation::StrictlyAlternatesLeft
        } else {
            Relation::StrictlyInterlaces
        }
    } else if chain_holds(&xs, &ys, alternate, false) {
        if alternate {
            Relation::AlternatesLeft
        } else {
            Relation::Interlaces
        }
    } else {
        Relation::Incomparable
    };

    InterlaceVerdict {
        relation,
        witness: merged
            .into_iter()
            .map(|m| WitnessRoot {
                lo: m.lo,
                hi: m.hi,
                mult_f: m.mult_f,
                mult_g: m.mult_g,
            })
            .collect(),
        shared_roots,
    }
}

/// Verifies the (generalized) Sturm-sequence property over every adjacent
/// pair of an ordered family.
pub fn check_family_sturm(polys: &[Poly], mode: SturmMode) -> Result<FamilyCheck> {
    if polys.is_empty() {
        return Err(Error::Domain("empty polynomial family".into()));
    }
    let mut per_pair = Vec::with_capacity(polys.len().saturating_sub(1));
    let mut first_failure = None;
    for i in 0..polys.len() - 1 {
        let v = interlace_verdict(&polys[i], &polys[i + 1]);
        let pass = match mode {
            SturmMode::Strict => v.relation.is_strict(),
            SturmMode::Generalized => v.relation.is_weak_or_strict(),
        };
        if !pass && first_failure.is_none() {
            first_failure = Some(i);
        }
        per_pair.push(v);
    }
    Ok(FamilyCheck {
        ok: first_failure.is_none(),
        first_failure,
        per_pair,
    })
}
