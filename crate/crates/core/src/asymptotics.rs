//! Ratio-ansatz asymptotics and certified eventual r-log-convexity.
//!
//! The pipeline, for an order-1 or order-2 P-recurrence with a rational,
//! simple, strictly dominant characteristic root rho:
//!
//! 1. [`ratio_expansion`]: solve r(n) = a_{n+1}/a_n ~ rho (1 + d_1/n + ...
//!    + d_eta/n^eta) order by order from the recurrence.
//! 2. [`sequence_expansion`]: convert to a_n ~ C rho^n n^nu (1 + ell_1/n
//!    + ...), and [`estimate_leading_constant`] for a decimal look at C.
//! 3. [`r2_expansion`] / [`asymptotic_order`]: read off R^2(a_n) = 1 +
//!    c/n^alpha + ... and apply the floor((beta-alpha)/2) + 1 criterion
//!    for asymptotic r-log-convexity.
//! 4. [`certify_ratio_enclosure`]: wrap the truncated ansatz in a rigorous
//!    two-sided enclosure phi_- <= r(n) <= phi_+ proved by induction, the
//!    step inequalities reduced to eventual positivity of explicit
//!    polynomials.
//! 5. [`certify_rlogconvexity`]: propagate the enclosure through the
//!    levels L^j to thresholds N_j with L^j(a)_n > 0 for n >= N_j, and
//!    close the gap below the thresholds by the exact initial check.
//!
//! Everything is exact rational arithmetic; the only approximate output is
//! the explicitly diagnostic leading-constant estimate.

mod ratfun;
mod series;

pub use ratfun::RationalFunction;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polycore::{rat_int, rat_to_string, Int, Poly, Rat};
use crate::precursive::{check_initial_rlogconvexity, extend_sequence, PRecurrence};
use series::{binomial_series_rat, NSeries};

// ---------------------------------------------------------------------------
// Expansion types
// ---------------------------------------------------------------------------

/// Truncated ratio ansatz r(n) ~ rho (1 + d_1/n + ... + d_eta/n^eta).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioExpansion {
    #[serde(with = "crate::polycore::serde_rat")]
    pub rho: Rat,
    #[serde(with = "crate::polycore::serde_rats")]
    pub d: Vec<Rat>,
    pub eta: u32,
}

impl RatioExpansion {
    /// The truncated ansatz value rho (1 + sum d_i / n^i) at an integer n.
    pub fn eval(&self, n: i64) -> Rat {
        let x = Rat::one() / rat_int(n);
        let mut acc = Rat::one();
        let mut xp = Rat::one();
        for di in &self.d {
            xp *= &x;
            acc += di * &xp;
        }
        acc * &self.rho
    }
}

/// Sequence-level form a_n ~ C rho^n n^nu (1 + ell_1/n + ... ). The ell
/// list carries eta - 1 entries: d_1 fixes nu and each later d fixes one
/// ell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SequenceExpansion {
    #[serde(with = "crate::polycore::serde_rat")]
    pub rho: Rat,
    #[serde(with = "crate::polycore::serde_rat")]
    pub nu: Rat,
    #[serde(with = "crate::polycore::serde_rats")]
    pub ell: Vec<Rat>,
    pub leading_constant_estimate: Option<String>,
}

/// Leading behavior of R^2(a_n) = 1 + c/n^alpha + ... + o(1/n^beta).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct R2Expansion {
    #[serde(with = "crate::polycore::serde_rat")]
    pub c: Rat,
    pub alpha: u32,
    /// Coefficients of 1/n^alpha .. 1/n^beta (tail[0] = c).
    #[serde(with = "crate::polycore::serde_rats")]
    pub tail: Vec<Rat>,
    pub beta: u32,
}

/// Exact record of the induction base phi_-(N0) <= r(N0) <= phi_+(N0).
#[derive(Clone, Debug, Serialize)]
pub struct BaseCheckRecord {
    pub n0: i64,
    #[serde(with = "crate::polycore::serde_rat")]
    pub ratio: Rat,
    #[serde(with = "crate::polycore::serde_rat")]
    pub lower: Rat,
    #[serde(with = "crate::polycore::serde_rat")]
    pub upper: Rat,
}

/// A certified forward-invariant ratio enclosure.
#[derive(Clone, Debug, Serialize)]
pub struct RatioEnclosure {
    pub phi_minus: RationalFunction,
    pub phi_plus: RationalFunction,
    pub n0: i64,
    pub base: BaseCheckRecord,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CertificateVerdict {
    /// Eventual thresholds certified and the initial gap closed exactly.
    Certified,
    /// Thresholds certified; the initial check was skipped (budget).
    CertifiedEventual { reason: String },
    /// The initial check ran and found a violation.
    Failed { reason: String },
}

/// Full output of [`certify_rlogconvexity`].
#[derive(Clone, Debug, Serialize)]
pub struct LogConvexityCertificate {
    pub r: u32,
    pub eta: u32,
    #[serde(with = "crate::polycore::serde_rat")]
    pub rho: Rat,
    pub phi_minus: RationalFunction,
    pub phi_plus: RationalFunction,
    pub induction_base: BaseCheckRecord,
    /// N_1..N_r: L^j(a)_n > 0 certified for n >= N_j.
    pub level_thresholds: Vec<i64>,
    /// Range of the exact initial check, when it ran.
    pub initial_check_upto: Option<i64>,
    /// Whether the initial check saw strict positivity throughout.
    pub initial_strict: Option<bool>,
    pub verdict: CertificateVerdict,
}

/// Caps for the certification search.
#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    /// Abort if no induction base is found at or below this index.
    pub n0_cap: i64,
    /// Skip the initial check (verdict CertifiedEventual) beyond this.
    pub initial_cap: i64,
    /// Extend the initial check at least this far even if thresholds are
    /// smaller.
    pub initial_floor: i64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            n0_cap: 4_000_000,
            initial_cap: 50_000,
            initial_floor: 0,
        }
    }
}

/// Diagnostic decimal estimate of the leading constant C.
#[derive(Clone, Debug, Serialize)]
pub struct ConstantEstimate {
    pub decimal: String,
    /// The same value as an exact rational (of the fixed-point computation,
    /// not of C itself).
    #[serde(with = "crate::polycore::serde_rat")]
    pub approx: Rat,
    pub digits: usize,
    pub n_probe: i64,
}

// ---------------------------------------------------------------------------
// Characteristic roots
// ---------------------------------------------------------------------------

/// The rational square root of a nonnegative rational, if it exists.
fn rational_sqrt(v: &Rat) -> Option<Rat> {
    if v.is_negative() {
        return None;
    }
    let (n, d) = (v.numer(), v.denom());
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Coefficient of n^deg in p, zero-padded: the characteristic equation
/// compares the top coefficients at the common degree scale.
fn top_coeff(p: &Poly, deg: usize) -> Rat {
    p.coeff(deg)
}

/// Characteristic roots of an order-1 or order-2 recurrence, sorted by
/// decreasing absolute value. Order 2 solves
/// lambda^2 lead(p_2) = lambda lead(p_1) + lead(p_0) at the common top
/// degree.
pub fn characteristic_roots(rec: &PRecurrence) -> Result<Vec<Rat>> {
    rec.validate()?;
    let dmax = rec
        .coeff_polys
        .iter()
        .map(|p| p.degree().max(0) as usize)
        .max()
        .unwrap();
    match rec.order {
        1 => {
            let l1 = top_coeff(&rec.coeff_polys[1], dmax);
            let l0 = top_coeff(&rec.coeff_polys[0], dmax);
            if l1.is_zero() {
                return Err(Error::DegenerateClass(
                    "leading coefficient drops degree; no finite ratio".into(),
                ));
            }
            Ok(vec![l0 / l1])
        }
        2 => {
            let l2 = top_coeff(&rec.coeff_polys[2], dmax);
            let l1 = top_coeff(&rec.coeff_polys[1], dmax);
            let l0 = top_coeff(&rec.coeff_polys[0], dmax);
            if l2.is_zero() {
                return Err(Error::DegenerateClass(
                    "leading coefficient drops degree; characteristic equation is not quadratic"
                        .into(),
                ));
            }
            let disc = &l1 * &l1 + rat_int(4) * &l2 * &l0;
            if disc.is_negative() {
                return Err(Error::UnsupportedClass(
                    "non-real characteristic roots".into(),
                ));
            }
            if disc.is_zero() {
                return Err(Error::DegenerateClass(
                    "repeated characteristic root".into(),
                ));
            }
            let sq = rational_sqrt(&disc).ok_or_else(|| {
                Error::UnsupportedClass("irrational characteristic roots".into())
            })?;
            let two_l2 = rat_int(2) * &l2;
            let mut roots = vec![(&l1 + &sq) / &two_l2, (&l1 - &sq) / &two_l2];
            roots.sort_by(|a, b| b.abs().cmp(&a.abs()));
            Ok(roots)
        }
        _ => Err(Error::UnsupportedClass(format!(
            "expansions support order <= 2, got {}",
            rec.order
        ))),
    }
}

/// The strictly dominant characteristic root; ties are degenerate.
pub fn dominant_root(rec: &PRecurrence) -> Result<Rat> {
    let roots = characteristic_roots(rec)?;
    if roots.len() == 2 && roots[0].abs() == roots[1].abs() {
        return Err(Error::DegenerateClass(
            "no strictly dominant characteristic root".into(),
        ));
    }
    Ok(roots[0].clone())
}

// ---------------------------------------------------------------------------
// Ratio expansion
// ---------------------------------------------------------------------------

/// Residual of the recurrence under the truncated ansatz, as a Laurent
/// series in x = 1/n:
/// order 2: p_2(n) r(n) r(n+1) - p_1(n) r(n) - p_0(n);
/// order 1: p_1(n) r(n) - p_0(n).
fn residual_series(rec: &PRecurrence, rho: &Rat, d: &[Rat], work_trunc: i64) -> NSeries {
    let mut coeffs = Vec::with_capacity(d.len() + 1);
    coeffs.push(rho.clone());
    for di in d {
        coeffs.push(di * rho);
    }
    let mut r = NSeries::new(0, coeffs);
    r.trunc = work_trunc;
    let pad = (work_trunc - r.lo) as usize;
    r.coeffs.resize(pad, Rat::zero());

    let ps: Vec<NSeries> = rec
        .coeff_polys
        .iter()
        .map(|p| NSeries::from_poly_in_n(p, work_trunc))
        .collect();
    match rec.order {
        1 => ps[1].mul(&r).sub(&ps[0]),
        2 => {
            let r_next = r.shift_n_plus_one();
            ps[2].mul(&r).mul(&r_next).sub(&ps[1].mul(&r)).sub(&ps[0])
        }
        _ => unreachable!("guarded by characteristic_roots"),
    }
}

/// Solves d_1..d_eta order by order. Each step's equation is affine in the
/// new coefficient; the pivot is nonzero exactly when rho is a simple
/// characteristic root.
pub fn ratio_expansion(rec: &PRecurrence, rho: &Rat, eta: u32) -> Result<RatioExpansion> {
    if rec.order > 2 {
        return Err(Error::UnsupportedClass(format!(
            "expansions support order <= 2, got {}",
            rec.order
        )));
    }
    rec.validate()?;
    let dmax = rec
        .coeff_polys
        .iter()
        .map(|p| p.degree().max(0))
        .max()
        .unwrap() as i64;
    let work = eta as i64 + dmax + 3;

    // rho must kill the lowest-order (characteristic) coefficient.
    let base = residual_series(rec, rho, &[], work);
    if !base.coeff(-dmax).is_zero() {
        return Err(Error::Domain(format!(
            "{} is not a characteristic root of the recurrence",
            rat_to_string(rho)
        )));
    }

    let mut d: Vec<Rat> = Vec::with_capacity(eta as usize);
    for i in 1..=eta as i64 {
        let order = -dmax + i;
        let probe = |val: Rat| -> Rat {
            let mut trial = d.clone();
            trial.push(val);
            residual_series(rec, rho, &trial, work).coeff(order)
        };
        let c0 = probe(Rat::zero());
        let c1 = probe(Rat::one());
        let c2 = probe(rat_int(2));
        debug_assert!(
            (&c2 - rat_int(2) * &c1 + &c0).is_zero(),
            "step {i} equation is not affine"
        );
        let slope = &c1 - &c0;
        if slope.is_zero() {
            return Err(Error::DegenerateClass(format!(
                "degenerate pivot at expansion order {i} (repeated or resonant root)"
            )));
        }
        d.push(-c0 / slope);
    }
    Ok(RatioExpansion {
        rho: rho.clone(),
        d,
        eta,
    })
}

/// True when the residual of the truncated ansatz vanishes through order
/// eta, i.e. the expansion really solves the recurrence that far.
pub fn verify_ratio_expansion(rec: &PRecurrence, rx: &RatioExpansion) -> bool {
    let dmax = rec
        .coeff_polys
        .iter()
        .map(|p| p.degree().max(0))
        .max()
        .unwrap() as i64;
    let work = rx.eta as i64 + dmax + 3;
    let res = residual_series(rec, &rx.rho, &rx.d, work);
    (-dmax..=(-dmax + rx.eta as i64)).all(|k| res.coeff(k).is_zero())
}

// ---------------------------------------------------------------------------
// Sequence-level expansion
// ---------------------------------------------------------------------------

/// Series of (1+x)^nu * A(x/(1+x)) / A(x) with A(y) = 1 + sum ell_k y^k:
/// the ratio r(n)/rho predicted by the sequence-level ansatz.
fn sequence_model_series(nu: &Rat, ell: &[Rat], trunc: i64) -> NSeries {
    let mut a_coeffs = Vec::with_capacity(ell.len() + 1);
    a_coeffs.push(Rat::one());
    a_coeffs.extend(ell.iter().cloned());
    let mut a = NSeries::new(0, a_coeffs);
    a.trunc = trunc;
    a.coeffs.resize((trunc - a.lo).max(0) as usize, Rat::zero());

    let a_shift = a.shift_n_plus_one();
    let prefactor = NSeries::new(0, binomial_series_rat(nu, trunc.max(0) as usize));
    prefactor.mul(&a_shift).mul(&a.recip())
}

/// Converts a ratio expansion into the sequence-level exponents: nu = d_1
/// and ell_1..ell_{eta-1} solved order by order (each ell_i first appears
/// at order i+1 of the ratio series, with pivot -i).
pub fn sequence_expansion(rx: &RatioExpansion) -> Result<SequenceExpansion> {
    let eta = rx.eta as usize;
    let nu = rx.d.first().cloned().unwrap_or_else(Rat::zero);
    let trunc = eta as i64 + 1;
    let mut ell: Vec<Rat> = Vec::new();
    for i in 1..eta {
        let target = rx.d[i].clone(); // coefficient of x^{i+1} in r(n)/rho
        let order = i as i64 + 1;
        let probe = |val: Rat| -> Rat {
            let mut trial = ell.clone();
            trial.push(val);
            sequence_model_series(&nu, &trial, trunc).coeff(order)
        };
        let c0 = probe(Rat::zero());
        let c1 = probe(Rat::one());
        let c2 = probe(rat_int(2));
        debug_assert!(
            (&c2 - rat_int(2) * &c1 + &c0).is_zero(),
            "ell step {i} is not affine"
        );
        let slope = &c1 - &c0;
        debug_assert!(!slope.is_zero(), "ell pivot -i vanished");
        ell.push((target - c0) / slope);
    }
    Ok(SequenceExpansion {
        rho: rx.rho.clone(),
        nu,
        ell,
        leading_constant_estimate: None,
    })
}

/// Regenerates the ratio coefficients d_1..d_eta from a sequence-level
/// expansion (the round-trip direction).
pub fn ratio_from_sequence(sx: &SequenceExpansion, eta: u32) -> Vec<Rat> {
    let m = sequence_model_series(&sx.nu, &sx.ell, eta as i64 + 1);
    (1..=eta as i64).map(|k| m.coeff(k)).collect()
}

// ---------------------------------------------------------------------------
// R^2 expansion and the asymptotic criterion
// ---------------------------------------------------------------------------

/// Expands R^2(a_n) = r(n+1)/r(n) as 1 + c/n^alpha + ... through order
/// beta = eta and locates the first nonzero coefficient.
pub fn r2_expansion(rx: &RatioExpansion) -> Result<R2Expansion> {
    if rx.eta < 2 {
        return Err(Error::Domain(format!(
            "R^2 expansion needs eta >= 2, got {}",
            rx.eta
        )));
    }
    let trunc = rx.eta as i64 + 1;
    let mut coeffs = Vec::with_capacity(rx.eta as usize + 1);
    coeffs.push(Rat::one());
    coeffs.extend(rx.d.iter().cloned());
    let mut r = NSeries::new(0, coeffs);
    r.trunc = trunc;
    r.coeffs.resize((trunc - r.lo).max(0) as usize, Rat::zero());

    let q = r.shift_n_plus_one().mul(&r.recip());
    let alpha = (1..=rx.eta as i64).find(|&k| !q.coeff(k).is_zero());
    let alpha = alpha.ok_or_else(|| {
        Error::Inconclusive(format!(
            "R^2 - 1 vanishes through order {}; raise eta",
            rx.eta
        ))
    })?;
    let tail: Vec<Rat> = (alpha..=rx.eta as i64).map(|k| q.coeff(k)).collect();
    Ok(R2Expansion {
        c: tail[0].clone(),
        alpha: alpha as u32,
        tail,
        beta: rx.eta,
    })
}

/// The guaranteed asymptotic r-log-convexity order floor((beta-alpha)/2)+1,
/// applicable when c > 0 and alpha >= 2.
pub fn asymptotic_order(r2: &R2Expansion) -> Result<u32> {
    if !r2.c.is_positive() || r2.alpha < 2 {
        return Err(Error::NotApplicable(format!(
            "criterion needs c > 0 and alpha >= 2; got c = {}, alpha = {}",
            rat_to_string(&r2.c),
            r2.alpha
        )));
    }
    Ok((r2.beta - r2.alpha) / 2 + 1)
}

// ---------------------------------------------------------------------------
// Eventual positivity
// ---------------------------------------------------------------------------

fn shifted_coeffs_nonneg(p: &Poly, k: i64) -> bool {
    p.shift(&rat_int(k)).coeffs().iter().all(|c| !c.is_negative())
}

/// Least N >= 0 such that P(t+N) has only nonnegative coefficients and
/// P(N) > 0 — a certificate that P(n) > 0 for every integer n >= N. None
/// when the leading coefficient is not positive (no such certificate
/// exists). Coefficient nonnegativity after a shift is monotone in the
/// shift, so a binary search below a root bound finds the least N.
pub fn eventual_positive_from(p: &Poly) -> Option<i64> {
    let lead = p.leading()?;
    if !lead.is_positive() {
        return None;
    }
    let mut hi = 1i64;
    while !shifted_coeffs_nonneg(p, hi) {
        hi *= 2;
    }
    let mut n = if shifted_coeffs_nonneg(p, 0) {
        0
    } else {
        // invariant: fails at lo, holds at hi
        let mut lo = 0i64;
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if shifted_coeffs_nonneg(p, mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };
    while p.eval_int(n).is_zero() {
        n += 1;
    }
    Some(n)
}

/// Threshold from which a rational function is certified positive (the
/// zero function never is). Positivity of num*den also certifies the
/// denominator nonvanishing on the range.
fn positive_from(f: &RationalFunction) -> Option<i64> {
    if f.is_zero() {
        return None;
    }
    eventual_positive_from(&f.positivity_polynomial())
}

/// Like [`eventual_positive_from`] but accepts the zero polynomial, for
/// step inequalities that hold with equality identically.
fn nonneg_threshold(p: &Poly) -> Option<i64> {
    if p.is_zero() {
        Some(0)
    } else {
        eventual_positive_from(p)
    }
}

// ---------------------------------------------------------------------------
// Ratio enclosure
// ---------------------------------------------------------------------------

/// Scans indices n >= from for the first exact containment
/// phi_-(n) <= a_{n+1}/a_n <= phi_+(n), extending the sequence lazily.
fn find_induction_base(
    rec: &PRecurrence,
    phi_minus: &RationalFunction,
    phi_plus: &RationalFunction,
    from: i64,
    cap: i64,
) -> Result<BaseCheckRecord> {
    let floor = rec.start_index + rec.order as i64 - 1;
    let mut window = extend_sequence(rec, (from + 1).max(floor))?;
    let mut n = from;
    while n <= cap {
        if n + 1 > window.last_index() {
            let target = (2 * (n + 1)).min(cap + 1).max(n + 1);
            window = extend_sequence(rec, target)?;
        }
        let a_n = window.get(n).expect("window covers n");
        let a_n1 = window.get(n + 1).expect("window covers n+1");
        if !a_n.is_zero() {
            let ratio = a_n1 / a_n;
            let lower = phi_minus.eval_int(n);
            let upper = phi_plus.eval_int(n);
            if let (Some(lower), Some(upper)) = (lower, upper) {
                if lower <= ratio && ratio <= upper {
                    return Ok(BaseCheckRecord {
                        n0: n,
                        ratio,
                        lower,
                        upper,
                    });
                }
            }
        }
        n += 1;
    }
    Err(Error::Inconclusive(format!(
        "no induction base found at or below the cap {cap}; the enclosure may be \
         too tight at this eta"
    )))
}

fn enclosure_order1(
    rec: &PRecurrence,
    ps: &[Poly],
    n0_cap: i64,
) -> Result<RatioEnclosure> {
    // The ratio is exactly p_0(n)/p_1(n); the enclosure is degenerate.
    let phi = RationalFunction::new(ps[0].clone(), ps[1].clone());
    let t = positive_from(&phi).ok_or_else(|| {
        Error::UnsupportedClass("the ratio p_0/p_1 is not eventually positive".into())
    })?;
    let from = t.max(rec.start_index);
    let base = find_induction_base(rec, &phi, &phi, from, n0_cap.max(from))?;
    Ok(RatioEnclosure {
        phi_minus: phi.clone(),
        phi_plus: phi,
        n0: base.n0,
        base,
    })
}

fn enclosure_order2(
    rec: &PRecurrence,
    rx: &RatioExpansion,
    ps: &[Poly],
    n0_cap: i64,
) -> Result<RatioEnclosure> {
    let eta = rx.eta as usize;
    // Center numerator n^eta + d_1 n^{eta-1} + ... + d_eta, margins on the
    // constant term; the common denominator is n^eta.
    let mut center = vec![Rat::zero(); eta + 1];
    center[eta] = Rat::one();
    for (k, dk) in rx.d.iter().enumerate() {
        center[eta - 1 - k] = dk.clone();
    }
    let mut lo_c = center.clone();
    lo_c[0] -= Rat::one();
    let mut hi_c = center;
    hi_c[0] += Rat::one();
    let p_minus = Poly::new(lo_c).scale(&rx.rho);
    let p_plus = Poly::new(hi_c).scale(&rx.rho);
    let den = Poly::monomial(Rat::one(), eta);
    let phi_minus = RationalFunction::new(p_minus.clone(), den.clone());
    let phi_plus = RationalFunction::new(p_plus.clone(), den.clone());

    let mut reqs: Vec<i64> = vec![1, rec.start_index];
    reqs.push(positive_from(&phi_minus).ok_or_else(|| {
        Error::Inconclusive(
            "the lower bound phi_minus is not eventually positive; increase eta".into(),
        )
    })?);
    reqs.push(eventual_positive_from(&ps[2]).ok_or_else(|| {
        Error::UnsupportedClass(
            "the leading recurrence coefficient is not eventually of one sign".into(),
        )
    })?);

    // Step map psi_n(x) = (p_1(n) + p_0(n)/x) / p_2(n) on [phi_-, phi_+]:
    // monotone in x with the sign of -p_0 p_2. Each forward-invariance
    // inequality clears (multiplying by quantities positive beyond the
    // thresholds above) to eventual nonnegativity of a polynomial.
    let one_up = Poly::from_ints(&[1, 1]); // n + 1
    let nume = den.clone(); // n^eta
    let nume_up = one_up.pow(eta as u32); // (n+1)^eta
    let pm_up = p_minus.shift(&Rat::one());
    let pp_up = p_plus.shift(&Rat::one());
    let sign_poly = &ps[0] * &ps[2];
    let (e1, e2, sign_req) = if ps[0].is_zero() {
        // psi is constant in x
        let e1 = &(&ps[1] * &nume_up) - &(&pm_up * &ps[2]);
        let e2 = &(&pp_up * &ps[2]) - &(&ps[1] * &nume_up);
        (e1, e2, 0i64)
    } else if sign_poly.leading().unwrap().is_positive() {
        // psi decreasing: extremes swap
        let sr = eventual_positive_from(&sign_poly).unwrap();
        let e1 = &(&(&ps[1] * &p_plus) + &(&ps[0] * &nume)) * &nume_up
            - &(&pm_up * &ps[2]) * &p_plus;
        let e2 = &(&pp_up * &ps[2]) * &p_minus
            - &(&(&ps[1] * &p_minus) + &(&ps[0] * &nume)) * &nume_up;
        (e1, e2, sr)
    } else {
        // psi increasing: extremes map in order
        let sr = eventual_positive_from(&(-&sign_poly)).ok_or_else(|| {
            Error::UnsupportedClass("p_0 p_2 is not eventually of one sign".into())
        })?;
        let e1 = &(&(&ps[1] * &p_minus) + &(&ps[0] * &nume)) * &nume_up
            - &(&pm_up * &ps[2]) * &p_minus;
        let e2 = &(&pp_up * &ps[2]) * &p_plus
            - &(&(&ps[1] * &p_plus) + &(&ps[0] * &nume)) * &nume_up;
        (e1, e2, sr)
    };
    reqs.push(sign_req);
    reqs.push(nonneg_threshold(&e1).ok_or_else(|| {
        Error::Inconclusive(
            "the lower step inequality is not eventually satisfied; increase eta".into(),
        )
    })?);
    reqs.push(nonneg_threshold(&e2).ok_or_else(|| {
        Error::Inconclusive(
            "the upper step inequality is not eventually satisfied; increase eta".into(),
        )
    })?);

    let from = reqs.into_iter().max().unwrap();
    if from > n0_cap {
        return Err(Error::Inconclusive(format!(
            "the step inequalities only hold from {from}, above the cap {n0_cap}"
        )));
    }
    let base = find_induction_base(rec, &phi_minus, &phi_plus, from, n0_cap)?;
    Ok(RatioEnclosure {
        phi_minus,
        phi_plus,
        n0: base.n0,
        base,
    })
}

/// Certifies phi_-(n) <= a_{n+1}/a_n <= phi_+(n) for all n >= N0, where
/// phi_+/- put a margin of +-rho/n^eta on the truncated ansatz. The bounds
/// are forward-invariant under the recurrence's ratio map from N0 on (the
/// step inequalities are certified polynomially), and the base case is
/// checked exactly at N0.
pub fn certify_ratio_enclosure(
    rec: &PRecurrence,
    rx: &RatioExpansion,
    n0_cap: i64,
) -> Result<RatioEnclosure> {
    rec.validate()?;
    if !rx.rho.is_positive() {
        return Err(Error::UnsupportedClass(
            "enclosures require a positive dominant root".into(),
        ));
    }
    let mut ps = rec.coeff_polys.clone();
    if ps[rec.order]
        .leading()
        .map(|l| l.is_negative())
        .unwrap_or(false)
    {
        for p in ps.iter_mut() {
            *p = -&*p;
        }
    }
    match rec.order {
        1 => enclosure_order1(rec, &ps, n0_cap),
        2 => enclosure_order2(rec, rx, &ps, n0_cap),
        o => Err(Error::UnsupportedClass(format!(
            "enclosures support order <= 2, got {o}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// r-log-convexity certification
// ---------------------------------------------------------------------------

/// Certifies that the sequence is asymptotically r-log-convex: produces
/// thresholds N_1..N_r with L^j(a)_n > 0 for n >= N_j, then (budget
/// permitting) closes the gap below the thresholds by the exact check.
///
/// Level bookkeeping: from an enclosure [lo, hi] of the ratio of
/// v = L^{j-1}(a) valid from B, the quantity w = R^2(v) - 1 is bounded by
/// [lo(n+1)/hi(n) - 1, hi(n+1)/lo(n) - 1], and sign(L^j(a)_n) =
/// sign(w(n)); the next level's ratio satisfies
/// R(L(v))(n) = R(v)(n+1)^2 w(n+1)/w(n), bounded by interval arithmetic
/// (all factors positive beyond N_j).
pub fn certify_rlogconvexity(
    rec: &PRecurrence,
    r: u32,
    eta: u32,
    opts: &CertifyOptions,
) -> Result<LogConvexityCertificate> {
    if r == 0 {
        return Err(Error::Domain("r must be at least 1".into()));
    }
    let rho = dominant_root(rec)?;
    let rx = ratio_expansion(rec, &rho, eta)?;
    let enc = certify_ratio_enclosure(rec, &rx, opts.n0_cap)?;

    let mut lo = enc.phi_minus.clone();
    let mut hi = enc.phi_plus.clone();
    let mut valid_from = enc.n0;
    let mut thresholds: Vec<i64> = Vec::with_capacity(r as usize);
    for j in 1..=r {
        let t_pos = positive_from(&lo)
            .and_then(|a| positive_from(&hi).map(|b| a.max(b)))
            .ok_or_else(|| {
                Error::Inconclusive(format!(
                    "level {j}: the ratio bounds are not eventually positive; increase eta"
                ))
            })?;
        let valid = valid_from.max(t_pos);
        let w_lo = lo.shift(1).div(&hi).sub_scalar(&Rat::one());
        let w_hi = hi.shift(1).div(&lo).sub_scalar(&Rat::one());
        let t_w = positive_from(&w_lo).ok_or_else(|| {
            Error::Inconclusive(format!(
                "level {j}: the certified lower bound on R^2 - 1 is not eventually \
                 positive; increase eta"
            ))
        })?;
        let nj = valid.max(t_w);
        thresholds.push(nj);
        if j < r {
            let lo_next = lo.shift(1).square().mul(&w_lo.shift(1)).div(&w_hi);
            let hi_next = hi.shift(1).square().mul(&w_hi.shift(1)).div(&w_lo);
            lo = lo_next;
            hi = hi_next;
            valid_from = nj;
        }
    }

    // L^j needs terms through n + 2j, so checking L^j up to N_j requires
    // the window to reach max_j (N_j + 2j); one step of slack overlaps the
    // exact check with the certified range.
    let needed = thresholds
        .iter()
        .enumerate()
        .map(|(i, &n)| n + 2 * (i as i64 + 1))
        .max()
        .unwrap()
        .max(opts.initial_floor);
    let (initial_check_upto, initial_strict, verdict) = if needed > opts.initial_cap {
        (
            None,
            None,
            CertificateVerdict::CertifiedEventual {
                reason: format!(
                    "initial check through {needed} exceeds the cap {}; positivity of \
                     L^j is certified for n >= N_j only",
                    opts.initial_cap
                ),
            },
        )
    } else {
        let chk = check_initial_rlogconvexity(rec, r, needed)?;
        let verdict = if chk.ok {
            CertificateVerdict::Certified
        } else {
            let (lvl, idx) = chk.first_failure.expect("failed check records a witness");
            CertificateVerdict::Failed {
                reason: format!("L^{lvl} is negative at index {idx}"),
            }
        };
        (Some(needed), Some(chk.strict), verdict)
    };

    Ok(LogConvexityCertificate {
        r,
        eta,
        rho,
        phi_minus: enc.phi_minus,
        phi_plus: enc.phi_plus,
        induction_base: enc.base,
        level_thresholds: thresholds,
        initial_check_upto,
        initial_strict,
        verdict,
    })
}

// ---------------------------------------------------------------------------
// Leading-constant estimate
// ---------------------------------------------------------------------------

/// Renders a rational as a fixed-point decimal string with `places`
/// digits, rounding half away from zero.
fn decimal_string(v: &Rat, places: usize) -> String {
    let scale = Int::from(10u32).pow(places as u32);
    let scaled = v * Rat::from_integer(scale.clone());
    let rounded = (scaled.abs() + Rat::new(Int::one(), Int::from(2))).floor();
    let units = rounded.numer() / rounded.denom(); // floor() is integral
    let (ip, fp) = (&units / &scale, &units % &scale);
    let sign = if v.is_negative() && !units.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{ip}")
    } else {
        format!("{sign}{ip}.{fp:0>places$}", fp = fp.to_string())
    }
}

/// Diagnostic estimate of C in a_n ~ C rho^n n^nu (1 + ell_1/n + ...):
/// evaluates a_n / (rho^n n^nu (1 + sum ell_i/n^i)) at n = n_probe in
/// fixed-point arithmetic with eight guard digits. The requested digit
/// count falls back to the BAXTER_DIAG_DIGITS environment variable, then
/// to 12. The accuracy in C is limited by the expansion order, not by the
/// digit count.
pub fn estimate_leading_constant(
    rec: &PRecurrence,
    sx: &SequenceExpansion,
    n_probe: i64,
    digits: Option<usize>,
) -> Result<ConstantEstimate> {
    let digits = digits
        .or_else(|| {
            std::env::var("BAXTER_DIAG_DIGITS")
                .ok()
                .and_then(|s| s.trim().parse().ok())
        })
        .unwrap_or(12);
    if n_probe < 1 || n_probe > i32::MAX as i64 {
        return Err(Error::Domain(format!(
            "n_probe must be in [1, {}], got {n_probe}",
            i32::MAX
        )));
    }
    if !sx.rho.is_positive() {
        return Err(Error::UnsupportedClass(
            "constant estimates require a positive dominant root".into(),
        ));
    }
    let window = extend_sequence(rec, n_probe)?;
    let a = window
        .get(n_probe)
        .ok_or_else(|| Error::Domain(format!("index {n_probe} precedes the start index")))?;
    if !a.is_positive() {
        return Err(Error::UnsupportedClass(format!(
            "a_{n_probe} is not positive; the estimate would be meaningless"
        )));
    }

    let mut correction = Rat::one();
    let nr = rat_int(n_probe);
    let mut npow = Rat::one();
    for li in &sx.ell {
        npow *= &nr;
        correction += li / &npow;
    }
    if !correction.is_positive() {
        return Err(Error::Inconclusive(format!(
            "the ell-correction factor vanishes at n = {n_probe}; move the probe"
        )));
    }
    let v = a / (sx.rho.pow(n_probe as i32) * &correction);

    // Divide by n^nu with nu = p/q: exact when q = 1, otherwise via an
    // integer q-th root at 10^(digits + 8) fixed-point precision.
    let p = sx.nu.numer().clone();
    let q = sx.nu.denom().clone();
    let approx = if q.is_one() {
        let e: i32 = p.to_string().parse().map_err(|_| {
            Error::Resource("nu is too large for an exponent".into())
        })?;
        v * nr.pow(-e)
    } else {
        let guard = digits + 8;
        let qi: u32 = q.to_string().parse().map_err(|_| {
            Error::Resource("the denominator of nu is too large".into())
        })?;
        let pe: u32 = p.abs().to_string().parse().map_err(|_| {
            Error::Resource("nu is too large for an exponent".into())
        })?;
        let npq = Int::from(n_probe).pow(pe);
        let ten_s = Int::from(10u32).pow(guard as u32);
        let root = (&npq * ten_s.pow(qi)).nth_root(qi); // ~ n^(|p|/q) 10^guard
        if p.is_negative() {
            v * Rat::new(root, ten_s)
        } else {
            v * Rat::new(ten_s, root)
        }
    };
    Ok(ConstantEstimate {
        decimal: decimal_string(&approx, digits),
        approx,
        digits,
        n_probe,
    })
}

// ---------------------------------------------------------------------------
