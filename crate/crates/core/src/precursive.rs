//! Exact engine for P-recursive sequences.
//!
//! A P-recursive sequence satisfies p_j(n) a_{n+j} = p_{j-1}(n) a_{n+j-1}
//! + ... + p_0(n) a_n with polynomial coefficients (rational-function
//! coefficients are assumed cleared to this polynomial form). This module
//! provides:
//!
//! - exact term extension from initial values, with singular-point
//!   detection when the leading coefficient vanishes,
//! - recurrence verification against an independent oracle,
//! - the operator L(a)_n = a_n a_{n+2} - a_{n+1}^2 whose iterated signs
//!   witness r-log-convexity,
//! - exact initial-segment r-log-convexity checks,
//! - Hankel leading principal minors by fraction-free elimination.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::{rat_int, Int, Poly, Rat};

// ---------------------------------------------------------------------------
// Recurrences and windows
// ---------------------------------------------------------------------------

/// A linear recurrence with polynomial coefficients,
/// p_order(n) a_{n+order} = sum of p_i(n) a_{n+i} for i < order,
/// anchored by `order` initial values starting at `start_index`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PRecurrence {
    pub order: usize,
    /// p_0, ..., p_order in the recurrence variable n.
    pub coeff_polys: Vec<Poly>,
    pub start_index: i64,
    /// a_{start_index}, ..., a_{start_index + order - 1}.
    #[serde(rename = "initial", with = "crate::polycore::serde_rats")]
    pub initial_values: Vec<Rat>,
}

impl PRecurrence {
    /// The Baxter-number recurrence
    /// (n+4)(n+5) B_{n+2} = (7n^2+35n+40) B_{n+1} + 8n(n+1) B_n,
    /// anchored at B_0 = B_1 = 1.
    pub fn baxter() -> PRecurrence {
        PRecurrence {
            order: 2,
            coeff_polys: vec![
                Poly::from_ints(&[0, 8, 8]),
                Poly::from_ints(&[40, 35, 7]),
                Poly::from_ints(&[20, 9, 1]),
            ],
            start_index: 0,
            initial_values: vec![rat_int(1), rat_int(1)],
        }
    }

    /// The Catalan-number recurrence (n+2) C_{n+1} = (4n+2) C_n, C_0 = 1.
    pub fn catalan() -> PRecurrence {
        PRecurrence {
            order: 1,
            coeff_polys: vec![Poly::from_ints(&[2, 4]), Poly::from_ints(&[2, 1])],
            start_index: 0,
            initial_values: vec![rat_int(1)],
        }
    }

    /// Built-in recurrences addressable by name.
    pub fn builtin(name: &str) -> Option<PRecurrence> {
        match name {
            "baxter" => Some(PRecurrence::baxter()),
            "catalan" => Some(PRecurrence::catalan()),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order == 0 {
            return Err(Error::Domain("recurrence order must be positive".into()));
        }
        if self.coeff_polys.len() != self.order + 1 {
            return Err(Error::Domain(format!(
                "order {} needs {} coefficient polynomials, got {}",
                self.order,
                self.order + 1,
                self.coeff_polys.len()
            )));
        }
        if self.coeff_polys[self.order].is_zero() {
            return Err(Error::Domain("leading coefficient polynomial is zero".into()));
        }
        if self.initial_values.len() != self.order {
            return Err(Error::Domain(format!(
                "order {} needs {} initial values, got {}",
                self.order,
                self.order,
                self.initial_values.len()
            )));
        }
        Ok(())
    }

    /// Parses the JSON sequence spec
    /// `{"order":j,"coeff_polys":[[...]],"start_index":n0,"initial":["1","2"]}`
    /// and validates the shape invariants.
    pub fn from_json(s: &str) -> Result<PRecurrence> {
        let rec: PRecurrence =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("sequence spec: {e}")))?;
        rec.validate()?;
        Ok(rec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("recurrence serializes")
    }
}

/// A contiguous run of exact sequence values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SequenceWindow {
    pub start_index: i64,
    #[serde(with = "crate::polycore::serde_rats")]
    pub terms: Vec<Rat>,
}

impl SequenceWindow {
    /// The value a_n, if n lies in the window.
    pub fn get(&self, n: i64) -> Option<&Rat> {
        let off = n.checked_sub(self.start_index)?;
        if off < 0 {
            return None;
        }
        self.terms.get(off as usize)
    }

    pub fn last_index(&self) -> i64 {
        self.start_index + self.terms.len() as i64 - 1
    }
}

// ---------------------------------------------------------------------------
// Extension and verification
// ---------------------------------------------------------------------------

/// Extends the recurrence to a_{upto}, exactly. Fails with a
/// singular-point error naming the recurrence index n at which the leading
/// coefficient p_order(n) vanishes before the target is reached.
pub fn extend_sequence(rec: &PRecurrence, upto: i64) -> Result<SequenceWindow> {
    rec.validate()?;
    let order = rec.order as i64;
    if upto < rec.start_index + order - 1 {
        return Err(Error::Domain(format!(
            "upto = {} precedes the initial segment ending at {}",
            upto,
            rec.start_index + order - 1
        )));
    }
    let mut terms = rec.initial_values.clone();
    terms.reserve((upto - rec.start_index + 1) as usize - terms.len());
    for target in (rec.start_index + order)..=upto {
        let n = target - order;
        let lead = rec.coeff_polys[rec.order].eval_int(n);
        if lead.is_zero() {
            return Err(Error::SingularPoint { index: n });
        }
        let k = (n - rec.start_index) as usize;
        let coeffs: Vec<Rat> = (0..rec.order).map(|i| rec.coeff_polys[i].eval_int(n)).collect();
        let window = &terms[k..k + rec.order];
        // Integer lane: Ratio reduces (a gcd, quadratic in digit count) on
        // every operation, which dominates deep extensions; plain Int
        // arithmetic with one exact-division check avoids all of it.
        let next = if lead.is_integer()
            && coeffs.iter().all(Rat::is_integer)
            && window.iter().all(Rat::is_integer)
        {
            let mut rhs = Int::zero();
            for (c, a) in coeffs.iter().zip(window) {
                rhs += c.numer() * a.numer();
            }
            let (q, rem) = rhs.div_rem(lead.numer());
            if rem.is_zero() {
                Rat::from_integer(q)
            } else {
                Rat::new(rhs, lead.numer().clone())
            }
        } else {
            let mut rhs = Rat::zero();
            for (c, a) in coeffs.iter().zip(window) {
                rhs += c * a;
            }
            rhs / lead
        };
        terms.push(next);
    }
    Ok(SequenceWindow {
        start_index: rec.start_index,
        terms,
    })
}

/// Checks the recurrence identity exactly at every n in [lo, hi], with the
/// oracle supplying every value on both sides. Returns the first index at
/// which the identity breaks, if any.
pub fn verify_recurrence(
    rec: &PRecurrence,
    oracle: impl Fn(i64) -> Rat,
    lo: i64,
    hi: i64,
) -> (bool, Option<i64>) {
    for n in lo..=hi {
        let lhs = rec.coeff_polys[rec.order].eval_int(n) * oracle(n + rec.order as i64);
        let mut rhs = Rat::zero();
        for i in 0..rec.order {
            rhs += rec.coeff_polys[i].eval_int(n) * oracle(n + i as i64);
        }
        if lhs != rhs {
            return (false, Some(n));
        }
    }
    (true, None)
}

// ---------------------------------------------------------------------------
// The L operator and r-log-convexity scans
// ---------------------------------------------------------------------------

/// L(a)_n = a_n a_{n+2} - a_{n+1}^2, over the window (losing two terms).
pub fn apply_l(window: &SequenceWindow) -> Result<SequenceWindow> {
    if window.terms.len() < 3 {
        return Err(Error::Domain(format!(
            "L needs at least 3 terms, window has {}",
            window.terms.len()
        )));
    }
    let t = &window.terms;
    let terms = (0..t.len() - 2)
        .map(|i| l_entry(&t[i], &t[i + 1], &t[i + 2]))
        .collect();
    Ok(SequenceWindow {
        start_index: window.start_index,
        terms,
    })
}

/// a c - b^2, in plain integers when all three are integral so the windows
/// the certifier scans skip the per-operation Ratio reduction.
fn l_entry(a: &Rat, b: &Rat, c: &Rat) -> Rat {
    if a.is_integer() && b.is_integer() && c.is_integer() {
        Rat::from_integer(a.numer() * c.numer() - b.numer() * b.numer())
    } else {
        a * c - b * b
    }
}

/// Outcome of an exact initial r-log-convexity scan.
#[derive(Clone, Debug, Serialize)]
pub struct RLogCheck {
    pub ok: bool,
    /// True when every checked L^j entry is strictly positive.
    pub strict: bool,
    /// First (level j, sequence index n) with L^j(a)_n < 0.
    pub first_failure: Option<(u32, i64)>,
}

/// Extends the sequence to a_{upto} and asserts L^j(a)_n >= 0 for every
/// j = 1..r over the full computable range (n from the start up to
/// upto - 2j). Strict positivity is reported separately.
pub fn check_initial_rlogconvexity(rec: &PRecurrence, r: u32, upto: i64) -> Result<RLogCheck> {
    if r == 0 {
        return Err(Error::Domain("r must be positive".into()));
    }
    if upto < rec.start_index + 2 * r as i64 {
        return Err(Error::Domain(format!(
            "upto = {} leaves no room for L^{} (need at least {})",
            upto,
            r,
            rec.start_index + 2 * r as i64
        )));
    }
    let window = extend_sequence(rec, upto)?;
    check_window_rlogconvexity(&window, r)
}

/// Window-level form of the scan, for callers that already hold terms.
pub fn check_window_rlogconvexity(window: &SequenceWindow, r: u32) -> Result<RLogCheck> {
    let mut cur = window.clone();
    let mut strict = true;
    for j in 1..=r {
        cur = apply_l(&cur)?;
        for (k, v) in cur.terms.iter().enumerate() {
            if v.is_negative() {
                return Ok(RLogCheck {
                    ok: false,
                    strict: false,
                    first_failure: Some((j, cur.start_index + k as i64)),
                });
            }
            if v.is_zero() {
                strict = false;
            }
        }
    }
    Ok(RLogCheck {
        ok: true,
        strict,
        first_failure: None,
    })
}

// ---------------------------------------------------------------------------
// Hankel leading principal minors
// ---------------------------------------------------------------------------

/// Determinants of the k x k Hankel matrices [a_{first+i+j}] for
/// k = 1..upto_order, where `first` is the window start. Fraction-free
/// (Bareiss) elimination on de-denominated entries keeps everything exact.
pub fn hankel_leading_minors(window: &SequenceWindow, upto_order: usize) -> Result<Vec<Rat>> {
    if upto_order == 0 {
        return Err(Error::Domain("upto_order must be positive".into()));
    }
    let need = 2 * upto_order - 1;
    if window.terms.len() < need {
        return Err(Error::Domain(format!(
            "order-{} minors need {} terms, window has {}",
            upto_order,
            need,
            window.terms.len()
        )));
    }
    let mut scale = Int::one();
    for t in &window.terms[..need] {
        scale = scale.lcm(t.denom());
    }
    let ints: Vec<Int> = window.terms[..need]
        .iter()
        .map(|t| (t * Rat::from_integer(scale.clone())).to_integer())
        .collect();
    let mut out = Vec::with_capacity(upto_order);
    for k in 1..=upto_order {
        let m: Vec<Vec<Int>> = (0..k)
            .map(|i| (0..k).map(|j| ints[i + j].clone()).collect())
            .collect();
        let det = bareiss_det(m);
        // undo the row scaling: det(scale * A) = scale^k * det(A)
        out.push(Rat::new(det, scale.pow(k as u32)));
    }
    Ok(out)
}

/// Fraction-free determinant with row pivoting; every interior division is
/// exact by the Bareiss identity.
fn bareiss_det(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
            m[i][k] = Int::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}
