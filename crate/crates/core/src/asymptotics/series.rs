//! Truncated Laurent series in x = 1/n, the workhorse behind the ratio
//! ansatz. A series stores exact rational coefficients for the powers
//! x^lo .. x^(trunc-1); everything at order >= trunc is unknown (O(x^trunc)).
//! Polynomials in n enter as finitely many *negative* powers of x.

use num_traits::{One, Zero};

use crate::polycore::{rat_int, Poly, Rat};

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct NSeries {
    /// Power of x carried by coeffs[0].
    pub lo: i64,
    /// Coefficients of x^lo, x^(lo+1), ..., x^(trunc-1).
    pub coeffs: Vec<Rat>,
    /// First untrusted order; always lo + coeffs.len().
    pub trunc: i64,
}

impl NSeries {
    pub fn new(lo: i64, coeffs: Vec<Rat>) -> NSeries {
        let trunc = lo + coeffs.len() as i64;
        NSeries { lo, coeffs, trunc }
    }

    /// The zero series, known through order trunc-1.
    pub fn zero(trunc: i64) -> NSeries {
        NSeries::new(trunc, Vec::new())
    }

    /// A polynomial p(n) viewed as a series in x = 1/n: exact, but recorded
    /// with the working truncation so downstream arithmetic stays honest.
    pub fn from_poly_in_n(p: &Poly, trunc: i64) -> NSeries {
        if p.is_zero() {
            return NSeries::zero(trunc);
        }
        let deg = p.degree() as i64;
        let mut s = NSeries::new(-deg, Vec::new());
        s.trunc = trunc;
        let len = (trunc - s.lo).max(0) as usize;
        s.coeffs = vec![Rat::zero(); len];
        for (i, c) in p.coeffs().iter().enumerate() {
            let pow = -(i as i64);
            if pow < trunc {
                s.coeffs[(pow - s.lo) as usize] = c.clone();
            }
        }
        s
    }

    /// A pure power c * x^k.
    #[cfg(test)]
    pub fn x_power(c: Rat, k: i64, trunc: i64) -> NSeries {
        let mut s = NSeries::zero(trunc);
        if k < trunc {
            s.set_range(k);
            s.coeffs[(k - s.lo) as usize] = c;
        }
        s
    }

    /// Grows the stored range downward so power `p` is addressable.
    fn set_range(&mut self, p: i64) {
        if p >= self.lo && self.coeffs.is_empty() {
            self.lo = p;
            self.coeffs = vec![Rat::zero(); (self.trunc - p).max(0) as usize];
            return;
        }
        if p < self.lo {
            let extra = (self.lo - p) as usize;
            let mut fresh = vec![Rat::zero(); extra];
            fresh.append(&mut self.coeffs);
            self.coeffs = fresh;
            self.lo = p;
        }
    }

    /// Coefficient of x^k; panics if k is beyond the trusted range.
    pub fn coeff(&self, k: i64) -> Rat {
        assert!(k < self.trunc, "coefficient at order {k} is untrusted (trunc {})", self.trunc);
        if k < self.lo {
            Rat::zero()
        } else {
            self.coeffs[(k - self.lo) as usize].clone()
        }
    }

    pub fn add(&self, other: &NSeries) -> NSeries {
        let trunc = self.trunc.min(other.trunc);
        let lo = self.lo.min(other.lo).min(trunc);
        let mut coeffs = vec![Rat::zero(); (trunc - lo) as usize];
        for (i, c) in coeffs.iter_mut().enumerate() {
            let k = lo + i as i64;
            let mut v = Rat::zero();
            if k >= self.lo && k < self.trunc {
                v += &self.coeffs[(k - self.lo) as usize];
            }
            if k >= other.lo && k < other.trunc {
                v += &other.coeffs[(k - other.lo) as usize];
            }
            *c = v;
        }
        NSeries::new(lo, coeffs)
    }

    pub fn neg(&self) -> NSeries {
        let mut s = self.clone();
        for c in &mut s.coeffs {
            *c = -std::mem::replace(c, Rat::zero());
        }
        s
    }

    pub fn sub(&self, other: &NSeries) -> NSeries {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &NSeries) -> NSeries {
        // A product coefficient at order k is trusted only when every
        // contributing pair is: k < min(self.trunc + other.lo,
        // other.trunc + self.lo).
        let trunc = (self.trunc + other.lo).min(other.trunc + self.lo);
        let lo = (self.lo + other.lo).min(trunc);
        let mut coeffs = vec![Rat::zero(); (trunc - lo) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let pa = self.lo + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = pa + other.lo + j as i64;
                if k >= trunc {
                    break;
                }
                coeffs[(k - lo) as usize] += a * b;
            }
        }
        NSeries::new(lo, coeffs)
    }

    /// Reciprocal. The lowest stored coefficient must be nonzero; the
    /// result is trusted through trunc - 2*lo (tighter near poles).
    pub fn recip(&self) -> NSeries {
        let m = self.lo;
        let c0 = self.coeff(m);
        assert!(!c0.is_zero(), "series reciprocal needs a nonzero lowest coefficient");
        // self = c0 * x^m * (1 + u), u = O(x)
        let n_terms = (self.trunc - m).max(0) as usize;
        let u: Vec<Rat> = (0..n_terms)
            .map(|i| self.coeffs[i].clone() / &c0)
            .collect();
        // invert 1 + u by the standard recursion
        let mut inv = vec![Rat::zero(); n_terms];
        if n_terms > 0 {
            inv[0] = Rat::one();
            for k in 1..n_terms {
                let mut acc = Rat::zero();
                for i in 1..=k {
                    acc += &u[i] * &inv[k - i];
                }
                inv[k] = -acc;
            }
        }
        let mut s = NSeries::new(-m, inv);
        s.scale_in_place(&(Rat::one() / c0));
        s
    }

    fn scale_in_place(&mut self, c: &Rat) {
        for v in &mut self.coeffs {
            *v *= c;
        }
    }

    /// Substitutes n -> n+1, i.e. x -> x/(1+x). Each stored power x^k maps
    /// to x^k (1+x)^(-k); the truncation order is preserved because the
    /// substitution fixes valuations.
    pub fn shift_n_plus_one(&self) -> NSeries {
        let mut out = NSeries::zero(self.trunc);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.lo + i as i64;
            let len = (self.trunc - k).max(0) as usize;
            let binom = binomial_series(-k, len);
            for (j, b) in binom.iter().enumerate() {
                let p = k + j as i64;
                if p >= self.trunc {
                    break;
                }
                out.set_range(p);
                let idx = (p - out.lo) as usize;
                out.coeffs[idx] += c * b;
            }
        }
        out
    }
}

/// Coefficients of (1+x)^e for integer e (positive or negative), length
/// `len`: the generalized binomial numbers C(e, j).
fn binomial_series(e: i64, len: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(len);
    let mut acc = Rat::one();
    for j in 0..len {
        if j > 0 {
            // C(e, j) = C(e, j-1) * (e - j + 1) / j
            acc = acc * rat_int(e - j as i64 + 1) / rat_int(j as i64);
        }
        out.push(acc.clone());
    }
    out
}

/// Coefficients of (1+x)^nu for rational nu, length `len`.
pub(crate) fn binomial_series_rat(nu: &Rat, len: usize) -> Vec<Rat> {
    let mut out = Vec::with_capacity(len);
    let mut acc = Rat::one();
    for j in 0..len {
        if j > 0 {
            acc = acc * (nu - rat_int(j as i64 - 1)) / rat_int(j as i64);
        }
        out.push(acc.clone());
    }
    out
}
