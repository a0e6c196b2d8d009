//! Exact scalar and dense univariate polynomial arithmetic.
//!
//! Everything downstream (family generators, root isolation, recurrence
//! engines, certificates) runs on the two types defined here:
//!
//! - [`Int`] / [`Rat`] — arbitrary-precision integers and rationals.
//!   Rationals are always in lowest terms with positive denominator, so
//!   structural equality is mathematical equality.
//! - [`Poly`] — dense polynomial over `Rat`, constant term first. The
//!   coefficient vector never stores trailing zeros; the zero polynomial is
//!   the empty vector and reports degree −1.
//!
//! All operations are exact and pure. Integer-only inputs stay integral
//! through products, derivatives, Hadamard products, and (via primitive
//! pseudo-remainders) gcds, so nothing here silently degrades to floating
//! point or blows up denominators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

/// Integer from a machine word.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Rational n/d from machine words. Panics on d = 0.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Rational from an integer.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Renders a rational in the decimal form used by every JSON payload:
/// `"p"` for integers, `"p/q"` otherwise (q > 0, lowest terms).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` (decimal, optional sign). Inverse of
/// [`rat_to_string`] but accepts any representative of the fraction.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int> {
        Int::from_str(t.trim()).map_err(|_| Error::Parse(format!("bad integer literal {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// Serde adapter: a `Rat` encoded as its `"p"` / `"p/q"` string.
pub mod serde_rat {
    use super::{rat_from_str, rat_to_string, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let raw = String::deserialize(d)?;
        rat_from_str(&raw).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: a `Vec<Rat>` encoded as a vector of rational strings.
pub mod serde_rats {
    use super::{rat_from_str, rat_to_string, Rat};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| rat_to_string(r)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|t| rat_from_str(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> Int {
    if k < 0 || k > n || n < 0 {
        return Int::zero();
    }
    // Multiplicative form; every partial product is exactly divisible.
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 1..=k {
        acc = acc * Int::from(n - k + i) / Int::from(i);
    }
    acc
}

// ---------------------------------------------------------------------------
// Dense polynomials
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over `Rat`, constant term first.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// c * t^deg
    pub fn monomial(c: Rat, deg: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); deg];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn from_int_coeffs(coeffs: Vec<Int>) -> Self {
        Poly::new(coeffs.into_iter().map(Rat::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of t^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, with the −1 convention for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, x: impl Into<Int>) -> Rat {
        self.eval(&Rat::from_integer(x.into()))
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(Int::from(i)))
                .collect(),
        )
    }

    /// Hadamard (coefficientwise) product, truncated to the smaller degree.
    pub fn hadamard(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().min(other.coeffs.len());
        Poly::new(
            (0..len)
                .map(|i| &self.coeffs[i] * &other.coeffs[i])
                .collect(),
        )
    }

    /// Taylor shift: returns f(t + k), exactly.
    pub fn shift(&self, k: &Rat) -> Poly {
        if self.is_zero() || k.is_zero() {
            return self.clone();
        }
        // Repeated in-place Horner pass; after round i the low entries hold
        // the Taylor coefficients of f around k, i.e. the coefficients of
        // f(t + k).
        let mut v = self.coeffs.clone();
        let n = v.len();
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let add = k * &v[j + 1];
                v[j] = &v[j] + add;
            }
        }
        Poly::new(v)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// t^e * f
    pub fn mul_xpow(&self, e: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Splits f = content · primitive where the primitive part has coprime
    /// integer coefficients and a positive leading coefficient. The zero
    /// polynomial yields (0, 0).
    pub fn content_primitive(&self) -> (Rat, Poly) {
        if self.is_zero() {
            return (Rat::zero(), Poly::zero());
        }
        let mut den = Int::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<Int> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut g = Int::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = Poly::new(ints.iter().map(|c| Rat::from_integer(c / &g)).collect());
        (Rat::new(g, den), prim)
    }

    /// Integer coefficient vector, available when every coefficient is an
    /// integer.
    pub fn int_coeffs(&self) -> Option<Vec<Int>> {
        self.coeffs
            .iter()
            .map(|c| c.denom().is_one().then(|| c.numer().clone()))
            .collect()
    }

    /// Quotient and remainder of exact polynomial division.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.degree() < divisor.degree() {
            return (Poly::zero(), self.clone());
        }
        let dlen = divisor.coeffs.len();
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dlen - 1] / lead;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let prod = &q * d;
                rem[i + j] = &rem[i + j] - prod;
            }
            quot[i] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient; `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Polynomial gcd, normalized to the primitive part with positive
    /// leading coefficient (so gcd(f, f) == primitive(f), deterministic).
    /// Errors only when both inputs are zero.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::Domain("gcd(0, 0) is undefined".into()));
        }
        if self.is_zero() {
            return Ok(other.content_primitive().1);
        }
        if other.is_zero() {
            return Ok(self.content_primitive().1);
        }
        // Primitive pseudo-remainder sequence on the integer primitive parts.
        let mut a = self.content_primitive().1.int_coeffs().unwrap();
        let mut b = other.content_primitive().1.int_coeffs().unwrap();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_pseudo_rem(&a, &b);
            a = b;
            b = int_primitive(r);
        }
        Ok(Poly::from_int_coeffs(int_primitive(a)))
    }

    /// Squarefree part f / gcd(f, f'): same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::Domain(
                "squarefree part of the zero polynomial".into(),
            ));
        }
        if self.degree() == 0 {
            return Ok(Poly::one());
        }
        let g = self.gcd(&self.derivative())?;
        let q = self
            .div_exact(&g)
            .expect("gcd(f, f') divides f");
        Ok(q.content_primitive().1)
    }

    /// Yun squarefree decomposition: returns pairwise-coprime squarefree
    /// primitive polynomials with multiplicities, so that
    /// f = c · prod(f_e ^ e) for a constant c.
    pub fn yun_factors(&self) -> Result<Vec<(Poly, u32)>> {
        if self.is_zero() {
            return Err(Error::Domain("Yun decomposition of zero".into()));
        }
        if self.degree() == 0 {
            return Ok(Vec::new());
        }
        let f = self.content_primitive().1;
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.div_exact(&a0).unwrap();
        let mut d = &df.div_exact(&a0).unwrap() - &b.derivative();
        let mut out = Vec::new();
        let mut mult = 1u32;
        while b.degree() > 0 {
            let a = b.gcd(&d)?;
            b = b.div_exact(&a).unwrap();
            let c = d.div_exact(&a).unwrap();
            d = &c - &b.derivative();
            if a.degree() > 0 {
                out.push((a, mult));
            }
            mult += 1;
        }
        Ok(out)
    }

    /// Coefficients as decimal-rational strings (the JSON encoding).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rat_to_string).collect()
    }

    /// Parses the JSON encoding produced by [`Poly::coeff_strings`].
    pub fn from_coeff_strings<S: AsRef<str>>(strings: &[S]) -> Result<Poly> {
        let coeffs: Result<Vec<Rat>> =
            strings.iter().map(|s| rat_from_str(s.as_ref())).collect();
        Ok(Poly::new(coeffs?))
    }
}

fn int_primitive(mut v: Vec<Int>) -> Vec<Int> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut g = Int::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    for c in &mut v {
        *c = &*c / &g;
    }
    v
}

/// Pseudo-remainder of integer polynomials: rem(lead(b)^(da-db+1) * a, b).
fn int_pseudo_rem(a: &[Int], b: &[Int]) -> Vec<Int> {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem: Vec<Int> = a.to_vec();
    while rem.len() > db && !rem.is_empty() {
        let da = rem.len() - 1;
        let coef = rem[da].clone();
        for c in rem.iter_mut() {
            *c = &*c * lead;
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

// Arithmetic on references, with owned convenience impls delegating.

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", rat_to_string(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", rat_to_string(&a))?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        Poly::from_coeff_strings(&strings).map_err(D::Error::custom)
    }
}
