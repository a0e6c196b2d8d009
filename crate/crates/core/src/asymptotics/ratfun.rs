//! Rational functions of n with exact polynomial numerator/denominator.
//! These carry the ratio enclosures phi_- / phi_+ and every derived level
//! bound; positivity questions about them reduce to eventual-positivity
//! checks on num * den.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::polycore::{Poly, Rat};

#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Builds num/den reduced to lowest terms with a positive-leading
    /// denominator. Panics on a zero denominator (internal misuse).
    pub fn new(num: Poly, den: Poly) -> RationalFunction {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den).expect("nonzero gcd");
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        // normalize: den primitive-positive, scale folded into num
        let (cd, dp) = den.content_primitive();
        num = num.scale(&(Rat::new(1.into(), 1.into()) / cd));
        den = dp;
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Poly) -> RationalFunction {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> RationalFunction {
        RationalFunction::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &RationalFunction) -> RationalFunction {
        assert!(!other.num.is_zero(), "division by the zero rational function");
        RationalFunction::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &other.den) - &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub_scalar(&self, c: &Rat) -> RationalFunction {
        self.sub(&RationalFunction::constant(c.clone()))
    }

    pub fn square(&self) -> RationalFunction {
        // already reduced, so no gcd pass is needed
        RationalFunction {
            num: &self.num * &self.num,
            den: &self.den * &self.den,
        }
    }

    /// The function n -> f(n + k).
    pub fn shift(&self, k: i64) -> RationalFunction {
        let k = Rat::from_integer(k.into());
        RationalFunction {
            num: self.num.shift(&k),
            den: self.den.shift(&k),
        }
    }

    /// Exact evaluation; None where the denominator vanishes.
    pub fn eval_int(&self, n: i64) -> Option<Rat> {
        let d = self.den.eval_int(n);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval_int(n) / d)
        }
    }

    /// The polynomial whose eventual positivity certifies f(n) > 0 (and the
    /// denominator nonvanishing) for large n.
    pub fn positivity_polynomial(&self) -> Poly {
        &self.num * &self.den
    }

    /// Exact sign at an integer point; None on a pole.
    pub fn sign_at(&self, n: i64) -> Option<i32> {
        let d = self.den.eval_int(n);
        if d.is_zero() {
            return None;
        }
        let v = self.num.eval_int(n) / d;
        Some(if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        })
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RationalFunction", 2)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.end()
    }
}
