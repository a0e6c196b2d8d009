//! Generators for the polynomial and number families:
//!
//! - Baxter numbers B_n, their summands D_{n,k}, and the Baxter polynomial
//!   PB_n(t) = sum_k D_{n,k} t^(k-1);
//! - Hoggatt polynomials H_n^[m](1,t) (m = 3 recovers PB_n, m = 1 gives
//!   (1+t)^(n-1)) together with the auxiliary F_{n,m} family they normalize;
//! - (q,t)-Hoggatt sums H_n^[m](q,t) at positive integer q, via the
//!   MacMahon box-product formula for plane partitions;
//! - Catalan numbers (the m = 2 specialization at t = 1);
//! - a brute-force enumerator of Baxter permutations bucketed by descents,
//!   kept deliberately independent of the formulas so it can serve as an
//!   oracle for them.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polycore::{binomial, Int, Poly, Rat};

/// Descent table of Baxter permutations of [n]: `coeffs[k-1]` holds D_{n,k},
/// the number of Baxter permutations with k-1 descents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaxterCoefficientTable {
    pub n: i64,
    pub coeffs: Vec<Int>,
}

impl BaxterCoefficientTable {
    /// Sum of all entries, i.e. the Baxter number B_n.
    pub fn total(&self) -> Int {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let m = self.coeffs.len();
        (0..m / 2).all(|i| self.coeffs[i] == self.coeffs[m - 1 - i])
    }
}

fn require_positive(name: &str, v: i64) -> Result<()> {
    if v < 1 {
        return Err(Error::Domain(format!("{name} must be >= 1, got {v}")));
    }
    Ok(())
}

/// D_{n,k} = (2 / (n(n+1)^2)) C(n+1,k-1) C(n+1,k) C(n+1,k+1), and 0 for k
/// outside [1, n]. The rational prefactor always cancels; the division below
/// is exact.
pub fn baxter_coefficient(n: i64, k: i64) -> Result<Int> {
    require_positive("n", n)?;
    if k < 1 || k > n {
        return Ok(Int::zero());
    }
    let prod = binomial(n + 1, k - 1) * binomial(n + 1, k) * binomial(n + 1, k + 1);
    let (q, r) = (prod * Int::from(2)).div_rem(&(Int::from(n) * Int::from(n + 1).pow(2)));
    debug_assert!(r.is_zero());
    Ok(q)
}

/// B_n = sum_k D_{n,k}.
pub fn baxter_number(n: i64) -> Result<Int> {
    Ok(baxter_table(n)?.total())
}

/// The full row D_{n,1..n} from the closed formula.
pub fn baxter_table(n: i64) -> Result<BaxterCoefficientTable> {
    require_positive("n", n)?;
    let coeffs = (1..=n)
        .map(|k| baxter_coefficient(n, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(BaxterCoefficientTable { n, coeffs })
}

/// PB_n(t) = sum_k D_{n,k} t^(k-1); degree n-1, integer coefficients.
pub fn baxter_polynomial(n: i64) -> Result<Poly> {
    Ok(Poly::from_int_coeffs(baxter_table(n)?.coeffs))
}

/// F_{n,m}(t) = sum_{k=0}^{n-m+1} C(n,k) C(n,k+1) ... C(n,k+m-1) t^k.
/// Empty range (n < m-1) gives the zero polynomial.
pub fn f_polynomial(n: i64, m: i64) -> Poly {
    assert!(n >= 0 && m >= 1, "F_{{n,m}} needs n >= 0, m >= 1");
    let mut coeffs = Vec::new();
    for k in 0..=(n - m + 1) {
        let mut c = Int::one();
        for i in 0..m {
            c *= binomial(n, k + i);
        }
        coeffs.push(c);
    }
    Poly::from_int_coeffs(coeffs)
}

/// Hoggatt polynomial H_n^[m](1,t) = F_{n+m-2,m}(t) / prod_{j=1}^{m-1} C(n+m-2, j).
/// Coefficients are plane-partition counts in a k x (n-1-k) x m box, hence
/// positive integers; the degree is exactly n-1.
pub fn hoggatt_polynomial(n: i64, m: i64) -> Result<Poly> {
    require_positive("n", n)?;
    require_positive("m", m)?;
    let big_n = n + m - 2;
    let mut norm = Int::one();
    for j in 1..m {
        norm *= binomial(big_n, j);
    }
    let coeffs = (0..n)
        .map(|k| {
            let mut c = Int::one();
            for i in 0..m {
                c *= binomial(big_n, k + i);
            }
            Rat::new(c, norm.clone())
        })
        .collect();
    Ok(Poly::new(coeffs))
}

/// Number of plane partitions in a k x l x m box weighted by size:
/// the MacMahon product, evaluated exactly at an integer q >= 1. The triple
/// product over the box telescopes in the height coordinate to
/// prod_{i=1}^{k} prod_{j=1}^{l} (q^(i+j+m-1) - 1) / (q^(i+j-1) - 1).
pub fn box_product_q(k: i64, l: i64, m: i64, q: &Int) -> Int {
    assert!(k >= 0 && l >= 0 && m >= 0);
    assert!(q >= &Int::one());
    if k == 0 || l == 0 || m == 0 {
        return Int::one();
    }
    if q.is_one() {
        // Size-blind count: prod (i+j+m-1)/(i+j-1) over the base rectangle.
        let mut num = Int::one();
        let mut den = Int::one();
        for i in 1..=k {
            for j in 1..=l {
                num *= Int::from(i + j + m - 1);
                den *= Int::from(i + j - 1);
            }
        }
        let (v, r) = num.div_rem(&den);
        debug_assert!(r.is_zero());
        return v;
    }
    let qpow = |e: i64| -> Int { q.pow(e as u32) - Int::one() };
    let mut num = Int::one();
    let mut den = Int::one();
    for i in 1..=k {
        for j in 1..=l {
            num *= qpow(i + j + m - 1);
            den *= qpow(i + j - 1);
        }
    }
    let (v, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    v
}

/// (q,t)-Hoggatt sum H_n^[m](q,t) at a positive integer q, as a polynomial
/// in t: the coefficient of t^k is q^(m*C(k+1,2)) times the box product over
/// a k x (n-1-k) x m box. At q = 1 this reduces to [`hoggatt_polynomial`].
pub fn hoggatt_qt(n: i64, m: i64, q: i64) -> Result<Poly> {
    require_positive("n", n)?;
    require_positive("m", m)?;
    require_positive("q", q)?;
    if q == 1 {
        return hoggatt_polynomial(n, m);
    }
    let q = Int::from(q);
    let coeffs = (0..n)
        .map(|k| {
            let tri = (m * k * (k + 1) / 2) as u32;
            q.pow(tri) * box_product_q(k, n - 1 - k, m, &q)
        })
        .collect();
    Ok(Poly::from_int_coeffs(coeffs))
}

/// n-th Catalan number C(2n, n) / (n + 1).
pub fn catalan(n: i64) -> Int {
    assert!(n >= 0);
    let (v, r) = binomial(2 * n, n).div_rem(&Int::from(n + 1));
    debug_assert!(r.is_zero());
    v
}

/// H_n^[m](1,1) for n = 1..=upto, computed with incremental binomial-ratio
/// updates so long scans stay O(terms) big-integer multiplications per term.
pub fn hoggatt_ones_sequence(m: i64, upto: i64) -> Result<Vec<Int>> {
    require_positive("m", m)?;
    require_positive("upto", upto)?;
    let mut out = Vec::with_capacity(upto as usize);
    for n in 1..=upto {
        let big_n = n + m - 2;
        // P(k) = prod_{i=0}^{m-1} C(N, k+i), advanced by the exact ratio
        // P(k+1)/P(k) = prod_{j=1}^{m} (N-k-m+j)/(k+j).
        let mut p = Int::one();
        for i in 0..m {
            p *= binomial(big_n, i);
        }
        let mut sum = p.clone();
        for k in 0..(n - 1) {
            let mut a = Int::one();
            let mut b = Int::one();
            for j in 1..=m {
                a *= Int::from(big_n - k - m + j);
                b *= Int::from(k + j);
            }
            let (next, r) = (p * a).div_rem(&b);
            debug_assert!(r.is_zero());
            p = next;
            sum += &p;
        }
        let mut den = Int::one();
        for j in 1..m {
            den *= binomial(big_n, j);
        }
        let (v, r) = sum.div_rem(&den);
        debug_assert!(r.is_zero());
        out.push(v);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Brute-force enumeration (the independent oracle)
// ---------------------------------------------------------------------------

/// Hard cap on the enumerator: 10! permutations with an O(n^3) pattern check
/// is the practical limit.
pub const ENUMERATION_CAP: i64 = 10;

/// A permutation pi (0-indexed values) is Baxter iff no indices i < j < k-1
/// give a subsequence pi_i pi_j pi_{j+1} pi_k ordered as
/// pi_{j+1} < pi_i < pi_k < pi_j or pi_j < pi_k < pi_i < pi_{j+1}.
pub fn is_baxter(perm: &[usize]) -> bool {
    let n = perm.len();
    for j in 0..n.saturating_sub(1) {
        let (pj, pj1) = (perm[j], perm[j + 1]);
        for i in 0..j {
            let pi = perm[i];
            for &pk in &perm[j + 2..] {
                if (pj1 < pi && pi < pk && pk < pj) || (pj < pk && pk < pi && pi < pj1) {
                    return false;
                }
            }
        }
    }
    true
}

fn descents(perm: &[usize]) -> usize {
    perm.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Enumerates all permutations of [n], rejects non-Baxter ones, and buckets
/// the survivors by descent count d into D_{n,d+1}.
pub fn enumerate_baxter_descents(n: i64) -> Result<BaxterCoefficientTable> {
    require_positive("n", n)?;
    if n > ENUMERATION_CAP {
        return Err(Error::Resource(format!(
            "enumeration capped at n <= {ENUMERATION_CAP}, got {n}"
        )));
    }
    let n = n as usize;
    let mut buckets = vec![Int::zero(); n];
    let mut perm: Vec<usize> = (0..n).collect();
    // Iterative Heap's algorithm; visits every permutation exactly once.
    let mut c = vec![0usize; n];
    let mut tally = |p: &[usize]| {
        if is_baxter(p) {
            buckets[descents(p)] += 1;
        }
    };
    tally(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            tally(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(BaxterCoefficientTable {
        n: n as i64,
        coeffs: buckets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{int, rat_int};
    use num_traits::Signed;

    #[test]
    fn coefficient_examples() {
        assert_eq!(baxter_coefficient(3, 2).unwrap(), int(4));
        assert_eq!(baxter_coefficient(4, 2).unwrap(), int(10));
        assert_eq!(baxter_coefficient(7, 1).unwrap(), int(1));
        assert_eq!(baxter_coefficient(3, 0).unwrap(), int(0));
        assert_eq!(baxter_coefficient(3, 4).unwrap(), int(0));
        assert!(baxter_coefficient(0, 1).is_err());
    }

    #[test]
    fn baxter_numbers_start_1_2_6_22_92() {
        let want = [1i64, 2, 6, 22, 92, 422, 2074, 10754];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(baxter_number(i as i64 + 1).unwrap(), int(*w));
        }
    }

    #[test]
    fn baxter_polynomials() {
        assert_eq!(baxter_polynomial(1).unwrap(), Poly::from_ints(&[1]));
        assert_eq!(baxter_polynomial(3).unwrap(), Poly::from_ints(&[1, 4, 1]));
        assert_eq!(
            baxter_polynomial(4).unwrap(),
            Poly::from_ints(&[1, 10, 10, 1])
        );
        // PB_n(1) = B_n and palindromic coefficients
        for n in 1..=20 {
            let pb = baxter_polynomial(n).unwrap();
            assert_eq!(pb.eval(&rat_int(1)), Rat::from_integer(baxter_number(n).unwrap()));
            assert!(baxter_table(n).unwrap().is_palindromic());
            assert_eq!(pb.degree(), (n - 1) as isize);
        }
    }

    #[test]
    fn f_polynomial_examples() {
        assert_eq!(f_polynomial(3, 2), Poly::from_ints(&[3, 9, 3]));
        assert_eq!(f_polynomial(2, 2), Poly::from_ints(&[2, 2]));
        assert_eq!(f_polynomial(3, 1), Poly::from_ints(&[1, 3, 3, 1]));
        // n < m-1 leaves an empty sum
        assert!(f_polynomial(1, 3).is_zero());
    }

    #[test]
    fn hoggatt_matches_spec_examples() {
        assert_eq!(
            hoggatt_polynomial(5, 3).unwrap(),
            baxter_polynomial(5).unwrap()
        );
        assert_eq!(hoggatt_polynomial(4, 1).unwrap(), Poly::from_ints(&[1, 3, 3, 1]));
        assert_eq!(hoggatt_polynomial(3, 2).unwrap(), Poly::from_ints(&[1, 3, 1]));
    }

    #[test]
    fn hoggatt_reduces_to_baxter_at_m3() {
        for n in 1..=15 {
            assert_eq!(
                hoggatt_polynomial(n, 3).unwrap(),
                baxter_polynomial(n).unwrap()
            );
        }
    }

    #[test]
    fn hoggatt_coefficients_integer_positive_palindromic() {
        for n in 1..=15 {
            for m in 1..=5 {
                let h = hoggatt_polynomial(n, m).unwrap();
                assert_eq!(h.degree(), (n - 1) as isize, "degree at n={n} m={m}");
                let ints = h.int_coeffs().expect("integer coefficients");
                assert!(ints.iter().all(|c| c.is_positive()));
                let len = ints.len();
                for i in 0..len / 2 {
                    assert_eq!(ints[i], ints[len - 1 - i], "palindrome at n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn catalan_specialization() {
        for n in 1..=20 {
            let h = hoggatt_polynomial(n, 2).unwrap();
            assert_eq!(h.eval(&rat_int(1)), Rat::from_integer(catalan(n)));
        }
        assert_eq!(catalan(0), int(1));
        assert_eq!(catalan(3), int(5));
    }

    #[test]
    fn qt_examples() {
        assert_eq!(hoggatt_qt(3, 1, 2).unwrap(), Poly::from_ints(&[1, 6, 8]));
        assert_eq!(hoggatt_qt(2, 3, 2).unwrap(), Poly::from_ints(&[1, 8]));
        assert_eq!(
            hoggatt_qt(4, 3, 1).unwrap(),
            Poly::from_ints(&[1, 10, 10, 1])
        );
        assert!(hoggatt_qt(3, 1, 0).is_err());
    }

    #[test]
    fn qt_reduction_and_product_form() {
        for n in 1..=12 {
            for m in 1..=3 {
                assert_eq!(
                    hoggatt_qt(n, m, 1).unwrap(),
                    hoggatt_polynomial(n, m).unwrap()
                );
            }
            for q in 1..=5 {
                // H_n^[1](q,t) = prod_{i=1}^{n-1} (1 + t q^i)
                let mut prod = Poly::one();
                for i in 1..n {
                    prod = &prod
                        * &Poly::new(vec![rat_int(1), Rat::from_integer(Int::from(q).pow(i as u32))]);
                }
                assert_eq!(hoggatt_qt(n, 1, q).unwrap(), prod);
            }
        }
    }

    #[test]
    fn ones_sequence_matches_polynomial_eval() {
        for m in 1..=5 {
            let seq = hoggatt_ones_sequence(m, 12).unwrap();
            for n in 1..=12i64 {
                let h = hoggatt_polynomial(n, m).unwrap();
                assert_eq!(
                    Rat::from_integer(seq[(n - 1) as usize].clone()),
                    h.eval(&rat_int(1)),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_baxter_descents(1).unwrap().coeffs, vec![int(1)]);
        assert_eq!(
            enumerate_baxter_descents(3).unwrap().coeffs,
            vec![int(1), int(4), int(1)]
        );
        assert_eq!(
            enumerate_baxter_descents(4).unwrap().coeffs,
            vec![int(1), int(10), int(10), int(1)]
        );
        assert!(enumerate_baxter_descents(11).is_err());
    }

    #[test]
    fn enumeration_agrees_with_formula_to_6() {
        for n in 1..=6 {
            assert_eq!(
                enumerate_baxter_descents(n).unwrap(),
                baxter_table(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn exactly_2413_and_3142_fail_at_n4() {
        let mut rejected = Vec::new();
        let mut p = [0usize, 1, 2, 3];
        loop {
            if !is_baxter(&p) {
                rejected.push(p.map(|v| v + 1));
            }
            // lexicographic next_permutation
            let Some(i) = (0..3).rev().find(|&i| p[i] < p[i + 1]) else {
                break;
            };
            let j = (0..4).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
        }
        rejected.sort();
        assert_eq!(rejected, vec![[2, 4, 1, 3], [3, 1, 4, 2]]);
    }
}
