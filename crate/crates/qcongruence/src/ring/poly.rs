use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A univariate polynomial in `q` with arbitrary-precision integer
/// coefficients: the ambient ring Z\[q\].
///
/// Coefficients are stored densely; index `i` holds the coefficient of
/// `q^i`. The highest stored coefficient is nonzero, and the zero
/// polynomial has empty storage.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// `c · q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        IntPoly { coeffs }
    }

    /// `q^exp`.
    pub fn q_pow(exp: usize) -> Self {
        IntPoly::monomial(1, exp)
    }

    /// Builds from dense coefficients (index = exponent), trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention zero ↦ 0, convenient for size estimates.
    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Coefficient of `q^i` (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient; `None` for zero.
    pub fn trailing_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `q^k`.
    pub fn mul_q_pow(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    /// Divides by `q^k`; requires the low `k` coefficients to vanish.
    pub fn div_q_pow(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        debug_assert!(self.trailing_order().unwrap_or(0) >= k);
        IntPoly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn mul_scalar(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() || self.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Greatest common divisor of the coefficients (≥ 0; zero only for the
    /// zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, sign preserved. The zero polynomial stays zero.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        debug_assert!(!c.is_zero());
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (t, r) = a.div_rem(c);
                    debug_assert!(r.is_zero());
                    t
                })
                .collect(),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, r: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * r + BigRational::from(c.clone());
        }
        acc
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, r: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * r + c;
        }
        acc
    }

    /// Exact division in Z\[q\]: returns `f / d` when `d` divides `self`
    /// with an integer-coefficient quotient, else `None`.
    pub fn divide_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (dn, dd) = (self.coeffs.len(), d.coeffs.len());
        if dn < dd {
            return None;
        }
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = dc * &c;
                rem[i + j] -= t;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Multiplicity of `d` as a factor of `self` (0 if `d` does not divide,
    /// and for the zero polynomial).
    pub fn multiplicity_of(&self, d: &IntPoly) -> u32 {
        assert!(!d.is_constant(), "multiplicity of a constant factor");
        let mut m = 0;
        let mut work = self.clone();
        if work.is_zero() {
            return 0;
        }
        while let Some(next) = work.divide_exact(d) {
            m += 1;
            work = next;
            if work.is_constant() {
                break;
            }
        }
        m
    }

    /// Pseudo-remainder of `self` by `d`: computes `prem` such that
    /// `lc(d)^(deg self − deg d + 1) · self ≡ prem (mod d)`.
    pub(crate) fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        debug_assert!(!d.is_zero());
        let dd = d.coeffs.len();
        if self.coeffs.len() < dd {
            return self.clone();
        }
        let lead = d.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        for i in (0..=(rem.len() - dd)).rev() {
            let top = rem[i + dd - 1].clone();
            // rem = lead·rem − top·q^i·d, applied to the low part only;
            // coefficients above i+dd−1 have already been eliminated.
            for (j, c) in rem.iter_mut().enumerate().take(i + dd - 1) {
                *c = &*c * &lead;
                if j >= i {
                    *c -= &top * &d.coeffs[j - i];
                }
            }
            rem[i + dd - 1] = BigInt::zero();
        }
        IntPoly::from_coeffs(rem[..dd - 1].to_vec())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        IntPoly { coeffs }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "q")?,
                1 => write!(f, "{a}*q")?,
                _ if a.is_one() => write!(f, "q^{i}")?,
                _ => write!(f, "{a}*q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Primitive greatest common divisor with positive leading coefficient,
/// computed by a fraction-free primitive polynomial remainder sequence.
///
/// Errors when both inputs are zero; `gcd(0, f)` is the primitive part
/// of `f`.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let positive_primitive = |p: &IntPoly| {
        let pp = p.primitive_part();
        if pp.leading_coeff().is_some_and(Signed::is_negative) {
            -&pp
        } else {
            pp
        }
    };
    if a.is_zero() {
        return Ok(positive_primitive(b));
    }
    if b.is_zero() {
        return Ok(positive_primitive(a));
    }
    let (mut r0, mut r1) = if a.deg_or_zero() >= b.deg_or_zero() {
        (a.primitive_part(), b.primitive_part())
    } else {
        (b.primitive_part(), a.primitive_part())
    };
    while !r1.is_zero() {
        let rem = r0.pseudo_rem(&r1).primitive_part();
        r0 = std::mem::replace(&mut r1, rem);
    }
    Ok(positive_primitive(&r0))
}

/// Outcome of a divisibility test in Q\[q\], with integer-content
/// bookkeeping reported separately.
#[derive(Debug, Clone)]
pub struct DivisionCheck {
    /// `primitive(f) / primitive(p)` when the division is exact.
    pub quotient: Option<IntPoly>,
    /// Integer content of the dividend `f`.
    pub content_f: BigInt,
    /// Integer content of the divisor `p`.
    pub content_p: BigInt,
    /// Whether `content(p)` divides `content(f)`, i.e. whether Q\[q\]
    /// divisibility is also divisibility in Z\[q\].
    pub content_ok: bool,
}

impl DivisionCheck {
    pub fn divides(&self) -> bool {
        self.quotient.is_some()
    }
}

/// Tests whether `p` divides `f` in Q\[q\].
///
/// The test runs on primitive parts (by Gauss's lemma that decides
/// divisibility over the rationals); the content ratio is reported so
/// callers can tell Z\[q\] divisibility apart from Q\[q\] divisibility.
pub fn divides_exactly(p: &IntPoly, f: &IntPoly) -> Result<DivisionCheck> {
    if p.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let content_p = p.content();
    let content_f = f.content();
    if f.is_zero() {
        return Ok(DivisionCheck {
            quotient: Some(IntPoly::zero()),
            content_f,
            content_p,
            content_ok: true,
        });
    }
    let quotient = f.primitive_part().divide_exact(&p.primitive_part());
    let content_ok = (&content_f % &content_p).is_zero();
    Ok(DivisionCheck {
        quotient,
        content_f,
        content_p,
        content_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn zero_polynomial_has_empty_support() {
        assert!(p(&[]).is_zero());
        assert!(p(&[0, 0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn trailing_coefficient_is_trimmed() {
        let f = p(&[1, 2, 0, 0]);
        assert_eq!(f.degree(), Some(1));
        assert!(!f.leading_coeff().unwrap().is_zero());
    }

    #[test]
    fn arithmetic_small_cases() {
        let a = p(&[1, 1]); // 1 + q
        let b = p(&[-1, 1]); // q − 1
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(-&a, p(&[-1, -1]));
    }

    #[test]
    fn exact_division() {
        // q² − 1 = (q − 1)(q + 1)
        assert_eq!(
            p(&[-1, 0, 1]).divide_exact(&p(&[-1, 1])),
            Some(p(&[1, 1]))
        );
        // q² + 1 is not divisible by q − 1
        assert_eq!(p(&[1, 0, 1]).divide_exact(&p(&[-1, 1])), None);
        // non-monic: 2q + 2 divides 2q² + 4q + 2? (2q+2)(q+1) = 2q²+4q+2
        assert_eq!(
            p(&[2, 4, 2]).divide_exact(&p(&[2, 2])),
            Some(p(&[1, 1]))
        );
        // 3 ∤ leading coefficient path
        assert_eq!(p(&[0, 0, 2]).divide_exact(&p(&[0, 3])), None);
    }

    #[test]
    fn multiplicity_counts_repeated_factors() {
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[1, 1]); // (q−1)²(q+1)
        assert_eq!(f.multiplicity_of(&p(&[-1, 1])), 2);
        assert_eq!(f.multiplicity_of(&p(&[1, 1])), 1);
        assert_eq!(f.multiplicity_of(&p(&[1, 1, 1])), 0);
    }

    #[test]
    fn content_and_primitive() {
        let f = p(&[6, -9, 12]);
        assert_eq!(f.content(), BigInt::from(3));
        assert_eq!(f.primitive_part(), p(&[2, -3, 4]));
        assert_eq!(IntPoly::zero().content(), BigInt::zero());
        // sign preserved
        let g = p(&[-4, -8]);
        assert_eq!(g.primitive_part(), p(&[-1, -2]));
    }

    #[test]
    fn gcd_examples() {
        // gcd(q²−1, q³−1) = q−1
        let g = poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        // gcd with zero = primitive part, positive leading coefficient
        assert_eq!(poly_gcd(&IntPoly::zero(), &p(&[-2, -2])).unwrap(), p(&[1, 1]));
        assert_eq!(
            poly_gcd(&IntPoly::zero(), &IntPoly::zero()),
            Err(Error::GcdOfZeros)
        );
        // Φ₅ and q−1 are coprime
        let phi5 = p(&[1, 1, 1, 1, 1]);
        assert_eq!(poly_gcd(&phi5, &p(&[-1, 1])).unwrap(), IntPoly::one());
    }

    #[test]
    fn gcd_divides_both_inputs() {
        let a = &p(&[2, 0, -2]) * &p(&[3, 1]); // 2(q−1)(q+1)(3+q)
        let b = &p(&[-1, 1]) * &p(&[5, 5]); // 5(q−1)(q+1)
        let g = poly_gcd(&a, &b).unwrap();
        assert_eq!(g, p(&[-1, 0, 1]));
        assert!(a.divide_exact(&g).is_some());
        assert!(b.divide_exact(&g).is_some());
    }

    #[test]
    fn divides_exactly_reports_quotient_and_content() {
        // q−1 | q²−1, quotient q+1
        let chk = divides_exactly(&p(&[-1, 1]), &p(&[-1, 0, 1])).unwrap();
        assert_eq!(chk.quotient, Some(p(&[1, 1])));
        assert!(chk.content_ok);
        // q−1 ∤ q²+1
        let chk = divides_exactly(&p(&[-1, 1]), &p(&[1, 0, 1])).unwrap();
        assert!(!chk.divides());
        // content mismatch is flagged: 2 | f fails in Z[q] but succeeds in Q[q]
        let chk = divides_exactly(&p(&[2, 2]), &p(&[1, 2, 1])).unwrap();
        assert!(chk.divides());
        assert!(!chk.content_ok);
        assert_eq!(
            divides_exactly(&IntPoly::zero(), &p(&[1])).unwrap_err(),
            Error::ZeroDivisor
        );
    }

    #[test]
    fn evaluation_matches_horner() {
        let f = p(&[1, -2, 0, 4]);
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        // 1 − 2·(1/2) + 4·(1/8) = 1/2
        assert_eq!(f.eval(&half), BigRational::new(BigInt::one(), BigInt::from(2)));
        assert_eq!(f.eval_int(&BigInt::from(3)), BigInt::from(1 - 6 + 108));
    }

    #[test]
    fn pseudo_rem_agrees_with_scaled_remainder() {
        let a = p(&[1, 3, 0, 2, 5]);
        let b = p(&[2, 0, 3]);
        let r = a.pseudo_rem(&b);
        // lc(b)^(4−2+1)·a − r must be divisible by b
        let scaled = a.mul_scalar(&BigInt::from(27));
        let diff = &scaled - &r;
        assert!(diff.divide_exact(&b).is_some());
    }
}
