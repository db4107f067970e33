use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cyclo;
use crate::error::{Error, Result};

use super::poly::IntPoly;

/// A normalized quotient of two integer polynomials: an element of the
/// fraction field Q(q).
///
/// Invariants maintained by every constructor and operation:
///
/// * the denominator is nonzero and has a positive leading coefficient;
/// * numerator and denominator share no polynomial factor and no integer
///   content (so rational scalars such as 1/24 live in the denominator
///   as constant factors);
/// * zero is represented as 0/1.
///
/// Equality of values is therefore representational equality. Negative
/// powers of q are ordinary elements here: `q^{-e}` is `1 / q^e`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFn {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (num, den) = cyclo::normalize_fraction(num, den);
        Ok(RationalFn { num, den })
    }

    pub fn zero() -> Self {
        RationalFn {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFn {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalFn {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        RationalFn::from_poly(IntPoly::constant(n))
    }

    /// An exact integer ratio as a constant rational function.
    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        RationalFn::new(IntPoly::constant(num.into()), IntPoly::constant(den.into()))
    }

    /// `q^e` for any integer e, negative exponents included.
    pub fn q_pow(e: i64) -> Self {
        if e >= 0 {
            RationalFn::from_poly(IntPoly::q_pow(e as usize))
        } else {
            RationalFn {
                num: IntPoly::one(),
                den: IntPoly::q_pow((-e) as usize),
            }
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Multiplicative inverse.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = self.den.clone();
        let mut den = self.num.clone();
        if den.leading_coeff().is_some_and(Signed::is_negative) {
            num = -&num;
            den = -&den;
        }
        Ok(RationalFn { num, den })
    }

    pub fn div(&self, rhs: &RationalFn) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = RationalFn::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point; errors at poles.
    pub fn eval_at(&self, r: &BigRational) -> Result<BigRational> {
        let den = self.den.eval(r);
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(r) / den)
    }

    /// Scales by an integer polynomial.
    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        self * &RationalFn::from_poly(p.clone())
    }
}

impl Default for RationalFn {
    fn default() -> Self {
        RationalFn::zero()
    }
}

impl From<IntPoly> for RationalFn {
    fn from(p: IntPoly) -> Self {
        RationalFn::from_poly(p)
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Common denominator through a shared divisor keeps the lcm small;
        // suite sums have denominators that mostly contain one another.
        let (_, da, db) = cyclo::extract_common(&self.den, &rhs.den);
        let num = &(&self.num * &db) + &(&rhs.num * &da);
        let den = &self.den * &db;
        let (num, den) = cyclo::normalize_fraction(num, den);
        RationalFn { num, den }
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        // Cross-cancel before multiplying so products stay small.
        let (_, an, bd) = cyclo::extract_common(&self.num, &rhs.den);
        let (_, bn, ad) = cyclo::extract_common(&rhs.num, &self.den);
        let (num, den) = cyclo::normalize_fraction(&an * &bn, &ad * &bd);
        RationalFn { num, den }
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: RationalFn) -> RationalFn {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: &RationalFn) -> RationalFn {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_coeffs(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFn {
        RationalFn::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn common_denominator_addition() {
        // 1/(1−q) + q/(1−q) = (1+q)/(1−q)
        let a = rf(&[1], &[1, -1]);
        let b = rf(&[0, 1], &[1, -1]);
        assert_eq!(&a + &b, rf(&[1, 1], &[1, -1]));
    }

    #[test]
    fn cancellation_on_construction() {
        // (q−1)/(q²−1) = 1/(q+1)
        assert_eq!(rf(&[-1, 1], &[-1, 0, 1]), rf(&[1], &[1, 1]));
    }

    #[test]
    fn inverse_monomials_multiply_to_one() {
        let qinv = RationalFn::q_pow(-1);
        let q = RationalFn::q_pow(1);
        assert!( (&qinv * &q).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = RationalFn::one();
        assert_eq!(a.div(&RationalFn::zero()), Err(Error::DivisionByZero));
        assert_eq!(RationalFn::zero().recip(), Err(Error::DivisionByZero));
        assert_eq!(
            RationalFn::new(IntPoly::one(), IntPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn eval_examples() {
        let one = BigRational::one();
        // 1/(1+q) at 1 → 1/2
        let f = rf(&[1], &[1, 1]);
        assert_eq!(
            f.eval_at(&one).unwrap(),
            BigRational::new(BigInt::one(), BigInt::from(2))
        );
        // Φ₅ at 1 → 5
        let phi5 = RationalFn::from_poly(p(&[1, 1, 1, 1, 1]));
        assert_eq!(phi5.eval_at(&one).unwrap(), BigRational::from(BigInt::from(5)));
        // 1/(1−q) at 1 → pole
        let pole = rf(&[1], &[1, -1]);
        assert_eq!(pole.eval_at(&one), Err(Error::Pole));
    }

    #[test]
    fn denominator_sign_is_canonical() {
        // 1/(−q−1) = −1/(q+1)
        let f = rf(&[1], &[-1, -1]);
        assert_eq!(f, rf(&[-1], &[1, 1]));
        assert!(f.den().leading_coeff().unwrap() > &BigInt::zero());
    }

    #[test]
    fn scalar_content_moves_to_denominator() {
        // (2q+2)/4 = (q+1)/2
        let f = rf(&[2, 2], &[4]);
        assert_eq!(f, rf(&[1, 1], &[2]));
        // but coprime contents stay: 2/(3q) is already reduced
        let g = rf(&[2], &[0, 3]);
        assert_eq!(g.num(), &p(&[2]));
        assert_eq!(g.den(), &p(&[0, 3]));
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let q = RationalFn::q_pow(1);
        assert_eq!(q.pow(3).unwrap(), RationalFn::q_pow(3));
        assert_eq!(q.pow(-2).unwrap(), RationalFn::q_pow(-2));
        let half = RationalFn::from_ratio(1, 2).unwrap();
        assert_eq!(half.pow(-1).unwrap(), RationalFn::from_int(2));
        assert!(RationalFn::zero().pow(-1).is_err());
    }
}
