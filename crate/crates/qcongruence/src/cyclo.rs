//! Cyclotomic polynomial cache and cyclotomic factor extraction.
//!
//! Every denominator and modulus that shows up in the verification suites
//! is, up to sign and a power of q, a product of cyclotomic polynomials.
//! Fraction normalization therefore cancels common factors by stripping
//! cyclotomic factors directly instead of running a generic gcd; the
//! subresultant gcd remains as the fallback for inputs without that
//! structure.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::modp::{PolyMod, SCREEN_PRIMES};
use crate::ring::poly::IntPoly;

static CACHE: RwLock<Vec<Arc<IntPoly>>> = RwLock::new(Vec::new());

/// Φ_n(q) for n ≥ 1, from the shared cache. Computed by dividing q^n − 1
/// by Φ_d(q) for every proper divisor d of n.
pub(crate) fn phi(n: u64) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic index must be positive");
    {
        let table = CACHE.read().unwrap();
        if let Some(p) = table.get(n as usize - 1) {
            return Arc::clone(p);
        }
    }
    warm(n);
    Arc::clone(&CACHE.read().unwrap()[n as usize - 1])
}

/// Extends the cache so that Φ_1 … Φ_n are all available.
pub(crate) fn warm(n: u64) {
    let mut table = CACHE.write().unwrap();
    let mut m = table.len() as u64 + 1;
    while m <= n {
        let mut poly = {
            // q^m − 1
            let mut coeffs = vec![BigInt::zero(); m as usize + 1];
            coeffs[0] = BigInt::from(-1);
            coeffs[m as usize] = BigInt::one();
            IntPoly::from_coeffs(coeffs)
        };
        for d in 1..m {
            if m % d == 0 {
                poly = poly
                    .divide_exact(&table[d as usize - 1])
                    .expect("q^m - 1 is divisible by each Φ_d with d | m");
            }
        }
        table.push(Arc::new(poly));
        m += 1;
    }
}

/// Number of cyclotomic polynomials currently cached.
pub(crate) fn cached_upto() -> u64 {
    CACHE.read().unwrap().len() as u64
}

/// Euler's totient by trial-division factorization.
pub(crate) fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Upper bound on indices d with φ(d) ≤ `deg`: d/φ(d) < 7 holds for every
/// d below the primorial of 43, far beyond any degree handled here.
fn index_bound(deg: usize) -> u64 {
    7 * deg as u64 + 30
}

/// A factorization `f = content · q^q_power · Π Φ_d(q)^e · residual` with
/// the residual primitive and positive-leading. The factorization is
/// complete (residual = 1) exactly when f is, up to content, a monomial
/// times a product of cyclotomic polynomials.
#[derive(Debug, Clone)]
pub(crate) struct CycloForm {
    pub content: BigInt,
    pub q_power: usize,
    pub factors: Vec<(u64, u32)>,
    pub residual: IntPoly,
}

impl CycloForm {
    pub(crate) fn is_complete(&self) -> bool {
        self.residual.is_one()
    }
}

/// Splits off the sign/content, the q-power, and every cyclotomic factor
/// of a nonzero polynomial.
pub(crate) fn cyclotomic_form(f: &IntPoly) -> CycloForm {
    assert!(!f.is_zero());
    let q_power = f.trailing_order().unwrap_or(0);
    let shifted = f.div_q_pow(q_power);
    let mut content = shifted.content();
    if shifted.leading_coeff().is_some_and(Signed::is_negative) {
        content = -content;
    }
    let mut work = shifted.div_scalar_exact(&content);

    let mut factors = Vec::new();
    let prime = SCREEN_PRIMES[0];
    let mut work_p = PolyMod::reduce(&work, prime);
    let mut d = 1u64;
    while !work.is_constant() && d <= index_bound(work.deg_or_zero()) {
        if euler_phi(d) <= work.deg_or_zero() as u64 {
            let phi_d = phi(d);
            let phi_p = PolyMod::reduce(&phi_d, prime);
            // Screen mod p first: Φ_d is monic, so non-divisibility mod p
            // rules out divisibility over Z.
            if let Some(q_p) = work_p.div_exact(&phi_p) {
                if let Some(q) = work.divide_exact(&phi_d) {
                    let mut mult = 1u32;
                    work = q;
                    work_p = q_p;
                    loop {
                        let Some(q_p) = work_p.div_exact(&phi_p) else {
                            break;
                        };
                        let Some(q) = work.divide_exact(&phi_d) else {
                            break;
                        };
                        mult += 1;
                        work = q;
                        work_p = q_p;
                    }
                    factors.push((d, mult));
                }
            }
        }
        d += 1;
    }
    CycloForm {
        content,
        q_power,
        factors,
        residual: work,
    }
}

/// Multiplicity of Φ_d in a nonzero polynomial.
pub(crate) fn phi_multiplicity(f: &IntPoly, d: u64) -> u32 {
    assert!(!f.is_zero());
    let phi_d = phi(d);
    if (f.deg_or_zero() as u64) < euler_phi(d) {
        return 0;
    }
    f.multiplicity_of(&phi_d)
}

/// Extracts a common divisor `g` of two nonzero polynomials together with
/// the exact cofactors `(g, a/g, b/g)`.
///
/// The divisor collects the common q-power, common cyclotomic factors,
/// and the common integer content. It equals the true gcd whenever either
/// input is a monomial times a product of cyclotomics, which covers every
/// denominator produced by the suites; callers must treat it only as
/// *some* common divisor.
pub(crate) fn extract_common(a: &IntPoly, b: &IntPoly) -> (IntPoly, IntPoly, IntPoly) {
    debug_assert!(!a.is_zero() && !b.is_zero());
    let t = a
        .trailing_order()
        .unwrap()
        .min(b.trailing_order().unwrap());
    let mut ra = a.div_q_pow(t);
    let mut rb = b.div_q_pow(t);
    let mut g = IntPoly::q_pow(t);

    // The modular gcd degree bounds the degree of the true common factor;
    // stripping decrements the bound, so the scan stops as soon as every
    // common cyclotomic factor has been found.
    let mut budget = crate::ring::modp::gcd_degree_screen(&ra, &rb).unwrap_or_else(|| {
        ra.deg_or_zero().min(rb.deg_or_zero())
    });
    if budget > 0 {
        let prime = SCREEN_PRIMES[0];
        let mut ra_p = PolyMod::reduce(&ra, prime);
        let mut rb_p = PolyMod::reduce(&rb, prime);
        let mut d = 1u64;
        while budget > 0 && d <= index_bound(budget) {
            if euler_phi(d) <= budget as u64 {
                let phi_d = phi(d);
                let phi_p = PolyMod::reduce(&phi_d, prime);
                loop {
                    let (Some(qa_p), Some(qb_p)) =
                        (ra_p.div_exact(&phi_p), rb_p.div_exact(&phi_p))
                    else {
                        break;
                    };
                    let (Some(qa), Some(qb)) = (ra.divide_exact(&phi_d), rb.divide_exact(&phi_d))
                    else {
                        break;
                    };
                    ra = qa;
                    rb = qb;
                    ra_p = qa_p;
                    rb_p = qb_p;
                    g = &g * &phi_d;
                    budget = budget.saturating_sub(euler_phi(d) as usize);
                }
            }
            d += 1;
        }
    }

    let c = ra.content().gcd(&rb.content());
    if !c.is_one() {
        ra = ra.div_scalar_exact(&c);
        rb = rb.div_scalar_exact(&c);
        g = g.mul_scalar(&c);
    }
    (g, ra, rb)
}

/// Canonicalizes a fraction num/den:
///
/// * zero is represented as 0/1;
/// * no common q-power, cyclotomic factor, polynomial factor, or integer
///   content remains between numerator and denominator;
/// * the denominator has a positive leading coefficient.
pub(crate) fn normalize_fraction(num: IntPoly, den: IntPoly) -> (IntPoly, IntPoly) {
    assert!(!den.is_zero(), "fraction with zero denominator");
    if num.is_zero() {
        return (IntPoly::zero(), IntPoly::one());
    }
    let (_, mut num, mut den) = extract_common(&num, &den);

    // The cyclotomic pass misses non-cyclotomic common factors; a modular
    // screen tells us rigorously whether any survive.
    if crate::ring::modp::gcd_degree_screen(&num, &den) != Some(0) {
        if let Ok(g) = crate::ring::poly::poly_gcd(&num, &den) {
            if !g.is_constant() {
                num = num.divide_exact(&g).expect("gcd divides numerator");
                den = den.divide_exact(&g).expect("gcd divides denominator");
            }
        }
    }

    let c = num.content().gcd(&den.content());
    if !c.is_one() {
        num = num.div_scalar_exact(&c);
        den = den.div_scalar_exact(&c);
    }
    if den.leading_coeff().is_some_and(Signed::is_negative) {
        num = -&num;
        den = -&den;
    }
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn first_cyclotomics() {
        assert_eq!(*phi(1), p(&[-1, 1]));
        assert_eq!(*phi(2), p(&[1, 1]));
        assert_eq!(*phi(3), p(&[1, 1, 1]));
        assert_eq!(*phi(4), p(&[1, 0, 1]));
        assert_eq!(*phi(6), p(&[1, -1, 1]));
        assert_eq!(*phi(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn totient_values() {
        let expected = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), e, "phi({})", i + 1);
        }
        assert_eq!(euler_phi(30030), 5760);
    }

    #[test]
    fn form_recovers_structured_products() {
        // f = -3 q² (q−1)² Φ₆
        let f = &(&IntPoly::monomial(-3, 2) * &(&p(&[-1, 1]) * &p(&[-1, 1]))) * &p(&[1, -1, 1]);
        let form = cyclotomic_form(&f);
        assert_eq!(form.content, BigInt::from(-3));
        assert_eq!(form.q_power, 2);
        assert_eq!(form.factors, vec![(1, 2), (6, 1)]);
        assert!(form.is_complete());
    }

    #[test]
    fn form_leaves_non_cyclotomic_residual() {
        // q² + 2 is irreducible and not cyclotomic
        let f = &p(&[2, 0, 1]) * &p(&[-1, 1]);
        let form = cyclotomic_form(&f);
        assert_eq!(form.factors, vec![(1, 1)]);
        assert_eq!(form.residual, p(&[2, 0, 1]));
        assert!(!form.is_complete());
    }

    #[test]
    fn normalization_cancels_everything_shared() {
        // (q−1)(q+1) / 2(q−1) → (q+1)/2
        let num = &p(&[-1, 1]) * &p(&[1, 1]);
        let den = p(&[-2, 2]); // 2(q−1)
        let (n, d) = normalize_fraction(num, den);
        assert_eq!(n, p(&[1, 1]));
        assert_eq!(d, p(&[2]));
    }

    #[test]
    fn normalization_handles_non_cyclotomic_common_factor() {
        // (q²+2)(q+1) / (q²+2)·3 → (q+1)/3
        let num = &p(&[2, 0, 1]) * &p(&[1, 1]);
        let den = p(&[6, 0, 3]);
        let (n, d) = normalize_fraction(num, den);
        assert_eq!(n, p(&[1, 1]));
        assert_eq!(d, p(&[3]));
    }

    #[test]
    fn extract_common_returns_exact_cofactors() {
        let a = &(&p(&[-1, 1]) * &p(&[1, 1])) * &p(&[0, 2]); // 2q(q−1)(q+1)
        let b = &p(&[1, 1]) * &p(&[0, 0, 4]); // 4q²(q+1)
        let (g, ca, cb) = extract_common(&a, &b);
        assert_eq!(&g * &ca, a);
        assert_eq!(&g * &cb, b);
        // g collects q, (q+1), and the content 2
        assert_eq!(g.multiplicity_of(&p(&[1, 1])), 1);
        assert_eq!(g.trailing_order(), Some(1));
        assert_eq!(g.content(), BigInt::from(2));
    }
}
