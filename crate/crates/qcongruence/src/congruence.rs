//! The congruence relation on rational functions modulo a polynomial.
//!
//! Two rational functions are congruent modulo P(q) when the numerator of
//! their normalized difference is divisible by P(q) while the denominator
//! is relatively prime to P(q). When the denominator does share a factor
//! with P(q) the relation is undefined; that outcome is reported as
//! [`Verdict::NotApplicable`], distinct from a plain failure, so that
//! undefined instances can never masquerade as refutations (or as proofs).

use std::time::{Duration, Instant};

use num_traits::One;

use crate::cyclo;
use crate::error::{Error, Result};
use crate::qfactor;
use crate::ring::{divides_exactly, poly_gcd, IntPoly, RationalFn};

/// Three-valued outcome of a congruence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// The denominator of the difference shares a factor with the modulus,
    /// so the congruence relation is undefined for these operands.
    NotApplicable,
}

/// Structured outcome of one congruence check.
#[derive(Debug, Clone)]
pub struct CongruenceReport {
    pub verdict: Verdict,
    /// Human-readable rendering of the modulus, factored when possible.
    pub modulus_description: String,
    /// Cyclotomic index → multiplicity required by the modulus.
    pub required_orders: Vec<(u64, u32)>,
    /// Cyclotomic index → order of the difference (`None` = +∞, i.e. the
    /// difference is identically zero).
    pub observed_orders: Vec<(u64, Option<i64>)>,
    pub coprimality_ok: bool,
    /// Set when the primitive part of the numerator is divisible but the
    /// integer content of the modulus does not divide the numerator's;
    /// divisibility then holds in Q[q] but not in Z[q].
    pub content_anomaly: bool,
    /// Degree of numerator / modulus when the division is exact.
    pub cofactor_degree: Option<usize>,
    pub elapsed: Duration,
}

impl CongruenceReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn not_applicable(&self) -> bool {
        self.verdict == Verdict::NotApplicable
    }
}

fn describe_modulus(form: &cyclo::CycloForm) -> String {
    let mut parts = Vec::new();
    if !form.content.is_one() {
        parts.push(form.content.to_string());
    }
    match form.q_power {
        0 => {}
        1 => parts.push("q".into()),
        e => parts.push(format!("q^{e}")),
    }
    for &(d, m) in &form.factors {
        if m == 1 {
            parts.push(format!("Phi_{d}"));
        } else {
            parts.push(format!("Phi_{d}^{m}"));
        }
    }
    if !form.residual.is_one() {
        parts.push(format!("({})", form.residual));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

/// Checks whether `den` is relatively prime to the factored modulus.
/// Exact: the factorization lists every irreducible factor of the modulus
/// apart from the residual, which is handled by a gcd.
fn coprime_to_modulus(den: &IntPoly, modulus: &IntPoly, form: &cyclo::CycloForm) -> bool {
    if den.is_one() {
        return true;
    }
    if crate::ring::modp::gcd_degree_screen(den, modulus) == Some(0) {
        return true;
    }
    if form.q_power > 0 && den.trailing_order() != Some(0) {
        return false;
    }
    for &(d, _) in &form.factors {
        let phi = qfactor::cyclotomic(d);
        if den.divide_exact(&phi).is_some() {
            return false;
        }
    }
    if !form.residual.is_constant() {
        match poly_gcd(den, &form.residual) {
            Ok(g) => {
                if !g.is_constant() {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    true
}

/// Verifies `a ≡ b (mod P)` in the sense above and reports the evidence.
///
/// `P` must be nonzero and nonconstant.
pub fn congruent_mod(a: &RationalFn, b: &RationalFn, modulus: &IntPoly) -> Result<CongruenceReport> {
    if modulus.is_constant() {
        return Err(Error::Precondition(
            "congruence modulus must be nonconstant".into(),
        ));
    }
    let start = Instant::now();
    let diff = a - b;
    let form = cyclo::cyclotomic_form(modulus);
    let required_orders: Vec<(u64, u32)> = form.factors.clone();
    let modulus_description = describe_modulus(&form);

    let coprimality_ok = coprime_to_modulus(diff.den(), modulus, &form);

    let observed_orders: Vec<(u64, Option<i64>)> = required_orders
        .iter()
        .map(|&(d, _)| {
            let order = if diff.is_zero() {
                None
            } else {
                Some(qfactor::phi_order(&diff, d).expect("difference is nonzero"))
            };
            (d, order)
        })
        .collect();

    if !coprimality_ok {
        return Ok(CongruenceReport {
            verdict: Verdict::NotApplicable,
            modulus_description,
            required_orders,
            observed_orders,
            coprimality_ok,
            content_anomaly: false,
            cofactor_degree: None,
            elapsed: start.elapsed(),
        });
    }

    let (verdict, content_anomaly, cofactor_degree) = if diff.is_zero() {
        (Verdict::Holds, false, Some(0))
    } else {
        let chk = divides_exactly(modulus, diff.num())?;
        match chk.quotient {
            Some(q) => {
                let anomaly = !chk.content_ok;
                (
                    if anomaly { Verdict::Fails } else { Verdict::Holds },
                    anomaly,
                    Some(q.deg_or_zero()),
                )
            }
            None => (Verdict::Fails, false, None),
        }
    };

    Ok(CongruenceReport {
        verdict,
        modulus_description,
        required_orders,
        observed_orders,
        coprimality_ok,
        content_anomaly,
        cofactor_degree,
        elapsed: start.elapsed(),
    })
}

/// Convenience wrapper for moduli of the shape `extra · Φ_n(q)^k`
/// (`extra` defaults to 1; suites pass `[n]` or larger cofactors).
pub fn congruent_mod_phi_power(
    a: &RationalFn,
    b: &RationalFn,
    n: u64,
    k: u32,
    extra: Option<&IntPoly>,
) -> Result<CongruenceReport> {
    assert!(n >= 1 && k >= 1);
    let phi = qfactor::cyclotomic(n);
    let mut modulus = phi.clone();
    for _ in 1..k {
        modulus = &modulus * &phi;
    }
    if let Some(extra) = extra {
        modulus = &modulus * extra;
    }
    congruent_mod(a, b, &modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfactor::{cyclotomic, q_int};

    #[test]
    fn q_pow_m_equals_one_mod_phi_m() {
        // q^m ≡ 1 (mod Φ_m)
        let m = 7;
        let a = RationalFn::q_pow(m as i64);
        let b = RationalFn::one();
        let rep = congruent_mod(&a, &b, &cyclotomic(m)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert!(rep.coprimality_ok);
        assert_eq!(rep.required_orders, vec![(7, 1)]);
        assert_eq!(rep.observed_orders, vec![(7, Some(1))]);
    }

    #[test]
    fn shared_denominator_factor_is_not_applicable() {
        // 1/(1−q) vs 0 mod (q−1): undefined, not false
        let a = RationalFn::new(IntPoly::one(), IntPoly::from_i64_coeffs(&[1, -1])).unwrap();
        let rep = congruent_mod(&a, &RationalFn::zero(), &cyclotomic(1)).unwrap();
        assert_eq!(rep.verdict, Verdict::NotApplicable);
        assert!(!rep.coprimality_ok);
    }

    #[test]
    fn zero_difference_always_holds() {
        let a = RationalFn::new(
            IntPoly::from_i64_coeffs(&[3, 1]),
            IntPoly::from_i64_coeffs(&[0, 0, 5]),
        )
        .unwrap();
        let rep = congruent_mod(&a, &a.clone(), &cyclotomic(9)).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.observed_orders, vec![(9, None)]);
    }

    #[test]
    fn plain_failure_is_distinct() {
        // q ≢ 1 (mod Φ_3)
        let rep = congruent_mod(&RationalFn::q_pow(1), &RationalFn::one(), &cyclotomic(3)).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
        assert!(rep.coprimality_ok);
        assert_eq!(rep.observed_orders, vec![(3, Some(0))]);
    }

    #[test]
    fn constant_modulus_is_rejected() {
        let err = congruent_mod(&RationalFn::one(), &RationalFn::one(), &IntPoly::constant(5));
        assert!(err.is_err());
    }

    #[test]
    fn phi_power_wrapper_builds_layered_moduli() {
        // modulus [3]·Φ₃² = Φ₃³
        let rep = congruent_mod_phi_power(
            &RationalFn::one(),
            &RationalFn::one(),
            3,
            2,
            Some(&q_int(3)),
        )
        .unwrap();
        assert_eq!(rep.required_orders, vec![(3, 3)]);
        assert_eq!(rep.verdict, Verdict::Holds);
    }

    #[test]
    fn content_anomaly_is_flagged() {
        // 2(q+1) vs 0 mod 4Φ₂: primitive parts divide, content 4 ∤ 2
        let a = RationalFn::from_poly(IntPoly::from_i64_coeffs(&[2, 2]));
        let modulus = IntPoly::from_i64_coeffs(&[4, 4]);
        let rep = congruent_mod(&a, &RationalFn::zero(), &modulus).unwrap();
        assert_eq!(rep.verdict, Verdict::Fails);
        assert!(rep.content_anomaly);
    }
}
