//! Exact rational arithmetic and p-adic valuation checks for the q = 1
//! statements: truncated hypergeometric sums against prime powers.
//!
//! Summands are built from central binomial coefficients — the identity
//! `(1/2)_k / k! = C(2k,k) / 4^k` turns every half-integer Pochhammer
//! quotient into a binomial one — so denominators are powers of 2 and
//! valuations at odd primes can never hide in the denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Reduced fraction of arbitrary-precision integers with positive
/// denominator; the representation `num_rational` guarantees.
pub type ExactRational = BigRational;

/// A p-adic valuation: finite or +∞ (the valuation of zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn at_least(self, required: i64) -> bool {
        match self {
            Valuation::Infinite => true,
            Valuation::Finite(v) => v >= required,
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Outcome of one valuation check.
#[derive(Debug, Clone)]
pub struct PadicVerdict {
    pub prime: u64,
    pub r: u32,
    pub required_order: i64,
    pub observed_order: Valuation,
    pub holds: bool,
}

impl PadicVerdict {
    fn new(prime: u64, r: u32, required_order: i64, observed_order: Valuation) -> Self {
        PadicVerdict {
            prime,
            r,
            required_order,
            observed_order,
            holds: observed_order.at_least(required_order),
        }
    }
}

/// Deterministic trial-division primality; desk-scale inputs only.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn int_valuation(x: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!x.is_zero());
    let mut v = 0;
    let mut cur = x.clone();
    loop {
        let (div, rem) = num_integer::Integer::div_rem(&cur, p);
        if !rem.is_zero() {
            return v;
        }
        v += 1;
        cur = div;
    }
}

/// The p-adic valuation of an exact rational; +∞ for zero.
pub fn v_p(x: &ExactRational, p: u64) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if x.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let pb = BigInt::from(p);
    Ok(Valuation::Finite(
        int_valuation(x.numer(), &pb) - int_valuation(x.denom(), &pb),
    ))
}

/// Binomial coefficient by the multiplicative recurrence.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// C(2k, k).
pub fn central_binomial(k: u64) -> BigInt {
    binomial(2 * k, k)
}

fn pow_big(base: i64, exp: u64) -> BigInt {
    BigInt::from(base).pow(exp as u32)
}

/// `(3k+1)·C(2k,k)³ / 16^k` — the q = 1 shadow of the half-sum families.
pub fn divergent_term_16(k: u64) -> ExactRational {
    let c = central_binomial(k);
    BigRational::new(BigInt::from(3 * k + 1) * (&c * &c * &c), pow_big(16, k))
}

/// `(3k+1)·(−1)^k·C(2k,k)³ / 8^k`.
pub fn divergent_term_8_signed(k: u64) -> ExactRational {
    let c = central_binomial(k);
    let sign = if k % 2 == 0 { 1 } else { -1 };
    BigRational::new(
        BigInt::from(sign) * BigInt::from(3 * k + 1) * (&c * &c * &c),
        pow_big(8, k),
    )
}

/// `(10k²+6k+1)·C(2k,k)⁵ / 256^k`.
pub fn divergent_term_256(k: u64) -> ExactRational {
    let c = central_binomial(k);
    let c2 = &c * &c;
    BigRational::new(
        BigInt::from(10 * k * k + 6 * k + 1) * (&c2 * &c2 * &c),
        pow_big(256, k),
    )
}

/// `(6k+1)·C(2k,k)³ / 256^k`.
pub fn swisher_term(k: u64) -> ExactRational {
    let c = central_binomial(k);
    BigRational::new(BigInt::from(6 * k + 1) * (&c * &c * &c), pow_big(256, k))
}

/// Σ_{k=0}^{upper} of a term family.
pub fn term_sum(term: fn(u64) -> ExactRational, upper_inclusive: u64) -> ExactRational {
    let mut acc = BigRational::zero();
    for k in 0..=upper_inclusive {
        acc += term(k);
    }
    acc
}

fn sign_half(p: u64) -> i64 {
    if (p - 1) / 2 % 2 == 0 {
        1
    } else {
        -1
    }
}

fn prime_power(p: u64, r: u32) -> BigInt {
    BigInt::from(p).pow(r)
}

/// The truncated-sum supercongruence families against p^r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivergentId {
    /// half sum of 16^{-k} terms ≡ p (mod p³), p > 2
    Div1,
    /// half sum of 256^{-k} quintic terms ≡ p² (mod p⁵), p > 3
    Div2,
    /// half sum of signed 8^{-k} terms ≡ p·(−1)^{(p−1)/2} (mod p³), p > 2
    Div3,
    /// half sum ≡ p^r (mod p^{r+2}), p > 2
    DivGenR1,
    /// full sum ≡ p^r (mod p^{r+2}), p > 2
    DivGenR2,
    /// signed half sum ≡ p^r·(−1)^{(p−1)/2} (mod p^{r+2}), p > 2
    Div3Pr,
    /// full sum ≡ p^r (mod p^{r+3}), p > 3
    SunHu,
}

/// Builds the exact truncated sum for a family, subtracts the stated right
/// side, and checks the valuation of the difference.
pub fn check_divergent(id: DivergentId, p: u64, r: u32) -> Result<PadicVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let min_p = match id {
        DivergentId::Div2 | DivergentId::SunHu => 3,
        _ => 2,
    };
    if p <= min_p {
        return Err(Error::Precondition(format!(
            "{id:?} requires p > {min_p}, got {p}"
        )));
    }
    let fixed_r1 = matches!(id, DivergentId::Div1 | DivergentId::Div2 | DivergentId::Div3);
    if r == 0 || (fixed_r1 && r != 1) {
        return Err(Error::Precondition(format!(
            "{id:?} requires r = 1, got {r}"
        )));
    }
    let pr = prime_power(p, r);
    let half: u64 = {
        let v = (p as u128).pow(r) - 1;
        (v / 2) as u64
    };
    let full: u64 = ((p as u128).pow(r) - 1) as u64;

    let (lhs, rhs, required) = match id {
        DivergentId::Div1 => (
            term_sum(divergent_term_16, half),
            BigRational::from(BigInt::from(p)),
            3,
        ),
        DivergentId::Div2 => (
            term_sum(divergent_term_256, half),
            BigRational::from(BigInt::from(p * p)),
            5,
        ),
        DivergentId::Div3 => (
            term_sum(divergent_term_8_signed, half),
            BigRational::from(BigInt::from(p as i64 * sign_half(p))),
            3,
        ),
        DivergentId::DivGenR1 => (
            term_sum(divergent_term_16, half),
            BigRational::from(pr.clone()),
            r as i64 + 2,
        ),
        DivergentId::DivGenR2 => (
            term_sum(divergent_term_16, full),
            BigRational::from(pr.clone()),
            r as i64 + 2,
        ),
        DivergentId::Div3Pr => (
            term_sum(divergent_term_8_signed, half),
            BigRational::from(&pr * BigInt::from(sign_half(p))),
            r as i64 + 2,
        ),
        DivergentId::SunHu => (
            term_sum(divergent_term_16, full),
            BigRational::from(pr.clone()),
            r as i64 + 3,
        ),
    };
    let observed = v_p(&(lhs - rhs), p)?;
    Ok(PadicVerdict::new(p, r, required, observed))
}

/// Integer divisibility verdict for the weighted binomial sums.
#[derive(Debug, Clone)]
pub struct DivisibilityVerdict {
    pub n: u64,
    pub sum: BigInt,
    pub modulus: BigInt,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SunBinomialId {
    /// Σ (3k+1)C(2k,k)³·16^{n−k} ≡ 0 (mod 4(2n+1)C(2n,n))
    Sun1,
    /// Σ (3k+1)C(2k,k)³·(−8)^{n−k} ≡ 0 (mod 4(2n+1)C(2n,n))
    Sun2,
}

/// Exact integer sum and modulus for the two weighted binomial families.
pub fn check_sun_binomial(id: SunBinomialId, n: u64) -> DivisibilityVerdict {
    let mut sum = BigInt::zero();
    for k in 0..=n {
        let c = central_binomial(k);
        let weight = match id {
            SunBinomialId::Sun1 => pow_big(16, n - k),
            SunBinomialId::Sun2 => pow_big(-8, n - k),
        };
        sum += BigInt::from(3 * k + 1) * (&c * &c * &c) * weight;
    }
    let modulus = BigInt::from(4 * (2 * n + 1)) * central_binomial(n);
    let holds = (&sum % &modulus).is_zero();
    DivisibilityVerdict {
        n,
        sum,
        modulus,
        holds,
    }
}

/// Σ_{k=1}^{p−1} C(2k,k)/k for p > 3: valuation at p must be ≥ 2.
pub fn check_sun_tauraso(p: u64) -> Result<PadicVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p <= 3 {
        return Err(Error::Precondition(format!(
            "central binomial sum requires p > 3, got {p}"
        )));
    }
    let mut sum = BigRational::zero();
    for k in 1..p {
        sum += BigRational::new(central_binomial(k), BigInt::from(k));
    }
    let observed = v_p(&sum, p)?;
    Ok(PadicVerdict::new(p, 1, 2, observed))
}

/// Σ_{k=1}^{p−1} C(2k,k)/k as an exact rational (the sum behind
/// [`check_sun_tauraso`], exposed for cross-checks).
pub fn sun_tauraso_sum(p: u64) -> ExactRational {
    let mut sum = BigRational::zero();
    for k in 1..p {
        sum += BigRational::new(central_binomial(k), BigInt::from(k));
    }
    sum
}

// --- polynomials in an indeterminate x over Q, used only by the binomial
// --- identity check below

#[derive(Debug, Clone, PartialEq)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn zero() -> Self {
        RatPoly(Vec::new())
    }

    fn constant(c: BigRational) -> Self {
        let mut p = RatPoly(vec![c]);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    fn add(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = rhs.0.get(i).cloned().unwrap_or_else(BigRational::zero);
            out.push(a + b);
        }
        let mut p = RatPoly(out);
        p.trim();
        p
    }

    fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = RatPoly(out);
        p.trim();
        p
    }

    fn scale(&self, c: &BigRational) -> RatPoly {
        let mut p = RatPoly(self.0.iter().map(|a| a * c).collect());
        p.trim();
        p
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Generalized binomial C(x + shift, m) = Π_{i=0}^{m−1}(x + shift − i) / m!.
    fn falling_binomial(shift: i64, m: u64) -> RatPoly {
        let mut acc = RatPoly::constant(BigRational::one());
        for i in 0..m {
            let c = BigRational::from(BigInt::from(shift - i as i64));
            acc = acc.mul(&RatPoly(vec![c, BigRational::one()]));
        }
        let mut fact = BigInt::one();
        for i in 1..=m {
            fact *= BigInt::from(i);
        }
        acc.scale(&BigRational::new(BigInt::one(), fact))
    }
}

/// Coefficientwise verification, in the indeterminate x, of
///
/// ```text
/// Σ_{k=0}^{n} C(n,k)² C(x+k, 2n+1)
///   = (1 / ((4n+2)·C(2n,n))) · Σ_{k=0}^{n} (2x−3k) C(x,k)² C(2k,k)
/// ```
///
/// together with a spot-check of the specialization x = −1/2.
pub fn check_mao_sun_identity(n: u64) -> bool {
    let mut lhs = RatPoly::zero();
    for k in 0..=n {
        let c = binomial(n, k);
        let coeff = BigRational::from(&c * &c);
        lhs = lhs.add(&RatPoly::falling_binomial(k as i64, 2 * n + 1).scale(&coeff));
    }

    let mut rhs = RatPoly::zero();
    for k in 0..=n {
        let ck = RatPoly::falling_binomial(0, k);
        let ck2 = ck.mul(&ck);
        // (2x − 3k)
        let linear = RatPoly(vec![
            BigRational::from(BigInt::from(-3 * k as i64)),
            BigRational::from(BigInt::from(2)),
        ]);
        let term = linear
            .mul(&ck2)
            .scale(&BigRational::from(central_binomial(k)));
        rhs = rhs.add(&term);
    }
    let denom = BigInt::from(4 * n + 2) * central_binomial(n);
    rhs = rhs.scale(&BigRational::new(BigInt::one(), denom));

    if lhs != rhs {
        return false;
    }
    let minus_half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    lhs.eval(&minus_half) == rhs.eval(&minus_half)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LiftId {
    /// half 16-sum at r vs p · half 16-sum at r−1, mod p^{3r}
    Conj5a,
    /// full 16-sum at r vs p · full 16-sum at r−1, mod p^{4r−δ_{p,3}}
    Conj5b,
    /// signed half 8-sum at r vs p(−1)^{(p−1)/2} · half 16-sum at r−1, mod p^{3r+δ_{p,3}}
    Conj5c,
    /// signed full 8-sum at r vs p(−1)^{(p−1)/2} · full 16-sum at r−1, mod p^{3r}
    Conj5d,
    /// half Swisher sums: r vs r−1 scaled by (−1)^{(p−1)/2}p, mod p^{4r}
    SwisherJ3,
}

/// The prime-power lifting conjectures: both sides are built exactly (the
/// right side re-sums the shorter p^{r−1} truncation scaled by ±p) and the
/// difference's valuation is compared against the displayed exponent,
/// Kronecker-delta adjustments included.
pub fn check_lift_conjectures(id: LiftId, p: u64, r: u32) -> Result<PadicVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let min_p = match id {
        LiftId::SwisherJ3 => 3,
        _ => 2,
    };
    if p <= min_p {
        return Err(Error::Precondition(format!(
            "{id:?} requires p > {min_p}, got {p}"
        )));
    }
    if r == 0 {
        return Err(Error::Precondition("r must be ≥ 1".into()));
    }
    let delta_p3: i64 = if p == 3 { 1 } else { 0 };
    let upper = |r: u32, halved: bool| -> u64 {
        let v = (p as u128).pow(r) - 1;
        if halved { (v / 2) as u64 } else { v as u64 }
    };
    let p_big = BigRational::from(BigInt::from(p));
    let signed_p = BigRational::from(BigInt::from(p as i64 * sign_half(p)));

    let (lhs, rhs, required) = match id {
        LiftId::Conj5a => (
            term_sum(divergent_term_16, upper(r, true)),
            &p_big * term_sum(divergent_term_16, upper(r - 1, true)),
            3 * r as i64,
        ),
        LiftId::Conj5b => (
            term_sum(divergent_term_16, upper(r, false)),
            &p_big * term_sum(divergent_term_16, upper(r - 1, false)),
            4 * r as i64 - delta_p3,
        ),
        LiftId::Conj5c => (
            term_sum(divergent_term_8_signed, upper(r, true)),
            &signed_p * term_sum(divergent_term_16, upper(r - 1, true)),
            3 * r as i64 + delta_p3,
        ),
        LiftId::Conj5d => (
            term_sum(divergent_term_8_signed, upper(r, false)),
            &signed_p * term_sum(divergent_term_16, upper(r - 1, false)),
            3 * r as i64,
        ),
        LiftId::SwisherJ3 => (
            term_sum(swisher_term, upper(r, true)),
            &signed_p * term_sum(swisher_term, upper(r - 1, true)),
            4 * r as i64,
        ),
    };
    let observed = v_p(&(lhs - rhs), p)?;
    Ok(PadicVerdict::new(p, r, required, observed))
}
