//! The catalog of named statements: q-identities, q-congruences, their
//! integer shadows, and the open conjectures, each with parameterized
//! builders and verifiers.
//!
//! Suite ids are frozen strings; the CLI enumerates them via [`catalog`],
//! so the names here are the single source of truth.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::congruence::{congruent_mod, CongruenceReport, Verdict};
use crate::error::{Error, Result};
use crate::padic;
use crate::qfactor::{cyclotomic, q_binomial, q_int, q_pochhammer, CyclotomicCache, QPochSpec};
use crate::ring::{IntPoly, RationalFn};
use crate::wzpairs::{choose2, he_suite_modulus, staver_antisymmetric_sum};

/// Statement category. Identities demand exact equality, congruences are
/// proved results checked by divisibility, conjectures are open statements
/// whose failures are findings rather than build breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteKind {
    Identity,
    Congruence,
    Conjecture,
}

impl SuiteKind {
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Identity => "identity",
            SuiteKind::Congruence => "congruence",
            SuiteKind::Conjecture => "conjecture",
        }
    }
}

/// How a suite is parameterized on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    /// a single integer n
    N,
    /// a prime p (r fixed at 1)
    Prime,
    /// a prime power p^r
    PrimePower,
}

/// Catalog entry for one named statement.
#[derive(Debug, Clone)]
pub struct SuiteInfo {
    pub id: &'static str,
    pub kind: SuiteKind,
    pub params: ParamKind,
    pub admissible_desc: &'static str,
    /// The claim itself, in ASCII notation.
    pub statement: &'static str,
}

macro_rules! suite {
    ($id:literal, $kind:expr, $params:expr, $adm:literal, $stmt:literal) => {
        SuiteInfo {
            id: $id,
            kind: $kind,
            params: $params,
            admissible_desc: $adm,
            statement: $stmt,
        }
    };
}

use ParamKind::{Prime, PrimePower, N};
use SuiteKind::{Congruence, Conjecture, Identity};

static CATALOG: &[SuiteInfo] = &[
    suite!("thm1_half", Congruence, N, "odd n >= 1",
        "sum_{k=0}^{(n-1)/2} [3k+1] (q;q^2)_k^3 q^{-C(k+1,2)} / ((q;q)_k^2 (q^2;q^2)_k) == [n] q^{(1-n)/2}  (mod [n] Phi_n^2)"),
    suite!("thm1_full", Congruence, N, "odd n >= 1",
        "sum_{k=0}^{n-1} [3k+1] (q;q^2)_k^3 q^{-C(k+1,2)} / ((q;q)_k^2 (q^2;q^2)_k) == [n] q^{(1-n)/2}  (mod [n] Phi_n^2)"),
    suite!("thm2", Congruence, N, "odd n >= 1",
        "sum_{k=0}^{n-1} (-1)^k [3k+1] (q;q^2)_k^3 / (q;q)_k^3 == [n] q^{(n-1)^2/4} (-1)^{(n-1)/2}  (mod [n] Phi_n^2)"),
    suite!("conj1", Conjecture, N, "odd n >= 1",
        "sum_{k=0}^{(n-1)/2} (-1)^k [3k+1] (q;q^2)_k^3 / (q;q)_k^3 == [n] q^{(n-1)^2/4} (-1)^{(n-1)/2}  (mod [n] Phi_n^2)"),
    suite!("conj1_weak", Congruence, N, "odd n >= 1",
        "sum_{k=0}^{(n-1)/2} (-1)^k [3k+1] (q;q^2)_k^3 / (q;q)_k^3 == 0  (mod Phi_n)"),
    suite!("thm3", Congruence, N, "n >= 1",
        "sum_{k=0}^{n} (-1)^k [3k+1] binom(2k,k)^3 (-q;q)_n^3/(-q;q)_k^3 == 0  (mod (1+q^n)^2 [2n+1] binom(2n,n))"),
    suite!("conj2", Conjecture, N, "n >= 1",
        "sum_{k=0}^{n} [3k+1] binom(2k,k)^3 (-q;q)_n^4/(-q;q)_k^4 q^{-C(k+1,2)} == 0  (mod (1+q^n)^2 [2n+1] binom(2n,n))"),
    suite!("thm4", Congruence, N, "odd n >= 1",
        "sum_{k=1}^{n-1} [3k]/[2k]^2 binom(2k,k) q^{-C(k,2)} == (n^2-1)(1-q)^2/24 [n]  (mod Phi_n^2)"),
    suite!("q_staver", Identity, N, "n >= 1",
        "sum_{k=1}^{n} [3k]/[2k]^2 binom(2k,k) q^{-C(k,2)} == [n+1] binom(2n+1,n) sum_{k=1}^{n} q^{-C(n-2k+1,2)} / ([2k]^2 binom(n,k)_{q^2}^2)"),
    suite!("staver_symmetry", Identity, N, "n >= 1",
        "sum_{k=1}^{n} (1-q^{2k-n-1}) q^{-C(n-2k+1,2)} / ([2k]^2 binom(n,k)_{q^2}^2) == 0"),
    suite!("q_hamme", Congruence, Prime, "odd prime p",
        "sum_{k=0}^{(p-1)/2} (-1)^k q^{k^2} [4k+1] (q;q^2)_k^3/(q^2;q^2)_k^3 == [p] q^{(p-1)^2/4} (-1)^{(p-1)/2}  (mod [p]^3)"),
    suite!("lemma2", Congruence, N, "odd n >= 1",
        "sum_{k=1}^{(n-1)/2} [3k]/[2k]^2 binom(2k,k) q^{-C(k,2)} == 0  (mod Phi_n)"),
    suite!("lemma3_full", Congruence, N, "odd n >= 3",
        "(q;q^2)_n (q^{2k+1};q^2)_{n-1}^2 / (q;q)_{n-1}^3 == 0  (mod [n] Phi_n^2), for 0 <= k <= n"),
    suite!("lemma3_half", Congruence, N, "odd n >= 3",
        "(q;q^2)_{(n+1)/2} (q^{2k+1};q^2)_{(n-1)/2}^2 / (q;q)_{(n-1)/2}^3 == 0  (mod [n] Phi_n^2), for 0 <= k <= (n-1)/2"),
    suite!("lemma4", Congruence, N, "odd n >= 3",
        "[n] binom(2n-2k,n-1) (q;q^2)_n (q;q^2)_{n-k} / ((q;q)_n (q^2;q^2)_{n-k}) == 0  (mod [n] Phi_n^2), for 1 <= k <= (n-1)/2"),
    suite!("lemma5", Congruence, N, "n >= 1 (undefined at even n: the k = n/2 summand has a pole)",
        "sum_{k=1}^{n-1} q^k/[2k]^2 == (n^2-1)(1-q)^2/24  (mod Phi_n)"),
    suite!("lemma5_unscaled", Congruence, N, "n >= 1 (undefined at even n: the k = n/2 summand has a pole)",
        "sum_{k=1}^{n-1} q^k/(1-q^{2k})^2 == (n^2-1)/24  (mod Phi_n)"),
    suite!("reduce3", Congruence, N, "odd m >= 3",
        "q^m sum_{n=1}^{(m-1)/2} [3n] (q;q^2)_n (q^m;q^2)_n^2 q^{-C(n+1,2)-(2n+1)(m-1)/2} / ((q;q)_n^2 (q^2;q^2)_n) == 0  (mod [m] Phi_m^2)"),
    suite!("reduce", Congruence, N, "odd m >= 3",
        "sum_{n=1}^{(m-1)/2} [3n] (1-q)^2 (q;q^2)_n (q^{m+2};q^2)_{n-1}^2 q^{m-C(n+1,2)-(2n+1)(m-1)/2} / ((q;q)_n^2 (q^2;q^2)_n) == 0  (mod Phi_m)"),
    suite!("conj3", Conjecture, N, "odd n >= 1",
        "sum_{k=0}^{n-1} [3k+1] (q;q^2)_k^3 q^{-C(k+1,2)} / ((q;q)_k^2 (q^2;q^2)_k) == [n] q^{(1-n)/2} + (n^2-1)(1-q)^2/24 [n]^3 q^{(1-n)/2}  (mod [n] Phi_n^3)"),
    suite!("conj4", Conjecture, N, "n == 1 (mod 4), n >= 5",
        "sum_{k=0}^{(n-1)/2} [4k+1] (q;q^2)_k^3/(q^2;q^2)_k^3 q^{k(n^2-2nk-n-2)/4} == 0  (mod Phi_n^2)"),
    suite!("extra7", Conjecture, N, "odd n >= 1",
        "sum_{k=1}^{n-1} (-1)^k [n+3k] (-q^{n+1};q)_{k-1}/[2k] binom(2k,k) == (1+q^n)(q^{C(n,2)} - (-q;q)_{n-1})  (mod Phi_n^2)"),
    // --- q = 1 statements (exact rational / integer arithmetic) ---
    suite!("div1", Congruence, Prime, "prime p > 2",
        "sum_{k=0}^{(p-1)/2} (3k+1) binom(2k,k)^3/16^k == p  (mod p^3)"),
    suite!("div2", Congruence, Prime, "prime p > 3",
        "sum_{k=0}^{(p-1)/2} (10k^2+6k+1) binom(2k,k)^5/256^k == p^2  (mod p^5)"),
    suite!("div3", Congruence, Prime, "prime p > 2",
        "sum_{k=0}^{(p-1)/2} (3k+1)(-1)^k binom(2k,k)^3/8^k == p (-1)^{(p-1)/2}  (mod p^3)"),
    suite!("div_gen_r1", Congruence, PrimePower, "prime p > 2, r >= 1",
        "sum_{k=0}^{(p^r-1)/2} (3k+1) binom(2k,k)^3/16^k == p^r  (mod p^{r+2})"),
    suite!("div_gen_r2", Congruence, PrimePower, "prime p > 2, r >= 1",
        "sum_{k=0}^{p^r-1} (3k+1) binom(2k,k)^3/16^k == p^r  (mod p^{r+2})"),
    suite!("div3_pr", Congruence, PrimePower, "prime p > 2, r >= 1",
        "sum_{k=0}^{(p^r-1)/2} (3k+1)(-1)^k binom(2k,k)^3/8^k == p^r (-1)^{(p-1)/2}  (mod p^{r+2})"),
    suite!("sun_hu", Conjecture, PrimePower, "prime p > 3, r >= 1",
        "sum_{k=0}^{p^r-1} (3k+1) binom(2k,k)^3/16^k == p^r  (mod p^{r+3})"),
    suite!("sun1", Congruence, N, "n >= 1 (n = 0 breaks: sum 1 vs modulus 4)",
        "sum_{k=0}^{n} (3k+1) binom(2k,k)^3 16^{n-k} == 0  (mod 4(2n+1) binom(2n,n))"),
    suite!("sun2", Congruence, N, "n >= 1 (n = 0 breaks: sum 1 vs modulus 4)",
        "sum_{k=0}^{n} (3k+1) binom(2k,k)^3 (-8)^{n-k} == 0  (mod 4(2n+1) binom(2n,n))"),
    suite!("st", Congruence, Prime, "prime p > 3",
        "sum_{k=1}^{p-1} binom(2k,k)/k == 0  (mod p^2)"),
    suite!("mao_sun", Identity, N, "n >= 0",
        "sum_{k=0}^{n} binom(n,k)^2 binom(x+k,2n+1) == (1/((4n+2) binom(2n,n))) sum_{k=0}^{n} (2x-3k) binom(x,k)^2 binom(2k,k), as polynomials in x"),
    suite!("conj5a", Conjecture, PrimePower, "odd prime p, r >= 1",
        "half 16-sum at p^r == p * half 16-sum at p^{r-1}  (mod p^{3r})"),
    suite!("conj5b", Conjecture, PrimePower, "odd prime p, r >= 1",
        "full 16-sum at p^r == p * full 16-sum at p^{r-1}  (mod p^{4r-delta_{p,3}})"),
    suite!("conj5c", Conjecture, PrimePower, "odd prime p, r >= 1",
        "signed half 8-sum at p^r == p (-1)^{(p-1)/2} * half 16-sum at p^{r-1}  (mod p^{3r+delta_{p,3}})"),
    suite!("conj5d", Conjecture, PrimePower, "odd prime p, r >= 1",
        "signed full 8-sum at p^r == p (-1)^{(p-1)/2} * full 16-sum at p^{r-1}  (mod p^{3r})"),
    suite!("swisher_j3", Conjecture, PrimePower, "prime p > 3, r >= 1",
        "sum_{k=0}^{(p^r-1)/2} (6k+1) binom(2k,k)^3/256^k == (-1)^{(p-1)/2} p * same sum at p^{r-1}  (mod p^{4r})"),
];

/// Every registered suite, in source order.
pub fn catalog() -> &'static [SuiteInfo] {
    CATALOG
}

pub fn find(id: &str) -> Result<&'static SuiteInfo> {
    CATALOG
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownSuite(id.to_string()))
}

/// Whether `n` (or the prime p) is admissible for a suite.
pub fn admissible(id: &str, n: u64) -> Result<bool> {
    let info = find(id)?;
    Ok(match info.id {
        "thm1_half" | "thm1_full" | "thm2" | "conj1" | "conj1_weak" | "thm4" | "lemma2"
        | "conj3" | "extra7" => n % 2 == 1,
        "thm3" | "conj2" | "q_staver" | "staver_symmetry" => n >= 1,
        "q_hamme" => n > 2 && padic::is_prime(n),
        "lemma3_full" | "lemma3_half" | "lemma4" | "reduce3" | "reduce" => n % 2 == 1 && n >= 3,
        "lemma5" | "lemma5_unscaled" => n >= 1,
        "conj4" => n % 4 == 1 && n >= 5,
        "sun1" | "sun2" => n >= 1,
        "mao_sun" => true,
        "div1" | "div3" | "div_gen_r1" | "div_gen_r2" | "div3_pr" | "conj5a" | "conj5b"
        | "conj5c" | "conj5d" => padic::is_prime(n) && n > 2,
        "div2" | "st" | "sun_hu" | "swisher_j3" => padic::is_prime(n) && n > 3,
        _ => unreachable!("catalog covers all ids"),
    })
}

/// Result of verifying one suite at one parameter point.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub id: &'static str,
    pub kind: SuiteKind,
    /// n for N-suites, p for prime suites.
    pub n: u64,
    /// r for prime-power suites, 1 otherwise.
    pub r: u32,
    pub verdict: Verdict,
    pub detail: OutcomeDetail,
    pub elapsed: Duration,
}

/// Evidence attached to an outcome.
#[derive(Debug, Clone)]
pub enum OutcomeDetail {
    /// Exact equality of normalized rational functions (or polynomials).
    Identity,
    Congruence(CongruenceReport),
    /// One report per inner index k.
    Family(Vec<(u64, CongruenceReport)>),
    Valuation(padic::PadicVerdict),
    IntegerDivisibility(padic::DivisibilityVerdict),
}

impl SuiteOutcome {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    fn identity(id: &'static str, n: u64, equal: bool, start: Instant) -> Self {
        SuiteOutcome {
            id,
            kind: find(id).unwrap().kind,
            n,
            r: 1,
            verdict: if equal { Verdict::Holds } else { Verdict::Fails },
            detail: OutcomeDetail::Identity,
            elapsed: start.elapsed(),
        }
    }

    fn congruence(id: &'static str, n: u64, report: CongruenceReport, start: Instant) -> Self {
        SuiteOutcome {
            id,
            kind: find(id).unwrap().kind,
            n,
            r: 1,
            verdict: report.verdict,
            detail: OutcomeDetail::Congruence(report),
            elapsed: start.elapsed(),
        }
    }

    fn family(
        id: &'static str,
        n: u64,
        reports: Vec<(u64, CongruenceReport)>,
        start: Instant,
    ) -> Self {
        let verdict = if reports.iter().any(|(_, r)| r.verdict == Verdict::Fails) {
            Verdict::Fails
        } else if reports.iter().any(|(_, r)| r.verdict == Verdict::NotApplicable) {
            Verdict::NotApplicable
        } else {
            Verdict::Holds
        };
        SuiteOutcome {
            id,
            kind: find(id).unwrap().kind,
            n,
            r: 1,
            verdict,
            detail: OutcomeDetail::Family(reports),
            elapsed: start.elapsed(),
        }
    }

    fn valuation(id: &'static str, p: u64, r: u32, v: padic::PadicVerdict, start: Instant) -> Self {
        SuiteOutcome {
            id,
            kind: find(id).unwrap().kind,
            n: p,
            r,
            verdict: if v.holds { Verdict::Holds } else { Verdict::Fails },
            detail: OutcomeDetail::Valuation(v),
            elapsed: start.elapsed(),
        }
    }
}

// --- summand builders -------------------------------------------------------

fn rf(p: IntPoly) -> RationalFn {
    RationalFn::from_poly(p)
}

fn qint(n: u64) -> RationalFn {
    rf(q_int(n))
}

fn poch(spec: QPochSpec) -> RationalFn {
    rf(q_pochhammer(&spec))
}

fn binom(m: i64, n: i64) -> RationalFn {
    rf(q_binomial(m, n, 1))
}

/// `Π_{j=k+1}^{n} (1 + q^j)`, the quotient `(−q;q)_n / (−q;q)_k` expanded
/// as a polynomial.
fn neg_poch_ratio(n: u64, k: u64) -> IntPoly {
    let mut acc = IntPoly::one();
    for j in k + 1..=n {
        acc = &acc * &(&IntPoly::one() + &IntPoly::q_pow(j as usize));
    }
    acc
}

/// `[3k+1] (q;q²)_k³ q^{−C(k+1,2)} / ((q;q)_k² (q²;q²)_k)`.
pub fn thm1_summand(k: u64) -> RationalFn {
    let k_i = k as i64;
    let numer = &qint(3 * k + 1) * &poch(QPochSpec::odd(k)).pow(3).unwrap();
    let numer = &numer * &RationalFn::q_pow(-choose2(k_i + 1));
    let den = &poch(QPochSpec::q_by_q(k)).pow(2).unwrap() * &poch(QPochSpec::q2_by_q2(k));
    numer.div(&den).expect("nonzero q-factorials")
}

/// `(−1)^k [3k+1] (q;q²)_k³ / (q;q)_k³`.
pub fn thm2_summand(k: u64) -> RationalFn {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let numer =
        &(&qint(3 * k + 1) * &RationalFn::from_int(sign)) * &poch(QPochSpec::odd(k)).pow(3).unwrap();
    numer
        .div(&poch(QPochSpec::q_by_q(k)).pow(3).unwrap())
        .expect("nonzero q-factorials")
}

/// `(−1)^k [3k+1] binom(2k,k)³ (−q;q)_n³/(−q;q)_k³` (a polynomial).
pub fn thm3_summand(n: u64, k: u64) -> RationalFn {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let ratio = rf(neg_poch_ratio(n, k));
    let b = binom(2 * k as i64, k as i64);
    &(&(&qint(3 * k + 1) * &RationalFn::from_int(sign)) * &b.pow(3).unwrap()) * &ratio.pow(3).unwrap()
}

/// `[3k+1] binom(2k,k)³ (−q;q)_n⁴/(−q;q)_k⁴ q^{−C(k+1,2)}`.
pub fn conj2_summand(n: u64, k: u64) -> RationalFn {
    let ratio = rf(neg_poch_ratio(n, k));
    let b = binom(2 * k as i64, k as i64);
    &(&(&qint(3 * k + 1) * &b.pow(3).unwrap()) * &ratio.pow(4).unwrap())
        * &RationalFn::q_pow(-choose2(k as i64 + 1))
}

/// `[3k]/[2k]² binom(2k,k) q^{−C(k,2)}` (k ≥ 1).
pub fn staver_summand(k: u64) -> RationalFn {
    let k_i = k as i64;
    let numer = &(&qint(3 * k) * &binom(2 * k_i, k_i)) * &RationalFn::q_pow(-choose2(k_i));
    numer.div(&qint(2 * k).pow(2).unwrap()).expect("k >= 1")
}

/// `Σ_{k=1}^{upper} [3k]/[2k]² binom(2k,k) q^{−C(k,2)}`.
pub fn staver_sum(upper: u64) -> RationalFn {
    let mut acc = RationalFn::zero();
    for k in 1..=upper {
        acc = &acc + &staver_summand(k);
    }
    acc
}

/// `(−1)^k q^{k²} [4k+1] (q;q²)_k³/(q²;q²)_k³`.
pub fn hamme_summand(k: u64) -> RationalFn {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let numer = &(&(&qint(4 * k + 1) * &RationalFn::from_int(sign))
        * &RationalFn::q_pow((k * k) as i64))
        * &poch(QPochSpec::odd(k)).pow(3).unwrap();
    numer
        .div(&poch(QPochSpec::q2_by_q2(k)).pow(3).unwrap())
        .expect("nonzero q-factorials")
}

/// `[4k+1] (q;q²)_k³/(q²;q²)_k³ q^{k(n²−2nk−n−2)/4}`; errors if the
/// exponent is not an integer.
pub fn conj4_summand(n: u64, k: u64) -> Result<RationalFn> {
    let (n_i, k_i) = (n as i64, k as i64);
    let num_exp = k_i * (n_i * n_i - 2 * n_i * k_i - n_i - 2);
    if num_exp.rem_euclid(4) != 0 {
        return Err(Error::FractionalExponent {
            num: num_exp,
            den: 4,
        });
    }
    let numer =
        &(&qint(4 * k + 1) * &RationalFn::q_pow(num_exp / 4)) * &poch(QPochSpec::odd(k)).pow(3).unwrap();
    Ok(numer
        .div(&poch(QPochSpec::q2_by_q2(k)).pow(3).unwrap())
        .expect("nonzero q-factorials"))
}

/// `(−1)^k [n+3k] (−q^{n+1};q)_{k−1} binom(2k,k) / [2k]` (k ≥ 1).
pub fn extra7_summand(n: u64, k: u64) -> RationalFn {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let numer = &(&(&qint(n + 3 * k) * &RationalFn::from_int(sign))
        * &poch(QPochSpec::neg_shifted(n + 1, k - 1)))
        * &binom(2 * k as i64, k as i64);
    numer.div(&qint(2 * k)).expect("k >= 1")
}

/// `q^k / [2k]²`.
fn lemma5_summand(k: u64) -> RationalFn {
    RationalFn::q_pow(k as i64)
        .div(&qint(2 * k).pow(2).unwrap())
        .expect("k >= 1")
}

/// `q^k / (1−q^{2k})²`.
fn lemma5_unscaled_summand(k: u64) -> RationalFn {
    let one_minus = &RationalFn::one() - &RationalFn::q_pow(2 * k as i64);
    RationalFn::q_pow(k as i64)
        .div(&one_minus.pow(2).unwrap())
        .expect("k >= 1")
}

/// Product side of the q-Staver identity:
/// `[n+1] binom(2n+1,n) Σ_{k=1}^{n} q^{−C(n−2k+1,2)} / ([2k]² binom(n,k)_{q²}²)`.
pub fn q_staver_rhs(n: u64) -> RationalFn {
    let n_i = n as i64;
    let mut sum = RationalFn::zero();
    for k in 1..=n {
        let k_i = k as i64;
        let numer = RationalFn::q_pow(-choose2(n_i - 2 * k_i + 1));
        let binom_sq = rf(q_binomial(n_i, k_i, 2)).pow(2).unwrap();
        let den = &qint(2 * k).pow(2).unwrap() * &binom_sq;
        sum = &sum + &numer.div(&den).expect("k <= n");
    }
    &(&qint(n + 1) * &binom(2 * n_i + 1, n_i)) * &sum
}

/// Builds the left-hand sum of an N-parameterized q-suite.
pub fn build_sum(id: &str, n: u64) -> Result<RationalFn> {
    let info = find(id)?;
    if !admissible(id, n)? {
        return Err(Error::InadmissibleN {
            suite: id.to_string(),
            n,
            requires: info.admissible_desc.to_string(),
        });
    }
    let sum_over = |from: u64, upper: u64, term: &dyn Fn(u64) -> RationalFn| -> RationalFn {
        let mut acc = RationalFn::zero();
        for k in from..=upper {
            acc = &acc + &term(k);
        }
        acc
    };
    Ok(match id {
        "thm1_half" => sum_over(0, (n - 1) / 2, &thm1_summand),
        "thm1_full" | "conj3" => sum_over(0, n - 1, &thm1_summand),
        "thm2" => sum_over(0, n - 1, &thm2_summand),
        "conj1" | "conj1_weak" => sum_over(0, (n - 1) / 2, &thm2_summand),
        "thm3" => sum_over(0, n, &|k| thm3_summand(n, k)),
        "conj2" => sum_over(0, n, &|k| conj2_summand(n, k)),
        "thm4" => staver_sum(n - 1),
        "q_staver" => staver_sum(n),
        "staver_symmetry" => staver_antisymmetric_sum(n),
        "lemma2" => staver_sum((n - 1) / 2),
        "q_hamme" => sum_over(0, (n - 1) / 2, &hamme_summand),
        "conj4" => {
            let mut acc = RationalFn::zero();
            for k in 0..=(n - 1) / 2 {
                acc = &acc + &conj4_summand(n, k)?;
            }
            acc
        }
        "extra7" => sum_over(1, n - 1, &|k| extra7_summand(n, k)),
        "lemma5" => sum_over(1, n - 1, &lemma5_summand),
        "lemma5_unscaled" => sum_over(1, n - 1, &lemma5_unscaled_summand),
        "reduce3" => reduce3_sum(n),
        "reduce" => reduce_sum(n),
        _ => {
            return Err(Error::Precondition(format!(
                "suite `{id}` has no q-side sum builder"
            )))
        }
    })
}

/// `q^m Σ_{n=1}^{(m−1)/2} [3n] (q;q²)_n (q^m;q²)_n² q^{−C(n+1,2)−(2n+1)(m−1)/2}
/// / ((q;q)_n² (q²;q²)_n)`.
fn reduce3_sum(m: u64) -> RationalFn {
    let m_i = m as i64;
    let shift_k = (m - 1) / 2; // q^m = q^{2k+1} with k = (m−1)/2
    let mut acc = RationalFn::zero();
    for n in 1..=(m - 1) / 2 {
        let n_i = n as i64;
        let numer = &(&qint(3 * n) * &poch(QPochSpec::odd(n)))
            * &poch(QPochSpec::odd_shifted(shift_k, n)).pow(2).unwrap();
        let numer =
            &numer * &RationalFn::q_pow(-choose2(n_i + 1) - (2 * n_i + 1) * (m_i - 1) / 2);
        let den = &poch(QPochSpec::q_by_q(n)).pow(2).unwrap() * &poch(QPochSpec::q2_by_q2(n));
        acc = &acc + &numer.div(&den).expect("nonzero q-factorials");
    }
    &acc * &RationalFn::q_pow(m_i)
}

/// `Σ_{n=1}^{(m−1)/2} [3n] (1−q)² (q;q²)_n (q^{m+2};q²)_{n−1}²
/// q^{m−C(n+1,2)−(2n+1)(m−1)/2} / ((q;q)_n² (q²;q²)_n)`.
fn reduce_sum(m: u64) -> RationalFn {
    let m_i = m as i64;
    let shift_k = (m + 1) / 2; // q^{m+2} = q^{2k+1} with k = (m+1)/2
    let one_minus_q = &IntPoly::one() - &IntPoly::q_pow(1);
    let one_minus_q_sq = &one_minus_q * &one_minus_q;
    let mut acc = RationalFn::zero();
    for n in 1..=(m - 1) / 2 {
        let n_i = n as i64;
        let numer = &(&qint(3 * n) * &poch(QPochSpec::odd(n)))
            * &poch(QPochSpec::odd_shifted(shift_k, n - 1)).pow(2).unwrap();
        let numer = numer.mul_poly(&one_minus_q_sq);
        let numer =
            &numer * &RationalFn::q_pow(m_i - choose2(n_i + 1) - (2 * n_i + 1) * (m_i - 1) / 2);
        let den = &poch(QPochSpec::q_by_q(n)).pow(2).unwrap() * &poch(QPochSpec::q2_by_q2(n));
        acc = &acc + &numer.div(&den).expect("nonzero q-factorials");
    }
    acc
}

/// Right-hand side of an N-parameterized congruence suite.
pub fn build_rhs(id: &str, n: u64) -> Result<RationalFn> {
    let n_i = n as i64;
    let one_minus_q = &RationalFn::one() - &RationalFn::q_pow(1);
    Ok(match id {
        "thm1_half" | "thm1_full" => &qint(n) * &RationalFn::q_pow((1 - n_i) / 2),
        "thm2" | "conj1" => {
            let sign = if (n - 1) / 2 % 2 == 0 { 1 } else { -1 };
            let e = ((n_i - 1) * (n_i - 1)) / 4;
            &(&qint(n) * &RationalFn::from_int(sign)) * &RationalFn::q_pow(e)
        }
        "conj1_weak" | "thm3" | "conj2" | "lemma2" | "conj4" | "reduce3" | "reduce" => {
            RationalFn::zero()
        }
        "thm4" => {
            let scale = RationalFn::from_ratio(n_i * n_i - 1, 24).expect("24 != 0");
            &(&scale * &one_minus_q.pow(2).unwrap()) * &qint(n)
        }
        "q_hamme" => {
            let sign = if (n - 1) / 2 % 2 == 0 { 1 } else { -1 };
            let e = ((n_i - 1) * (n_i - 1)) / 4;
            &(&qint(n) * &RationalFn::from_int(sign)) * &RationalFn::q_pow(e)
        }
        "lemma5" => {
            let scale = RationalFn::from_ratio(n_i * n_i - 1, 24).expect("24 != 0");
            &scale * &one_minus_q.pow(2).unwrap()
        }
        "lemma5_unscaled" => RationalFn::from_ratio(n_i * n_i - 1, 24).expect("24 != 0"),
        "conj3" => {
            let base = &qint(n) * &RationalFn::q_pow((1 - n_i) / 2);
            let scale = RationalFn::from_ratio(n_i * n_i - 1, 24).expect("24 != 0");
            let cubic = &(&scale * &one_minus_q.pow(2).unwrap()) * &qint(n).pow(3).unwrap();
            &base + &(&cubic * &RationalFn::q_pow((1 - n_i) / 2))
        }
        "extra7" => {
            let one_plus = &RationalFn::one() + &RationalFn::q_pow(n_i);
            let diff = &RationalFn::q_pow(choose2(n_i)) - &poch(QPochSpec::neg_q(n - 1));
            &one_plus * &diff
        }
        _ => {
            return Err(Error::Precondition(format!(
                "suite `{id}` has no q-side right-hand side"
            )))
        }
    })
}

/// Modulus polynomial of an N-parameterized congruence suite.
pub fn build_modulus(id: &str, n: u64) -> Result<IntPoly> {
    let phi = cyclotomic(n);
    Ok(match id {
        "thm1_half" | "thm1_full" | "thm2" | "conj1" | "lemma3_full" | "lemma3_half" | "lemma4"
        | "reduce3" => &(&q_int(n) * &phi) * &phi,
        "conj1_weak" | "lemma2" | "lemma5" | "lemma5_unscaled" | "reduce" => phi,
        "thm3" | "conj2" => he_suite_modulus(n),
        "thm4" | "conj4" | "extra7" => &phi * &phi,
        "q_hamme" => {
            let p = q_int(n);
            &(&p * &p) * &p
        }
        "conj3" => &(&(&q_int(n) * &phi) * &phi) * &phi,
        _ => {
            return Err(Error::Precondition(format!(
                "suite `{id}` has no polynomial modulus"
            )))
        }
    })
}

/// Which displayed form of the auxiliary factorial-quotient lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma3Form {
    /// `(q;q²)_n (q^{2k+1};q²)_{n−1}² / (q;q)_{n−1}³`, any k ≥ 0
    Full,
    /// `(q;q²)_{(n+1)/2} (q^{2k+1};q²)_{(n−1)/2}² / (q;q)_{(n−1)/2}³`, k ≤ (n−1)/2
    Half,
}

/// Divisibility of the factorial quotient by `[n]Φ_n²` at one (n, k).
pub fn verify_lemma3(form: Lemma3Form, n: u64, k: u64) -> Result<CongruenceReport> {
    if n % 2 == 0 || n < 3 {
        return Err(Error::Precondition("lemma3 needs odd n >= 3".into()));
    }
    if form == Lemma3Form::Half && k > (n - 1) / 2 {
        return Err(Error::Precondition(format!(
            "half form needs k <= (n-1)/2 = {}, got {k}",
            (n - 1) / 2
        )));
    }
    let (len_top, len_mid) = match form {
        Lemma3Form::Full => (n, n - 1),
        Lemma3Form::Half => ((n + 1) / 2, (n - 1) / 2),
    };
    let numer =
        &poch(QPochSpec::odd(len_top)) * &poch(QPochSpec::odd_shifted(k, len_mid)).pow(2).unwrap();
    let den = poch(QPochSpec::q_by_q(len_mid)).pow(3).unwrap();
    let value = numer.div(&den).expect("nonzero q-factorials");
    congruent_mod(&value, &RationalFn::zero(), &build_modulus("lemma3_full", n)?)
}

/// Divisibility of `[n]·binom(2n−2k,n−1)·(q;q²)_n (q;q²)_{n−k} /
/// ((q;q)_n (q²;q²)_{n−k})` by `[n]Φ_n²`, for odd n and 1 ≤ k ≤ (n−1)/2.
pub fn verify_lemma4(n: u64, k: u64) -> Result<CongruenceReport> {
    if n % 2 == 0 || n < 3 {
        return Err(Error::Precondition("lemma4 needs odd n >= 3".into()));
    }
    if !(1..=(n - 1) / 2).contains(&k) {
        return Err(Error::Precondition(format!(
            "lemma4 needs 1 <= k <= (n-1)/2 = {}, got {k}",
            (n - 1) / 2
        )));
    }
    let numer = &(&qint(n) * &binom(2 * (n - k) as i64, n as i64 - 1))
        * &(&poch(QPochSpec::odd(n)) * &poch(QPochSpec::odd(n - k)));
    let den = &poch(QPochSpec::q_by_q(n)) * &poch(QPochSpec::q2_by_q2(n - k));
    let value = numer.div(&den).expect("nonzero q-factorials");
    congruent_mod(&value, &RationalFn::zero(), &build_modulus("lemma4", n)?)
}

/// Verifies a suite at one N-parameter point.
pub fn verify(id: &str, n: u64) -> Result<SuiteOutcome> {
    let info = find(id)?;
    if info.params != ParamKind::N {
        return verify_prime(id, n, 1);
    }
    if !admissible(id, n)? {
        return Err(Error::InadmissibleN {
            suite: id.to_string(),
            n,
            requires: info.admissible_desc.to_string(),
        });
    }
    let start = Instant::now();
    CyclotomicCache::warm(2 * n + 2);
    Ok(match id {
        "q_staver" => {
            let equal = build_sum("q_staver", n)? == q_staver_rhs(n);
            SuiteOutcome::identity(info.id, n, equal, start)
        }
        "staver_symmetry" => {
            let equal = staver_antisymmetric_sum(n).is_zero();
            SuiteOutcome::identity(info.id, n, equal, start)
        }
        "mao_sun" => {
            let equal = padic::check_mao_sun_identity(n);
            SuiteOutcome::identity(info.id, n, equal, start)
        }
        "sun1" | "sun2" => {
            let which = if id == "sun1" {
                padic::SunBinomialId::Sun1
            } else {
                padic::SunBinomialId::Sun2
            };
            let v = padic::check_sun_binomial(which, n);
            SuiteOutcome {
                id: info.id,
                kind: info.kind,
                n,
                r: 1,
                verdict: if v.holds { Verdict::Holds } else { Verdict::Fails },
                detail: OutcomeDetail::IntegerDivisibility(v),
                elapsed: start.elapsed(),
            }
        }
        "lemma3_full" => {
            let mut reports = Vec::new();
            for k in 0..=n {
                reports.push((k, verify_lemma3(Lemma3Form::Full, n, k)?));
            }
            SuiteOutcome::family(info.id, n, reports, start)
        }
        "lemma3_half" => {
            let mut reports = Vec::new();
            for k in 0..=(n - 1) / 2 {
                reports.push((k, verify_lemma3(Lemma3Form::Half, n, k)?));
            }
            SuiteOutcome::family(info.id, n, reports, start)
        }
        "lemma4" => {
            let mut reports = Vec::new();
            for k in 1..=(n - 1) / 2 {
                reports.push((k, verify_lemma4(n, k)?));
            }
            SuiteOutcome::family(info.id, n, reports, start)
        }
        _ => {
            let lhs = build_sum(id, n)?;
            let rhs = build_rhs(id, n)?;
            let modulus = build_modulus(id, n)?;
            let report = congruent_mod(&lhs, &rhs, &modulus)?;
            SuiteOutcome::congruence(info.id, n, report, start)
        }
    })
}

/// Verifies a prime- or prime-power-parameterized suite.
pub fn verify_prime(id: &str, p: u64, r: u32) -> Result<SuiteOutcome> {
    let info = find(id)?;
    let start = Instant::now();
    match info.params {
        ParamKind::N => verify(id, p),
        ParamKind::Prime | ParamKind::PrimePower => {
            if info.id == "q_hamme" {
                return verify_q_suite_at_prime(info, p, start);
            }
            if info.id == "st" {
                let v = padic::check_sun_tauraso(p)?;
                return Ok(SuiteOutcome::valuation(info.id, p, 1, v, start));
            }
            let v = match info.id {
                "div1" => padic::check_divergent(padic::DivergentId::Div1, p, r)?,
                "div2" => padic::check_divergent(padic::DivergentId::Div2, p, r)?,
                "div3" => padic::check_divergent(padic::DivergentId::Div3, p, r)?,
                "div_gen_r1" => padic::check_divergent(padic::DivergentId::DivGenR1, p, r)?,
                "div_gen_r2" => padic::check_divergent(padic::DivergentId::DivGenR2, p, r)?,
                "div3_pr" => padic::check_divergent(padic::DivergentId::Div3Pr, p, r)?,
                "sun_hu" => padic::check_divergent(padic::DivergentId::SunHu, p, r)?,
                "conj5a" => padic::check_lift_conjectures(padic::LiftId::Conj5a, p, r)?,
                "conj5b" => padic::check_lift_conjectures(padic::LiftId::Conj5b, p, r)?,
                "conj5c" => padic::check_lift_conjectures(padic::LiftId::Conj5c, p, r)?,
                "conj5d" => padic::check_lift_conjectures(padic::LiftId::Conj5d, p, r)?,
                "swisher_j3" => padic::check_lift_conjectures(padic::LiftId::SwisherJ3, p, r)?,
                other => {
                    return Err(Error::Precondition(format!(
                        "suite `{other}` is not prime-parameterized"
                    )))
                }
            };
            Ok(SuiteOutcome::valuation(info.id, p, r, v, start))
        }
    }
}

fn verify_q_suite_at_prime(info: &SuiteInfo, p: u64, start: Instant) -> Result<SuiteOutcome> {
    if !admissible(info.id, p)? {
        return Err(Error::InadmissibleN {
            suite: info.id.to_string(),
            n: p,
            requires: info.admissible_desc.to_string(),
        });
    }
    CyclotomicCache::warm(p + 1);
    let lhs = build_sum(info.id, p)?;
    let rhs = build_rhs(info.id, p)?;
    let modulus = build_modulus(info.id, p)?;
    let report = congruent_mod(&lhs, &rhs, &modulus)?;
    Ok(SuiteOutcome::congruence(info.id, p, report, start))
}

/// Runs `verify` over the admissible members of a point set, in parallel.
/// Inadmissible points are skipped; results come back sorted by n.
pub fn scan(id: &str, points: &[u64]) -> Result<Vec<SuiteOutcome>> {
    find(id)?;
    let admitted: Vec<u64> = points
        .iter()
        .copied()
        .filter(|&n| admissible(id, n).unwrap_or(false))
        .collect();
    if let Some(&max) = admitted.iter().max() {
        CyclotomicCache::warm(2 * max + 2);
    }
    let mut outcomes = admitted
        .par_iter()
        .map(|&n| verify(id, n))
        .collect::<Result<Vec<_>>>()?;
    outcomes.sort_by_key(|o| (o.n, o.r));
    Ok(outcomes)
}

/// Runs a prime-parameterized suite over (p, r) pairs, in parallel.
pub fn scan_primes(id: &str, points: &[(u64, u32)]) -> Result<Vec<SuiteOutcome>> {
    find(id)?;
    let admitted: Vec<(u64, u32)> = points
        .iter()
        .copied()
        .filter(|&(p, _)| admissible(id, p).unwrap_or(false))
        .collect();
    if let Some(&(pmax, _)) = admitted.iter().max_by_key(|&&(p, _)| p) {
        CyclotomicCache::warm(pmax + 1);
    }
    let mut outcomes = admitted
        .par_iter()
        .map(|&(p, r)| verify_prime(id, p, r))
        .collect::<Result<Vec<_>>>()?;
    outcomes.sort_by_key(|o| (o.n, o.r));
    Ok(outcomes)
}

// --- auxiliary congruences used by the proofs, exposed for the test suites --

/// `binom(2m−1, m−1) ≡ (−1)^{m−1} q^{C(m,2)} (mod Φ_m²)` for odd m.
pub fn central_binom_phi2_congruence(m: u64) -> Result<CongruenceReport> {
    let m_i = m as i64;
    let lhs = binom(2 * m_i - 1, m_i - 1);
    let sign = if (m - 1) % 2 == 0 { 1 } else { -1 };
    let rhs = &RationalFn::from_int(sign) * &RationalFn::q_pow(choose2(m_i));
    let phi = cyclotomic(m);
    congruent_mod(&lhs, &rhs, &(&phi * &phi))
}

/// `binom(m−1, (m−1)/2)_{q²} ≡ (−1)^{(m−1)/2} q^{(1−m²)/4} (−q;q)_{m−1}²
/// (mod Φ_m²)` for odd m.
pub fn half_binom_phi2_congruence(m: u64) -> Result<CongruenceReport> {
    let m_i = m as i64;
    let lhs = rf(q_binomial(m_i - 1, (m_i - 1) / 2, 2));
    let sign = if (m - 1) / 2 % 2 == 0 { 1 } else { -1 };
    let rhs = &(&RationalFn::from_int(sign) * &RationalFn::q_pow((1 - m_i * m_i) / 4))
        * &poch(QPochSpec::neg_q(m - 1)).pow(2).unwrap();
    let phi = cyclotomic(m);
    congruent_mod(&lhs, &rhs, &(&phi * &phi))
}

/// `binom(2n−1, n−1) ≡ 1 (mod Φ_n)` for odd n.
pub fn stepping_binom_unit(n: u64) -> Result<CongruenceReport> {
    let n_i = n as i64;
    congruent_mod(
        &binom(2 * n_i - 1, n_i - 1),
        &RationalFn::one(),
        &cyclotomic(n),
    )
}

/// `binom(n−1, k)_{q²} ≡ (−1)^k q^{−k²−k} (mod Φ_n)` for odd n, 0 ≤ k ≤ n−1.
pub fn stepping_binom_alternating(n: u64, k: u64) -> Result<CongruenceReport> {
    let (n_i, k_i) = (n as i64, k as i64);
    let lhs = rf(q_binomial(n_i - 1, k_i, 2));
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let rhs = &RationalFn::from_int(sign) * &RationalFn::q_pow(-(k_i * k_i) - k_i);
    congruent_mod(&lhs, &rhs, &cyclotomic(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm1_half_at_3_is_qinv_plus_one_plus_q() {
        // two-term expansion: 1 + (1+q²)/q = (1+q+q²)/q
        let s = build_sum("thm1_half", 3).unwrap();
        let expected = RationalFn::new(
            IntPoly::from_i64_coeffs(&[1, 1, 1]),
            IntPoly::from_i64_coeffs(&[0, 1]),
        )
        .unwrap();
        assert_eq!(s, expected);
        // and it equals the right-hand side exactly at n = 3
        assert_eq!(s, build_rhs("thm1_half", 3).unwrap());
    }

    #[test]
    fn thm2_at_1_is_single_term() {
        assert!(build_sum("thm2", 1).unwrap().is_one());
    }

    #[test]
    fn thm3_at_1_matches_hand_expansion() {
        // (1+q)³(1 − [4]) = −q(1+q)³[3]
        let s = build_sum("thm3", 1).unwrap();
        let one_plus_q = IntPoly::from_i64_coeffs(&[1, 1]);
        let cube = &(&one_plus_q * &one_plus_q) * &one_plus_q;
        let expected = &(&IntPoly::monomial(-1, 1) * &cube) * &q_int(3);
        assert_eq!(s, RationalFn::from_poly(expected));
    }

    #[test]
    fn staver_identity_at_1() {
        // both sides are [3]/[2]
        let lhs = build_sum("q_staver", 1).unwrap();
        let rhs = q_staver_rhs(1);
        let expected = qint(3).div(&qint(2)).unwrap();
        assert_eq!(lhs, expected);
        assert_eq!(rhs, expected);
        assert!(verify("q_staver", 1).unwrap().holds());
    }

    #[test]
    fn thm1_half_holds_at_5() {
        let out = verify("thm1_half", 5).unwrap();
        assert!(out.holds(), "{:?}", out.detail);
    }

    #[test]
    fn thm4_at_3_reduces_to_two_terms() {
        let out = verify("thm4", 3).unwrap();
        assert!(out.holds());
    }

    #[test]
    fn hamme_at_3_holds_mod_cube() {
        let out = verify_prime("q_hamme", 3, 1).unwrap();
        assert!(out.holds());
    }

    #[test]
    fn lemma3_and_lemma4_examples() {
        assert!(verify_lemma3(Lemma3Form::Full, 3, 0).unwrap().holds());
        assert!(verify_lemma3(Lemma3Form::Half, 5, 2).unwrap().holds());
        assert!(verify_lemma3(Lemma3Form::Half, 5, 3).is_err());
        assert!(verify_lemma4(5, 1).unwrap().holds());
        assert!(verify_lemma4(5, 2).unwrap().holds());
        assert!(verify_lemma4(3, 1).unwrap().holds());
        assert!(verify_lemma4(5, 3).is_err());
        assert!(verify_lemma4(4, 1).is_err());
    }

    #[test]
    fn scan_filters_inadmissible_points() {
        let outcomes = scan("thm1_full", &[2, 4]).unwrap();
        assert!(outcomes.is_empty());
        let outcomes = scan("thm4", &(3..=15).collect::<Vec<_>>()).unwrap();
        assert_eq!(outcomes.len(), 7);
        assert!(outcomes.iter().all(SuiteOutcome::holds));
    }

    #[test]
    fn verify_rejects_inadmissible_n() {
        assert!(matches!(verify("thm4", 4), Err(Error::InadmissibleN { .. })));
        assert!(matches!(verify("nope", 3), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn lemma5_even_n_is_not_applicable() {
        let out = verify("lemma5", 2).unwrap();
        assert_eq!(out.verdict, Verdict::NotApplicable);
        let out = verify("lemma5", 3).unwrap();
        assert_eq!(out.verdict, Verdict::Holds);
    }

    #[test]
    fn catalog_ids_are_unique_and_admissibility_is_total() {
        let mut seen = std::collections::HashSet::new();
        for info in catalog() {
            assert!(seen.insert(info.id), "duplicate id {}", info.id);
            let _ = admissible(info.id, 5).unwrap();
        }
    }

    #[test]
    fn padic_ids_dispatch() {
        assert!(verify_prime("div1", 5, 1).unwrap().holds());
        assert!(verify_prime("st", 5, 1).unwrap().holds());
        assert!(verify("sun1", 1).unwrap().holds());
        assert!(verify("mao_sun", 2).unwrap().holds());
        assert!(verify_prime("conj5a", 3, 2).unwrap().holds());
    }

    #[test]
    fn proof_step_congruences_hold_small() {
        for m in [3, 5, 7] {
            assert!(central_binom_phi2_congruence(m).unwrap().holds());
            assert!(half_binom_phi2_congruence(m).unwrap().holds());
            assert!(stepping_binom_unit(m).unwrap().holds());
            for k in 0..m {
                assert!(stepping_binom_alternating(m, k).unwrap().holds());
            }
        }
    }
}
