//! q-combinatorial building blocks: q-integers, q-shifted factorials,
//! Gaussian binomials, cyclotomic polynomials, and cyclotomic valuations.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::cyclo;
use crate::error::{Error, Result};
use crate::ring::{IntPoly, RationalFn};

/// `[n] = 1 + q + … + q^{n−1}`, with `[0] = 0`.
pub fn q_int(n: u64) -> IntPoly {
    IntPoly::from_coeffs(vec![num_bigint::BigInt::from(1); n as usize])
}

/// Sign of the first argument of a q-shifted factorial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Specification of the q-shifted factorial `(±q^a; q^b)_n`:
/// the product `(1 ∓ q^a)(1 ∓ q^{a+b}) ⋯ (1 ∓ q^{a+(n−1)b})`,
/// with the empty product 1 for n = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QPochSpec {
    pub sign: Sign,
    pub shift: u64,
    pub step: u64,
    pub length: u64,
}

impl QPochSpec {
    pub fn new(sign: Sign, shift: u64, step: u64, length: u64) -> Result<Self> {
        if step == 0 {
            return Err(Error::Precondition("q-Pochhammer step must be ≥ 1".into()));
        }
        Ok(QPochSpec {
            sign,
            shift,
            step,
            length,
        })
    }

    /// `(q; q)_n`.
    pub fn q_by_q(n: u64) -> Self {
        QPochSpec {
            sign: Sign::Plus,
            shift: 1,
            step: 1,
            length: n,
        }
    }

    /// `(q²; q²)_n`.
    pub fn q2_by_q2(n: u64) -> Self {
        QPochSpec {
            sign: Sign::Plus,
            shift: 2,
            step: 2,
            length: n,
        }
    }

    /// `(q; q²)_n`.
    pub fn odd(n: u64) -> Self {
        QPochSpec {
            sign: Sign::Plus,
            shift: 1,
            step: 2,
            length: n,
        }
    }

    /// `(q^{2k+1}; q²)_n`.
    pub fn odd_shifted(k: u64, n: u64) -> Self {
        QPochSpec {
            sign: Sign::Plus,
            shift: 2 * k + 1,
            step: 2,
            length: n,
        }
    }

    /// `(−q; q)_n`.
    pub fn neg_q(n: u64) -> Self {
        QPochSpec {
            sign: Sign::Minus,
            shift: 1,
            step: 1,
            length: n,
        }
    }

    /// `(−q^a; q)_n`.
    pub fn neg_shifted(a: u64, n: u64) -> Self {
        QPochSpec {
            sign: Sign::Minus,
            shift: a,
            step: 1,
            length: n,
        }
    }
}

type PochKey = (Sign, u64, u64);

// Prefix products (±q^a; q^b)_0, (±q^a; q^b)_1, … shared across all term
// builders; grid evaluations hit the same few families thousands of times.
static POCH_CACHE: RwLock<Option<HashMap<PochKey, Vec<Arc<IntPoly>>>>> = RwLock::new(None);

/// Expanded q-shifted factorial `(±q^a; q^b)_n`.
pub fn q_pochhammer(spec: &QPochSpec) -> IntPoly {
    (*q_pochhammer_arc(spec)).clone()
}

fn q_pochhammer_arc(spec: &QPochSpec) -> Arc<IntPoly> {
    assert!(spec.step >= 1, "q-Pochhammer step must be ≥ 1");
    let key: PochKey = (spec.sign, spec.shift, spec.step);
    let want = spec.length as usize;
    {
        let cache = POCH_CACHE.read().unwrap();
        if let Some(list) = cache.as_ref().and_then(|m| m.get(&key)) {
            if let Some(p) = list.get(want) {
                return Arc::clone(p);
            }
        }
    }
    let mut cache = POCH_CACHE.write().unwrap();
    let map = cache.get_or_insert_with(HashMap::new);
    let list = map
        .entry(key)
        .or_insert_with(|| vec![Arc::new(IntPoly::one())]);
    while list.len() <= want {
        let i = (list.len() - 1) as u64;
        let exp = (spec.shift + i * spec.step) as usize;
        let factor = match spec.sign {
            Sign::Plus => &IntPoly::one() - &IntPoly::q_pow(exp),
            Sign::Minus => &IntPoly::one() + &IntPoly::q_pow(exp),
        };
        let next = &**list.last().unwrap() * &factor;
        list.push(Arc::new(next));
    }
    Arc::clone(&list[want])
}

/// Gaussian binomial coefficient in base `q^step`:
/// `(x; x)_M / ((x; x)_N (x; x)_{M−N})` with `x = q^step`, and 0 unless
/// `0 ≤ N ≤ M`. Always a polynomial.
pub fn q_binomial(m: i64, n: i64, step: u64) -> IntPoly {
    assert!(step >= 1, "q-binomial step must be ≥ 1");
    if n < 0 || n > m {
        return IntPoly::zero();
    }
    let (m, n) = (m as u64, n as u64);
    let n = n.min(m - n); // symmetry keeps the division small
    let top = q_pochhammer_arc(&QPochSpec {
        sign: Sign::Plus,
        shift: step * (m - n + 1),
        step,
        length: n,
    });
    let bottom = q_pochhammer_arc(&QPochSpec {
        sign: Sign::Plus,
        shift: step,
        step,
        length: n,
    });
    top.divide_exact(&bottom)
        .expect("Gaussian binomials are polynomials")
}

/// Shared cache of cyclotomic polynomials Φ_1, Φ_2, …
///
/// Reads are lock-free aside from a shared read lock; the table only grows.
/// `warm` pre-computes a prefix so that parallel scans never contend on
/// writes.
pub struct CyclotomicCache;

impl CyclotomicCache {
    pub fn get(n: u64) -> IntPoly {
        (*cyclo::phi(n)).clone()
    }

    pub fn warm(n: u64) {
        cyclo::warm(n);
    }

    /// Largest index currently cached.
    pub fn ceiling() -> u64 {
        cyclo::cached_upto()
    }
}

/// The n-th cyclotomic polynomial Φ_n(q), n ≥ 1.
pub fn cyclotomic(n: u64) -> IntPoly {
    CyclotomicCache::get(n)
}

/// `[n]` rebuilt as the product of Φ_t over the divisors t > 1 of n;
/// equals `q_int(n)` for every n ≥ 1.
pub fn radical_qint(n: u64) -> IntPoly {
    assert!(n >= 1);
    let mut acc = IntPoly::one();
    for t in 2..=n {
        if n % t == 0 {
            acc = &acc * &cyclotomic(t);
        }
    }
    acc
}

/// Multiplicity of Φ_n in a nonzero polynomial.
pub fn phi_multiplicity(f: &IntPoly, n: u64) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::OrderOfZero);
    }
    Ok(cyclo::phi_multiplicity(f, n))
}

/// Order of Φ_n in a nonzero rational function: multiplicity in the
/// numerator minus multiplicity in the denominator.
pub fn phi_order(f: &RationalFn, n: u64) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::OrderOfZero);
    }
    let num = cyclo::phi_multiplicity(f.num(), n) as i64;
    let den = cyclo::phi_multiplicity(f.den(), n) as i64;
    Ok(num - den)
}

/// Closed-form exponent of Φ_t in a q-shifted factorial, for odd t > 1.
///
/// Covered shapes and their floor-sum exponents:
///
/// * `(q; q)_m` → ⌊m/t⌋
/// * `(q; q²)_n` → ⌊2n/t⌋ − ⌊n/t⌋
/// * `(q^{2k+1}; q²)_n` → ⌊(2n+2k)/t⌋ + ⌊k/t⌋ − ⌊(n+k)/t⌋ − ⌊2k/t⌋
///
/// Always equal to the multiplicity computed by exact division.
pub fn poch_phi_exponent(spec: &QPochSpec, t: u64) -> Result<i64> {
    if t <= 1 || t % 2 == 0 {
        return Err(Error::BadCyclotomicIndex(t));
    }
    match (spec.sign, spec.step, spec.shift) {
        (Sign::Plus, 1, 1) => Ok((spec.length / t) as i64),
        (Sign::Plus, 2, a) if a % 2 == 1 => {
            let k = (a - 1) / 2;
            let n = spec.length;
            Ok(((2 * n + 2 * k) / t) as i64 + (k / t) as i64
                - ((n + k) / t) as i64
                - ((2 * k) / t) as i64)
        }
        _ => Err(Error::UnsupportedPochShape),
    }
}
