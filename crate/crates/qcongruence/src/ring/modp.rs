//! Polynomial arithmetic modulo a machine-word prime.
//!
//! Used only as a screen: a gcd of degree zero mod p certifies coprimality
//! over the integers, and non-divisibility mod p by a monic divisor
//! certifies non-divisibility over the integers. Every positive answer is
//! re-verified with exact arithmetic by the callers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::poly::IntPoly;

/// 2^61 − 1 (Mersenne) and the largest prime below 2^63.
pub(crate) const SCREEN_PRIMES: [u64; 2] = [2_305_843_009_213_693_951, 9_223_372_036_854_775_783];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Dense polynomial over F_p with a trimmed (nonzero) leading coefficient.
#[derive(Clone, Debug)]
pub(crate) struct PolyMod {
    pub(crate) p: u64,
    coeffs: Vec<u64>,
}

impl PolyMod {
    /// Reduces an integer polynomial mod `p`. Degree can drop if the
    /// leading coefficient vanishes mod `p`; callers that need the degree
    /// preserved must check `deg` against the source.
    pub(crate) fn reduce(f: &IntPoly, p: u64) -> PolyMod {
        let pb = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("reduced below 2^63"))
            .collect();
        let mut out = PolyMod { p, coeffs };
        out.trim();
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// In-place remainder by `d` (nonzero).
    fn rem_assign(&mut self, d: &PolyMod) {
        debug_assert_eq!(self.p, d.p);
        let p = self.p;
        let dd = d.coeffs.len();
        debug_assert!(dd > 0);
        let lead_inv = inv_mod(*d.coeffs.last().unwrap(), p);
        while self.coeffs.len() >= dd {
            let top = *self.coeffs.last().unwrap();
            if top != 0 {
                let c = mul_mod(top, lead_inv, p);
                let off = self.coeffs.len() - dd;
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    let t = mul_mod(c, dc, p);
                    let slot = &mut self.coeffs[off + j];
                    *slot = (*slot + p - t) % p;
                }
            }
            self.coeffs.pop();
            self.trim_top_zeros_once();
        }
        self.trim();
    }

    fn trim_top_zeros_once(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Exact quotient by `d` if `d` divides `self` mod p.
    pub(crate) fn div_exact(&self, d: &PolyMod) -> Option<PolyMod> {
        debug_assert_eq!(self.p, d.p);
        let p = self.p;
        if self.is_zero() {
            return Some(self.clone());
        }
        let dd = d.coeffs.len();
        if dd == 0 || self.coeffs.len() < dd {
            return None;
        }
        let lead_inv = inv_mod(*d.coeffs.last().unwrap(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd - 1];
            if top == 0 {
                continue;
            }
            let c = mul_mod(top, lead_inv, p);
            quot[i] = c;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let t = mul_mod(c, dc, p);
                let slot = &mut rem[i + j];
                *slot = (*slot + p - t) % p;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        let mut q = PolyMod { p, coeffs: quot };
        q.trim();
        Some(q)
    }

    fn gcd(mut a: PolyMod, mut b: PolyMod) -> PolyMod {
        while !b.is_zero() {
            a.rem_assign(&b);
            std::mem::swap(&mut a, &mut b);
        }
        a
    }
}

/// Degree of gcd(f, g) computed mod one of the screen primes.
///
/// Returns `None` only if every screen prime divides a leading
/// coefficient (so the modular degree could understate nothing — the
/// screen is just unusable). A return of `Some(0)` proves that f and g
/// are coprime over the rationals.
pub(crate) fn gcd_degree_screen(f: &IntPoly, g: &IntPoly) -> Option<usize> {
    if f.is_zero() || g.is_zero() {
        return None;
    }
    for &p in &SCREEN_PRIMES {
        let fp = PolyMod::reduce(f, p);
        let gp = PolyMod::reduce(g, p);
        if fp.deg() != f.degree() || gp.deg() != g.degree() {
            continue;
        }
        return PolyMod::gcd(fp, gp).deg();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn screen_detects_coprime_and_common_factors() {
        // coprime: Φ₅ and q−1
        assert_eq!(gcd_degree_screen(&p(&[1, 1, 1, 1, 1]), &p(&[-1, 1])), Some(0));
        // common factor q−1 between q²−1 and q³−1
        assert_eq!(gcd_degree_screen(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])), Some(1));
    }

    #[test]
    fn modular_exact_division() {
        let pr = SCREEN_PRIMES[0];
        let f = PolyMod::reduce(&p(&[-1, 0, 1]), pr);
        let d = PolyMod::reduce(&p(&[-1, 1]), pr);
        let q = f.div_exact(&d).unwrap();
        assert_eq!(q.deg(), Some(1));
        let not = PolyMod::reduce(&p(&[1, 0, 1]), pr);
        assert!(not.div_exact(&d).is_none());
    }

    #[test]
    fn negative_coefficients_reduce_into_range() {
        let pr = SCREEN_PRIMES[0];
        let f = PolyMod::reduce(&p(&[-5, -1]), pr);
        assert_eq!(f.deg(), Some(1));
    }
}
