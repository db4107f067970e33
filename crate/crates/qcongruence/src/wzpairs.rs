//! The three built-in q-WZ certificate pairs and their telescoping
//! consequences, verified as exact rational-function identities.
//!
//! Each pair is a family of closed-form q-hypergeometric terms
//! `F(n, k)`, `G(n, k)` satisfying a first-order difference relation on a
//! lattice. Two relation shapes occur:
//!
//! * `staver`:     F(n+1, k) − F(n, k) = G(n, k+1) − G(n, k)
//! * `divergent1`, `he`: F(n, k−1) − F(n, k) = G(n+1, k) − G(n, k)
//!
//! Summing the relation telescopes one index away and turns the pair into
//! a proof engine for the congruence suites.

use crate::congruence::{congruent_mod, CongruenceReport};
use crate::error::{Error, Result};
use crate::qfactor::{q_binomial, q_int, q_pochhammer, QPochSpec};
use crate::ring::{IntPoly, RationalFn};

/// `x(x−1)/2`, defined for any integer (negative tops occur in shifted
/// exponents).
pub(crate) fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

fn rf(p: IntPoly) -> RationalFn {
    RationalFn::from_poly(p)
}

fn qint(n: i64) -> RationalFn {
    debug_assert!(n >= 0, "q-integer index must be nonnegative here");
    rf(q_int(n as u64))
}

fn poch(spec: QPochSpec) -> RationalFn {
    rf(q_pochhammer(&spec))
}

/// `1 + q^e` for a possibly negative exponent.
fn one_plus_q_pow(e: i64) -> RationalFn {
    &RationalFn::one() + &RationalFn::q_pow(e)
}

/// Identifier of a built-in pair; these names are stable CLI identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairId {
    Staver,
    Divergent1,
    He,
}

impl PairId {
    pub const ALL: [PairId; 3] = [PairId::Staver, PairId::Divergent1, PairId::He];

    pub fn name(self) -> &'static str {
        match self {
            PairId::Staver => "staver",
            PairId::Divergent1 => "divergent1",
            PairId::He => "he",
        }
    }

    pub fn parse(name: &str) -> Option<PairId> {
        match name {
            "staver" => Some(PairId::Staver),
            "divergent1" => Some(PairId::Divergent1),
            "he" => Some(PairId::He),
            _ => None,
        }
    }
}

impl std::fmt::Display for PairId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Which difference equation a pair satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationShape {
    /// `F(n+1, k) − F(n, k) = G(n, k+1) − G(n, k)`
    StepN,
    /// `F(n, k−1) − F(n, k) = G(n+1, k) − G(n, k)`
    StepK,
}

/// First grid point at which a relation check failed, with both sides.
#[derive(Debug, Clone)]
pub struct RelationWitness {
    pub n: u64,
    pub k: u64,
    pub lhs: RationalFn,
    pub rhs: RationalFn,
}

/// One named sub-identity inside a telescoping check.
#[derive(Debug, Clone)]
pub struct TelescopeItem {
    pub label: String,
    pub ok: bool,
}

/// Outcome of [`WzPair::telescope_check`].
#[derive(Debug, Clone)]
pub struct TelescopeReport {
    pub pair: PairId,
    pub param: u64,
    pub items: Vec<TelescopeItem>,
}

impl TelescopeReport {
    pub fn all_ok(&self) -> bool {
        self.items.iter().all(|i| i.ok)
    }

    fn push(&mut self, label: impl Into<String>, ok: bool) {
        self.items.push(TelescopeItem {
            label: label.into(),
            ok,
        });
    }
}

/// A named family of closed-form q-hypergeometric terms `(F, G)`.
#[derive(Debug, Clone, Copy)]
pub struct WzPair {
    id: PairId,
}

impl WzPair {
    pub fn new(id: PairId) -> Self {
        WzPair { id }
    }

    pub fn id(&self) -> PairId {
        self.id
    }

    pub fn relation_shape(&self) -> RelationShape {
        match self.id {
            PairId::Staver => RelationShape::StepN,
            PairId::Divergent1 | PairId::He => RelationShape::StepK,
        }
    }

    /// Human-readable domain of `(n, k)` for the relation grid.
    pub fn domain_note(&self) -> &'static str {
        match self.id {
            PairId::Staver => "1 <= k <= n (summands carry [2k]^2 denominators)",
            PairId::Divergent1 | PairId::He => "n >= 0, k >= 1",
        }
    }

    /// Evaluates `F(n, k)` exactly.
    ///
    /// Out-of-support points follow each family's convention and evaluate
    /// to zero. The `staver` family requires `1 ≤ k ≤ n`; points outside
    /// that range have vanishing denominators and panic.
    pub fn eval_f(&self, n: u64, k: u64) -> RationalFn {
        match self.id {
            PairId::Staver => staver_f(n, k),
            PairId::Divergent1 => divergent1_f(n, k),
            PairId::He => he_f(n, k),
        }
    }

    /// Evaluates `G(n, k)` exactly; same conventions as [`Self::eval_f`]
    /// (for `staver`, `1 ≤ k ≤ n+1`).
    pub fn eval_g(&self, n: u64, k: u64) -> RationalFn {
        match self.id {
            PairId::Staver => staver_g(n, k),
            PairId::Divergent1 => divergent1_g(n, k),
            PairId::He => he_g(n, k),
        }
    }

    /// Checks the pair's difference relation at every admissible point of
    /// the grid `n ≤ n_max`, `k ≤ k_max`, returning the first failure.
    pub fn verify_relation(
        &self,
        n_max: u64,
        k_max: u64,
    ) -> std::result::Result<(), Box<RelationWitness>> {
        assert!(n_max >= 1 && k_max >= 1, "grid bounds must be ≥ 1");
        match self.relation_shape() {
            RelationShape::StepN => {
                // staver: needs k ≤ n so that F(n, k) is defined
                for n in 1..=n_max {
                    for k in 1..=k_max.min(n) {
                        let lhs = &self.eval_f(n + 1, k) - &self.eval_f(n, k);
                        let rhs = &self.eval_g(n, k + 1) - &self.eval_g(n, k);
                        if lhs != rhs {
                            return Err(Box::new(RelationWitness { n, k, lhs, rhs }));
                        }
                    }
                }
            }
            RelationShape::StepK => {
                for n in 0..=n_max {
                    for k in 1..=k_max {
                        let lhs = &self.eval_f(n, k - 1) - &self.eval_f(n, k);
                        let rhs = &self.eval_g(n + 1, k) - &self.eval_g(n, k);
                        if lhs != rhs {
                            return Err(Box::new(RelationWitness { n, k, lhs, rhs }));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Verifies the summed (telescoped) consequences of the relation.
    ///
    /// * `staver` (any m ≥ 1): the step between consecutive partial sums
    ///   equals the closed-form summand, both directly and through the
    ///   boundary values `F(m+1, m+1) + G(m, m+1) − G(m, 1)`; plus the
    ///   antisymmetric companion sum that cancels pairwise.
    /// * `divergent1` (odd m): telescoping over n for both upper limits
    ///   (m+1)/2 and m.
    /// * `he` (N = m ≥ 1): the double telescoping identity, the vanishing
    ///   of `F(n, N)`, the product form of the right-hand side, and the
    ///   per-summand divisibility by `(1+q^N)²[2N+1]·binom(2N,N)`.
    pub fn telescope_check(&self, m: u64) -> Result<TelescopeReport> {
        if m == 0 {
            return Err(Error::Precondition("telescoping needs m ≥ 1".into()));
        }
        let mut report = TelescopeReport {
            pair: self.id,
            param: m,
            items: Vec::new(),
        };
        match self.id {
            PairId::Staver => self.telescope_staver(m, &mut report),
            PairId::Divergent1 => self.telescope_divergent1(m, &mut report)?,
            PairId::He => self.telescope_he(m, &mut report),
        }
        Ok(report)
    }

    fn telescope_staver(&self, n: u64, report: &mut TelescopeReport) {
        report.push(
            format!("antisymmetric companion sum vanishes at n = {n}"),
            staver_antisymmetric_sum(n).is_zero(),
        );

        let sum_next: RationalFn = (1..=n + 1)
            .map(|k| self.eval_f(n + 1, k))
            .fold(RationalFn::zero(), |acc, t| &acc + &t);
        let sum_cur: RationalFn = (1..=n)
            .map(|k| self.eval_f(n, k))
            .fold(RationalFn::zero(), |acc, t| &acc + &t);
        let step = &sum_next - &sum_cur;

        // [3n+3]/[2n+2]² · binom(2n+2, n+1) · q^{−C(n+1,2)}
        let closed = &qint(3 * n as i64 + 3)
            .div(&qint(2 * n as i64 + 2).pow(2).unwrap())
            .unwrap()
            .mul_poly(&q_binomial(2 * n as i64 + 2, n as i64 + 1, 1))
            * &RationalFn::q_pow(-choose2(n as i64 + 1));
        report.push(
            format!("partial-sum step equals closed-form summand at n = {n}"),
            step == closed,
        );

        let boundary = &(&self.eval_f(n + 1, n + 1) + &self.eval_g(n, n + 1)) - &self.eval_g(n, 1);
        report.push(
            format!("partial-sum step matches boundary values at n = {n}"),
            step == boundary,
        );
    }

    fn telescope_divergent1(&self, m: u64, report: &mut TelescopeReport) -> Result<()> {
        if m % 2 == 0 {
            return Err(Error::Precondition(
                "divergent1 telescoping needs odd m".into(),
            ));
        }
        let half = (m - 1) / 2;
        for (upper, label) in [(half, "(m+1)/2"), (m - 1, "m")] {
            let k_hi = if upper == half { half.max(1) } else { m - 1 };
            for k in 1..=k_hi {
                let mut diff = RationalFn::zero();
                for n in 0..=upper {
                    diff = &diff + &(&self.eval_f(n, k - 1) - &self.eval_f(n, k));
                }
                let boundary = self.eval_g(upper + 1, k);
                report.push(
                    format!(
                        "sum over n <= {upper} of F(n,{}) - F(n,{k}) = G({}, {k}) [upper {label}]",
                        k - 1,
                        upper + 1
                    ),
                    diff == boundary,
                );
            }
        }
        Ok(())
    }

    fn telescope_he(&self, big_n: u64, report: &mut TelescopeReport) {
        let n_i = big_n as i64;

        // F(n, N) = 0 for 0 ≤ n ≤ N when N ≥ 1
        let vanish = (0..=big_n).all(|n| self.eval_f(n, big_n).is_zero());
        report.push(format!("F(n, {big_n}) = 0 for n <= {big_n}"), vanish);

        let sum_f0: RationalFn = (0..=big_n)
            .map(|n| self.eval_f(n, 0))
            .fold(RationalFn::zero(), |acc, t| &acc + &t);
        let sum_fn: RationalFn = (0..=big_n)
            .map(|n| self.eval_f(n, big_n))
            .fold(RationalFn::zero(), |acc, t| &acc + &t);
        let sum_g: RationalFn = (1..=big_n)
            .map(|k| self.eval_g(big_n + 1, k))
            .fold(RationalFn::zero(), |acc, t| &acc + &t);
        report.push(
            format!(
                "sum F(n,0) - sum F(n,{big_n}) telescopes to sum G({}, k)",
                big_n + 1
            ),
            &sum_f0 - &sum_fn == sum_g,
        );

        // [N+1]·binom(2N+2, N+1)/(1+q^{N+1}) = [2N+1]·binom(2N, N)
        let lhs_id = qint(n_i + 1)
            .mul_poly(&q_binomial(2 * n_i + 2, n_i + 1, 1))
            .div(&one_plus_q_pow(n_i + 1))
            .unwrap();
        let rhs_id = qint(2 * n_i + 1).mul_poly(&q_binomial(2 * n_i, n_i, 1));
        report.push("binomial contraction identity".to_string(), lhs_id == rhs_id);

        // product form of the right-hand side and per-summand divisibility
        let neg_poch_n = poch(QPochSpec::neg_q(big_n));
        let scaled_lhs = &sum_f0 * &neg_poch_n.pow(3).unwrap();
        let mut rhs_total = RationalFn::zero();
        let modulus = he_suite_modulus(big_n);
        let mut summands_divisible = true;
        for k in 1..=big_n {
            let summand = he_product_summand(big_n, k);
            if let Ok(rep) = congruent_mod(&summand, &RationalFn::zero(), &modulus) {
                summands_divisible &= rep.holds();
            } else {
                summands_divisible = false;
            }
            rhs_total = &rhs_total + &summand;
        }
        let sign = if big_n % 2 == 0 { 1 } else { -1 };
        rhs_total = &rhs_total * &RationalFn::from_int(sign);
        report.push(
            "scaled telescoped sum equals q-binomial product form".to_string(),
            scaled_lhs == rhs_total,
        );
        report.push(
            format!("each product-form summand divisible by (1+q^{big_n})^2 [2N+1] binom(2N,N)"),
            summands_divisible,
        );
    }
}

/// Modulus `(1 + q^n)² · [2n+1] · binom(2n, n)_q` shared by the `he`
/// telescoping and the full alternating-sum suites.
pub fn he_suite_modulus(n: u64) -> IntPoly {
    let one_plus = &IntPoly::one() + &IntPoly::q_pow(n as usize);
    let sq = &one_plus * &one_plus;
    let prod = &sq * &q_int(2 * n + 1);
    &prod * &q_binomial(2 * n as i64, n as i64, 1)
}

/// The k-th summand of the product form of the telescoped `he` sum
/// (before the global sign (−1)^N):
/// `[N+1]·binom(2N+2,N+1)·binom(2N−2k+2,N)·binom(2N−2k+2,N−k+1)·
///  (−q;q)_N² q^{N−2k+2} / ((1+q^{N+1})(−q;q)_{N−k+1}²)`.
pub fn he_product_summand(big_n: u64, k: u64) -> RationalFn {
    let n_i = big_n as i64;
    let k_i = k as i64;
    let neg_poch = poch(QPochSpec::neg_q(big_n));
    let numer = qint(n_i + 1)
        .mul_poly(&q_binomial(2 * n_i + 2, n_i + 1, 1))
        .mul_poly(&q_binomial(2 * n_i - 2 * k_i + 2, n_i, 1))
        .mul_poly(&q_binomial(2 * n_i - 2 * k_i + 2, n_i - k_i + 1, 1));
    let numer = &(&numer * &neg_poch.pow(2).unwrap()) * &RationalFn::q_pow(n_i - 2 * k_i + 2);
    let den = &one_plus_q_pow(n_i + 1) * &poch(QPochSpec::neg_q(big_n - k + 1)).pow(2).unwrap();
    numer.div(&den).expect("denominator is nonzero")
}

/// Congruence `G((m+1)/2, k) ≡ 0 (mod [m]Φ_m²)` for the `divergent1`
/// boundary terms, odd m and 1 ≤ k ≤ (m−1)/2.
pub fn divergent1_boundary_congruence(m: u64, k: u64) -> Result<CongruenceReport> {
    if m % 2 == 0 || m < 3 {
        return Err(Error::Precondition("needs odd m ≥ 3".into()));
    }
    if !(1..=(m - 1) / 2).contains(&k) {
        return Err(Error::Precondition("needs 1 ≤ k ≤ (m−1)/2".into()));
    }
    let g = WzPair::new(PairId::Divergent1).eval_g((m + 1) / 2, k);
    let phi = crate::qfactor::cyclotomic(m);
    let modulus = &(&q_int(m) * &phi) * &phi;
    congruent_mod(&g, &RationalFn::zero(), &modulus)
}

/// `Σ_{k=1}^{n} (1 − q^{2k−n−1}) q^{−C(n−2k+1,2)} / ([2k]² binom(n,k)_{q²}²)`,
/// which vanishes because the k-th and (n+1−k)-th summands cancel.
pub fn staver_antisymmetric_sum(n: u64) -> RationalFn {
    let n_i = n as i64;
    let mut acc = RationalFn::zero();
    for k in 1..=n {
        let k_i = k as i64;
        let numer = &(&RationalFn::one() - &RationalFn::q_pow(2 * k_i - n_i - 1))
            * &RationalFn::q_pow(-choose2(n_i - 2 * k_i + 1));
        let binom_sq = rf(q_binomial(n_i, k_i, 2)).pow(2).unwrap();
        let den = &qint(2 * k_i).pow(2).unwrap() * &binom_sq;
        acc = &acc + &numer.div(&den).expect("k <= n keeps the binomial nonzero");
    }
    acc
}

// --- term families ---------------------------------------------------------

/// staver: `[n+1]/2 · binom(2n+1,n) · (1+q^{2k−n−1}) q^{−C(n−2k+1,2)} /
/// ([2k]² binom(n,k)_{q²}²)`, for 1 ≤ k ≤ n.
fn staver_f(n: u64, k: u64) -> RationalFn {
    assert!((1..=n).contains(&k), "staver F needs 1 <= k <= n");
    let n_i = n as i64;
    let k_i = k as i64;
    let numer = qint(n_i + 1)
        .div(&RationalFn::from_int(2))
        .unwrap()
        .mul_poly(&q_binomial(2 * n_i + 1, n_i, 1));
    let numer = &(&numer * &one_plus_q_pow(2 * k_i - n_i - 1))
        * &RationalFn::q_pow(-choose2(n_i - 2 * k_i + 1));
    let binom_sq = rf(q_binomial(n_i, k_i, 2)).pow(2).unwrap();
    let den = &qint(2 * k_i).pow(2).unwrap() * &binom_sq;
    numer.div(&den).expect("denominator nonzero on the domain")
}

/// staver: `−[3n−2k+5]/2 · binom(2n+1,n) · (1+q^{n+1}) q^{−C(n−2k+3,2)} /
/// ([2k]² binom(n+1,k)_{q²}²)`, for 1 ≤ k ≤ n+1.
fn staver_g(n: u64, k: u64) -> RationalFn {
    assert!((1..=n + 1).contains(&k), "staver G needs 1 <= k <= n+1");
    let n_i = n as i64;
    let k_i = k as i64;
    let numer = qint(3 * n_i - 2 * k_i + 5)
        .div(&RationalFn::from_int(-2))
        .unwrap()
        .mul_poly(&q_binomial(2 * n_i + 1, n_i, 1));
    let numer = &(&numer * &one_plus_q_pow(n_i + 1))
        * &RationalFn::q_pow(-choose2(n_i - 2 * k_i + 3));
    let binom_sq = rf(q_binomial(n_i + 1, k_i, 2)).pow(2).unwrap();
    let den = &qint(2 * k_i).pow(2).unwrap() * &binom_sq;
    numer.div(&den).expect("denominator nonzero on the domain")
}

/// divergent1: `[3n+2k+1] (q;q²)_n (q^{2k+1};q²)_n² q^{−C(n+1,2)−(2n+1)k} /
/// ((q;q)_n² (q²;q²)_n)`.
fn divergent1_f(n: u64, k: u64) -> RationalFn {
    let n_i = n as i64;
    let k_i = k as i64;
    let shifted_sq = poch(QPochSpec::odd_shifted(k, n)).pow(2).unwrap();
    let numer = &qint(3 * n_i + 2 * k_i + 1).mul_poly(&q_pochhammer(&QPochSpec::odd(n))) * &shifted_sq;
    let numer = &numer * &RationalFn::q_pow(-choose2(n_i + 1) - (2 * n_i + 1) * k_i);
    let den = poch(QPochSpec::q_by_q(n))
        .pow(2)
        .unwrap()
        .mul_poly(&q_pochhammer(&QPochSpec::q2_by_q2(n)));
    numer.div(&den).expect("q-factorial denominators are nonzero")
}

/// divergent1: `−(1+q^{n+2k−1}) (q;q²)_n (q^{2k+1};q²)_{n−1}²
/// q^{−C(n,2)−(2n−1)k} / ((1−q)(q;q)_{n−1}² (q²;q²)_{n−1})`, and zero for
/// n = 0 by the convention `1/(q²;q²)_{−1} = 0`.
fn divergent1_g(n: u64, k: u64) -> RationalFn {
    if n == 0 {
        return RationalFn::zero();
    }
    let n_i = n as i64;
    let k_i = k as i64;
    let shifted_sq = poch(QPochSpec::odd_shifted(k, n - 1)).pow(2).unwrap();
    let numer =
        &one_plus_q_pow(n_i + 2 * k_i - 1).mul_poly(&q_pochhammer(&QPochSpec::odd(n))) * &shifted_sq;
    let numer = &(-&numer) * &RationalFn::q_pow(-choose2(n_i) - (2 * n_i - 1) * k_i);
    let one_minus_q = &IntPoly::one() - &IntPoly::q_pow(1);
    let den = poch(QPochSpec::q_by_q(n - 1))
        .pow(2)
        .unwrap()
        .mul_poly(&q_pochhammer(&QPochSpec::q2_by_q2(n - 1)))
        .mul_poly(&one_minus_q);
    numer.div(&den).expect("q-factorial denominators are nonzero")
}

/// he: `(−1)^n [3n−2k+1] binom(2n−2k,n) (q;q²)_n (q;q²)_{n−k} /
/// ((q;q)_n (q²;q²)_{n−k})`; zero whenever n < 2k.
fn he_f(n: u64, k: u64) -> RationalFn {
    let n_i = n as i64;
    let k_i = k as i64;
    if n_i < 2 * k_i {
        return RationalFn::zero();
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let numer = qint(3 * n_i - 2 * k_i + 1)
        .mul_poly(&q_binomial(2 * n_i - 2 * k_i, n_i, 1))
        .mul_poly(&q_pochhammer(&QPochSpec::odd(n)))
        .mul_poly(&q_pochhammer(&QPochSpec::odd(n - k)));
    let numer = &numer * &RationalFn::from_int(sign);
    let den = poch(QPochSpec::q_by_q(n))
        .mul_poly(&q_pochhammer(&QPochSpec::q2_by_q2(n - k)));
    numer.div(&den).expect("q-factorial denominators are nonzero")
}

/// he: `(−1)^{n+1} [n] binom(2n−2k,n−1) (q;q²)_n (q;q²)_{n−k} q^{n+1−2k} /
/// ((q;q)_n (q²;q²)_{n−k})`; zero whenever the binomial vanishes (n = 0 or
/// n+1 < 2k).
fn he_g(n: u64, k: u64) -> RationalFn {
    let n_i = n as i64;
    let k_i = k as i64;
    if n == 0 || n_i - 1 > 2 * (n_i - k_i) {
        return RationalFn::zero();
    }
    let sign = if (n + 1) % 2 == 0 { 1 } else { -1 };
    let numer = qint(n_i)
        .mul_poly(&q_binomial(2 * n_i - 2 * k_i, n_i - 1, 1))
        .mul_poly(&q_pochhammer(&QPochSpec::odd(n)))
        .mul_poly(&q_pochhammer(&QPochSpec::odd(n - k)));
    let numer = &(&numer * &RationalFn::from_int(sign)) * &RationalFn::q_pow(n_i + 1 - 2 * k_i);
    let den = poch(QPochSpec::q_by_q(n))
        .mul_poly(&q_pochhammer(&QPochSpec::q2_by_q2(n - k)));
    numer.div(&den).expect("q-factorial denominators are nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divergent1_base_values() {
        let pair = WzPair::new(PairId::Divergent1);
        // F(0,0) = [1] = 1 (all empty products)
        assert!(pair.eval_f(0, 0).is_one());
        // G(0,k) = 0 for all k
        for k in 0..6 {
            assert!(pair.eval_g(0, k).is_zero());
        }
    }

    #[test]
    fn he_vanishes_below_the_diagonal() {
        let pair = WzPair::new(PairId::He);
        assert!(pair.eval_f(1, 1).is_zero());
        assert!(pair.eval_f(3, 2).is_zero());
        assert!(!pair.eval_f(4, 2).is_zero());
        assert!(pair.eval_g(0, 1).is_zero());
        // G(n,k) = 0 when n ≤ 2k−2
        assert!(pair.eval_g(2, 2).is_zero());
        assert!(!pair.eval_g(3, 2).is_zero());
    }

    #[test]
    fn relations_hold_on_a_small_grid() {
        for id in PairId::ALL {
            let pair = WzPair::new(id);
            assert!(pair.verify_relation(5, 5).is_ok(), "{id}");
        }
    }

    #[test]
    fn staver_antisymmetric_sum_vanishes() {
        for n in 1..=8 {
            assert!(staver_antisymmetric_sum(n).is_zero(), "n = {n}");
        }
    }

    #[test]
    fn telescoping_small() {
        assert!(WzPair::new(PairId::Staver)
            .telescope_check(3)
            .unwrap()
            .all_ok());
        assert!(WzPair::new(PairId::Divergent1)
            .telescope_check(5)
            .unwrap()
            .all_ok());
        assert!(WzPair::new(PairId::He).telescope_check(3).unwrap().all_ok());
        assert!(WzPair::new(PairId::Divergent1).telescope_check(4).is_err());
    }

    #[test]
    fn boundary_congruence_example() {
        // m = 5, k ∈ {1, 2}: G(3, k) ≡ 0 (mod [5]Φ₅²)
        for k in 1..=2 {
            let rep = divergent1_boundary_congruence(5, k).unwrap();
            assert!(rep.holds(), "k = {k}");
        }
        assert!(divergent1_boundary_congruence(5, 3).is_err());
        assert!(divergent1_boundary_congruence(4, 1).is_err());
    }
}
