//! Structural invariants that tie the modules together: cyclotomic
//! factorizations, q-binomial recurrences, floor-formula exponents, the
//! congruence relation's algebraic sanity, and q = 1 specializations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use qcongruence::congruence::{congruent_mod, Verdict};
use qcongruence::padic;
use qcongruence::qfactor::{
    cyclotomic, phi_order, poch_phi_exponent, q_binomial, q_int, q_pochhammer, radical_qint,
    QPochSpec,
};
use qcongruence::ring::{IntPoly, RationalFn};
use qcongruence::suites;
use qcongruence::wzpairs::{PairId, WzPair};

fn rf(p: IntPoly) -> RationalFn {
    RationalFn::from_poly(p)
}

#[test]
fn cyclotomic_product_and_radical_up_to_60() {
    for n in 1..=60u64 {
        let mut prod = IntPoly::one();
        for d in 1..=n {
            if n % d == 0 {
                prod = &prod * &cyclotomic(d);
            }
        }
        let target = &IntPoly::q_pow(n as usize) - &IntPoly::one();
        assert_eq!(prod, target, "divisor product at n = {n}");
        assert_eq!(radical_qint(n), q_int(n), "radical at n = {n}");
    }
}

#[test]
fn q_binomial_pascal_recurrences_and_symmetry() {
    for m in 1..=30i64 {
        for n in 0..=m {
            let c = q_binomial(m, n, 1);
            // symmetry
            assert_eq!(c, q_binomial(m, m - n, 1), "symmetry at ({m},{n})");
            // both q-Pascal recurrences
            let a = q_binomial(m - 1, n - 1, 1);
            let b = q_binomial(m - 1, n, 1);
            let qn = IntPoly::q_pow(n as usize);
            let qmn = IntPoly::q_pow((m - n) as usize);
            assert_eq!(c, &a + &(&qn * &b), "first recurrence at ({m},{n})");
            assert_eq!(c, &(&qmn * &a) + &b, "second recurrence at ({m},{n})");
        }
    }
}

#[test]
fn q_binomial_at_one_is_binomial_up_to_30() {
    let one = BigRational::one();
    for m in 0..=30i64 {
        for n in 0..=m {
            let got = q_binomial(m, n, 1).eval(&one);
            let want = BigRational::from(padic::binomial(m as u64, n as u64));
            assert_eq!(got, want, "({m},{n})");
        }
    }
}

#[test]
fn floor_exponents_agree_with_exact_division() {
    // all covered shapes, n ≤ 25, odd t ≤ 25
    for t in (3..=25u64).step_by(2) {
        for n in 0..=25u64 {
            let shapes = [
                QPochSpec::q_by_q(n),
                QPochSpec::odd(n),
                QPochSpec::odd_shifted(1, n),
                QPochSpec::odd_shifted(2, n),
                QPochSpec::odd_shifted(7, n),
            ];
            for spec in shapes {
                let expected = poch_phi_exponent(&spec, t).unwrap();
                let poly = q_pochhammer(&spec);
                let direct = phi_order(&rf(poly), t).unwrap();
                assert_eq!(expected, direct, "spec {spec:?}, t = {t}");
            }
        }
    }
}

#[test]
fn proof_binomial_congruences_up_to_25() {
    // central and halved q-binomials mod Phi_m^2, odd m
    for m in (3..=25u64).step_by(2) {
        assert!(
            suites::central_binom_phi2_congruence(m).unwrap().holds(),
            "central binomial congruence at m = {m}"
        );
        assert!(
            suites::half_binom_phi2_congruence(m).unwrap().holds(),
            "half binomial congruence at m = {m}"
        );
    }
}

#[test]
fn stepping_stone_congruences_up_to_21() {
    for n in (3..=21u64).step_by(2) {
        assert!(suites::stepping_binom_unit(n).unwrap().holds(), "unit at {n}");
        for k in 0..n {
            assert!(
                suites::stepping_binom_alternating(n, k).unwrap().holds(),
                "alternating at ({n},{k})"
            );
        }
    }
}

#[test]
fn reduction_chain_for_small_odd_m() {
    for m in (3..=11u64).step_by(2) {
        assert!(suites::verify("reduce3", m).unwrap().holds(), "reduce3 at {m}");
        assert!(suites::verify("reduce", m).unwrap().holds(), "reduce at {m}");
    }
}

#[test]
fn congruence_equivalence_relation_sanity() {
    let phi5 = cyclotomic(5);
    let mut state = 0x853c49e6748fea9bu64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut random_fn = move || {
        let coeffs: Vec<i64> = (0..5).map(|_| (next() % 19) as i64 - 9).collect();
        let num = IntPoly::from_i64_coeffs(&coeffs);
        // denominators built from factors coprime to Phi_5
        let den = match next() % 3 {
            0 => IntPoly::one(),
            1 => IntPoly::from_i64_coeffs(&[1, 1]),
            _ => IntPoly::from_i64_coeffs(&[2, 0, 1]),
        };
        RationalFn::new(num, den).unwrap()
    };
    for _ in 0..40 {
        let (a, b, c) = (random_fn(), random_fn(), random_fn());
        // reflexive
        assert!(congruent_mod(&a, &a, &phi5).unwrap().holds());
        // symmetric
        let ab = congruent_mod(&a, &b, &phi5).unwrap();
        let ba = congruent_mod(&b, &a, &phi5).unwrap();
        assert_eq!(ab.verdict, ba.verdict);
        // transitive when the pairwise differences are admissible
        let bc = congruent_mod(&b, &c, &phi5).unwrap();
        let ac = congruent_mod(&a, &c, &phi5).unwrap();
        if ab.holds() && bc.holds() {
            assert!(ac.holds(), "transitivity failed");
        }
    }
}

#[test]
fn congruence_scaling_consistency() {
    // multiplying both sides by a function coprime to the modulus
    // preserves the verdict
    let phi7 = cyclotomic(7);
    let a = rf(&q_int(7) * &IntPoly::from_i64_coeffs(&[3, 1]));
    let b = RationalFn::zero();
    assert!(congruent_mod(&a, &b, &phi7).unwrap().holds());
    let scales = [
        RationalFn::new(IntPoly::from_i64_coeffs(&[1, 1]), IntPoly::from_i64_coeffs(&[2]))
            .unwrap(),
        RationalFn::new(IntPoly::from_i64_coeffs(&[5]), IntPoly::from_i64_coeffs(&[1, 0, 1]))
            .unwrap(),
        RationalFn::q_pow(-3),
    ];
    for c in scales {
        let ca = &c * &a;
        let cb = &c * &b;
        assert!(
            congruent_mod(&ca, &cb, &phi7).unwrap().holds(),
            "scaling by {c} broke the congruence"
        );
    }
}

#[test]
fn divergent1_f_specializes_to_integer_terms() {
    // F(n, 0) at q = 1 equals the central-binomial summand
    let one = BigRational::one();
    let pair = WzPair::new(PairId::Divergent1);
    for n in 0..=10u64 {
        let f = pair.eval_f(n, 0);
        assert_eq!(
            f.eval_at(&one).unwrap(),
            padic::divergent_term_16(n),
            "n = {n}"
        );
    }
}

#[test]
fn theorem1_term_divisibility_distinguishes_primes() {
    // for odd primes p every boundary term is divisible by [p]; the
    // composite cases 9 and 15 each have terms that are not
    let term_verdicts = |n: u64| -> Vec<Verdict> {
        let modulus = q_int(n);
        ((n + 1) / 2..=n - 1)
            .map(|k| {
                congruent_mod(&suites::thm1_summand(k), &RationalFn::zero(), &modulus)
                    .unwrap()
                    .verdict
            })
            .collect()
    };
    for p in [3u64, 5, 7, 11, 13] {
        assert!(
            term_verdicts(p).iter().all(|v| *v == Verdict::Holds),
            "terms at prime {p}"
        );
    }
    for composite in [9u64, 15] {
        assert!(
            term_verdicts(composite).contains(&Verdict::Fails),
            "expected a failing term at composite {composite}"
        );
    }
}

#[test]
fn q_side_and_integer_side_agree_at_small_primes() {
    let one = BigRational::one();
    for p in [3u64, 5, 7] {
        let half = (p - 1) / 2;
        let full = p - 1;
        // half 16-sum
        let q_half = suites::build_sum("thm1_half", p).unwrap();
        assert_eq!(
            q_half.eval_at(&one).unwrap(),
            padic::term_sum(padic::divergent_term_16, half),
            "half sum at p = {p}"
        );
        // full 16-sum
        let q_full = suites::build_sum("thm1_full", p).unwrap();
        assert_eq!(
            q_full.eval_at(&one).unwrap(),
            padic::term_sum(padic::divergent_term_16, full),
            "full sum at p = {p}"
        );
        // signed 8-sums
        let q_alt = suites::build_sum("thm2", p).unwrap();
        assert_eq!(
            q_alt.eval_at(&one).unwrap(),
            padic::term_sum(padic::divergent_term_8_signed, full),
            "signed full sum at p = {p}"
        );
        let q_alt_half = suites::build_sum("conj1", p).unwrap();
        assert_eq!(
            q_alt_half.eval_at(&one).unwrap(),
            padic::term_sum(padic::divergent_term_8_signed, half),
            "signed half sum at p = {p}"
        );
    }
}
