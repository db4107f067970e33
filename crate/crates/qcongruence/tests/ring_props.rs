//! Randomized algebraic properties of the exact-arithmetic layer:
//! arithmetic must commute with evaluation, normalization must be
//! idempotent and canonical, and gcd/divisibility must satisfy their
//! defining equations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use qcongruence::ring::{divides_exactly, poly_gcd, IntPoly, RationalFn};

fn poly_strategy(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..=50, 0..=max_deg + 1).prop_map(|v| IntPoly::from_i64_coeffs(&v))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    poly_strategy(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn rational_point() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=40)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn rational_fn(max_deg: usize) -> impl Strategy<Value = RationalFn> {
    (poly_strategy(max_deg), nonzero_poly(max_deg))
        .prop_map(|(n, d)| RationalFn::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    // Ring axioms spot-checked by evaluation: polynomials up to degree 50.
    #[test]
    fn poly_arithmetic_commutes_with_evaluation(
        f in poly_strategy(50),
        g in poly_strategy(50),
        r in rational_point(),
    ) {
        prop_assert_eq!((&f + &g).eval(&r), f.eval(&r) + g.eval(&r));
        prop_assert_eq!((&f - &g).eval(&r), f.eval(&r) - g.eval(&r));
        prop_assert_eq!((&f * &g).eval(&r), f.eval(&r) * g.eval(&r));
    }

    #[test]
    fn rational_arithmetic_commutes_with_evaluation(
        a in rational_fn(12),
        b in rational_fn(12),
        r in rational_point(),
    ) {
        let (sum, prod) = (&a + &b, &a * &b);
        // skip points where any involved denominator vanishes
        let defined = [&a, &b, &sum, &prod]
            .iter()
            .all(|f| !f.den().eval(&r).is_zero());
        prop_assume!(defined);
        let (va, vb) = (a.eval_at(&r).unwrap(), b.eval_at(&r).unwrap());
        prop_assert_eq!(sum.eval_at(&r).unwrap(), &va + &vb);
        prop_assert_eq!(prod.eval_at(&r).unwrap(), &va * &vb);
        if !b.is_zero() {
            let quot = a.div(&b).unwrap();
            if !quot.den().eval(&r).is_zero() && !vb.is_zero() {
                prop_assert_eq!(quot.eval_at(&r).unwrap(), va / vb);
            }
        }
    }

    // Normalization is idempotent and independent of common factors.
    #[test]
    fn normalization_is_idempotent(a in rational_fn(16)) {
        let renorm = RationalFn::new(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(&renorm, &a);
    }

    #[test]
    fn normalization_cancels_injected_common_factors(
        a in rational_fn(10),
        c in nonzero_poly(6),
    ) {
        prop_assume!(!a.is_zero());
        let blown = RationalFn::new(a.num() * &c, a.den() * &c).unwrap();
        prop_assert_eq!(&blown, &a);
    }

    // gcd divides both inputs and leaves coprime cofactors.
    #[test]
    fn gcd_divides_and_cofactors_are_coprime(
        a in nonzero_poly(10),
        b in nonzero_poly(10),
        common in nonzero_poly(5),
    ) {
        let (a, b) = (&a * &common, &b * &common);
        let g = poly_gcd(&a, &b).unwrap();
        let qa = a.divide_exact(&g).expect("gcd divides a");
        let qb = b.divide_exact(&g).expect("gcd divides b");
        let g2 = poly_gcd(&qa, &qb).unwrap();
        prop_assert!(g2.is_constant(), "cofactors share {g2}");
    }

    // divides_exactly(p, f·p) reproduces f up to the content convention:
    // quotient · primitive(p) = primitive(f·p).
    #[test]
    fn division_roundtrip(f in poly_strategy(10), p in nonzero_poly(8)) {
        let prod = &f * &p;
        let chk = divides_exactly(&p, &prod).unwrap();
        let q = chk.quotient.expect("constructed multiple divides");
        prop_assert_eq!(&q * &p.primitive_part(), prod.primitive_part());
    }

    // Equality of values is representational equality after normalization.
    #[test]
    fn canonical_form_is_unique(a in rational_fn(10), s in -9i64..=9) {
        prop_assume!(s != 0);
        let scaled = RationalFn::new(
            a.num().mul_scalar(&BigInt::from(s)),
            a.den().mul_scalar(&BigInt::from(s)),
        )
        .unwrap();
        prop_assert_eq!(&scaled, &a);
    }
}

// The floor inequality underlying the factorial-quotient exponent bounds:
// ⌊2x+2y⌋ + ⌊y⌋ ≥ ⌊x⌋ + ⌊x+y⌋ + ⌊2y⌋ for rational x, y ≥ 0.
#[test]
fn floor_inequality_on_random_rationals() {
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let rational = |r: u64| {
        let den = (r % 97) + 1;
        let num = (r >> 32) % (20 * den + 1);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    };
    for _ in 0..10_000 {
        let x = rational(next());
        let y = rational(next());
        let two = BigRational::from(BigInt::from(2));
        let lhs = (&two * (&x + &y)).floor() + y.floor();
        let rhs = x.floor() + (&x + &y).floor() + (&two * &y).floor();
        assert!(lhs >= rhs, "x = {x}, y = {y}");
    }
}
