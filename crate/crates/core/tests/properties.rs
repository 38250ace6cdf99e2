//! Property tests for the algebraic invariants: PBW normalization laws,
//! serialization round-trips, and scalar reduction linearity.

use casimir_core::json;
use casimir_core::ktype::scalar_ktype_reduce;
use casimir_core::lie::list_basis;
use casimir_core::scalar::rat;
use casimir_core::words::{enumerate_words, sign_exponent};
use casimir_core::{GeneratorId, LambdaPoly, NcPoly};
use proptest::prelude::*;

fn arb_generator() -> impl Strategy<Value = GeneratorId> {
    let basis = list_basis(2).unwrap();
    (0..basis.len()).prop_map(move |i| basis[i])
}

fn arb_coeff() -> impl Strategy<Value = LambdaPoly> {
    // constants and short polynomials in λ
    (-4i64..=4, -3i64..=3)
        .prop_map(|(c0, c1)| &LambdaPoly::from_int(c0) + &LambdaPoly::var(0).scale(&rat(c1)))
}

fn arb_poly() -> impl Strategy<Value = NcPoly> {
    let term = (
        proptest::collection::vec(arb_generator(), 0..=3),
        arb_coeff(),
    );
    proptest::collection::vec(term, 1..=4).prop_map(|terms| {
        let mut p = NcPoly::zero(2);
        for (factors, coeff) in terms {
            p = &p + &NcPoly::monomial(2, factors, coeff);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pbw_normalize_is_idempotent(p in arb_poly()) {
        let n1 = p.pbw_normalize();
        prop_assert_eq!(n1.pbw_normalize(), n1);
    }

    #[test]
    fn pbw_normalize_respects_products(p in arb_poly(), q in arb_poly()) {
        let direct = (&p * &q).pbw_normalize();
        let staged = (&p.pbw_normalize() * &q.pbw_normalize()).pbw_normalize();
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn commutator_is_antisymmetric(p in arb_poly(), q in arb_poly()) {
        let ab = p.commutator(&q).pbw_normalize();
        let ba = q.commutator(&p).pbw_normalize();
        prop_assert_eq!(ab, -&ba);
    }

    #[test]
    fn json_round_trip(p in arb_poly()) {
        let s = json::encode(&p);
        let back = json::decode(&s).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(json::encode(&back), s);
    }

    #[test]
    fn scalar_reduce_absorbs_right_b(p in arb_poly(), k in 1u16..=2, l in 1u16..=2) {
        let shifted = &p * &NcPoly::generator(2, GeneratorId::b(k, l));
        let lhs = scalar_ktype_reduce(&shifted);
        let rhs = if k == l {
            scalar_ktype_reduce(&p).scale(&-&LambdaPoly::var(0))
        } else {
            NcPoly::zero(2)
        };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sign_exponent_is_rotation_invariant(r in 1usize..=4, seed in any::<u32>()) {
        let words = enumerate_words(r).unwrap();
        let w = &words[seed as usize % words.len()];
        let l = sign_exponent(w);
        for s in 1..w.len() {
            prop_assert_eq!(sign_exponent(&w.rotated(s)), l);
        }
    }
}
