//! Oracle-equivalence and centrality coverage past the acceptance grid.
//! The sign rule is only pinned by worked examples up to length 4; these
//! runs validate its parity for every admissible word up to length 12 at
//! rank 1 and length 6 at ranks 2 and 3, since a single wrong sign would
//! break exact agreement with the dual-basis formula.

use casimir_core::casimir::{build_from_words, build_reference, centrality_check};

#[test]
fn oracle_equivalence_r3() {
    for m in 1..=2 {
        let a = build_from_words(3, m).unwrap().pbw_normalize();
        let b = build_reference(6, m).unwrap().pbw_normalize();
        assert_eq!(a, b, "disagreement at m={m}, r=3");
    }
}

#[test]
fn oracle_equivalence_high_degree_rank_one() {
    for r in 4..=6 {
        let a = build_from_words(r, 1).unwrap().pbw_normalize();
        let b = build_reference(2 * r, 1).unwrap().pbw_normalize();
        assert_eq!(a, b, "disagreement at m=1, r={r}");
    }
}

#[test]
fn centrality_r3() {
    for m in 1..=2 {
        assert!(
            centrality_check(&build_from_words(3, m).unwrap()),
            "D_6 not central at m={m}"
        );
    }
}
