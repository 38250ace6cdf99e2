//! Named check suites driving the CLI `verify` command. Each check is pure;
//! the suites aggregate pass/fail with timing and a failure detail.

use crate::casimir::{
    build_from_words, build_reference, centrality_check, quartic_expansion_identity,
    reference_tuple_count, symbol_independence, symmetrized_trace_identity_deg2,
    symmetrized_trace_identity_deg4,
};
use crate::json;
use crate::ktype::{
    express_in_trace_powers, hw_action, lw_action, scalar_identity_quadratic,
    scalar_identity_quartic, WeightVector,
};
use crate::lambda::LambdaPoly;
use crate::lie;
use crate::scalar::rat;
use crate::words::{
    enumerate_words, enumerate_words_unbalanced, sign_exponent, sign_of, sign_parity_ambiguous,
    trace_expand, Letter, LetterWord,
};
use std::time::Instant;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub millis: u128,
    pub detail: Option<String>,
}

fn run(name: impl Into<String>, f: impl FnOnce() -> Result<(), String>) -> Check {
    let start = Instant::now();
    let outcome = f();
    Check {
        name: name.into(),
        pass: outcome.is_ok(),
        millis: start.elapsed().as_millis(),
        detail: outcome.err(),
    }
}

fn ok_if(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

/// Structural checks: bracket vs matrix commutator, duality, Jacobi, the
/// K/P table, and the symplectic condition.
pub fn run_structure(m: usize) -> Vec<Check> {
    let named = |label: &str, f: fn(usize) -> Result<Option<String>, crate::Error>| {
        let name = format!("structure/{label} (m={m})");
        run(name, move || match f(m) {
            Ok(None) => Ok(()),
            Ok(Some(detail)) => Err(detail),
            Err(e) => Err(e.to_string()),
        })
    };
    vec![
        named(
            "bracket-vs-matrix-commutator",
            lie::check_bracket_realization,
        ),
        named("dual-basis-duality", lie::check_duality),
        named("jacobi-identity", lie::check_jacobi),
        named("kp-multiplication-table", lie::check_kp_table),
        named("symplectic-condition", lie::check_symplectic),
    ]
}

/// Word combinatorics, the two constructions, centrality and identities.
pub fn run_casimir(m: usize, max_r: usize) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(run("words/counts-4^r (r<=6)", || {
        for r in 1..=6 {
            let n = enumerate_words(r).map_err(|e| e.to_string())?.len();
            ok_if(n == 4usize.pow(r as u32), &format!("count {n} at r={r}"))?;
            let n = enumerate_words_unbalanced(r)
                .map_err(|e| e.to_string())?
                .len();
            ok_if(
                n == 4usize.pow(r as u32),
                &format!("unbalanced {n} at r={r}"),
            )?;
        }
        Ok(())
    }));

    checks.push(run("words/degree-2-and-4-word-sets", || {
        let r1: Vec<String> = enumerate_words(1)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        ok_if(
            r1 == ["E+E\u{2212}", "E\u{2212}E+", "BB", "B*B*"],
            "length-2 word set",
        )?;
        let negative: Vec<LetterWord> = enumerate_words(2)
            .unwrap()
            .into_iter()
            .filter(|w| sign_of(w) < 0)
            .collect();
        let base = LetterWord::new(vec![
            Letter::EPlus,
            Letter::BStar,
            Letter::EMinus,
            Letter::B,
        ])
        .unwrap();
        ok_if(negative.len() == 4, "four negative words")?;
        ok_if(
            (0..4).all(|s| negative.contains(&base.rotated(s))),
            "negative words are the rotations of E+B*E\u{2212}B",
        )
    }));

    checks.push(run("words/sign-rule", || {
        use Letter::{BStar, EMinus, EPlus, B};
        let w = |ls: &[Letter]| LetterWord::new(ls.to_vec()).unwrap();
        ok_if(
            sign_exponent(&w(&[EMinus, B, EPlus, BStar])) == 1,
            "L(E-BE+B*)",
        )?;
        ok_if(sign_exponent(&w(&[EMinus, B, B, EPlus])) == 2, "L(E-BBE+)")?;
        ok_if(sign_exponent(&w(&[EPlus, EMinus, B, B])) == 2, "L(E+E-BB)")?;
        for r in 1..=4 {
            for word in enumerate_words(r).unwrap() {
                let l = sign_exponent(&word);
                for s in 1..word.len() {
                    ok_if(
                        sign_exponent(&word.rotated(s)) == l,
                        &format!("rotation invariance of {word}"),
                    )?;
                }
            }
        }
        for r in 1..=6 {
            for word in enumerate_words(r).unwrap() {
                ok_if(!sign_parity_ambiguous(&word), &format!("parity of {word}"))?;
            }
        }
        Ok(())
    }));

    for r in 1..=max_r {
        let tuples = reference_tuple_count(2 * r, m);
        let feasible = matches!(tuples, Some(t) if t <= 1_000_000);
        if feasible {
            checks.push(run(
                format!("casimir/oracle-equivalence r={r} (m={m})"),
                move || {
                    let a = build_from_words(r, m)
                        .map_err(|e| e.to_string())?
                        .pbw_normalize();
                    let b = build_reference(2 * r, m)
                        .map_err(|e| e.to_string())?
                        .pbw_normalize();
                    ok_if(a == b, "word sum and reference formula disagree")
                },
            ));
        }
        checks.push(run(
            format!("casimir/centrality r={r} (m={m})"),
            move || {
                let d = build_from_words(r, m).map_err(|e| e.to_string())?;
                ok_if(centrality_check(&d), "nonzero commutator with a generator")
            },
        ));
    }

    checks.push(run(
        format!("casimir/normal-ordering-identity-deg2 (m={m})"),
        move || ok_if(symmetrized_trace_identity_deg2(m), "degree-2 identity"),
    ));
    if m <= 2 {
        checks.push(run(
            format!("casimir/normal-ordering-identity-deg4 (m={m})"),
            move || ok_if(symmetrized_trace_identity_deg4(m), "degree-4 identity"),
        ));
        checks.push(run(
            format!("casimir/quartic-expansion (m={m})"),
            move || {
                ok_if(
                    quartic_expansion_identity(m).map_err(|e| e.to_string())?,
                    "explicit C2 expansion",
                )
            },
        ));
    }

    if m >= 2 {
        checks.push(run(
            format!("casimir/symbol-independence (m={m})"),
            move || {
                ok_if(
                    symbol_independence(m).map_err(|e| e.to_string())?,
                    "symbol(D_4) proportional to symbol(D_2)^2",
                )
            },
        ));
    }

    checks.push(run(format!("io/json-round-trip (m={m})"), move || {
        let polys = [
            build_from_words(1, m).map_err(|e| e.to_string())?,
            build_from_words(1, m)
                .map_err(|e| e.to_string())?
                .pbw_normalize(),
            crate::ktype::scalar_ktype_reduce(&build_from_words(1, m).map_err(|e| e.to_string())?),
        ];
        for p in &polys {
            let s1 = json::encode(p);
            let back = json::decode(&s1).map_err(|e| e.to_string())?;
            ok_if(&back == p, "round trip changed the polynomial")?;
            ok_if(json::encode(&back) == s1, "re-encoding not byte-identical")?;
        }
        Ok(())
    }));

    checks
}

/// Highest/lowest-weight evaluation and the scalar-K-type identities.
pub fn run_ktype(m: usize) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(run(
        format!("ktype/hw-eigenvalue-trace-BB (m={m})"),
        move || {
            let wv = WeightVector::symbolic(m);
            let t = trace_expand(&LetterWord::new(vec![Letter::B, Letter::B]).unwrap(), m)
                .map_err(|e| e.to_string())?;
            let got = hw_action(&t, &wv).map_err(|e| e.to_string())?;
            let mut expect = LambdaPoly::zero();
            for j in 1..=m {
                let lj = LambdaPoly::var(j - 1);
                expect = &expect + &(&lj.pow(2) + &lj.scale(&rat(m as i64 + 1 - 2 * j as i64)));
            }
            ok_if(got == expect, "closed form mismatch")
        },
    ));

    checks.push(run(
        format!("ktype/hw-equals-lw-on-central (m={m})"),
        move || {
            use Letter::B;
            let wv = WeightVector::symbolic(m);
            let words: Vec<Vec<Letter>> =
                vec![vec![B], vec![B, B], vec![B, B, B], vec![B, B, B, B]];
            for ls in words {
                let t =
                    trace_expand(&LetterWord::new(ls).unwrap(), m).map_err(|e| e.to_string())?;
                let h = hw_action(&t, &wv).map_err(|e| e.to_string())?;
                let l = lw_action(&t, &wv).map_err(|e| e.to_string())?;
                ok_if(h == l, "hw and lw disagree")?;
            }
            Ok(())
        },
    ));

    checks.push(run(
        format!("ktype/scalar-identity-quadratic (m={m})"),
        move || {
            ok_if(
                scalar_identity_quadratic(m).map_err(|e| e.to_string())?,
                "quadratic scalar identity",
            )
        },
    ));
    if m <= 2 {
        checks.push(run(
            format!("ktype/scalar-identity-quartic (m={m})"),
            move || {
                ok_if(
                    scalar_identity_quartic(m).map_err(|e| e.to_string())?,
                    "quartic scalar identity",
                )
            },
        ));
        checks.push(run(
            format!("ktype/trace-power-membership (m={m})"),
            move || {
                for r in 1..=2 {
                    let cert = express_in_trace_powers(m, r).map_err(|e| e.to_string())?;
                    ok_if(cert.is_some(), &format!("no certificate at r={r}"))?;
                }
                Ok(())
            },
        ));
    }

    checks
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Structure,
    Casimir,
    Ktype,
    All,
}

pub fn run_suite(suite: Suite, m: usize, max_r: usize) -> Vec<Check> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Structure | Suite::All) {
        out.extend(run_structure(m));
    }
    if matches!(suite, Suite::Casimir | Suite::All) {
        out.extend(run_casimir(m, max_r));
    }
    if matches!(suite, Suite::Ktype | Suite::All) {
        out.extend(run_ktype(m));
    }
    out
}
