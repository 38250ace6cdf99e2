//! JSON serialization of polynomials.
//!
//! Schema:
//! ```text
//! {"rank": m, "coeff_ring": "rational"|"lambda",
//!  "terms": [{"coeff": ..., "monomial": [{"kind": "E+"|"E-"|"B", "k": 1, "l": 1}, ...]}]}
//! ```
//! A rational coefficient is `{"num": "...", "den": "..."}` with decimal
//! strings; a λ-polynomial is a list of `{"exponents": [...], "rational": ...}`.
//! Terms are emitted in canonical monomial order, so encoding is
//! byte-deterministic and decode(encode(p)) = p.

use crate::envelope::{NcMonomial, NcPoly};
use crate::error::Error;
use crate::lambda::LambdaPoly;
use crate::lie::{GenKind, GeneratorId};
use crate::scalar::Rat;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct RatDoc {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct LambdaTermDoc {
    exponents: Vec<u32>,
    rational: RatDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffDoc {
    Rational(RatDoc),
    Lambda(Vec<LambdaTermDoc>),
}

#[derive(Serialize, Deserialize)]
struct GenDoc {
    kind: String,
    k: u16,
    l: u16,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    coeff: CoeffDoc,
    monomial: Vec<GenDoc>,
}

#[derive(Serialize, Deserialize)]
struct PolyDoc {
    rank: usize,
    coeff_ring: String,
    terms: Vec<TermDoc>,
}

fn rat_doc(c: &Rat) -> RatDoc {
    RatDoc {
        num: c.numer().to_string(),
        den: c.denom().to_string(),
    }
}

fn lambda_doc(c: &LambdaPoly) -> Vec<LambdaTermDoc> {
    c.terms()
        .map(|(e, v)| LambdaTermDoc {
            exponents: e.clone(),
            rational: rat_doc(v),
        })
        .collect()
}

fn gen_doc(g: &GeneratorId) -> GenDoc {
    let kind = match g.kind() {
        GenKind::Eplus => "E+",
        GenKind::Eminus => "E-",
        GenKind::Bgen => "B",
    };
    GenDoc {
        kind: kind.to_string(),
        k: g.k(),
        l: g.l(),
    }
}

/// Canonical JSON encoding; byte-deterministic for a given polynomial.
pub fn encode(p: &NcPoly) -> String {
    let rational_ring = p.has_rational_coefficients();
    let terms = p
        .terms()
        .map(|(mono, coeff)| TermDoc {
            coeff: if rational_ring {
                CoeffDoc::Rational(rat_doc(&coeff.as_rational().expect("rational ring")))
            } else {
                CoeffDoc::Lambda(lambda_doc(coeff))
            },
            monomial: mono.factors().iter().map(gen_doc).collect(),
        })
        .collect();
    let doc = PolyDoc {
        rank: p.rank(),
        coeff_ring: if rational_ring { "rational" } else { "lambda" }.to_string(),
        terms,
    };
    serde_json::to_string(&doc).expect("serialization cannot fail")
}

fn parse_rat(doc: &RatDoc, path: &str) -> Result<Rat, Error> {
    let num: BigInt = doc.num.parse().map_err(|_| Error::Decode {
        path: format!("{path}.num"),
        message: format!("not an integer: {:?}", doc.num),
    })?;
    let den: BigInt = doc.den.parse().map_err(|_| Error::Decode {
        path: format!("{path}.den"),
        message: format!("not an integer: {:?}", doc.den),
    })?;
    if den.is_zero() {
        return Err(Error::Decode {
            path: format!("{path}.den"),
            message: "zero denominator".to_string(),
        });
    }
    Ok(Rat::new(num, den))
}

fn parse_gen(doc: &GenDoc, rank: usize, path: &str) -> Result<GeneratorId, Error> {
    if doc.k < 1 || doc.l < 1 || doc.k as usize > rank || doc.l as usize > rank {
        return Err(Error::Decode {
            path: path.to_string(),
            message: format!("index ({},{}) out of range for rank {rank}", doc.k, doc.l),
        });
    }
    match doc.kind.as_str() {
        "E+" => Ok(GeneratorId::e_plus(doc.k, doc.l)),
        "E-" => Ok(GeneratorId::e_minus(doc.k, doc.l)),
        "B" => Ok(GeneratorId::b(doc.k, doc.l)),
        other => Err(Error::Decode {
            path: format!("{path}.kind"),
            message: format!("unknown generator kind {other:?}"),
        }),
    }
}

/// Decode a polynomial; errors carry the JSON path of the offending field.
pub fn decode(s: &str) -> Result<NcPoly, Error> {
    let doc: PolyDoc = serde_json::from_str(s).map_err(|e| Error::Decode {
        path: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    if doc.rank < 1 {
        return Err(Error::Decode {
            path: "rank".to_string(),
            message: format!("invalid rank {}", doc.rank),
        });
    }
    if doc.coeff_ring != "rational" && doc.coeff_ring != "lambda" {
        return Err(Error::Decode {
            path: "coeff_ring".to_string(),
            message: format!("unknown ring {:?}", doc.coeff_ring),
        });
    }
    let mut p = NcPoly::zero(doc.rank);
    for (ti, term) in doc.terms.iter().enumerate() {
        let coeff = match &term.coeff {
            CoeffDoc::Rational(r) => {
                LambdaPoly::constant(parse_rat(r, &format!("terms[{ti}].coeff"))?)
            }
            CoeffDoc::Lambda(list) => {
                let mut c = LambdaPoly::zero();
                for (li, lt) in list.iter().enumerate() {
                    let v = parse_rat(&lt.rational, &format!("terms[{ti}].coeff[{li}].rational"))?;
                    c.insert_add(lt.exponents.clone(), v);
                }
                c
            }
        };
        let mut factors = Vec::with_capacity(term.monomial.len());
        for (gi, g) in term.monomial.iter().enumerate() {
            factors.push(parse_gen(
                g,
                doc.rank,
                &format!("terms[{ti}].monomial[{gi}]"),
            )?);
        }
        p.insert_add(NcMonomial::new(factors), coeff);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::casimir::build_from_words;
    use crate::ktype::scalar_ktype_reduce;
    use crate::scalar::rat;

    #[test]
    fn zero_encodes_with_empty_terms() {
        let z = NcPoly::zero(2);
        assert_eq!(
            encode(&z),
            r#"{"rank":2,"coeff_ring":"rational","terms":[]}"#
        );
        assert_eq!(decode(&encode(&z)).unwrap(), z);
    }

    #[test]
    fn round_trip_rational_and_lambda() {
        let d2 = build_from_words(1, 2).unwrap();
        assert_eq!(decode(&encode(&d2)).unwrap(), d2);
        let red = scalar_ktype_reduce(&d2);
        let s = encode(&red);
        assert!(s.contains(r#""coeff_ring":"lambda""#));
        assert_eq!(decode(&s).unwrap(), red);
    }

    #[test]
    fn encoding_is_deterministic() {
        let a = encode(&build_from_words(1, 2).unwrap().pbw_normalize());
        let b = encode(&build_from_words(1, 2).unwrap().pbw_normalize());
        assert_eq!(a, b);
    }

    #[test]
    fn decode_errors_carry_location() {
        let bad = r#"{"rank":1,"coeff_ring":"rational","terms":[{"coeff":{"num":"1","den":"0"},"monomial":[]}]}"#;
        match decode(bad) {
            Err(Error::Decode { path, .. }) => assert_eq!(path, "terms[0].coeff.den"),
            other => panic!("expected decode error, got {other:?}"),
        }
        let bad_gen = r#"{"rank":1,"coeff_ring":"rational","terms":[{"coeff":{"num":"1","den":"1"},"monomial":[{"kind":"E+","k":2,"l":1}]}]}"#;
        match decode(bad_gen) {
            Err(Error::Decode { path, .. }) => assert_eq!(path, "terms[0].monomial[0]"),
            other => panic!("expected decode error, got {other:?}"),
        }
    }

    #[test]
    fn decode_merges_duplicate_terms() {
        let doc = r#"{"rank":1,"coeff_ring":"rational","terms":[
            {"coeff":{"num":"1","den":"1"},"monomial":[{"kind":"B","k":1,"l":1}]},
            {"coeff":{"num":"2","den":"1"},"monomial":[{"kind":"B","k":1,"l":1}]}]}"#;
        let p = decode(doc).unwrap();
        assert_eq!(p.num_terms(), 1);
        let c = p.terms().next().unwrap().1.as_rational().unwrap();
        assert_eq!(c, rat(3));
    }
}
