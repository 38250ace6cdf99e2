//! Plain-text and LaTeX emission for polynomials. Output is deterministic:
//! terms follow the canonical monomial order, λ-terms are sorted by degree.

use crate::envelope::NcPoly;
use crate::lambda::LambdaPoly;
use crate::lie::{GenKind, GeneratorId};
use crate::scalar::Rat;
use num_traits::{One, Signed};

fn rat_text(c: &Rat) -> String {
    c.to_string()
}

fn rat_latex(c: &Rat) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else if c.numer().is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -c.numer(), c.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

// Graded order for display: total degree first, then higher powers of
// earlier variables first.
fn sorted_lambda_terms(p: &LambdaPoly) -> Vec<(Vec<u32>, Rat)> {
    let mut terms: Vec<(Vec<u32>, Rat)> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    let width = terms.iter().map(|(e, _)| e.len()).max().unwrap_or(0);
    let padded = |e: &[u32]| {
        let mut v = e.to_vec();
        v.resize(width, 0);
        v
    };
    terms.sort_by(|(ea, _), (eb, _)| {
        let da: u32 = ea.iter().sum();
        let db: u32 = eb.iter().sum();
        da.cmp(&db).then_with(|| padded(eb).cmp(&padded(ea)))
    });
    terms
}

fn lambda_var_text(i: usize, single: bool) -> String {
    if single {
        "\u{03bb}".to_string()
    } else {
        format!("\u{03bb}{}", i + 1)
    }
}

/// Text form of a λ-polynomial, e.g. "3/2·λ^2 + 2·λ".
pub fn lambda_text(p: &LambdaPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let single = p.single_variable();
    let mut out = String::new();
    for (idx, (expo, coeff)) in sorted_lambda_terms(p).iter().enumerate() {
        let neg = coeff.is_negative();
        let mag = coeff.abs();
        if idx == 0 {
            if neg {
                out.push('\u{2212}');
            }
        } else {
            out.push_str(if neg { " \u{2212} " } else { " + " });
        }
        let vars: Vec<String> = expo
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let v = lambda_var_text(i, single);
                if e == 1 {
                    v
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if vars.is_empty() {
            out.push_str(&rat_text(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&rat_text(&mag));
                out.push('\u{00b7}');
            }
            out.push_str(&vars.join("\u{00b7}"));
        }
    }
    out
}

fn lambda_latex(p: &LambdaPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let single = p.single_variable();
    let mut out = String::new();
    for (idx, (expo, coeff)) in sorted_lambda_terms(p).iter().enumerate() {
        let neg = coeff.is_negative();
        let mag = coeff.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let vars: Vec<String> = expo
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let v = if single {
                    "\\lambda".to_string()
                } else {
                    format!("\\lambda_{{{}}}", i + 1)
                };
                if e == 1 {
                    v
                } else {
                    format!("{v}^{{{e}}}")
                }
            })
            .collect();
        if vars.is_empty() {
            out.push_str(&rat_latex(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&rat_latex(&mag));
            }
            out.push_str(&vars.join(""));
        }
    }
    out
}

fn generator_latex(g: &GeneratorId) -> String {
    let (prefix, k, l) = match g.kind() {
        GenKind::Eplus => ("E_{+", g.k(), g.l()),
        GenKind::Eminus => ("E_{-", g.k(), g.l()),
        GenKind::Bgen => ("B_{", g.k(), g.l()),
    };
    if k > 9 || l > 9 {
        format!("{prefix}{k},{l}}}")
    } else {
        format!("{prefix}{k}{l}}}")
    }
}

/// Deterministic plain-text rendering, canonical term order.
pub fn text(p: &NcPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (mono, coeff)) in p.terms().enumerate() {
        let mono_str = if mono.is_empty() {
            String::new()
        } else {
            mono.factors()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join("")
        };
        let piece = match coeff.as_rational() {
            Some(c) => {
                let neg = c.is_negative();
                let mag = c.abs();
                let body = if mono_str.is_empty() {
                    rat_text(&mag)
                } else if mag.is_one() {
                    mono_str
                } else {
                    format!("{}\u{00b7}{mono_str}", rat_text(&mag))
                };
                (neg, body)
            }
            None => {
                let body = if mono_str.is_empty() {
                    format!("({})", lambda_text(coeff))
                } else {
                    format!("({})\u{00b7}{mono_str}", lambda_text(coeff))
                };
                (false, body)
            }
        };
        let (neg, body) = piece;
        if idx == 0 {
            if neg {
                out.push('\u{2212}');
            }
        } else {
            out.push_str(if neg { " \u{2212} " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// LaTeX rendering with subscripted generators, e.g. "E_{+11}E_{-11}".
pub fn latex(p: &NcPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (mono, coeff)) in p.terms().enumerate() {
        let mono_str: String = mono.factors().iter().map(generator_latex).collect();
        let piece = match coeff.as_rational() {
            Some(c) => {
                let neg = c.is_negative();
                let mag = c.abs();
                let body = if mono_str.is_empty() {
                    rat_latex(&mag)
                } else if mag.is_one() {
                    mono_str
                } else {
                    format!("{}{mono_str}", rat_latex(&mag))
                };
                (neg, body)
            }
            None => {
                let body = if mono_str.is_empty() {
                    format!("\\left({}\\right)", lambda_latex(coeff))
                } else {
                    format!("\\left({}\\right){mono_str}", lambda_latex(coeff))
                };
                (false, body)
            }
        };
        let (neg, body) = piece;
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envelope::NcPoly;
    use crate::lie::GeneratorId;
    use crate::scalar::rat;

    #[test]
    fn latex_examples() {
        let b11 = NcPoly::generator(1, GeneratorId::b(1, 1));
        assert_eq!(latex(&b11), "B_{11}");
        assert_eq!(latex(&b11.scale_rat(&rat(-4))), "-4B_{11}");
        let prod = &NcPoly::generator(1, GeneratorId::e_plus(1, 1))
            * &NcPoly::generator(1, GeneratorId::e_minus(1, 1));
        assert_eq!(latex(&prod), "E_{+11}E_{-11}");
    }

    #[test]
    fn text_of_normalized_d2() {
        let d2 = crate::casimir::build_from_words(1, 1)
            .unwrap()
            .pbw_normalize();
        assert_eq!(
            text(&d2),
            "\u{2212}4\u{00b7}B[1,1] + 2\u{00b7}E+[1,1]E\u{2212}[1,1] + 2\u{00b7}B[1,1]B[1,1]"
        );
    }

    #[test]
    fn zero_renders_as_zero() {
        assert_eq!(text(&NcPoly::zero(1)), "0");
        assert_eq!(latex(&NcPoly::zero(1)), "0");
    }

    #[test]
    fn lambda_rendering() {
        let lam = LambdaPoly::var(0);
        let p = &lam.pow(2) + &lam.scale(&rat(2));
        assert_eq!(lambda_text(&p), "2\u{00b7}\u{03bb} + \u{03bb}^2");
        let q = &LambdaPoly::var(1) - &LambdaPoly::var(0);
        assert_eq!(lambda_text(&q), "\u{2212}\u{03bb}1 + \u{03bb}2");
    }
}
