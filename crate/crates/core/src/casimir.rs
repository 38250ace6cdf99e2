//! Casimir elements built two independent ways, plus the checks that tie
//! them together: centrality, the normal-ordering identities for the first
//! two Casimirs, and a top-symbol independence spot check.
//!
//! `build_from_words` forms D_{2r} = Σ_w (-1)^{L(w)} trace(w) over the
//! admissible words of length 2r. `build_reference` evaluates the classical
//! dual-basis formula D_n = Σ trace(X_{i1}···X_{in}) X_{i1}*···X_{in}* with
//! exact matrix traces; the two must agree after PBW normalization.

use crate::envelope::{commutative_symbol, NcMonomial, NcPoly};
use crate::error::Error;
use crate::lambda::LambdaPoly;
use crate::lie::{dual, list_basis, realize, GeneratorId};
use crate::matrix::GaussMatrix;
use crate::scalar::{rat, ratio, GaussRational, Rat};
use crate::words::{enumerate_words, sign_of, trace_expand, Letter, LetterWord};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// D_{2r} as the signed sum of formal traces over admissible words of
/// length 2r. Returned unnormalized.
pub fn build_from_words(r: usize, m: usize) -> Result<NcPoly, Error> {
    if m < 1 {
        return Err(Error::InvalidRank(m));
    }
    let mut out = NcPoly::zero(m);
    for w in enumerate_words(r)? {
        let t = trace_expand(&w, m)?;
        out = if sign_of(&w) >= 0 {
            &out + &t
        } else {
            &out - &t
        };
    }
    Ok(out)
}

/// Number of basis tuples the reference formula visits: (2m^2 + m)^n.
pub fn reference_tuple_count(n: usize, m: usize) -> Option<u128> {
    let base = (2 * m * m + m) as u128;
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

fn merge_coeff(
    map: &mut BTreeMap<NcMonomial, GaussRational>,
    mono: NcMonomial,
    add: GaussRational,
) {
    if add.is_zero() {
        return;
    }
    match map.entry(mono) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get() + &add;
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(add);
        }
    }
}

struct RefCtx {
    real: Vec<GaussMatrix>,
    dual_scalar: Vec<Rat>,
    dual_gen: Vec<GeneratorId>,
    n: usize,
}

// Depth-first over index tuples, sharing prefix products; at the last
// position only the trace of prefix * basis matrix is needed. Zero prefixes
// prune whole subtrees (products within p+ or within p- vanish).
fn walk(
    ctx: &RefCtx,
    depth: usize,
    prefix: &GaussMatrix,
    tuple: &mut Vec<usize>,
    acc: &mut BTreeMap<NcMonomial, GaussRational>,
) {
    let nb = ctx.real.len();
    if depth == ctx.n - 1 {
        for j in 0..nb {
            let tr = prefix.trace_of_product(&ctx.real[j]);
            if tr.is_zero() {
                continue;
            }
            tuple[depth] = j;
            let mut scalar = Rat::from_integer(1.into());
            let mut factors = Vec::with_capacity(ctx.n);
            for &i in tuple.iter() {
                scalar *= &ctx.dual_scalar[i];
                factors.push(ctx.dual_gen[i]);
            }
            merge_coeff(acc, NcMonomial::new(factors), tr.scale(&scalar));
        }
        return;
    }
    for j in 0..nb {
        let next = prefix.mul(&ctx.real[j]);
        if next.is_zero() {
            continue;
        }
        tuple[depth] = j;
        walk(ctx, depth + 1, &next, tuple, acc);
    }
}

/// The dual-basis Casimir formula of degree n at rank m, with full matrix
/// traces and duals taken with respect to half the trace form.
///
/// The aggregated coefficients must be purely rational; a nonzero imaginary
/// residue would mean the realization or the dual basis is wrong, so it
/// panics rather than returning.
pub fn build_reference(n: usize, m: usize) -> Result<NcPoly, Error> {
    if n < 1 {
        return Err(Error::InvalidWordLength(n));
    }
    let basis = list_basis(m)?;
    let real: Vec<GaussMatrix> = basis
        .iter()
        .map(|g| realize(*g, m))
        .collect::<Result<_, _>>()?;
    let duals: Vec<(Rat, GeneratorId)> = basis.iter().map(|g| dual(*g)).collect();
    let ctx = RefCtx {
        real,
        dual_scalar: duals.iter().map(|(s, _)| s.clone()).collect(),
        dual_gen: duals.iter().map(|(_, g)| *g).collect(),
        n,
    };
    let nb = basis.len();

    let partials: Vec<BTreeMap<NcMonomial, GaussRational>> = (0..nb)
        .into_par_iter()
        .map(|i0| {
            let mut acc = BTreeMap::new();
            let mut tuple = vec![0usize; n];
            tuple[0] = i0;
            if n == 1 {
                let tr = ctx.real[i0].trace();
                if !tr.is_zero() {
                    merge_coeff(
                        &mut acc,
                        NcMonomial::new(vec![ctx.dual_gen[i0]]),
                        tr.scale(&ctx.dual_scalar[i0]),
                    );
                }
            } else {
                walk(&ctx, 1, &ctx.real[i0].clone(), &mut tuple, &mut acc);
            }
            acc
        })
        .collect();

    let mut merged: BTreeMap<NcMonomial, GaussRational> = BTreeMap::new();
    for part in partials {
        for (mono, c) in part {
            merge_coeff(&mut merged, mono, c);
        }
    }

    let mut out = NcPoly::zero(m);
    for (mono, c) in merged {
        assert!(
            c.is_rational(),
            "imaginary residue {c} on {mono}: realization/dual-basis bug"
        );
        out.insert_add(mono, LambdaPoly::constant(c.re));
    }
    Ok(out)
}

/// True iff the normalized commutator of p with every generator vanishes.
pub fn centrality_check(p: &NcPoly) -> bool {
    let m = p.rank();
    let basis = list_basis(m).expect("valid rank");
    let normal = p.pbw_normalize();
    basis.par_iter().all(|g| {
        normal
            .commutator(&NcPoly::generator(m, *g))
            .pbw_normalize()
            .is_zero()
    })
}

fn tr(letters: &[Letter], m: usize) -> NcPoly {
    trace_expand(&LetterWord::new(letters.to_vec()).unwrap(), m).unwrap()
}

/// (1/2)(tr(E+E-) + tr(E-E+)) = tr(E+E-) - (m+1) tr(B), exactly.
pub fn symmetrized_trace_identity_deg2(m: usize) -> bool {
    use Letter::{EMinus, EPlus, B};
    let half = ratio(1, 2);
    let lhs = (&tr(&[EPlus, EMinus], m) + &tr(&[EMinus, EPlus], m)).scale_rat(&half);
    let rhs = &tr(&[EPlus, EMinus], m) - &tr(&[B], m).scale_rat(&rat(m as i64 + 1));
    lhs.pbw_normalize() == rhs.pbw_normalize()
}

/// The degree-4 analog:
/// (1/2)(tr(E+E-E+E-) + tr(E-E+E-E+)) = tr(E+E-E+E-)
///   - (1/2)(tr(E+E-)+tr(E-E+))·tr(B) - (m+2)/2 (tr(E+E-B) + tr(E-E+B*)).
pub fn symmetrized_trace_identity_deg4(m: usize) -> bool {
    use Letter::{BStar, EMinus, EPlus, B};
    let half = ratio(1, 2);
    let lhs = (&tr(&[EPlus, EMinus, EPlus, EMinus], m) + &tr(&[EMinus, EPlus, EMinus, EPlus], m))
        .scale_rat(&half);
    let sym2 = (&tr(&[EPlus, EMinus], m) + &tr(&[EMinus, EPlus], m)).scale_rat(&half);
    let mixed = &tr(&[EPlus, EMinus, B], m) + &tr(&[EMinus, EPlus, BStar], m);
    let rhs = &(&tr(&[EPlus, EMinus, EPlus, EMinus], m) - &(&sym2 * &tr(&[B], m)))
        - &mixed.scale_rat(&ratio(m as i64 + 2, 2));
    lhs.pbw_normalize() == rhs.pbw_normalize()
}

/// The explicit expansion of half the degree-4 Casimir:
/// C2 = (1/2)(tr(E+E-E+E-) + tr(E-E+E-E+) + tr(B^4) + tr(B*^4))
///      + 2 (tr(E+E-BB) + tr(E-E+B*B*)) - Σ {E+kl, E-ij} B_jk B_il
///      + (m+1)^2/2 (tr(E+E-) + tr(E-E+))
/// must equal (1/2) D_4.
pub fn quartic_expansion_identity(m: usize) -> Result<bool, Error> {
    use Letter::{BStar, EMinus, EPlus, B};
    let half = ratio(1, 2);
    let m16 = m as u16;

    let mut anti = NcPoly::zero(m);
    for i in 1..=m16 {
        for j in 1..=m16 {
            for k in 1..=m16 {
                for l in 1..=m16 {
                    let eplus = GeneratorId::e_plus(k, l);
                    let eminus = GeneratorId::e_minus(i, j);
                    let b1 = GeneratorId::b(j, k);
                    let b2 = GeneratorId::b(i, l);
                    anti.insert_add(
                        NcMonomial::new(vec![eplus, eminus, b1, b2]),
                        LambdaPoly::one(),
                    );
                    anti.insert_add(
                        NcMonomial::new(vec![eminus, eplus, b1, b2]),
                        LambdaPoly::one(),
                    );
                }
            }
        }
    }

    let pure = &(&tr(&[EPlus, EMinus, EPlus, EMinus], m) + &tr(&[EMinus, EPlus, EMinus, EPlus], m))
        + &(&tr(&[B, B, B, B], m) + &tr(&[BStar, BStar, BStar, BStar], m));
    let mixed = (&tr(&[EPlus, EMinus, B, B], m) + &tr(&[EMinus, EPlus, BStar, BStar], m))
        .scale_rat(&rat(2));
    let deg2 = (&tr(&[EPlus, EMinus], m) + &tr(&[EMinus, EPlus], m))
        .scale_rat(&ratio((m as i64 + 1) * (m as i64 + 1), 2));
    let c2 = &(&(&pure.scale_rat(&half) + &mixed) - &anti) + &deg2;

    let d4_half = build_from_words(2, m)?.scale_rat(&half);
    Ok(c2.pbw_normalize() == d4_half.pbw_normalize())
}

/// All three normal-ordering identities for the first two Casimirs.
pub fn trace_identities(m: usize) -> Result<[bool; 3], Error> {
    Ok([
        symmetrized_trace_identity_deg2(m),
        symmetrized_trace_identity_deg4(m),
        quartic_expansion_identity(m)?,
    ])
}

/// Necessary condition for D_4 not being a polynomial in D_2: the degree-4
/// commutative symbol of D_4 must not be a rational multiple of the square
/// of the degree-2 symbol of D_2.
pub fn symbol_independence(m: usize) -> Result<bool, Error> {
    assert!(m >= 2, "independence spot check needs rank >= 2");
    let s2 = commutative_symbol(&build_from_words(1, m)?, 2);
    let s4 = commutative_symbol(&build_from_words(2, m)?, 4);
    let s2sq = &s2 * &s2;
    Ok(s4.rational_multiple_of(&s2sq).is_none())
}
