//! The complexified symplectic Lie algebra in its explicit basis.
//!
//! The algebra decomposes as k ⊕ p+ ⊕ p-. The p± parts are spanned by the
//! symmetric generators E±kl (E±kl = E±lk), the k part by B_kl for all
//! ordered index pairs. The canonical generator order fixed here is consumed
//! by PBW normalization everywhere:
//!
//! 1. all E+ (lexicographic by (k,l), k <= l),
//! 2. all E- (same order),
//! 3. B_kl with k < l (lex), then B_kk (ascending), then B_kl with k > l (lex).
//!
//! B generators sit rightmost so that scalar-K-type reduction can absorb them,
//! and within the B block the generators that kill a highest-weight vector
//! (row index > column index) sit rightmost so they act first.

use crate::envelope::NcPoly;
use crate::error::Error;
use crate::matrix::GaussMatrix;
use crate::scalar::{rat, ratio, GaussRational, Rat};
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GenKind {
    Eplus,
    Eminus,
    Bgen,
}

/// A basis element of the complexified algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorId {
    kind: GenKind,
    k: u16,
    l: u16,
}

impl GeneratorId {
    /// E+kl; indices are 1-based and normalized so that k <= l.
    pub fn e_plus(k: u16, l: u16) -> Self {
        assert!(k >= 1 && l >= 1, "generator indices are 1-based");
        let (k, l) = if k <= l { (k, l) } else { (l, k) };
        GeneratorId {
            kind: GenKind::Eplus,
            k,
            l,
        }
    }

    /// E-kl; indices are 1-based and normalized so that k <= l.
    pub fn e_minus(k: u16, l: u16) -> Self {
        assert!(k >= 1 && l >= 1, "generator indices are 1-based");
        let (k, l) = if k <= l { (k, l) } else { (l, k) };
        GeneratorId {
            kind: GenKind::Eminus,
            k,
            l,
        }
    }

    /// B_kl; (k,l) is an ordered pair, no normalization.
    pub fn b(k: u16, l: u16) -> Self {
        assert!(k >= 1 && l >= 1, "generator indices are 1-based");
        GeneratorId {
            kind: GenKind::Bgen,
            k,
            l,
        }
    }

    pub fn kind(&self) -> GenKind {
        self.kind
    }

    pub fn k(&self) -> u16 {
        self.k
    }

    pub fn l(&self) -> u16 {
        self.l
    }

    pub fn max_index(&self) -> u16 {
        self.k.max(self.l)
    }

    pub fn is_diagonal_b(&self) -> bool {
        self.kind == GenKind::Bgen && self.k == self.l
    }

    /// For the canonical order: B above the diagonal, on it, below it.
    fn b_class(&self) -> u8 {
        match self.k.cmp(&self.l) {
            Ordering::Less => 0,
            Ordering::Equal => 1,
            Ordering::Greater => 2,
        }
    }

    fn sort_key(&self) -> (u8, u8, u16, u16) {
        let kind_rank = match self.kind {
            GenKind::Eplus => 0,
            GenKind::Eminus => 1,
            GenKind::Bgen => 2,
        };
        let class = match self.kind {
            GenKind::Bgen => self.b_class(),
            _ => 0,
        };
        (kind_rank, class, self.k, self.l)
    }
}

impl Ord for GeneratorId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for GeneratorId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            GenKind::Eplus => "E+",
            GenKind::Eminus => "E\u{2212}",
            GenKind::Bgen => "B",
        };
        write!(f, "{}[{},{}]", kind, self.k, self.l)
    }
}

impl fmt::Debug for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The full basis for rank m in canonical order; 2m^2 + m generators.
pub fn list_basis(m: usize) -> Result<Vec<GeneratorId>, Error> {
    if m < 1 {
        return Err(Error::InvalidRank(m));
    }
    let m16 = m as u16;
    let mut out = Vec::with_capacity(2 * m * m + m);
    for k in 1..=m16 {
        for l in k..=m16 {
            out.push(GeneratorId::e_plus(k, l));
        }
    }
    for k in 1..=m16 {
        for l in k..=m16 {
            out.push(GeneratorId::e_minus(k, l));
        }
    }
    for k in 1..=m16 {
        for l in (k + 1)..=m16 {
            out.push(GeneratorId::b(k, l));
        }
    }
    for k in 1..=m16 {
        out.push(GeneratorId::b(k, k));
    }
    for k in 2..=m16 {
        for l in 1..k {
            out.push(GeneratorId::b(k, l));
        }
    }
    Ok(out)
}

/// Dual basis element with respect to B(g,h) = (1/2) trace(gh):
/// E±kl* = 1/(1+δkl) E∓kl and B_kl* = B_lk.
pub fn dual(g: GeneratorId) -> (Rat, GeneratorId) {
    match g.kind {
        GenKind::Eplus => {
            let s = if g.k == g.l { ratio(1, 2) } else { rat(1) };
            (s, GeneratorId::e_minus(g.k, g.l))
        }
        GenKind::Eminus => {
            let s = if g.k == g.l { ratio(1, 2) } else { rat(1) };
            (s, GeneratorId::e_plus(g.k, g.l))
        }
        GenKind::Bgen => (rat(1), GeneratorId::b(g.l, g.k)),
    }
}

fn delta(a: u16, b: u16) -> i64 {
    (a == b) as i64
}

fn push_term(out: &mut Vec<(i64, GeneratorId)>, c: i64, g: GeneratorId) {
    if c == 0 {
        return;
    }
    for entry in out.iter_mut() {
        if entry.1 == g {
            entry.0 += c;
            return;
        }
    }
    out.push((c, g));
}

/// Structure constants: [a, b] as an integer combination of generators.
///
/// The table:
///   [E+ij, E+kl] = 0,  [E-ij, E-kl] = 0
///   [E+ij, E-kl] = δik B_jl + δjl B_ik + δil B_jk + δjk B_il
///   [B_ij, E+kl] = δjk E+il + δjl E+ik
///   [B_ij, E-kl] = -δik E-jl - δil E-jk
///   [B_ij, B_kl] = δjk B_il - δil B_kj
pub fn bracket_terms(a: GeneratorId, b: GeneratorId) -> Vec<(i64, GeneratorId)> {
    let mut out = Vec::new();
    match (a.kind, b.kind) {
        (GenKind::Eplus, GenKind::Eplus) | (GenKind::Eminus, GenKind::Eminus) => {}
        (GenKind::Eplus, GenKind::Eminus) => {
            let (i, j, k, l) = (a.k, a.l, b.k, b.l);
            push_term(&mut out, delta(i, k), GeneratorId::b(j, l));
            push_term(&mut out, delta(j, l), GeneratorId::b(i, k));
            push_term(&mut out, delta(i, l), GeneratorId::b(j, k));
            push_term(&mut out, delta(j, k), GeneratorId::b(i, l));
        }
        (GenKind::Bgen, GenKind::Eplus) => {
            let (i, j, k, l) = (a.k, a.l, b.k, b.l);
            push_term(&mut out, delta(j, k), GeneratorId::e_plus(i, l));
            push_term(&mut out, delta(j, l), GeneratorId::e_plus(i, k));
        }
        (GenKind::Bgen, GenKind::Eminus) => {
            let (i, j, k, l) = (a.k, a.l, b.k, b.l);
            push_term(&mut out, -delta(i, k), GeneratorId::e_minus(j, l));
            push_term(&mut out, -delta(i, l), GeneratorId::e_minus(j, k));
        }
        (GenKind::Bgen, GenKind::Bgen) => {
            let (i, j, k, l) = (a.k, a.l, b.k, b.l);
            push_term(&mut out, delta(j, k), GeneratorId::b(i, l));
            push_term(&mut out, -delta(i, l), GeneratorId::b(k, j));
        }
        // Remaining mixed cases by antisymmetry.
        _ => {
            out = bracket_terms(b, a);
            for entry in out.iter_mut() {
                entry.0 = -entry.0;
            }
        }
    }
    out
}

/// [a, b] as a degree <= 1 element of the enveloping algebra at the given rank.
pub fn bracket(rank: usize, a: GeneratorId, b: GeneratorId) -> NcPoly {
    let mut p = NcPoly::zero(rank);
    for (c, g) in bracket_terms(a, b) {
        p.add_generator_term(g, rat(c));
    }
    p
}

/// The symplectic form J = [[0, -I], [I, 0]] of size 2m.
pub fn symplectic_form(m: usize) -> GaussMatrix {
    let mut j = GaussMatrix::zero(2 * m);
    for i in 0..m {
        j.set(i, m + i, GaussRational::from_rat(rat(-1)));
        j.set(m + i, i, GaussRational::from_rat(rat(1)));
    }
    j
}

fn check_index(g: GeneratorId, m: usize) -> Result<(), Error> {
    if g.max_index() as usize > m {
        Err(Error::IndexOutOfRange { k: g.k, l: g.l, m })
    } else {
        Ok(())
    }
}

/// The 2m x 2m matrix realization of a generator.
///
/// E±kl = [[X, ±iX], [±iX, -X]] with X = (e_kl + e_lk)/2, and
/// B_kl = [[A/2, -iS/2], [iS/2, A/2]] with A = e_kl - e_lk, S = e_kl + e_lk.
pub fn realize(g: GeneratorId, m: usize) -> Result<GaussMatrix, Error> {
    if m < 1 {
        return Err(Error::InvalidRank(m));
    }
    check_index(g, m)?;
    let n = 2 * m;
    let mut out = GaussMatrix::zero(n);
    let (k, l) = (g.k as usize - 1, g.l as usize - 1);
    let half = ratio(1, 2);
    match g.kind {
        GenKind::Eplus | GenKind::Eminus => {
            let sign = if g.kind == GenKind::Eplus {
                rat(1)
            } else {
                rat(-1)
            };
            // X = (e_kl + e_lk)/2; for k == l this is e_kk.
            let entries: &[(usize, usize)] = if k == l { &[(k, k)] } else { &[(k, l), (l, k)] };
            let x = if k == l { rat(1) } else { half.clone() };
            for &(r, c) in entries {
                out.add_at(r, c, &GaussRational::from_rat(x.clone()));
                out.add_at(m + r, m + c, &GaussRational::from_rat(-x.clone()));
                let ix = GaussRational::new(Rat::zero(), &sign * &x);
                out.add_at(r, m + c, &ix);
                out.add_at(m + r, c, &ix);
            }
        }
        GenKind::Bgen => {
            // A/2 on the diagonal blocks.
            if k != l {
                out.add_at(k, l, &GaussRational::from_rat(half.clone()));
                out.add_at(l, k, &GaussRational::from_rat(-half.clone()));
                out.add_at(m + k, m + l, &GaussRational::from_rat(half.clone()));
                out.add_at(m + l, m + k, &GaussRational::from_rat(-half.clone()));
            }
            // ±iS/2 on the off-diagonal blocks, S = e_kl + e_lk.
            let entries: &[(usize, usize)] = if k == l { &[(k, k)] } else { &[(k, l), (l, k)] };
            let s = if k == l { rat(1) } else { half.clone() };
            for &(r, c) in entries {
                out.add_at(r, m + c, &GaussRational::new(Rat::zero(), -s.clone()));
                out.add_at(m + r, c, &GaussRational::new(Rat::zero(), s.clone()));
            }
        }
    }
    Ok(out)
}

/// B(a, b) = (1/2) trace(a b).
pub fn bilinear_form(a: &GaussMatrix, b: &GaussMatrix) -> Result<GaussRational, Error> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(a.trace_of_product(b).scale(&ratio(1, 2)))
}

/// The projection-style matrices used in the multiplication-table self-test.
pub struct SpecialMatrices {
    pub k1: GaussMatrix,
    pub k2: GaussMatrix,
    pub p_plus: GaussMatrix,
    pub p_minus: GaussMatrix,
}

/// K1, K2, P± as 2m x 2m block matrices, normalized so that the full
/// multiplication table holds exactly: K_j^2 = K_j, P±^2 = 0, P+P- = K2,
/// P-P+ = K1, K1K2 = K2K1 = 0, P+K1 = P+ = K2P+, P-K2 = P- = K1P-.
pub fn special_matrices(m: usize) -> Result<SpecialMatrices, Error> {
    if m < 1 {
        return Err(Error::InvalidRank(m));
    }
    let half = ratio(1, 2);
    // Each matrix is (1/2)[[I, uiI], [-duiI, dI]] for signs u, d below; the
    // projections K have d = +1 with opposite off-diagonal blocks, the
    // nilpotents P have d = -1 with equal off-diagonal blocks.
    let build = |d: i64, u: i64| {
        let mut mat = GaussMatrix::zero(2 * m);
        for j in 0..m {
            mat.set(j, j, GaussRational::from_rat(half.clone()));
            mat.set(m + j, m + j, GaussRational::from_rat(&half * &rat(d)));
            mat.set(j, m + j, GaussRational::new(Rat::zero(), &half * &rat(u)));
            mat.set(
                m + j,
                j,
                GaussRational::new(Rat::zero(), &half * &rat(-u * d)),
            );
        }
        mat
    };
    // K1 = [[I, iI], [-iI, I]]/2, K2 = [[I, -iI], [iI, I]]/2,
    // P+ = [[I, iI], [iI, -I]]/2, P- = [[I, -iI], [-iI, -I]]/2.
    Ok(SpecialMatrices {
        k1: build(1, 1),
        k2: build(1, -1),
        p_plus: build(-1, 1),
        p_minus: build(-1, -1),
    })
}

/// Realize a degree-1 integer combination of generators.
fn realize_combination(terms: &[(i64, GeneratorId)], m: usize) -> Result<GaussMatrix, Error> {
    let mut acc = GaussMatrix::zero(2 * m);
    for (c, g) in terms {
        acc = acc.add(&realize(*g, m)?.scale(&rat(*c)));
    }
    Ok(acc)
}

/// realize(\[g1,g2\]) must equal the matrix commutator of the realizations.
pub fn check_bracket_realization(m: usize) -> Result<Option<String>, Error> {
    let basis = list_basis(m)?;
    let real: Vec<GaussMatrix> = basis
        .iter()
        .map(|g| realize(*g, m))
        .collect::<Result<_, _>>()?;
    for (i, &a) in basis.iter().enumerate() {
        for (j, &b) in basis.iter().enumerate() {
            let lhs = real[i].commutator(&real[j]);
            let rhs = realize_combination(&bracket_terms(a, b), m)?;
            if lhs != rhs {
                return Ok(Some(format!("[{a}, {b}] disagrees with matrix commutator")));
            }
        }
    }
    Ok(None)
}

/// B(X_i, X_j*) = δij over the whole basis.
pub fn check_duality(m: usize) -> Result<Option<String>, Error> {
    let basis = list_basis(m)?;
    let real: Vec<GaussMatrix> = basis
        .iter()
        .map(|g| realize(*g, m))
        .collect::<Result<_, _>>()?;
    let dual_real: Vec<GaussMatrix> = basis
        .iter()
        .map(|g| {
            let (s, d) = dual(*g);
            realize(d, m).map(|mat| mat.scale(&s))
        })
        .collect::<Result<_, _>>()?;
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            let v = bilinear_form(&real[i], &dual_real[j])?;
            let expect = if i == j {
                GaussRational::one()
            } else {
                GaussRational::zero()
            };
            if v != expect {
                return Ok(Some(format!(
                    "B({}, {}*) = {}, expected {}",
                    basis[i], basis[j], v, expect
                )));
            }
        }
    }
    Ok(None)
}

/// Jacobi identity on all generator triples, expanded through the table.
pub fn check_jacobi(m: usize) -> Result<Option<String>, Error> {
    let basis = list_basis(m)?;
    let nested = |a: GeneratorId,
                  b: GeneratorId,
                  c: GeneratorId,
                  acc: &mut std::collections::BTreeMap<GeneratorId, i64>| {
        for (c1, g) in bracket_terms(b, c) {
            for (c2, h) in bracket_terms(a, g) {
                *acc.entry(h).or_insert(0) += c1 * c2;
            }
        }
    };
    for &g1 in &basis {
        for &g2 in &basis {
            for &g3 in &basis {
                let mut acc = std::collections::BTreeMap::new();
                nested(g1, g2, g3, &mut acc);
                nested(g2, g3, g1, &mut acc);
                nested(g3, g1, g2, &mut acc);
                if acc.values().any(|&v| v != 0) {
                    return Ok(Some(format!("Jacobi fails on ({g1}, {g2}, {g3})")));
                }
            }
        }
    }
    Ok(None)
}

/// The K/P multiplication table.
pub fn check_kp_table(m: usize) -> Result<Option<String>, Error> {
    let s = special_matrices(m)?;
    let zero = GaussMatrix::zero(2 * m);
    let table: Vec<(&str, GaussMatrix, &GaussMatrix)> = vec![
        ("K1*K1 = K1", s.k1.mul(&s.k1), &s.k1),
        ("K2*K2 = K2", s.k2.mul(&s.k2), &s.k2),
        ("P+*P+ = 0", s.p_plus.mul(&s.p_plus), &zero),
        ("P-*P- = 0", s.p_minus.mul(&s.p_minus), &zero),
        ("P+*P- = K2", s.p_plus.mul(&s.p_minus), &s.k2),
        ("P-*P+ = K1", s.p_minus.mul(&s.p_plus), &s.k1),
        ("K1*K2 = 0", s.k1.mul(&s.k2), &zero),
        ("K2*K1 = 0", s.k2.mul(&s.k1), &zero),
        ("P+*K1 = P+", s.p_plus.mul(&s.k1), &s.p_plus),
        ("K2*P+ = P+", s.k2.mul(&s.p_plus), &s.p_plus),
        ("P+*K2 = 0", s.p_plus.mul(&s.k2), &zero),
        ("K1*P+ = 0", s.k1.mul(&s.p_plus), &zero),
        ("P-*K2 = P-", s.p_minus.mul(&s.k2), &s.p_minus),
        ("K1*P- = P-", s.k1.mul(&s.p_minus), &s.p_minus),
        ("P-*K1 = 0", s.p_minus.mul(&s.k1), &zero),
        ("K2*P- = 0", s.k2.mul(&s.p_minus), &zero),
    ];
    for (name, got, want) in table {
        if &got != want {
            return Ok(Some(format!("{name} fails at m={m}")));
        }
    }
    Ok(None)
}

/// g'J + Jg = 0 for every realized generator.
pub fn check_symplectic(m: usize) -> Result<Option<String>, Error> {
    let j = symplectic_form(m);
    for g in list_basis(m)? {
        let r = realize(g, m)?;
        let defect = r.transpose().mul(&j).add(&j.mul(&r));
        if !defect.is_zero() {
            return Ok(Some(format!("{g} violates the symplectic condition")));
        }
    }
    Ok(None)
}

#[derive(Debug)]
pub struct SelfTestReport {
    pub pass: bool,
    pub failure: Option<String>,
}

/// Run all structural consistency checks for rank m; reports the first
/// counterexample instead of raising.
pub fn structure_selftest(m: usize) -> Result<SelfTestReport, Error> {
    let checks: [(&str, Option<String>); 5] = [
        ("bracket", check_bracket_realization(m)?),
        ("duality", check_duality(m)?),
        ("jacobi", check_jacobi(m)?),
        ("kp-table", check_kp_table(m)?),
        ("symplectic", check_symplectic(m)?),
    ];
    for (name, failure) in checks {
        if let Some(msg) = failure {
            return Ok(SelfTestReport {
                pass: false,
                failure: Some(format!("{name}: {msg}")),
            });
        }
    }
    Ok(SelfTestReport {
        pass: true,
        failure: None,
    })
}
