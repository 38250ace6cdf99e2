//! Noncommutative polynomials over the generator alphabet and PBW
//! straightening, the computational model of the universal enveloping
//! algebra.
//!
//! A monomial is PBW-normal when its factors are non-decreasing in the
//! active generator order. `pbw_normalize` repeatedly rewrites an adjacent
//! inversion x·y (x > y) as y·x + \[x,y\]; since brackets of generators have
//! degree one, every rewrite either shortens a monomial or removes an
//! inversion at fixed length, so the loop terminates and the normal form is
//! the unique PBW representative.

use crate::lambda::LambdaPoly;
use crate::lie::{bracket_terms, GenKind, GeneratorId};
use crate::scalar::{rat, Rat};
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A product of generators. Ordering is by length, then lexicographically in
/// the canonical generator order; this is the term order of `NcPoly`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NcMonomial(Vec<GeneratorId>);

impl NcMonomial {
    pub fn new(factors: Vec<GeneratorId>) -> Self {
        NcMonomial(factors)
    }

    pub fn one() -> Self {
        NcMonomial(Vec::new())
    }

    pub fn factors(&self) -> &[GeneratorId] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for NcMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for NcMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NcMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for g in &self.0 {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Generator orders available to PBW straightening.
///
/// `Canonical` is the order of `lie::list_basis`. `LowestWeight` reverses the
/// B block (row>col first, diagonal, row<col last) so that the generators
/// annihilating a lowest-weight vector end up rightmost.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PbwOrder {
    Canonical,
    LowestWeight,
}

impl PbwOrder {
    pub fn cmp(&self, a: &GeneratorId, b: &GeneratorId) -> Ordering {
        match self {
            PbwOrder::Canonical => a.cmp(b),
            PbwOrder::LowestWeight => {
                let key = |g: &GeneratorId| {
                    let kind_rank = match g.kind() {
                        GenKind::Eplus => 0u8,
                        GenKind::Eminus => 1,
                        GenKind::Bgen => 2,
                    };
                    let class = if g.kind() == GenKind::Bgen {
                        match g.k().cmp(&g.l()) {
                            Ordering::Greater => 0u8,
                            Ordering::Equal => 1,
                            Ordering::Less => 2,
                        }
                    } else {
                        0
                    };
                    (kind_rank, class, g.k(), g.l())
                };
                key(a).cmp(&key(b))
            }
        }
    }
}

/// An element of the enveloping algebra at a fixed rank: a finite map from
/// monomials to λ-polynomial coefficients, with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NcPoly {
    rank: usize,
    terms: BTreeMap<NcMonomial, LambdaPoly>,
}

fn assert_fits(g: GeneratorId, rank: usize) {
    assert!(
        g.max_index() as usize <= rank,
        "generator {g} does not fit rank {rank}"
    );
}

impl NcPoly {
    pub fn zero(rank: usize) -> Self {
        NcPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        NcPoly::constant(rank, LambdaPoly::one())
    }

    pub fn constant(rank: usize, c: LambdaPoly) -> Self {
        let mut p = NcPoly::zero(rank);
        p.insert_add(NcMonomial::one(), c);
        p
    }

    pub fn generator(rank: usize, g: GeneratorId) -> Self {
        assert_fits(g, rank);
        let mut p = NcPoly::zero(rank);
        p.insert_add(NcMonomial::new(vec![g]), LambdaPoly::one());
        p
    }

    pub fn monomial(rank: usize, factors: Vec<GeneratorId>, coeff: LambdaPoly) -> Self {
        for g in &factors {
            assert_fits(*g, rank);
        }
        let mut p = NcPoly::zero(rank);
        p.insert_add(NcMonomial::new(factors), coeff);
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NcMonomial, &LambdaPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &NcMonomial) -> Option<&LambdaPoly> {
        self.terms.get(mono)
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// True when every coefficient is a plain rational.
    pub fn has_rational_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_constant())
    }

    pub fn max_lambda_degree(&self) -> usize {
        self.terms
            .values()
            .map(|c| c.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn insert_add(&mut self, mono: NcMonomial, coeff: LambdaPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &coeff;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub(crate) fn add_generator_term(&mut self, g: GeneratorId, c: Rat) {
        assert_fits(g, self.rank);
        self.insert_add(NcMonomial::new(vec![g]), LambdaPoly::constant(c));
    }

    pub fn scale_rat(&self, c: &Rat) -> NcPoly {
        self.scale(&LambdaPoly::constant(c.clone()))
    }

    pub fn scale(&self, c: &LambdaPoly) -> NcPoly {
        let mut out = NcPoly::zero(self.rank);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.insert_add(m.clone(), v * c);
        }
        out
    }

    pub fn is_pbw_normal_with(&self, order: PbwOrder) -> bool {
        self.terms
            .keys()
            .all(|m| first_inversion(m.factors(), order).is_none())
    }

    /// PBW normal form in the canonical generator order.
    pub fn pbw_normalize(&self) -> NcPoly {
        self.pbw_normalize_with(PbwOrder::Canonical)
    }

    /// PBW normal form with respect to the given order. The result is the
    /// unique normal representative; the rewrite schedule (largest monomial
    /// first, leftmost inversion) only affects speed.
    pub fn pbw_normalize_with(&self, order: PbwOrder) -> NcPoly {
        let mut result = NcPoly::zero(self.rank);
        let mut work: BTreeMap<NcMonomial, LambdaPoly> = self.terms.clone();
        while let Some((mono, coeff)) = work.pop_last() {
            if coeff.is_zero() {
                continue;
            }
            match first_inversion(mono.factors(), order) {
                None => result.insert_add(mono, coeff),
                Some(i) => {
                    let x = mono.factors()[i];
                    let y = mono.factors()[i + 1];
                    let mut swapped = mono.factors().to_vec();
                    swapped.swap(i, i + 1);
                    merge(&mut work, NcMonomial::new(swapped), coeff.clone());
                    for (c, g) in bracket_terms(x, y) {
                        let mut rest = Vec::with_capacity(mono.degree() - 1);
                        rest.extend_from_slice(&mono.factors()[..i]);
                        rest.push(g);
                        rest.extend_from_slice(&mono.factors()[i + 2..]);
                        merge(&mut work, NcMonomial::new(rest), coeff.scale(&rat(c)));
                    }
                }
            }
        }
        result
    }

    /// pq - qp, not normalized.
    pub fn commutator(&self, rhs: &NcPoly) -> NcPoly {
        &(self * rhs) - &(rhs * self)
    }
}

fn first_inversion(factors: &[GeneratorId], order: PbwOrder) -> Option<usize> {
    factors
        .windows(2)
        .position(|w| order.cmp(&w[0], &w[1]) == Ordering::Greater)
}

fn merge(map: &mut BTreeMap<NcMonomial, LambdaPoly>, mono: NcMonomial, add: LambdaPoly) {
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

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_add(m.clone(), -c);
        }
        out
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = NcPoly::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut factors = Vec::with_capacity(ma.degree() + mb.degree());
                factors.extend_from_slice(ma.factors());
                factors.extend_from_slice(mb.factors());
                out.insert_add(NcMonomial::new(factors), ca * cb);
            }
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::text(self))
    }
}

/// A commutative polynomial in one variable per generator, used for the
/// top-degree symbol. Monomials are kept sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolPoly {
    rank: usize,
    terms: BTreeMap<NcMonomial, LambdaPoly>,
}

impl SymbolPoly {
    pub fn zero(rank: usize) -> Self {
        SymbolPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NcMonomial, &LambdaPoly)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, mono: NcMonomial, coeff: LambdaPoly) {
        merge(&mut self.terms, mono, coeff);
    }

    pub fn scale_rat(&self, c: &Rat) -> SymbolPoly {
        if c.is_zero() {
            return SymbolPoly::zero(self.rank);
        }
        SymbolPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.scale(c)))
                .collect(),
        }
    }

    /// Some(c) when self = c * other exactly.
    pub fn rational_multiple_of(&self, other: &SymbolPoly) -> Option<Rat> {
        if other.is_zero() {
            return if self.is_zero() {
                Some(Rat::zero())
            } else {
                None
            };
        }
        let (mono, coeff) = other.terms.iter().next().expect("nonzero");
        let denom = coeff
            .as_rational()
            .expect("symbol comparison needs rational coefficients");
        let numer = self
            .terms
            .get(mono)
            .map(|c| c.as_rational().expect("rational coefficients"))
            .unwrap_or_else(Rat::zero);
        let c = numer / denom;
        if *self == other.scale_rat(&c) {
            Some(c)
        } else {
            None
        }
    }
}

impl Mul for &SymbolPoly {
    type Output = SymbolPoly;
    fn mul(self, rhs: &SymbolPoly) -> SymbolPoly {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = SymbolPoly::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut factors = Vec::with_capacity(ma.degree() + mb.degree());
                factors.extend_from_slice(ma.factors());
                factors.extend_from_slice(mb.factors());
                factors.sort();
                out.insert_add(NcMonomial::new(factors), ca * cb);
            }
        }
        out
    }
}

/// The degree-d part of p with generators made commutative; lower-degree
/// terms are discarded.
pub fn commutative_symbol(p: &NcPoly, d: usize) -> SymbolPoly {
    let mut out = SymbolPoly::zero(p.rank());
    for (mono, coeff) in p.terms() {
        if mono.degree() != d {
            continue;
        }
        let mut factors = mono.factors().to_vec();
        factors.sort();
        out.insert_add(NcMonomial::new(factors), coeff.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{list_basis, GeneratorId};
    use crate::scalar::{rat, ratio};

    fn ep(k: u16, l: u16) -> GeneratorId {
        GeneratorId::e_plus(k, l)
    }

    fn em(k: u16, l: u16) -> GeneratorId {
        GeneratorId::e_minus(k, l)
    }

    fn b(k: u16, l: u16) -> GeneratorId {
        GeneratorId::b(k, l)
    }

    #[test]
    fn ring_basics() {
        let p = NcPoly::generator(1, ep(1, 1));
        let q = NcPoly::generator(1, em(1, 1));
        let prod = &p * &q;
        assert_eq!(prod.num_terms(), 1);
        assert_eq!(
            prod.coefficient(&NcMonomial::new(vec![ep(1, 1), em(1, 1)]))
                .and_then(|c| c.as_rational()),
            Some(rat(1))
        );
        assert!((&p - &p).is_zero());
        assert_eq!(&NcPoly::one(1) * &p, p);
    }

    #[test]
    fn straighten_e_minus_e_plus() {
        // E-11 E+11 -> E+11 E-11 - 4 B11
        let p = NcPoly::monomial(1, vec![em(1, 1), ep(1, 1)], LambdaPoly::one());
        let n = p.pbw_normalize();
        let mut expect = NcPoly::monomial(1, vec![ep(1, 1), em(1, 1)], LambdaPoly::one());
        expect.insert_add(NcMonomial::new(vec![b(1, 1)]), LambdaPoly::from_int(-4));
        assert_eq!(n, expect);
    }

    #[test]
    fn normal_monomial_is_fixed_point() {
        let p = NcPoly::monomial(2, vec![ep(1, 1), em(1, 2), b(1, 1)], LambdaPoly::one());
        assert!(p.is_pbw_normal_with(PbwOrder::Canonical));
        assert_eq!(p.pbw_normalize(), p);
    }

    #[test]
    fn normalize_is_idempotent() {
        let p = NcPoly::monomial(
            2,
            vec![b(2, 1), em(1, 2), ep(2, 2)],
            LambdaPoly::from_int(3),
        );
        let n1 = p.pbw_normalize();
        let n2 = n1.pbw_normalize();
        assert_eq!(n1, n2);
        assert!(n1.is_pbw_normal_with(PbwOrder::Canonical));
    }

    #[test]
    fn normalize_respects_products() {
        let p = NcPoly::monomial(2, vec![em(1, 1), b(1, 2)], LambdaPoly::one());
        let q = NcPoly::monomial(2, vec![b(2, 1), ep(1, 2)], LambdaPoly::from_int(2));
        let lhs = (&p * &q).pbw_normalize();
        let rhs = (&p.pbw_normalize() * &q.pbw_normalize()).pbw_normalize();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_examples() {
        let p = NcPoly::generator(1, ep(1, 1));
        assert!(p.commutator(&p).is_zero());

        let q = NcPoly::generator(1, em(1, 1));
        let c = p.commutator(&q).pbw_normalize();
        let mut expect = NcPoly::zero(1);
        expect.insert_add(NcMonomial::new(vec![b(1, 1)]), LambdaPoly::from_int(4));
        assert_eq!(c, expect);

        let bb = NcPoly::generator(1, b(1, 1));
        let c = bb.commutator(&p).pbw_normalize();
        let mut expect = NcPoly::zero(1);
        expect.insert_add(NcMonomial::new(vec![ep(1, 1)]), LambdaPoly::from_int(2));
        assert_eq!(c, expect);
    }

    #[test]
    fn lowest_weight_order_reverses_b_block() {
        let order = PbwOrder::LowestWeight;
        // row>col before diagonal before row<col
        assert_eq!(order.cmp(&b(2, 1), &b(1, 1)), Ordering::Less);
        assert_eq!(order.cmp(&b(1, 1), &b(1, 2)), Ordering::Less);
        // E blocks unchanged
        assert_eq!(order.cmp(&ep(1, 2), &em(1, 1)), Ordering::Less);
    }

    #[test]
    fn symbol_projection() {
        // symbol of E+11 E-11 - 4 B11 at degree 2 keeps only the product term
        let mut p = NcPoly::monomial(1, vec![ep(1, 1), em(1, 1)], LambdaPoly::one());
        p.insert_add(NcMonomial::new(vec![b(1, 1)]), LambdaPoly::from_int(-4));
        let s = commutative_symbol(&p, 2);
        assert_eq!(s.num_terms(), 1);
        let s3 = commutative_symbol(&p, 3);
        assert!(s3.is_zero());
        // commutative merge: E-11 E+11 and E+11 E-11 collapse
        let q = NcPoly::monomial(1, vec![em(1, 1), ep(1, 1)], LambdaPoly::one());
        let merged = commutative_symbol(&(&p + &q), 2);
        assert_eq!(merged.num_terms(), 1);
        let (_, c) = merged.terms().next().unwrap();
        assert_eq!(c.as_rational(), Some(rat(2)));
    }

    #[test]
    fn symbol_multiples() {
        let p = NcPoly::monomial(1, vec![ep(1, 1), em(1, 1)], LambdaPoly::one());
        let s = commutative_symbol(&p, 2);
        let doubled = s.scale_rat(&rat(2));
        assert_eq!(doubled.rational_multiple_of(&s), Some(rat(2)));
        assert_eq!(s.rational_multiple_of(&doubled), Some(ratio(1, 2)));
        let sq = &s * &s;
        assert_eq!(sq.rational_multiple_of(&s), None);
    }

    #[test]
    fn normalized_commutator_with_basis_detects_noncentral() {
        // a single generator is not central
        let p = NcPoly::generator(1, ep(1, 1));
        let basis = list_basis(1).unwrap();
        let central = basis.iter().all(|g| {
            p.commutator(&NcPoly::generator(1, *g))
                .pbw_normalize()
                .is_zero()
        });
        assert!(!central);
    }

    #[test]
    #[should_panic(expected = "rank mismatch")]
    fn rank_mismatch_panics() {
        let p = NcPoly::generator(1, ep(1, 1));
        let q = NcPoly::generator(2, ep(1, 2));
        let _ = &p + &q;
    }
}
