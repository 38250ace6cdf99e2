//! Words over the alphabet {E+, E-, B, B*}: admissibility, enumeration,
//! the sign exponent L(w), and expansion of formal traces into the
//! enveloping algebra.
//!
//! Admissibility is cyclic: each letter constrains its successor (E+ -> E-
//! or B*, E- -> E+ or B, B -> E+ or B, B* -> E- or B*), including the pair
//! (last, first), and E+ must occur as often as E-. The "unbalanced"
//! enumerator drops the wrap-around and instead requires the E+ and E-
//! multiplicities to differ by exactly one; it exists as a combinatorial
//! self-test of the 4^r count.

use crate::envelope::{NcMonomial, NcPoly};
use crate::error::Error;
use crate::lambda::LambdaPoly;
use crate::lie::GeneratorId;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    EPlus,
    EMinus,
    B,
    BStar,
}

impl Letter {
    pub fn all() -> [Letter; 4] {
        [Letter::EPlus, Letter::EMinus, Letter::B, Letter::BStar]
    }

    /// May `next` directly follow `self`?
    pub fn may_precede(self, next: Letter) -> bool {
        matches!(
            (self, next),
            (Letter::EPlus, Letter::EMinus)
                | (Letter::EPlus, Letter::BStar)
                | (Letter::EMinus, Letter::EPlus)
                | (Letter::EMinus, Letter::B)
                | (Letter::B, Letter::EPlus)
                | (Letter::B, Letter::B)
                | (Letter::BStar, Letter::EMinus)
                | (Letter::BStar, Letter::BStar)
        )
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Letter::EPlus => "E+",
            Letter::EMinus => "E-",
            Letter::B => "B",
            Letter::BStar => "B*",
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::EMinus => write!(f, "E\u{2212}"),
            other => write!(f, "{}", other.ascii()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LetterWord(Vec<Letter>);

impl LetterWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self, Error> {
        if letters.is_empty() {
            return Err(Error::InvalidWordLength(0));
        }
        Ok(LetterWord(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    // Words are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word rotated left by s positions.
    pub fn rotated(&self, s: usize) -> LetterWord {
        let n = self.0.len();
        let s = s % n;
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&self.0[s..]);
        v.extend_from_slice(&self.0[..s]);
        LetterWord(v)
    }

    /// `pattern` repeated `times` times.
    pub fn repeated(pattern: &[Letter], times: usize) -> Result<Self, Error> {
        let mut v = Vec::with_capacity(pattern.len() * times);
        for _ in 0..times {
            v.extend_from_slice(pattern);
        }
        LetterWord::new(v)
    }
}

impl fmt::Display for LetterWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Cyclic adjacency rules plus equal E+ / E- multiplicities.
pub fn is_admissible(w: &LetterWord) -> bool {
    let n = w.len();
    let mut plus = 0usize;
    let mut minus = 0usize;
    for i in 0..n {
        let a = w.0[i];
        let b = w.0[(i + 1) % n];
        if !a.may_precede(b) {
            return false;
        }
        match a {
            Letter::EPlus => plus += 1,
            Letter::EMinus => minus += 1,
            _ => {}
        }
    }
    plus == minus
}

fn enumerate(len: usize, cyclic: bool, balance: i64) -> Vec<LetterWord> {
    // DFS in letter order yields lexicographic output.
    let mut out = Vec::new();
    let mut cur: Vec<Letter> = Vec::with_capacity(len);
    fn rec(
        cur: &mut Vec<Letter>,
        len: usize,
        cyclic: bool,
        balance: i64,
        out: &mut Vec<LetterWord>,
    ) {
        if cur.len() == len {
            let diff = cur
                .iter()
                .map(|l| match l {
                    Letter::EPlus => 1i64,
                    Letter::EMinus => -1,
                    _ => 0,
                })
                .sum::<i64>();
            let closed = !cyclic || cur[len - 1].may_precede(cur[0]);
            if closed && diff.abs() == balance {
                out.push(LetterWord(cur.clone()));
            }
            return;
        }
        for letter in Letter::all() {
            if let Some(&last) = cur.last() {
                if !last.may_precede(letter) {
                    continue;
                }
            }
            cur.push(letter);
            rec(cur, len, cyclic, balance, out);
            cur.pop();
        }
    }
    rec(&mut cur, len, cyclic, balance, &mut out);
    out
}

/// All admissible words of length 2r, lexicographic; there are 4^r of them.
pub fn enumerate_words(r: usize) -> Result<Vec<LetterWord>, Error> {
    if r < 1 {
        return Err(Error::InvalidWordLength(r));
    }
    Ok(enumerate(2 * r, true, 0))
}

/// Words of length 2r satisfying the adjacency rules linearly (no wrap) with
/// the E+ multiplicity off by one from E-; also 4^r of them.
pub fn enumerate_words_unbalanced(r: usize) -> Result<Vec<LetterWord>, Error> {
    if r < 1 {
        return Err(Error::InvalidWordLength(r));
    }
    Ok(enumerate(2 * r, false, 1))
}

fn pattern_at(w: &LetterWord, i: usize) -> bool {
    let n = w.len();
    let a = w.0[i];
    let b = w.0[(i + 1) % n];
    matches!(
        (a, b),
        (Letter::EMinus, Letter::B) | (Letter::B, Letter::EPlus)
    )
}

fn occurrence_positions(w: &LetterWord) -> Vec<usize> {
    (0..w.len()).filter(|&i| pattern_at(w, i)).collect()
}

// Pattern occurrences captured by one of the two perfect pairings of the
// cyclic word into adjacent letter pairs: phase 0 pairs (0,1),(2,3),...,
// phase 1 pairs (1,2),(3,4),...,(n-1,0).
fn paired_pattern_count(w: &LetterWord, phase: usize) -> usize {
    let n = w.len();
    (0..n / 2)
        .filter(|p| pattern_at(w, (2 * p + phase) % n))
        .count()
}

/// L(w) for an even-length word: the number of non-overlapping occurrences
/// of E-B and BE+ captured by a perfect pairing of the cyclic word into
/// adjacent pairs, maximized over the two possible pairings.
///
/// Rotating w by one position swaps the two pairings, so L is rotation
/// invariant; on admissible words the two counts also agree modulo 2
/// (checked exhaustively through length 12), which is all the downstream
/// sign uses. The maximum of the counts of *all* non-overlapping
/// occurrences is a strictly different (wrong) quantity: it disagrees in
/// parity on words like E+B*E-BBB, where two disjoint occurrences exist but
/// no single pairing captures both.
pub fn sign_exponent(w: &LetterWord) -> usize {
    assert!(
        w.len().is_multiple_of(2),
        "sign exponent is defined for even-length words"
    );
    paired_pattern_count(w, 0).max(paired_pattern_count(w, 1))
}

/// (-1)^L(w) as an integer.
pub fn sign_of(w: &LetterWord) -> i64 {
    if sign_exponent(w).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// True when the two cyclic pairings disagree about the sign parity; such a
/// word would need an oracle-determined sign. None exist among admissible
/// words through length 12 (checked exhaustively in tests).
pub fn sign_parity_ambiguous(w: &LetterWord) -> bool {
    paired_pattern_count(w, 0) % 2 != paired_pattern_count(w, 1) % 2
}

/// The maximum number of pairwise non-overlapping cyclic occurrences of E-B
/// and BE+, with no pairing constraint. Kept as a diagnostic: it matches
/// L(w) on every word of length <= 4 but not beyond, and its parity is not
/// the sign parity (see `sign_exponent`).
pub fn max_nonoverlapping_occurrences(w: &LetterWord) -> usize {
    let n = w.len();
    let occ = occurrence_positions(w);
    if occ.is_empty() {
        return 0;
    }
    let linear: Vec<usize> = occ.iter().copied().filter(|&i| i + 1 < n).collect();
    let greedy = |lo: usize, hi_end: usize| {
        let mut count = 0usize;
        let mut next_free = lo;
        for &i in &linear {
            if i >= next_free && i < hi_end {
                count += 1;
                next_free = i + 2;
            }
        }
        count
    };
    let mut best = greedy(0, n - 1);
    if occ.contains(&(n - 1)) && n >= 2 {
        // Take the wrapping occurrence, which blocks positions n-1 and 0.
        let inner = if n >= 4 { greedy(1, n - 2) } else { 0 };
        best = best.max(1 + inner);
    }
    best
}

/// Sizes of all maximal (non-extendable) sets of non-overlapping
/// occurrences. Diagnostic companion to `max_nonoverlapping_occurrences`:
/// overlapping occurrences only ever chain in pairs (through E-BE+
/// segments), so all maximal matchings have the same size.
pub fn maximal_matching_sizes(w: &LetterWord) -> BTreeSet<usize> {
    let n = w.len();
    let occ = occurrence_positions(w);
    assert!(occ.len() <= 20, "diagnostic is exponential in occurrences");
    let mut sizes = BTreeSet::new();
    let mut used = vec![false; n];
    fn covers(i: usize, n: usize) -> (usize, usize) {
        (i, (i + 1) % n)
    }
    fn rec(
        occ: &[usize],
        idx: usize,
        chosen: usize,
        used: &mut Vec<bool>,
        n: usize,
        sizes: &mut BTreeSet<usize>,
    ) {
        if idx == occ.len() {
            let maximal = occ.iter().all(|&i| {
                let (a, b) = covers(i, n);
                used[a] || used[b]
            });
            if maximal {
                sizes.insert(chosen);
            }
            return;
        }
        rec(occ, idx + 1, chosen, used, n, sizes);
        let (a, b) = covers(occ[idx], n);
        if !used[a] && !used[b] {
            used[a] = true;
            used[b] = true;
            rec(occ, idx + 1, chosen + 1, used, n, sizes);
            used[a] = false;
            used[b] = false;
        }
    }
    rec(&occ, 0, 0, &mut used, n, &mut sizes);
    sizes
}

fn letter_generator(letter: Letter, row: u16, col: u16) -> GeneratorId {
    match letter {
        Letter::EPlus => GeneratorId::e_plus(row, col),
        Letter::EMinus => GeneratorId::e_minus(row, col),
        Letter::B => GeneratorId::b(row, col),
        // B* is the transpose alias: entry (k,l) of B* is B_lk.
        Letter::BStar => GeneratorId::b(col, row),
    }
}

/// The formal trace of w at rank m: the sum over all cyclic index tuples of
/// the corresponding generator products, e.g. trace(E+E-) = Σ E+kl E-lk.
pub fn trace_expand(w: &LetterWord, m: usize) -> Result<NcPoly, Error> {
    if m < 1 {
        return Err(Error::InvalidRank(m));
    }
    let len = w.len();
    let mut poly = NcPoly::zero(m);
    let mut tuple = vec![1u16; len];
    loop {
        let factors: Vec<GeneratorId> = (0..len)
            .map(|pos| letter_generator(w.0[pos], tuple[pos], tuple[(pos + 1) % len]))
            .collect();
        poly.insert_add(NcMonomial::new(factors), LambdaPoly::one());
        // odometer over {1..m}^len
        let mut pos = 0;
        loop {
            if pos == len {
                return Ok(poly);
            }
            if (tuple[pos] as usize) < m {
                tuple[pos] += 1;
                break;
            }
            tuple[pos] = 1;
            pos += 1;
        }
    }
}

/// One formatted line per word: the word, L(w), and the sign.
pub fn listing_lines(r: usize, unbalanced: bool) -> Result<Vec<String>, Error> {
    let words = if unbalanced {
        enumerate_words_unbalanced(r)?
    } else {
        enumerate_words(r)?
    };
    Ok(words
        .iter()
        .map(|w| format!("{w}\tL={}\tsign={:+}", sign_exponent(w), sign_of(w)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{BStar, EMinus, EPlus, B};

    fn word(letters: &[Letter]) -> LetterWord {
        LetterWord::new(letters.to_vec()).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&word(&[EPlus, EMinus])));
        assert!(!is_admissible(&word(&[EPlus, EPlus])));
        assert!(is_admissible(&word(&[BStar, BStar])));
        assert!(is_admissible(&word(&[EPlus, BStar, EMinus, B])));
        // linearly fine but fails the wrap-around
        assert!(!is_admissible(&word(&[EPlus, BStar])));
    }

    #[test]
    fn enumerate_r1() {
        let ws = enumerate_words(1).unwrap();
        let expect = [
            word(&[EPlus, EMinus]),
            word(&[EMinus, EPlus]),
            word(&[B, B]),
            word(&[BStar, BStar]),
        ];
        assert_eq!(ws, expect);
    }

    #[test]
    fn enumerate_unbalanced_r1() {
        let ws = enumerate_words_unbalanced(1).unwrap();
        let expect = [
            word(&[EPlus, BStar]),
            word(&[EMinus, B]),
            word(&[B, EPlus]),
            word(&[BStar, EMinus]),
        ];
        assert_eq!(ws, expect);
    }

    #[test]
    fn counts_are_powers_of_four() {
        for r in 1..=5 {
            assert_eq!(enumerate_words(r).unwrap().len(), 4usize.pow(r as u32));
            assert_eq!(
                enumerate_words_unbalanced(r).unwrap().len(),
                4usize.pow(r as u32)
            );
        }
        assert!(enumerate_words(0).is_err());
    }

    #[test]
    fn enumeration_matches_predicate() {
        // every enumerated word passes, and nothing else of that length does
        for r in 1..=4 {
            let listed: BTreeSet<LetterWord> = enumerate_words(r).unwrap().into_iter().collect();
            let len = 2 * r;
            let mut count = 0usize;
            let mut stack = vec![Vec::new()];
            while let Some(cur) = stack.pop() {
                if cur.len() == len {
                    let w = LetterWord(cur);
                    if is_admissible(&w) {
                        assert!(listed.contains(&w));
                        count += 1;
                    }
                    continue;
                }
                for l in Letter::all() {
                    let mut next = cur.clone();
                    next.push(l);
                    stack.push(next);
                }
            }
            assert_eq!(count, listed.len());
        }
    }

    #[test]
    fn sign_exponent_worked_examples() {
        assert_eq!(sign_exponent(&word(&[EMinus, B, EPlus, BStar])), 1);
        assert_eq!(sign_exponent(&word(&[EMinus, B, B, EPlus])), 2);
        assert_eq!(sign_exponent(&word(&[EPlus, EMinus, B, B])), 2);
        assert_eq!(sign_exponent(&word(&[EPlus, EMinus, EPlus, EMinus])), 0);
    }

    #[test]
    fn sign_exponent_rotation_invariant() {
        for r in 1..=3 {
            for w in enumerate_words(r).unwrap() {
                let l = sign_exponent(&w);
                for s in 1..w.len() {
                    assert_eq!(sign_exponent(&w.rotated(s)), l, "word {w} rotated by {s}");
                }
            }
        }
    }

    #[test]
    fn no_parity_ambiguity_up_to_length_12() {
        for r in 1..=6 {
            for w in enumerate_words(r).unwrap() {
                assert!(!sign_parity_ambiguous(&w), "ambiguous word {w}");
            }
        }
    }

    #[test]
    fn unconstrained_matching_is_not_the_sign_rule() {
        // two disjoint occurrences, but no cyclic pairing captures both:
        // L = 1, while the unconstrained maximum is 2
        let w = word(&[EPlus, BStar, EMinus, B, B, B]);
        assert!(is_admissible(&w));
        assert_eq!(max_nonoverlapping_occurrences(&w), 2);
        assert_eq!(sign_exponent(&w), 1);
        assert_eq!(sign_of(&w), -1);
        // through length 4 the two notions still agree
        for r in 1..=2 {
            for w in enumerate_words(r).unwrap() {
                assert_eq!(sign_exponent(&w), max_nonoverlapping_occurrences(&w));
            }
        }
    }

    #[test]
    fn maximal_matchings_share_one_size() {
        for r in 1..=4 {
            for w in enumerate_words(r).unwrap() {
                assert_eq!(maximal_matching_sizes(&w).len(), 1, "word {w}");
            }
        }
    }

    #[test]
    fn trace_expansion_examples() {
        // trace(E+E-) at m=1 is the single monomial E+11 E-11
        let t = trace_expand(&word(&[EPlus, EMinus]), 1).unwrap();
        assert_eq!(t.num_terms(), 1);

        // trace(BB) at m=2 has the four index pairs
        let t = trace_expand(&word(&[B, B]), 2).unwrap();
        assert_eq!(t.num_terms(), 4);

        // trace(B*B*) = trace(BB) as polynomials
        for m in 1..=3 {
            assert_eq!(
                trace_expand(&word(&[BStar, BStar]), m).unwrap(),
                trace_expand(&word(&[B, B]), m).unwrap()
            );
        }
    }

    #[test]
    fn rotated_traces_differ_after_normalization() {
        // operators under a formal trace agree only up to commutators
        let w = word(&[EPlus, EMinus, B, B]);
        let a = trace_expand(&w, 1).unwrap().pbw_normalize();
        let b = trace_expand(&w.rotated(1), 1).unwrap().pbw_normalize();
        assert_ne!(a, b);
    }

    #[test]
    fn listing_format() {
        let lines = listing_lines(1, false).unwrap();
        assert_eq!(lines[0], "E+E\u{2212}\tL=0\tsign=+1");
        assert_eq!(lines.len(), 4);
    }
}
