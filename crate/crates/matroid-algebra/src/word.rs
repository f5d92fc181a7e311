//! Words over {0, 1}, the dominance order on words of fixed length and
//! weight, and the companion order on subsets of `{1, ..., n}`.

use crate::error::{Error, Result};
use crate::subset::{self, Subset};
use std::str::FromStr;

/// A 0/1 word, letters indexed from 1 in positions left to right.
///
/// `Ord` is the structural lexicographic order on letter sequences, used
/// for containers; the dominance order lives in [`Word::dominates_leq`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.iter().any(|&x| x > 1) {
            return Err(Error::DomainError("word letters must be 0 or 1".into()));
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|&&x| x == 1).count()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Letter at 1-indexed position.
    pub fn letter(&self, i: usize) -> u8 {
        self.letters[i - 1]
    }

    /// Positions of the ones, ascending and 1-indexed.
    pub fn one_positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.letter(i) == 1).collect()
    }

    /// The set of one positions as a mask.  Inverse of [`Word::from_mask`].
    pub fn to_mask(&self) -> Subset {
        subset::from_elements(self.one_positions())
    }

    /// Indicator word of a subset of `{1, ..., n}`.
    pub fn from_mask(mask: Subset, n: usize) -> Self {
        let letters = (1..=n)
            .map(|i| subset::contains(mask, i) as u8)
            .collect();
        Word { letters }
    }

    pub fn complement(&self) -> Self {
        Word {
            letters: self.letters.iter().map(|&x| 1 - x).collect(),
        }
    }

    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Splits into (prefix of length `k`, remaining suffix).
    pub fn split_at(&self, k: usize) -> (Word, Word) {
        (
            Word {
                letters: self.letters[..k].to_vec(),
            },
            Word {
                letters: self.letters[k..].to_vec(),
            },
        )
    }

    /// Dominance comparison of words of equal length and weight, via the
    /// 1-indexed positions of ones: `self <= other` iff the k-th one of
    /// `self` sits no later than the k-th one of `other`.
    pub fn dominates_leq(&self, other: &Word) -> bool {
        assert_eq!(self.len(), other.len());
        assert_eq!(self.weight(), other.weight());
        self.one_positions()
            .iter()
            .zip(other.one_positions())
            .all(|(&p, q)| p <= q)
    }

    /// Equivalent prefix criterion: `self <= other` iff every prefix of
    /// `self` contains at least as many ones as the same prefix of `other`.
    pub fn prefix_leq(&self, other: &Word) -> bool {
        assert_eq!(self.len(), other.len());
        assert_eq!(self.weight(), other.weight());
        let mut mine = 0usize;
        let mut theirs = 0usize;
        for i in 1..=self.len() {
            mine += self.letter(i) as usize;
            theirs += other.letter(i) as usize;
            if mine < theirs {
                return false;
            }
        }
        true
    }
}

/// Order on subsets of `{1, ..., n}` in which larger sets sit lower:
/// `a <= b` iff `|b| <= |a|` and the i-th smallest element of `a` is at most
/// the i-th smallest element of `b` for `i <= |b|`.
pub fn subset_leq(a: Subset, b: Subset) -> bool {
    if subset::size(b) > subset::size(a) {
        return false;
    }
    subset::elements(a)
        .zip(subset::elements(b))
        .all(|(x, y)| x <= y)
}

/// Lexicographic comparison of equal-length words, reading left to right.
pub fn lex_cmp(a: &Word, b: &Word) -> std::cmp::Ordering {
    a.letters().cmp(b.letters())
}

/// All words of length `n` with `r` ones, in descending lexicographic order.
///
/// This ordering is a linear extension of dominance: if `v <= w` in
/// dominance then `v` appears at or before `w`.
pub fn words_desc_lex(n: usize, r: usize) -> Vec<Word> {
    let mut out: Vec<Word> = subset::subsets_of(subset::full_set(n))
        .filter(|&m| subset::size(m) == r)
        .map(|m| Word::from_mask(m, n))
        .collect();
    out.sort_by(|a, b| lex_cmp(b, a));
    out
}

/// All words of length `n`, any weight, in descending lexicographic order.
pub fn all_words_desc_lex(n: usize) -> Vec<Word> {
    let mut out: Vec<Word> = subset::subsets_of(subset::full_set(n))
        .map(|m| Word::from_mask(m, n))
        .collect();
    out.sort_by(|a, b| lex_cmp(b, a));
    out
}

/// The lattice of words of length `n` and weight `r` under dominance.
pub struct DominanceLattice {
    n: usize,
    r: usize,
    words: Vec<Word>,
    index: std::collections::HashMap<Word, usize>,
    leq: Vec<bool>,
}

impl DominanceLattice {
    pub fn new(n: usize, r: usize) -> Self {
        let words = words_desc_lex(n, r);
        let m = words.len();
        let index = words
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();
        let mut leq = vec![false; m * m];
        for i in 0..m {
            for j in 0..m {
                leq[i * m + j] = words[i].dominates_leq(&words[j]);
            }
        }
        DominanceLattice {
            n,
            r,
            words,
            index,
            leq,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Words in descending lexicographic order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.words.len() + j]
    }

    pub fn leq(&self, v: &Word, w: &Word) -> bool {
        self.leq_idx(self.index[v], self.index[w])
    }

    /// Meet: componentwise minimum of the one-position vectors.
    pub fn meet(&self, v: &Word, w: &Word) -> Word {
        let pos: Vec<usize> = v
            .one_positions()
            .iter()
            .zip(w.one_positions())
            .map(|(&a, b)| a.min(b))
            .collect();
        Word::from_mask(subset::from_elements(pos), self.n)
    }

    /// Join: componentwise maximum of the one-position vectors.
    pub fn join(&self, v: &Word, w: &Word) -> Word {
        let pos: Vec<usize> = v
            .one_positions()
            .iter()
            .zip(w.one_positions())
            .map(|(&a, b)| a.max(b))
            .collect();
        Word::from_mask(subset::from_elements(pos), self.n)
    }

    /// Covers of `w`: exchange an adjacent "10" for "01" (one of the
    /// one-positions moves right by a single step).
    pub fn covers(&self, w: &Word) -> Vec<Word> {
        let mut out = Vec::new();
        for i in 1..self.n {
            if w.letter(i) == 1 && w.letter(i + 1) == 0 {
                let mut letters = w.letters().to_vec();
                letters.swap(i - 1, i);
                out.push(Word { letters });
            }
        }
        out
    }

    /// Cover pairs computed independently, as the transitive reduction of
    /// the comparability relation.  Oracle for [`DominanceLattice::covers`].
    pub fn covers_by_reduction(&self) -> Vec<(usize, usize)> {
        let m = self.words.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i == j || !self.leq_idx(i, j) {
                    continue;
                }
                let strictly_between = (0..m).any(|k| {
                    k != i && k != j && self.leq_idx(i, k) && self.leq_idx(k, j)
                });
                if !strictly_between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Graphviz DOT source of the Hasse diagram, edges from smaller to
    /// larger word.
    pub fn hasse_dot(&self) -> String {
        let mut s = format!("digraph dominance_{}_{} {{\n  rankdir=BT;\n", self.n, self.r);
        for w in &self.words {
            s.push_str(&format!("  \"{w}\";\n"));
        }
        let mut edges: Vec<(String, String)> = Vec::new();
        for w in &self.words {
            for c in self.covers(w) {
                edges.push((w.to_string(), c.to_string()));
            }
        }
        edges.sort();
        for (lo, hi) in edges {
            s.push_str(&format!("  \"{lo}\" -> \"{hi}\";\n"));
        }
        s.push_str("}\n");
        s
    }

    /// The principal order ideal below `w`, in descending lexicographic order.
    pub fn ideal_below(&self, w: &Word) -> Vec<Word> {
        self.words
            .iter()
            .filter(|v| self.leq(v, w))
            .cloned()
            .collect()
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "()");
        }
        for &x in &self.letters {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "()" || s.is_empty() {
            return Ok(Word::empty());
        }
        let letters: Vec<u8> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::DomainError(format!(
                    "invalid word character {c:?} in {s:?}"
                ))),
            })
            .collect::<Result<_>>()?;
        Ok(Word { letters })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::from_elements;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_display_round_trip() {
        assert_eq!(w("0101").to_string(), "0101");
        assert_eq!(Word::empty().to_string(), "()");
        assert!("012".parse::<Word>().is_err());
        assert_eq!(w("001011001000").one_positions(), vec![3, 5, 6, 9]);
    }

    #[test]
    fn mask_round_trip() {
        let word = w("0110");
        assert_eq!(word.to_mask(), from_elements([2, 3]));
        assert_eq!(Word::from_mask(from_elements([2, 3]), 4), word);
    }

    #[test]
    fn dominance_and_prefix_criteria_agree() {
        for n in 1..=7 {
            for r in 0..=n {
                let words = words_desc_lex(n, r);
                for v in &words {
                    for u in &words {
                        assert_eq!(v.dominates_leq(u), v.prefix_leq(u), "{v} vs {u}");
                    }
                }
            }
        }
    }

    #[test]
    fn descending_lex_is_linear_extension_of_dominance() {
        for n in 1..=7 {
            for r in 0..=n {
                let words = words_desc_lex(n, r);
                for (i, v) in words.iter().enumerate() {
                    for (j, u) in words.iter().enumerate() {
                        if v.dominates_leq(u) {
                            assert!(i <= j, "{v} <= {u} but listed after it");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn subset_order_examples() {
        // bigger sets are smaller; elementwise comparison on the overlap
        assert!(subset_leq(from_elements([1, 2]), from_elements([2])));
        assert!(!subset_leq(from_elements([2]), from_elements([1, 2])));
        assert!(subset_leq(from_elements([1, 3]), from_elements([2, 4])));
        assert!(!subset_leq(from_elements([2, 3]), from_elements([1, 4])));
        assert!(subset_leq(from_elements([5]), from_elements([5])));
    }

    #[test]
    fn complement_reverses_subset_order() {
        let n = 5;
        let full = crate::subset::full_set(n);
        for a in crate::subset::subsets_of(full) {
            for b in crate::subset::subsets_of(full) {
                assert_eq!(subset_leq(a, b), subset_leq(full & !b, full & !a));
            }
        }
    }

    #[test]
    fn indicator_maps_are_inverse_order_isomorphisms() {
        // chi: subsets of fixed size r to words of weight r; A <= B in the
        // subset order iff chi(A) <= chi(B) in dominance
        let n = 5;
        let full = crate::subset::full_set(n);
        for r in 0..=n {
            let masks: Vec<Subset> = crate::subset::subsets_of(full)
                .filter(|&m| crate::subset::size(m) == r)
                .collect();
            for &a in &masks {
                assert_eq!(Word::from_mask(a, n).to_mask(), a);
                for &b in &masks {
                    assert_eq!(
                        subset_leq(a, b),
                        Word::from_mask(a, n).dominates_leq(&Word::from_mask(b, n))
                    );
                }
            }
        }
    }

    #[test]
    fn lattice_meet_join_laws() {
        let lat = DominanceLattice::new(6, 3);
        for v in lat.words() {
            for u in lat.words() {
                let m = lat.meet(v, u);
                let j = lat.join(v, u);
                assert!(lat.leq(&m, v) && lat.leq(&m, u));
                assert!(lat.leq(v, &j) && lat.leq(u, &j));
                for z in lat.words() {
                    if lat.leq(z, v) && lat.leq(z, u) {
                        assert!(lat.leq(z, &m));
                    }
                    if lat.leq(v, z) && lat.leq(u, z) {
                        assert!(lat.leq(&j, z));
                    }
                }
            }
        }
    }

    #[test]
    fn covers_match_transitive_reduction() {
        for (n, r) in [(4, 2), (5, 2), (5, 3), (6, 3)] {
            let lat = DominanceLattice::new(n, r);
            let mut by_rule: Vec<(usize, usize)> = Vec::new();
            for (i, word) in lat.words().iter().enumerate() {
                for c in lat.covers(word) {
                    by_rule.push((i, lat.index_of(&c).unwrap()));
                }
            }
            by_rule.sort_unstable();
            let mut by_reduction = lat.covers_by_reduction();
            by_reduction.sort_unstable();
            assert_eq!(by_rule, by_reduction, "n={n} r={r}");
        }
    }

    #[test]
    fn reversal_is_an_antiisomorphism() {
        let lat = DominanceLattice::new(6, 3);
        for v in lat.words() {
            for u in lat.words() {
                assert_eq!(v.dominates_leq(u), u.reversed().dominates_leq(&v.reversed()));
            }
        }
    }
}
