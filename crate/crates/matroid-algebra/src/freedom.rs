//! Freedom matroids: the matroids presented by a 0/1 word.
//!
//! A word `w` of length `n` with ones at positions `t_1 < ... < t_r` has the
//! flag `S_{k-1} = {1, ..., t_k - 1}` for `k = 1..r` and `S_r = {1, ..., n}`.
//! The same matroid arises by reading `w` left to right, adding an isthmus
//! for each 1 and a free extension for each 0; `build` runs both routes and
//! insists they agree.

use crate::error::{Error, Result};
use crate::matroid::{rank_table_from_chain, FlagSpec, Matroid};
use crate::subset::{self, Subset};
use crate::word::{subset_leq, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreedomMatroid {
    word: Word,
    matroid: Matroid,
}

impl FreedomMatroid {
    /// Builds the matroid of `word` by the flag presentation and by the
    /// letter recursion, and checks the two agree table for table.
    pub fn build(word: &Word) -> Result<Self> {
        let flag = flag_of_word(word)?;
        let by_flag = Matroid::from_flag(&flag)?;
        let mut by_recursion = Matroid::empty();
        for &x in word.letters() {
            by_recursion = if x == 1 {
                by_recursion.direct_sum(&Matroid::point())?
            } else {
                free_extension(&by_recursion)?
            };
        }
        assert_eq!(
            by_flag, by_recursion,
            "flag and recursion routes disagree for word {word}"
        );
        Ok(FreedomMatroid {
            word: word.clone(),
            matroid: by_flag,
        })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn into_matroid(self) -> Matroid {
        self.matroid
    }
}

/// The flag of initial segments presented by a word.
pub fn flag_of_word(word: &Word) -> Result<FlagSpec> {
    let n = word.len();
    let mut sets: Vec<Subset> = word
        .one_positions()
        .iter()
        .map(|&t| subset::full_set(t - 1))
        .collect();
    sets.push(subset::full_set(n));
    FlagSpec::new(n, sets)
}

/// Adds element `n + 1` freely: it extends the rank of every subset unless
/// that subset already has full rank.
pub fn free_extension(m: &Matroid) -> Result<Matroid> {
    let n = m.n() + 1;
    if n > Matroid::MAX_GROUND {
        return Err(Error::SizeCapExceeded {
            what: "free extension ground set",
            n,
            cap: Matroid::MAX_GROUND,
        });
    }
    let top = m.rank() as u8;
    let old = m.rank_table();
    let mut ranks = vec![0u8; 1 << n];
    let half = 1usize << m.n();
    ranks[..half].copy_from_slice(old);
    for (a, &r) in old.iter().enumerate() {
        ranks[half + a] = (r + 1).min(top);
    }
    Ok(Matroid::from_parts_unchecked(n, ranks))
}

/// Independence test straight from the word: `a` is independent in the
/// matroid of `w` iff `a` is above the set of one positions in the subset
/// order.
pub fn independent_by_word(w: &Word, a: Subset) -> bool {
    subset_leq(w.to_mask(), a)
}

/// Closure in the matroid of `w`, computed from the flag without rank
/// lookups: take a maximal independent `B` inside `a`, let `m` be the
/// largest index with `|B n S_m| = m`, and return `B u S_m u a`.
pub fn closure_by_word(w: &Word, a: Subset) -> Subset {
    let flag = flag_of_word(w).expect("word flag is always valid");
    let mut b: Subset = 0;
    for e in subset::elements(a) {
        if independent_by_word(w, b | subset::singleton(e)) {
            b |= subset::singleton(e);
        }
    }
    let m = (0..=flag.r())
        .filter(|&i| subset::size(b & flag.sets()[i]) == i)
        .max()
        .unwrap();
    b | flag.sets()[m] | a
}

/// Closed-set test straight from the flag: with `m` maximal such that
/// `S_m` is inside `f` and `A = f - S_m`, the set is closed iff
/// `|A n S_i| < i - m` for every `i > m`.
pub fn closed_by_word(w: &Word, f: Subset) -> bool {
    let flag = flag_of_word(w).expect("word flag is always valid");
    let m = (0..=flag.r())
        .filter(|&i| flag.sets()[i] & !f == 0)
        .max();
    let Some(m) = m else {
        // S_0 not inside f; f misses an element of the closure of the empty set
        return false;
    };
    let a = f & !flag.sets()[m];
    (m + 1..=flag.r()).all(|i| subset::size(a & flag.sets()[i]) < i - m)
}

/// Flag chains for the single-element minors of the matroid of `w`, both on
/// the ground set relabeled to `{1, ..., n-1}`.
///
/// The deletion chain removes `e` from every flag set and may repeat a set;
/// the contraction chain additionally drops the set below the first one
/// containing `e` and is always a proper flag.
pub fn minor_chains(w: &Word, e: usize) -> (Vec<Subset>, Vec<Subset>) {
    let flag = flag_of_word(w).expect("word flag is always valid");
    let keep = subset::full_set(w.len()) & !subset::singleton(e);
    let strip = |s: Subset| subset::compress(s & keep, keep);
    let deletion: Vec<Subset> = flag.sets().iter().map(|&s| strip(s)).collect();
    let k = (0..=flag.r())
        .find(|&i| subset::contains(flag.sets()[i], e))
        .unwrap();
    let contraction: Vec<Subset> = if k == 0 {
        deletion.clone()
    } else {
        flag.sets()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k - 1)
            .map(|(_, &s)| strip(s))
            .collect()
    };
    (deletion, contraction)
}

/// Matroid of a (possibly repeating) chain, for realizing minor chains.
pub fn realize_chain(n: usize, sets: &[Subset]) -> Matroid {
    Matroid::from_parts_unchecked(n, rank_table_from_chain(n, sets))
}

/// The word of the dual matroid: reverse the complement.
pub fn dual_word(w: &Word) -> Word {
    w.complement().reversed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::{from_elements, full_set};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn m(s: &str) -> Matroid {
        FreedomMatroid::build(&w(s)).unwrap().into_matroid()
    }

    #[test]
    fn flag_of_long_word() {
        let flag = flag_of_word(&w("001011001000")).unwrap();
        assert_eq!(
            flag.sets(),
            &[
                full_set(2),
                full_set(4),
                full_set(5),
                full_set(8),
                full_set(12),
            ]
        );
    }

    #[test]
    fn small_words_build_known_matroids() {
        assert_eq!(m("1"), Matroid::point());
        assert_eq!(m("0"), Matroid::loop_());
        assert_eq!(m("11"), Matroid::free(2).unwrap());
        assert_eq!(m("10"), Matroid::multipoint(2).unwrap());
        assert_eq!(m("110"), Matroid::uniform(2, 3).unwrap());
        assert_eq!(m("100"), Matroid::multipoint(3).unwrap());
        assert_eq!(m("1110"), Matroid::circuit(4).unwrap());
        assert_eq!(
            m("01"),
            Matroid::loop_().direct_sum(&Matroid::point()).unwrap()
        );
    }

    #[test]
    fn word_with_triple_point() {
        let matroid = m("001001010010");
        assert_eq!(matroid.rank(), 4);
        assert_eq!(matroid.rank_of(from_elements([3, 4, 5])), 1);
        assert_eq!(matroid.rank_of(from_elements([3, 4, 5, 6, 7])), 2);
        assert_eq!(matroid.rank_of(from_elements([3, 4, 5, 6, 7, 8, 9, 10])), 3);
        assert_eq!(matroid.loops(), from_elements([1, 2]));
    }

    #[test]
    fn independence_matches_rank() {
        for len in 0..=7 {
            for mask in crate::subset::subsets_of(full_set(len)) {
                let word = Word::from_mask(mask, len);
                let matroid = FreedomMatroid::build(&word).unwrap();
                for a in crate::subset::subsets_of(full_set(len)) {
                    assert_eq!(
                        independent_by_word(&word, a),
                        matroid.matroid().is_independent(a),
                        "word {word}, subset {}",
                        subset::format_set(a)
                    );
                }
            }
        }
    }

    #[test]
    fn closure_example() {
        assert_eq!(
            closure_by_word(&w("0101"), from_elements([2])),
            from_elements([1, 2, 3])
        );
    }

    #[test]
    fn minor_chains_match_minor_ranks() {
        for len in 1..=7 {
            for mask in crate::subset::subsets_of(full_set(len)) {
                let word = Word::from_mask(mask, len);
                let matroid = FreedomMatroid::build(&word).unwrap().into_matroid();
                for e in 1..=len {
                    let (del_chain, con_chain) = minor_chains(&word, e);
                    let by_del = realize_chain(len - 1, &del_chain);
                    let by_con = realize_chain(len - 1, &con_chain);
                    assert_eq!(by_del, matroid.delete(subset::singleton(e)), "{word} \\ {e}");
                    assert_eq!(by_con, matroid.contract(subset::singleton(e)), "{word} / {e}");
                }
            }
        }
    }

    #[test]
    fn contraction_chain_is_a_proper_flag_for_non_loops() {
        let word = w("0110");
        let matroid = m("0110");
        for e in 2..=3 {
            let (_, con) = minor_chains(&word, e);
            let flag = FlagSpec::new(3, con).unwrap();
            assert_eq!(
                Matroid::from_flag(&flag).unwrap(),
                matroid.contract(subset::singleton(e))
            );
        }
    }

    #[test]
    fn dual_word_matches_dual_matroid() {
        for len in 0..=7 {
            for mask in crate::subset::subsets_of(full_set(len)) {
                let word = Word::from_mask(mask, len);
                let dual = dual_word(&word);
                assert_eq!(dual_word(&dual), word);
                // the dual matroid is the matroid of the dual word up to the
                // label reversal i -> n + 1 - i
                let md = m(&word.to_string()).dual();
                let expected = m(&dual.to_string());
                let rev: Vec<u8> = (1..=len as u8).rev().collect();
                let relabeled = if len == 0 {
                    md.clone()
                } else {
                    md.relabel(&crate::perm::Permutation::from_one_line(&rev).unwrap())
                };
                assert_eq!(relabeled, expected, "word {word}");
            }
        }
    }
}
