//! The word statistic of a matroid: rank increments read along an ordering
//! of the ground set, and the image of that statistic over all orderings.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::perm::{factorial, for_each_permutation, Permutation};
use crate::subset::{self, Subset};
use crate::word::{subset_leq, Word};
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Largest ground set for which all `n!` orderings are enumerated.
pub const ENUMERATION_CAP: usize = 9;

/// Word of rank increments along the natural order `1, 2, ..., n`.
pub fn distinguished_word(m: &Matroid) -> Word {
    let mut letters = Vec::with_capacity(m.n());
    let mut mask: Subset = 0;
    let mut prev = 0;
    for e in 1..=m.n() {
        mask |= subset::singleton(e);
        let r = m.rank_of(mask);
        letters.push((r - prev) as u8);
        prev = r;
    }
    Word::new(letters).expect("increments are 0 or 1")
}

/// Word of rank increments along `sigma(1), sigma(2), ..., sigma(n)`.
pub fn lambda(m: &Matroid, sigma: &Permutation) -> Word {
    assert_eq!(m.n(), sigma.n());
    let mut letters = Vec::with_capacity(m.n());
    let mut mask: Subset = 0;
    let mut prev = 0;
    for i in 1..=m.n() {
        mask |= subset::singleton(sigma.image(i));
        let r = m.rank_of(mask);
        letters.push((r - prev) as u8);
        prev = r;
    }
    Word::new(letters).expect("increments are 0 or 1")
}

/// The set of words `lambda(m, sigma)` over all orderings of the ground set.
pub fn lambda_image(m: &Matroid) -> Result<BTreeSet<Word>> {
    lambda_image_with_cap(m, ENUMERATION_CAP)
}

pub fn lambda_image_with_cap(m: &Matroid, cap: usize) -> Result<BTreeSet<Word>> {
    let n = m.n();
    if n > cap {
        return Err(Error::SizeCapExceeded {
            what: "ordering enumeration",
            n,
            cap,
        });
    }
    if n == 0 {
        return Ok([Word::empty()].into_iter().collect());
    }
    let total = factorial(n);
    let chunks = (rayon::current_num_threads() * 8).max(1) as u64;
    let per = total.div_ceil(chunks);
    let image = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * per;
            let hi = ((c + 1) * per).min(total);
            let mut local = BTreeSet::new();
            if lo < hi {
                let mut sigma = Permutation::from_lex_rank(n, lo);
                for _ in lo..hi {
                    local.insert(lambda(m, &sigma));
                    if let Some(next) = sigma.next_lex() {
                        sigma = next;
                    }
                }
            }
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(image)
}

/// Number of orderings mapping to each word; the multiset version of
/// [`lambda_image`].
pub fn lambda_census(m: &Matroid) -> Result<std::collections::BTreeMap<Word, u64>> {
    let n = m.n();
    if n > ENUMERATION_CAP {
        return Err(Error::SizeCapExceeded {
            what: "ordering enumeration",
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut counts = std::collections::BTreeMap::new();
    for_each_permutation(n, |sigma| {
        *counts.entry(lambda(m, sigma)).or_insert(0u64) += 1;
    });
    Ok(counts)
}

/// True if the set is downward closed in the dominance order.
pub fn is_order_ideal(image: &BTreeSet<Word>) -> bool {
    let Some(first) = image.iter().next() else {
        return true;
    };
    let n = first.len();
    image.iter().all(|w| {
        crate::word::words_desc_lex(n, w.weight())
            .iter()
            .filter(|v| v.dominates_leq(w))
            .all(|v| image.contains(v))
    })
}

/// Words of the image not below any other member.
pub fn maximal_words(image: &BTreeSet<Word>) -> Vec<Word> {
    let mut out: Vec<Word> = image
        .iter()
        .filter(|w| {
            !image.iter().any(|v| {
                v != *w && v.weight() == w.weight() && w.dominates_leq(v)
            })
        })
        .cloned()
        .collect();
    out.sort_by(|a, b| crate::word::lex_cmp(b, a));
    out
}

/// If the image is the principal ideal below a single word, returns it.
pub fn principal_generator(image: &BTreeSet<Word>) -> Option<Word> {
    let maxima = maximal_words(image);
    match maxima.as_slice() {
        [top] => Some(top.clone()),
        _ => None,
    }
}

/// The minimum basis in the subset order; panics if no basis is comparable
/// to all others (in a matroid one always is).
pub fn minimum_basis(m: &Matroid) -> Subset {
    let bases = m.bases();
    *bases
        .iter()
        .find(|&&b| bases.iter().all(|&c| subset_leq(b, c)))
        .expect("some basis is minimum in the subset order")
}
