//! Permutations of `{1, ..., n}` in one-line notation, with Bruhat order.

use crate::error::{Error, Result};
use crate::subset::{self, Subset};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // images[i] = sigma(i + 1), values 1-indexed
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    pub fn from_one_line(images: &[u8]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in images {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::DomainError(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation {
            images: images.to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// sigma(i), both 1-indexed.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn one_line(&self) -> &[u8] {
        &self.images
    }

    pub fn inversions(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Covers of `self` in the Bruhat order: transpose a reversal pair
    /// (i, j), i < j, sigma(i) < sigma(j), with no intermediate value between
    /// them at an intermediate position.
    pub fn bruhat_covers(&self) -> Vec<Permutation> {
        let v = &self.images;
        let n = v.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if v[i] >= v[j] {
                    continue;
                }
                let blocked = (i + 1..j).any(|k| v[i] < v[k] && v[k] < v[j]);
                if !blocked {
                    let mut w = v.clone();
                    w.swap(i, j);
                    out.push(Permutation { images: w });
                }
            }
        }
        out
    }

    /// Bruhat comparison by the sorted-prefix dominance criterion:
    /// `self <= other` iff for every prefix length the ascending-sorted
    /// prefix of `self` is entrywise at most that of `other`.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.n(), other.n());
        let n = self.n();
        let mut a: Vec<u8> = Vec::with_capacity(n);
        let mut b: Vec<u8> = Vec::with_capacity(n);
        for i in 0..n {
            let x = self.images[i];
            let y = other.images[i];
            a.insert(a.partition_point(|&v| v < x), x);
            b.insert(b.partition_point(|&v| v < y), y);
            if a.iter().zip(&b).any(|(p, q)| p > q) {
                return false;
            }
        }
        true
    }

    /// Lexicographic successor in one-line notation, if any.
    pub fn next_lex(&self) -> Option<Permutation> {
        let mut v = self.images.clone();
        let n = v.len();
        if n < 2 {
            return None;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return None;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        Some(Permutation { images: v })
    }

    /// Permutation at position `rank` (0-based) in lexicographic order.
    pub fn from_lex_rank(n: usize, mut rank: u64) -> Permutation {
        let mut avail: Vec<u8> = (1..=n as u8).collect();
        let mut fact: u64 = (1..=n.saturating_sub(1) as u64).product();
        let mut images = Vec::with_capacity(n);
        for rem in (0..n).rev() {
            let idx = if fact == 0 { 0 } else { (rank / fact) as usize };
            images.push(avail.remove(idx));
            if rem > 0 {
                rank %= fact;
                fact /= rem as u64;
            }
        }
        Permutation { images }
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Calls `f` for every permutation of `{1, ..., n}` in lexicographic order.
pub fn for_each_permutation<F: FnMut(&Permutation)>(n: usize, mut f: F) {
    let mut cur = Permutation::identity(n);
    loop {
        f(&cur);
        match cur.next_lex() {
            Some(next) => cur = next,
            None => break,
        }
    }
}

/// The unique permutation mapping the i-th smallest element of `b` to the
/// i-th smallest element of `a` and the j-th smallest element of the
/// complement of `b` to the j-th smallest element of the complement of `a`.
pub fn shuffle(a: Subset, b: Subset, n: usize) -> Result<Permutation> {
    if subset::size(a) != subset::size(b) {
        return Err(Error::SizeMismatch(subset::size(a), subset::size(b)));
    }
    let full = subset::full_set(n);
    debug_assert_eq!(a & !full, 0);
    debug_assert_eq!(b & !full, 0);
    let mut images = vec![0u8; n];
    for (src, dst) in subset::elements(b).zip(subset::elements(a)) {
        images[src - 1] = dst as u8;
    }
    for (src, dst) in subset::elements(full & !b).zip(subset::elements(full & !a)) {
        images[src - 1] = dst as u8;
    }
    Ok(Permutation { images })
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n() <= 9 {
            for &v in &self.images {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", parts.join(" "))
        }
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Permutation({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::from_elements;
    use std::collections::HashSet;

    #[test]
    fn one_line_validation() {
        assert!(Permutation::from_one_line(&[2, 1, 3]).is_ok());
        assert!(Permutation::from_one_line(&[1, 1, 3]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[1, 4, 2]).is_err());
    }

    #[test]
    fn covers_of_1423() {
        let p = Permutation::from_one_line(&[1, 4, 2, 3]).unwrap();
        let covers: HashSet<String> = p.bruhat_covers().iter().map(|q| q.to_string()).collect();
        let expected: HashSet<String> = ["4123", "2413", "1432"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(covers, expected);
        for q in p.bruhat_covers() {
            assert_eq!(q.inversions(), p.inversions() + 1);
        }
    }

    #[test]
    fn bruhat_leq_matches_cover_closure() {
        // oracle: reflexive-transitive closure of the cover relation
        let n = 4;
        let mut all = Vec::new();
        for_each_permutation(n, |p| all.push(p.clone()));
        assert_eq!(all.len(), 24);
        let index: std::collections::HashMap<Vec<u8>, usize> = all
            .iter()
            .enumerate()
            .map(|(i, p)| (p.one_line().to_vec(), i))
            .collect();
        let mut reach = vec![vec![false; all.len()]; all.len()];
        for (i, p) in all.iter().enumerate() {
            reach[i][i] = true;
            for q in p.bruhat_covers() {
                reach[i][index[q.one_line()]] = true;
            }
        }
        // Floyd-Warshall closure
        for k in 0..all.len() {
            for i in 0..all.len() {
                if reach[i][k] {
                    for j in 0..all.len() {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        for (i, p) in all.iter().enumerate() {
            for (j, q) in all.iter().enumerate() {
                assert_eq!(p.bruhat_leq(q), reach[i][j], "{p} vs {q}");
            }
        }
        // spot check from the cover example: a relation that is not a cover
        let p = Permutation::from_one_line(&[1, 4, 2, 3]).unwrap();
        let q = Permutation::from_one_line(&[3, 4, 2, 1]).unwrap();
        assert!(p.bruhat_leq(&q));
        assert!(!p.bruhat_covers().iter().any(|c| c == &q));
    }

    #[test]
    fn lex_enumeration_and_unrank_agree() {
        let mut seen = Vec::new();
        for_each_permutation(4, |p| seen.push(p.clone()));
        assert_eq!(seen.len(), 24);
        for (i, p) in seen.iter().enumerate() {
            assert_eq!(&Permutation::from_lex_rank(4, i as u64), p);
        }
    }

    #[test]
    fn shuffle_example() {
        // A = {4,7}, B = {1,5} in {1..7}
        let sigma = shuffle(from_elements([4, 7]), from_elements([1, 5]), 7).unwrap();
        assert_eq!(sigma.to_string(), "4123756");
        assert!(shuffle(from_elements([1]), from_elements([1, 2]), 3).is_err());
    }
}
