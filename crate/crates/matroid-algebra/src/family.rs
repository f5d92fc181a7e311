//! Minor-closed families with enumerable catalogues, and the product of
//! classes computed inside such a family.

use crate::error::{Error, Result};
use crate::hopf::{section_coefficient, FormalSum};
use crate::iso::{canonicalize_with_cap, CanonicalKey};
use crate::matroid::{Matroid, Validation};
use crate::subset::{self, Subset};
use crate::word::Word;
use num::BigInt;
use once_cell::sync::Lazy;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

/// A family of isomorphism classes closed under minors, with a catalogue of
/// its members on each ground-set size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Every matroid; catalogues available for n <= 6.
    All,
    /// Matroids of 0/1 words.
    Freedom,
    /// Uniform matroids.
    Uniform,
    /// Circuits and free matroids.
    CircuitsAndFree,
    /// Rank-zero matroids.
    Zero,
    /// Free matroids only.
    Free,
    /// Freedom matroids together with direct sums involving copies of the
    /// four-element pair-of-pairs.
    FreedomWithD,
}

impl Family {
    pub fn parse(name: &str) -> Result<Family> {
        match name {
            "all" => Ok(Family::All),
            "freedom" => Ok(Family::Freedom),
            "uniform" => Ok(Family::Uniform),
            "circuits" => Ok(Family::CircuitsAndFree),
            "zero" => Ok(Family::Zero),
            "free" => Ok(Family::Free),
            "freedom+D" | "freedom+d" => Ok(Family::FreedomWithD),
            other => Err(Error::UnsupportedFamily(format!(
                "unknown family {other:?}; expected all, freedom, uniform, circuits, zero, free, or freedom+D"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::All => "all",
            Family::Freedom => "freedom",
            Family::Uniform => "uniform",
            Family::CircuitsAndFree => "circuits",
            Family::Zero => "zero",
            Family::Free => "free",
            Family::FreedomWithD => "freedom+D",
        }
    }

    /// All members with ground-set size `n`, sorted by key order.
    pub fn catalogue(&self, n: usize) -> Result<Vec<CanonicalKey>> {
        static MEMO: Lazy<Mutex<HashMap<(Family, usize), Vec<CanonicalKey>>>> =
            Lazy::new(|| Mutex::new(HashMap::new()));
        if let Some(hit) = MEMO.lock().unwrap().get(&(*self, n)) {
            return Ok(hit.clone());
        }
        let mut out: Vec<CanonicalKey> = match self {
            Family::All => all_matroid_classes(n)?,
            Family::Freedom => freedom_classes(n)?,
            Family::Uniform => (0..=n)
                .map(|r| canonical_of(&Matroid::uniform(r, n)?))
                .collect::<Result<_>>()?,
            Family::CircuitsAndFree => {
                let mut v = vec![canonical_of(&Matroid::free(n)?)?];
                if n >= 1 {
                    v.push(canonical_of(&Matroid::circuit(n)?)?);
                }
                v
            }
            Family::Zero => vec![canonical_of(&Matroid::zero(n)?)?],
            Family::Free => vec![canonical_of(&Matroid::free(n)?)?],
            Family::FreedomWithD => {
                let mut set: BTreeSet<CanonicalKey> = BTreeSet::new();
                let d = pair_of_pairs()?;
                for copies in 0..=(n / 4) {
                    let mut base = Matroid::empty();
                    for _ in 0..copies {
                        base = base.direct_sum(&d)?;
                    }
                    let rest = n - 4 * copies;
                    for mask in subset::subsets_of(subset::full_set(rest)) {
                        let w = Word::from_mask(mask, rest);
                        let m = base.direct_sum(
                            crate::freedom::FreedomMatroid::build(&w)?.matroid(),
                        )?;
                        set.insert(canonical_of(&m)?);
                    }
                }
                set.into_iter().collect()
            }
        };
        out.sort();
        out.dedup();
        MEMO.lock().unwrap().insert((*self, n), out.clone());
        Ok(out)
    }

    /// Membership of an isomorphism class.
    pub fn contains(&self, key: &CanonicalKey) -> Result<bool> {
        let m = key.matroid();
        match self {
            Family::All => Ok(true),
            // a uniform rank table is relabel-invariant, so it is its own
            // canonical form and direct comparison suffices
            Family::Uniform => Ok(*m == Matroid::uniform(m.rank(), m.n())?),
            Family::Zero => Ok(m.rank() == 0),
            Family::Free => Ok(m.rank() == m.n()),
            Family::CircuitsAndFree => {
                if m.rank() == m.n() {
                    return Ok(true);
                }
                Ok(m.n() >= 1 && *m == Matroid::circuit(m.n())?)
            }
            Family::Freedom | Family::FreedomWithD => {
                Ok(self.catalogue(m.n())?.binary_search(key).is_ok())
            }
        }
    }
}

/// The four-element rank-two matroid made of two parallel pairs.
pub fn pair_of_pairs() -> Result<Matroid> {
    let p2 = Matroid::multipoint(2)?;
    p2.direct_sum(&p2)
}

fn canonical_of(m: &Matroid) -> Result<CanonicalKey> {
    canonicalize_with_cap(m, m.n().max(crate::iso::CANONICAL_CAP))
}

/// Canonical classes of all words of length `n`.
pub fn freedom_classes(n: usize) -> Result<Vec<CanonicalKey>> {
    let masks: Vec<Subset> = subset::subsets_of(subset::full_set(n)).collect();
    let mut keys: Vec<CanonicalKey> = masks
        .par_iter()
        .map(|&mask| {
            let w = Word::from_mask(mask, n);
            canonical_of(crate::freedom::FreedomMatroid::build(&w)?.matroid())
        })
        .collect::<Result<_>>()?;
    keys.sort();
    keys.dedup();
    Ok(keys)
}

/// Word presenting the given class, if it is a freedom class.
pub fn freedom_word_of(key: &CanonicalKey) -> Result<Option<Word>> {
    static MEMO: Lazy<Mutex<HashMap<usize, BTreeMap<CanonicalKey, Word>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    let n = key.n();
    {
        let memo = MEMO.lock().unwrap();
        if let Some(map) = memo.get(&n) {
            return Ok(map.get(key).cloned());
        }
    }
    let mut map = BTreeMap::new();
    for mask in subset::subsets_of(subset::full_set(n)) {
        let w = Word::from_mask(mask, n);
        let k = canonical_of(crate::freedom::FreedomMatroid::build(&w)?.matroid())?;
        map.insert(k, w);
    }
    let out = map.get(key).cloned();
    MEMO.lock().unwrap().insert(n, map);
    Ok(out)
}

/// Short human name for a class: its word if it is a freedom class, a
/// uniform name, or a digest.
pub fn class_label(key: &CanonicalKey) -> String {
    if key.n() == 0 {
        return "()".into();
    }
    if let Ok(Some(w)) = freedom_word_of(key) {
        return w.to_string();
    }
    if let Ok(u) = Matroid::uniform(key.rank(), key.n()) {
        if key.matroid() == &u {
            return format!("U({},{})", key.rank(), key.n());
        }
    }
    format!("class:{}", &key.digest_hex()[..8])
}

/// All isomorphism classes on `n` elements, for `n <= 6`.
///
/// Sizes up to five enumerate candidate basis families directly; size six is
/// built from all single-element extensions of the five-element classes.
pub fn all_matroid_classes(n: usize) -> Result<Vec<CanonicalKey>> {
    if n > 6 {
        return Err(Error::UnsupportedFamily(format!(
            "all-matroids catalogue is available for n <= 6, asked for {n}"
        )));
    }
    if n <= 5 {
        return classes_by_basis_enumeration(n);
    }
    let base = classes_by_basis_enumeration(5)?;
    let sets: Vec<BTreeSet<CanonicalKey>> = base
        .par_iter()
        .map(|rep| {
            let mut local = BTreeSet::new();
            for ext in single_element_extensions(rep.matroid())? {
                local.insert(canonical_of(&ext)?);
            }
            Ok(local)
        })
        .collect::<Result<_>>()?;
    let mut all: BTreeSet<CanonicalKey> = BTreeSet::new();
    for s in sets {
        all.extend(s);
    }
    Ok(all.into_iter().collect())
}

fn classes_by_basis_enumeration(n: usize) -> Result<Vec<CanonicalKey>> {
    let full = subset::full_set(n);
    let mut keys: BTreeSet<CanonicalKey> = BTreeSet::new();
    for r in 0..=n {
        let r_subsets: Vec<Subset> = subset::subsets_of(full)
            .filter(|&a| subset::size(a) == r)
            .collect();
        let families: u64 = 1u64 << r_subsets.len();
        let found: Vec<CanonicalKey> = (1..families)
            .into_par_iter()
            .filter_map(|family| {
                let bases: Vec<Subset> = r_subsets
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| family >> i & 1 == 1)
                    .map(|(_, &b)| b)
                    .collect();
                let m = Matroid::from_bases(n, &bases).ok()?;
                Some(canonical_of(&m))
            })
            .collect::<Result<_>>()?;
        keys.extend(found);
    }
    Ok(keys.into_iter().collect())
}

/// Every matroid on one more element whose deletion of that element is `m`:
/// pick an up-closed family of flats to keep the new element's rank flat.
pub fn single_element_extensions(m: &Matroid) -> Result<Vec<Matroid>> {
    let n = m.n();
    let full = subset::full_set(n);
    let mut flats: Vec<Subset> = subset::subsets_of(full)
        .filter(|&f| m.is_closed(f))
        .collect();
    // supersets first, so up-closure can be enforced during the walk
    flats.sort_by_key(|&f| std::cmp::Reverse(subset::size(f)));
    let mut upsets: Vec<Vec<bool>> = Vec::new();
    let mut choice = vec![false; flats.len()];
    fn walk(
        flats: &[Subset],
        i: usize,
        choice: &mut Vec<bool>,
        out: &mut Vec<Vec<bool>>,
    ) {
        if i == flats.len() {
            out.push(choice.clone());
            return;
        }
        let f = flats[i];
        // f may be kept only if every strict superset among the earlier,
        // larger flats was kept; flats[j] is a superset of f iff f has no
        // element outside it
        let closed_up = (0..i).all(|j| choice[j] || f & !flats[j] != 0);
        if closed_up {
            choice[i] = true;
            walk(flats, i + 1, choice, out);
        }
        choice[i] = false;
        walk(flats, i + 1, choice, out);
    }
    walk(&flats, 0, &mut choice, &mut upsets);
    let validation = Validation::default();
    let mut out = Vec::new();
    for upset in upsets {
        let keep: Vec<Subset> = flats
            .iter()
            .zip(&upset)
            .filter(|&(_, &inc)| inc)
            .map(|(&f, _)| f)
            .collect();
        let mut ranks = vec![0u8; 1 << (n + 1)];
        let half = 1usize << n;
        for a in subset::subsets_of(full) {
            let r = m.rank_of(a) as u8;
            ranks[a as usize] = r;
            let in_cut = keep.contains(&m.closure(a));
            ranks[half + a as usize] = if in_cut { r } else { r + 1 };
        }
        if let Ok(ext) = Matroid::from_rank_table_with(n + 1, ranks, &validation) {
            out.push(ext);
        }
    }
    Ok(out)
}

/// The product of two classes expanded in `family`: each member of the right
/// size receives its section coefficient.  Classes outside the family are
/// projected away.
pub fn product(n1: &Matroid, n2: &Matroid, family: Family) -> Result<FormalSum> {
    let n = n1.n() + n2.n();
    let catalogue = family.catalogue(n)?;
    let terms: Vec<(CanonicalKey, BigInt)> = catalogue
        .into_par_iter()
        .map(|key| {
            if key.rank() != n1.rank() + n2.rank()
                || key.nullity() != n1.nullity() + n2.nullity()
            {
                return Ok((key, BigInt::from(0)));
            }
            let c = section_coefficient(key.matroid(), n1, n2)?;
            Ok((key, c))
        })
        .collect::<Result<_>>()?;
    let mut out = FormalSum::zero();
    for (key, coeff) in terms {
        out.add_term(key, coeff);
    }
    Ok(out)
}

/// Bilinear extension of [`product`] to sums.
pub fn product_sums(a: &FormalSum, b: &FormalSum, family: Family) -> Result<FormalSum> {
    let mut out = FormalSum::zero();
    for (ka, ca) in a.iter() {
        for (kb, cb) in b.iter() {
            let mut p = product(ka.matroid(), kb.matroid(), family)?;
            p.scale(&(ca * cb));
            out.add(&p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freedom::FreedomMatroid;
    use crate::iso::canonicalize;

    fn freedom(s: &str) -> Matroid {
        FreedomMatroid::build(&s.parse().unwrap())
            .unwrap()
            .into_matroid()
    }

    fn key(m: &Matroid) -> CanonicalKey {
        canonicalize(m).unwrap()
    }

    #[test]
    fn census_counts_match_the_literature() {
        let expected = [1usize, 2, 4, 8, 17, 38, 98];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(all_matroid_classes(n).unwrap().len(), want, "n={n}");
        }
        assert!(all_matroid_classes(7).is_err());
    }

    #[test]
    fn four_element_classes_are_freedom_plus_pair_of_pairs() {
        let all: BTreeSet<CanonicalKey> =
            all_matroid_classes(4).unwrap().into_iter().collect();
        let mut expected: BTreeSet<CanonicalKey> =
            freedom_classes(4).unwrap().into_iter().collect();
        expected.insert(key(&pair_of_pairs().unwrap()));
        assert_eq!(all, expected);
    }

    #[test]
    fn freedom_catalogue_sizes_are_powers_of_two() {
        for n in 0..=6 {
            assert_eq!(freedom_classes(n).unwrap().len(), 1 << n, "n={n}");
        }
    }

    #[test]
    fn extensions_of_a_point_are_the_two_element_matroids() {
        let exts = single_element_extensions(&Matroid::point()).unwrap();
        let keys: BTreeSet<CanonicalKey> =
            exts.iter().map(|m| key(m)).collect();
        // point + loop, double point, two free points
        assert_eq!(keys.len(), 3);
        assert!(keys.contains(&key(&freedom("10"))));
        assert!(keys.contains(&key(&freedom("11"))));
        assert!(keys.contains(&key(&freedom("01"))));
    }

    #[test]
    fn family_membership() {
        let d = key(&pair_of_pairs().unwrap());
        assert!(Family::All.contains(&d).unwrap());
        assert!(!Family::Freedom.contains(&d).unwrap());
        assert!(Family::FreedomWithD.contains(&d).unwrap());
        let u23 = key(&Matroid::uniform(2, 3).unwrap());
        assert!(Family::Uniform.contains(&u23).unwrap());
        assert!(Family::Freedom.contains(&u23).unwrap());
        assert!(Family::CircuitsAndFree.contains(&key(&Matroid::circuit(4).unwrap())).unwrap());
        assert!(!Family::CircuitsAndFree
            .contains(&key(&Matroid::multipoint(3).unwrap()))
            .unwrap());
        assert!(Family::Zero.contains(&key(&Matroid::zero(2).unwrap())).unwrap());
        assert!(Family::parse("nonsense").is_err());
    }

    #[test]
    fn single_loop_times_point() {
        // in the freedom family: loop . point = loop-plus-point exactly
        let p = product(&Matroid::loop_(), &Matroid::point(), Family::Freedom).unwrap();
        let mut expected = FormalSum::zero();
        expected.add_term(key(&freedom("01")), BigInt::from(1));
        assert_eq!(p, expected);
    }

    #[test]
    fn point_times_single_loop() {
        let p = product(&Matroid::point(), &Matroid::loop_(), Family::Freedom).unwrap();
        let mut expected = FormalSum::zero();
        expected.add_term(key(&freedom("01")), BigInt::from(1));
        expected.add_term(key(&freedom("10")), BigInt::from(2));
        assert_eq!(p, expected);
    }

    #[test]
    fn label_examples() {
        assert_eq!(class_label(&key(&freedom("0110"))), "0110");
        assert_eq!(class_label(&key(&Matroid::empty())), "()");
        let d = key(&pair_of_pairs().unwrap());
        assert!(class_label(&d).starts_with("class:"));
    }
}
