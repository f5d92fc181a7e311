//! Matroids on `{1, ..., n}` as explicit rank tables indexed by subset bitmask.

use crate::error::{Axiom, Error, Result};
use crate::perm::Permutation;
use crate::subset::{self, Subset};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Validation knobs for constructors that take untrusted rank data.
#[derive(Debug, Clone, Copy)]
pub struct Validation {
    /// Constructors reject ground sets larger than this.
    pub size_cap: usize,
    /// The submodularity check is O(4^n); it runs only for n up to this bound.
    pub submodularity_cap: usize,
}

impl Default for Validation {
    fn default() -> Self {
        Validation {
            size_cap: Matroid::MAX_GROUND,
            submodularity_cap: 10,
        }
    }
}

/// A matroid given by its full rank table.  Entry `ranks[mask]` is the rank
/// of the subset encoded by `mask`; equality is labeled equality of tables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: u8,
    ranks: Vec<u8>,
}

impl Matroid {
    pub const MAX_GROUND: usize = 16;

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn full_set(&self) -> Subset {
        subset::full_set(self.n())
    }

    /// Rank of a subset of the ground set.
    pub fn rank_of(&self, a: Subset) -> usize {
        debug_assert_eq!(a & !self.full_set(), 0, "subset outside ground set");
        self.ranks[a as usize] as usize
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        self.rank_of(self.full_set())
    }

    pub fn nullity(&self) -> usize {
        self.n() - self.rank()
    }

    pub fn rank_table(&self) -> &[u8] {
        &self.ranks
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank_of(a) == subset::size(a)
    }

    /// Smallest superset of `a` with the same rank.
    pub fn closure(&self, a: Subset) -> Subset {
        let r = self.rank_of(a);
        let mut out = a;
        for e in subset::elements(self.full_set() & !a) {
            if self.rank_of(a | subset::singleton(e)) == r {
                out |= subset::singleton(e);
            }
        }
        out
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.closure(a) == a
    }

    /// All bases, as masks in ascending numeric order.
    pub fn bases(&self) -> Vec<Subset> {
        let r = self.rank();
        subset::subsets_of(self.full_set())
            .filter(|&a| subset::size(a) == r && self.rank_of(a) == r)
            .collect()
    }

    /// The set of loops (elements of rank zero).
    pub fn loops(&self) -> Subset {
        self.closure(0)
    }

    pub fn from_rank_table(n: usize, ranks: Vec<u8>) -> Result<Self> {
        Self::from_rank_table_with(n, ranks, &Validation::default())
    }

    pub fn from_rank_table_with(n: usize, ranks: Vec<u8>, v: &Validation) -> Result<Self> {
        if n > v.size_cap {
            return Err(Error::SizeCapExceeded {
                what: "ground set",
                n,
                cap: v.size_cap,
            });
        }
        if ranks.len() != 1usize << n {
            return Err(Error::DomainError(format!(
                "rank table has {} entries, expected {}",
                ranks.len(),
                1usize << n
            )));
        }
        let m = Matroid { n: n as u8, ranks };
        m.validate_axioms(v)?;
        Ok(m)
    }

    /// Builds the rank table without validating axioms.  For internal use by
    /// operations that provably preserve the axioms.
    pub(crate) fn from_parts_unchecked(n: usize, ranks: Vec<u8>) -> Self {
        debug_assert_eq!(ranks.len(), 1usize << n);
        Matroid { n: n as u8, ranks }
    }

    /// Checks the three rank axioms.  Submodularity is skipped above
    /// `v.submodularity_cap`.
    pub fn validate_axioms(&self, v: &Validation) -> Result<()> {
        let full = self.full_set();
        if self.ranks[0] != 0 {
            return Err(Error::AxiomViolation {
                axiom: Axiom::EmptyRank,
                a: 0,
                b: 0,
            });
        }
        for a in subset::subsets_of(full) {
            let ra = self.ranks[a as usize];
            for e in subset::elements(full & !a) {
                let rx = self.ranks[(a | subset::singleton(e)) as usize];
                if rx < ra || rx > ra + 1 {
                    return Err(Error::AxiomViolation {
                        axiom: Axiom::UnitIncrease,
                        a,
                        b: a | subset::singleton(e),
                    });
                }
            }
        }
        if self.n() <= v.submodularity_cap {
            for a in subset::subsets_of(full) {
                let ra = self.ranks[a as usize] as u32;
                for b in subset::subsets_of(full) {
                    let lhs = self.ranks[(a | b) as usize] as u32
                        + self.ranks[(a & b) as usize] as u32;
                    if lhs > ra + self.ranks[b as usize] as u32 {
                        return Err(Error::AxiomViolation {
                            axiom: Axiom::Submodularity,
                            a,
                            b,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds from the list of bases, validating the exchange property.
    pub fn from_bases(n: usize, bases: &[Subset]) -> Result<Self> {
        let v = Validation::default();
        if n > v.size_cap {
            return Err(Error::SizeCapExceeded {
                what: "ground set",
                n,
                cap: v.size_cap,
            });
        }
        if bases.is_empty() {
            return Err(Error::DomainError("no bases given".into()));
        }
        let full = subset::full_set(n);
        let r = subset::size(bases[0]);
        for &b in bases {
            if b & !full != 0 {
                return Err(Error::DomainError(format!(
                    "basis {} leaves the ground set",
                    subset::format_set(b)
                )));
            }
            if subset::size(b) != r {
                return Err(Error::DomainError(
                    "bases of unequal cardinality".into(),
                ));
            }
        }
        for &b1 in bases {
            for &b2 in bases {
                for x in subset::elements(b1 & !b2) {
                    let ok = subset::elements(b2 & !b1).any(|y| {
                        let candidate = (b1 & !subset::singleton(x)) | subset::singleton(y);
                        bases.contains(&candidate)
                    });
                    if !ok {
                        return Err(Error::ExchangeViolation { b1, b2, x });
                    }
                }
            }
        }
        let ranks = subset::subsets_of(full)
            .map(|a| {
                bases
                    .iter()
                    .map(|&b| subset::size(a & b))
                    .max()
                    .unwrap() as u8
            })
            .collect();
        Ok(Matroid::from_parts_unchecked(n, ranks))
    }

    /// Uniform matroid of rank `r` on `n` elements.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::DomainError(format!(
                "uniform rank {r} exceeds ground size {n}"
            )));
        }
        let v = Validation::default();
        if n > v.size_cap {
            return Err(Error::SizeCapExceeded {
                what: "ground set",
                n,
                cap: v.size_cap,
            });
        }
        let ranks = subset::subsets_of(subset::full_set(n))
            .map(|a| subset::size(a).min(r) as u8)
            .collect();
        Ok(Matroid::from_parts_unchecked(n, ranks))
    }

    /// Free matroid: every subset independent.
    pub fn free(n: usize) -> Result<Self> {
        Self::uniform(n, n)
    }

    /// All elements loops.
    pub fn zero(n: usize) -> Result<Self> {
        Self::uniform(0, n)
    }

    /// `n` parallel copies of a single point (rank one).
    pub fn multipoint(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DomainError("multipoint needs n >= 1".into()));
        }
        Self::uniform(1, n)
    }

    /// An `n`-element circuit: every proper subset independent.
    pub fn circuit(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::DomainError("circuit needs n >= 1".into()));
        }
        Self::uniform(n - 1, n)
    }

    /// The one-element free matroid.
    pub fn point() -> Self {
        Matroid::from_parts_unchecked(1, vec![0, 1])
    }

    /// The one-element rank-zero matroid.
    pub fn loop_() -> Self {
        Matroid::from_parts_unchecked(1, vec![0, 0])
    }

    /// The empty matroid.
    pub fn empty() -> Self {
        Matroid::from_parts_unchecked(0, vec![0])
    }

    /// Restriction to `a`, relabeled to `{1, ..., |a|}` preserving order.
    pub fn restrict(&self, a: Subset) -> Matroid {
        debug_assert_eq!(a & !self.full_set(), 0);
        let k = subset::size(a);
        let ranks = subset::subsets_of(subset::full_set(k))
            .map(|b| self.ranks[subset::expand(b, a) as usize])
            .collect();
        Matroid::from_parts_unchecked(k, ranks)
    }

    /// Deletion of `a`: restriction to the complement.
    pub fn delete(&self, a: Subset) -> Matroid {
        self.restrict(self.full_set() & !a)
    }

    /// Contraction of `a`, on ground set `S - a` relabeled preserving order.
    pub fn contract(&self, a: Subset) -> Matroid {
        debug_assert_eq!(a & !self.full_set(), 0);
        let rest = self.full_set() & !a;
        let k = subset::size(rest);
        let ra = self.ranks[a as usize];
        let ranks = subset::subsets_of(subset::full_set(k))
            .map(|b| self.ranks[(subset::expand(b, rest) | a) as usize] - ra)
            .collect();
        Matroid::from_parts_unchecked(k, ranks)
    }

    /// Dual matroid: rank*(A) = |A| + rank(S - A) - rank(S).
    pub fn dual(&self) -> Matroid {
        let full = self.full_set();
        let r = self.rank() as isize;
        let ranks = subset::subsets_of(full)
            .map(|a| {
                (subset::size(a) as isize + self.ranks[(full & !a) as usize] as isize - r) as u8
            })
            .collect();
        Matroid::from_parts_unchecked(self.n(), ranks)
    }

    /// Direct sum; the summands keep their relative order, with `other`
    /// relabeled to `{n1 + 1, ..., n1 + n2}`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n() + other.n();
        if n > Matroid::MAX_GROUND {
            return Err(Error::SizeCapExceeded {
                what: "direct sum ground set",
                n,
                cap: Matroid::MAX_GROUND,
            });
        }
        let left_full = self.full_set();
        let ranks = subset::subsets_of(subset::full_set(n))
            .map(|a| {
                self.ranks[(a & left_full) as usize] + other.ranks[(a >> self.n()) as usize]
            })
            .collect();
        Ok(Matroid::from_parts_unchecked(n, ranks))
    }

    /// Relabels along `sigma`: element `i` of the result is element
    /// `sigma(i)` of `self`.
    pub fn relabel(&self, sigma: &Permutation) -> Matroid {
        assert_eq!(sigma.n(), self.n());
        let n = self.n();
        let mut ranks = vec![0u8; 1 << n];
        for a in subset::subsets_of(self.full_set()) {
            let image = subset::elements(a)
                .map(|i| subset::singleton(sigma.image(i)))
                .fold(0, |m, b| m | b);
            ranks[a as usize] = self.ranks[image as usize];
        }
        Matroid::from_parts_unchecked(n, ranks)
    }
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matroid(n={}, rank={}, ranks={:?})", self.n, self.rank(), self.ranks)
    }
}

/// A flag of strictly nested subsets `S_0 < S_1 < ... < S_r = {1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagSpec {
    n: u8,
    sets: Vec<Subset>,
}

impl FlagSpec {
    pub fn new(n: usize, sets: Vec<Subset>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidFlag("flag has no sets".into()));
        }
        let full = subset::full_set(n);
        if *sets.last().unwrap() != full {
            return Err(Error::InvalidFlag(format!(
                "last set {} is not the ground set",
                subset::format_set(*sets.last().unwrap())
            )));
        }
        for w in sets.windows(2) {
            if w[0] & !w[1] != 0 || w[0] == w[1] {
                return Err(Error::InvalidFlag(format!(
                    "{} is not a proper subset of {}",
                    subset::format_set(w[0]),
                    subset::format_set(w[1])
                )));
            }
        }
        Ok(FlagSpec {
            n: n as u8,
            sets,
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Rank of the matroid this flag presents.
    pub fn r(&self) -> usize {
        self.sets.len() - 1
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }
}

/// Rank table of the independence family `{ I : |I n sets[i]| <= i }`.
///
/// The chain may contain repeats (as arises when deleting from a flag); the
/// family is then still the independent-set family of a matroid, and ranks
/// are computed greedily.
pub(crate) fn rank_table_from_chain(n: usize, sets: &[Subset]) -> Vec<u8> {
    let full = subset::full_set(n);
    let mut ranks = vec![0u8; 1 << n];
    let mut counts = vec![0usize; sets.len()];
    for a in subset::subsets_of(full) {
        counts.iter_mut().for_each(|c| *c = 0);
        let mut size = 0u8;
        for e in subset::elements(a) {
            let bit = subset::singleton(e);
            let ok = sets
                .iter()
                .enumerate()
                .all(|(i, &s)| s & bit == 0 || counts[i] + 1 <= i);
            if ok {
                for (i, &s) in sets.iter().enumerate() {
                    if s & bit != 0 {
                        counts[i] += 1;
                    }
                }
                size += 1;
            }
        }
        ranks[a as usize] = size;
    }
    ranks
}

impl Matroid {
    /// Matroid presented by a flag: independent sets are those meeting each
    /// `S_i` in at most `i` elements.
    pub fn from_flag(flag: &FlagSpec) -> Result<Self> {
        let n = flag.n();
        let v = Validation::default();
        if n > v.size_cap {
            return Err(Error::SizeCapExceeded {
                what: "ground set",
                n,
                cap: v.size_cap,
            });
        }
        let ranks = rank_table_from_chain(n, flag.sets());
        let m = Matroid::from_parts_unchecked(n, ranks);
        debug_assert!(m.validate_axioms(&v).is_ok());
        debug_assert_eq!(m.rank(), flag.r());
        Ok(m)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatroidInput {
    Ranks { n: usize, ranks: Vec<u8> },
    Bases { n: usize, bases: Vec<Vec<usize>> },
}

impl Serialize for Matroid {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Matroid", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("ranks", &self.ranks)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Matroid {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let input = MatroidInput::deserialize(d)?;
        let built = match input {
            MatroidInput::Ranks { n, ranks } => Matroid::from_rank_table(n, ranks),
            MatroidInput::Bases { n, bases } => {
                let masks: Vec<Subset> = bases
                    .iter()
                    .map(|b| subset::from_elements(b.iter().copied()))
                    .collect();
                Matroid::from_bases(n, &masks)
            }
        };
        built.map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::from_elements;

    #[test]
    fn uniform_ranks() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.rank(), 2);
        assert_eq!(u.rank_of(from_elements([1])), 1);
        assert_eq!(u.rank_of(from_elements([1, 3, 4])), 2);
        assert_eq!(u.bases().len(), 6);
        assert!(Matroid::uniform(5, 4).is_err());
    }

    #[test]
    fn rank_table_validation_catches_bad_tables() {
        // rank(empty) != 0
        let e = Matroid::from_rank_table(1, vec![1, 1]).unwrap_err();
        assert!(matches!(
            e,
            Error::AxiomViolation { axiom: Axiom::EmptyRank, .. }
        ));
        // rank jumps by 2
        let e = Matroid::from_rank_table(1, vec![0, 2]).unwrap_err();
        assert!(matches!(
            e,
            Error::AxiomViolation { axiom: Axiom::UnitIncrease, .. }
        ));
        // monotone, unit steps, but not submodular:
        // rank{1}=1, rank{2}=1, rank{1,2}=2, rank{3}=1, rank{1,3}=1, rank{2,3}=1, all=2
        let table = vec![0, 1, 1, 2, 1, 1, 1, 2];
        let e = Matroid::from_rank_table(3, table).unwrap_err();
        assert!(matches!(
            e,
            Error::AxiomViolation { axiom: Axiom::Submodularity, .. }
        ));
    }

    #[test]
    fn from_bases_detects_exchange_failure() {
        // {1,2} and {3,4} without the mixed pairs
        let bad = [from_elements([1, 2]), from_elements([3, 4])];
        let e = Matroid::from_bases(4, &bad).unwrap_err();
        assert!(matches!(e, Error::ExchangeViolation { .. }));
        let u = Matroid::uniform(2, 4).unwrap();
        let rebuilt = Matroid::from_bases(4, &u.bases()).unwrap();
        assert_eq!(rebuilt, u);
    }

    #[test]
    fn minors_of_uniform() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u.restrict(from_elements([1, 2, 3])), Matroid::uniform(2, 3).unwrap());
        assert_eq!(u.contract(from_elements([1])), Matroid::uniform(1, 3).unwrap());
        assert_eq!(u.delete(from_elements([4])), Matroid::uniform(2, 3).unwrap());
        assert_eq!(u.dual(), Matroid::uniform(2, 4).unwrap());
    }

    #[test]
    fn direct_sum_ranks_add() {
        let p = Matroid::point();
        let l = Matroid::loop_();
        let sum = p.direct_sum(&l).unwrap();
        assert_eq!(sum.rank_table(), &[0, 1, 0, 1]);
        let sum2 = l.direct_sum(&p).unwrap();
        assert_eq!(sum2.rank_table(), &[0, 0, 1, 1]);
    }

    #[test]
    fn closure_and_loops() {
        // loop 1, parallel pair {2,3}, coloop 4
        let m = Matroid::loop_()
            .direct_sum(&Matroid::multipoint(2).unwrap())
            .unwrap()
            .direct_sum(&Matroid::point())
            .unwrap();
        assert_eq!(m.loops(), from_elements([1]));
        assert_eq!(m.closure(from_elements([2])), from_elements([1, 2, 3]));
        assert!(m.is_closed(from_elements([1, 2, 3])));
        assert!(!m.is_closed(from_elements([2])));
    }

    #[test]
    fn flag_matroid_ranks() {
        // S_0 = {1}, S_1 = {1,2,3}, S_2 = {1,2,3,4}
        let flag = FlagSpec::new(
            4,
            vec![from_elements([1]), from_elements([1, 2, 3]), from_elements([1, 2, 3, 4])],
        )
        .unwrap();
        let m = Matroid::from_flag(&flag).unwrap();
        assert_eq!(m.rank_of(from_elements([1])), 0);
        assert_eq!(m.rank_of(from_elements([2, 3])), 1);
        assert_eq!(m.rank_of(from_elements([2, 4])), 2);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn flag_validation() {
        assert!(FlagSpec::new(2, vec![from_elements([1])]).is_err());
        assert!(FlagSpec::new(2, vec![from_elements([1]), from_elements([1])]).is_err());
        assert!(FlagSpec::new(
            2,
            vec![from_elements([2]), from_elements([1, 2])]
        )
        .is_ok());
    }

    #[test]
    fn json_round_trip_and_bases_input() {
        let u = Matroid::uniform(2, 3).unwrap();
        let js = serde_json::to_string(&u).unwrap();
        assert_eq!(js, r#"{"n":3,"ranks":[0,1,1,2,1,2,2,2]}"#);
        let back: Matroid = serde_json::from_str(&js).unwrap();
        assert_eq!(back, u);
        let from_bases: Matroid =
            serde_json::from_str(r#"{"n":3,"bases":[[1,2],[1,3],[2,3]]}"#).unwrap();
        assert_eq!(from_bases, u);
        assert!(serde_json::from_str::<Matroid>(r#"{"n":1,"ranks":[0,2]}"#).is_err());
    }

    #[test]
    fn relabel_moves_ranks() {
        // loop 1, point 2; swapping labels swaps the singleton ranks
        let m = Matroid::loop_().direct_sum(&Matroid::point()).unwrap();
        let sigma = Permutation::from_one_line(&[2, 1]).unwrap();
        let swapped = m.relabel(&sigma);
        assert_eq!(swapped.rank_table(), &[0, 1, 0, 1]);
    }
}
