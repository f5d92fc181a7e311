//! The restriction-contraction coproduct on isomorphism classes, with exact
//! integer coefficients.

use crate::error::{Error, Result};
use crate::iso::{canonicalize_with_cap, CanonicalKey};
use crate::matroid::Matroid;
use crate::subset::{self, Subset};
use num::BigInt;
use rayon::prelude::*;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// Default cap for coproducts: each of the `2^n` terms costs two
/// canonicalizations of size at most `n`.
pub const COPRODUCT_CAP: usize = 10;

/// Integer combination of isomorphism classes; zero coefficients are never
/// stored, and terms iterate in key order (rank, nullity, digest).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FormalSum {
    terms: BTreeMap<CanonicalKey, BigInt>,
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    pub fn from_key(key: CanonicalKey) -> Self {
        let mut s = FormalSum::zero();
        s.add_term(key, BigInt::from(1));
        s
    }

    pub fn add_term(&mut self, key: CanonicalKey, coeff: BigInt) {
        if coeff == BigInt::ZERO {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == BigInt::ZERO {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &FormalSum) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&mut self, factor: &BigInt) {
        if *factor == BigInt::ZERO {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
    }

    pub fn coeff(&self, key: &CanonicalKey) -> BigInt {
        self.terms.get(key).cloned().unwrap_or(BigInt::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn display_with<F: Fn(&CanonicalKey) -> String>(&self, label: F) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                if *c == BigInt::from(1) {
                    label(k)
                } else {
                    format!("{c} {}", label(k))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

/// Integer combination of ordered pairs of classes.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorSum {
    terms: BTreeMap<(CanonicalKey, CanonicalKey), BigInt>,
}

impl TensorSum {
    pub fn zero() -> Self {
        TensorSum::default()
    }

    pub fn add_term(&mut self, left: CanonicalKey, right: CanonicalKey, coeff: BigInt) {
        if coeff == BigInt::ZERO {
            return;
        }
        let slot = self.terms.entry((left, right)).or_insert(BigInt::ZERO);
        *slot += coeff;
        if *slot == BigInt::ZERO {
            self.terms.retain(|_, c| *c != BigInt::ZERO);
        }
    }

    pub fn coeff(&self, left: &CanonicalKey, right: &CanonicalKey) -> BigInt {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or(BigInt::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(CanonicalKey, CanonicalKey), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient_total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn display_with<F: Fn(&CanonicalKey) -> String>(&self, label: F) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((l, r), c)| {
                let body = format!("{} (x) {}", label(l), label(r));
                if *c == BigInt::from(1) {
                    body
                } else {
                    format!("{c} {body}")
                }
            })
            .collect();
        parts.join("  +  ")
    }
}

impl Serialize for FormalSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            class: &'a CanonicalKey,
            coeff: String,
        }
        let mut st = s.serialize_struct("FormalSum", 1)?;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(k, c)| Term {
                class: k,
                coeff: c.to_string(),
            })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl Serialize for TensorSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            left: &'a CanonicalKey,
            right: &'a CanonicalKey,
            coeff: String,
        }
        let mut st = s.serialize_struct("TensorSum", 1)?;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|((l, r), c)| Term {
                left: l,
                right: r,
                coeff: c.to_string(),
            })
            .collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Serializes a list of (tuple of classes, coefficient) rows; used for
/// iterated coproducts.
pub fn serialize_tuple_terms<S: Serializer>(
    terms: &BTreeMap<Vec<CanonicalKey>, BigInt>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Row<'a> {
        factors: &'a [CanonicalKey],
        coeff: String,
    }
    let mut seq = s.serialize_seq(Some(terms.len()))?;
    for (factors, coeff) in terms {
        seq.serialize_element(&Row {
            factors,
            coeff: coeff.to_string(),
        })?;
    }
    seq.end()
}

/// The coproduct: sum over all subsets `A` of restriction-by-`A` tensor
/// contraction-of-`A`, collected by isomorphism class.
pub fn coproduct(m: &Matroid) -> Result<TensorSum> {
    coproduct_with_cap(m, COPRODUCT_CAP)
}

pub fn coproduct_with_cap(m: &Matroid, cap: usize) -> Result<TensorSum> {
    let n = m.n();
    if n > cap {
        return Err(Error::SizeCapExceeded {
            what: "coproduct",
            n,
            cap,
        });
    }
    let full = m.full_set();
    let masks: Vec<Subset> = subset::subsets_of(full).collect();
    let partial: Result<Vec<BTreeMap<(CanonicalKey, CanonicalKey), BigInt>>> = masks
        .par_chunks(256.max(masks.len() / (rayon::current_num_threads() * 4).max(1)))
        .map(|chunk| {
            let mut local: BTreeMap<(CanonicalKey, CanonicalKey), BigInt> = BTreeMap::new();
            for &a in chunk {
                let left = canonicalize_with_cap(&m.restrict(a), cap)?;
                let right = canonicalize_with_cap(&m.contract(a), cap)?;
                *local.entry((left, right)).or_insert(BigInt::ZERO) += 1;
            }
            Ok(local)
        })
        .collect();
    let mut out = TensorSum::zero();
    for local in partial? {
        for ((l, r), c) in local {
            out.add_term(l, r, c);
        }
    }
    Ok(out)
}

/// Coefficient of the empty-matroid class in a sum.
pub fn counit(x: &FormalSum) -> BigInt {
    let empty = canonicalize_with_cap(&Matroid::empty(), 0).expect("empty matroid");
    x.coeff(&empty)
}

/// Number of subsets `A` with restriction isomorphic to `n1` and contraction
/// isomorphic to `n2`; the coefficient of that pair in the coproduct.
pub fn section_coefficient(m: &Matroid, n1: &Matroid, n2: &Matroid) -> Result<BigInt> {
    if n1.n() + n2.n() != m.n() {
        return Ok(BigInt::ZERO);
    }
    let cap = m.n().max(crate::iso::CANONICAL_CAP);
    let k1 = canonicalize_with_cap(n1, cap)?;
    let k2 = canonicalize_with_cap(n2, cap)?;
    let size = n1.n();
    let r1 = n1.rank();
    let r2 = n2.rank();
    if r1 + r2 != m.rank() {
        return Ok(BigInt::ZERO);
    }
    let mut count = 0u64;
    for a in subset::subsets_of(m.full_set()) {
        if subset::size(a) != size || m.rank_of(a) != r1 {
            continue;
        }
        if canonicalize_with_cap(&m.restrict(a), cap)? == k1
            && canonicalize_with_cap(&m.contract(a), cap)? == k2
        {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

/// Number of chains `empty = S_0 <= S_1 <= ... <= S_k = S` whose successive
/// quotients `(M|S_i) / S_{i-1}` realize `parts[i-1]` in order.
pub fn multisection_coefficient(m: &Matroid, parts: &[Matroid]) -> Result<BigInt> {
    if parts.iter().map(|p| p.n()).sum::<usize>() != m.n() {
        return Ok(BigInt::ZERO);
    }
    if parts.iter().map(|p| p.rank()).sum::<usize>() != m.rank() {
        return Ok(BigInt::ZERO);
    }
    let cap = m.n().max(crate::iso::CANONICAL_CAP);
    let keys: Vec<CanonicalKey> = parts
        .iter()
        .map(|p| canonicalize_with_cap(p, cap))
        .collect::<Result<_>>()?;
    let full = m.full_set();
    let mut memo: std::collections::HashMap<(Subset, usize), BigInt> =
        std::collections::HashMap::new();
    fn walk(
        m: &Matroid,
        parts: &[Matroid],
        keys: &[CanonicalKey],
        cap: usize,
        a: Subset,
        i: usize,
        full: Subset,
        memo: &mut std::collections::HashMap<(Subset, usize), BigInt>,
    ) -> Result<BigInt> {
        if i == parts.len() {
            return Ok(if a == full {
                BigInt::from(1)
            } else {
                BigInt::ZERO
            });
        }
        if let Some(hit) = memo.get(&(a, i)) {
            return Ok(hit.clone());
        }
        let want = &parts[i];
        let mut total = BigInt::ZERO;
        let rest = full & !a;
        for c in subset::subsets_of(rest) {
            if subset::size(c) != want.n() {
                continue;
            }
            let b = a | c;
            if m.rank_of(b) != m.rank_of(a) + want.rank() {
                continue;
            }
            let quotient = m.restrict(b).contract(subset::compress(a, b));
            if canonicalize_with_cap(&quotient, cap)? == keys[i] {
                total += walk(m, parts, keys, cap, b, i + 1, full, memo)?;
            }
        }
        memo.insert((a, i), total.clone());
        Ok(total)
    }
    walk(m, parts, &keys, cap, 0, 0, full, &mut memo)
}

/// The `k`-factor iterated coproduct, as a map from factor tuples to
/// coefficients.  `k = 1` is the identity.
pub fn iterated_coproduct(
    m: &Matroid,
    k: usize,
) -> Result<BTreeMap<Vec<CanonicalKey>, BigInt>> {
    assert!(k >= 1);
    let cap = m.n().max(crate::iso::CANONICAL_CAP);
    let mut acc: BTreeMap<Vec<CanonicalKey>, BigInt> = BTreeMap::new();
    acc.insert(vec![canonicalize_with_cap(m, cap)?], BigInt::from(1));
    for _ in 1..k {
        let mut next: BTreeMap<Vec<CanonicalKey>, BigInt> = BTreeMap::new();
        for (tuple, coeff) in &acc {
            let head = tuple[0].matroid();
            let split = coproduct_with_cap(head, cap.max(COPRODUCT_CAP))?;
            for ((l, r), c) in split.iter() {
                let mut t = Vec::with_capacity(tuple.len() + 1);
                t.push(l.clone());
                t.push(r.clone());
                t.extend_from_slice(&tuple[1..]);
                let slot = next.entry(t).or_insert(BigInt::ZERO);
                *slot += coeff * c;
            }
        }
        next.retain(|_, c| *c != BigInt::ZERO);
        acc = next;
    }
    Ok(acc)
}

/// Canonical class of the dual matroid.
pub fn dual_key(key: &CanonicalKey) -> Result<CanonicalKey> {
    canonicalize_with_cap(&key.matroid().dual(), key.n().max(crate::iso::CANONICAL_CAP))
}

/// Checks that dualizing commutes with the coproduct up to swapping the
/// tensor factors: the coproduct of the dual equals the factor-swapped,
/// factor-dualized coproduct.  The swap is essential and not simplified away.
pub fn coproduct_duality_holds(m: &Matroid) -> Result<bool> {
    let lhs = coproduct(&m.dual())?;
    let mut rhs = TensorSum::zero();
    for ((l, r), c) in coproduct(m)?.iter() {
        let (swapped_l, swapped_r) = (r, l);
        rhs.add_term(dual_key(swapped_l)?, dual_key(swapped_r)?, c.clone());
    }
    Ok(lhs == rhs)
}
