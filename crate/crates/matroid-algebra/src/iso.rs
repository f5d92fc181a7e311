//! Canonical forms under relabeling, and the isomorphism test built on them.
//!
//! The canonical form of a matroid is the lexicographically least rank table
//! over all relabelings, comparing entries in ascending mask order.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::perm::for_each_permutation;
use lru::LruCache;
use once_cell::sync::Lazy;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::num::NonZeroUsize;
use std::sync::Mutex;

/// Default cap for canonicalization; the search is factorial in `n`.
pub const CANONICAL_CAP: usize = 9;

/// Environment variable overriding the memo cache capacity (entries).
pub const CACHE_SIZE_ENV: &str = "MATROID_ALGEBRA_CACHE_SIZE";

const DEFAULT_CACHE_CAPACITY: usize = 1 << 20;
const SHARDS: usize = 16;

/// An isomorphism-class representative: the minimal rank table, plus a short
/// digest for display and ordering.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalKey {
    matroid: Matroid,
    digest: u64,
}

impl CanonicalKey {
    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn n(&self) -> usize {
        self.matroid.n()
    }

    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }

    pub fn nullity(&self) -> usize {
        self.matroid.nullity()
    }

    pub fn digest_hex(&self) -> String {
        format!("{:016x}", self.digest)
    }
}

impl PartialOrd for CanonicalKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalKey {
    /// Sorted by (rank, nullity, digest), with the table as a final
    /// tie-break so distinct keys never compare equal.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rank(), self.nullity(), self.digest)
            .cmp(&(other.rank(), other.nullity(), other.digest))
            .then_with(|| self.matroid.rank_table().cmp(other.matroid.rank_table()))
    }
}

impl std::fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CanonicalKey(n={}, rank={}, {})",
            self.n(),
            self.rank(),
            &self.digest_hex()[..8]
        )
    }
}

fn fnv64(n: usize, table: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut step = |b: u8| {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    };
    step(n as u8);
    for &b in table {
        step(b);
    }
    h
}

/// Lexicographically minimal rank table over all relabelings.
///
/// Depth `d` fixes which original element plays label `d + 1`; that
/// determines table entries for all masks below `2^(d+1)`.  Only candidates
/// achieving the minimal block of new entries are explored further, and the
/// minimum over completed leaves is returned.
fn minimal_table(m: &Matroid) -> Vec<u8> {
    let n = m.n();
    if n == 0 {
        return m.rank_table().to_vec();
    }
    let table = m.rank_table();
    let size = 1usize << n;
    let mut old_masks = vec![0u32; size];
    let mut cur = vec![0u8; size];
    let mut best: Vec<u8> = Vec::new();
    search(table, n, 0, 0, &mut old_masks, &mut cur, &mut best);
    best
}

fn search(
    table: &[u8],
    n: usize,
    depth: usize,
    used: u32,
    old_masks: &mut [u32],
    cur: &mut [u8],
    best: &mut Vec<u8>,
) {
    let base = 1usize << depth;
    let mut argmins: Vec<usize> = Vec::new();
    let mut min_block: Vec<u8> = Vec::new();
    let mut block = vec![0u8; base];
    for x in 0..n {
        if used & (1 << x) != 0 {
            continue;
        }
        let bit = 1u32 << x;
        for m2 in 0..base {
            block[m2] = table[(old_masks[m2] | bit) as usize];
        }
        if argmins.is_empty() || block < min_block {
            min_block.clear();
            min_block.extend_from_slice(&block);
            argmins.clear();
            argmins.push(x);
        } else if block == min_block {
            argmins.push(x);
        }
    }
    cur[base..2 * base].copy_from_slice(&min_block);
    for &x in &argmins {
        let bit = 1u32 << x;
        for m2 in 0..base {
            old_masks[base + m2] = old_masks[m2] | bit;
        }
        if depth + 1 == n {
            if best.is_empty() || cur < best {
                *best = cur.to_vec();
            }
        } else {
            search(table, n, depth + 1, used | bit, old_masks, cur, best);
        }
    }
}

static CACHE: Lazy<Vec<Mutex<LruCache<Matroid, CanonicalKey>>>> = Lazy::new(|| {
    let capacity = std::env::var(CACHE_SIZE_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(DEFAULT_CACHE_CAPACITY)
        .max(SHARDS);
    (0..SHARDS)
        .map(|_| Mutex::new(LruCache::new(NonZeroUsize::new(capacity / SHARDS).unwrap())))
        .collect()
});

fn shard_of(m: &Matroid) -> usize {
    (fnv64(m.n(), m.rank_table()) as usize) % SHARDS
}

/// Canonical form with the default size cap.
pub fn canonicalize(m: &Matroid) -> Result<CanonicalKey> {
    canonicalize_with_cap(m, CANONICAL_CAP)
}

/// Canonical form; operations that knowingly work above the default cap
/// (for instance on coproduct terms) pass their own.
pub fn canonicalize_with_cap(m: &Matroid, cap: usize) -> Result<CanonicalKey> {
    if m.n() > cap {
        return Err(Error::SizeCapExceeded {
            what: "canonicalization",
            n: m.n(),
            cap,
        });
    }
    let shard = &CACHE[shard_of(m)];
    if let Some(hit) = shard.lock().unwrap().get(m) {
        return Ok(hit.clone());
    }
    let table = minimal_table(m);
    let digest = fnv64(m.n(), &table);
    let key = CanonicalKey {
        matroid: Matroid::from_parts_unchecked(m.n(), table),
        digest,
    };
    shard.lock().unwrap().put(m.clone(), key.clone());
    Ok(key)
}

pub fn are_isomorphic(a: &Matroid, b: &Matroid) -> Result<bool> {
    if a.n() != b.n() {
        return Ok(false);
    }
    Ok(canonicalize(a)? == canonicalize(b)?)
}

/// Isomorphism by searching all relabelings.  Test oracle; factorial time.
pub fn isomorphic_by_search(a: &Matroid, b: &Matroid) -> bool {
    if a.n() != b.n() || a.rank() != b.rank() {
        return false;
    }
    let mut found = false;
    for_each_permutation(a.n(), |sigma| {
        if !found && &a.relabel(sigma) == b {
            found = true;
        }
    });
    found
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CanonicalKey", 3)?;
        st.serialize_field("n", &self.matroid.n())?;
        st.serialize_field("ranks", self.matroid.rank_table())?;
        st.serialize_field("digest", &self.digest_hex())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for CanonicalKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            ranks: Vec<u8>,
        }
        let repr = Repr::deserialize(d)?;
        let m = Matroid::from_rank_table(repr.n, repr.ranks)
            .map_err(serde::de::Error::custom)?;
        canonicalize_with_cap(&m, Matroid::MAX_GROUND).map_err(serde::de::Error::custom)
    }
}
