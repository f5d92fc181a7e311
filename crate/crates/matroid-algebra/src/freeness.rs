//! Freeness of the subalgebra generated by the single point and the single
//! loop: coefficient matrices of word products, their exact inverses, and
//! the dual basis whose coproduct is deconcatenation.

use crate::error::{Error, Result};
use crate::family::{product_sums, Family};
use crate::freedom::FreedomMatroid;
use crate::hopf::{coproduct, multisection_coefficient, FormalSum};
use crate::iso::{canonicalize_with_cap, CanonicalKey, CANONICAL_CAP};
use crate::lambda::lambda_census;
use crate::matroid::Matroid;
use crate::word::{words_desc_lex, DominanceLattice, Word};
use num::{BigInt, BigRational, One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// Dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_int_rows(rows: &[Vec<BigInt>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = RatMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigRational::from_integer(v.clone()));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(self.cols, other.rows));
        }
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == RatMatrix::identity(self.rows)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    /// Inverse of a square upper triangular matrix by back substitution.
    pub fn inverse_upper_triangular(&self) -> Result<RatMatrix> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch(self.rows, self.cols));
        }
        if !self.is_upper_triangular() {
            return Err(Error::DomainError(
                "matrix is not upper triangular".into(),
            ));
        }
        let n = self.rows;
        for i in 0..n {
            if self.get(i, i).is_zero() {
                return Err(Error::NonInvertible(format!(
                    "zero diagonal entry at position {i}"
                )));
            }
        }
        let mut inv = RatMatrix::zero(n, n);
        for j in 0..n {
            inv.set(j, j, self.get(j, j).recip());
            for i in (0..j).rev() {
                let mut acc = BigRational::zero();
                for k in i + 1..=j {
                    acc += self.get(i, k) * inv.get(k, j);
                }
                inv.set(i, j, -acc / self.get(i, i));
            }
        }
        Ok(inv)
    }

    /// Rank over the rationals by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for i in rank + 1..self.rows {
                if m[i][col].is_zero() {
                    continue;
                }
                let factor = &m[i][col] / &m[rank][col];
                for j in col..self.cols {
                    let sub = &factor * &m[rank][j];
                    m[i][j] -= sub;
                }
            }
            rank += 1;
        }
        rank
    }
}

/// Identity of the incidence algebra on a `k`-element order.
pub fn incidence_delta(k: usize) -> RatMatrix {
    RatMatrix::identity(k)
}

/// The function that is one on every ordered pair of the lattice.
pub fn incidence_zeta(lat: &DominanceLattice) -> RatMatrix {
    let k = lat.size();
    let mut z = RatMatrix::zero(k, k);
    for i in 0..k {
        for j in 0..k {
            if lat.leq_idx(i, j) {
                z.set(i, j, BigRational::one());
            }
        }
    }
    z
}

fn assert_supported(lat: &DominanceLattice, f: &RatMatrix) -> Result<()> {
    let k = lat.size();
    if f.rows() != k || f.cols() != k {
        return Err(Error::SizeMismatch(f.rows(), k));
    }
    for i in 0..k {
        for j in 0..k {
            if !f.get(i, j).is_zero() && !lat.leq_idx(i, j) {
                return Err(Error::DomainError(format!(
                    "incidence function has a value on the incomparable pair ({i}, {j})"
                )));
            }
        }
    }
    Ok(())
}

/// Convolution of two incidence functions on the lattice.
pub fn convolve(lat: &DominanceLattice, f: &RatMatrix, g: &RatMatrix) -> Result<RatMatrix> {
    assert_supported(lat, f)?;
    assert_supported(lat, g)?;
    f.mul(g)
}

/// Convolution inverse.  With `g` the inverse of `f`,
/// `g(x, x) = 1 / f(x, x)` and for `x < z`
/// `g(x, z) = -(1 / f(z, z)) * sum over x <= y < z of g(x, y) f(y, z)`;
/// the leading minus sign is what makes `g * f` collapse to the identity.
pub fn incidence_inverse(lat: &DominanceLattice, f: &RatMatrix) -> Result<RatMatrix> {
    assert_supported(lat, f)?;
    let k = lat.size();
    for i in 0..k {
        if f.get(i, i).is_zero() {
            return Err(Error::NonInvertible(format!(
                "incidence function vanishes on the diagonal at index {i}"
            )));
        }
    }
    let mut g = RatMatrix::zero(k, k);
    // index order is a linear extension, so g(x, y) for y < z is ready
    // before g(x, z) is assembled
    for x in 0..k {
        g.set(x, x, f.get(x, x).recip());
        for z in x + 1..k {
            if !lat.leq_idx(x, z) {
                continue;
            }
            let mut acc = BigRational::zero();
            for y in x..z {
                if lat.leq_idx(x, y) && lat.leq_idx(y, z) {
                    acc += g.get(x, y) * f.get(y, z);
                }
            }
            g.set(x, z, -acc / f.get(z, z));
        }
    }
    Ok(g)
}

/// Moebius function of the lattice, as the convolution inverse of zeta.
pub fn mobius(lat: &DominanceLattice) -> Result<RatMatrix> {
    incidence_inverse(lat, &incidence_zeta(lat))
}

/// Single-element matroid of a letter: a point for one, a loop for zero.
pub fn letter_matroid(letter: u8) -> Matroid {
    if letter == 1 {
        Matroid::point()
    } else {
        Matroid::loop_()
    }
}

fn letter_matroids(w: &Word) -> Vec<Matroid> {
    w.letters().iter().map(|&c| letter_matroid(c)).collect()
}

fn canonical_of(m: &Matroid) -> Result<CanonicalKey> {
    canonicalize_with_cap(m, m.n().max(CANONICAL_CAP))
}

/// Coefficients of the word products on the classes of word matroids in one
/// bidegree.  Entry `(v, w)` is the coefficient of the class of the matroid
/// of `w` in the expansion of the product of the letters of `v`.
///
/// Each entry is computed twice, by counting orderings with a prescribed
/// rank-increment word and as a multisection coefficient, and the two counts
/// are asserted equal.
pub struct CoeffMatrix {
    lattice: DominanceLattice,
    entries: Vec<Vec<BigInt>>,
}

impl CoeffMatrix {
    pub fn build(n: usize, r: usize) -> Result<CoeffMatrix> {
        let lattice = DominanceLattice::new(n, r);
        let words = lattice.words().to_vec();
        let columns: Vec<Vec<BigInt>> = words
            .par_iter()
            .map(|w| -> Result<Vec<BigInt>> {
                let m = FreedomMatroid::build(w)?.into_matroid();
                let census = lambda_census(&m)?;
                words
                    .iter()
                    .map(|v| {
                        let by_orderings =
                            BigInt::from(census.get(v).copied().unwrap_or(0));
                        let by_multisection =
                            multisection_coefficient(&m, &letter_matroids(v))?;
                        assert_eq!(
                            by_orderings, by_multisection,
                            "ordering census and multisection disagree at ({v}, {w})"
                        );
                        if !by_multisection.is_zero() {
                            assert!(
                                lattice.leq(v, w),
                                "nonzero coefficient off the order at ({v}, {w})"
                            );
                        }
                        Ok(by_multisection)
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let factorial: BigInt = (1..=n as u64).map(BigInt::from).product();
        for (j, col) in columns.iter().enumerate() {
            let sum: BigInt = col.iter().sum();
            assert_eq!(
                sum, factorial,
                "column {} does not exhaust the orderings",
                words[j]
            );
        }
        let entries: Vec<Vec<BigInt>> = (0..words.len())
            .map(|i| (0..words.len()).map(|j| columns[j][i].clone()).collect())
            .collect();
        Ok(CoeffMatrix { lattice, entries })
    }

    pub fn lattice(&self) -> &DominanceLattice {
        &self.lattice
    }

    pub fn words(&self) -> &[Word] {
        self.lattice.words()
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn entry(&self, vi: usize, wi: usize) -> &BigInt {
        &self.entries[vi][wi]
    }

    pub fn entry_of(&self, v: &Word, w: &Word) -> BigInt {
        let vi = self.lattice.index_of(v).expect("row word in bidegree");
        let wi = self.lattice.index_of(w).expect("column word in bidegree");
        self.entries[vi][wi].clone()
    }

    pub fn row_tables(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.size()).map(|i| self.entries[i][i].clone()).collect()
    }

    pub fn column_sums(&self) -> Vec<BigInt> {
        (0..self.size())
            .map(|j| self.entries.iter().map(|row| &row[j]).sum())
            .collect()
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_int_rows(&self.entries)
    }

    /// Inverse computed along two routes, incidence recursion and back
    /// substitution, which are asserted to agree.
    pub fn inverse(&self) -> Result<RatMatrix> {
        let rat = self.to_rational();
        let by_recursion = incidence_inverse(&self.lattice, &rat)?;
        let by_substitution = rat.inverse_upper_triangular()?;
        assert_eq!(
            by_recursion, by_substitution,
            "incidence recursion and back substitution produced different inverses"
        );
        Ok(by_substitution)
    }
}

/// Product of the letters of `w`, left to right, expanded in the family.
pub fn p_product(w: &Word, family: Family) -> Result<FormalSum> {
    let mut out = FormalSum::zero();
    out.add_term(canonical_of(&Matroid::empty())?, BigInt::one());
    for &c in w.letters() {
        let mut letter = FormalSum::zero();
        letter.add_term(canonical_of(&letter_matroid(c))?, BigInt::one());
        out = product_sums(&out, &letter, family)?;
    }
    Ok(out)
}

/// Expansions of every weight-`r` word product of length `n` in the family,
/// one row per word, one column per class of the matching bidegree.
pub fn expansion_matrix(
    n: usize,
    r: usize,
    family: Family,
) -> Result<(Vec<Word>, Vec<CanonicalKey>, Vec<Vec<BigInt>>)> {
    let words = words_desc_lex(n, r);
    let classes: Vec<CanonicalKey> = family
        .catalogue(n)?
        .into_iter()
        .filter(|k| k.rank() == r)
        .collect();
    let entries: Vec<Vec<BigInt>> = words
        .par_iter()
        .map(|v| {
            let parts = letter_matroids(v);
            classes
                .iter()
                .map(|k| multisection_coefficient(k.matroid(), &parts))
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok((words, classes, entries))
}

/// Rational combination of classes.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatSum {
    terms: BTreeMap<CanonicalKey, BigRational>,
}

impl RatSum {
    pub fn zero() -> Self {
        RatSum::default()
    }

    pub fn from_key(key: CanonicalKey) -> Self {
        let mut s = RatSum::zero();
        s.add_term(key, BigRational::one());
        s
    }

    pub fn add_term(&mut self, key: CanonicalKey, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &RatSum) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&mut self, factor: &BigRational) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
    }

    pub fn coeff(&self, key: &CanonicalKey) -> BigRational {
        self.terms.get(key).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalKey, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn display_with<F: Fn(&CanonicalKey) -> String>(&self, label: F) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| format!("{} {}", c, label(k)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Serialize for RatSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            class: &'a CanonicalKey,
            coeff: String,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            seq.serialize_element(&Term {
                class: k,
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}

/// Rational combination of ordered pairs of classes.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatTensorSum {
    terms: BTreeMap<(CanonicalKey, CanonicalKey), BigRational>,
}

impl RatTensorSum {
    pub fn zero() -> Self {
        RatTensorSum::default()
    }

    pub fn add_term(&mut self, left: CanonicalKey, right: CanonicalKey, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn iter(
        &self,
    ) -> impl Iterator<Item = (&(CanonicalKey, CanonicalKey), &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn display_with<F: Fn(&CanonicalKey) -> String>(&self, label: F) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((l, r), c)| format!("{} {} (x) {}", c, label(l), label(r)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// The basis dual to concatenation in one bidegree: combinations `p'_v` of
/// classes with the matroid class of each word `w` equal to
/// `sum over v <= w of c(v, w) p'_v`.
pub fn p_prime_basis(n: usize, r: usize) -> Result<BTreeMap<Word, RatSum>> {
    let c = CoeffMatrix::build(n, r)?;
    let inv = c.inverse()?;
    let words = c.words().to_vec();
    let keys: Vec<CanonicalKey> = words
        .iter()
        .map(|w| canonical_of(FreedomMatroid::build(w)?.matroid()))
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for (i, v) in words.iter().enumerate() {
        let mut s = RatSum::zero();
        for (j, key) in keys.iter().enumerate() {
            s.add_term(key.clone(), inv.get(j, i).clone());
        }
        out.insert(v.clone(), s);
    }
    Ok(out)
}

/// Coproduct extended linearly to a rational combination of classes.
pub fn coproduct_of_sum(s: &RatSum) -> Result<RatTensorSum> {
    let mut out = RatTensorSum::zero();
    for (key, coeff) in s.iter() {
        let delta = coproduct(key.matroid())?;
        for ((l, r), c) in delta.iter() {
            out.add_term(
                l.clone(),
                r.clone(),
                coeff * BigRational::from_integer(c.clone()),
            );
        }
    }
    Ok(out)
}

/// The deconcatenation of `w` in the dual basis, expanded in classes:
/// the sum over splits of `w` of the tensor of the two dual basis elements.
pub fn deconcatenation_expansion(w: &Word) -> Result<RatTensorSum> {
    let mut out = RatTensorSum::zero();
    for k in 0..=w.len() {
        let (u, v) = w.split_at(k);
        let left = p_prime_basis(u.len(), u.weight())?
            .remove(&u)
            .expect("prefix word in its bidegree");
        let right = p_prime_basis(v.len(), v.weight())?
            .remove(&v)
            .expect("suffix word in its bidegree");
        for (lk, lc) in left.iter() {
            for (rk, rc) in right.iter() {
                out.add_term(lk.clone(), rk.clone(), lc * rc);
            }
        }
    }
    Ok(out)
}

/// Whether the coproduct of the dual basis element of `w` is exactly its
/// deconcatenation.
pub fn dual_basis_coproduct_is_deconcatenation(w: &Word) -> Result<bool> {
    let basis = p_prime_basis(w.len(), w.weight())?;
    let element = basis.get(w).expect("word in its bidegree");
    let lhs = coproduct_of_sum(element)?;
    let rhs = deconcatenation_expansion(w)?;
    Ok(lhs == rhs)
}

/// Reassembles the class of the matroid of `w` from the word products using
/// the inverse coefficient matrix.  The result should be the single class
/// with coefficient one.
pub fn class_from_products(w: &Word) -> Result<RatSum> {
    let c = CoeffMatrix::build(w.len(), w.weight())?;
    let inv = c.inverse()?;
    let words = c.words().to_vec();
    let i = c.lattice().index_of(w).expect("word in its bidegree");
    let mut out = RatSum::zero();
    for (j, v) in words.iter().enumerate() {
        if inv.get(i, j).is_zero() {
            continue;
        }
        let expansion = p_product(v, Family::Freedom)?;
        for (key, coeff) in expansion.iter() {
            out.add_term(
                key.clone(),
                inv.get(i, j) * BigRational::from_integer(coeff.clone()),
            );
        }
    }
    Ok(out)
}

/// Outcome of checking one bidegree for freeness of the point-loop
/// subalgebra: the coefficient matrix must be invertible, which the
/// triangular shape and positive diagonal certify.
#[derive(Clone, Debug, Serialize)]
pub struct BidegreeCertificate {
    pub n: usize,
    pub r: usize,
    pub dimension: usize,
    pub upper_triangular: bool,
    pub diagonal: Vec<String>,
    pub diagonal_all_positive: bool,
    pub column_sums_are_factorial: bool,
    pub inverse_check: bool,
    pub determinant: String,
    pub free: bool,
}

pub fn certify_bidegree(n: usize, r: usize) -> Result<BidegreeCertificate> {
    let c = CoeffMatrix::build(n, r)?;
    let rat = c.to_rational();
    let upper_triangular = rat.is_upper_triangular();
    let diagonal = c.diagonal();
    let diagonal_all_positive = diagonal.iter().all(|d| d.is_positive());
    let factorial: BigInt = (1..=n as u64).map(BigInt::from).product();
    let column_sums_are_factorial = c.column_sums().iter().all(|s| *s == factorial);
    let inverse = c.inverse()?;
    let inverse_check =
        rat.mul(&inverse)?.is_identity() && inverse.mul(&rat)?.is_identity();
    let determinant: BigInt = diagonal.iter().product();
    let free =
        upper_triangular && diagonal_all_positive && inverse_check && !determinant.is_zero();
    Ok(BidegreeCertificate {
        n,
        r,
        dimension: c.size(),
        upper_triangular,
        diagonal: diagonal.iter().map(BigInt::to_string).collect(),
        diagonal_all_positive,
        column_sums_are_factorial,
        inverse_check,
        determinant: determinant.to_string(),
        free,
    })
}

/// Certificates for every bidegree of one degree.
pub fn certify_degree(n: usize) -> Result<Vec<BidegreeCertificate>> {
    (0..=n).map(|r| certify_bidegree(n, r)).collect()
}
