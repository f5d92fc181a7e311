use matroid_algebra::family::{product, Family};
use matroid_algebra::hopf::{
    coproduct, multisection_coefficient, section_coefficient, FormalSum, TensorSum,
};
use matroid_algebra::iso::canonicalize;
use matroid_algebra::matroid::Matroid;
use num::BigInt;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut out = BigInt::from(1);
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

fn key(m: &Matroid) -> matroid_algebra::iso::CanonicalKey {
    canonicalize(m).unwrap()
}

fn single(m: &Matroid) -> FormalSum {
    let mut s = FormalSum::zero();
    s.add_term(key(m), big(1));
    s
}

#[test]
fn uniform_coproduct_splits_by_subset_size() {
    // deleting or contracting inside a uniform matroid stays uniform,
    // so the coproduct collects one tensor term per subset size
    for n in 0..=6 {
        for r in 0..=n {
            let u = Matroid::uniform(r, n).unwrap();
            let d = coproduct(&u).unwrap();
            let mut expected = TensorSum::zero();
            for a in 0..=n {
                let left = Matroid::uniform(r.min(a), a).unwrap();
                let right = Matroid::uniform(r - r.min(a), n - a).unwrap();
                expected.add_term(key(&left), key(&right), binom(n, a));
            }
            assert_eq!(d, expected, "U({r}, {n})");
        }
    }
}

#[test]
fn circuit_coproduct_restricts_free_and_contracts_to_circuits() {
    // a proper restriction of a circuit is free and the matching
    // contraction is again a circuit on what is left
    for m in 1..=6 {
        let c = Matroid::circuit(m).unwrap();
        let d = coproduct(&c).unwrap();
        let mut expected = TensorSum::zero();
        expected.add_term(key(&c), key(&Matroid::empty()), big(1));
        for k in 0..m {
            let left = Matroid::free(k).unwrap();
            let right = Matroid::circuit(m - k).unwrap();
            expected.add_term(key(&left), key(&right), binom(m, k));
        }
        assert_eq!(d, expected, "circuit of size {m}");
    }
}

#[test]
fn free_and_circuit_products_close_up() {
    // the span of free matroids and circuits is closed under the product
    let fam = Family::CircuitsAndFree;
    for n in 0..=3 {
        for m in 0..=3 {
            let fn_ = Matroid::free(n).unwrap();
            let fm = Matroid::free(m).unwrap();
            let got = product(&fn_, &fm, fam).unwrap();
            let mut expected = FormalSum::zero();
            expected.add_term(key(&Matroid::free(n + m).unwrap()), binom(n + m, n));
            assert_eq!(got, expected, "free {n} times free {m}");
        }
    }
    for k in 1..=3 {
        for l in 1..=3 {
            let ck = Matroid::circuit(k).unwrap();
            let cl = Matroid::circuit(l).unwrap();
            let got = product(&ck, &cl, fam).unwrap();
            assert_eq!(got, FormalSum::zero(), "circuit {k} times circuit {l}");
        }
    }
    for n in 0..=3 {
        for k in 1..=3 {
            let f = Matroid::free(n).unwrap();
            let c = Matroid::circuit(k).unwrap();
            let got = product(&f, &c, fam).unwrap();
            let mut expected = FormalSum::zero();
            expected.add_term(key(&Matroid::circuit(n + k).unwrap()), binom(n + k, n));
            assert_eq!(got, expected, "free {n} times circuit {k}");
            // the reversed order dies unless the free factor is empty
            let rev = product(&c, &f, fam).unwrap();
            if n == 0 {
                assert_eq!(rev, single(&c));
            } else {
                assert_eq!(rev, FormalSum::zero(), "circuit {k} times free {n}");
            }
        }
    }
}

// keep only the terms whose class is a pure zero matroid or multipoint
fn project_to_loops_and_multipoints(s: &FormalSum) -> FormalSum {
    let mut out = FormalSum::zero();
    for (cls, coeff) in s.iter() {
        let m = cls.matroid();
        let pure_zero = m.rank() == 0;
        let pure_multipoint = m.n() >= 1 && m.rank() == 1 && m.loops() == 0;
        if pure_zero || pure_multipoint {
            out.add_term(cls.clone(), coeff.clone());
        }
    }
    out
}

#[test]
fn loop_and_multipoint_products_close_up() {
    // duals of the previous family: the span of zero matroids and
    // multipoints is closed once mixed classes are projected away
    let fam = Family::All;
    for n in 0..=2 {
        for m in 0..=2 {
            let zn = Matroid::zero(n).unwrap();
            let zm = Matroid::zero(m).unwrap();
            let got = product(&zn, &zm, fam).unwrap();
            let mut expected = FormalSum::zero();
            expected.add_term(key(&Matroid::zero(n + m).unwrap()), binom(n + m, n));
            assert_eq!(got, expected, "zero {n} times zero {m}");
        }
    }
    for k in 1..=3 {
        for n in 0..=2 {
            let p = Matroid::multipoint(k).unwrap();
            let z = Matroid::zero(n).unwrap();
            let got = project_to_loops_and_multipoints(&product(&p, &z, fam).unwrap());
            let mut expected = FormalSum::zero();
            expected.add_term(key(&Matroid::multipoint(n + k).unwrap()), binom(n + k, n));
            assert_eq!(got, expected, "multipoint {k} times zero {n}");
            // the reversed order only prepends loops, so the projection
            // survives exactly when there are none to prepend
            let rev = project_to_loops_and_multipoints(&product(&z, &p, fam).unwrap());
            if n == 0 {
                assert_eq!(rev, single(&p));
            } else {
                assert_eq!(rev, FormalSum::zero(), "zero {n} times multipoint {k}");
            }
        }
    }
    for k in 1..=2 {
        for l in 1..=2 {
            let pk = Matroid::multipoint(k).unwrap();
            let pl = Matroid::multipoint(l).unwrap();
            let got = project_to_loops_and_multipoints(&product(&pk, &pl, fam).unwrap());
            assert_eq!(got, FormalSum::zero(), "multipoint {k} times multipoint {l}");
        }
    }
}

#[test]
fn free_times_zero_counts_bases() {
    // the coefficient of every class is its number of bases
    for r in 0..=2 {
        let k = 4 - r;
        let f = Matroid::free(r).unwrap();
        let z = Matroid::zero(k).unwrap();
        let got = product(&f, &z, Family::All).unwrap();
        for (cls, coeff) in got.iter() {
            let bases = cls.matroid().bases().len();
            assert_eq!(coeff, &BigInt::from(bases), "{cls:?}");
        }
        // and the support is every class of that rank and size
        let classes = Family::All.catalogue(4).unwrap();
        let expected: usize = classes.iter().filter(|c| c.rank() == r).count();
        assert_eq!(got.len(), expected, "rank {r}");
    }
}

#[test]
fn zero_times_anything_prepends_loops() {
    // left multiplication by a zero matroid only distributes the loops
    let samples = [
        Matroid::uniform(2, 3).unwrap(),
        Matroid::circuit(3).unwrap(),
        Matroid::multipoint(2).unwrap(),
        Matroid::point(),
    ];
    for k in 1..=2 {
        let z = Matroid::zero(k).unwrap();
        for m in &samples {
            let loops = m.loops().count_ones() as usize;
            let got = product(&z, m, Family::All).unwrap();
            let mut expected = FormalSum::zero();
            expected.add_term(key(&z.direct_sum(m).unwrap()), binom(k + loops, k));
            assert_eq!(got, expected, "zero {k} times {m:?}");
        }
    }
}

#[test]
fn product_coefficients_are_section_counts() {
    // inner product against a class recovers the section coefficient
    let a = Matroid::uniform(2, 3).unwrap();
    let b = Matroid::multipoint(2).unwrap();
    let expansion = product(&a, &b, Family::All).unwrap();
    let classes = Family::All.catalogue(5).unwrap();
    for cls in &classes {
        let direct = section_coefficient(cls.matroid(), &a, &b).unwrap();
        assert_eq!(expansion.coeff(cls), direct, "{cls:?}");
    }
}

#[test]
fn multisection_agrees_with_two_nested_sections() {
    // splitting into three parts equals splitting twice
    let m = Matroid::uniform(2, 4).unwrap();
    let parts = [
        Matroid::point(),
        Matroid::point(),
        Matroid::multipoint(2).unwrap(),
    ];
    let triple = multisection_coefficient(&m, &parts).unwrap();
    // sum over the middle class of section(m; A, rest) * section(rest; B, C)
    let mut total = BigInt::from(0);
    for mid in Family::All.catalogue(3).unwrap() {
        let rest = mid.matroid();
        let outer = section_coefficient(&m, &parts[0], rest).unwrap();
        if outer == BigInt::from(0) {
            continue;
        }
        let inner = section_coefficient(rest, &parts[1], &parts[2]).unwrap();
        total += outer * inner;
    }
    assert_eq!(triple, total);
}

#[test]
fn product_is_associative_on_samples() {
    let fam = Family::All;
    let triples = [
        (Matroid::point(), Matroid::loop_(), Matroid::point()),
        (
            Matroid::uniform(1, 2).unwrap(),
            Matroid::point(),
            Matroid::loop_(),
        ),
        (
            Matroid::uniform(2, 3).unwrap(),
            Matroid::loop_(),
            Matroid::point(),
        ),
    ];
    for (a, b, c) in &triples {
        let left = product_sums_assoc(&single(a), &single(b), fam);
        let left = product_sums_assoc(&left, &single(c), fam);
        let right = product_sums_assoc(&single(b), &single(c), fam);
        let right = product_sums_assoc(&single(a), &right, fam);
        assert_eq!(left, right, "{a:?} {b:?} {c:?}");
    }
}

fn product_sums_assoc(a: &FormalSum, b: &FormalSum, fam: Family) -> FormalSum {
    matroid_algebra::family::product_sums(a, b, fam).unwrap()
}

#[test]
fn empty_class_is_the_unit() {
    let samples = [
        Matroid::uniform(2, 4).unwrap(),
        Matroid::circuit(3).unwrap(),
        Matroid::zero(2).unwrap(),
    ];
    let unit = single(&Matroid::empty());
    for m in &samples {
        let s = single(m);
        assert_eq!(product_sums_assoc(&unit, &s, Family::All), s);
        assert_eq!(product_sums_assoc(&s, &unit, Family::All), s);
    }
}
