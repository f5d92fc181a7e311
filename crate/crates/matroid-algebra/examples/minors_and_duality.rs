// Restriction, contraction, duality, and closure on a small geometry:
// rank 4 on seven points with two marked lines and two marked planes.

use matroid_algebra::matroid::{Matroid, Validation};
use matroid_algebra::subset::{self, Subset};

fn geometry() -> Matroid {
    let specials: [(Subset, u8); 4] = [
        (subset::from_elements([1, 2, 3]), 2),
        (subset::from_elements([1, 4, 5]), 2),
        (subset::from_elements([1, 2, 3, 4, 5]), 3),
        (subset::from_elements([1, 2, 3, 6, 7]), 3),
    ];
    let n = 7;
    let ranks: Vec<u8> = (0u32..1 << n)
        .map(|a| {
            let mut r = (a.count_ones() as u8).min(4);
            for (f, fr) in specials {
                r = r.min(fr + (a & !f).count_ones() as u8);
            }
            r
        })
        .collect();
    Matroid::from_rank_table_with(n, ranks, &Validation::default()).unwrap()
}

fn main() {
    let m = geometry();
    println!("rank {} on {} elements", m.rank(), m.n());

    let line = subset::from_elements([1, 4, 5]);
    let restricted = m.restrict(line);
    println!(
        "restricted to {}: rank {}, {} bases",
        subset::format_set(line),
        restricted.rank(),
        restricted.bases().len()
    );

    let contracted = m.contract(line);
    println!(
        "contracted by the same line: rank {} on {} elements, loops {}",
        contracted.rank(),
        contracted.n(),
        subset::format_set(contracted.loops())
    );

    let d = m.dual();
    println!("dual: rank {} with {} bases", d.rank(), d.bases().len());
    assert_eq!(d.dual(), m);

    // closure grows a set to everything its rank already spans
    for els in [vec![2, 3], vec![4, 5], vec![2, 3, 6]] {
        let a = subset::from_elements(els.iter().copied());
        println!(
            "closure of {} is {}",
            subset::format_set(a),
            subset::format_set(m.closure(a))
        );
    }
}
