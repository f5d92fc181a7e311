// The product dual to the coproduct: the coefficient of a class W in
// M * N counts subsets A of W's ground set with W|A isomorphic to M
// and W/A isomorphic to N.

use matroid_algebra::family::{class_label, product, product_sums, Family};
use matroid_algebra::hopf::FormalSum;
use matroid_algebra::iso::canonicalize;
use matroid_algebra::matroid::Matroid;
use num::BigInt;

fn show(name: &str, s: &FormalSum) {
    println!("{name} = {}", s.display_with(class_label));
}

fn main() {
    let point = Matroid::point();
    let single_loop = Matroid::loop_();

    // the two orders of point and loop differ by a doubled point
    show(
        "loop * point",
        &product(&single_loop, &point, Family::All).unwrap(),
    );
    show(
        "point * loop",
        &product(&point, &single_loop, Family::All).unwrap(),
    );

    // powers of the point walk up the free matroids with a factorial
    let mut power = FormalSum::zero();
    power.add_term(canonicalize(&Matroid::empty()).unwrap(), BigInt::from(1));
    for k in 1..=4 {
        let mut next = FormalSum::zero();
        next.add_term(canonicalize(&point).unwrap(), BigInt::from(1));
        power = product_sums(&power, &next, Family::All).unwrap();
        show(&format!("point^{k}"), &power);
    }

    // a three-point line times a doubled point, over all classes of
    // size five: three classes appear, one of them twice
    let line = Matroid::uniform(2, 3).unwrap();
    let doubled = Matroid::multipoint(2).unwrap();
    show(
        "line * doubled point",
        &product(&line, &doubled, Family::All).unwrap(),
    );
    // restricted to word classes only the middle term survives
    show(
        "  same, word classes only",
        &product(&line, &doubled, Family::Freedom).unwrap(),
    );
}
