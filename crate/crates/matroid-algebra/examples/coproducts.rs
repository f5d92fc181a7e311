// The coproduct of a matroid sums restriction (x) contraction over all
// subsets of the ground set, with classes collected up to isomorphism.

use matroid_algebra::family::class_label;
use matroid_algebra::freedom::FreedomMatroid;
use matroid_algebra::hopf::coproduct;
use matroid_algebra::matroid::Matroid;
use matroid_algebra::subset;

fn main() {
    let m = FreedomMatroid::build(&"1010".parse().unwrap())
        .unwrap()
        .into_matroid();
    let d = coproduct(&m).unwrap();
    println!("coproduct of the word matroid 1010:");
    for ((left, right), coeff) in d.iter() {
        println!(
            "  {coeff} * {} (x) {}",
            class_label(left),
            class_label(right)
        );
    }

    // two three-point lines sharing a point, in rank 3
    let triples: Vec<u32> = (1..=5u32)
        .flat_map(|a| ((a + 1)..=5).flat_map(move |b| ((b + 1)..=5).map(move |c| {
            subset::from_elements([a as usize, b as usize, c as usize])
        })))
        .collect();
    let bases: Vec<u32> = triples
        .into_iter()
        .filter(|&t| {
            t != subset::from_elements([1, 2, 3]) && t != subset::from_elements([1, 4, 5])
        })
        .collect();
    let line_pair = Matroid::from_bases(5, &bases).unwrap();
    println!("\ncoproduct of the five-point line pair:");
    let d = coproduct(&line_pair).unwrap();
    for ((left, right), coeff) in d.iter() {
        println!(
            "  {coeff} * {} (x) {}",
            class_label(left),
            class_label(right)
        );
    }
    let total: num::BigInt = d.iter().map(|(_, c)| c.clone()).sum();
    println!("  total {} = 2^5 subsets", total);
}
