// Count isomorphism classes: word matroids double with each element,
// while the census of all matroids grows faster once non-word classes
// appear at four elements.

use matroid_algebra::family::Family;
use matroid_algebra::freedom::FreedomMatroid;
use matroid_algebra::iso::are_isomorphic;
use matroid_algebra::matroid::Matroid;

fn main() {
    println!("  n   words   all classes");
    for n in 0..=6 {
        let words = Family::Freedom.catalogue(n).unwrap().len();
        let all = Family::All.catalogue(n).unwrap().len();
        println!("  {n}   {words:>5}   {all:>11}");
    }

    // the first matroid that is not a word matroid: two doubled points
    let pair = Matroid::multipoint(2).unwrap();
    let two_pairs = pair.direct_sum(&pair).unwrap();
    let freedom4 = Family::Freedom.catalogue(4).unwrap();
    let classes4 = Family::All.catalogue(4).unwrap();
    assert_eq!(classes4.len(), freedom4.len() + 1);
    let missing = classes4
        .iter()
        .find(|c| !freedom4.contains(c))
        .unwrap();
    assert!(are_isomorphic(missing.matroid(), &two_pairs).unwrap());
    println!("\nthe one extra class on four elements is two doubled points");

    // every matroid on at most three elements is a word matroid
    for n in 0..=3 {
        for cls in Family::All.catalogue(n).unwrap() {
            let w = matroid_algebra::lambda::distinguished_word(cls.matroid());
            let rebuilt = FreedomMatroid::build(&w).unwrap().into_matroid();
            assert!(are_isomorphic(cls.matroid(), &rebuilt).unwrap());
        }
    }
    println!("through three elements every class comes from a word");
}
