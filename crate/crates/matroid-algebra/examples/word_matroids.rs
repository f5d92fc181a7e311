// Each 0/1 word describes a matroid: a 1 appends an element that raises
// the rank, a 0 appends one that sits as freely as possible without
// raising it. The word is recovered as the largest rank-increment
// pattern over all insertion orders.

use matroid_algebra::freedom::FreedomMatroid;
use matroid_algebra::lambda::distinguished_word;
use matroid_algebra::subset;
use matroid_algebra::word::Word;

fn main() {
    for text in ["10", "01", "110", "1010", "0100110"] {
        let w: Word = text.parse().unwrap();
        let m = FreedomMatroid::build(&w).unwrap().into_matroid();
        println!("word {text}");
        println!("  rank {}, nullity {}", m.rank(), m.nullity());
        println!(
            "  loops {}, bases {}",
            subset::format_set(m.loops()),
            m.bases().len()
        );
        assert_eq!(distinguished_word(&m), w);
        println!("  recovered from the matroid: {}", distinguished_word(&m));
    }

    // the bases of a word matroid are the sets that can beat the word's
    // own 1-positions in the dominance order, element by element
    let w: Word = "0100110".parse().unwrap();
    let m = FreedomMatroid::build(&w).unwrap().into_matroid();
    println!("\nbases of {w}:");
    for b in m.bases() {
        println!("  {}", subset::format_set(b));
    }
}
