// Words of fixed length and weight form a lattice under dominance:
// lower means the 1s sit further left. Covers move a single 1 one step
// to the right.

use matroid_algebra::word::{DominanceLattice, Word};

fn main() {
    let lat = DominanceLattice::new(5, 2);
    let a: Word = "10010".parse().unwrap();
    let b: Word = "01100".parse().unwrap();
    println!("meet of {a} and {b}: {}", lat.meet(&a, &b));
    println!("join of {a} and {b}: {}", lat.join(&a, &b));
    println!(
        "ideal below {b}: {}",
        lat.ideal_below(&b)
            .iter()
            .map(Word::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!("\n{}", lat.hasse_dot());
}
