// Inverting the triangular coefficient matrix produces a dual basis:
// rational combinations of word classes on which the coproduct acts by
// cutting the word in two. Reading the inverse the other way expands a
// single word class back out of point-loop products.

use matroid_algebra::family::class_label;
use matroid_algebra::freeness::{
    class_from_products, dual_basis_coproduct_is_deconcatenation, p_prime_basis,
};
use matroid_algebra::word::{DominanceLattice, Word};

fn main() {
    println!("dual basis in bidegree (4, 2):");
    let basis = p_prime_basis(4, 2).unwrap();
    for w in DominanceLattice::new(4, 2).words() {
        println!("  P'({w}) = {}", basis[w].display_with(class_label));
    }

    let w: Word = "0110".parse().unwrap();
    println!("\nthe coproduct of P'({w}) only cuts the word apart:");
    for k in 0..=w.len() {
        let (u, v) = w.split_at(k);
        println!("  P'({u}) (x) P'({v})");
    }
    assert!(dual_basis_coproduct_is_deconcatenation(&w).unwrap());
    println!("  (checked against the expanded coproduct)");

    println!("\nthe class of {w} out of point-loop products:");
    let back = class_from_products(&w).unwrap();
    println!("  {}", back.display_with(class_label));
}
