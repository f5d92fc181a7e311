// Products of points and loops expand over word matroids with an upper
// triangular coefficient matrix; a positive diagonal makes the family
// of such products a basis of its span.

use matroid_algebra::family::{class_label, Family};
use matroid_algebra::freeness::{expansion_matrix, CoeffMatrix, RatMatrix};

fn main() {
    let c = CoeffMatrix::build(4, 2).unwrap();
    let words = c.words();

    print!("{:>6}", "");
    for w in words {
        print!("{:>6}", w.to_string());
    }
    println!();
    for (i, w) in words.iter().enumerate() {
        print!("{:>6}", w.to_string());
        for j in 0..c.size() {
            print!("{:>6}", c.entry(i, j).to_string());
        }
        println!();
    }

    println!("\ncolumn sums (each ordering of four elements lands once):");
    for (w, s) in words.iter().zip(c.column_sums()) {
        println!("  {w}: {s}");
    }

    // appending the column of the doubled-point pair keeps full row
    // rank, so the expansion also reaches that class
    let (rows, classes, entries) = expansion_matrix(4, 2, Family::FreedomWithD).unwrap();
    println!("\nextended columns:");
    for cls in &classes {
        print!("{:>16}", class_label(cls));
    }
    println!();
    for (i, w) in rows.iter().enumerate() {
        print!("{w}: ");
        for j in 0..classes.len() {
            print!("{:>6}", entries[i][j].to_string());
        }
        println!();
    }
    let rank = RatMatrix::from_int_rows(&entries).rank();
    println!("row rank {rank} of {} rows", rows.len());
}
