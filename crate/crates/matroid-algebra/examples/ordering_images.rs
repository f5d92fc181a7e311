// Inserting a matroid's elements in every order and recording where the
// rank climbs gives a set of words. That image is always closed
// downward in the dominance order; for word matroids it is the full
// ideal below the defining word, but other matroids can leave gaps at
// the top.

use matroid_algebra::freedom::FreedomMatroid;
use matroid_algebra::lambda::{is_order_ideal, lambda_image, maximal_words};
use matroid_algebra::matroid::Matroid;
use matroid_algebra::word::Word;

fn show(name: &str, m: &Matroid) {
    let image = lambda_image(m).unwrap();
    let maxima = maximal_words(&image);
    println!("{name}:");
    let mut words: Vec<&Word> = image.iter().collect();
    words.sort_by(|a, b| matroid_algebra::word::lex_cmp(b, a));
    let listed: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    println!("  image  {}", listed.join(" "));
    println!(
        "  maxima {}  ideal {}  principal {}",
        maxima
            .iter()
            .map(Word::to_string)
            .collect::<Vec<_>>()
            .join(" "),
        is_order_ideal(&image),
        maxima.len() <= 1
    );
}

fn main() {
    let m = FreedomMatroid::build(&"0101".parse().unwrap())
        .unwrap()
        .into_matroid();
    show("word matroid 0101", &m);

    // four points on a line plus a doubled point: two insertion
    // patterns are maximal, so no single word dominates the image
    let line = Matroid::uniform(2, 4).unwrap();
    let doubled = Matroid::multipoint(2).unwrap();
    let m = line.direct_sum(&doubled).unwrap();
    show("four-point line plus doubled point", &m);
}
