//! The three insertion rules on one signed word, and their inverses.

use shufflesym::rsk::{rsk, rsk_inverse, word_to_permutation, AlphabetOrder, Scheme, Variant, Word};

fn main() -> shufflesym::Result<()> {
    let word = Word::parse("1 -2 2 -1 1 -2", AlphabetOrder::Integers)?;
    for variant in [Variant::TypeC, Variant::Brkv] {
        let pair = rsk(word.letters(), variant)?;
        println!("{}:", variant.name());
        println!("  P = {:?}", pair.p.rows());
        println!("  Q = {:?}", pair.q.rows());
        assert_eq!(rsk_inverse(&pair, variant)?, word.letters());
    }

    let positive = [3, 1, 2, 3, 1];
    let pair = rsk(&positive, Variant::Standard)?;
    println!("standard on {positive:?}: shape {}", pair.p.shape());

    // the word's permutation keeps the recording tableau
    let perms = word_to_permutation(&positive, Scheme::Riffle)?;
    let (w, _) = &perms[0];
    println!("riffle permutation {w}, Q = {:?}", rsk(&w.images().iter().map(|&v| v as i32).collect::<Vec<_>>(), Variant::Standard)?.q.rows());

    for (w, p) in word_to_permutation(&[-2, 0, 1, 0, 0, 2, -1, -2, -1, 1], Scheme::Abg)? {
        println!("abg word -> {w} with weight {p}");
    }
    Ok(())
}
