//! Row insertion for standard RSK, the type C variant and the
//! Berele–Remmel / Kerov–Vershik variant, plus the maps from words to
//! permutations that link them to shuffles.
//!
//! All three insertions share one engine. A variant is a rule table giving
//! the letter order and, per letter, whether it bumps equal entries.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Permutation, Tableau};
use crate::error::{Error, Result};
use crate::rational::{from_biguint, factorial, Rational};

/// Total orders on letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphabetOrder {
    /// `1 < 2 < 3 < ..`
    Positive,
    /// `1 < -1 < 2 < -2 < ..`
    TypeC,
    /// The usual order on the integers, zero included.
    Integers,
}

impl AlphabetOrder {
    pub fn name(self) -> &'static str {
        match self {
            AlphabetOrder::Positive => "positive",
            AlphabetOrder::TypeC => "typeC",
            AlphabetOrder::Integers => "integer",
        }
    }

    pub fn admits(self, letter: i32) -> bool {
        match self {
            AlphabetOrder::Positive => letter > 0,
            AlphabetOrder::TypeC => letter != 0,
            AlphabetOrder::Integers => true,
        }
    }

    /// Sort key realising the order.
    pub fn key(self, letter: i32) -> i64 {
        match self {
            AlphabetOrder::Positive | AlphabetOrder::Integers => letter as i64,
            AlphabetOrder::TypeC => 2 * letter.unsigned_abs() as i64 + (letter < 0) as i64,
        }
    }
}

/// A finite word over an ordered alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<i32>,
    order: AlphabetOrder,
}

impl Word {
    pub fn new(letters: Vec<i32>, order: AlphabetOrder) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| !order.admits(l)) {
            return Err(Error::LetterOutsideAlphabet { letter: bad, alphabet: order.name() });
        }
        Ok(Word { letters, order })
    }

    /// Parses space- or comma-separated letters; both `-` and `−` are minus signs.
    pub fn parse(s: &str, order: AlphabetOrder) -> Result<Self> {
        let letters = s
            .replace('−', "-")
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters, order)
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn order(&self) -> AlphabetOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Every word of length `n` over `alphabet`.
    pub fn all(n: usize, alphabet: &[i32], order: AlphabetOrder) -> Result<Vec<Word>> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w: Vec<i32>| {
                    alphabet.iter().map(move |&a| {
                        let mut next = w.clone();
                        next.push(a);
                        next
                    })
                })
                .collect();
        }
        out.into_iter().map(|w| Word::new(w, order)).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(i32::to_string).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// The insertion variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Standard,
    #[serde(rename = "typeC")]
    TypeC,
    Brkv,
}

struct Rule {
    name: &'static str,
    order: AlphabetOrder,
    /// Letters that bump an equal entry; the rest bump only larger ones.
    bumps_equal: fn(i32) -> bool,
}

static STANDARD: Rule = Rule { name: "standard", order: AlphabetOrder::Integers, bumps_equal: |_| false };
static TYPE_C: Rule = Rule { name: "typeC", order: AlphabetOrder::TypeC, bumps_equal: |l| l < 0 };
static BRKV: Rule = Rule { name: "brkv", order: AlphabetOrder::Integers, bumps_equal: |l| l < 0 };

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Standard, Variant::TypeC, Variant::Brkv];

    fn rule(self) -> &'static Rule {
        match self {
            Variant::Standard => &STANDARD,
            Variant::TypeC => &TYPE_C,
            Variant::Brkv => &BRKV,
        }
    }

    pub fn name(self) -> &'static str {
        self.rule().name
    }

    pub fn admits(self, letter: i32) -> bool {
        match self {
            Variant::Standard => true,
            Variant::TypeC | Variant::Brkv => letter != 0,
        }
    }

    pub fn order(self) -> AlphabetOrder {
        self.rule().order
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Variant::Standard),
            "typeC" | "typec" | "type-c" => Ok(Variant::TypeC),
            "brkv" => Ok(Variant::Brkv),
            _ => Err(Error::Parse(format!("unknown RSK variant {s:?}"))),
        }
    }
}

/// Insertion tableau `p` and standard recording tableau `q` of equal shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RskPair {
    pub p: Tableau,
    pub q: Tableau,
}

/// Column of the entry that `letter` displaces in `row`, or `row.len()`.
fn bump_position(rule: &Rule, row: &[i32], letter: i32) -> usize {
    let k = rule.order.key(letter);
    if (rule.bumps_equal)(letter) {
        row.partition_point(|&e| rule.order.key(e) < k)
    } else {
        row.partition_point(|&e| rule.order.key(e) <= k)
    }
}

/// Runs the insertion on `letters`.
pub fn rsk(letters: &[i32], variant: Variant) -> Result<RskPair> {
    let rule = variant.rule();
    if let Some(&bad) = letters.iter().find(|&&l| !variant.admits(l)) {
        return Err(Error::LetterOutsideAlphabet { letter: bad, alphabet: rule.name });
    }
    let mut p: Vec<Vec<i32>> = Vec::new();
    let mut q: Vec<Vec<i32>> = Vec::new();
    for (step, &letter) in letters.iter().enumerate() {
        let mut carry = letter;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![carry]);
                q.push(vec![step as i32 + 1]);
                break;
            }
            let col = bump_position(rule, &p[row], carry);
            if col == p[row].len() {
                p[row].push(carry);
                q[row].push(step as i32 + 1);
                break;
            }
            carry = std::mem::replace(&mut p[row][col], carry);
            row += 1;
        }
    }
    Ok(RskPair { p: Tableau::new(p), q: Tableau::new(q) })
}

/// Standard RSK of a permutation in one-line form.
pub fn rsk_permutation(w: &Permutation) -> RskPair {
    let letters: Vec<i32> = w.images().iter().map(|&v| v as i32).collect();
    rsk(&letters, Variant::Standard).expect("positive letters")
}

/// Runs `rsk` on a word after checking its alphabet agrees with the variant.
pub fn rsk_word(word: &Word, variant: Variant) -> Result<RskPair> {
    let compatible = match variant {
        Variant::TypeC => word.order() == AlphabetOrder::TypeC,
        Variant::Standard | Variant::Brkv => word.order() != AlphabetOrder::TypeC,
    };
    if !compatible {
        return Err(Error::InvalidPair {
            variant: variant.name(),
            reason: format!("word uses the {} order", word.order().name()),
        });
    }
    rsk(word.letters(), variant)
}

fn check_pair(pair: &RskPair, variant: Variant) -> Result<()> {
    let rule = variant.rule();
    let invalid = |reason: String| Error::InvalidPair { variant: rule.name, reason };
    if pair.p.shape() != pair.q.shape() {
        return Err(invalid(format!("shapes {} and {} differ", pair.p.shape(), pair.q.shape())));
    }
    if !pair.q.is_standard() {
        return Err(invalid(format!("recording tableau {} is not standard", pair.q)));
    }
    if let Some(&bad) = pair.p.rows().iter().flatten().find(|&&l| !variant.admits(l)) {
        return Err(Error::LetterOutsideAlphabet { letter: bad, alphabet: rule.name });
    }
    if !pair.p.is_weakly_increasing_by(|l| rule.order.key(l)) {
        return Err(invalid(format!("{} is not weakly increasing", pair.p)));
    }
    let rows = pair.p.rows();
    for (r, row) in rows.iter().enumerate() {
        for (c, &l) in row.iter().enumerate() {
            if (rule.bumps_equal)(l) {
                if row.get(c + 1) == Some(&l) {
                    return Err(invalid(format!("{l} repeats in row {}", r + 1)));
                }
            } else if rows.get(r + 1).and_then(|below| below.get(c)) == Some(&l) {
                return Err(invalid(format!("{l} repeats in column {}", c + 1)));
            }
        }
    }
    Ok(())
}

/// Recovers the word whose insertion gives `pair`, by reverse bumping from
/// the cell holding the largest recording entry.
pub fn rsk_inverse(pair: &RskPair, variant: Variant) -> Result<Vec<i32>> {
    check_pair(pair, variant)?;
    let rule = variant.rule();
    let mut p: Vec<Vec<i32>> = pair.p.rows().to_vec();
    let mut q: Vec<Vec<i32>> = pair.q.rows().to_vec();
    let n = pair.q.size();
    let mut word = vec![0; n];
    for step in (1..=n as i32).rev() {
        let row = q.iter().position(|r| r.last() == Some(&step)).expect("largest entry sits at a row end");
        q[row].pop();
        let mut carry = p[row].pop().expect("shapes agree");
        if p[row].is_empty() {
            p.pop();
            q.pop();
        }
        for above in (0..row).rev() {
            let k = rule.order.key(carry);
            let weak = (rule.bumps_equal)(carry);
            let col = p[above].partition_point(|&e| {
                let ke = rule.order.key(e);
                ke < k || (weak && ke == k)
            });
            if col == 0 {
                return Err(Error::InvalidPair {
                    variant: rule.name,
                    reason: format!("no entry of row {} can have displaced {carry}", above + 1),
                });
            }
            carry = std::mem::replace(&mut p[above][col - 1], carry);
        }
        word[step as usize - 1] = carry;
    }
    Ok(word)
}

/// How a block of consecutive values is laid out over its positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Increasing from left to right.
    Up,
    /// Decreasing from left to right.
    Down,
    /// Every arrangement, each equally likely.
    Mixed,
}

/// Permutations obtained by giving block `b` (letters with `block[i] == b`)
/// the next run of consecutive values, arranged by `orientations[b]`.
/// Mixed blocks of size `r` contribute all `r!` arrangements.
pub fn fill_blocks(block: &[usize], orientations: &[Orientation]) -> Vec<Permutation> {
    let n = block.len();
    let mut partial = vec![vec![0usize; n]];
    let mut next_value = 1;
    for (b, &orient) in orientations.iter().enumerate() {
        let positions: Vec<usize> = (0..n).filter(|&i| block[i] == b).collect();
        let r = positions.len();
        if r == 0 {
            continue;
        }
        let arrangements: Vec<Vec<usize>> = match orient {
            Orientation::Up => vec![(0..r).collect()],
            Orientation::Down => vec![(0..r).rev().collect()],
            Orientation::Mixed => Permutation::all(r).iter().map(|s| s.images().iter().map(|v| v - 1).collect()).collect(),
        };
        let positions = &positions;
        let arrangements = &arrangements;
        partial = partial
            .into_iter()
            .flat_map(|images| {
                arrangements.iter().map(move |arr| {
                    let mut images = images.clone();
                    for (slot, &offset) in positions.iter().zip(arr) {
                        images[*slot] = next_value + offset;
                    }
                    images
                })
            })
            .collect();
        next_value += r;
    }
    let mut out: Vec<Permutation> = partial.into_iter().map(Permutation::from_images_unchecked).collect();
    out.sort();
    out
}

/// The word-to-permutation constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scheme {
    /// Positive letters; letter blocks in increasing order, each increasing.
    Riffle,
    /// Signed letters in the order `1, -1, 2, -2, ..`; negative blocks decreasing.
    Signed,
    /// Integers in the usual order; negative blocks decreasing, the zero
    /// block uniformly random, positive blocks increasing.
    Abg,
}

impl Scheme {
    pub fn order(self) -> AlphabetOrder {
        match self {
            Scheme::Riffle => AlphabetOrder::Positive,
            Scheme::Signed => AlphabetOrder::TypeC,
            Scheme::Abg => AlphabetOrder::Integers,
        }
    }

    /// Insertion variant whose recording tableau matches that of the permutation.
    pub fn variant(self) -> Variant {
        match self {
            Scheme::Riffle => Variant::Standard,
            Scheme::Signed => Variant::TypeC,
            Scheme::Abg => Variant::Brkv,
        }
    }
}

fn orientation_of(letter: i32) -> Orientation {
    match letter.signum() {
        1 => Orientation::Up,
        -1 => Orientation::Down,
        _ => Orientation::Mixed,
    }
}

/// The permutations a word produces under `scheme`, each with its exact
/// probability. Riffle and signed words give a single permutation.
pub fn word_to_permutation(letters: &[i32], scheme: Scheme) -> Result<Vec<(Permutation, Rational)>> {
    let order = scheme.order();
    if let Some(&bad) = letters.iter().find(|&&l| !order.admits(l)) {
        return Err(Error::LetterOutsideAlphabet { letter: bad, alphabet: order.name() });
    }
    let mut distinct: Vec<i32> = letters.to_vec();
    distinct.sort_by_key(|&l| order.key(l));
    distinct.dedup();
    let block: Vec<usize> = letters.iter().map(|l| distinct.iter().position(|d| d == l).expect("present")).collect();
    let orientations: Vec<Orientation> = distinct.iter().map(|&l| orientation_of(l)).collect();
    let perms = fill_blocks(&block, &orientations);
    let zeros = letters.iter().filter(|&&l| l == 0).count();
    let weight = Rational::one() / from_biguint(&factorial(zeros));
    Ok(perms.into_iter().map(|w| (w, weight.clone())).collect())
}

/// The single permutation of a riffle or signed word.
pub fn word_to_single_permutation(letters: &[i32], scheme: Scheme) -> Result<Permutation> {
    if scheme == Scheme::Abg && letters.contains(&0) {
        return Err(Error::UnsupportedSpec("abg word with zero letters has a random image".into()));
    }
    let mut perms = word_to_permutation(letters, scheme)?;
    Ok(perms.remove(0).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_syt, Partition};
    use crate::rational::ratio;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn tab(rows: &[&[i32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn type_c_example() {
        let w = Word::parse("1 −1 2 −2 1 1 −1 1 2 2 −1 2 −2", AlphabetOrder::TypeC).unwrap();
        let pair = rsk_word(&w, Variant::TypeC).unwrap();
        assert_eq!(pair.p, tab(&[&[1, 1, 1, 1, -1, 2, 2, -2], &[-1, 2, 2], &[-1, -2]]));
        assert_eq!(pair.q, tab(&[&[1, 2, 3, 4, 9, 10, 12, 13], &[5, 6, 7], &[8, 11]]));
        assert_eq!(rsk_inverse(&pair, Variant::TypeC).unwrap(), w.letters());
    }

    #[test]
    fn brkv_example() {
        let pair = rsk(&[1, -1, 2, -2, 1, 1, -2], Variant::Brkv).unwrap();
        assert_eq!(pair.p, tab(&[&[-2, 1, 1], &[-2, 2], &[-1], &[1]]));
        assert_eq!(pair.q, tab(&[&[1, 3, 6], &[2, 5], &[4], &[7]]));
        assert_eq!(rsk_inverse(&pair, Variant::Brkv).unwrap(), vec![1, -1, 2, -2, 1, 1, -2]);
    }

    #[test]
    fn identity_gives_single_rows() {
        for n in 1..7 {
            let pair = rsk_permutation(&Permutation::identity(n));
            let row: Vec<i32> = (1..=n as i32).collect();
            assert_eq!(pair.p, tab(&[&row]));
            assert_eq!(pair.q, pair.p);
        }
        let single = rsk(&[-3], Variant::TypeC).unwrap();
        assert_eq!(single.q, tab(&[&[1]]));
        assert_eq!(rsk_inverse(&single, Variant::TypeC).unwrap(), vec![-3]);
    }

    #[test]
    fn rejects_letters_outside_alphabet() {
        assert!(rsk(&[1, 0], Variant::TypeC).is_err());
        assert!(rsk(&[0], Variant::Brkv).is_err());
        assert!(Word::parse("1 -1", AlphabetOrder::Positive).is_err());
        assert!(word_to_permutation(&[1, 0], Scheme::Signed).is_err());
        let w = Word::parse("1 2", AlphabetOrder::Positive).unwrap();
        assert!(rsk_word(&w, Variant::TypeC).is_err());
    }

    #[test]
    fn rejects_invalid_pairs() {
        let q = tab(&[&[1, 2]]);
        // a negative letter may not repeat in a row
        let bad = RskPair { p: tab(&[&[-1, -1]]), q: q.clone() };
        assert!(rsk_inverse(&bad, Variant::TypeC).is_err());
        assert!(rsk_inverse(&bad, Variant::Brkv).is_err());
        // a positive letter may not repeat in a column
        let bad = RskPair { p: tab(&[&[2], &[2]]), q: tab(&[&[1], &[2]]) };
        assert!(rsk_inverse(&bad, Variant::Standard).is_err());
        let bad = RskPair { p: tab(&[&[1, 2]]), q: tab(&[&[2, 1]]) };
        assert!(rsk_inverse(&bad, Variant::Standard).is_err());
        let bad = RskPair { p: tab(&[&[1, 2]]), q: tab(&[&[1], &[2]]) };
        assert!(rsk_inverse(&bad, Variant::Standard).is_err());
    }

    #[test]
    fn descents_of_permutations_match_tableaux() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let pair = rsk_permutation(&w);
                assert_eq!(pair.q.descent_set(), w.descents(), "{w}");
                assert_eq!(pair.p.descent_set(), w.inverse().descents(), "{w}");
            }
        }
    }

    #[test]
    fn standard_pairs_of_s4_round_trip() {
        let mut pairs = BTreeSet::new();
        for w in Permutation::all(4) {
            let pair = rsk_permutation(&w);
            let back = rsk_inverse(&pair, Variant::Standard).unwrap();
            assert_eq!(back, w.images().iter().map(|&v| v as i32).collect::<Vec<_>>());
            pairs.insert(pair);
        }
        assert_eq!(pairs.len(), 24);
        // every pair of equal-shape standard tableaux is hit
        let expected: usize = Partition::all(4).iter().map(|l| enumerate_syt(l).len().pow(2)).sum();
        assert_eq!(expected, 24);
    }

    fn exhaustive_round_trip(variant: Variant, alphabet: &[i32], n: usize) {
        let mut pairs = BTreeSet::new();
        for w in Word::all(n, alphabet, variant.order()).unwrap() {
            let pair = rsk(w.letters(), variant).unwrap();
            check_pair(&pair, variant).unwrap();
            assert_eq!(rsk_inverse(&pair, variant).unwrap(), w.letters(), "{w}");
            pairs.insert(pair);
        }
        assert_eq!(pairs.len(), alphabet.len().pow(n as u32));
    }

    #[test]
    fn exhaustive_round_trips() {
        for n in 1..=4 {
            exhaustive_round_trip(Variant::Standard, &[1, 2, 3], n);
            exhaustive_round_trip(Variant::TypeC, &[1, -1, 2, -2], n);
            exhaustive_round_trip(Variant::Brkv, &[1, -1, 2, -2], n);
        }
        exhaustive_round_trip(Variant::TypeC, &[1, -1], 3);
        exhaustive_round_trip(Variant::TypeC, &[1, -1, 2, -2], 5);
    }

    #[test]
    fn type_c_insertion_tableaux_satisfy_conditions() {
        for n in 1..=5 {
            for w in Word::all(n, &[1, -1, 2, -2], AlphabetOrder::TypeC).unwrap() {
                let p = rsk(w.letters(), Variant::TypeC).unwrap().p;
                assert!(p.is_weakly_increasing_by(|l| AlphabetOrder::TypeC.key(l)));
                for (r, row) in p.rows().iter().enumerate() {
                    for (c, &l) in row.iter().enumerate() {
                        if l > 0 {
                            assert_ne!(p.get(r + 1, c), Some(l), "{w}");
                        } else {
                            assert_ne!(p.get(r, c + 1), Some(l), "{w}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn reversal_transposes_shape() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let shape = rsk_permutation(&w).p.shape();
                assert_eq!(rsk_permutation(&w.reverse()).p.shape(), shape.conjugate(), "{w}");
            }
        }
    }

    #[test]
    fn word_to_permutation_examples() {
        let riffle = word_to_single_permutation(&[1, 3, 2, 1, 2, 2, 1, 3, 1, 2], Scheme::Riffle).unwrap();
        assert_eq!(riffle, perm("1 9 5 2 6 7 3 10 4 8"));
        let signed = Word::parse("1 −1 2 −2 1 1 −1 1 2 2 −1 2 −2", AlphabetOrder::TypeC).unwrap();
        let w = word_to_single_permutation(signed.letters(), Scheme::Signed).unwrap();
        assert_eq!(w, perm("1 7 8 13 2 3 6 4 9 10 5 11 12"));
        let abg = word_to_permutation(&[-2, 0, 1, 0, 0, 2, -1, -2, -1, 1], Scheme::Abg).unwrap();
        assert_eq!(abg.len(), 6);
        assert!(abg.iter().all(|(_, p)| *p == ratio(1, 6)));
        assert!(abg.iter().any(|(w, _)| *w == perm("2 5 8 6 7 10 4 1 3 9")));
        assert!(word_to_single_permutation(&[0, 1], Scheme::Abg).is_err());
    }

    #[test]
    fn recording_tableau_is_preserved() {
        for n in 1..=6 {
            for w in Word::all(n, &[1, 2, 3], AlphabetOrder::Positive).unwrap() {
                let perm = word_to_single_permutation(w.letters(), Scheme::Riffle).unwrap();
                assert_eq!(rsk(w.letters(), Variant::Standard).unwrap().q, rsk_permutation(&perm).q, "{w}");
            }
        }
        for n in 1..=5 {
            for w in Word::all(n, &[1, -1, 2, -2], AlphabetOrder::TypeC).unwrap() {
                let perm = word_to_single_permutation(w.letters(), Scheme::Signed).unwrap();
                assert_eq!(rsk(w.letters(), Variant::TypeC).unwrap().q, rsk_permutation(&perm).q, "{w}");
            }
            for w in Word::all(n, &[-2, -1, 1, 2], AlphabetOrder::Integers).unwrap() {
                let perm = word_to_single_permutation(w.letters(), Scheme::Abg).unwrap();
                assert_eq!(rsk(w.letters(), Variant::Brkv).unwrap().q, rsk_permutation(&perm).q, "{w}");
            }
        }
    }

    #[test]
    fn fill_blocks_mixed_expands_factorially() {
        let perms = fill_blocks(&[0, 0, 0], &[Orientation::Mixed]);
        assert_eq!(perms, Permutation::all(3));
        let perms = fill_blocks(&[1, 0, 1], &[Orientation::Down, Orientation::Up]);
        assert_eq!(perms, vec![perm("2 1 3")]);
    }

    proptest! {
        #[test]
        fn random_words_round_trip(letters in prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2, 3, -3]), 0..10)) {
            for variant in [Variant::TypeC, Variant::Brkv, Variant::Standard] {
                let pair = rsk(&letters, variant).unwrap();
                prop_assert_eq!(pair.p.shape(), pair.q.shape());
                prop_assert!(pair.q.is_standard());
                prop_assert_eq!(rsk_inverse(&pair, variant).unwrap(), letters.clone());
            }
        }
    }
}
