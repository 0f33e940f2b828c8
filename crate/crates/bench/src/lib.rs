//! Shared inputs for the benchmarks.

use richwords::{std_extj, Alphabet, Word};

/// A rich word of length `n` over `q` letters, grown by standard extension
/// from a seed using every letter.
pub fn rich_word(q: usize, n: usize) -> Word {
    let alphabet = Alphabet::new(q).expect("valid alphabet");
    let seed: Vec<u8> = alphabet.symbols().collect();
    let seed = Word::new(alphabet, seed).expect("symbols in range");
    let grown = std_extj(&seed, n.saturating_sub(seed.len())).expect("standard extension");
    grown.prefix(n)
}

/// Words over the smallest alphabet holding all of them.
pub fn words<const N: usize>(texts: [&str; N]) -> [Word; N] {
    let alphabet = Alphabet::infer(texts).expect("valid words");
    texts.map(|t| Word::parse(t, alphabet).expect("valid word"))
}
