//! Alphabets, words and the elementary operations on them.
//!
//! A symbol is an index `0..q`. The display map sends `0..=9` to the digits
//! and `10..=35` to `a..=z`, so the single-digit words used throughout the
//! examples print exactly as written.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite alphabet `{0, .., q-1}` with `1 <= q <= 36`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    q: u8,
}

impl Alphabet {
    pub const MAX_SIZE: usize = 36;

    pub fn new(q: usize) -> Result<Self> {
        if q == 0 || q > Self::MAX_SIZE {
            return Err(Error::InvalidAlphabet(q));
        }
        Ok(Alphabet { q: q as u8 })
    }

    pub fn size(self) -> usize {
        self.q as usize
    }

    pub fn symbols(self) -> Range<u8> {
        0..self.q
    }

    pub fn display(self, symbol: u8) -> char {
        debug_assert!(symbol < self.q);
        std::char::from_digit(symbol as u32, 36).expect("symbol below 36")
    }

    pub fn symbol_of(self, c: char) -> Result<u8> {
        match char_index(c) {
            Some(s) if s < self.q => Ok(s),
            _ => Err(Error::InvalidSymbol {
                symbol: c,
                q: self.q,
            }),
        }
    }

    /// Smallest alphabet able to hold every symbol of every string.
    ///
    /// Strings containing no symbol at all yield the unary alphabet.
    pub fn infer<'a, I>(texts: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut max = 0u8;
        for text in texts {
            if is_epsilon(text) {
                continue;
            }
            for c in text.chars() {
                let s = char_index(c).ok_or(Error::InvalidSymbol {
                    symbol: c,
                    q: Self::MAX_SIZE as u8,
                })?;
                max = max.max(s);
            }
        }
        Alphabet::new(max as usize + 1)
    }
}

fn char_index(c: char) -> Option<u8> {
    if c.is_ascii_uppercase() {
        return None;
    }
    c.to_digit(36).map(|d| d as u8)
}

fn is_epsilon(text: &str) -> bool {
    text.is_empty() || text == "ε"
}

/// A finite word over an [`Alphabet`].
///
/// Words order lexicographically by symbol sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(alphabet: Alphabet, symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s >= alphabet.q) {
            return Err(Error::InvalidSymbol {
                symbol: std::char::from_digit(bad as u32, 36).unwrap_or('?'),
                q: alphabet.q,
            });
        }
        Ok(Word { symbols, alphabet })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            symbols: Vec::new(),
            alphabet,
        }
    }

    /// Parses a display string. `""` and `"ε"` both denote the empty word.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        if is_epsilon(text) {
            return Ok(Word::empty(alphabet));
        }
        let symbols = text
            .chars()
            .map(|c| alphabet.symbol_of(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { symbols, alphabet })
    }

    /// Parses with the alphabet inferred as (largest symbol) + 1.
    pub fn parse_inferred(text: &str) -> Result<Self> {
        Word::parse(text, Alphabet::infer([text])?)
    }

    /// Builds a word from symbols already known to be valid for `alphabet`.
    pub(crate) fn from_slice(alphabet: Alphabet, symbols: &[u8]) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < alphabet.q));
        Word {
            symbols: symbols.to_vec(),
            alphabet,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn last(&self) -> Option<u8> {
        self.symbols.last().copied()
    }

    pub fn slice(&self, range: Range<usize>) -> Word {
        Word::from_slice(self.alphabet, &self.symbols[range])
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0..len)
    }

    pub fn suffix(&self, len: usize) -> Word {
        self.slice(self.len() - len..self.len())
    }

    pub fn push(&mut self, symbol: u8) -> Result<()> {
        if symbol >= self.alphabet.q {
            return Err(Error::InvalidSymbol {
                symbol: std::char::from_digit(symbol as u32, 36).unwrap_or('?'),
                q: self.alphabet.q,
            });
        }
        self.symbols.push(symbol);
        Ok(())
    }

    pub fn with(&self, symbol: u8) -> Result<Word> {
        let mut w = self.clone();
        w.push(symbol)?;
        Ok(w)
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        same_alphabet(self, other)?;
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Ok(Word {
            symbols,
            alphabet: self.alphabet,
        })
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.symbols)
    }

    pub fn reverse(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word {
            symbols,
            alphabet: self.alphabet,
        }
    }

    pub fn has_prefix(&self, p: &Word) -> bool {
        self.symbols.starts_with(&p.symbols)
    }

    pub fn has_suffix(&self, s: &Word) -> bool {
        self.symbols.ends_with(&s.symbols)
    }

    pub fn contains(&self, v: &Word) -> bool {
        contains(&self.symbols, &v.symbols)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", self.alphabet.display(s))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "{self}")
        }
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub(crate) fn same_alphabet(a: &Word, b: &Word) -> Result<()> {
    if a.alphabet != b.alphabet {
        return Err(Error::AlphabetMismatch {
            left: a.alphabet.q,
            right: b.alphabet.q,
        });
    }
    Ok(())
}

pub(crate) fn is_palindrome(s: &[u8]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// Start positions of (possibly overlapping) occurrences of a nonempty pattern.
pub(crate) fn occurrences<'a>(hay: &'a [u8], pat: &'a [u8]) -> impl Iterator<Item = usize> + 'a {
    debug_assert!(!pat.is_empty());
    hay.windows(pat.len())
        .enumerate()
        .filter(move |(_, win)| *win == pat)
        .map(|(i, _)| i)
}

pub(crate) fn contains(hay: &[u8], pat: &[u8]) -> bool {
    pat.is_empty() || hay.windows(pat.len()).any(|win| win == pat)
}

pub fn reverse(w: &Word) -> Word {
    w.reverse()
}

/// Drops the first and the last symbol.
pub fn trim(w: &Word) -> Result<Word> {
    require_len("trim", w, 2)?;
    Ok(w.slice(1..w.len() - 1))
}

/// Drops the first symbol.
pub fn ltrim(w: &Word) -> Result<Word> {
    require_len("ltrim", w, 1)?;
    Ok(w.slice(1..w.len()))
}

/// Drops the last symbol.
pub fn rtrim(w: &Word) -> Result<Word> {
    require_len("rtrim", w, 1)?;
    Ok(w.slice(0..w.len() - 1))
}

pub(crate) fn require_len(op: &'static str, w: &Word, required: usize) -> Result<()> {
    if w.len() < required {
        return Err(Error::LengthViolation {
            op,
            required,
            actual: w.len(),
        });
    }
    Ok(())
}

pub(crate) fn lcp_len(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

pub(crate) fn lcs_len(a: &[u8], b: &[u8]) -> usize {
    a.iter()
        .rev()
        .zip(b.iter().rev())
        .take_while(|(x, y)| x == y)
        .count()
}

/// Longest common prefix.
pub fn lcp(w1: &Word, w2: &Word) -> Result<Word> {
    same_alphabet(w1, w2)?;
    Ok(w1.prefix(lcp_len(&w1.symbols, &w2.symbols)))
}

/// Longest common suffix.
pub fn lcs(w1: &Word, w2: &Word) -> Result<Word> {
    same_alphabet(w1, w2)?;
    Ok(w1.suffix(lcs_len(&w1.symbols, &w2.symbols)))
}

/// Number of (possibly overlapping) occurrences of `v` in `u`.
pub fn occ(u: &Word, v: &Word) -> Result<usize> {
    same_alphabet(u, v)?;
    if v.is_empty() {
        return Err(Error::EmptyPattern);
    }
    Ok(occurrences(&u.symbols, &v.symbols).count())
}

pub fn is_factor(w: &Word, v: &Word) -> Result<bool> {
    same_alphabet(w, v)?;
    Ok(w.contains(v))
}

/// Every factor occurrence `w[i..j]`, shortest first, duplicates included.
///
/// The empty word is yielded once, first.
pub fn factor_iter(w: &Word) -> impl Iterator<Item = Word> + '_ {
    let n = w.len();
    std::iter::once(Word::empty(w.alphabet))
        .chain((1..=n).flat_map(move |len| (0..=n - len).map(move |i| w.slice(i..i + len))))
}

/// The set of distinct factors, including `ε` and `w` itself.
pub fn factors(w: &Word) -> BTreeSet<Word> {
    factor_iter(w).collect()
}

/// Reads the line-oriented text format: an optional `q=<n>` header followed
/// by one word per line. Blank lines and lines holding `ε` are empty words.
pub fn read_words(text: &str) -> Result<(Alphabet, Vec<Word>)> {
    let mut lines: Vec<&str> = text.lines().map(str::trim).collect();
    while lines.last() == Some(&"") {
        lines.pop();
    }
    let declared = match lines.first().and_then(|l| l.strip_prefix("q=")) {
        Some(n) => {
            let q = n
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Precondition(format!("bad alphabet header {:?}", lines[0])))?;
            lines.remove(0);
            Some(Alphabet::new(q)?)
        }
        None => None,
    };
    let alphabet = match declared {
        Some(a) => a,
        None => Alphabet::infer(lines.iter().copied())?,
    };
    let words = lines
        .iter()
        .map(|l| Word::parse(l, alphabet))
        .collect::<Result<Vec<_>>>()?;
    Ok((alphabet, words))
}

/// Writes words in the text format, always with a `q=<n>` header. The empty
/// word is written as `ε` so that it survives a round trip.
pub fn write_words<'a, I>(alphabet: Alphabet, words: I) -> String
where
    I: IntoIterator<Item = &'a Word>,
{
    let mut out = format!("q={}\n", alphabet.size());
    for w in words {
        out.push_str(&format!("{w:?}"));
        out.push('\n');
    }
    out
}
