//! Standard extensions of rich words.
//!
//! The standard letter after a rich word `w` with `|w| >= 2` is the letter
//! `a` for which `lps(wa) = a·lpps(w)·a`. It is the letter immediately before
//! the occurrence of `lpps(w)` as a suffix of `w`, and `wa` is always rich.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::pal::{require_rich, PalIndex};
use crate::word::{require_len, Word};

/// One-letter extension of a rich word, classified as standard or not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionStep {
    pub base: Word,
    pub letter: u8,
    pub is_standard: bool,
}

impl ExtensionStep {
    /// Classifies `base·letter`; errors if the base is too short or the
    /// extension is not rich.
    pub fn new(base: &Word, letter: u8) -> Result<Self> {
        let standard = standard_letter(base)?;
        let extended = base.with(letter)?;
        require_rich(&extended)?;
        Ok(ExtensionStep {
            base: base.clone(),
            letter,
            is_standard: letter == standard,
        })
    }

    pub fn word(&self) -> Word {
        self.base
            .with(self.letter)
            .expect("letter validated on construction")
    }
}

fn standard_letter(w: &Word) -> Result<u8> {
    require_len("standard extension", w, 2)?;
    require_rich(w)?;
    let index = PalIndex::build(w);
    Ok(index.standard_letter(w.len()).expect("nonempty prefix"))
}

/// `StdExt(w, 1)`.
pub fn std_ext1(w: &Word) -> Result<Word> {
    let a = standard_letter(w)?;
    w.with(a)
}

/// `StdExt(w, j)`: `j` standard steps.
pub fn std_extj(w: &Word, j: usize) -> Result<Word> {
    let a = standard_letter(w)?;
    let mut index = PalIndex::build(w);
    if j > 0 {
        index.push(a);
    }
    for _ in 1..j {
        let next = index.standard_letter(index.len()).expect("nonempty");
        index.push(next);
    }
    Ok(index.word())
}

/// Number of standard steps leading from the prefix `v` of `u` along `u`.
fn standard_run(u: &Word, v: &Word) -> Result<usize> {
    require_len("standard extension", v, 2)?;
    require_rich(v)?;
    if !u.has_prefix(v) {
        return Err(Error::NotAPrefix(format!("{v:?}")));
    }
    let mut index = PalIndex::build(v);
    let mut steps = 0;
    for &c in &u.symbols()[v.len()..] {
        if index.standard_letter(index.len()) != Some(c) {
            break;
        }
        index.push(c);
        steps += 1;
    }
    Ok(steps)
}

/// True iff `u = StdExt(v, |u| - |v|)`.
pub fn is_std_ext(u: &Word, v: &Word) -> Result<bool> {
    if !u.has_prefix(v) {
        require_len("standard extension", v, 2)?;
        require_rich(v)?;
        return Ok(false);
    }
    Ok(v.len() + standard_run(u, v)? == u.len())
}

/// Longest prefix of `u` that is a standard extension of `v`.
pub fn mse(u: &Word, v: &Word) -> Result<Word> {
    let steps = standard_run(u, v)?;
    Ok(u.prefix(v.len() + steps))
}

/// Letters `a` for which `wa` is rich.
pub fn rich_extensions(w: &Word) -> Result<BTreeSet<u8>> {
    let index = PalIndex::build(w);
    if !index.is_rich() {
        return Err(Error::NotRich(format!("{w:?}")));
    }
    Ok(w.alphabet()
        .symbols()
        .filter(|&a| index.probe(a).1)
        .collect())
}
