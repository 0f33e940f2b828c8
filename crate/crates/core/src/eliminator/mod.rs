//! Elimination of long flexed palindromes.
//!
//! [`elm`] alternates [`ruo`], which trims a rich word to a factor where the
//! two anchor words occur exactly once (up to reversal) at its ends, with
//! [`rdc_wrd`](crate::reduction::rdc_wrd) applied to [`mfp`], the longest
//! reducible flexed palindrome, until every flexed palindrome is at most as
//! long as the longer anchor.

pub mod bounds;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pal::{require_rich, PalIndex};
use crate::reduction::{flexed_from_index, gamma_check, rdc_wrd, ReductionTrace};
use crate::word::{self, Word};

/// Start positions where `u` or `uᴿ` occurs in `t`.
fn orientation_positions(t: &[u8], u: &[u8]) -> Vec<usize> {
    let rev: Vec<u8> = u.iter().rev().copied().collect();
    t.windows(u.len())
        .enumerate()
        .filter(|(_, win)| *win == u || *win == &rev[..])
        .map(|(i, _)| i)
        .collect()
}

/// True iff `u` and `uᴿ` together occur at exactly one position of `t`.
///
/// For a palindrome this means `u` is unioccurrent in `t`; otherwise exactly
/// one of `u`, `uᴿ` is a factor and it occurs once.
pub fn is_reverse_unioccurrent(t: &Word, u: &Word) -> bool {
    !u.is_empty() && orientation_positions(t.symbols(), u.symbols()).len() == 1
}

fn starts_with_either(t: &Word, u: &Word) -> bool {
    t.has_prefix(u) || t.has_prefix(&u.reverse())
}

fn ends_with_either(t: &Word, u: &Word) -> bool {
    t.has_suffix(u) || t.has_suffix(&u.reverse())
}

/// The first factor `t` of `w`, by (length, start position), such that
/// `w1` and `w2` are reverse-unioccurrent in `t`, `t` starts with `w1` or
/// `w1ᴿ`, and `t` ends with `w2` or `w2ᴿ`.
///
/// `w` only needs to start with `w1` or `w1ᴿ` and end with `w2` or `w2ᴿ`,
/// which is what holds inside the elimination loop.
pub fn ruo(w: &Word, w1: &Word, w2: &Word) -> Result<Word> {
    word::same_alphabet(w, w1)?;
    word::same_alphabet(w, w2)?;
    if w1.is_empty() || w2.is_empty() {
        return Err(Error::Precondition("anchor words must be nonempty".into()));
    }
    for x in [w, w1, w2] {
        require_rich(x)?;
    }
    if !starts_with_either(w, w1) {
        return Err(Error::Precondition(format!(
            "{w:?} does not start with {w1:?} or its reversal"
        )));
    }
    if !ends_with_either(w, w2) {
        return Err(Error::Precondition(format!(
            "{w:?} does not end with {w2:?} or its reversal"
        )));
    }
    let s = w.symbols();
    let firsts = orientation_positions(s, w1.symbols());
    let lasts = orientation_positions(s, w2.symbols());
    let inside = |positions: &[usize], len: usize, start: usize, end: usize| {
        positions
            .iter()
            .filter(|&&p| p >= start && p + len <= end)
            .count()
    };
    let mut best: Option<(usize, usize)> = None;
    for &start in &firsts {
        for &p in &lasts {
            let end = p + w2.len();
            if p < start || end < start + w1.len() {
                continue;
            }
            let key = (end - start, start);
            if best.is_some_and(|b| b <= key) {
                continue;
            }
            if inside(&firsts, w1.len(), start, end) == 1
                && inside(&lasts, w2.len(), start, end) == 1
            {
                best = Some(key);
            }
        }
    }
    match best {
        Some((len, start)) => Ok(w.slice(start..start + len)),
        None => Err(Error::NoReverseUnioccurrentFactor {
            w: format!("{w:?}"),
            w1: format!("{w1:?}"),
            w2: format!("{w2:?}"),
        }),
    }
}

/// A longest flexed palindrome `r` of `w` with `(w, r) ∈ Γ` and `|r| > n`,
/// the lexicographically least among ties; `ε` if there is none.
pub fn mfp(w: &Word, n: usize) -> Result<Word> {
    let index = PalIndex::build(w);
    if !index.is_rich() {
        return Err(Error::NotRich(format!("{w:?}")));
    }
    let flexed = flexed_from_index(&index);
    let longest = flexed.max_len();
    if longest <= n.max(2) {
        return Ok(Word::empty(w.alphabet()));
    }
    let mut candidates: Vec<&Word> = flexed
        .iter()
        .map(|rec| &rec.palindrome)
        .filter(|r| r.len() == longest)
        .collect();
    candidates.sort();
    Ok(candidates
        .into_iter()
        .find(|r| gamma_check(w, r).is_ok())
        .cloned()
        .unwrap_or_else(|| Word::empty(w.alphabet())))
}

/// One pass of the elimination loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationStep {
    pub before: Word,
    pub r: Word,
    pub reduction: ReductionTrace,
    /// `ruo` of the reduced word.
    pub after: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationTrace {
    pub w: Word,
    pub w1: Word,
    pub w2: Word,
    pub m: usize,
    /// `Σ occ(w, r)` over the flexed palindromes `r` of `w`.
    pub iteration_cap: usize,
    /// `ruo(w, w1, w2)`.
    pub start: Word,
    pub steps: Vec<EliminationStep>,
    #[serde(rename = "final")]
    pub final_word: Word,
}

impl EliminationTrace {
    pub fn iterations(&self) -> usize {
        self.steps.len()
    }

    /// Which of the guarantees on the eliminated word fail, if any: richness,
    /// `w1` or `w1ᴿ` as a prefix, `w2` or `w2ᴿ` as a suffix, and no flexed
    /// palindrome longer than `m`.
    pub fn violations(&self) -> Vec<String> {
        let t = &self.final_word;
        let mut out = Vec::new();
        let index = PalIndex::build(t);
        if !index.is_rich() {
            out.push(format!("{t:?} is not rich"));
        }
        if !starts_with_either(t, &self.w1) {
            out.push(format!(
                "{t:?} does not start with {:?} or its reversal",
                self.w1
            ));
        }
        if !ends_with_either(t, &self.w2) {
            out.push(format!(
                "{t:?} does not end with {:?} or its reversal",
                self.w2
            ));
        }
        if index.is_rich() {
            for rec in &flexed_from_index(&index) {
                if rec.palindrome.len() > self.m {
                    out.push(format!(
                        "flexed palindrome {:?} is longer than {}",
                        rec.palindrome, self.m
                    ));
                }
            }
        }
        out
    }
}

/// The elimination procedure: starting from `ruo(w, w1, w2)`, reduce by
/// `mfp(res, m)` and re-apply `ruo` until no flexed palindrome longer than
/// `m = max(|w1|, |w2|)` is reducible.
pub fn elm(w: &Word, w1: &Word, w2: &Word) -> Result<(Word, EliminationTrace)> {
    if !w.has_prefix(w1) {
        return Err(Error::NotAPrefix(format!("{w1:?}")));
    }
    if !w.has_suffix(w2) {
        return Err(Error::Precondition(format!(
            "{w2:?} is not a suffix of {w:?}"
        )));
    }
    let m = w1.len().max(w2.len());
    let start = ruo(w, w1, w2)?;
    let index = PalIndex::build(w);
    let iteration_cap = flexed_from_index(&index)
        .iter()
        .map(|rec| word::occurrences(w.symbols(), rec.palindrome.symbols()).count())
        .sum();

    let mut res = start.clone();
    let mut steps = Vec::new();
    loop {
        let r = mfp(&res, m)?;
        if r.is_empty() {
            break;
        }
        if steps.len() == iteration_cap {
            return Err(Error::Internal(format!(
                "elimination exceeded {iteration_cap} iterations"
            )));
        }
        let (reduced, reduction) = rdc_wrd(&res, &r)?;
        let after = ruo(&reduced, w1, w2)?;
        steps.push(EliminationStep {
            before: res,
            r,
            reduction,
            after: after.clone(),
        });
        res = after;
    }
    let trace = EliminationTrace {
        w: w.clone(),
        w1: w1.clone(),
        w2: w2.clone(),
        m,
        iteration_cap,
        start,
        steps,
        final_word: res.clone(),
    };
    Ok((res, trace))
}
