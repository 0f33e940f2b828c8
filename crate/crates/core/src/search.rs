//! Exhaustive enumeration of rich words and a budget-bounded search for a
//! rich word containing two given rich words.
//!
//! Every prefix of a rich word is rich, so walking the tree of one-letter
//! rich extensions from `ε` reaches every rich word exactly once.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pal::{pal_closure, pal_factors, require_rich, PalIndex};
use crate::word::{self, Alphabet, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub alphabet: Alphabet,
    pub max_len: usize,
    /// Emit one representative per letter-renaming class: letters make their
    /// first appearance in increasing order.
    pub canonical: bool,
}

impl EnumConfig {
    pub fn new(alphabet: Alphabet, max_len: usize) -> Self {
        EnumConfig {
            alphabet,
            max_len,
            canonical: false,
        }
    }

    pub fn canonical(mut self, on: bool) -> Self {
        self.canonical = on;
        self
    }

    /// Children of the node held by `index` are the letters below this limit.
    fn child_limit(&self, index: &PalIndex) -> u8 {
        if index.len() >= self.max_len {
            return 0;
        }
        let q = self.alphabet.size() as u8;
        if !self.canonical {
            return q;
        }
        let fresh = index.symbols().iter().max().map_or(1, |&m| m + 2);
        fresh.min(q)
    }
}

/// Depth-first stream of rich words, `ε` first, children in letter order.
pub struct RichWords {
    config: EnumConfig,
    index: PalIndex,
    /// `cursor[d]` is the next letter to try below the depth-`d` node.
    cursor: Vec<u8>,
    started: bool,
}

pub fn enumerate_rich(config: EnumConfig) -> RichWords {
    RichWords {
        config,
        index: PalIndex::new(config.alphabet),
        cursor: vec![0],
        started: false,
    }
}

impl Iterator for RichWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if !self.started {
            self.started = true;
            return Some(Word::empty(self.config.alphabet));
        }
        loop {
            let limit = self.config.child_limit(&self.index);
            let top = self.cursor.last_mut()?;
            if *top >= limit {
                self.cursor.pop();
                if self.cursor.is_empty() {
                    return None;
                }
                self.index.pop();
                continue;
            }
            let c = *top;
            *top += 1;
            if self.index.probe(c).1 {
                self.index.push(c);
                self.cursor.push(0);
                return Some(self.index.word());
            }
        }
    }
}

fn visit_from<F: FnMut(&PalIndex)>(config: &EnumConfig, index: &mut PalIndex, f: &mut F) {
    f(index);
    for c in 0..config.child_limit(index) {
        if index.probe(c).1 {
            index.push(c);
            visit_from(config, index, f);
            index.pop();
        }
    }
}

/// Calls `f` on the index of every rich word in tree order, `ε` included.
pub fn visit_rich<F: FnMut(&PalIndex)>(config: EnumConfig, mut f: F) {
    let mut index = PalIndex::new(config.alphabet);
    visit_from(&config, &mut index, &mut f);
}

/// Like [`visit_rich`], but subtrees below a fixed depth are visited in
/// parallel and in no particular order.
pub fn visit_rich_par<F: Fn(&PalIndex) + Sync>(config: EnumConfig, f: F) {
    let split = config.max_len.min(4);
    let mut roots = Vec::new();
    let shallow = EnumConfig {
        max_len: split,
        ..config
    };
    visit_rich(shallow, |index| {
        if index.len() < split {
            f(index);
        } else {
            roots.push(index.clone());
        }
    });
    roots.into_par_iter().for_each(|mut index| {
        let mut g = |i: &PalIndex| f(i);
        visit_from(&config, &mut index, &mut g);
    });
}

/// Number of rich words of each length `0..=max_len`.
pub fn count_by_length(config: EnumConfig) -> Vec<u64> {
    let mut counts = vec![0u64; config.max_len + 1];
    visit_rich(config, |index| counts[index.len()] += 1);
    counts
}

/// Parallel [`count_by_length`].
pub fn count_by_length_par(config: EnumConfig) -> Vec<u64> {
    use std::sync::atomic::{AtomicU64, Ordering};
    let counts: Vec<AtomicU64> = (0..=config.max_len).map(|_| AtomicU64::new(0)).collect();
    visit_rich_par(config, |index| {
        counts[index.len()].fetch_add(1, Ordering::Relaxed);
    });
    counts.into_iter().map(AtomicU64::into_inner).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_len: usize,
    pub max_nodes: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SearchStatus {
    Witness,
    /// Nothing found within the budget. This is not a proof of absence.
    ExhaustedBudget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchVerdict {
    pub status: SearchStatus,
    pub witness: Option<Word>,
    /// Tree nodes visited.
    pub explored: u64,
    pub budget: Budget,
}

struct Targets {
    w1: Word,
    w2: Word,
    w1_rev: Word,
    w2_rev: Word,
}

impl Targets {
    fn holds_exactly(&self, s: &[u8]) -> bool {
        word::contains(s, self.w1.symbols()) && word::contains(s, self.w2.symbols())
    }

    fn holds_up_to_reversal(&self, s: &[u8]) -> bool {
        (word::contains(s, self.w1.symbols()) || word::contains(s, self.w1_rev.symbols()))
            && (word::contains(s, self.w2.symbols()) || word::contains(s, self.w2_rev.symbols()))
    }
}

enum Walk {
    Continue,
    Found(Word),
    OutOfNodes,
}

struct Walker<'a> {
    targets: &'a Targets,
    max_nodes: u64,
    explored: &'a AtomicU64,
    /// Shortest closure-based witness seen so far.
    fallback: Option<Word>,
}

impl Walker<'_> {
    fn offer(&mut self, candidate: Option<Word>) {
        if let Some(c) = candidate {
            if self.fallback.as_ref().is_none_or(|f| c.len() < f.len()) {
                self.fallback = Some(c);
            }
        }
    }

    /// Counts one more node, or reports that the budget is spent.
    fn take_node(&self) -> bool {
        if self.explored.fetch_add(1, Ordering::Relaxed) >= self.max_nodes {
            self.explored.fetch_sub(1, Ordering::Relaxed);
            return false;
        }
        true
    }

    /// Rich children of `index`, standard letter first.
    fn children(index: &PalIndex) -> Vec<u8> {
        let q = index.alphabet().size() as u8;
        let first = index.standard_letter(index.len());
        first
            .into_iter()
            .chain((0..q).filter(|&c| Some(c) != first))
            .filter(|&c| index.probe(c).1)
            .collect()
    }

    /// Depth-first walk down to words of length `target`.
    fn walk(&mut self, index: &mut PalIndex, target: usize) -> Walk {
        if index.len() == target {
            let s = index.symbols();
            if self.targets.holds_exactly(s) {
                return Walk::Found(index.word());
            }
            if self.targets.holds_up_to_reversal(s) {
                self.offer(Some(pal_closure(&index.word())));
            }
            return Walk::Continue;
        }
        for c in Self::children(index) {
            if !self.take_node() {
                return Walk::OutOfNodes;
            }
            index.push(c);
            let outcome = self.walk(index, target);
            index.pop();
            if !matches!(outcome, Walk::Continue) {
                return outcome;
            }
        }
        Walk::Continue
    }

    /// Nodes at length `depth`, in walk order. `None` if the budget ran out.
    fn frontier(&self, index: &mut PalIndex, depth: usize, out: &mut Vec<PalIndex>) -> bool {
        if index.len() == depth {
            out.push(index.clone());
            return true;
        }
        for c in Self::children(index) {
            if !self.take_node() {
                return false;
            }
            index.push(c);
            let ok = self.frontier(index, depth, out);
            index.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    /// One deepening round over the subtrees below `frontier`, in parallel.
    /// The result is the one the sequential walk would give unless the node
    /// budget runs out.
    fn walk_par(&mut self, frontier: Vec<PalIndex>, target: usize) -> Walk {
        let results: Vec<(Walk, Option<Word>)> = frontier
            .into_par_iter()
            .map(|mut index| {
                let mut sub = Walker {
                    targets: self.targets,
                    max_nodes: self.max_nodes,
                    explored: self.explored,
                    fallback: None,
                };
                let outcome = sub.walk(&mut index, target);
                (outcome, sub.fallback)
            })
            .collect();
        let mut out_of_nodes = false;
        for (outcome, fallback) in results {
            self.offer(fallback);
            match outcome {
                Walk::Found(w) => return Walk::Found(w),
                Walk::OutOfNodes => out_of_nodes = true,
                Walk::Continue => {}
            }
        }
        if out_of_nodes {
            Walk::OutOfNodes
        } else {
            Walk::Continue
        }
    }
}

/// Depth below which [`find_common_superword_par`] splits the search tree.
const SPLIT_DEPTH: usize = 4;

fn common_superword(w1: &Word, w2: &Word, budget: Budget, parallel: bool) -> Result<SearchVerdict> {
    word::same_alphabet(w1, w2)?;
    require_rich(w1)?;
    require_rich(w2)?;
    let verdict = |status, witness, explored| SearchVerdict {
        status,
        witness,
        explored,
        budget,
    };
    if w1.contains(w2) {
        return Ok(verdict(SearchStatus::Witness, Some(w1.clone()), 0));
    }
    if w2.contains(w1) {
        return Ok(verdict(SearchStatus::Witness, Some(w2.clone()), 0));
    }
    let targets = Targets {
        w1: w1.clone(),
        w2: w2.clone(),
        w1_rev: w1.reverse(),
        w2_rev: w2.reverse(),
    };
    let explored = AtomicU64::new(0);
    let mut walker = Walker {
        targets: &targets,
        max_nodes: budget.max_nodes,
        explored: &explored,
        fallback: None,
    };
    let mut found = None;
    for target in 1..=budget.max_len {
        if walker.fallback.as_ref().is_some_and(|f| f.len() <= target) {
            break;
        }
        let mut root = PalIndex::new(w1.alphabet());
        let outcome = if parallel {
            let mut frontier = Vec::new();
            if walker.frontier(&mut root, target.min(SPLIT_DEPTH), &mut frontier) {
                walker.walk_par(frontier, target)
            } else {
                Walk::OutOfNodes
            }
        } else {
            walker.walk(&mut root, target)
        };
        match outcome {
            Walk::Found(w) => {
                found = Some(w);
                break;
            }
            Walk::OutOfNodes => break,
            Walk::Continue => {}
        }
    }
    let witness = found.or(walker.fallback.take());
    if let Some(w) = &witness {
        if !(crate::pal::is_rich(w) && w.contains(w1) && w.contains(w2)) {
            return Err(Error::Internal(format!(
                "witness {w:?} failed re-validation"
            )));
        }
    }
    let status = if witness.is_some() {
        SearchStatus::Witness
    } else {
        SearchStatus::ExhaustedBudget
    };
    Ok(verdict(status, witness, explored.into_inner()))
}

/// Searches the rich words of length at most `budget.max_len` for one that
/// contains `w1` and `w2`, by iterative deepening with the standard child
/// first.
///
/// A word containing each of `w1`, `w2` only up to reversal is turned into a
/// witness by palindromic closure, which may exceed `budget.max_len`. The
/// witness returned is a shortest one.
pub fn find_common_superword(w1: &Word, w2: &Word, budget: Budget) -> Result<SearchVerdict> {
    common_superword(w1, w2, budget, false)
}

/// [`find_common_superword`] with each deepening round split across
/// subtrees. Gives the same witness unless the node budget runs out; the
/// explored count can be higher since sibling subtrees finish their round.
pub fn find_common_superword_par(w1: &Word, w2: &Word, budget: Budget) -> Result<SearchVerdict> {
    common_superword(w1, w2, budget, true)
}

/// Number of distinct palindromic factors of each length `n >= 1`.
pub fn pal_complexity_profile(w: &Word) -> BTreeMap<usize, usize> {
    let mut profile = BTreeMap::new();
    for p in pal_factors(w).into_iter().filter(|p| !p.is_empty()) {
        *profile.entry(p.len()).or_insert(0) += 1;
    }
    profile
}
