//! Palindromic suffixes, prefixes, closures and the richness test.
//!
//! [`PalIndex`] is a palindromic tree over an append-only word. Appending a
//! symbol creates a new node exactly when the longest palindromic suffix of
//! the new prefix occurs there for the first time, so a word is rich iff
//! every append created a node.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::{self, require_len, Alphabet, Word};

const NONE: u32 = u32::MAX;
/// Root of odd-length palindromes, length -1.
const ODD_ROOT: u32 = 0;
/// Root of even-length palindromes (the empty palindrome).
const EMPTY: u32 = 1;

#[derive(Clone, Debug)]
struct Node {
    len: i32,
    link: u32,
    parent: u32,
}

#[derive(Clone, Copy, Debug)]
struct Step {
    node: u32,
    fresh: bool,
}

/// Incremental palindrome index over a growing word.
///
/// Supports `push` and `pop` so that a depth-first walk over a tree of words
/// can share one index.
#[derive(Clone, Debug)]
pub struct PalIndex {
    alphabet: Alphabet,
    text: Vec<u8>,
    nodes: Vec<Node>,
    /// `nodes.len() * q` transition table.
    next: Vec<u32>,
    steps: Vec<Step>,
    stale: usize,
}

impl PalIndex {
    pub fn new(alphabet: Alphabet) -> Self {
        let q = alphabet.size();
        PalIndex {
            alphabet,
            text: Vec::new(),
            nodes: vec![
                Node {
                    len: -1,
                    link: ODD_ROOT,
                    parent: NONE,
                },
                Node {
                    len: 0,
                    link: ODD_ROOT,
                    parent: NONE,
                },
            ],
            next: vec![NONE; 2 * q],
            steps: Vec::new(),
            stale: 0,
        }
    }

    pub fn build(w: &Word) -> Self {
        let mut index = PalIndex::new(w.alphabet());
        for &s in w.symbols() {
            index.push(s);
        }
        index
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.text
    }

    pub fn word(&self) -> Word {
        Word::from_slice(self.alphabet, &self.text)
    }

    /// Distinct palindromic factors, counting `ε`.
    pub fn distinct_palindromes(&self) -> usize {
        self.nodes.len() - 1
    }

    /// True iff the longest palindromic suffix of every prefix is unioccurrent
    /// in that prefix.
    pub fn is_rich(&self) -> bool {
        self.stale == 0
    }

    fn last_node(&self) -> u32 {
        self.steps.last().map_or(EMPTY, |s| s.node)
    }

    fn transition(&self, node: u32, c: u8) -> u32 {
        self.next[node as usize * self.alphabet.size() + c as usize]
    }

    /// Walks suffix links from `node` until the palindrome can be wrapped by
    /// `c` at position `pos` (where `c` would sit).
    fn wrap(&self, mut node: u32, pos: usize, c: u8) -> u32 {
        loop {
            let len = self.nodes[node as usize].len;
            if len == -1 {
                return node;
            }
            let before = pos as i64 - len as i64 - 1;
            if before >= 0 && self.text[before as usize] == c {
                return node;
            }
            node = self.nodes[node as usize].link;
        }
    }

    /// Length of the longest palindromic suffix of `self + c` and whether it
    /// would be new, i.e. whether `self + c` keeps the richness criterion.
    pub fn probe(&self, c: u8) -> (usize, bool) {
        let pos = self.text.len();
        let parent = self.wrap(self.last_node(), pos, c);
        let len = (self.nodes[parent as usize].len + 2) as usize;
        (len, self.transition(parent, c) == NONE)
    }

    pub fn push(&mut self, c: u8) {
        assert!(
            (c as usize) < self.alphabet.size(),
            "symbol outside the alphabet"
        );
        let pos = self.text.len();
        let parent = self.wrap(self.last_node(), pos, c);
        self.text.push(c);
        let existing = self.transition(parent, c);
        if existing != NONE {
            self.steps.push(Step {
                node: existing,
                fresh: false,
            });
            self.stale += 1;
            return;
        }
        let len = self.nodes[parent as usize].len + 2;
        let link = if len == 1 {
            EMPTY
        } else {
            let up = self.nodes[parent as usize].link;
            let host = self.wrap(up, pos, c);
            self.transition(host, c)
        };
        let id = self.nodes.len() as u32;
        self.nodes.push(Node { len, link, parent });
        self.next
            .extend(std::iter::repeat_n(NONE, self.alphabet.size()));
        let q = self.alphabet.size();
        self.next[parent as usize * q + c as usize] = id;
        self.steps.push(Step {
            node: id,
            fresh: true,
        });
    }

    /// Removes the last symbol, restoring the exact previous state.
    pub fn pop(&mut self) -> Option<u8> {
        let step = self.steps.pop()?;
        let c = self.text.pop().expect("text and steps have equal length");
        if step.fresh {
            let node = self.nodes.pop().expect("fresh node is the newest");
            debug_assert_eq!(self.nodes.len() as u32, step.node);
            let q = self.alphabet.size();
            self.next.truncate(self.nodes.len() * q);
            self.next[node.parent as usize * q + c as usize] = NONE;
        } else {
            self.stale -= 1;
        }
        Some(c)
    }

    /// |lps| of the prefix of length `prefix_len`.
    pub fn lps_len(&self, prefix_len: usize) -> usize {
        if prefix_len == 0 {
            return 0;
        }
        self.nodes[self.steps[prefix_len - 1].node as usize].len as usize
    }

    /// |lpps| of the prefix of length `prefix_len >= 2`.
    pub fn lpps_len(&self, prefix_len: usize) -> usize {
        debug_assert!(prefix_len >= 2);
        let node = self.steps[prefix_len - 1].node as usize;
        let len = self.nodes[node].len as usize;
        if len < prefix_len {
            len
        } else {
            self.nodes[self.nodes[node].link as usize].len.max(0) as usize
        }
    }

    /// Whether the lps of the prefix of length `prefix_len` first occurs there.
    pub fn lps_is_new(&self, prefix_len: usize) -> bool {
        self.steps[prefix_len - 1].fresh
    }

    /// The letter a standard step appends to the prefix of length
    /// `prefix_len`, or `None` for the empty prefix.
    ///
    /// For `prefix_len >= 2` this is the letter preceding the longest proper
    /// palindromic suffix. A one-letter prefix `x` is standardly followed by
    /// `x` again.
    pub fn standard_letter(&self, prefix_len: usize) -> Option<u8> {
        match prefix_len {
            0 => None,
            1 => Some(self.text[0]),
            n => Some(self.text[n - 1 - self.lpps_len(n)]),
        }
    }
}

/// Longest palindromic suffix.
pub fn lps(w: &Word) -> Word {
    let index = PalIndex::build(w);
    w.suffix(index.lps_len(w.len()))
}

/// Longest palindromic prefix.
pub fn lpp(w: &Word) -> Word {
    lps(&w.reverse()).reverse()
}

/// Longest proper palindromic suffix; every proper suffix of `w` is a suffix
/// of `ltrim(w)`.
pub fn lpps(w: &Word) -> Result<Word> {
    require_len("lpps", w, 2)?;
    Ok(lps(&w.slice(1..w.len())))
}

/// Longest proper palindromic prefix.
pub fn lppp(w: &Word) -> Result<Word> {
    require_len("lppp", w, 2)?;
    Ok(lpp(&w.slice(0..w.len() - 1)))
}

/// All distinct palindromic factors, including `ε`.
pub fn pal_factors(w: &Word) -> BTreeSet<Word> {
    let s = w.symbols();
    let mut out = BTreeSet::new();
    out.insert(Word::empty(w.alphabet()));
    // Expand around every center; each palindrome is reached from its own center.
    for center in 0..(2 * s.len()).saturating_sub(1) {
        let (mut lo, mut hi) = (center / 2, center.div_ceil(2));
        while hi < s.len() && s[lo] == s[hi] {
            out.insert(w.slice(lo..hi + 1));
            if lo == 0 {
                break;
            }
            lo -= 1;
            hi += 1;
        }
    }
    out
}

/// Palindromic factors of `w` that do not contain `r`.
pub fn pal_factors_avoiding(w: &Word, r: &Word) -> Result<BTreeSet<Word>> {
    word::same_alphabet(w, r)?;
    Ok(pal_factors(w)
        .into_iter()
        .filter(|p| !p.contains(r))
        .collect())
}

pub fn is_rich(w: &Word) -> bool {
    let mut index = PalIndex::new(w.alphabet());
    for &s in w.symbols() {
        index.push(s);
        if !index.is_rich() {
            return false;
        }
    }
    true
}

pub(crate) fn require_rich(w: &Word) -> Result<()> {
    if is_rich(w) {
        Ok(())
    } else {
        Err(Error::NotRich(format!("{w:?}")))
    }
}

/// Shortest palindrome having `w` as a prefix: `u·lps(w)·uᴿ` for `w = u·lps(w)`.
pub fn pal_closure(w: &Word) -> Word {
    let head = w.len() - lps(w).len();
    let mut symbols = w.symbols().to_vec();
    symbols.extend(w.symbols()[..head].iter().rev());
    Word::from_slice(w.alphabet(), &symbols)
}

/// Factors of `w` holding exactly two occurrences of `u`, as prefix and suffix.
pub fn complete_returns(w: &Word, u: &Word) -> Result<BTreeSet<Word>> {
    word::same_alphabet(w, u)?;
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let starts: Vec<usize> = word::occurrences(w.symbols(), u.symbols()).collect();
    if starts.is_empty() {
        return Err(Error::NotAFactor(format!("{u:?}")));
    }
    Ok(starts
        .windows(2)
        .map(|p| w.slice(p[0]..p[1] + u.len()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, Alphabet::new(10).unwrap()).unwrap()
    }

    fn brute_lps(x: &Word) -> Word {
        (0..=x.len())
            .map(|k| x.suffix(k))
            .filter(|s| s.is_palindrome())
            .max_by_key(|s| s.len())
            .unwrap()
    }

    #[test]
    fn longest_palindromic_suffix() {
        assert_eq!(lps(&w("1239993223999324423999")), w("999324423999"));
        assert_eq!(lps(&w("1239995999")), w("9995999"));
        assert_eq!(lps(&w("7")), w("7"));
        assert_eq!(lps(&w("")), w(""));
        assert_eq!(lpp(&w("")), w(""));
        assert_eq!(lpp(&w("12145656")), w("121"));
    }

    #[test]
    fn proper_variants() {
        assert_eq!(lpps(&w("0110")).unwrap(), w("0"));
        assert_eq!(lpps(&w("11")).unwrap(), w("1"));
        assert_eq!(lppp(&w("12399321")).unwrap(), w("1"));
        assert_eq!(lpps(&w("01")).unwrap(), w("1"));
        assert!(lpps(&w("1")).is_err());
        assert!(lppp(&w("")).is_err());
    }

    #[test]
    fn palindromic_factor_sets() {
        let got = pal_factors(&w("0101"));
        let want: BTreeSet<Word> = ["", "0", "1", "010", "101"].iter().map(|s| w(s)).collect();
        assert_eq!(got, want);
        let avoiding = pal_factors_avoiding(&w("0101"), &w("0")).unwrap();
        let want: BTreeSet<Word> = ["", "1"].iter().map(|s| w(s)).collect();
        assert_eq!(avoiding, want);
        assert_eq!(pal_factors(&w("")).len(), 1);
    }

    #[test]
    fn richness() {
        assert!(is_rich(&w("110101100110011")));
        assert!(is_rich(&w("")));
        assert!(!is_rich(&w("00101100")));
        assert!(is_rich(&w("0010110")));
    }

    #[test]
    fn closure() {
        assert_eq!(pal_closure(&w("12399")), w("12399321"));
        assert_eq!(pal_closure(&w("01")), w("010"));
        assert_eq!(pal_closure(&w("0110")), w("0110"));
        assert_eq!(pal_closure(&w("")), w(""));
    }

    #[test]
    fn returns() {
        let r = complete_returns(&w("123999322399932442399932255223993"), &w("999")).unwrap();
        assert!(r.contains(&w("9993223999")));
        assert_eq!(
            complete_returns(&w("11"), &w("1")).unwrap(),
            [w("11")].into_iter().collect()
        );
        assert!(matches!(
            complete_returns(&w("11"), &w("2")),
            Err(Error::NotAFactor(_))
        ));
        assert_eq!(complete_returns(&w("11"), &w("")), Err(Error::EmptyPattern));
    }

    #[test]
    fn index_push_pop_restores_state() {
        let x = w("1101011001100110");
        let mut index = PalIndex::build(&x);
        let snapshot = (index.nodes.len(), index.next.clone(), index.stale);
        index.push(0);
        index.push(0);
        index.pop();
        index.pop();
        assert_eq!(
            snapshot,
            (index.nodes.len(), index.next.clone(), index.stale)
        );
        for n in 1..=x.len() {
            assert_eq!(index.lps_len(n), brute_lps(&x.prefix(n)).len());
        }
    }

    #[test]
    fn probe_matches_push() {
        let x = w("0120210");
        let index = PalIndex::build(&x);
        for c in 0..3 {
            let (len, fresh) = index.probe(c);
            let mut grown = index.clone();
            grown.push(c);
            assert_eq!(len, grown.lps_len(x.len() + 1));
            assert_eq!(fresh, grown.lps_is_new(x.len() + 1));
        }
    }
}
