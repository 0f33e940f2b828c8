//! Brute-force reference implementations over raw symbol slices.
//!
//! Nothing here uses the library's palindromic index, so the suites can
//! compare the index-based code against straight definitions.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

pub fn is_pal(s: &[u8]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// Distinct palindromic factors, `ε` included.
pub fn pal_set(s: &[u8]) -> HashSet<Vec<u8>> {
    let mut out = HashSet::new();
    out.insert(Vec::new());
    for i in 0..s.len() {
        for j in i + 1..=s.len() {
            if is_pal(&s[i..j]) {
                out.insert(s[i..j].to_vec());
            }
        }
    }
    out
}

pub fn is_rich(s: &[u8]) -> bool {
    pal_set(s).len() == s.len() + 1
}

pub fn lps(s: &[u8]) -> &[u8] {
    (0..=s.len()).map(|i| &s[i..]).find(|t| is_pal(t)).unwrap()
}

pub fn lpp(s: &[u8]) -> &[u8] {
    (0..=s.len())
        .rev()
        .map(|i| &s[..i])
        .find(|t| is_pal(t))
        .unwrap()
}

/// Longest proper palindromic suffix, for `|s| >= 2`.
pub fn lpps(s: &[u8]) -> &[u8] {
    lps(&s[1..])
}

/// The letter `a` with `lps(s·a) = a·lpps(s)·a`, found by trying every
/// letter below `q`. For `|s| = 1` the standard letter is `s[0]`.
pub fn standard_letter(s: &[u8], q: u8) -> u8 {
    if s.len() == 1 {
        return s[0];
    }
    let core = lpps(s);
    let mut hits = (0..q).filter(|&a| {
        let mut t = s.to_vec();
        t.push(a);
        let mut want = vec![a];
        want.extend_from_slice(core);
        want.push(a);
        lps(&t) == &want[..]
    });
    let a = hits.next().expect("a standard letter exists");
    assert!(hits.next().is_none(), "the standard letter is unique");
    a
}

/// `FlxPal(s)` from the definition.
pub fn flexed(s: &[u8], q: u8) -> BTreeSet<Vec<u8>> {
    (1..s.len())
        .filter(|&n| s[n] != standard_letter(&s[..n], q))
        .map(|n| lps(&s[..=n]).to_vec())
        .collect()
}

pub fn occ(u: &[u8], v: &[u8]) -> usize {
    assert!(!v.is_empty());
    if v.len() > u.len() {
        return 0;
    }
    (0..=u.len() - v.len())
        .filter(|&i| &u[i..i + v.len()] == v)
        .count()
}

pub fn contains(u: &[u8], v: &[u8]) -> bool {
    v.is_empty() || u.windows(v.len()).any(|w| w == v)
}

/// All words of length `n` over `q` letters, in lexicographic order.
pub fn all_words(q: u8, n: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = (q as u64).pow(n as u32);
    (0..total).map(move |mut k| {
        let mut s = vec![0u8; n];
        for slot in s.iter_mut().rev() {
            *slot = (k % q as u64) as u8;
            k /= q as u64;
        }
        s
    })
}
