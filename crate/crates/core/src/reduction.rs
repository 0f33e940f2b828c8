//! Flexed palindromes and the reduction of a rich word by a longest flexed
//! palindrome.
//!
//! For a pair `(w, r)` accepted by [`gamma_check`], [`rdc_wrd`] builds a rich
//! word with strictly fewer occurrences of `r`, no new flexed palindromes,
//! and the first and last `|r| - 1` letters of `w` preserved. Each call
//! re-verifies those properties before returning.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pal::{is_rich, lpp, lps, pal_closure, PalIndex};
use crate::word::{self, lcp_len, lcs_len, Word};

/// A flexed palindrome together with the prefix step that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlexRecord {
    /// `lps(ub)` at the flexed step.
    pub palindrome: Word,
    /// `|ub|`: length of the prefix at which the palindrome arises.
    pub prefix_len: usize,
    /// `lps(StdExt(u, 1))`, the standard palindromic replacement.
    pub replacement: Word,
}

/// The flexed palindromes of a rich word, in order of appearance.
///
/// In a rich word every prefix step produces a new longest palindromic
/// suffix, so the palindromes here are pairwise distinct.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FlexedPalindromes {
    records: Vec<FlexRecord>,
}

impl FlexedPalindromes {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FlexRecord> {
        self.records.iter()
    }

    pub fn get(&self, r: &Word) -> Option<&FlexRecord> {
        self.records.iter().find(|rec| &rec.palindrome == r)
    }

    pub fn contains(&self, r: &Word) -> bool {
        self.get(r).is_some()
    }

    pub fn max_len(&self) -> usize {
        self.records
            .iter()
            .map(|r| r.palindrome.len())
            .max()
            .unwrap_or(0)
    }

    pub fn palindromes(&self) -> BTreeSet<Word> {
        self.records.iter().map(|r| r.palindrome.clone()).collect()
    }

    /// Records arising within the prefix of length `len`, i.e. `FlxPal` of
    /// that prefix.
    pub fn within_prefix(&self, len: usize) -> impl Iterator<Item = &FlexRecord> {
        self.records.iter().filter(move |r| r.prefix_len <= len)
    }
}

impl<'a> IntoIterator for &'a FlexedPalindromes {
    type Item = &'a FlexRecord;
    type IntoIter = std::slice::Iter<'a, FlexRecord>;

    fn into_iter(self) -> Self::IntoIter {
        self.records.iter()
    }
}

/// Flexed steps read off an index built over a rich word.
///
/// The step appending to the empty prefix is never flexed; a step `xb` from
/// a one-letter prefix is standard iff `b = x`.
pub(crate) fn flexed_from_index(index: &PalIndex) -> FlexedPalindromes {
    let alphabet = index.alphabet();
    let text = index.symbols();
    let mut records = Vec::new();
    for n in 1..text.len() {
        let standard = index.standard_letter(n).expect("nonempty prefix");
        if text[n] == standard {
            continue;
        }
        let lps_len = index.lps_len(n + 1);
        let core = if n >= 2 { index.lpps_len(n) } else { 0 };
        let mut replacement = Vec::with_capacity(core + 2);
        replacement.push(standard);
        replacement.extend_from_slice(&text[n - core..n]);
        replacement.push(standard);
        records.push(FlexRecord {
            palindrome: Word::from_slice(alphabet, &text[n + 1 - lps_len..=n]),
            prefix_len: n + 1,
            replacement: Word::from_slice(alphabet, &replacement),
        });
    }
    FlexedPalindromes { records }
}

/// `FlxPal(w)` with the position and standard replacement of each member.
pub fn flx_pal(w: &Word) -> Result<FlexedPalindromes> {
    let index = PalIndex::build(w);
    if !index.is_rich() {
        return Err(Error::NotRich(format!("{w:?}")));
    }
    Ok(flexed_from_index(&index))
}

/// Standard palindromic replacement `spr(w, r)`.
pub fn std_pal_rep(w: &Word, r: &Word) -> Result<Word> {
    word::same_alphabet(w, r)?;
    if !is_rich(r) {
        return Err(Error::NotRich(format!("{r:?}")));
    }
    flx_pal(w)?
        .get(r)
        .map(|rec| rec.replacement.clone())
        .ok_or_else(|| Error::NotFlexed(format!("{r:?}")))
}

/// Why a pair `(w, r)` is not in Γ. Conditions are checked in order and the
/// first failure is reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaRejection {
    /// Condition 1: `w` or `r` is not a rich word over the common alphabet.
    NotRich {
        word: Word,
    },
    AlphabetMismatch,
    /// Condition 2: `|r| > 2`.
    TooShort {
        len: usize,
    },
    /// Condition 3: `r ∈ FlxPal(w)`.
    NotFlexed,
    /// Condition 4: `r ∉ Factor(lpp(w))`.
    InLongestPalindromicPrefix {
        lpp: Word,
    },
    /// Condition 5: `r` has maximal length among flexed palindromes.
    NotLongest {
        longest: Word,
    },
}

impl GammaRejection {
    pub fn condition(&self) -> u8 {
        match self {
            GammaRejection::NotRich { .. } | GammaRejection::AlphabetMismatch => 1,
            GammaRejection::TooShort { .. } => 2,
            GammaRejection::NotFlexed => 3,
            GammaRejection::InLongestPalindromicPrefix { .. } => 4,
            GammaRejection::NotLongest { .. } => 5,
        }
    }
}

impl fmt::Display for GammaRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} ", self.condition())?;
        match self {
            GammaRejection::NotRich { word } => write!(f, "(w, r rich): {word:?} is not rich"),
            GammaRejection::AlphabetMismatch => {
                write!(f, "(w, r rich): words over different alphabets")
            }
            GammaRejection::TooShort { len } => write!(f, "(|r| > 2): |r| = {len}"),
            GammaRejection::NotFlexed => write!(f, "(r flexed in w): r is not a flexed palindrome"),
            GammaRejection::InLongestPalindromicPrefix { lpp } => {
                write!(f, "(r not a factor of lpp(w)): r occurs in {lpp:?}")
            }
            GammaRejection::NotLongest { longest } => {
                write!(f, "(r longest flexed): {longest:?} is longer")
            }
        }
    }
}

/// `parse(w, r) = (v, z, t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseTriple {
    /// Shortest prefix of `w` holding every occurrence of `r`.
    pub v: Word,
    /// `vz` is the maximal standard extension of `v` in `w`.
    pub z: Word,
    pub t: Word,
}

/// A pair `(w, r)` meeting Γ conditions 1 to 4, with its parse.
///
/// [`gamma_check`] only returns pairs that also meet condition 5; [`parse`]
/// and [`rpr`] accept pairs where a longer flexed palindrome exists, since
/// the construction does not depend on it. [`GammaPair::is_maximal`] tells
/// the two apart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaPair {
    w: Word,
    r: Word,
    parse: ParseTriple,
    maximal: bool,
}

impl GammaPair {
    pub fn w(&self) -> &Word {
        &self.w
    }

    pub fn r(&self) -> &Word {
        &self.r
    }

    pub fn parse(&self) -> &ParseTriple {
        &self.parse
    }

    /// Condition 5: no flexed palindrome of `w` is longer than `r`.
    pub fn is_maximal(&self) -> bool {
        self.maximal
    }
}

/// Checks the five Γ conditions and computes the parse.
pub fn gamma_check(w: &Word, r: &Word) -> std::result::Result<GammaPair, GammaRejection> {
    admit(w, r, true)
}

fn admit(
    w: &Word,
    r: &Word,
    require_longest: bool,
) -> std::result::Result<GammaPair, GammaRejection> {
    if w.alphabet() != r.alphabet() {
        return Err(GammaRejection::AlphabetMismatch);
    }
    let index = PalIndex::build(w);
    if !index.is_rich() {
        return Err(GammaRejection::NotRich { word: w.clone() });
    }
    if !is_rich(r) {
        return Err(GammaRejection::NotRich { word: r.clone() });
    }
    if r.len() <= 2 {
        return Err(GammaRejection::TooShort { len: r.len() });
    }
    let flexed = flexed_from_index(&index);
    if !flexed.contains(r) {
        return Err(GammaRejection::NotFlexed);
    }
    let lpp = lpp(w);
    if lpp.contains(r) {
        return Err(GammaRejection::InLongestPalindromicPrefix { lpp });
    }
    let longer = flexed.iter().find(|rec| rec.palindrome.len() > r.len());
    if let (true, Some(longer)) = (require_longest, longer) {
        return Err(GammaRejection::NotLongest {
            longest: longer.palindrome.clone(),
        });
    }
    let parse = parse_unchecked(w, r, &index);
    Ok(GammaPair {
        w: w.clone(),
        r: r.clone(),
        parse,
        maximal: longer.is_none(),
    })
}

fn parse_unchecked(w: &Word, r: &Word, index: &PalIndex) -> ParseTriple {
    let last = word::occurrences(w.symbols(), r.symbols())
        .last()
        .expect("flexed palindromes are factors");
    let v_len = last + r.len();
    let mut vz = v_len;
    while vz < w.len() && index.standard_letter(vz) == Some(w.symbols()[vz]) {
        vz += 1;
    }
    ParseTriple {
        v: w.prefix(v_len),
        z: w.slice(v_len..vz),
        t: w.slice(vz..w.len()),
    }
}

/// `parse(w, r)`; requires Γ conditions 1 to 4.
pub fn parse(w: &Word, r: &Word) -> Result<ParseTriple> {
    admit(w, r, false)
        .map(|pair| pair.parse)
        .map_err(Error::Gamma)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReductionCase {
    /// `r` already occurs in `h·zᴿ·rtrim(r)`: cut out a complete return.
    ReturnCase,
    /// `r` first occurs at the end of `h·zᴿ·r`: reroute through the
    /// palindromic closure of `h·zᴿ·rtrim(r)`.
    ClosureCase,
}

/// Full record of one reduction `rdcWrd(w, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionTrace {
    pub input: GammaPair,
    pub case: ReductionCase,
    /// `w = h·zᴿ·lps(v)·z·t`.
    pub h: Word,
    /// Complete return to `r` ending `h·zᴿ·r` (return case).
    pub g: Option<Word>,
    /// `ḡ` with `ḡ·g = h·zᴿ·r` (return case).
    pub g_bar: Option<Word>,
    /// `ū = spr(h·zᴿ·r, r)` (closure case).
    pub u_bar: Option<Word>,
    /// Shortest prefix of `Pal(h·zᴿ·rtrim(r))` ending in `ltrim(r)·z` (closure case).
    pub u_choice: Option<Word>,
    /// The reduced prefix.
    pub rpr: Word,
    /// The reduced word `rpr·t`.
    pub result: Word,
}

fn internal(what: impl Into<String>) -> Error {
    Error::Internal(what.into())
}

fn reduce(pair: GammaPair) -> Result<ReductionTrace> {
    let (w, r) = (&pair.w, &pair.r);
    let ParseTriple { v, z, t } = &pair.parse;
    let s = w.symbols();
    let lps_v = lps(v);
    let h_len = w
        .len()
        .checked_sub(t.len() + 2 * z.len() + lps_v.len())
        .ok_or_else(|| internal("w is shorter than zᴿ·lps(v)·z·t"))?;
    let z_rev = z.reverse();
    if &s[h_len..h_len + z.len()] != z_rev.symbols() {
        return Err(internal("w does not factor as h·zᴿ·lps(v)·z·t"));
    }
    let h = w.prefix(h_len);
    // h·zᴿ·r is a prefix of w since r is a prefix of lps(v).
    let head_len = h_len + z.len() + r.len();
    let head = &s[..head_len];
    if !head.ends_with(r.symbols()) {
        return Err(internal("h·zᴿ·r does not end with r"));
    }
    let stem = &s[..head_len - 1];
    let result_of = |rpr: &Word| rpr.concat(t);

    if let Some(p) = word::occurrences(stem, r.symbols()).last() {
        let g = Word::from_slice(w.alphabet(), &head[p..]);
        let g_bar = Word::from_slice(w.alphabet(), &head[..p]);
        let rpr = g_bar.concat(r)?.concat(z)?;
        if !w.has_prefix(&rpr) {
            return Err(internal(
                "reduced prefix in the return case is not a prefix of w",
            ));
        }
        let result = result_of(&rpr)?;
        return Ok(ReductionTrace {
            input: pair.clone(),
            case: ReductionCase::ReturnCase,
            h,
            g: Some(g),
            g_bar: Some(g_bar),
            u_bar: None,
            u_choice: None,
            rpr,
            result,
        });
    }

    let stem = Word::from_slice(w.alphabet(), stem);
    let u_bar = std_pal_rep(&w.prefix(head_len), r)
        .map_err(|e| internal(format!("standard replacement of r in h·zᴿ·r: {e}")))?;
    let closure = pal_closure(&stem);
    let mut tail = r.symbols()[1..].to_vec();
    tail.extend_from_slice(z.symbols());
    let shortest = (tail.len()..=closure.len())
        .find(|&n| closure.symbols()[..n].ends_with(&tail))
        .ok_or_else(|| internal("no prefix of the closure ends with ltrim(r)·z"))?;
    let rpr = closure.prefix(shortest);
    if rpr.contains(r) {
        return Err(internal("reduced prefix in the closure case contains r"));
    }
    // When rpr leaves w it extends the stem by standard steps only, so the
    // flexed count is unchanged. A shorter rpr is a prefix of the stem and
    // may have fewer.
    let before = flx_pal(&stem)?.len();
    let after = flx_pal(&rpr)?.len();
    if !w.has_prefix(&rpr) && before != after {
        return Err(internal(format!(
            "|FlxPal(h·zᴿ·rtrim(r))| = {before} but |FlxPal(rpr)| = {after}"
        )));
    }
    let result = result_of(&rpr)?;
    Ok(ReductionTrace {
        input: pair.clone(),
        case: ReductionCase::ClosureCase,
        h,
        g: None,
        g_bar: None,
        u_bar: Some(u_bar),
        u_choice: Some(rpr.clone()),
        rpr,
        result,
    })
}

/// The reduced prefix `rpr(w, r)` with its derivation; requires Γ
/// conditions 1 to 4.
pub fn rpr(w: &Word, r: &Word) -> Result<ReductionTrace> {
    reduce(admit(w, r, false).map_err(Error::Gamma)?)
}

/// The reduced word `rdcWrd(w, r) = rpr(w, r)·t`.
///
/// Fails with [`Error::TheoremViolation`] if the result is not rich, gains a
/// flexed palindrome, keeps as many occurrences of `r`, or shares fewer than
/// `|r| - 1` leading or trailing letters with `w`.
///
/// Unlike [`rpr`], requires the full Γ membership.
pub fn rdc_wrd(w: &Word, r: &Word) -> Result<(Word, ReductionTrace)> {
    let trace = reduce(gamma_check(w, r).map_err(Error::Gamma)?)?;
    verify_reduction(w, r, &trace.result)?;
    Ok((trace.result.clone(), trace))
}

fn verify_reduction(w: &Word, r: &Word, out: &Word) -> Result<()> {
    let violation = |bullet, detail: String| Err(Error::TheoremViolation { bullet, detail });
    let index = PalIndex::build(out);
    if !index.is_rich() {
        return violation(1, format!("{out:?} is not rich"));
    }
    let old = flx_pal(w)?.palindromes();
    if let Some(new) = flexed_from_index(&index)
        .iter()
        .find(|rec| !old.contains(&rec.palindrome))
    {
        return violation(
            2,
            format!("{:?} is flexed in {out:?} but not in w", new.palindrome),
        );
    }
    let (before, after) = (word::occ(w, r)?, word::occ(out, r)?);
    if after >= before {
        return violation(3, format!("occ went from {before} to {after}"));
    }
    let keep = r.len() - 1;
    let prefix = lcp_len(w.symbols(), out.symbols());
    if prefix < keep {
        return violation(4, format!("common prefix {prefix} < {keep}"));
    }
    let suffix = lcs_len(w.symbols(), out.symbols());
    if suffix < keep {
        return violation(5, format!("common suffix {suffix} < {keep}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Alphabet;

    fn w(s: &str) -> Word {
        Word::parse(s, Alphabet::new(10).unwrap()).unwrap()
    }

    /// Flexed palindromes straight from the definition, one prefix at a time.
    fn flexed_by_definition(x: &Word) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        for n in 1..x.len() {
            let u = x.prefix(n);
            let standard = if n == 1 {
                u.symbols()[0]
            } else {
                crate::extension::std_ext1(&u).unwrap().last().unwrap()
            };
            if x.symbols()[n] != standard {
                out.insert(lps(&x.prefix(n + 1)));
            }
        }
        out
    }

    #[test]
    fn flexed_palindromes_of_examples() {
        let x = w("110101100110011");
        let flexed = flx_pal(&x).unwrap();
        assert!(flexed.contains(&w("001100")));
        assert_eq!(flexed.palindromes(), flexed_by_definition(&x));
        assert!(flx_pal(&w("5555555")).unwrap().is_empty());
        let y = w("12145656547874");
        assert!(flx_pal(&y).unwrap().contains(&w("656")));
        assert_eq!(flx_pal(&y).unwrap().palindromes(), flexed_by_definition(&y));
        assert!(matches!(flx_pal(&w("0120")), Err(Error::NotRich(_))));
    }

    #[test]
    fn flexed_palindromes_are_not_prefixes() {
        let x = w("12145656547745656545656547874");
        for rec in &flx_pal(&x).unwrap() {
            assert!(!x.has_prefix(&rec.palindrome));
            assert!(rec.replacement.len() > rec.palindrome.len());
        }
    }

    #[test]
    fn standard_replacements() {
        assert_eq!(
            std_pal_rep(&w("110101100110011"), &w("001100")).unwrap(),
            w("1011001101")
        );
        assert_eq!(std_pal_rep(&w("123999"), &w("999")).unwrap(), w("3993"));
        assert_eq!(std_pal_rep(&w("123999"), &w("99")).unwrap(), w("393"));
        assert!(matches!(
            std_pal_rep(&w("123999"), &w("1")),
            Err(Error::NotFlexed(_))
        ));
    }

    #[test]
    fn gamma_rejections() {
        let x = w("123999322399932442399932255223993");
        // The last step extends 1239993223999324423999322552239 9 by 3, so
        // 3993 is flexed and longer than 999.
        assert_eq!(
            gamma_check(&x, &w("999")).unwrap_err(),
            GammaRejection::NotLongest { longest: w("3993") }
        );
        assert!(gamma_check(&x.prefix(32), &w("999")).unwrap().is_maximal());
        assert_eq!(gamma_check(&x, &w("9")).unwrap_err().condition(), 2);
        assert_eq!(
            gamma_check(&w("0120"), &w("010")).unwrap_err().condition(),
            1
        );
        // A prefix is never flexed.
        assert_eq!(
            gamma_check(&w("1213121"), &w("121"))
                .unwrap_err()
                .condition(),
            3
        );
        let other = Word::parse("999", Alphabet::new(11).unwrap()).unwrap();
        assert_eq!(
            gamma_check(&x, &other).unwrap_err(),
            GammaRejection::AlphabetMismatch
        );
    }

    #[test]
    fn parses() {
        let p = parse(&w("123999322399932442399932255223993"), &w("999")).unwrap();
        assert_eq!(
            (p.v, p.z, p.t),
            (w("1239993223999324423999"), w("322"), w("55223993"))
        );
        let p = parse(&w("123999599932239949"), &w("999")).unwrap();
        assert_eq!((p.v, p.z, p.t), (w("1239995999"), w("32"), w("239949")));
    }

    #[test]
    fn reduced_prefix_return_case() {
        let trace = rpr(&w("123999322399932442399932255223993"), &w("999")).unwrap();
        assert_eq!(trace.case, ReductionCase::ReturnCase);
        assert_eq!(trace.h, w("1239993"));
        assert_eq!(trace.g, Some(w("9993223999")));
        assert_eq!(trace.g_bar, Some(w("123")));
        assert_eq!(trace.rpr, w("123999322"));
        assert!(trace.rpr.has_suffix(&w("99322")));
        assert!(!trace.input.is_maximal());
        assert!(matches!(
            rdc_wrd(&w("123999322399932442399932255223993"), &w("999")),
            Err(Error::Gamma(GammaRejection::NotLongest { .. }))
        ));
    }

    #[test]
    fn reduced_prefix_closure_case() {
        let trace = rpr(&w("123999599932239949"), &w("999")).unwrap();
        assert_eq!(trace.case, ReductionCase::ClosureCase);
        assert_eq!(trace.h, w("1"));
        assert_eq!(trace.u_bar, Some(w("3993")));
        assert_eq!(trace.rpr, w("1239932"));
        assert!(trace.rpr.has_suffix(&w("9932")));
    }

    #[test]
    fn closure_case_can_stop_inside_the_stem() {
        let x = w("000000000000001101");
        let trace = rpr(&x, &w("101")).unwrap();
        assert_eq!(trace.case, ReductionCase::ClosureCase);
        assert_eq!(trace.rpr, w("000000000000001"));
        assert!(x.has_prefix(&trace.rpr));
        let (out, _) = rdc_wrd(&x, &w("101")).unwrap();
        assert_eq!(out, trace.rpr);
    }

    #[test]
    fn reduced_words() {
        let x = w("12145656547745656545656547874");
        let r = w("656");
        let (once, trace) = rdc_wrd(&x, &r).unwrap();
        assert_eq!(trace.input.parse().z, w("547"));
        assert_eq!(trace.rpr, w("12145656547"));
        assert_eq!(once, w("12145656547874"));
        let (twice, trace) = rdc_wrd(&once, &r).unwrap();
        assert_eq!(trace.rpr, w("12145654"));
        assert_eq!(twice, w("121456547874"));
        assert!(word::occ(&once, &r).unwrap() < word::occ(&x, &r).unwrap());
    }

    #[test]
    fn trace_serializes() {
        let (_, trace) = rdc_wrd(&w("123999599932239949"), &w("999")).unwrap();
        let json = serde_json::to_value(&trace).unwrap();
        assert_eq!(json["case"], "ClosureCase");
        assert_eq!(json["rpr"], "1239932");
        assert_eq!(json["input"]["parse"]["z"], "32");
        assert_eq!(json["g"], serde_json::Value::Null);
    }
}
