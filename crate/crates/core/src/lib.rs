//! Palindromically rich words.
//!
//! A word of length `n` has at most `n + 1` distinct palindromic factors
//! (counting the empty word) and is *rich* when it has exactly that many.
//! This crate provides the richness test, standard extensions, flexed
//! palindromes, the reduction `rdcWrd` that removes occurrences of a longest
//! flexed palindrome while keeping the word rich, the elimination loop built
//! on it, the resulting length bounds, and exhaustive enumeration and search
//! over rich words.
//!
//! ```
//! use richwords::{is_rich, rdc_wrd, Word, Alphabet};
//!
//! let a = Alphabet::new(9).unwrap();
//! let w = Word::parse("12145656547745656545656547874", a).unwrap();
//! let r = Word::parse("656", a).unwrap();
//! assert!(is_rich(&w));
//! let (reduced, _trace) = rdc_wrd(&w, &r).unwrap();
//! assert_eq!(reduced.to_string(), "12145656547874");
//! ```

pub mod eliminator;
pub mod error;
pub mod extension;
pub mod pal;
pub mod reduction;
pub mod search;
pub mod word;

pub use eliminator::bounds::{
    bound_k, bound_report, bound_total, pal_complexity_bound, BoundReport, DEFAULT_DIGIT_CAP,
};
pub use eliminator::{elm, is_reverse_unioccurrent, mfp, ruo, EliminationStep, EliminationTrace};
pub use error::{Error, Result};
pub use extension::{is_std_ext, mse, rich_extensions, std_ext1, std_extj, ExtensionStep};
pub use pal::{
    complete_returns, is_rich, lpp, lppp, lpps, lps, pal_closure, pal_factors,
    pal_factors_avoiding, PalIndex,
};
pub use reduction::{
    flx_pal, gamma_check, parse, rdc_wrd, rpr, std_pal_rep, FlexRecord, FlexedPalindromes,
    GammaPair, GammaRejection, ParseTriple, ReductionCase, ReductionTrace,
};
pub use search::{
    count_by_length, count_by_length_par, enumerate_rich, find_common_superword,
    find_common_superword_par, pal_complexity_profile, visit_rich, visit_rich_par, Budget,
    EnumConfig, RichWords, SearchStatus, SearchVerdict,
};
pub use word::{
    factor_iter, factors, is_factor, lcp, lcs, ltrim, occ, read_words, reverse, rtrim, trim,
    write_words, Alphabet, Word,
};
