use thiserror::Error;

use crate::reduction::GammaRejection;

/// Errors raised by the word, palindrome and reduction operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alphabet size must be in 1..=36, got {0}")]
    InvalidAlphabet(usize),

    #[error("symbol {symbol:?} is not in the alphabet of size {q}")]
    InvalidSymbol { symbol: char, q: u8 },

    #[error("words are over different alphabets (q={left} and q={right})")]
    AlphabetMismatch { left: u8, right: u8 },

    #[error("{op} requires a word of length at least {required}, got {actual}")]
    LengthViolation {
        op: &'static str,
        required: usize,
        actual: usize,
    },

    #[error("empty pattern")]
    EmptyPattern,

    #[error("{0} is not a factor")]
    NotAFactor(String),

    #[error("{0} is not a prefix")]
    NotAPrefix(String),

    #[error("{0} is not rich")]
    NotRich(String),

    #[error("{0} is not a flexed palindrome")]
    NotFlexed(String),

    #[error("pair rejected: {0}")]
    Gamma(GammaRejection),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no factor of {w} has {w1} and {w2} reverse-unioccurrent at its ends")]
    NoReverseUnioccurrentFactor { w: String, w1: String, w2: String },

    #[error("reduced word violates theorem bullet {bullet}: {detail}")]
    TheoremViolation { bullet: u8, detail: String },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("exact value would need about {digits} decimal digits (cap {cap})")]
    DigitCap { digits: u64, cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
