use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "richwords",
    version,
    about = "Rich words: richness, flexed palindromes, reduction and search"
)]
pub struct Cli {
    /// Alphabet size; inferred from the word arguments when omitted.
    #[arg(long, short, global = true)]
    pub q: Option<usize>,

    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Also emit the full derivation record.
    #[arg(long, global = true)]
    pub trace: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    /// One JSON record per line.
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Test words for richness.
    Check {
        words: Vec<String>,
        /// Read words from a file in the `q=<n>` text format (`-` for stdin).
        #[arg(long)]
        input: Option<String>,
    },
    /// List the distinct factors of a word.
    Factors {
        word: String,
        /// Palindromic factors only.
        #[arg(long)]
        palindromic: bool,
    },
    /// Flexed palindromes with the prefix that produced each and its standard replacement.
    Flexed { word: String },
    /// Palindromic closure.
    Closure { word: String },
    /// Standard extension, or the letters keeping the word rich.
    Extend {
        word: String,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        /// List every letter `a` such that `wa` is rich.
        #[arg(long, conflicts_with = "steps")]
        rich: bool,
    },
    /// Check whether (w, r) is reducible and show its parse.
    Gamma { w: String, r: String },
    /// The factorization w = v·z·t.
    Parse { w: String, r: String },
    /// The reduced word rpr(w, r)·t.
    Reduce {
        w: String,
        r: String,
        /// Print only the reduced prefix.
        #[arg(long)]
        prefix_only: bool,
    },
    /// Remove flexed palindromes longer than max(|w1|, |w2|).
    Eliminate { w: String, w1: String, w2: String },
    /// Shortest factor in which w1 and w2 occur once, up to reversal, at its ends.
    Ruo { w: String, w1: String, w2: String },
    /// Length bounds for words whose flexed palindromes are at most m long.
    Bound {
        #[arg(long)]
        m: u64,
        /// Largest exact value printed, in decimal digits.
        #[arg(long, default_value_t = richwords::DEFAULT_DIGIT_CAP)]
        digits: u64,
    },
    /// Enumerate rich words up to a length (requires --q).
    Enumerate {
        #[arg(long)]
        max_len: usize,
        /// Emit counts per length instead of words.
        #[arg(long)]
        count: bool,
        /// One word per letter-renaming class.
        #[arg(long)]
        canonical: bool,
        #[command(flatten)]
        parallel: Parallel,
    },
    /// Search for a rich word containing both words.
    Search {
        w1: String,
        w2: String,
        #[arg(long, default_value_t = 16)]
        max_len: usize,
        #[arg(long, default_value_t = 10_000_000)]
        max_nodes: u64,
        #[command(flatten)]
        parallel: Parallel,
    },
    /// Number of distinct palindromic factors of each length.
    Profile { word: String },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Parallel {
    /// Split the search tree across threads.
    #[arg(long)]
    pub parallel: bool,
}
