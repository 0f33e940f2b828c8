use std::fmt;
use std::io::{self, Write};

use serde::Serialize;

use crate::args::Format;

/// Why a command failed, which decides the exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments: exit status 2.
    Usage(String),
    /// A well-formed request the mathematics rejects: exit status 1.
    Domain(String),
    Io(io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) | Failure::Io(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Domain(m) => write!(f, "{m}"),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<richwords::Error> for Failure {
    fn from(e: richwords::Error) -> Self {
        use richwords::Error::*;
        match e {
            InvalidAlphabet(_) | InvalidSymbol { .. } | AlphabetMismatch { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

pub type Outcome = Result<(), Failure>;

pub struct Out<W: Write> {
    pub format: Format,
    sink: W,
}

impl<W: Write> Out<W> {
    pub fn new(format: Format, sink: W) -> Self {
        Out { format, sink }
    }

    pub fn line(&mut self, text: impl fmt::Display) -> Outcome {
        writeln!(self.sink, "{text}")?;
        Ok(())
    }

    pub fn record(&mut self, value: &impl Serialize) -> Outcome {
        serde_json::to_writer(&mut self.sink, value)?;
        writeln!(self.sink)?;
        Ok(())
    }

    pub fn row<I, S>(&mut self, cells: I) -> Outcome
    where
        I: IntoIterator<Item = S>,
        S: fmt::Display,
    {
        let cells: Vec<String> = cells.into_iter().map(|c| c.to_string()).collect();
        self.line(cells.join(","))
    }

    pub fn flush(&mut self) -> Outcome {
        self.sink.flush()?;
        Ok(())
    }

    /// Fails for commands whose result is not a table.
    pub fn no_csv(&self, command: &str) -> Outcome {
        if self.format == Format::Csv {
            return Err(Failure::Usage(format!(
                "{command} has no CSV output; use plain or json"
            )));
        }
        Ok(())
    }
}
