use std::fmt;
use std::io;
use std::path::PathBuf;

/// Errors from parsing, construction, and enumeration.
#[derive(Debug)]
pub enum Error {
    /// Malformed ideal text: bad token, repeated variable, trailing input.
    /// `line`/`col` are 1-based; both zero when no position is known.
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    /// A variable index outside the ambient set `{1..n}`.
    IndexOutOfRange {
        index: u64,
        n: u32,
        at: Option<(usize, usize)>,
    },
    /// An ideal needs at least one generator.
    EmptyIdeal,
    /// Every generator must be a nonempty subset.
    EmptyGenerator,
    /// Ambient vertex count outside the configured limit.
    AmbientTooLarge { n: u32, limit: u32 },
    /// The operation requires a pure ideal (all generators of one degree,
    /// support equal to the whole ambient set).
    NotPure,
    /// The degenerate complex `<{}>` has no facet ideal.
    DegenerateComplex,
    /// A simplicial complex needs at least one facet.
    EmptyComplex,
    /// Generator degree outside the valid range `2..n`.
    InvalidDegree { degree: u32, n: u32 },
    /// Malformed JSON input.
    Json(serde_json::Error),
    /// I/O failure, with the file involved when known.
    Io {
        path: Option<PathBuf>,
        source: io::Error,
    },
}

impl Error {
    pub(crate) fn parse_at(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    /// Attach a path to a bare I/O error, leaving other variants alone.
    pub(crate) fn with_path(self, path: &std::path::Path) -> Self {
        match self {
            Error::Io { path: None, source } => Error::Io {
                path: Some(path.to_path_buf()),
                source,
            },
            other => other,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line: 0, col: 0, msg } => write!(f, "parse error: {msg}"),
            Error::Parse { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
            Error::IndexOutOfRange {
                index,
                n,
                at: Some((line, col)),
            } => write!(
                f,
                "variable index {index} at line {line}, column {col} is out of range: ambient set is {{1..{n}}}"
            ),
            Error::IndexOutOfRange { index, n, at: None } => {
                write!(f, "variable index {index} is out of range: ambient set is {{1..{n}}}")
            }
            Error::EmptyIdeal => write!(f, "ideal has no generators"),
            Error::EmptyGenerator => write!(f, "generators must be nonempty subsets"),
            Error::AmbientTooLarge { n, limit } => {
                write!(f, "ambient size {n} is outside the supported range 1..={limit}")
            }
            Error::NotPure => write!(
                f,
                "ideal is not pure: generators differ in degree or the support misses a variable"
            ),
            Error::DegenerateComplex => {
                write!(f, "the degenerate complex <{{}}> has no facet ideal")
            }
            Error::EmptyComplex => write!(f, "a simplicial complex needs at least one facet"),
            Error::InvalidDegree { degree, n } => {
                write!(f, "degree {degree} is outside the valid range 2..{n}")
            }
            Error::Json(e) => write!(f, "invalid JSON ideal: {e}"),
            Error::Io {
                path: Some(path),
                source,
            } => write!(f, "{}: {source}", path.display()),
            Error::Io { path: None, source } => write!(f, "I/O error: {source}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Json(e) => Some(e),
            Error::Io { source, .. } => Some(source),
            _ => None,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e)
    }
}

impl From<io::Error> for Error {
    fn from(source: io::Error) -> Self {
        Error::Io { path: None, source }
    }
}
