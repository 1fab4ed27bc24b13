use std::io;

use thiserror::Error;

/// Errors from mapping validation, transliteration, segmentation, and
/// entropy computation.
#[derive(Debug, Error)]
pub enum Error {
    /// Two mapping entries would decode identically.
    #[error("mapping line {line}: roman token {token:?} collides with an existing entry")]
    DuplicateToken { token: String, line: usize },

    /// Unknown category name in a mapping row.
    #[error("mapping line {line}: unknown category {value:?}")]
    BadCategory { value: String, line: usize },

    /// Structurally invalid mapping row.
    #[error("mapping line {line}: malformed row: {reason}")]
    MalformedRow { reason: String, line: usize },

    /// A codepoint the mapping table does not cover.
    #[error("unmapped codepoint {codepoint:?} at byte offset {byte_offset}")]
    UnmappedCodepoint { codepoint: char, byte_offset: usize },

    /// Roman text that no token sequence can produce.
    #[error("undecodable roman sequence at character offset {char_offset}")]
    UndecodableSequence { char_offset: usize },

    /// An anusvara, visarga, or virama with nothing to attach to.
    #[error("orphan marker {marker:?} at offset {offset}")]
    OrphanMarker { marker: char, offset: usize },

    /// A frequency table with no observations.
    #[error("empty frequency table")]
    EmptyTable,

    /// Entropy log base outside (1, inf).
    #[error("log base must be greater than 1 (got {base})")]
    BadBase { base: f64 },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },

    /// An error annotated with the file it came from.
    #[error("{path}: {source}")]
    InFile {
        path: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn in_file(path: impl Into<String>, source: Error) -> Self {
        Error::InFile {
            path: path.into(),
            source: Box::new(source),
        }
    }
}
