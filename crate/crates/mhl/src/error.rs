use std::path::PathBuf;

/// Problems with user-supplied input. All of these map to exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("instance is not valid UTF-8 (byte {offset})")]
    Utf8 { offset: usize },

    #[error("line {line}, column {column}, at `{field}`: {message}")]
    Schema {
        line: usize,
        column: usize,
        field: String,
        message: String,
    },

    #[error("`{field}` resolves to ground size {found}, but ground_size is {expected}")]
    GroundMismatch {
        field: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("`labels`: {0}")]
    Labels(String),

    #[error("`{field}`: {source}")]
    Spec {
        field: &'static str,
        #[source]
        source: mhl_core::Error,
    },

    #[error("generator: {0}")]
    Generator(String),

    #[error("{0}")]
    Usage(String),
}
