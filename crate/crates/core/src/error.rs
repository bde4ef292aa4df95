use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar argument fell outside its admissible range.
    #[error("{what} = {value} is out of range ({expected})")]
    Range {
        what: String,
        value: f64,
        expected: &'static str,
    },

    /// `mu² + nu²` (or `mu + nu` for IFS) exceeds one by more than the validation slack.
    #[error("element '{label}' violates {constraint}: {value} > 1 + {epsilon}")]
    Constraint {
        label: String,
        constraint: &'static str,
        value: f64,
        epsilon: f64,
    },

    #[error("sets '{left}' and '{right}' are not conformable: {reason}")]
    Conformability {
        left: String,
        right: String,
        reason: String,
    },

    #[error("set '{0}' has no elements")]
    EmptySet(String),

    #[error("set '{set}' repeats label '{label}'")]
    DuplicateLabel { set: String, label: String },

    /// Invalid method or option combination.
    #[error("{0}")]
    Config(String),

    #[error("pattern library is empty")]
    EmptyLibrary,

    /// Malformed or invalid dataset file contents.
    #[error("{}", format_dataset_error(.line, .message))]
    Dataset {
        line: Option<usize>,
        message: String,
    },
}

fn format_dataset_error(line: &Option<usize>, message: &str) -> String {
    match line {
        Some(line) => format!("line {line}: {message}"),
        None => message.to_string(),
    }
}

impl Error {
    pub(crate) fn range(what: impl Into<String>, value: f64, expected: &'static str) -> Self {
        Error::Range {
            what: what.into(),
            value,
            expected,
        }
    }

    pub fn is_conformability(&self) -> bool {
        matches!(self, Error::Conformability { .. })
    }
}
