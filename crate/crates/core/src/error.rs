use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("operands live in different number fields")]
    FieldMismatch,

    #[error("invalid number field: {0}")]
    InvalidField(String),

    /// Text input that does not match a grammar. `line` and `column` are
    /// 1-based positions inside the offending string.
    #[error("parse error{}: line {line}, column {column}: {message}", context.as_ref().map(|c| format!(" in {c}")).unwrap_or_default())]
    Parse {
        context: Option<String>,
        line: usize,
        column: usize,
        message: String,
    },

    /// Well-formed input that is mathematically inconsistent with what the
    /// requested computation needs.
    #[error("validation failed: {0}")]
    Validation(String),

    #[error("{0}")]
    Domain(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse_at(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let (line, column) = line_column(text, offset);
        Error::Parse {
            context: None,
            line,
            column,
            message: message.into(),
        }
    }

    /// Attach a label (for instance the JSON key the text came from).
    pub fn with_context(self, label: &str) -> Self {
        match self {
            Error::Parse {
                line, column, message, ..
            } => Error::Parse {
                context: Some(label.to_string()),
                line,
                column,
                message,
            },
            Error::Validation(m) => Error::Validation(format!("{label}: {m}")),
            other => other,
        }
    }
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(text.len());
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}
