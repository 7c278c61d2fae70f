use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown generator `{name}` at offset {offset}")]
    UnknownGenerator { name: String, offset: usize },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("stage overflow: {0}")]
    StageOverflow(String),

    #[error("ill-defined morphism: {0}")]
    IllDefinedMorphism(String),

    #[error("not a coalgebra map: {0}")]
    NotCoalgebraMap(String),

    #[error("coideal certificate failed: {0}")]
    CoidealFailure(String),

    #[error("missing antipode on operand {0}")]
    MissingAntipode(usize),

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Syntax { .. } | Error::UnknownGenerator { .. } => 2,
            Error::StageOverflow(_) => 4,
            Error::Io(_) => 1,
            _ => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
