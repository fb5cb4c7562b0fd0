use kupershmidt::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("no object named {0:?}")]
    UnknownObject(String),
    #[error("object {name:?} is not a {expected}")]
    WrongKind {
        name: String,
        expected: &'static str,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] CoreError),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

impl CliError {
    /// 1 for mathematical failures, 2 for anything wrong with the input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if is_mathematical(e) => 1,
            _ => 2,
        }
    }

    pub fn is_mathematical(&self) -> bool {
        self.exit_code() == 1
    }
}

fn is_mathematical(e: &CoreError) -> bool {
    !matches!(
        e,
        CoreError::FieldMismatch(..)
            | CoreError::ShapeMismatch(_)
            | CoreError::NotPrime(_)
            | CoreError::ParseScalar(_)
            | CoreError::NotReducible(_)
            | CoreError::SpaceMismatch
            | CoreError::UnknownIdentity(_)
            | CoreError::MissingBinding(_)
            | CoreError::Unsupported(_)
    )
}
