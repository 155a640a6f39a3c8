use hskein::groups::GroupError;
use hskein::intersect::{DescriptorError, IntersectError};
use hskein::paths::PathError;
use hskein::present::PresentError;
use hskein::ring::RingError;

/// Exit status contract.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Descriptor(#[from] DescriptorError),
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error("{0}")]
    Path(#[from] PathError),
    #[error("{0}")]
    Ring(#[from] RingError),
    #[error(transparent)]
    Intersect(#[from] IntersectError),
    #[error(transparent)]
    Present(#[from] PresentError),
    #[error("{0}")]
    Usage(String),
    #[error("not found: {0}")]
    NotFound(String),
    /// One or more replayed examples disagreed with their stored values.
    #[error("{0} example check(s) failed")]
    Mismatch(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Descriptor(e) => match e {
                DescriptorError::Parse { .. } | DescriptorError::Invalid(_) => EXIT_PARSE,
                DescriptorError::Unsupported(_) => EXIT_UNSUPPORTED,
                DescriptorError::UnknownCatalog(_) | DescriptorError::Io { .. } => EXIT_NOT_FOUND,
            },
            CliError::Group(GroupError::Parse { .. } | GroupError::UnknownGenerator(_)) => EXIT_PARSE,
            CliError::Group(_) => EXIT_UNSUPPORTED,
            CliError::Path(_) | CliError::Ring(_) | CliError::Usage(_) => EXIT_PARSE,
            CliError::Intersect(IntersectError::Unsupported(_)) => EXIT_UNSUPPORTED,
            CliError::Intersect(_) => EXIT_NOT_FOUND,
            CliError::Present(e) => match e {
                PresentError::Intersect(IntersectError::Unsupported(_)) => EXIT_UNSUPPORTED,
                PresentError::Group(GroupError::Parse { .. } | GroupError::UnknownGenerator(_)) => EXIT_PARSE,
                PresentError::Ring(_) => EXIT_PARSE,
                _ => EXIT_NOT_FOUND,
            },
            CliError::NotFound(_) | CliError::Mismatch(_) => EXIT_NOT_FOUND,
        }
    }
}
