use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Coxeter type `{0}`")]
    InvalidType(String),

    #[error("not a Coxeter element: {0}")]
    InvalidCoxeterElement(String),

    #[error("elements belong to different groups (root image sizes {0} and {1})")]
    ContextMismatch(usize, usize),

    #[error("cannot parse element `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("group order {order} exceeds the enumeration budget {budget}; raise the budget or allow large groups")]
    BudgetExceeded { order: u64, budget: u64 },

    #[error("element is periodic under Pop and has no finite normal form")]
    Periodic,

    #[error("{0} is not supported for this type")]
    Unsupported(String),

    #[error("{0}")]
    Invalid(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse { input: input.to_string(), reason: reason.into() }
    }
}
