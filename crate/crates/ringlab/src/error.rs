use thiserror::Error;

#[derive(Debug, Error)]
pub enum RingError {
    /// Bad user input: out-of-range index, malformed expression, unknown
    /// property name, and so on. Exit code 2 on the CLI.
    #[error("input error: {0}")]
    Input(String),

    /// A requested construction would exceed the configured carrier cap.
    /// Exit code 3 on the CLI.
    #[error("capacity exceeded building {label}: need a {required}-element carrier, cap is {cap}")]
    Capacity {
        label: String,
        required: u128,
        cap: usize,
    },

    /// A ring or bimodule table violates an axiom.
    #[error("validation failed for {label}: {law} at {witness:?}")]
    Validation {
        label: String,
        law: &'static str,
        witness: (usize, usize, usize),
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, RingError>;

impl RingError {
    pub fn input(msg: impl Into<String>) -> Self {
        RingError::Input(msg.into())
    }
}
