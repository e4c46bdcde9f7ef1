use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("colouring codec error: {0}")]
    Codec(String),

    #[error("parameter error: {0}")]
    Param(String),

    /// A search or selection would exceed its configured cap. `bracket`
    /// carries whatever partial information was established before giving up.
    #[error("capacity exceeded: {reason}{}", bracket.as_ref().map(|b| format!(" ({b})")).unwrap_or_default())]
    Capacity { reason: String, bracket: Option<String> },

    #[error("vertex connectivity is undefined for a graph on {0} vertices")]
    UndefinedConnectivity(usize),

    #[error("embedding targets K_{embedding} but the colouring is on K_{colouring}")]
    HostOrderMismatch { embedding: usize, colouring: usize },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Param(msg.into())
    }

    pub(crate) fn capacity(reason: impl Into<String>, bracket: Option<String>) -> Self {
        Error::Capacity { reason: reason.into(), bracket }
    }
}
