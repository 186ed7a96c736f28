use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the in-process reasoning API.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("universe `{0}` has no elements")]
    EmptyUniverse(String),

    #[error("duplicate element `{label}` in universe `{universe}`")]
    DuplicateElement { universe: String, label: String },

    #[error("unknown element `{label}` in universe `{universe}`")]
    UnknownElement { universe: String, label: String },

    #[error("{what} {value} outside [0,1]")]
    OutOfRange { what: &'static str, value: f64 },

    #[error("fuzzy sets are defined on different universes (`{left}` vs `{right}`)")]
    UniverseMismatch { left: String, right: String },

    #[error("{0} requires a nonempty input")]
    EmptyInput(&'static str),

    #[error("invalid proximity relation: {0}")]
    InvalidProximity(String),

    #[error("universe `{0}` has no proximity relation")]
    NoProximity(String),

    #[error("invalid linguistic value `{name}`: {reason}")]
    InvalidLinguistic { name: String, reason: String },

    #[error("unknown linguistic value `{0}`")]
    UnknownGranule(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("duplicate proposition id `{0}`")]
    DuplicateProposition(String),

    #[error("relative proposition `{0}` has no preeminent knowledge (no higher-priority stratum)")]
    NoPreeminentKnowledge(String),

    #[error("focal set of a simple support must be normal (height {0})")]
    SubnormalFocal(f64),

    #[error("unknown {kind} `{name}`")]
    UnknownReference { kind: &'static str, name: String },
}

pub(crate) fn check_unit(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::OutOfRange { what, value })
    }
}
