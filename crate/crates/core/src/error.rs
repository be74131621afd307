use std::path::PathBuf;

use crate::hyperquadric::{FailedCondition, HyperquadricKind};
use crate::surface::{CurveKind, TensorRule};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("algebra parameters must be finite and nonzero (alpha = {alpha}, beta = {beta})")]
    InvalidParams { alpha: f64, beta: f64 },

    #[error("non-finite coefficient in {0}")]
    NonFinite(&'static str),

    #[error("number is a zero divisor and has no inverse")]
    NotInvertible,

    #[error("point is not on the {kind} hyperquadric: {condition}")]
    NotOnHyperquadric {
        kind: HyperquadricKind,
        condition: FailedCondition,
    },

    #[error("operands belong to different hyperquadrics ({0} vs {1})")]
    KindMismatch(HyperquadricKind, HyperquadricKind),

    #[error("X{index} is not a left-invariant basis field of the {kind} group")]
    IndexNotInBasis { kind: HyperquadricKind, index: u8 },

    #[error("surfaces are only defined for alpha, beta in {{-1, 1}} (alpha = {alpha}, beta = {beta})")]
    UnsupportedSurfaceParams { alpha: f64, beta: f64 },

    #[error("{kind} curves cannot carry a nonzero rate ({rate})")]
    CircleWithRate { kind: CurveKind, rate: f64 },

    #[error(
        "curve kinds ({gamma}, {delta}) do not fit rule {rule} with alpha = {alpha}, beta = {beta}; \
         permitted: gamma in {{{permitted_gamma}}}, delta in {{{permitted_delta}}}"
    )]
    CaseMismatch {
        rule: TensorRule,
        alpha: f64,
        beta: f64,
        gamma: CurveKind,
        delta: CurveKind,
        permitted_gamma: String,
        permitted_delta: String,
    },

    #[error("fundamental form mismatch on {entry}: ambient {ambient} vs factored {factored}")]
    FormMismatch {
        entry: &'static str,
        ambient: f64,
        factored: f64,
    },

    #[error("tangent plane is degenerate ({0})")]
    Degenerate(&'static str),

    #[error("left-invariant field identification needs circle curves (rates must be zero)")]
    NotUnitCase,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
