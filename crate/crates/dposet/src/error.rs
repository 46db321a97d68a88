use thiserror::Error;

/// Every failure the library reports. The variant name is part of the
/// user-facing contract: the CLI prints it verbatim.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("CycleError: relations force {0} <= {1} <= {0}")]
    Cycle(String, String),
    #[error("UnknownLabel: {0}")]
    UnknownLabel(String),
    #[error("DuplicateLabel: {0}")]
    DuplicateLabel(String),
    #[error("UnknownGenerator: {0}")]
    UnknownGenerator(String),
    #[error("TooLarge: {0}")]
    TooLarge(String),
    #[error("NotCompatible: {0}")]
    NotCompatible(String),
    #[error("SingularMatrix")]
    SingularMatrix,
    #[error("MissingRep: {0}")]
    MissingRep(&'static str),
    #[error("InconsistentVH: {0}")]
    InconsistentVH(String),
    #[error("OriginNotInterior")]
    OriginNotInterior,
    #[error("NotLatticePolytope")]
    NotLatticePolytope,
    #[error("Degenerate: {0}")]
    Degenerate(String),
    #[error("NotFullDimensional")]
    NotFullDimensional,
    #[error("NegativeCoordinate")]
    NegativeCoordinate,
    #[error("NotAntiBlocking")]
    NotAntiBlocking,
    #[error("NotDualIntegral")]
    NotDualIntegral,
    #[error("UnknownFilterVariable: {0}")]
    UnknownFilterVariable(String),
    #[error("NonTerminating: reduction exceeded {0} steps")]
    NonTerminating(usize),
    #[error("Unbounded")]
    Unbounded,
    #[error("DimensionMismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable name of the variant, used for CLI messages and golden tests.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Cycle(..) => "CycleError",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::TooLarge(_) => "TooLarge",
            Error::NotCompatible(_) => "NotCompatible",
            Error::SingularMatrix => "SingularMatrix",
            Error::MissingRep(_) => "MissingRep",
            Error::InconsistentVH(_) => "InconsistentVH",
            Error::OriginNotInterior => "OriginNotInterior",
            Error::NotLatticePolytope => "NotLatticePolytope",
            Error::Degenerate(_) => "Degenerate",
            Error::NotFullDimensional => "NotFullDimensional",
            Error::NegativeCoordinate => "NegativeCoordinate",
            Error::NotAntiBlocking => "NotAntiBlocking",
            Error::NotDualIntegral => "NotDualIntegral",
            Error::UnknownFilterVariable(_) => "UnknownFilterVariable",
            Error::NonTerminating(_) => "NonTerminating",
            Error::Unbounded => "Unbounded",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
