use std::fmt;

use thiserror::Error;

/// Which operand of a binary operation a condition refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    First,
    Second,
}

impl fmt::Display for Operand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::First => f.write_str("first factor"),
            Operand::Second => f.write_str("second factor"),
        }
    }
}

/// A named precondition of a closed-form result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    StronglyConnected(Operand),
    OutRegular(Operand),
    TransmissionRegular(Operand),
    /// diam of the second factor at most the girth of the first
    DiameterWithinGirth,
    DoublyDirectedCover,
    Regular,
    DiameterAtMostTwo,
    ConstantRowSum(Operand),
    Irreducible(Operand),
    Nonnegative(Operand),
    Dsrg,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::StronglyConnected(o) => write!(f, "{o} strongly connected"),
            Hypothesis::OutRegular(o) => write!(f, "{o} out-regular"),
            Hypothesis::TransmissionRegular(o) => write!(f, "{o} transmission regular"),
            Hypothesis::DiameterWithinGirth => f.write_str("diameter of second factor at most girth of first factor"),
            Hypothesis::DoublyDirectedCover => f.write_str("every vertex of first factor on a doubly directed arc"),
            Hypothesis::Regular => f.write_str("in- and out-regular"),
            Hypothesis::DiameterAtMostTwo => f.write_str("diameter at most 2"),
            Hypothesis::ConstantRowSum(o) => write!(f, "{o} has constant row sum"),
            Hypothesis::Irreducible(o) => write!(f, "{o} irreducible"),
            Hypothesis::Nonnegative(o) => write!(f, "{o} nonnegative"),
            Hypothesis::Dsrg => f.write_str("directed strongly regular"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("loop arc at vertex {0}")]
    LoopArc(usize),
    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("a digraph needs at least one vertex")]
    NoVertices,
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix order {order} exceeds the cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("QR iteration did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("exact mode needs an integer matrix and a rational value")]
    ExactModeUnavailable,
    #[error("value is not an eigenvalue (empty kernel)")]
    NotAnEigenvalue,
    #[error("multisets have different sizes: {predicted} vs {computed}")]
    CardinalityMismatch { predicted: usize, computed: usize },
    #[error("spectral data has {got} values, expected {expected}")]
    OrderMismatch { expected: usize, got: usize },
    #[error("Perron value is not a simple eigenvalue")]
    PerronNotSimple,
    #[error("denominator vanishes in eigenvector formula")]
    DenominatorVanishes,
    #[error("not transmission regular: {0}")]
    NotTransmissionRegular(Operand),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(Hypothesis),
    #[error("discriminant is zero, eigenvalues coincide")]
    DegenerateDiscriminant,
    #[error("multiplicities are not integral for these parameters")]
    InadmissibleParameters,
    #[error("spectrum does not have the shape {{t, p^(m), 0^(n-1-m)}}")]
    ShapeViolated,
    #[error("{0} is not a prime congruent to 3 mod 4")]
    BadPrime(u64),
    #[error("unknown theorem {0}")]
    UnknownTheorem(String),
    #[error("theorem {theorem} expects {expected}")]
    BadArity { theorem: String, expected: String },
    #[error("no eigenvector formula for the {0} lexicographic case")]
    NoEigenvectorFormula(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
