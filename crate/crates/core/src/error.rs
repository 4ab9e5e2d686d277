use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = {0}")]
    PoleAtEvaluationPoint(String),
    #[error("expression has negative powers of u")]
    NotAPolynomial,
    #[error("expected an integer polynomial, got {0}")]
    NonPolynomialCoefficient(String),
    #[error("constant term of series is not invertible")]
    NonInvertibleConstantTerm,
    #[error("constant term of series is not 1")]
    ConstantTermNotOne,
    #[error("constant term of series is not 0")]
    ConstantTermNotZero,
    #[error("series operands have different truncation orders ({0} and {1})")]
    OrderMismatch(usize, usize),
    #[error("coefficient of t^{requested} requested from a series truncated at order {order}")]
    BeyondTruncation { requested: usize, order: usize },
    #[error("closed-form s_{d}^({m}) disagrees with the triangular solve")]
    MismatchWithLinearSolve { d: u32, m: u32 },
    #[error("deg r_{d}^({m}) = {degree} exceeds the bound {bound}")]
    DegreeBoundViolated { d: u32, m: u32, degree: usize, bound: i64 },
    #[error("two routes for {what} disagree")]
    RouteMismatch { what: String },
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("Mahler coefficient c_{r} for d = {d} is not an integer polynomial")]
    NonIntegralMahlerCoefficient { d: u32, r: u32 },
    #[error("a_{d}(q,u) is not divisible by {factor}")]
    InexactDivision { d: u32, factor: String },
    #[error("coefficient of u^{power} in the reduced factor of a_{d}(q,u) is not [{expected}]_q")]
    LeadingTermMismatch { d: u32, power: i64, expected: u32 },
    #[error("constant term of the reduced factor of a_{d}(q,u) disagrees with the closed formula")]
    ConstantTermMismatch { d: u32 },
    #[error("s_{d}^({m}) is not the Gaussian binomial [{n} choose {r}]_q", n = d * d, r = d * d - m)]
    BoundaryMismatch { d: u32, m: u32 },
    #[error("enumeration needs {predicted} items, budget is {budget}")]
    BudgetExceeded { predicted: String, budget: u64 },
    #[error("census identity violated for d = {d}, p = {p}, m = {m}: {lhs} != {rhs}")]
    IdentityViolated { d: u32, p: u32, m: u32, lhs: String, rhs: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
