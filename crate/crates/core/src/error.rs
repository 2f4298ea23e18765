use thiserror::Error;

/// Every failure the library can report. Each variant names the offending datum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("unknown builtin group `{0}`")]
    UnknownBuiltin(String),
    #[error("element id {id} is out of range for a group of order {order}")]
    InvalidElement { id: usize, order: usize },
    #[error("group of order {order} exceeds the configured bound {bound}")]
    GroupTooLarge { order: usize, bound: usize },
    #[error("element set {0:?} is not a subgroup")]
    NotASubgroup(Vec<usize>),
    #[error("subgroup {0:?} is not normal")]
    NotNormal(Vec<usize>),
    #[error("group `{0}` is not abelian")]
    NotAbelian(String),
    #[error("subgroup {0:?} is not central")]
    NotCentral(Vec<usize>),
    #[error("homomorphism is not surjective: image has order {image} but target has order {target}")]
    NotSurjective { image: usize, target: usize },
    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("cochain degree {0} is out of the supported range")]
    DegreeTooHigh(usize),
    #[error("computation budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("coefficient module carries a nontrivial action; only trivial actions are supported here")]
    NonTrivialAction,
    #[error("cochain is not a cocycle: {0}")]
    NotACocycle(String),
    #[error("beta restricted to the centralizer of {a} is not a 2-cocycle at ({g}, {h}, {k})")]
    BetaNotCocycle { a: usize, g: usize, h: usize, k: usize },
    #[error("subcategory data belongs to a different ambient category")]
    ParentMismatch,
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("invalid coefficient module: {0}")]
    InvalidModule(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
