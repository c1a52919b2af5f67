use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at (x, y) = ({x}, {y})")]
    Pole { x: String, y: String },
    #[error("coefficient {0} is not representable in the target field")]
    NotRepresentable(String),
    #[error("valuation of zero is undefined")]
    UndefinedValuation,
    #[error("zero input: {0}")]
    ZeroInput(&'static str),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("method not applicable: {0}")]
    MethodNotApplicable(String),
    #[error("budget exceeded: {count} candidates, budget {budget}")]
    Budget { count: u128, budget: u128 },
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("invalid witness spec: {0}")]
    Spec(String),
    #[error("invalid form: {0}")]
    Form(String),
    #[error("not a Lie algebra element: generator {0} fails r(x) = -x")]
    NotLie(usize),
    #[error("parse error at offset {offset}: {msg}")]
    Parse { offset: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
