use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("pole at origin: denominator vanishes at {var} = 0")]
    PoleAtOrigin { var: &'static str },
    #[error("denominator constant term {constant} is not a unit in the coefficient ring")]
    NonUnitConstantTerm { constant: String },
    #[error("pole at {point}: denominator factor {factor} vanishes")]
    Pole { point: String, factor: String },
    #[error("{0} must be nonnegative")]
    Negative(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("precision p^{precision} does not fit the 64-bit residue range for p = {p}")]
    PrecisionTooLarge { p: u64, precision: u32 },
    #[error("q = {q} violates |q-1|_p < p^(-1/(p-1)): need v_p(q-1) >= 1, got {valuation}")]
    QOutOfRegion { q: String, valuation: u32 },
    #[error("insufficient precision: loss {loss} >= precision {precision}")]
    InsufficientPrecision { loss: u32, precision: u32 },
    #[error("division by a non-unit (valuation {0})")]
    NonUnit(u32),
    #[error("work budget exceeded: {requested} terms requested, budget {budget}")]
    BudgetExceeded { requested: u64, budget: u64 },
    #[error("mismatched p-adic parameters")]
    Mismatch,
    #[error("denominator {0} is divisible by p beyond available precision")]
    Unrepresentable(String),
}
