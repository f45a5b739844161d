use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("star is not an involution: star(star({a})) != {a}")]
    StarNotInvolutive { a: usize },

    #[error("star is not an antihomomorphism: star({a}*{b}) != star({b})*star({a})")]
    StarNotAntihom { a: usize, b: usize },

    #[error("index {index} out of range for order {order} ({context})")]
    IndexOutOfRange {
        index: usize,
        order: usize,
        context: String,
    },

    #[error("malformed structure: {0}")]
    Shape(String),

    #[error("subsets belong to universes of different sizes ({0} vs {1})")]
    MixedParents(usize, usize),

    #[error("empty list of subsets")]
    EmptyList,

    #[error("input subset {0} is empty")]
    EmptyInput(usize),

    #[error("subset is not a subsemigroup: {0}")]
    NotSubsemigroup(String),

    #[error("subset is not an involution subsemigroup: {0}")]
    NotInvSubsemigroup(String),

    #[error("not a group with inversion as involution: {0}")]
    NotAGroup(String),

    #[error("not a regular *-semigroup: element {0} fails x x* x = x")]
    NotRegularStar(usize),

    #[error("not an orthodox *-semigroup")]
    NotOrthodox,

    #[error("not an inverse semigroup")]
    NotInverse,

    #[error("not commutative: {a}*{b} != {b}*{a}")]
    NotCommutative { a: usize, b: usize },

    #[error("not a semilattice: {0}")]
    NotSemilattice(String),

    #[error("search space too large: order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },

    #[error("invalid Rees matrix data: {0}")]
    InvalidRees(String),

    #[error("k = {k} outside 1..={n}")]
    BadIndex { k: usize, n: usize },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
