//! Exact scalar, monomial and free-module arithmetic over `k[x_1..x_r]`.

mod element;
mod field;
mod grade;
mod order;

pub use element::{shares_one_monomial, Element, FreeModule, PolyRing, Term};
pub use field::{Field, FieldKind, PrimeField, Rationals};
pub use grade::{minimal_antichain, Grade};
pub use order::{MonomialOrder, Scheme, Tiebreak};
pub(crate) use order::OrderKey;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("grade length mismatch: expected {expected} parameters, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero element has no leading term")]
    ZeroElement,
    #[error("basis index {index} is outside a free module of rank {rank}")]
    BasisMismatch { index: usize, rank: usize },
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("unknown field `{0}` (expected `q` or `gf:<p>`)")]
    UnknownField(String),
    #[error("unknown monomial order `{0}`")]
    UnknownOrder(String),
}
