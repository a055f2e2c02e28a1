//! Finite groups as multiplication tables, with permutation-generator
//! closure, centers, conjugation, and diagonal conjugacy orbits of tuples.

mod group;
mod perm;
mod tuple;

pub use group::{make_group, FiniteGroup, GroupSpec, DEFAULT_CLOSURE_CAP};
pub use perm::Permutation;
pub use tuple::{conj_tuple, conjugacy_closure, GroupTuple};

#[derive(Debug, Clone, thiserror::Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("closure exceeded cap of {0} elements")]
    ClosureTooLarge(usize),
    #[error("bad permutation: {0}")]
    BadPermutation(String),
    #[error("unknown builtin group {0:?}")]
    UnknownBuiltin(String),
}
