//! Textual front end: the `.tcd` diagram language and the JSON binding
//! files that assign backend semantics to components.

mod bindings;
mod lexer;
mod parser;

pub use bindings::{
    parse_bindings, parse_linres_bindings, parse_rational, parse_trel_bindings, BindingKind,
    Bindings, LinresBindings, LinresComponent, RelationSpec, TrelBindings, TupleEntry,
};
pub use parser::{parse_program, pretty_print, Program};

#[derive(Debug, Clone, thiserror::Error)]
pub enum DslError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("in diagram {diagram:?}: interface mismatch: codomain {expected} does not meet domain {found}")]
    Interface { diagram: String, expected: String, found: String },
    #[error("bad permutation: {0}")]
    BadPermutation(String),
    #[error("width mismatch: {0}")]
    WidthMismatch(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("bad binding file: {0}")]
    BadBinding(String),
    #[error(transparent)]
    Group(#[from] group_core::GroupError),
}
