//! The typing judgement: every well-formed term gets a domain and codomain
//! word over the ambient multigraph.

use std::fmt;

use crate::multigraph::{Multigraph, Word};
use crate::term::DiagramTerm;
use crate::DiagramError;

/// Domain and codomain of a diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interface {
    pub dom: Word,
    pub cod: Word,
}

impl Interface {
    pub fn new(dom: Word, cod: Word) -> Interface {
        Interface { dom, cod }
    }

    pub fn is_closed(&self) -> bool {
        self.dom.is_empty() && self.cod.is_empty()
    }
}

impl fmt::Display for Interface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.dom, self.cod)
    }
}

/// Typechecks `term` against `mg`.
///
/// Typing rules: `Compose(f, g)` needs `cod(f) = dom(g)`; `Tensor`
/// concatenates; `Braid(A, B) : A·B -> B·A`; `Mul(X) : X,X -> X`;
/// `Unit(X) : I -> X`; `Cup(X) : I -> X,X`; duals reversed.
pub fn typecheck(term: &DiagramTerm, mg: &Multigraph) -> Result<Interface, DiagramError> {
    let check_word = |w: &Word| -> Result<(), DiagramError> {
        mg.check_word(w)
            .map_err(|name| DiagramError::UnknownName(name.to_string()))
    };
    let check_wire = |name: &str| -> Result<(), DiagramError> {
        if mg.has_wire(name) {
            Ok(())
        } else {
            Err(DiagramError::UnknownName(name.to_string()))
        }
    };
    match term {
        DiagramTerm::Gen(name) => {
            let (dom, cod) = mg
                .component(name)
                .ok_or_else(|| DiagramError::UnknownName(name.clone()))?;
            Ok(Interface::new(dom.clone(), cod.clone()))
        }
        DiagramTerm::Id(word) => {
            check_word(word)?;
            Ok(Interface::new(word.clone(), word.clone()))
        }
        DiagramTerm::Compose(f, g) => {
            let fi = typecheck(f, mg)?;
            let gi = typecheck(g, mg)?;
            if fi.cod != gi.dom {
                return Err(DiagramError::InterfaceMismatch {
                    expected: fi.cod.to_string(),
                    found: gi.dom.to_string(),
                });
            }
            Ok(Interface::new(fi.dom, gi.cod))
        }
        DiagramTerm::Tensor(f, g) => {
            let fi = typecheck(f, mg)?;
            let gi = typecheck(g, mg)?;
            Ok(Interface::new(fi.dom.concat(&gi.dom), fi.cod.concat(&gi.cod)))
        }
        DiagramTerm::Braid(a, b) | DiagramTerm::BraidInv(a, b) => {
            check_word(a)?;
            check_word(b)?;
            Ok(Interface::new(a.concat(b), b.concat(a)))
        }
        DiagramTerm::Mul(x) => {
            check_wire(x)?;
            Ok(Interface::new(Word::of(&[x, x]), Word::single(x.clone())))
        }
        DiagramTerm::Comul(x) => {
            check_wire(x)?;
            Ok(Interface::new(Word::single(x.clone()), Word::of(&[x, x])))
        }
        DiagramTerm::Unit(x) => {
            check_wire(x)?;
            Ok(Interface::new(Word::unit(), Word::single(x.clone())))
        }
        DiagramTerm::Counit(x) => {
            check_wire(x)?;
            Ok(Interface::new(Word::single(x.clone()), Word::unit()))
        }
        DiagramTerm::Cup(x) => {
            check_wire(x)?;
            Ok(Interface::new(Word::unit(), Word::of(&[x, x])))
        }
        DiagramTerm::Cap(x) => {
            check_wire(x)?;
            Ok(Interface::new(Word::of(&[x, x]), Word::unit()))
        }
    }
}
