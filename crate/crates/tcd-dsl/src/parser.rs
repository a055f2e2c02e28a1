//! Recursive-descent parser for the diagram language, and the matching
//! pretty-printer.
//!
//! Grammar:
//!
//! ```text
//! program := (decl)*
//! decl    := "wire" IDENT
//!          | "comp" IDENT ":" word "->" word
//!          | "diagram" IDENT "=" expr
//! word    := "I" | IDENT ("," IDENT)*
//! expr    := term (";" term)*            -- composition, diagram order
//! term    := factor ("*" factor)*        -- tensor
//! factor  := IDENT | builtin | "(" expr ")"
//! builtin := "id(" word ")"
//!          | "braid(" word ";" word ")" | "unbraid(" word ";" word ")"
//!          | ("mul"|"comul"|"unit"|"counit"|"cup"|"cap") "(" IDENT ")"
//! ```
//!
//! `id`, `braid`, `unbraid`, `mul`, `comul`, `unit`, `counit`, `cup`, `cap`,
//! `I` and the three declaration keywords are reserved; they cannot name
//! wires or components. Every diagram is typechecked at parse end.

use diagram_core::{typecheck, DiagramError, DiagramTerm, Interface, Multigraph, Word};

use crate::lexer::{lex, Tok, Token};
use crate::DslError;

const RESERVED: &[&str] = &[
    "wire", "comp", "diagram", "id", "braid", "unbraid", "mul", "comul", "unit", "counit", "cup",
    "cap", "I",
];

/// A parsed source file: the multigraph and its named diagrams, in source
/// order, each with its checked interface.
#[derive(Clone, Debug)]
pub struct Program {
    pub multigraph: Multigraph,
    diagrams: Vec<(String, DiagramTerm, Interface)>,
}

impl Program {
    pub fn diagrams(&self) -> impl Iterator<Item = (&str, &DiagramTerm, &Interface)> {
        self.diagrams.iter().map(|(n, t, i)| (n.as_str(), t, i))
    }

    pub fn diagram(&self, name: &str) -> Option<(&DiagramTerm, &Interface)> {
        self.diagrams
            .iter()
            .find(|(n, _, _)| n == name)
            .map(|(_, t, i)| (t, i))
    }

    /// The diagram a CLI invocation means by default: the one named `main`,
    /// or the only diagram in the file.
    pub fn default_diagram(&self) -> Option<(&str, &DiagramTerm, &Interface)> {
        if let Some((t, i)) = self.diagram("main") {
            return Some(("main", t, i));
        }
        if self.diagrams.len() == 1 {
            let (n, t, i) = &self.diagrams[0];
            return Some((n.as_str(), t, i));
        }
        None
    }
}

pub fn parse_program(text: &str) -> Result<Program, DslError> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let mut multigraph = Multigraph::new();
    let mut raw: Vec<(String, DiagramTerm)> = Vec::new();
    while !parser.done() {
        let (kw, line, col) = parser.expect_ident()?;
        match kw.as_str() {
            "wire" => {
                let (name, nline, ncol) = parser.expect_ident()?;
                check_not_reserved(&name, nline, ncol)?;
                if !multigraph.add_wire(&name) {
                    return Err(DslError::Syntax {
                        line: nline,
                        col: ncol,
                        msg: format!("wire {:?} declared twice", name),
                    });
                }
            }
            "comp" => {
                let (name, nline, ncol) = parser.expect_ident()?;
                check_not_reserved(&name, nline, ncol)?;
                parser.expect(Tok::Colon)?;
                let dom = parser.word()?;
                parser.expect(Tok::Arrow)?;
                let cod = parser.word()?;
                for w in [&dom, &cod] {
                    if let Err(missing) = multigraph.check_word(w) {
                        return Err(DslError::UnknownName(missing.to_string()));
                    }
                }
                if !multigraph.add_component(&name, dom, cod) {
                    return Err(DslError::Syntax {
                        line: nline,
                        col: ncol,
                        msg: format!("component {:?} declared twice", name),
                    });
                }
            }
            "diagram" => {
                let (name, nline, ncol) = parser.expect_ident()?;
                check_not_reserved(&name, nline, ncol)?;
                if raw.iter().any(|(n, _)| n == &name) {
                    return Err(DslError::Syntax {
                        line: nline,
                        col: ncol,
                        msg: format!("diagram {:?} declared twice", name),
                    });
                }
                parser.expect(Tok::Equals)?;
                let term = parser.expr()?;
                raw.push((name, term));
            }
            other => {
                return Err(DslError::Syntax {
                    line,
                    col,
                    msg: format!("expected a declaration, got {:?}", other),
                })
            }
        }
    }
    let mut diagrams = Vec::new();
    for (name, term) in raw {
        let iface = typecheck(&term, &multigraph).map_err(|e| match e {
            DiagramError::UnknownName(n) => DslError::UnknownName(n),
            DiagramError::InterfaceMismatch { expected, found } => DslError::Interface {
                diagram: name.clone(),
                expected,
                found,
            },
        })?;
        diagrams.push((name, term, iface));
    }
    Ok(Program { multigraph, diagrams })
}

fn check_not_reserved(name: &str, line: usize, col: usize) -> Result<(), DslError> {
    if RESERVED.contains(&name) {
        return Err(DslError::Syntax {
            line,
            col,
            msg: format!("{:?} is reserved", name),
        });
    }
    Ok(())
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn done(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos.min(self.tokens.len().saturating_sub(1)))
            .map(|t| (t.line, t.col))
            .unwrap_or((1, 1))
    }

    fn error(&self, msg: impl Into<String>) -> DslError {
        let (line, col) = self.here();
        DslError::Syntax { line, col, msg: msg.into() }
    }

    fn next(&mut self) -> Result<Token, DslError> {
        let t = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.error("unexpected end of input"))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, tok: Tok) -> Result<(), DslError> {
        let t = self.next()?;
        if t.tok == tok {
            Ok(())
        } else {
            Err(DslError::Syntax {
                line: t.line,
                col: t.col,
                msg: format!("expected {:?}, got {:?}", tok, t.tok),
            })
        }
    }

    fn expect_ident(&mut self) -> Result<(String, usize, usize), DslError> {
        let t = self.next()?;
        match t.tok {
            Tok::Ident(s) => Ok((s, t.line, t.col)),
            other => Err(DslError::Syntax {
                line: t.line,
                col: t.col,
                msg: format!("expected an identifier, got {:?}", other),
            }),
        }
    }

    fn word(&mut self) -> Result<Word, DslError> {
        let (first, _, _) = self.expect_ident()?;
        if first == "I" {
            return Ok(Word::unit());
        }
        let mut entries = vec![first];
        while self.peek() == Some(&Tok::Comma) {
            self.pos += 1;
            let (next, _, _) = self.expect_ident()?;
            entries.push(next);
        }
        Ok(Word(entries))
    }

    fn expr(&mut self) -> Result<DiagramTerm, DslError> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Tok::Semi) {
            self.pos += 1;
            acc = acc.then(self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<DiagramTerm, DslError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            acc = acc.tensor(self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<DiagramTerm, DslError> {
        if self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let inner = self.expr()?;
            self.expect(Tok::RParen)?;
            return Ok(inner);
        }
        let (head, line, col) = self.expect_ident()?;
        match head.as_str() {
            "id" => {
                self.expect(Tok::LParen)?;
                let w = self.word()?;
                self.expect(Tok::RParen)?;
                Ok(DiagramTerm::Id(w))
            }
            "braid" | "unbraid" => {
                self.expect(Tok::LParen)?;
                let a = self.word()?;
                self.expect(Tok::Semi)?;
                let b = self.word()?;
                self.expect(Tok::RParen)?;
                Ok(if head == "braid" {
                    DiagramTerm::Braid(a, b)
                } else {
                    DiagramTerm::BraidInv(a, b)
                })
            }
            "mul" | "comul" | "unit" | "counit" | "cup" | "cap" => {
                self.expect(Tok::LParen)?;
                let (x, _, _) = self.expect_ident()?;
                self.expect(Tok::RParen)?;
                Ok(match head.as_str() {
                    "mul" => DiagramTerm::Mul(x),
                    "comul" => DiagramTerm::Comul(x),
                    "unit" => DiagramTerm::Unit(x),
                    "counit" => DiagramTerm::Counit(x),
                    "cup" => DiagramTerm::Cup(x),
                    _ => DiagramTerm::Cap(x),
                })
            }
            "wire" | "comp" | "diagram" | "I" => Err(DslError::Syntax {
                line,
                col,
                msg: format!("{:?} cannot start an expression", head),
            }),
            _ => Ok(DiagramTerm::Gen(head)),
        }
    }
}

/// Renders a program back to source form. Composition chains print with
/// `;`, tensor chains with `*`; factors that are themselves compositions
/// get parentheses.
pub fn pretty_print(program: &Program) -> String {
    let mut out = String::new();
    for wire in program.multigraph.wires() {
        out.push_str(&format!("wire {}\n", wire));
    }
    for (name, (dom, cod)) in program.multigraph.components() {
        out.push_str(&format!("comp {} : {} -> {}\n", name, dom, cod));
    }
    for (name, term, _) in program.diagrams() {
        out.push_str(&format!("diagram {} = {}\n", name, print_expr(term)));
    }
    out
}

fn print_expr(term: &DiagramTerm) -> String {
    match term {
        DiagramTerm::Compose(f, g) => format!("{} ; {}", print_expr(f), print_expr(g)),
        other => print_term(other),
    }
}

fn print_term(term: &DiagramTerm) -> String {
    match term {
        DiagramTerm::Tensor(f, g) => format!("{} * {}", print_term(f), print_term(g)),
        other => print_factor(other),
    }
}

fn print_factor(term: &DiagramTerm) -> String {
    match term {
        DiagramTerm::Gen(name) => name.clone(),
        DiagramTerm::Id(w) => format!("id({})", w),
        DiagramTerm::Braid(a, b) => format!("braid({}; {})", a, b),
        DiagramTerm::BraidInv(a, b) => format!("unbraid({}; {})", a, b),
        DiagramTerm::Mul(x) => format!("mul({})", x),
        DiagramTerm::Comul(x) => format!("comul({})", x),
        DiagramTerm::Unit(x) => format!("unit({})", x),
        DiagramTerm::Counit(x) => format!("counit({})", x),
        DiagramTerm::Cup(x) => format!("cup({})", x),
        DiagramTerm::Cap(x) => format!("cap({})", x),
        composite => format!("({})", print_expr(composite)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_program_parses() {
        let text = "wire X\ncomp R : X,X -> I\ndiagram m = cup(X) ; R\n";
        let program = parse_program(text).unwrap();
        let (_, iface) = program.diagram("m").unwrap();
        assert!(iface.is_closed());
    }

    #[test]
    fn undeclared_wire_in_braid() {
        let err = parse_program("diagram m = braid(X; X)").unwrap_err();
        assert!(matches!(err, DslError::UnknownName(ref n) if n == "X"), "{:?}", err);
    }

    #[test]
    fn compose_mismatch_reports_both_words() {
        let err = parse_program("wire X\ndiagram m = unit(X) ; mul(X)").unwrap_err();
        match err {
            DslError::Interface { expected, found, .. } => {
                assert_eq!(expected, "X");
                assert_eq!(found, "X,X");
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn reserved_names_rejected() {
        assert!(parse_program("wire id").is_err());
        assert!(parse_program("wire X\ncomp braid : X -> X").is_err());
    }

    #[test]
    fn parens_group_compositions() {
        let text = "wire X\ndiagram m = (cup(X) ; cap(X)) * id(I)";
        let program = parse_program(text).unwrap();
        let (term, iface) = program.diagram("m").unwrap();
        assert!(iface.is_closed());
        assert!(matches!(term, DiagramTerm::Tensor(_, _)));
    }

    #[test]
    fn roundtrip_through_printer_is_stable() {
        let text = "wire X\nwire Y\ncomp R : X,Y -> I\n\
                    diagram m = (cup(X) * unit(Y)) ; (id(X) * braid(X; Y)) ; (R * counit(X) ; id(I))\n\
                    diagram n = braid(X,Y; I) ; R";
        let first = parse_program(text).unwrap();
        let printed = pretty_print(&first);
        let second = parse_program(&printed).unwrap();
        assert_eq!(pretty_print(&second), printed);
        for ((n1, t1, _), (n2, t2, _)) in first.diagrams().zip(second.diagrams()) {
            assert_eq!(n1, n2);
            assert_eq!(t1.normalized(), t2.normalized());
        }
    }

    #[test]
    fn syntax_error_carries_position() {
        let err = parse_program("wire X\ndiagram m = cup(X) ;; cap(X)").unwrap_err();
        match err {
            DslError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {:?}", other),
        }
    }
}
