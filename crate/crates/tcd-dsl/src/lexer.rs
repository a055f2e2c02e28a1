//! Tokenizer for the diagram language. Whitespace is insignificant and
//! `--` starts a comment running to end of line.

use crate::DslError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Semi,
    Star,
    Colon,
    Arrow,
    Equals,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        if c.is_whitespace() {
            chars.next();
            bump(c, &mut line, &mut col);
            continue;
        }
        if c == '-' {
            // "--" comment or the "->" arrow.
            chars.next();
            bump('-', &mut line, &mut col);
            match chars.peek() {
                Some('-') => {
                    while let Some(&c2) = chars.peek() {
                        chars.next();
                        bump(c2, &mut line, &mut col);
                        if c2 == '\n' {
                            break;
                        }
                    }
                }
                Some('>') => {
                    chars.next();
                    bump('>', &mut line, &mut col);
                    out.push(Token { tok: Tok::Arrow, line: tline, col: tcol });
                }
                _ => {
                    return Err(DslError::Syntax {
                        line: tline,
                        col: tcol,
                        msg: "expected \"--\" or \"->\" after '-'".to_string(),
                    })
                }
            }
            continue;
        }
        let simple = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            '*' => Some(Tok::Star),
            ':' => Some(Tok::Colon),
            '=' => Some(Tok::Equals),
            _ => None,
        };
        if let Some(tok) = simple {
            chars.next();
            bump(c, &mut line, &mut col);
            out.push(Token { tok, line: tline, col: tcol });
            continue;
        }
        if c.is_alphanumeric() || c == '_' {
            let mut ident = String::new();
            while let Some(&c2) = chars.peek() {
                if c2.is_alphanumeric() || c2 == '_' {
                    ident.push(c2);
                    chars.next();
                    bump(c2, &mut line, &mut col);
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Ident(ident), line: tline, col: tcol });
            continue;
        }
        return Err(DslError::Syntax {
            line: tline,
            col: tcol,
            msg: format!("unexpected character {:?}", c),
        });
    }
    Ok(out)
}
