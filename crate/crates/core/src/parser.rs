//! Text syntax for sentences and `.dfl` theory files.
//!
//! ```text
//! sentence := unary (("->" | "-x>") sentence)?      right-associative
//! unary    := "~" unary | atom | "(" group ")"
//! group    := sentence ("&" sentence)*
//! atom     := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! `~` is dialectical negation, not weak negation as in logic programming.
//! `a -x> b` is sugar for `a -> ~b`. A parenthesized conjunction is only
//! accepted directly as the antecedent of a conditional:
//! `(a & b) -> c` stands for `a -> (b -> c)`.

use crate::error::{ParseErrors, SyntaxError};
use crate::sentence::{Sentence, Theory};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Tilde,
    Arrow,
    AttackArrow,
    Amp,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Tilde => "`~`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::AttackArrow => "`-x>`".into(),
            Tok::Amp => "`&`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

struct Lexed {
    toks: Vec<(Tok, usize)>,
    end_col: usize,
}

fn lex(text: &str, line: usize) -> Result<Lexed, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let err = |col: usize, message: String| SyntaxError {
        line,
        column: col + 1,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '~' => {
                toks.push((Tok::Tilde, i));
                i += 1;
            }
            '&' => {
                toks.push((Tok::Amp, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '-' => match (chars.get(i + 1), chars.get(i + 2)) {
                (Some('>'), _) => {
                    toks.push((Tok::Arrow, i));
                    i += 2;
                }
                (Some('x'), Some('>')) => {
                    toks.push((Tok::AttackArrow, i));
                    i += 3;
                }
                _ => return Err(err(i, "expected `->` or `-x>`".into())),
            },
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), start));
            }
            other => return Err(err(i, format!("unexpected character `{other}`"))),
        }
    }
    Ok(Lexed {
        toks,
        end_col: chars.len(),
    })
}

/// Intermediate parse result: a conjunction is only meaningful as an
/// antecedent and never reaches the AST.
enum Node {
    Plain(Sentence),
    Conj(Vec<Sentence>, usize),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Parser {
    fn err(&self, col: usize, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            line: self.line,
            column: col + 1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn unexpected(&self, wanted: &str) -> SyntaxError {
        match self.peek() {
            Some(t) => self.err(
                self.col(),
                format!("expected {wanted}, found {}", t.describe()),
            ),
            None => self.err(self.col(), format!("expected {wanted}, found end of input")),
        }
    }

    fn sentence(&mut self) -> Result<Node, SyntaxError> {
        let left = self.unary()?;
        let attack = match self.peek() {
            Some(Tok::Arrow) => false,
            Some(Tok::AttackArrow) => true,
            _ => return Ok(left),
        };
        self.pos += 1;
        let right = self.sentence()?;
        let mut right = self.plain(right)?;
        if attack {
            right = Sentence::neg(right);
        }
        Ok(Node::Plain(match left {
            Node::Plain(a) => Sentence::cond(a, right),
            Node::Conj(parts, _) => parts
                .into_iter()
                .rev()
                .fold(right, |acc, a| Sentence::cond(a, acc)),
        }))
    }

    fn plain(&self, node: Node) -> Result<Sentence, SyntaxError> {
        match node {
            Node::Plain(s) => Ok(s),
            Node::Conj(_, col) => Err(self.err(
                col,
                "`&` is only allowed in the antecedent of a conditional",
            )),
        }
    }

    fn unary(&mut self) -> Result<Node, SyntaxError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                let body = self.unary()?;
                Ok(Node::Plain(Sentence::neg(self.plain(body)?)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Node::Plain(Sentence::atom(name)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let first = self.sentence()?;
                let node = if self.peek() == Some(&Tok::Amp) {
                    let mut parts = Vec::new();
                    push_conjunct(&mut parts, first);
                    while self.peek() == Some(&Tok::Amp) {
                        self.pos += 1;
                        let next = self.sentence()?;
                        push_conjunct(&mut parts, next);
                    }
                    Node::Conj(parts, col)
                } else {
                    first
                };
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                self.pos += 1;
                Ok(node)
            }
            _ => Err(self.unexpected("a sentence")),
        }
    }
}

fn push_conjunct(parts: &mut Vec<Sentence>, node: Node) {
    match node {
        Node::Plain(s) => parts.push(s),
        Node::Conj(inner, _) => parts.extend(inner),
    }
}

fn parse_line(text: &str, line: usize) -> Result<Sentence, SyntaxError> {
    let Lexed { toks, end_col } = lex(text, line)?;
    let mut p = Parser {
        toks,
        pos: 0,
        line,
        end_col,
    };
    let node = p.sentence()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected("end of sentence"));
    }
    p.plain(node)
}

/// Parses a single sentence.
pub fn parse_sentence(text: &str) -> Result<Sentence, SyntaxError> {
    parse_line(text, 1)
}

/// Parses a theory: one sentence per non-blank line, `#` starts a comment.
/// Every malformed line is reported.
pub fn parse_theory(text: &str) -> Result<Theory, ParseErrors> {
    let mut theory = Theory::new();
    let mut errors = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = strip_comment(raw, '#');
        if content.trim().is_empty() {
            continue;
        }
        match parse_line(content, idx + 1) {
            Ok(s) => {
                theory.insert(s);
            }
            Err(e) => errors.push(e),
        }
    }
    if errors.is_empty() {
        Ok(theory)
    } else {
        Err(ParseErrors(errors))
    }
}

/// Canonical text form of a sentence; inverse of [`parse_sentence`].
pub fn render(s: &Sentence) -> String {
    s.to_string()
}

pub(crate) fn strip_comment(line: &str, marker: char) -> &str {
    match line.find(marker) {
        Some(i) => &line[..i],
        None => line,
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
