//! The expression language: braid, word, permutation, element, and
//! grade-tuple literals, plus calls such as `cable(B2: s1 @1 B2: e)`.
//!
//! Parsing happens in three stages: a lexer that cuts the input into
//! positioned tokens, a recursive-descent parser producing a syntax tree,
//! and a resolution step that builds validated core objects. Syntax and
//! validation errors both report the byte offset they arose at.
//!
//! Printing is canonical: for every expression `e`, `parse(&e.to_string())`
//! returns an expression structurally equal to `e`. Parentheses may also be
//! used for grouping on input; they never survive into the tree.

use std::fmt;

use plait_core::words::Tree;
use plait_core::{BraidWord, OmegaBrElement, ParenWord, Permutation, WCobObject};

/// A parse-time failure, pointing at the byte offset in the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        message: message.into(),
        position,
    })
}

/// The callable operations of the expression language.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CallName {
    Compose,
    Cable,
    Pi,
    Tau,
    Hom,
    Eq,
    Hurwitz,
    Twists,
}

impl CallName {
    fn from_word(s: &str) -> Option<CallName> {
        Some(match s {
            "compose" => CallName::Compose,
            "cable" => CallName::Cable,
            "pi" => CallName::Pi,
            "tau" => CallName::Tau,
            "hom" => CallName::Hom,
            "eq" => CallName::Eq,
            "hurwitz" => CallName::Hurwitz,
            "twists" => CallName::Twists,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CallName::Compose => "compose",
            CallName::Cable => "cable",
            CallName::Pi => "pi",
            CallName::Tau => "tau",
            CallName::Hom => "hom",
            CallName::Eq => "eq",
            CallName::Hurwitz => "hurwitz",
            CallName::Twists => "twists",
        }
    }
}

impl fmt::Display for CallName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A parsed expression over validated core objects.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Braid(BraidWord),
    Word(ParenWord),
    Perm(Permutation),
    Element(OmegaBrElement),
    Wcob(WCobObject),
    /// A grade tuple of 1-based group element indices.
    Grades(Vec<usize>),
    /// A slot marker `@i` naming the operadic composition position.
    Slot(usize),
    Call(CallName, Vec<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Braid(b) => b.fmt(f),
            Expr::Word(w) => w.fmt(f),
            Expr::Perm(p) => p.fmt(f),
            Expr::Element(e) => e.fmt(f),
            Expr::Wcob(x) => x.fmt(f),
            Expr::Grades(v) => {
                for (k, g) in v.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            Expr::Slot(i) => write!(f, "@{i}"),
            Expr::Call(name, args) => {
                write!(f, "{name}(")?;
                for (k, a) in args.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    LParen,
    RParen,
    Pipe,
    /// `B3:`
    Header(usize),
    /// `s2` or `s2^-1`
    SLetter(usize, i8),
    /// `e`, the empty-braid marker.
    EmptyMark,
    /// `x4`
    Leaf(usize),
    /// `id3`
    IdPerm(usize),
    /// `[2,1,3]` or `[]`
    PermLit(Vec<usize>),
    /// `1,2,3` or a single integer.
    Ints(Vec<usize>),
    /// `@2`
    Slot(usize),
    Name(CallName),
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    pos: usize,
}

fn is_token_char(b: u8) -> bool {
    b.is_ascii_alphanumeric() || matches!(b, b'@' | b'^' | b':' | b',' | b'-' | b'[' | b']')
}

fn parse_number(s: &str, pos: usize) -> Result<usize, ParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return err(pos, format!("expected a number, found `{s}`"));
    }
    s.parse()
        .map_err(|_| ParseError {
            message: format!("number `{s}` is out of range"),
            position: pos,
        })
}

fn parse_int_list(s: &str, pos: usize) -> Result<Vec<usize>, ParseError> {
    s.split(',')
        .map(|part| parse_number(part, pos))
        .collect()
}

fn classify(s: &str, pos: usize) -> Result<TokenKind, ParseError> {
    if let Some(name) = CallName::from_word(s) {
        return Ok(TokenKind::Name(name));
    }
    if s == "e" {
        return Ok(TokenKind::EmptyMark);
    }
    if let Some(rest) = s.strip_prefix('B') {
        if let Some(num) = rest.strip_suffix(':') {
            return Ok(TokenKind::Header(parse_number(num, pos)?));
        }
    }
    if let Some(rest) = s.strip_prefix("id") {
        return Ok(TokenKind::IdPerm(parse_number(rest, pos)?));
    }
    if let Some(rest) = s.strip_prefix('s') {
        if let Some(num) = rest.strip_suffix("^-1") {
            return Ok(TokenKind::SLetter(parse_number(num, pos)?, -1));
        }
        return Ok(TokenKind::SLetter(parse_number(rest, pos)?, 1));
    }
    if let Some(rest) = s.strip_prefix('x') {
        return Ok(TokenKind::Leaf(parse_number(rest, pos)?));
    }
    if let Some(rest) = s.strip_prefix('@') {
        return Ok(TokenKind::Slot(parse_number(rest, pos)?));
    }
    if let Some(rest) = s.strip_prefix('[') {
        if let Some(inner) = rest.strip_suffix(']') {
            if inner.is_empty() {
                return Ok(TokenKind::PermLit(Vec::new()));
            }
            return Ok(TokenKind::PermLit(parse_int_list(inner, pos)?));
        }
    }
    if s.bytes().next().is_some_and(|b| b.is_ascii_digit()) {
        return Ok(TokenKind::Ints(parse_int_list(s, pos)?));
    }
    err(pos, format!("unrecognized token `{s}`"))
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let kind = match b {
            b'(' => Some(TokenKind::LParen),
            b')' => Some(TokenKind::RParen),
            b'|' => Some(TokenKind::Pipe),
            _ => None,
        };
        if let Some(kind) = kind {
            tokens.push(Token { kind, pos: i });
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && is_token_char(bytes[i]) {
            i += 1;
        }
        if i == start {
            return err(start, format!("unexpected character `{}`", bytes[start] as char));
        }
        tokens.push(Token {
            kind: classify(&input[start..i], start)?,
            pos: start,
        });
    }
    Ok(tokens)
}

/// An unresolved syntax tree; literals still carry raw numbers.
#[derive(Debug, Clone)]
enum Syn {
    Braid {
        pos: usize,
        strands: usize,
        letters: Vec<(usize, i8)>,
    },
    Word {
        pos: usize,
        tree: Tree,
    },
    Perm {
        pos: usize,
        images: Vec<usize>,
    },
    Grades(Vec<usize>),
    Slot(usize),
    Pipe {
        pos: usize,
        left: Box<Syn>,
        right: Box<Syn>,
    },
    Call {
        name: CallName,
        args: Vec<Syn>,
    },
}

struct Parser {
    tokens: Vec<Token>,
    next: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.next).map(|t| &t.kind)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.next).map_or(self.end, |t| t.pos)
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.next].clone();
        self.next += 1;
        t
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Some(TokenKind::RParen) => {
                self.advance();
                Ok(())
            }
            _ => err(self.pos(), "expected `)`"),
        }
    }

    fn parse_expr(&mut self) -> Result<Syn, ParseError> {
        let left = self.parse_primary()?;
        if let Some(TokenKind::Pipe) = self.peek() {
            let pos = self.pos();
            self.advance();
            let right = self.parse_primary()?;
            return Ok(Syn::Pipe {
                pos,
                left: Box::new(left),
                right: Box::new(right),
            });
        }
        Ok(left)
    }

    fn starts_word(&self) -> bool {
        matches!(self.peek(), Some(TokenKind::LParen | TokenKind::Leaf(_)))
    }

    fn parse_primary(&mut self) -> Result<Syn, ParseError> {
        let pos = self.pos();
        let Some(kind) = self.peek().cloned() else {
            return err(pos, "expected an expression");
        };
        match kind {
            TokenKind::LParen => {
                self.advance();
                let first = self.parse_expr()?;
                // `(word word)` builds a tree node; any other single
                // expression in parentheses is mere grouping.
                if let Syn::Word { tree, .. } = &first {
                    if self.starts_word() {
                        let right = self.parse_word_tree()?;
                        self.expect_rparen()?;
                        return Ok(Syn::Word {
                            pos,
                            tree: Tree::Node(Box::new(tree.clone()), Box::new(right)),
                        });
                    }
                }
                self.expect_rparen()?;
                Ok(first)
            }
            TokenKind::Leaf(k) => {
                self.advance();
                Ok(Syn::Word {
                    pos,
                    tree: Tree::Leaf(k),
                })
            }
            TokenKind::Header(strands) => {
                self.advance();
                let mut letters = Vec::new();
                if let Some(TokenKind::EmptyMark) = self.peek() {
                    self.advance();
                } else {
                    while let Some(TokenKind::SLetter(position, sign)) = self.peek().cloned() {
                        self.advance();
                        letters.push((position, sign));
                    }
                }
                Ok(Syn::Braid {
                    pos,
                    strands,
                    letters,
                })
            }
            TokenKind::IdPerm(n) => {
                self.advance();
                Ok(Syn::Perm {
                    pos,
                    images: (1..=n).collect(),
                })
            }
            TokenKind::PermLit(images) => {
                self.advance();
                Ok(Syn::Perm { pos, images })
            }
            TokenKind::Ints(values) => {
                self.advance();
                Ok(Syn::Grades(values))
            }
            TokenKind::Slot(i) => {
                self.advance();
                Ok(Syn::Slot(i))
            }
            TokenKind::Name(name) => {
                self.advance();
                match self.peek() {
                    Some(TokenKind::LParen) => {
                        self.advance();
                    }
                    _ => return err(self.pos(), format!("expected `(` after `{name}`")),
                }
                let mut args = Vec::new();
                loop {
                    match self.peek() {
                        Some(TokenKind::RParen) => {
                            self.advance();
                            break;
                        }
                        Some(_) => args.push(self.parse_expr()?),
                        None => return err(self.end, format!("unclosed call `{name}(`")),
                    }
                }
                Ok(Syn::Call { name, args })
            }
            TokenKind::RParen | TokenKind::Pipe => err(pos, "expected an expression"),
            TokenKind::SLetter(..) | TokenKind::EmptyMark => {
                err(pos, "braid letters must follow a `Bn:` header")
            }
        }
    }

    /// A word tree proper: `x4` or `(word word)`, no grouping.
    fn parse_word_tree(&mut self) -> Result<Tree, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(TokenKind::Leaf(k)) => {
                self.advance();
                Ok(Tree::Leaf(k))
            }
            Some(TokenKind::LParen) => {
                self.advance();
                let left = self.parse_word_tree()?;
                let right = self.parse_word_tree()?;
                self.expect_rparen()?;
                Ok(Tree::Node(Box::new(left), Box::new(right)))
            }
            _ => err(pos, "expected a word"),
        }
    }
}

fn word_arity(tree: &Tree) -> usize {
    match tree {
        Tree::Leaf(0) => 0,
        Tree::Leaf(_) => 1,
        Tree::Node(l, r) => word_arity(l) + word_arity(r),
    }
}

fn resolve(syn: Syn) -> Result<Expr, ParseError> {
    match syn {
        Syn::Braid {
            pos,
            strands,
            letters,
        } => match BraidWord::from_pairs(strands, &letters) {
            Ok(b) => Ok(Expr::Braid(b)),
            Err(e) => err(pos, e.to_string()),
        },
        Syn::Word { pos, tree } => match ParenWord::new(word_arity(&tree), tree) {
            Ok(w) => Ok(Expr::Word(w)),
            Err(e) => err(pos, e.to_string()),
        },
        Syn::Perm { pos, images } => match Permutation::new(images) {
            Ok(p) => Ok(Expr::Perm(p)),
            Err(e) => err(pos, e.to_string()),
        },
        Syn::Grades(values) => Ok(Expr::Grades(values)),
        Syn::Slot(i) => Ok(Expr::Slot(i)),
        Syn::Pipe { pos, left, right } => {
            let left = resolve(*left)?;
            let right = resolve(*right)?;
            let Expr::Braid(braid) = right else {
                return err(pos, "the right side of `|` must be a braid");
            };
            match left {
                Expr::Word(word) => match OmegaBrElement::new(word, braid) {
                    Ok(e) => Ok(Expr::Element(e)),
                    Err(e) => err(pos, e.to_string()),
                },
                Expr::Perm(perm) => match WCobObject::new(perm, braid) {
                    Ok(x) => Ok(Expr::Wcob(x)),
                    Err(e) => err(pos, e.to_string()),
                },
                _ => err(pos, "the left side of `|` must be a word or a permutation"),
            }
        }
        Syn::Call { name, args } => {
            let args = args.into_iter().map(resolve).collect::<Result<_, _>>()?;
            Ok(Expr::Call(name, args))
        }
    }
}

/// Parses one expression, requiring the whole input to be consumed.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let tokens = lex(input)?;
    let mut parser = Parser {
        tokens,
        next: 0,
        end: input.len(),
    };
    let syn = parser.parse_expr()?;
    if parser.next != parser.tokens.len() {
        return err(parser.pos(), "trailing input after the expression");
    }
    resolve(syn)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(text: &str) -> Expr {
        let e = parse(text).unwrap();
        let printed = e.to_string();
        let again = parse(&printed).unwrap();
        assert_eq!(e, again, "round-trip changed `{text}` -> `{printed}`");
        e
    }

    #[test]
    fn parses_braid_literals() {
        let e = roundtrip("B3: s1 s2^-1");
        let Expr::Braid(b) = e else { panic!("expected a braid") };
        assert_eq!(b, BraidWord::from_pairs(3, &[(1, 1), (2, -1)]).unwrap());
        // The bare header and the canonical `e` both mean the empty braid.
        assert_eq!(parse("B2:").unwrap(), parse("B2: e").unwrap());
        assert_eq!(parse("B2: e").unwrap().to_string(), "B2: e");
    }

    #[test]
    fn parses_words_and_elements() {
        let e = roundtrip("(x1 (x0 x2))");
        let Expr::Word(w) = e else { panic!("expected a word") };
        assert_eq!(w.arity(), 2);
        assert_eq!(w.len(), 3);
        let e = roundtrip("(x1 (x0 x2)) | B3: s1");
        assert!(matches!(e, Expr::Element(_)));
    }

    #[test]
    fn parses_perms_and_wcob_objects() {
        let e = roundtrip("[2,1,3]");
        let Expr::Perm(p) = e else { panic!("expected a permutation") };
        assert_eq!(p, Permutation::new(vec![2, 1, 3]).unwrap());
        assert_eq!(parse("id3").unwrap(), parse("[1,2,3]").unwrap());
        let e = roundtrip("[2,1] | B2: s1");
        assert!(matches!(e, Expr::Wcob(_)));
    }

    #[test]
    fn parses_calls_with_slots() {
        let e = roundtrip("cable(B2: s1 @1 B2: e)");
        let Expr::Call(CallName::Cable, args) = e else { panic!("expected a call") };
        assert_eq!(args.len(), 3);
        assert_eq!(args[1], Expr::Slot(1));
        roundtrip("pi((x1 x2) | B2: s1)");
        roundtrip("eq(compose(B2: s1 @1 B2: s1) B3: s2 s1 s2)");
        roundtrip("hurwitz(B2: s1 1,2)");
    }

    #[test]
    fn grouping_parentheses_are_transparent() {
        assert_eq!(parse("( id2 | B2: )").unwrap(), parse("id2 | B2: e").unwrap());
        assert_eq!(parse("((x1 x2))").unwrap(), parse("(x1 x2)").unwrap());
        assert_eq!(
            parse("((x1 x2) | B2: s1)").unwrap(),
            parse("(x1 x2) | B2: s1").unwrap()
        );
    }

    #[test]
    fn reports_positions_for_syntax_errors() {
        let e = parse("B3: s1 $").unwrap_err();
        assert_eq!(e.position, 7);
        let e = parse("cable(B2: s1").unwrap_err();
        assert!(e.message.contains("unclosed"));
        assert!(parse("").is_err());
        assert!(parse("(x1 x2) x3").unwrap_err().message.contains("trailing"));
        assert!(parse("junk").unwrap_err().message.contains("unrecognized"));
    }

    #[test]
    fn surfaces_semantic_errors_with_positions() {
        // Strand out of range inside the literal.
        assert!(parse("B2: s5").is_err());
        // Word labels must cover 1..=arity exactly once.
        assert!(parse("(x1 x1)").is_err());
        assert!(parse("(x2 x2)").is_err());
        // Element braid must have one strand per leaf.
        assert!(parse("(x1 x2) | B3: s1").is_err());
        // Pipe kinds.
        assert!(parse("B2: s1 | B2: s1").is_err());
        assert!(parse("(x1 x2) | [2,1]").is_err());
    }

    #[test]
    fn slot_and_grade_literals() {
        assert_eq!(parse("@3").unwrap(), Expr::Slot(3));
        assert_eq!(parse("4").unwrap(), Expr::Grades(vec![4]));
        assert_eq!(parse("1,2,3").unwrap(), Expr::Grades(vec![1, 2, 3]));
    }
}
