//! Tokenizer for Java source text.
//!
//! Comments and whitespace are skipped. Every other character belongs to
//! exactly one token, and each token keeps its exact source lexeme so that
//! spans can be mapped back onto the original text.
//!
//! `>` is always emitted as a single-character operator (or `>=`); shift
//! operators are reassembled by the parser so that nested generic type
//! arguments such as `List<List<String>>` close correctly.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Half-open byte range into the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn to(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }

    pub fn slice(self, source: &str) -> &str {
        &source[self.start..self.end]
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TokenKind {
    Identifier,
    Keyword,
    StringLiteral,
    CharLiteral,
    IntLiteral,
    LongLiteral,
    DoubleLiteral,
    Operator,
    Punctuation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub span: Span,
}

impl Token {
    pub fn is(&self, kind: TokenKind, text: &str) -> bool {
        self.kind == kind && self.text == text
    }

    pub fn is_punct(&self, text: &str) -> bool {
        self.is(TokenKind::Punctuation, text)
    }

    pub fn is_op(&self, text: &str) -> bool {
        self.is(TokenKind::Operator, text)
    }

    pub fn is_keyword(&self, text: &str) -> bool {
        self.is(TokenKind::Keyword, text)
    }

    pub fn is_literal(&self) -> bool {
        matches!(
            self.kind,
            TokenKind::StringLiteral
                | TokenKind::CharLiteral
                | TokenKind::IntLiteral
                | TokenKind::LongLiteral
                | TokenKind::DoubleLiteral
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("unterminated string literal at {span}")]
    UnterminatedString { span: Span },
    #[error("unterminated character literal at {span}")]
    UnterminatedChar { span: Span },
    #[error("unterminated block comment at {span}")]
    UnterminatedComment { span: Span },
    #[error("unexpected character {ch:?} at {span}")]
    UnexpectedChar { ch: char, span: Span },
}

pub const KEYWORDS: &[&str] = &[
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "false",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "null",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "true",
    "try",
    "void",
    "volatile",
    "while",
];

pub const PRIMITIVE_TYPES: &[&str] = &["boolean", "byte", "char", "short", "int", "long", "float", "double"];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.contains(&word)
}

// Longest match first.
const OPERATORS: &[&str] = &[
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=", "%=", "&=", "|=",
    "^=", "<<", "=", "<", ">", "!", "~", "?", ":", "+", "-", "*", "/", "&", "|", "^", "%",
];

const PUNCTUATION: &[char] = &['(', ')', '{', '}', '[', ']', ';', ',', '.', '@'];

/// Tokenizes `source`, failing on the first lexical error.
pub fn tokenize(source: &str) -> Result<Vec<Token>, LexError> {
    Lexer::new(source, false).run()
}

/// Tokenizes `source` without failing: unterminated literals and comments
/// run to end of line (or end of input) and stray characters become
/// single-character operator tokens.
pub fn tokenize_lenient(source: &str) -> Vec<Token> {
    Lexer::new(source, true).run().expect("lenient lexer never fails")
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    lenient: bool,
    tokens: Vec<Token>,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, lenient: bool) -> Self {
        Lexer { src, bytes: src.as_bytes(), pos: 0, lenient, tokens: Vec::new() }
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.bytes.get(self.pos + offset).copied()
    }

    fn current_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn push(&mut self, kind: TokenKind, start: usize) {
        self.tokens.push(Token { kind, text: self.src[start..self.pos].to_string(), span: Span::new(start, self.pos) });
    }

    fn run(mut self) -> Result<Vec<Token>, LexError> {
        while let Some(ch) = self.current_char() {
            let start = self.pos;
            if ch.is_whitespace() {
                self.pos += ch.len_utf8();
            } else if self.src[self.pos..].starts_with("//") {
                self.skip_line();
            } else if self.src[self.pos..].starts_with("/*") {
                match self.src[self.pos + 2..].find("*/") {
                    Some(idx) => self.pos += 2 + idx + 2,
                    None if self.lenient => self.pos = self.src.len(),
                    None => return Err(LexError::UnterminatedComment { span: Span::new(start, self.src.len()) }),
                }
            } else if self.src[self.pos..].starts_with("\"\"\"") {
                self.text_block(start)?;
            } else if ch == '"' {
                self.quoted(start, b'"')?;
            } else if ch == '\'' {
                self.quoted(start, b'\'')?;
            } else if ch.is_ascii_digit() || (ch == '.' && self.peek_at(1).is_some_and(|b| b.is_ascii_digit())) {
                self.number(start);
            } else if is_ident_start(ch) {
                while let Some(c) = self.current_char() {
                    if !is_ident_part(c) {
                        break;
                    }
                    self.pos += c.len_utf8();
                }
                let kind =
                    if is_keyword(&self.src[start..self.pos]) { TokenKind::Keyword } else { TokenKind::Identifier };
                self.push(kind, start);
            } else if PUNCTUATION.contains(&ch) && !self.src[self.pos..].starts_with("...") {
                self.pos += 1;
                self.push(TokenKind::Punctuation, start);
            } else if let Some(op) = OPERATORS.iter().find(|op| self.src[self.pos..].starts_with(*op)) {
                self.pos += op.len();
                self.push(TokenKind::Operator, start);
            } else if self.lenient {
                self.pos += ch.len_utf8();
                self.push(TokenKind::Operator, start);
            } else {
                return Err(LexError::UnexpectedChar { ch, span: Span::new(start, start + ch.len_utf8()) });
            }
        }
        Ok(self.tokens)
    }

    fn skip_line(&mut self) {
        match self.src[self.pos..].find('\n') {
            Some(idx) => self.pos += idx,
            None => self.pos = self.src.len(),
        }
    }

    fn quoted(&mut self, start: usize, quote: u8) -> Result<(), LexError> {
        self.pos += 1;
        loop {
            match self.peek_at(0) {
                Some(b'\\') => {
                    // An escaped newline is still an unterminated literal.
                    if self.peek_at(1).is_some_and(|b| b != b'\n') {
                        self.pos += 2;
                    } else {
                        self.pos += 1;
                    }
                }
                Some(b) if b == quote => {
                    self.pos += 1;
                    let kind = if quote == b'"' { TokenKind::StringLiteral } else { TokenKind::CharLiteral };
                    self.push(kind, start);
                    return Ok(());
                }
                Some(b'\n') | None => {
                    if self.lenient {
                        let kind = if quote == b'"' { TokenKind::StringLiteral } else { TokenKind::CharLiteral };
                        self.push(kind, start);
                        return Ok(());
                    }
                    let span = Span::new(start, self.pos);
                    return Err(if quote == b'"' {
                        LexError::UnterminatedString { span }
                    } else {
                        LexError::UnterminatedChar { span }
                    });
                }
                Some(_) => {
                    let c = self.current_char().unwrap_or('\0');
                    self.pos += c.len_utf8().max(1);
                }
            }
        }
    }

    fn text_block(&mut self, start: usize) -> Result<(), LexError> {
        let body = self.pos + 3;
        let mut idx = body;
        while idx < self.src.len() {
            if self.bytes[idx] == b'\\' {
                idx += 2;
                continue;
            }
            if self.src[idx..].starts_with("\"\"\"") {
                self.pos = idx + 3;
                self.push(TokenKind::StringLiteral, start);
                return Ok(());
            }
            idx += 1;
        }
        if self.lenient {
            self.pos = self.src.len();
            self.push(TokenKind::StringLiteral, start);
            Ok(())
        } else {
            Err(LexError::UnterminatedString { span: Span::new(start, self.src.len()) })
        }
    }

    fn number(&mut self, start: usize) {
        let digits = |b: u8| b.is_ascii_digit() || b == b'_';
        let mut is_float = false;
        if self.peek_at(0) == Some(b'0') && matches!(self.peek_at(1), Some(b'x' | b'X')) {
            self.pos += 2;
            while self.peek_at(0).is_some_and(|b| b.is_ascii_hexdigit() || b == b'_') {
                self.pos += 1;
            }
        } else if self.peek_at(0) == Some(b'0') && matches!(self.peek_at(1), Some(b'b' | b'B')) {
            self.pos += 2;
            while self.peek_at(0).is_some_and(|b| b == b'0' || b == b'1' || b == b'_') {
                self.pos += 1;
            }
        } else {
            while self.peek_at(0).is_some_and(digits) {
                self.pos += 1;
            }
            if self.peek_at(0) == Some(b'.')
                && self.peek_at(1).is_none_or(|b| b.is_ascii_digit() || !is_ident_start(b as char) && b != b'.')
            {
                is_float = true;
                self.pos += 1;
                while self.peek_at(0).is_some_and(digits) {
                    self.pos += 1;
                }
            }
            if matches!(self.peek_at(0), Some(b'e' | b'E')) {
                let sign = usize::from(matches!(self.peek_at(1), Some(b'+' | b'-')));
                if self.peek_at(1 + sign).is_some_and(|b| b.is_ascii_digit()) {
                    is_float = true;
                    self.pos += 1 + sign;
                    while self.peek_at(0).is_some_and(digits) {
                        self.pos += 1;
                    }
                }
            }
        }
        let kind = match self.peek_at(0) {
            Some(b'l' | b'L') => {
                self.pos += 1;
                TokenKind::LongLiteral
            }
            Some(b'f' | b'F' | b'd' | b'D') => {
                self.pos += 1;
                TokenKind::DoubleLiteral
            }
            _ if is_float => TokenKind::DoubleLiteral,
            _ => TokenKind::IntLiteral,
        };
        self.push(kind, start);
    }
}

fn is_ident_start(ch: char) -> bool {
    ch == '_' || ch == '$' || ch.is_alphabetic()
}

fn is_ident_part(ch: char) -> bool {
    ch == '_' || ch == '$' || ch.is_alphanumeric()
}

/// Decodes the escape sequences of a string or char literal lexeme
/// (including its surrounding quotes).
pub fn unescape_literal(lexeme: &str) -> String {
    let inner = if lexeme.starts_with("\"\"\"") {
        lexeme.trim_start_matches("\"\"\"").trim_end_matches("\"\"\"")
    } else {
        let trimmed = &lexeme[1.min(lexeme.len())..];
        trimmed.strip_suffix(&lexeme[..1.min(lexeme.len())]).unwrap_or(trimmed)
    };
    let mut out = String::with_capacity(inner.len());
    let mut chars = inner.chars().peekable();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('n') => out.push('\n'),
            Some('t') => out.push('\t'),
            Some('r') => out.push('\r'),
            Some('b') => out.push('\u{8}'),
            Some('f') => out.push('\u{c}'),
            Some('s') => out.push(' '),
            Some(d @ '0'..='7') => {
                let mut value = d.to_digit(8).unwrap_or(0);
                while let Some(next) = chars.peek().and_then(|c| c.to_digit(8)) {
                    if value * 8 + next > 0o377 {
                        break;
                    }
                    value = value * 8 + next;
                    chars.next();
                }
                out.push(char::from_u32(value).unwrap_or('\0'));
            }
            Some('u') => {
                while chars.peek() == Some(&'u') {
                    chars.next();
                }
                let hex: String = chars.by_ref().take(4).collect();
                match u32::from_str_radix(&hex, 16).ok().and_then(char::from_u32) {
                    Some(decoded) => out.push(decoded),
                    None => out.push_str(&hex),
                }
            }
            Some(other) => out.push(other),
            None => out.push('\\'),
        }
    }
    out
}
