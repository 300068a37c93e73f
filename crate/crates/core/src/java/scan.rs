//! Locates assertion call statements in a source file.

use super::lexer::{tokenize_lenient, Span, Token, TokenKind, PRIMITIVE_TYPES};

/// Method names treated as assertions, matched by terminal name so that
/// `Assert.assertEquals`, `Assertions.assertEquals` and static imports are
/// all found.
pub const ASSERTION_NAMES: &[&str] = &[
    "assertTrue",
    "assertFalse",
    "assertNull",
    "assertNotNull",
    "assertEquals",
    "assertNotEquals",
    "assertArrayEquals",
    "assertSame",
    "assertNotSame",
    "assertThat",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScannedAssertion {
    /// From the first qualifier token through the closing parenthesis, plus
    /// the terminating `;` when present.
    pub span: Span,
    pub text: String,
}

/// Every assertion call statement in `source`, in source order. Occurrences
/// inside comments or string literals, and method declarations that happen
/// to use an assertion name, are ignored.
pub fn scan_assertions(source: &str) -> Vec<ScannedAssertion> {
    let tokens = tokenize_lenient(source);
    let mut found = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        match assertion_at(&tokens, i) {
            Some((first, last)) => {
                let span = tokens[first].span.to(tokens[last].span);
                found.push(ScannedAssertion { span, text: span.slice(source).to_string() });
                i = last + 1;
            }
            None => i += 1,
        }
    }
    found
}

/// Token index range `[first, last]` of an assertion statement whose method
/// name sits at `i`.
fn assertion_at(tokens: &[Token], i: usize) -> Option<(usize, usize)> {
    let tok = &tokens[i];
    if tok.kind != TokenKind::Identifier || !ASSERTION_NAMES.contains(&tok.text.as_str()) {
        return None;
    }
    if !tokens.get(i + 1).is_some_and(|t| t.is_punct("(")) {
        return None;
    }
    let mut first = i;
    while first >= 2 && tokens[first - 1].is_punct(".") && tokens[first - 2].kind == TokenKind::Identifier {
        first -= 2;
    }
    if first > 0 && is_declaration_type_end(&tokens[first - 1]) {
        return None;
    }
    let mut depth = 0usize;
    let mut close = None;
    for (j, t) in tokens.iter().enumerate().skip(i + 1) {
        if t.is_punct("(") {
            depth += 1;
        } else if t.is_punct(")") {
            depth -= 1;
            if depth == 0 {
                close = Some(j);
                break;
            }
        }
    }
    let close = close?;
    let last = if tokens.get(close + 1).is_some_and(|t| t.is_punct(";")) { close + 1 } else { close };
    Some((first, last))
}

/// A token that can end a return type, marking `name(` as a declaration.
fn is_declaration_type_end(tok: &Token) -> bool {
    match tok.kind {
        TokenKind::Identifier => true,
        TokenKind::Keyword => tok.text == "void" || PRIMITIVE_TYPES.contains(&tok.text.as_str()),
        TokenKind::Operator => tok.text == ">",
        TokenKind::Punctuation => tok.text == "]",
        _ => false,
    }
}
