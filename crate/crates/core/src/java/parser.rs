//! Recursive-descent parser for Java expressions.
//!
//! Covers the expression forms that show up as assertion arguments:
//! literals, names, field access, method calls, object and array creation,
//! casts, lambdas with expression bodies, method references and the full
//! binary/ternary operator ladder. Statements are out of scope, except a
//! local variable declaration at the top level.
//!
//! Precedence, lowest first:
//!
//! | Level | Operators |
//! |-------|-----------|
//! | 1 | `\|\|` |
//! | 2 | `&&` |
//! | 3 | `\|` |
//! | 4 | `^` |
//! | 5 | `&` |
//! | 6 | `==` `!=` |
//! | 7 | `<` `>` `<=` `>=` `instanceof` |
//! | 8 | `<<` `>>` `>>>` |
//! | 9 | `+` `-` |
//! | 10 | `*` `/` `%` |

use thiserror::Error;

use super::ast::{Expr, LambdaParam, VarDeclarator};
use super::lexer::{tokenize, LexError, Span, Token, TokenKind, PRIMITIVE_TYPES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error("expected {expected} at {span}, found {found}")]
    Unexpected { span: Span, expected: String, found: String },
    #[error("unsupported construct at {span}: {construct}")]
    Unsupported { span: Span, construct: String },
}

impl ParseError {
    pub fn span(&self) -> Option<Span> {
        match self {
            ParseError::Lex(_) => None,
            ParseError::Unexpected { span, .. } | ParseError::Unsupported { span, .. } => Some(*span),
        }
    }
}

type PResult<T> = Result<T, ParseError>;

const ASSIGN_OPS: &[&str] = &["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<="];

/// Parses a token sequence that spans exactly one expression.
pub fn parse_expression(tokens: &[Token]) -> PResult<Expr> {
    let mut parser = Parser::new(tokens);
    let expr = parser.top()?;
    parser.expect_end()?;
    Ok(expr)
}

/// Tokenizes and parses `source` as a single expression.
pub fn parse_expression_str(source: &str) -> PResult<Expr> {
    let tokens = tokenize(source)?;
    parse_expression(&tokens)
}

/// Parses a type starting at `tokens[0]`, returning its printed form and the
/// number of tokens consumed. Used by the symbol table builder.
pub fn parse_type_prefix(tokens: &[Token]) -> Option<(String, usize)> {
    let mut parser = Parser::new(tokens);
    let ty = parser.parse_type(false).ok()?;
    Some((ty, parser.pos))
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
}

impl<'t> Parser<'t> {
    fn new(tokens: &'t [Token]) -> Self {
        Parser { tokens, pos: 0 }
    }

    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.pos)
    }

    fn peek_at(&self, offset: usize) -> Option<&'t Token> {
        self.tokens.get(self.pos + offset)
    }

    fn at_punct(&self, text: &str) -> bool {
        self.peek().is_some_and(|t| t.is_punct(text))
    }

    fn at_op(&self, text: &str) -> bool {
        self.peek().is_some_and(|t| t.is_op(text))
    }

    fn at_keyword(&self, text: &str) -> bool {
        self.peek().is_some_and(|t| t.is_keyword(text))
    }

    fn bump(&mut self) -> Option<&'t Token> {
        let tok = self.tokens.get(self.pos);
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn here(&self) -> Span {
        match self.peek() {
            Some(tok) => tok.span,
            None => {
                let end = self.tokens.last().map_or(0, |t| t.span.end);
                Span::new(end, end)
            }
        }
    }

    fn unexpected<T>(&self, expected: &str) -> PResult<T> {
        Err(ParseError::Unexpected {
            span: self.here(),
            expected: expected.to_string(),
            found: self.peek().map_or_else(|| "end of input".to_string(), |t| format!("`{}`", t.text)),
        })
    }

    fn unsupported<T>(&self, construct: &str) -> PResult<T> {
        Err(ParseError::Unsupported { span: self.here(), construct: construct.to_string() })
    }

    fn expect_punct(&mut self, text: &str) -> PResult<()> {
        if self.at_punct(text) {
            self.pos += 1;
            Ok(())
        } else {
            self.unexpected(&format!("`{text}`"))
        }
    }

    fn expect_ident(&mut self) -> PResult<String> {
        match self.peek() {
            Some(tok) if tok.kind == TokenKind::Identifier => {
                self.pos += 1;
                Ok(tok.text.clone())
            }
            _ => self.unexpected("identifier"),
        }
    }

    fn expect_end(&self) -> PResult<()> {
        if self.peek().is_none() {
            Ok(())
        } else {
            self.unexpected("end of expression")
        }
    }

    fn contiguous(&self, offset: usize) -> bool {
        match (self.peek_at(offset), self.peek_at(offset + 1)) {
            (Some(a), Some(b)) => a.span.end == b.span.start,
            _ => false,
        }
    }

    // ---- entry points -------------------------------------------------

    fn top(&mut self) -> PResult<Expr> {
        if let Some(decl) = self.try_variable_declaration()? {
            return Ok(decl);
        }
        self.expr()
    }

    fn try_variable_declaration(&mut self) -> PResult<Option<Expr>> {
        let start = self.pos;
        let Ok(type_name) = self.parse_type(false) else {
            self.pos = start;
            return Ok(None);
        };
        let is_decl = matches!(self.peek(), Some(t) if t.kind == TokenKind::Identifier)
            && match self.peek_at(1) {
                None => true,
                Some(t) => t.is_op("=") || t.is_punct(","),
            };
        if !is_decl {
            self.pos = start;
            return Ok(None);
        }
        let mut vars = Vec::new();
        loop {
            let name = self.expect_ident()?;
            let init = if self.at_op("=") {
                self.pos += 1;
                Some(if self.at_punct("{") { self.array_initializer()? } else { self.expr()? })
            } else {
                None
            };
            vars.push(VarDeclarator { type_name: type_name.clone(), name, init });
            if self.at_punct(",") {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(Some(Expr::VariableDeclaration { vars }))
    }

    fn expr(&mut self) -> PResult<Expr> {
        if self.lambda_ahead() {
            return self.lambda();
        }
        let lhs = self.conditional()?;
        if let Some((op, width)) = self.peek_assign_op() {
            self.pos += width;
            let value = self.expr()?;
            return Ok(Expr::Assign { target: Box::new(lhs), op, value: Box::new(value) });
        }
        Ok(lhs)
    }

    fn peek_assign_op(&self) -> Option<(String, usize)> {
        let tok = self.peek()?;
        if tok.kind == TokenKind::Operator && ASSIGN_OPS.contains(&tok.text.as_str()) {
            return Some((tok.text.clone(), 1));
        }
        if tok.is_op(">") && self.contiguous(0) {
            let second = self.peek_at(1)?;
            if second.is_op(">=") {
                return Some((">>=".into(), 2));
            }
            if second.is_op(">") && self.contiguous(1) && self.peek_at(2)?.is_op(">=") {
                return Some((">>>=".into(), 3));
            }
        }
        None
    }

    // ---- lambdas --------------------------------------------------------

    fn lambda_ahead(&self) -> bool {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Identifier => self.peek_at(1).is_some_and(|n| n.is_op("->")),
            Some(t) if t.is_punct("(") => {
                let mut depth = 0usize;
                let mut i = self.pos;
                while let Some(tok) = self.tokens.get(i) {
                    if tok.is_punct("(") {
                        depth += 1;
                    } else if tok.is_punct(")") {
                        depth -= 1;
                        if depth == 0 {
                            return self.tokens.get(i + 1).is_some_and(|n| n.is_op("->"));
                        }
                    }
                    i += 1;
                }
                false
            }
            _ => false,
        }
    }

    fn lambda(&mut self) -> PResult<Expr> {
        let mut params = Vec::new();
        let parenthesized = self.at_punct("(");
        if parenthesized {
            self.pos += 1;
            while !self.at_punct(")") {
                let explicit = matches!(self.peek_at(1), Some(t) if !t.is_punct(",") && !t.is_punct(")"));
                let type_name = if explicit { Some(self.parse_type(false)?) } else { None };
                let name = self.expect_ident()?;
                params.push(LambdaParam { type_name, name });
                if self.at_punct(",") {
                    self.pos += 1;
                } else if !self.at_punct(")") {
                    return self.unexpected("`,` or `)`");
                }
            }
            self.pos += 1;
        } else {
            params.push(LambdaParam { type_name: None, name: self.expect_ident()? });
        }
        if !self.at_op("->") {
            return self.unexpected("`->`");
        }
        self.pos += 1;
        if self.at_punct("{") {
            return self.unsupported("lambda with block body");
        }
        let body = self.expr()?;
        Ok(Expr::Lambda { params, parenthesized, body: Box::new(body) })
    }

    // ---- operators ------------------------------------------------------

    fn conditional(&mut self) -> PResult<Expr> {
        let cond = self.binary(1)?;
        if !self.at_op("?") {
            return Ok(cond);
        }
        self.pos += 1;
        let then = self.expr()?;
        if !self.at_op(":") {
            return self.unexpected("`:`");
        }
        self.pos += 1;
        let otherwise = if self.lambda_ahead() { self.lambda()? } else { self.conditional()? };
        Ok(Expr::Conditional { cond: Box::new(cond), then: Box::new(then), otherwise: Box::new(otherwise) })
    }

    /// Returns the binary operator at the cursor with its precedence and
    /// token width.
    fn peek_binary_op(&self) -> Option<(String, u8, usize)> {
        let tok = self.peek()?;
        if tok.is_keyword("instanceof") {
            return Some(("instanceof".into(), 7, 1));
        }
        if tok.kind != TokenKind::Operator {
            return None;
        }
        if tok.text == ">" && self.contiguous(0) {
            let second = self.peek_at(1)?;
            if second.is_op(">") {
                if self.contiguous(1) {
                    let third = self.peek_at(2);
                    if third.is_some_and(|t| t.is_op(">")) {
                        return Some((">>>".into(), 8, 3));
                    }
                    if third.is_some_and(|t| t.is_op(">=")) {
                        return None;
                    }
                }
                return Some((">>".into(), 8, 2));
            }
            if second.is_op(">=") {
                return None;
            }
        }
        let prec = match tok.text.as_str() {
            "||" => 1,
            "&&" => 2,
            "|" => 3,
            "^" => 4,
            "&" => 5,
            "==" | "!=" => 6,
            "<" | ">" | "<=" | ">=" => 7,
            "<<" => 8,
            "+" | "-" => 9,
            "*" | "/" | "%" => 10,
            _ => return None,
        };
        Some((tok.text.clone(), prec, 1))
    }

    fn binary(&mut self, min_prec: u8) -> PResult<Expr> {
        let mut left = self.unary()?;
        while let Some((op, prec, width)) = self.peek_binary_op() {
            if prec < min_prec {
                break;
            }
            self.pos += width;
            if op == "instanceof" {
                let type_name = self.parse_type(false)?;
                left = Expr::InstanceOf { expr: Box::new(left), type_name };
                continue;
            }
            let right = self.binary(prec + 1)?;
            left = Expr::binary(left, op, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> PResult<Expr> {
        if let Some(tok) = self.peek() {
            if tok.kind == TokenKind::Operator && matches!(tok.text.as_str(), "+" | "-" | "++" | "--" | "!" | "~") {
                self.pos += 1;
                let operand = self.unary()?;
                return Ok(Expr::Unary { op: tok.text.clone(), operand: Box::new(operand), prefix: true });
            }
            if tok.is_punct("(") {
                if let Some(cast) = self.try_cast()? {
                    return Ok(cast);
                }
            }
        }
        self.postfix()
    }

    fn try_cast(&mut self) -> PResult<Option<Expr>> {
        let start = self.pos;
        self.pos += 1;
        let primitive = self.peek().is_some_and(|t| PRIMITIVE_TYPES.contains(&t.text.as_str()));
        let Ok(type_name) = self.parse_type(false) else {
            self.pos = start;
            return Ok(None);
        };
        if !self.at_punct(")") {
            self.pos = start;
            return Ok(None);
        }
        self.pos += 1;
        let next = self.peek();
        let operand_follows = match next {
            None => false,
            Some(t) if primitive => !t.is_punct(")") && !t.is_punct(",") && !t.is_punct(";"),
            Some(t) => match t.kind {
                TokenKind::Identifier
                | TokenKind::StringLiteral
                | TokenKind::CharLiteral
                | TokenKind::IntLiteral
                | TokenKind::LongLiteral
                | TokenKind::DoubleLiteral => true,
                TokenKind::Keyword => {
                    matches!(t.text.as_str(), "this" | "super" | "new" | "true" | "false" | "null")
                        || PRIMITIVE_TYPES.contains(&t.text.as_str())
                }
                TokenKind::Punctuation => t.text == "(",
                TokenKind::Operator => t.text == "!" || t.text == "~",
            },
        };
        if !operand_follows {
            self.pos = start;
            return Ok(None);
        }
        let inner = if self.lambda_ahead() { self.lambda()? } else { self.unary()? };
        Ok(Some(Expr::Cast { type_name, inner: Box::new(inner) }))
    }

    fn postfix(&mut self) -> PResult<Expr> {
        let mut expr = self.primary()?;
        expr = self.selectors(expr)?;
        while let Some(tok) = self.peek() {
            if tok.is_op("++") || tok.is_op("--") {
                self.pos += 1;
                expr = Expr::Unary { op: tok.text.clone(), operand: Box::new(expr), prefix: false };
            } else {
                break;
            }
        }
        Ok(expr)
    }

    // ---- primaries ------------------------------------------------------

    fn primary(&mut self) -> PResult<Expr> {
        let Some(tok) = self.peek() else {
            return self.unexpected("expression");
        };
        match tok.kind {
            TokenKind::IntLiteral => {
                self.pos += 1;
                Ok(Expr::IntegerLiteral { text: tok.text.clone() })
            }
            TokenKind::LongLiteral => {
                self.pos += 1;
                Ok(Expr::LongLiteral { text: tok.text.clone() })
            }
            TokenKind::DoubleLiteral => {
                self.pos += 1;
                Ok(Expr::DoubleLiteral { text: tok.text.clone() })
            }
            TokenKind::StringLiteral => {
                self.pos += 1;
                Ok(Expr::StringLiteral { text: tok.text.clone() })
            }
            TokenKind::CharLiteral => {
                self.pos += 1;
                Ok(Expr::CharLiteral { text: tok.text.clone() })
            }
            TokenKind::Identifier => {
                self.pos += 1;
                if self.at_punct("(") {
                    let args = self.arguments()?;
                    return Ok(Expr::MethodCall { scope: None, name: tok.text.clone(), args });
                }
                Ok(Expr::name(tok.text.clone()))
            }
            TokenKind::Keyword => self.keyword_primary(tok),
            TokenKind::Punctuation if tok.text == "(" => {
                self.pos += 1;
                if self.at_punct(")") {
                    self.pos += 1;
                    return Ok(Expr::Enclosed { inner: None });
                }
                let inner = self.expr()?;
                self.expect_punct(")")?;
                Ok(Expr::Enclosed { inner: Some(Box::new(inner)) })
            }
            TokenKind::Punctuation if tok.text == "{" => self.array_initializer(),
            TokenKind::Punctuation if tok.text == "@" => self.unsupported("annotation"),
            _ => self.unexpected("expression"),
        }
    }

    fn keyword_primary(&mut self, tok: &'t Token) -> PResult<Expr> {
        match tok.text.as_str() {
            "true" | "false" => {
                self.pos += 1;
                Ok(Expr::BooleanLiteral { value: tok.text == "true" })
            }
            "null" => {
                self.pos += 1;
                Ok(Expr::NullLiteral)
            }
            "this" => {
                self.pos += 1;
                if self.at_punct("(") {
                    return self.unsupported("constructor invocation");
                }
                Ok(Expr::ThisExpr { class_scope: None })
            }
            "super" => {
                self.pos += 1;
                Ok(Expr::SuperExpr { class_scope: None })
            }
            "new" => self.creation(),
            t if PRIMITIVE_TYPES.contains(&t) || t == "void" => {
                let type_name = self.parse_type(false)?;
                self.type_suffix(type_name)
            }
            "switch" => self.unsupported("switch expression"),
            _ => self.unexpected("expression"),
        }
    }

    /// After a bare type: `.class` or `::name`.
    fn type_suffix(&mut self, type_name: String) -> PResult<Expr> {
        if self.at_punct(".") && self.peek_at(1).is_some_and(|t| t.is_keyword("class")) {
            self.pos += 2;
            return Ok(Expr::ClassExpr { type_name });
        }
        if self.at_op("::") {
            self.pos += 1;
            let identifier = self.reference_identifier()?;
            return Ok(Expr::MethodReference { scope: Box::new(Expr::TypeExpr { type_name }), identifier });
        }
        self.unexpected("`.class` or `::`")
    }

    fn reference_identifier(&mut self) -> PResult<String> {
        if self.at_keyword("new") {
            self.pos += 1;
            return Ok("new".into());
        }
        self.expect_ident()
    }

    fn creation(&mut self) -> PResult<Expr> {
        self.pos += 1; // `new`
        let type_name = self.parse_type_name(true)?;
        if self.at_punct("[") {
            let mut dims = Vec::new();
            while self.at_punct("[") {
                self.pos += 1;
                if self.at_punct("]") {
                    self.pos += 1;
                    dims.push(None);
                } else {
                    let size = self.expr()?;
                    self.expect_punct("]")?;
                    dims.push(Some(size));
                }
            }
            let initializer = if self.at_punct("{") { Some(Box::new(self.array_initializer()?)) } else { None };
            return Ok(Expr::ArrayCreation { elem_type: type_name, dims, initializer });
        }
        let args = self.arguments()?;
        if self.at_punct("{") {
            return self.unsupported("anonymous class body");
        }
        Ok(Expr::ObjectCreation { type_name, args })
    }

    fn array_initializer(&mut self) -> PResult<Expr> {
        self.expect_punct("{")?;
        let mut values = Vec::new();
        while !self.at_punct("}") {
            let value = if self.at_punct("{") { self.array_initializer()? } else { self.expr()? };
            values.push(value);
            if self.at_punct(",") {
                self.pos += 1;
            } else if !self.at_punct("}") {
                return self.unexpected("`,` or `}`");
            }
        }
        self.pos += 1;
        Ok(Expr::ArrayInitializer { values })
    }

    fn arguments(&mut self) -> PResult<Vec<Expr>> {
        self.expect_punct("(")?;
        let mut args = Vec::new();
        while !self.at_punct(")") {
            args.push(self.expr()?);
            if self.at_punct(",") {
                self.pos += 1;
                if self.at_punct(")") {
                    return self.unexpected("argument");
                }
            } else if !self.at_punct(")") {
                return self.unexpected("`,` or `)`");
            }
        }
        self.pos += 1;
        Ok(args)
    }

    fn selectors(&mut self, mut expr: Expr) -> PResult<Expr> {
        while let Some(tok) = self.peek() {
            if tok.is_punct(".") {
                let Some(next) = self.peek_at(1) else {
                    return self.unexpected("member name");
                };
                match next.kind {
                    TokenKind::Identifier => {
                        self.pos += 2;
                        if self.at_punct("(") {
                            let args = self.arguments()?;
                            expr = Expr::MethodCall { scope: Some(Box::new(expr)), name: next.text.clone(), args };
                        } else {
                            expr = Expr::FieldAccess { scope: Box::new(expr), field: next.text.clone() };
                        }
                    }
                    TokenKind::Keyword if next.text == "class" => {
                        let Some(type_name) = qualified_name(&expr) else {
                            return self.unexpected("type before `.class`");
                        };
                        self.pos += 2;
                        expr = Expr::ClassExpr { type_name };
                    }
                    TokenKind::Keyword if next.text == "this" || next.text == "super" => {
                        let Some(class) = qualified_name(&expr) else {
                            return self.unexpected("class name");
                        };
                        self.pos += 2;
                        expr = if next.text == "this" {
                            Expr::ThisExpr { class_scope: Some(class) }
                        } else {
                            Expr::SuperExpr { class_scope: Some(class) }
                        };
                    }
                    TokenKind::Keyword if next.text == "new" => {
                        return self.unsupported("qualified inner class creation");
                    }
                    TokenKind::Operator if next.text == "<" => {
                        return self.unsupported("explicit generic method call");
                    }
                    _ => return self.unexpected("member name"),
                }
            } else if tok.is_punct("[") {
                if self.peek_at(1).is_some_and(|t| t.is_punct("]")) {
                    // `Foo[].class` / `Foo[]::new`
                    let Some(base) = qualified_name(&expr) else {
                        return self.unexpected("array index");
                    };
                    let mut type_name = base;
                    while self.at_punct("[") && self.peek_at(1).is_some_and(|t| t.is_punct("]")) {
                        self.pos += 2;
                        type_name.push_str("[]");
                    }
                    return self.type_suffix(type_name);
                }
                self.pos += 1;
                let index = self.expr()?;
                self.expect_punct("]")?;
                expr = Expr::ArrayAccess { name: Box::new(expr), index: Box::new(index) };
            } else if tok.is_op("::") {
                self.pos += 1;
                let identifier = self.reference_identifier()?;
                expr = Expr::MethodReference { scope: Box::new(expr), identifier };
            } else if tok.is_op("<") && qualified_name(&expr).is_some() {
                // `List<String>::size`; otherwise this is a less-than.
                let start = self.pos;
                let base = qualified_name(&expr).unwrap_or_default();
                match self.type_arguments(false) {
                    Ok(args) if self.at_op("::") => {
                        self.pos += 1;
                        let identifier = self.reference_identifier()?;
                        expr = Expr::MethodReference {
                            scope: Box::new(Expr::TypeExpr { type_name: format!("{base}{args}") }),
                            identifier,
                        };
                    }
                    _ => {
                        self.pos = start;
                        break;
                    }
                }
            } else {
                break;
            }
        }
        Ok(expr)
    }

    // ---- types ----------------------------------------------------------

    /// Parses a type, including array brackets.
    fn parse_type(&mut self, allow_diamond: bool) -> PResult<String> {
        let mut name = self.parse_type_name(allow_diamond)?;
        while self.at_punct("[") && self.peek_at(1).is_some_and(|t| t.is_punct("]")) {
            self.pos += 2;
            name.push_str("[]");
        }
        if self.at_op("...") {
            return self.unsupported("varargs parameter");
        }
        Ok(name)
    }

    /// Parses a primitive or (qualified, possibly generic) class type, without
    /// array brackets.
    fn parse_type_name(&mut self, allow_diamond: bool) -> PResult<String> {
        let Some(tok) = self.peek() else {
            return self.unexpected("type");
        };
        if tok.kind == TokenKind::Keyword {
            if PRIMITIVE_TYPES.contains(&tok.text.as_str()) || tok.text == "void" {
                self.pos += 1;
                return Ok(tok.text.clone());
            }
            return self.unexpected("type");
        }
        let mut name = self.expect_ident()?;
        loop {
            if self.at_op("<") {
                name.push_str(&self.type_arguments(allow_diamond)?);
            }
            if self.at_punct(".") && self.peek_at(1).is_some_and(|t| t.kind == TokenKind::Identifier) {
                self.pos += 2;
                name.push('.');
                name.push_str(&self.tokens[self.pos - 1].text);
            } else {
                break;
            }
        }
        Ok(name)
    }

    fn type_arguments(&mut self, allow_diamond: bool) -> PResult<String> {
        if !self.at_op("<") {
            return self.unexpected("`<`");
        }
        self.pos += 1;
        if self.at_op(">") {
            if !allow_diamond {
                return self.unexpected("type argument");
            }
            self.pos += 1;
            return Ok("<>".into());
        }
        let mut parts = Vec::new();
        loop {
            if self.at_op("?") {
                self.pos += 1;
                if self.at_keyword("extends") || self.at_keyword("super") {
                    let bound = self.bump().map(|t| t.text.clone()).unwrap_or_default();
                    let ty = self.parse_type(false)?;
                    parts.push(format!("? {bound} {ty}"));
                } else {
                    parts.push("?".into());
                }
            } else {
                parts.push(self.parse_type(false)?);
            }
            if self.at_punct(",") {
                self.pos += 1;
            } else {
                break;
            }
        }
        if !self.at_op(">") {
            return self.unexpected("`>`");
        }
        self.pos += 1;
        Ok(format!("<{}>", parts.join(", ")))
    }
}

/// `a.b.c` for a chain of names and field accesses.
pub fn qualified_name(expr: &Expr) -> Option<String> {
    match expr {
        Expr::Name { identifier } => Some(identifier.clone()),
        Expr::FieldAccess { scope, field } => qualified_name(scope).map(|scope| format!("{scope}.{field}")),
        _ => None,
    }
}
