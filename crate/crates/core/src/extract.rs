//! Assertion conditions and argument roles.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::java::ast::Expr;
use crate::java::lexer::{tokenize, Span};
use crate::java::parser::{parse_expression, ParseError};
use crate::java::scan::ScannedAssertion;
use crate::java::symbols::{base_type_name, SymbolTable};
use crate::phrase::camel::split_camel_case;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Condition {
    True,
    False,
    Null,
    NotNull,
    Equals,
    NotEquals,
    ArrayEquals,
    Same,
    NotSame,
    That,
}

impl Condition {
    pub const ALL: [Condition; 10] = [
        Condition::True,
        Condition::False,
        Condition::Null,
        Condition::NotNull,
        Condition::Equals,
        Condition::NotEquals,
        Condition::ArrayEquals,
        Condition::Same,
        Condition::NotSame,
        Condition::That,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::True => "True",
            Condition::False => "False",
            Condition::Null => "Null",
            Condition::NotNull => "NotNull",
            Condition::Equals => "Equals",
            Condition::NotEquals => "NotEquals",
            Condition::ArrayEquals => "ArrayEquals",
            Condition::Same => "Same",
            Condition::NotSame => "NotSame",
            Condition::That => "That",
        }
    }

    pub fn method_name(self) -> String {
        format!("assert{}", self.name())
    }

    /// The condition as lowercase words: `NotNull` -> `not null`.
    pub fn words(self) -> String {
        split_camel_case(self.name()).join(" ")
    }

    /// Conditions on a single value.
    pub fn is_unary(self) -> bool {
        matches!(self, Condition::True | Condition::False | Condition::Null | Condition::NotNull)
    }

    /// Conditions that have a numeric tolerance overload.
    pub fn accepts_delta(self) -> bool {
        matches!(self, Condition::Equals | Condition::NotEquals | Condition::ArrayEquals)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExtractError {
    #[error("unknown assertion method `{name}`")]
    UnknownAssertion { name: String },
    #[error("{condition} does not take {arity} argument(s) in this form")]
    ArityMismatch { condition: Condition, arity: usize },
    #[error("statement is not a method call")]
    NotACall,
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
}

/// Maps an assertion method name to its condition by dropping `assert` and
/// reading the remaining camel-case words.
pub fn classify_condition(method_name: &str) -> Result<Condition, ExtractError> {
    let unknown = || ExtractError::UnknownAssertion { name: method_name.to_string() };
    let words = split_camel_case(method_name);
    if words.first().map(String::as_str) != Some("assert") || !method_name.starts_with("assert") {
        return Err(unknown());
    }
    let rest = words[1..].join(" ");
    Condition::ALL.into_iter().find(|c| c.words() == rest && c.method_name() == method_name).ok_or_else(unknown)
}

/// One parsed assertion statement.
#[derive(Debug, Clone, PartialEq)]
pub struct AssertionCall {
    pub condition: Condition,
    pub args: Vec<Expr>,
    pub span: Span,
    pub raw_text: String,
}

impl AssertionCall {
    /// Parses a scanned statement (`Assert.assertEquals(a, b);`).
    pub fn parse(scanned: &ScannedAssertion) -> Result<Self, ExtractError> {
        let mut tokens = tokenize(&scanned.text).map_err(ParseError::from)?;
        if tokens.last().is_some_and(|t| t.is_punct(";")) {
            tokens.pop();
        }
        let Expr::MethodCall { name, args, .. } = parse_expression(&tokens)? else {
            return Err(ExtractError::NotACall);
        };
        let condition = classify_condition(&name)?;
        if args.is_empty() || args.len() > 4 {
            return Err(ExtractError::ArityMismatch { condition, arity: args.len() });
        }
        Ok(AssertionCall { condition, args, span: scanned.span, raw_text: scanned.text.clone() })
    }
}

/// Arguments labelled by role. `expected`/`actual` are in API order until
/// [`disambiguate_expected_actual`] has run.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ParamAssignment {
    pub message: Option<Expr>,
    pub expected: Option<Expr>,
    pub actual: Option<Expr>,
    pub delta: Option<Expr>,
    pub matcher: Option<Expr>,
}

const NUMERIC_TYPES: &[&str] = &[
    "byte",
    "short",
    "int",
    "long",
    "float",
    "double",
    "Byte",
    "Short",
    "Integer",
    "Long",
    "Float",
    "Double",
    "Number",
    "BigDecimal",
    "BigInteger",
];

fn is_numeric_type(type_name: &str) -> bool {
    !type_name.contains('[') && NUMERIC_TYPES.contains(&base_type_name(type_name))
}

/// Whether `expr` can be the tolerance argument of an equality assertion.
pub fn is_numeric_compatible(expr: &Expr, symbols: &SymbolTable, offset: usize) -> bool {
    match expr {
        Expr::Name { identifier } => symbols.type_at(identifier, offset).is_some_and(is_numeric_type),
        Expr::FieldAccess { scope, .. } => {
            matches!(&**scope, Expr::Name { identifier } if is_numeric_type(identifier))
        }
        Expr::Binary { left, op, right } => {
            matches!(op.as_str(), "+" | "-" | "*" | "/" | "%")
                && (is_numeric_compatible(left, symbols, offset) || is_numeric_compatible(right, symbols, offset))
        }
        Expr::Cast { type_name, .. } => is_numeric_type(type_name),
        Expr::Enclosed { inner: Some(inner) } => is_numeric_compatible(inner, symbols, offset),
        other => other.is_numeric_literal(),
    }
}

/// Assigns roles by argument count and order. The first matching rule wins:
///
/// * 1 arg: actual.
/// * 2 args: `(message, actual)` for single-value conditions with a string
///   literal first; `(actual, matcher)` for `assertThat`; otherwise
///   `(expected, actual)`.
/// * 3 args: `(message, expected, actual)` or `(message, actual, matcher)`
///   with a string literal first; otherwise `(expected, actual, delta)` for
///   equality conditions with a numeric third argument.
/// * 4 args: `(message, expected, actual, delta)`.
pub fn identify_params(call: &AssertionCall, symbols: &SymbolTable) -> Result<ParamAssignment, ExtractError> {
    let cond = call.condition;
    let args = &call.args;
    let mismatch = || ExtractError::ArityMismatch { condition: cond, arity: args.len() };
    let arg = |i: usize| Some(args[i].clone());
    let first_is_message = args.first().is_some_and(Expr::is_string_literal);
    let p = match (args.len(), cond) {
        (1, c) if c.is_unary() => ParamAssignment { actual: arg(0), ..Default::default() },
        (2, c) if c.is_unary() && first_is_message => {
            ParamAssignment { message: arg(0), actual: arg(1), ..Default::default() }
        }
        (2, Condition::That) => ParamAssignment { actual: arg(0), matcher: arg(1), ..Default::default() },
        (2, c) if !c.is_unary() => ParamAssignment { expected: arg(0), actual: arg(1), ..Default::default() },
        (3, Condition::That) if first_is_message => {
            ParamAssignment { message: arg(0), actual: arg(1), matcher: arg(2), ..Default::default() }
        }
        (3, c) if !c.is_unary() && c != Condition::That && first_is_message => {
            ParamAssignment { message: arg(0), expected: arg(1), actual: arg(2), ..Default::default() }
        }
        (3, c) if c.accepts_delta() && is_numeric_compatible(&args[2], symbols, call.span.start) => {
            ParamAssignment { expected: arg(0), actual: arg(1), delta: arg(2), ..Default::default() }
        }
        (4, c) if c.accepts_delta() => {
            ParamAssignment { message: arg(0), expected: arg(1), actual: arg(2), delta: arg(3), ..Default::default() }
        }
        _ => return Err(mismatch()),
    };
    Ok(p)
}

/// Which ordering rule decided expected vs. actual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrderRule {
    /// A constant and a method call: the call is the actual value.
    ConstantVersusCall,
    /// Two calls, one made on the class under test: that one is actual.
    ClassUnderTestReceiver,
    /// Neither applies: API order is trusted.
    ApiOrder,
}

impl OrderRule {
    pub fn rule_id(self) -> &'static str {
        match self {
            OrderRule::ConstantVersusCall => "order.rule1.constant_vs_call",
            OrderRule::ClassUnderTestReceiver => "order.rule2.class_under_test",
            OrderRule::ApiOrder => "order.rule3.api_order",
        }
    }
}

/// Type of the object at the root of a call chain: a declared variable, a
/// capitalised static class name, or a constructor.
fn receiver_type(expr: &Expr, symbols: &SymbolTable, offset: usize) -> Option<String> {
    match expr {
        Expr::MethodCall { scope: Some(scope), .. } | Expr::FieldAccess { scope, .. } => {
            receiver_type(scope, symbols, offset)
        }
        Expr::Enclosed { inner: Some(inner) } | Expr::Cast { inner, .. } => receiver_type(inner, symbols, offset),
        Expr::Name { identifier } => match symbols.type_at(identifier, offset) {
            Some(t) => Some(base_type_name(t).to_string()),
            None if identifier.starts_with(char::is_uppercase) => Some(identifier.clone()),
            None => None,
        },
        Expr::ObjectCreation { type_name, .. } => Some(base_type_name(type_name).to_string()),
        _ => None,
    }
}

fn invoked_on_class_under_test(expr: &Expr, symbols: &SymbolTable, offset: usize) -> bool {
    let Some(cut) = symbols.class_under_test() else {
        return false;
    };
    matches!(expr, Expr::MethodCall { scope: Some(_), .. })
        && receiver_type(expr, symbols, offset).is_some_and(|t| t == cut)
}

/// Orders two provisional values as `(expected, actual)`.
pub fn disambiguate_expected_actual(
    p1: Expr,
    p2: Expr,
    symbols: &SymbolTable,
    offset: usize,
) -> (Expr, Expr, OrderRule) {
    if p1.is_constant() && p2.is_method_call() {
        return (p1, p2, OrderRule::ConstantVersusCall);
    }
    if p1.is_method_call() && p2.is_constant() {
        return (p2, p1, OrderRule::ConstantVersusCall);
    }
    if p1.is_method_call() && p2.is_method_call() {
        let first = invoked_on_class_under_test(&p1, symbols, offset);
        let second = invoked_on_class_under_test(&p2, symbols, offset);
        if first != second {
            return if second {
                (p1, p2, OrderRule::ClassUnderTestReceiver)
            } else {
                (p2, p1, OrderRule::ClassUnderTestReceiver)
            };
        }
    }
    (p1, p2, OrderRule::ApiOrder)
}
