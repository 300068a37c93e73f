//! Expression tree for the supported subset of Java.
//!
//! The `Display` impl prints an expression back to Java source. Literals
//! keep their exact lexemes and parentheses are kept as `Enclosed` nodes, so
//! printing a parsed expression reproduces the input up to whitespace.

use std::fmt;

use super::lexer::unescape_literal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarDeclarator {
    pub type_name: String,
    pub name: String,
    pub init: Option<Expr>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaParam {
    pub type_name: Option<String>,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    ArrayAccess {
        name: Box<Expr>,
        index: Box<Expr>,
    },
    /// `new T[n][]` or `new T[] {..}`; `dims` holds one entry per bracket pair.
    ArrayCreation {
        elem_type: String,
        dims: Vec<Option<Expr>>,
        initializer: Option<Box<Expr>>,
    },
    ArrayInitializer {
        values: Vec<Expr>,
    },
    Assign {
        target: Box<Expr>,
        op: String,
        value: Box<Expr>,
    },
    Binary {
        left: Box<Expr>,
        op: String,
        right: Box<Expr>,
    },
    BooleanLiteral {
        value: bool,
    },
    Cast {
        type_name: String,
        inner: Box<Expr>,
    },
    /// Raw lexeme including quotes.
    CharLiteral {
        text: String,
    },
    ClassExpr {
        type_name: String,
    },
    Conditional {
        cond: Box<Expr>,
        then: Box<Expr>,
        otherwise: Box<Expr>,
    },
    DoubleLiteral {
        text: String,
    },
    Enclosed {
        inner: Option<Box<Expr>>,
    },
    FieldAccess {
        scope: Box<Expr>,
        field: String,
    },
    InstanceOf {
        expr: Box<Expr>,
        type_name: String,
    },
    IntegerLiteral {
        text: String,
    },
    Lambda {
        params: Vec<LambdaParam>,
        parenthesized: bool,
        body: Box<Expr>,
    },
    LongLiteral {
        text: String,
    },
    MethodCall {
        scope: Option<Box<Expr>>,
        name: String,
        args: Vec<Expr>,
    },
    MethodReference {
        scope: Box<Expr>,
        identifier: String,
    },
    Name {
        identifier: String,
    },
    NullLiteral,
    ObjectCreation {
        type_name: String,
        args: Vec<Expr>,
    },
    /// Raw lexeme including quotes; see [`Expr::string_value`].
    StringLiteral {
        text: String,
    },
    SuperExpr {
        class_scope: Option<String>,
    },
    ThisExpr {
        class_scope: Option<String>,
    },
    TypeExpr {
        type_name: String,
    },
    Unary {
        op: String,
        operand: Box<Expr>,
        prefix: bool,
    },
    VariableDeclaration {
        vars: Vec<VarDeclarator>,
    },
}

impl Expr {
    pub fn name(identifier: impl Into<String>) -> Expr {
        Expr::Name { identifier: identifier.into() }
    }

    pub fn int(text: impl Into<String>) -> Expr {
        Expr::IntegerLiteral { text: text.into() }
    }

    pub fn call(scope: Option<Expr>, name: impl Into<String>, args: Vec<Expr>) -> Expr {
        Expr::MethodCall { scope: scope.map(Box::new), name: name.into(), args }
    }

    pub fn binary(left: Expr, op: impl Into<String>, right: Expr) -> Expr {
        Expr::Binary { left: Box::new(left), op: op.into(), right: Box::new(right) }
    }

    /// Variant name, used in rule traces and diagnostics.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Expr::ArrayAccess { .. } => "ArrayAccess",
            Expr::ArrayCreation { .. } => "ArrayCreation",
            Expr::ArrayInitializer { .. } => "ArrayInitializer",
            Expr::Assign { .. } => "Assign",
            Expr::Binary { .. } => "Binary",
            Expr::BooleanLiteral { .. } => "BooleanLiteral",
            Expr::Cast { .. } => "Cast",
            Expr::CharLiteral { .. } => "CharLiteral",
            Expr::ClassExpr { .. } => "ClassExpr",
            Expr::Conditional { .. } => "Conditional",
            Expr::DoubleLiteral { .. } => "DoubleLiteral",
            Expr::Enclosed { .. } => "Enclosed",
            Expr::FieldAccess { .. } => "FieldAccess",
            Expr::InstanceOf { .. } => "InstanceOf",
            Expr::IntegerLiteral { .. } => "IntegerLiteral",
            Expr::Lambda { .. } => "Lambda",
            Expr::LongLiteral { .. } => "LongLiteral",
            Expr::MethodCall { .. } => "MethodCall",
            Expr::MethodReference { .. } => "MethodReference",
            Expr::Name { .. } => "Name",
            Expr::NullLiteral => "NullLiteral",
            Expr::ObjectCreation { .. } => "ObjectCreation",
            Expr::StringLiteral { .. } => "StringLiteral",
            Expr::SuperExpr { .. } => "SuperExpr",
            Expr::ThisExpr { .. } => "ThisExpr",
            Expr::TypeExpr { .. } => "TypeExpr",
            Expr::Unary { .. } => "Unary",
            Expr::VariableDeclaration { .. } => "VariableDeclaration",
        }
    }

    pub fn is_string_literal(&self) -> bool {
        matches!(self, Expr::StringLiteral { .. })
    }

    /// Decoded value of a string literal.
    pub fn string_value(&self) -> Option<String> {
        match self {
            Expr::StringLiteral { text } => Some(unescape_literal(text)),
            _ => None,
        }
    }

    pub fn is_numeric_literal(&self) -> bool {
        match self {
            Expr::IntegerLiteral { .. } | Expr::LongLiteral { .. } | Expr::DoubleLiteral { .. } => true,
            Expr::Unary { op, operand, prefix: true } if op == "-" || op == "+" => operand.is_numeric_literal(),
            _ => false,
        }
    }

    /// Any literal, or a signed numeric literal.
    pub fn is_constant(&self) -> bool {
        matches!(
            self,
            Expr::BooleanLiteral { .. }
                | Expr::CharLiteral { .. }
                | Expr::IntegerLiteral { .. }
                | Expr::LongLiteral { .. }
                | Expr::DoubleLiteral { .. }
                | Expr::StringLiteral { .. }
                | Expr::NullLiteral
        ) || self.is_numeric_literal()
    }

    pub fn is_method_call(&self) -> bool {
        matches!(self, Expr::MethodCall { .. })
    }

    /// Direct child expressions, in source order.
    pub fn children(&self) -> Vec<&Expr> {
        match self {
            Expr::ArrayAccess { name, index } => vec![name, index],
            Expr::ArrayCreation { dims, initializer, .. } => {
                dims.iter().flatten().chain(initializer.as_deref()).collect()
            }
            Expr::ArrayInitializer { values } => values.iter().collect(),
            Expr::Assign { target, value, .. } => vec![target, value],
            Expr::Binary { left, right, .. } => vec![left, right],
            Expr::Cast { inner, .. } => vec![inner],
            Expr::Conditional { cond, then, otherwise } => vec![cond, then, otherwise],
            Expr::Enclosed { inner } => inner.iter().map(|b| &**b).collect(),
            Expr::FieldAccess { scope, .. } => vec![scope],
            Expr::InstanceOf { expr, .. } => vec![expr],
            Expr::Lambda { body, .. } => vec![body],
            Expr::MethodCall { scope, args, .. } => scope.iter().map(|b| &**b).chain(args.iter()).collect(),
            Expr::MethodReference { scope, .. } => vec![scope],
            Expr::ObjectCreation { args, .. } => args.iter().collect(),
            Expr::Unary { operand, .. } => vec![operand],
            Expr::VariableDeclaration { vars } => vars.iter().filter_map(|v| v.init.as_ref()).collect(),
            Expr::BooleanLiteral { .. }
            | Expr::CharLiteral { .. }
            | Expr::ClassExpr { .. }
            | Expr::DoubleLiteral { .. }
            | Expr::IntegerLiteral { .. }
            | Expr::LongLiteral { .. }
            | Expr::Name { .. }
            | Expr::NullLiteral
            | Expr::StringLiteral { .. }
            | Expr::SuperExpr { .. }
            | Expr::ThisExpr { .. }
            | Expr::TypeExpr { .. } => Vec::new(),
        }
    }

    pub fn depth(&self) -> usize {
        1 + self.children().into_iter().map(Expr::depth).max().unwrap_or(0)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[Expr]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::ArrayAccess { name, index } => write!(f, "{name}[{index}]"),
            Expr::ArrayCreation { elem_type, dims, initializer } => {
                write!(f, "new {elem_type}")?;
                for dim in dims {
                    match dim {
                        Some(size) => write!(f, "[{size}]")?,
                        None => f.write_str("[]")?,
                    }
                }
                if let Some(init) = initializer {
                    write!(f, " {init}")?;
                }
                Ok(())
            }
            Expr::ArrayInitializer { values } => {
                f.write_str("{")?;
                write_list(f, values)?;
                f.write_str("}")
            }
            Expr::Assign { target, op, value } => write!(f, "{target} {op} {value}"),
            Expr::Binary { left, op, right } => write!(f, "{left} {op} {right}"),
            Expr::BooleanLiteral { value } => write!(f, "{value}"),
            Expr::Cast { type_name, inner } => write!(f, "({type_name}) {inner}"),
            Expr::CharLiteral { text }
            | Expr::DoubleLiteral { text }
            | Expr::IntegerLiteral { text }
            | Expr::LongLiteral { text }
            | Expr::StringLiteral { text } => f.write_str(text),
            Expr::ClassExpr { type_name } => write!(f, "{type_name}.class"),
            Expr::Conditional { cond, then, otherwise } => {
                write!(f, "{cond} ? {then} : {otherwise}")
            }
            Expr::Enclosed { inner: Some(inner) } => write!(f, "({inner})"),
            Expr::Enclosed { inner: None } => f.write_str("()"),
            Expr::FieldAccess { scope, field } => write!(f, "{scope}.{field}"),
            Expr::InstanceOf { expr, type_name } => write!(f, "{expr} instanceof {type_name}"),
            Expr::Lambda { params, parenthesized, body } => {
                if *parenthesized {
                    f.write_str("(")?;
                }
                for (i, p) in params.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    match &p.type_name {
                        Some(t) => write!(f, "{t} {}", p.name)?,
                        None => f.write_str(&p.name)?,
                    }
                }
                if *parenthesized {
                    f.write_str(")")?;
                }
                write!(f, " -> {body}")
            }
            Expr::MethodCall { scope, name, args } => {
                if let Some(scope) = scope {
                    write!(f, "{scope}.")?;
                }
                write!(f, "{name}(")?;
                write_list(f, args)?;
                f.write_str(")")
            }
            Expr::MethodReference { scope, identifier } => write!(f, "{scope}::{identifier}"),
            Expr::Name { identifier } => f.write_str(identifier),
            Expr::NullLiteral => f.write_str("null"),
            Expr::ObjectCreation { type_name, args } => {
                write!(f, "new {type_name}(")?;
                write_list(f, args)?;
                f.write_str(")")
            }
            Expr::SuperExpr { class_scope } | Expr::ThisExpr { class_scope } => {
                if let Some(class) = class_scope {
                    write!(f, "{class}.")?;
                }
                f.write_str(if matches!(self, Expr::SuperExpr { .. }) { "super" } else { "this" })
            }
            Expr::TypeExpr { type_name } => f.write_str(type_name),
            Expr::Unary { op, operand, prefix: true } => write!(f, "{op}{operand}"),
            Expr::Unary { op, operand, prefix: false } => write!(f, "{operand}{op}"),
            Expr::VariableDeclaration { vars } => {
                for (i, var) in vars.iter().enumerate() {
                    if i == 0 {
                        write!(f, "{} {}", var.type_name, var.name)?;
                    } else {
                        write!(f, ", {}", var.name)?;
                    }
                    if let Some(init) = &var.init {
                        write!(f, " = {init}")?;
                    }
                }
                Ok(())
            }
        }
    }
}
