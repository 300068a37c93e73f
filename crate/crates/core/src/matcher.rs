//! Hamcrest matcher trees for `assertThat`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::java::ast::Expr;
use crate::phrase::render::{type_phrase, Phrase, Renderer};

/// The supported CoreMatchers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MatcherKind {
    AllOf,
    AnyOf,
    Both,
    Either,
    EveryItem,
    Is,
    IsA,
    Anything,
    HasItem,
    HasItems,
    EqualTo,
    InstanceOf,
    Not,
    NullValue,
    NotNullValue,
    SameInstance,
    StartsWith,
    EndsWith,
    ContainsString,
}

impl MatcherKind {
    pub const ALL: [MatcherKind; 19] = [
        MatcherKind::AllOf,
        MatcherKind::AnyOf,
        MatcherKind::Both,
        MatcherKind::Either,
        MatcherKind::EveryItem,
        MatcherKind::Is,
        MatcherKind::IsA,
        MatcherKind::Anything,
        MatcherKind::HasItem,
        MatcherKind::HasItems,
        MatcherKind::EqualTo,
        MatcherKind::InstanceOf,
        MatcherKind::Not,
        MatcherKind::NullValue,
        MatcherKind::NotNullValue,
        MatcherKind::SameInstance,
        MatcherKind::StartsWith,
        MatcherKind::EndsWith,
        MatcherKind::ContainsString,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatcherKind::AllOf => "allOf",
            MatcherKind::AnyOf => "anyOf",
            MatcherKind::Both => "both",
            MatcherKind::Either => "either",
            MatcherKind::EveryItem => "everyItem",
            MatcherKind::Is => "is",
            MatcherKind::IsA => "isA",
            MatcherKind::Anything => "anything",
            MatcherKind::HasItem => "hasItem",
            MatcherKind::HasItems => "hasItems",
            MatcherKind::EqualTo => "equalTo",
            MatcherKind::InstanceOf => "instanceOf",
            MatcherKind::Not => "not",
            MatcherKind::NullValue => "nullValue",
            MatcherKind::NotNullValue => "notNullValue",
            MatcherKind::SameInstance => "sameInstance",
            MatcherKind::StartsWith => "startsWith",
            MatcherKind::EndsWith => "endsWith",
            MatcherKind::ContainsString => "containsString",
        }
    }

    /// Looks up a matcher factory name. `startWith` is accepted for
    /// `startsWith`.
    pub fn from_name(name: &str) -> Option<MatcherKind> {
        if name == "startWith" {
            return Some(MatcherKind::StartsWith);
        }
        MatcherKind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Kinds whose arguments are always matchers.
    fn takes_only_matchers(self) -> bool {
        matches!(
            self,
            MatcherKind::AllOf | MatcherKind::AnyOf | MatcherKind::Both | MatcherKind::Either | MatcherKind::EveryItem
        )
    }

    fn rule_id(self) -> &'static str {
        match self {
            MatcherKind::AllOf => "matcher.all_of",
            MatcherKind::AnyOf => "matcher.any_of",
            MatcherKind::Both => "matcher.both",
            MatcherKind::Either => "matcher.either",
            MatcherKind::EveryItem => "matcher.every_item",
            MatcherKind::Is => "matcher.is",
            MatcherKind::IsA => "matcher.is_a",
            MatcherKind::Anything => "matcher.anything",
            MatcherKind::HasItem => "matcher.has_item",
            MatcherKind::HasItems => "matcher.has_items",
            MatcherKind::EqualTo => "matcher.equal_to",
            MatcherKind::InstanceOf => "matcher.instance_of",
            MatcherKind::Not => "matcher.not",
            MatcherKind::NullValue => "matcher.null_value",
            MatcherKind::NotNullValue => "matcher.not_null_value",
            MatcherKind::SameInstance => "matcher.same_instance",
            MatcherKind::StartsWith => "matcher.starts_with",
            MatcherKind::EndsWith => "matcher.ends_with",
            MatcherKind::ContainsString => "matcher.contains_string",
        }
    }
}

impl fmt::Display for MatcherKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which overload of a matcher factory a call selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Overload {
    NoArgs,
    /// `anything(String description)`.
    Description,
    Value,
    Matcher,
    /// A `Class<?>` argument.
    Class,
    Values,
    Matchers,
    /// `allOf`/`anyOf` with exactly this many matchers.
    Fixed(u8),
    /// `allOf(Matcher...)`/`anyOf(Matcher...)` outside the fixed arities.
    Varargs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    pub kind: MatcherKind,
    pub overload: Overload,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args = match self.overload {
            Overload::NoArgs => String::new(),
            Overload::Description => "String".into(),
            Overload::Value => "T".into(),
            Overload::Matcher => "Matcher".into(),
            Overload::Class => "Class".into(),
            Overload::Values => "T...".into(),
            Overload::Matchers => "Matcher...".into(),
            Overload::Fixed(n) => vec!["Matcher"; n as usize].join(", "),
            Overload::Varargs => "Matcher...".into(),
        };
        match self.kind {
            MatcherKind::Both => write!(f, "both({args}).and(Matcher)"),
            MatcherKind::Either => write!(f, "either({args}).or(Matcher)"),
            kind => write!(f, "{kind}({args})"),
        }
    }
}

/// The frozen table of supported signatures, one entry per overload.
pub fn enumerate_signatures() -> Vec<Signature> {
    use MatcherKind as K;
    use Overload as O;
    let mut table = Vec::with_capacity(37);
    for kind in [K::AllOf, K::AnyOf] {
        table.extend((2..=6).map(|n| Signature { kind, overload: O::Fixed(n) }));
        table.push(Signature { kind, overload: O::Varargs });
    }
    let rest: &[(MatcherKind, &[Overload])] = &[
        (K::Both, &[O::Matcher]),
        (K::Either, &[O::Matcher]),
        (K::EveryItem, &[O::Matcher]),
        (K::Is, &[O::Value, O::Matcher, O::Class]),
        (K::IsA, &[O::Class]),
        (K::Anything, &[O::NoArgs, O::Description]),
        (K::HasItem, &[O::Value, O::Matcher]),
        (K::HasItems, &[O::Values, O::Matchers]),
        (K::EqualTo, &[O::Value]),
        (K::InstanceOf, &[O::Class]),
        (K::Not, &[O::Value, O::Matcher]),
        (K::NullValue, &[O::NoArgs, O::Class]),
        (K::NotNullValue, &[O::NoArgs, O::Class]),
        (K::SameInstance, &[O::Value]),
        (K::StartsWith, &[O::Value]),
        (K::EndsWith, &[O::Value]),
        (K::ContainsString, &[O::Value]),
    ];
    for (kind, overloads) in rest {
        table.extend(overloads.iter().map(|&overload| Signature { kind: *kind, overload }));
    }
    table
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatcherError {
    #[error("unsupported matcher `{name}`")]
    UnsupportedMatcher { name: String },
    #[error("expected a matcher call, found {found}")]
    NotAMatcher { found: &'static str },
    #[error("`{matcher}` does not accept {found}")]
    BadArguments { matcher: MatcherKind, found: String },
}

/// A parsed matcher expression.
#[derive(Debug, Clone, PartialEq)]
pub struct MatcherNode {
    pub kind: MatcherKind,
    pub values: Vec<Expr>,
    pub nested: Vec<MatcherNode>,
    /// Second operand of `both(..).and(..)` / `either(..).or(..)`.
    pub chained: Option<Box<MatcherNode>>,
    pub signature: Signature,
}

impl MatcherNode {
    pub fn depth(&self) -> usize {
        1 + self.nested.iter().chain(self.chained.as_deref()).map(MatcherNode::depth).max().unwrap_or(0)
    }

    /// Skips `is(matcher)` wrappers, which add no meaning.
    pub fn effective(&self) -> &MatcherNode {
        match (self.kind, self.nested.as_slice()) {
            (MatcherKind::Is, [inner]) => inner.effective(),
            _ => self,
        }
    }

    fn is_compound(&self) -> bool {
        matches!(self.kind, MatcherKind::AllOf | MatcherKind::AnyOf | MatcherKind::Both | MatcherKind::Either)
    }
}

/// Whether `expr` is a call to one of the supported matcher factories,
/// including `both(..).and(..)` chains.
pub fn is_matcher_call(expr: &Expr) -> bool {
    match expr {
        Expr::MethodCall { name, scope, .. } if name == "and" || name == "or" => {
            scope.as_deref().is_some_and(is_matcher_call)
        }
        Expr::MethodCall { name, scope, .. } => {
            MatcherKind::from_name(name).is_some() && scope.as_deref().is_none_or(is_class_qualifier)
        }
        _ => false,
    }
}

/// `CoreMatchers` or `org.hamcrest.CoreMatchers`, as opposed to an
/// instance receiver such as `user`.
fn is_class_qualifier(scope: &Expr) -> bool {
    match scope {
        Expr::Name { identifier } => identifier.starts_with(char::is_uppercase),
        Expr::FieldAccess { field, .. } => field.starts_with(char::is_uppercase),
        _ => false,
    }
}

fn bad(kind: MatcherKind, found: impl Into<String>) -> MatcherError {
    MatcherError::BadArguments { matcher: kind, found: found.into() }
}

/// Parses a matcher expression into a tree. Nested matcher arguments are
/// parsed recursively; other arguments are kept as values.
pub fn parse_matcher(expr: &Expr) -> Result<MatcherNode, MatcherError> {
    let Expr::MethodCall { scope, name, args } = expr else {
        return Err(MatcherError::NotAMatcher { found: expr.kind_name() });
    };
    if name == "and" || name == "or" {
        if let Some(inner @ Expr::MethodCall { .. }) = scope.as_deref() {
            let mut head = parse_matcher(inner)?;
            let pairs = matches!((head.kind, name.as_str()), (MatcherKind::Both, "and") | (MatcherKind::Either, "or"));
            if !pairs || head.chained.is_some() || args.len() != 1 {
                return Err(MatcherError::UnsupportedMatcher { name: name.clone() });
            }
            head.chained = Some(Box::new(parse_matcher(&args[0])?));
            return Ok(head);
        }
    }
    if let Some(scope) = scope.as_deref() {
        if !is_class_qualifier(scope) {
            return Err(MatcherError::UnsupportedMatcher { name: name.clone() });
        }
    }
    let kind = MatcherKind::from_name(name).ok_or_else(|| MatcherError::UnsupportedMatcher { name: name.clone() })?;
    let mut values = Vec::new();
    let mut nested = Vec::new();
    for arg in args {
        if kind.takes_only_matchers() || is_matcher_call(arg) {
            nested.push(parse_matcher(arg)?);
        } else {
            values.push(arg.clone());
        }
    }
    let overload = resolve_overload(kind, &values, &nested)?;
    Ok(MatcherNode { kind, values, nested, chained: None, signature: Signature { kind, overload } })
}

fn resolve_overload(kind: MatcherKind, values: &[Expr], nested: &[MatcherNode]) -> Result<Overload, MatcherError> {
    use MatcherKind as K;
    let is_class = |e: &Expr| matches!(e, Expr::ClassExpr { .. });
    let shape = format!("{} value(s) and {} matcher(s)", values.len(), nested.len());
    let overload = match (kind, values, nested.len()) {
        (K::AllOf | K::AnyOf, [], n @ 2..=6) => Overload::Fixed(n as u8),
        (K::AllOf | K::AnyOf, [], n) if n > 0 => Overload::Varargs,
        (K::Both | K::Either | K::EveryItem, [], 1) => Overload::Matcher,
        (K::Is | K::HasItem | K::Not, [], 1) => Overload::Matcher,
        (K::Is | K::NullValue | K::NotNullValue, [v], 0) if is_class(v) => Overload::Class,
        (K::IsA | K::InstanceOf, [_], 0) => Overload::Class,
        (K::Is | K::HasItem | K::Not | K::EqualTo | K::SameInstance, [_], 0) => Overload::Value,
        (K::StartsWith | K::EndsWith | K::ContainsString, [_], 0) => Overload::Value,
        (K::Anything | K::NullValue | K::NotNullValue, [], 0) => Overload::NoArgs,
        (K::Anything, [_], 0) => Overload::Description,
        (K::HasItems, [], n) if n > 0 => Overload::Matchers,
        (K::HasItems, [_, ..], 0) => Overload::Values,
        _ => return Err(bad(kind, shape)),
    };
    Ok(overload)
}

/// Renders matcher trees; values go through the expression renderer with
/// string literals kept as quoted text.
#[derive(Debug, Clone, Copy)]
pub struct MatcherRenderer<'a> {
    renderer: Renderer<'a>,
}

impl<'a> MatcherRenderer<'a> {
    pub fn new(renderer: Renderer<'a>) -> Self {
        MatcherRenderer { renderer }
    }

    pub fn render(&self, node: &MatcherNode) -> Phrase {
        let mut trace = Vec::new();
        let text = self.phrase(node, &mut trace);
        Phrase::finish(text, trace)
    }

    fn value(&self, expr: &Expr, trace: &mut Vec<&'static str>) -> String {
        let p = self.renderer.render_quoted(expr);
        trace.extend(p.trace);
        p.text
    }

    fn type_value(&self, expr: &Expr, trace: &mut Vec<&'static str>) -> String {
        match expr {
            Expr::ClassExpr { type_name } => type_phrase(type_name),
            other => self.value(other, trace),
        }
    }

    fn operands(&self, node: &MatcherNode, trace: &mut Vec<&'static str>) -> Vec<String> {
        node.nested.iter().chain(node.chained.as_deref()).map(|n| self.phrase(n, trace)).collect()
    }

    fn phrase(&self, node: &MatcherNode, trace: &mut Vec<&'static str>) -> String {
        use MatcherKind as K;
        trace.push(node.kind.rule_id());
        match (node.kind, node.signature.overload) {
            (K::AllOf | K::Both, _) => self.operands(node, trace).join(" and "),
            (K::AnyOf | K::Either, _) => self.operands(node, trace).join(" or "),
            (K::EveryItem, _) => format!("every item {}", self.phrase(&node.nested[0], trace)),
            (K::Is, Overload::Matcher) => self.phrase(&node.nested[0], trace),
            (K::Is, Overload::Class) | (K::IsA | K::InstanceOf, _) => {
                format!("is an instance of {}", self.type_value(&node.values[0], trace))
            }
            (K::Is, _) => format!("is {}", self.value(&node.values[0], trace)),
            (K::Anything, _) => "is anything".into(),
            (K::EqualTo, _) => format!("is equal to {}", self.value(&node.values[0], trace)),
            (K::Not, Overload::Matcher) => self.negate(&node.nested[0], trace),
            (K::Not, _) => format!("is not {}", self.value(&node.values[0], trace)),
            (K::NullValue, _) => "is null".into(),
            (K::NotNullValue, _) => "is not null".into(),
            (K::SameInstance, _) => format!("is the same instance as {}", self.value(&node.values[0], trace)),
            (K::StartsWith, _) => format!("starts with {}", self.value(&node.values[0], trace)),
            (K::EndsWith, _) => format!("ends with {}", self.value(&node.values[0], trace)),
            (K::ContainsString, _) => format!("contains string {}", self.value(&node.values[0], trace)),
            (K::HasItem, Overload::Matcher) => format!("has an item that {}", self.phrase(&node.nested[0], trace)),
            (K::HasItem, _) => format!("has an item that is {}", self.value(&node.values[0], trace)),
            (K::HasItems, Overload::Matchers) => {
                format!("has items that {}", self.operands(node, trace).join(" and "))
            }
            (K::HasItems, _) => {
                let values: Vec<String> = node.values.iter().map(|v| self.value(v, trace)).collect();
                format!("has items that are {}", values.join(" and "))
            }
        }
    }

    fn negate(&self, inner: &MatcherNode, trace: &mut Vec<&'static str>) -> String {
        let text = self.phrase(inner, trace);
        if inner.effective().is_compound() {
            return format!("is not such that it {text}");
        }
        const VERBS: &[(&str, &str)] = &[
            ("is not ", "is "),
            ("is ", "is not "),
            ("starts with ", "does not start with "),
            ("ends with ", "does not end with "),
            ("contains string ", "does not contain string "),
            ("has ", "does not have "),
        ];
        for (prefix, negated) in VERBS {
            if let Some(rest) = text.strip_prefix(prefix) {
                return format!("{negated}{rest}");
            }
        }
        format!("is not such that it {text}")
    }
}
