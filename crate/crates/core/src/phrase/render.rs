//! Expression-to-English rendering.
//!
//! Each expression kind has one template, applied recursively. Names are
//! replaced by (or combined with) their declared type when the type reads
//! better, and method calls are read according to the shape of the method
//! name (see [`MethodNameCase`]).

use serde::Serialize;

use super::camel::{split_camel_case, split_phrase};
use super::lexicon::{is_adjective, is_auxiliary, is_singular_noun, VerbLexicon};
use super::readability::readability_pass;
use crate::java::ast::{Expr, VarDeclarator};
use crate::java::lexer::unescape_literal;
use crate::java::parser::qualified_name;
use crate::java::symbols::{base_type_name, SymbolTable};

/// An English fragment and the rules that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Phrase {
    pub text: String,
    /// Rule that produced the outermost fragment.
    pub rule: &'static str,
    /// Every rule fired while rendering, outermost first.
    pub trace: Vec<&'static str>,
}

impl Phrase {
    pub fn new(text: impl Into<String>, rule: &'static str) -> Self {
        Phrase { text: text.into(), rule, trace: vec![rule] }
    }

    pub(crate) fn finish(raw: String, trace: Vec<&'static str>) -> Self {
        let text = readability_pass(&raw.to_lowercase());
        Phrase { text, rule: trace.first().copied().unwrap_or("empty"), trace }
    }
}

/// How a method name is read; see [`classify_method_name`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MethodNameCase {
    /// 1: `getUserToken` -- a getter with more than one word.
    Getter,
    /// 2: a single verb, or a single word repeated in the caller.
    SingleVerb,
    /// 3: `toString`.
    ToString,
    /// 4: `publishArticle()` with no caller.
    VerbNoun,
    /// 5: `editor.publishArticle()`.
    VerbNounByCaller,
    /// 6: `publishNewArticle()` with no caller.
    VerbAdjectiveNoun,
    /// 7: `editor.publishNewArticle()`.
    VerbAdjectiveNounByCaller,
    /// 8: `article.isSentToEditor()`.
    IsVerb,
    /// 9: shapes 5, 7 or 8 with a caller phrase starting with "with".
    WithCaller,
    Other,
}

impl MethodNameCase {
    pub fn number(self) -> Option<u8> {
        Some(match self {
            MethodNameCase::Getter => 1,
            MethodNameCase::SingleVerb => 2,
            MethodNameCase::ToString => 3,
            MethodNameCase::VerbNoun => 4,
            MethodNameCase::VerbNounByCaller => 5,
            MethodNameCase::VerbAdjectiveNoun => 6,
            MethodNameCase::VerbAdjectiveNounByCaller => 7,
            MethodNameCase::IsVerb => 8,
            MethodNameCase::WithCaller => 9,
            MethodNameCase::Other => return None,
        })
    }

    pub fn rule_id(self) -> &'static str {
        match self {
            MethodNameCase::Getter => "method.case1.getter",
            MethodNameCase::SingleVerb => "method.case2.single_verb",
            MethodNameCase::ToString => "method.case3.to_string",
            MethodNameCase::VerbNoun => "method.case4.verb_noun",
            MethodNameCase::VerbNounByCaller => "method.case5.verb_noun_by_caller",
            MethodNameCase::VerbAdjectiveNoun => "method.case6.verb_adjective_noun",
            MethodNameCase::VerbAdjectiveNounByCaller => "method.case7.verb_adjective_noun_by_caller",
            MethodNameCase::IsVerb => "method.case8.is_verb",
            MethodNameCase::WithCaller => "method.case9.with_caller",
            MethodNameCase::Other => "method.other",
        }
    }
}

/// `VERB [ADJECTIVE] NOUN rest...` split out of a method name.
#[derive(Debug, Clone, PartialEq, Eq)]
struct PassiveShape<'w> {
    verb_lemma: String,
    adjective: Option<&'w str>,
    noun: &'w str,
    rest: &'w [String],
}

fn passive_shape<'w>(words: &'w [String], lexicon: &VerbLexicon) -> Option<PassiveShape<'w>> {
    let first = words.first()?;
    if first == "is" || first == "get" {
        return None;
    }
    let lemma = lexicon.verb_lemma(first)?;
    if is_auxiliary(&lemma) || is_auxiliary(first) {
        return None;
    }
    if words.len() >= 2 && is_singular_noun(&words[1]) {
        return Some(PassiveShape { verb_lemma: lemma, adjective: None, noun: &words[1], rest: &words[2..] });
    }
    if words.len() >= 3 && is_adjective(&words[1]) && is_singular_noun(&words[2]) {
        return Some(PassiveShape {
            verb_lemma: lemma,
            adjective: Some(&words[1]),
            noun: &words[2],
            rest: &words[3..],
        });
    }
    None
}

fn is_verb_shape(words: &[String], lexicon: &VerbLexicon) -> bool {
    words.len() >= 2 && words[0] == "is" && (lexicon.is_past_form(&words[1]) || lexicon.is_verb(&words[1]))
}

/// Classifies a camel-case-split method name. `caller` is the rendered
/// phrase of the receiver, if any. The first matching case wins.
pub fn classify_method_name(words: &[String], caller: Option<&str>, lexicon: &VerbLexicon) -> MethodNameCase {
    let Some(first) = words.first() else {
        return MethodNameCase::Other;
    };
    if first == "get" && words.len() > 1 {
        return MethodNameCase::Getter;
    }
    if words.len() == 1 {
        let in_caller = caller.is_some_and(|c| c.split_whitespace().any(|w| w == first));
        if lexicon.is_verb(first) || in_caller {
            return MethodNameCase::SingleVerb;
        }
    }
    if words.len() == 2 && words[0] == "to" && words[1] == "string" {
        return MethodNameCase::ToString;
    }
    let with_caller = caller.is_some_and(|c| c.split_whitespace().next() == Some("with"));
    if let Some(shape) = passive_shape(words, lexicon) {
        return match (shape.adjective.is_some(), caller.is_some(), with_caller) {
            (_, true, true) => MethodNameCase::WithCaller,
            (false, false, _) => MethodNameCase::VerbNoun,
            (false, true, _) => MethodNameCase::VerbNounByCaller,
            (true, false, _) => MethodNameCase::VerbAdjectiveNoun,
            (true, true, _) => MethodNameCase::VerbAdjectiveNounByCaller,
        };
    }
    if is_verb_shape(words, lexicon) {
        return if with_caller { MethodNameCase::WithCaller } else { MethodNameCase::IsVerb };
    }
    MethodNameCase::Other
}

const NUMERIC_PRIMITIVES: &[&str] = &["byte", "short", "int", "long", "float", "double"];

/// Words for a type: generics dropped, package dropped, one `array` per
/// dimension.
pub fn type_phrase(type_name: &str) -> String {
    let dims = type_name.matches("[]").count();
    let mut words = split_phrase(base_type_name(type_name));
    for _ in 0..dims {
        words.push_str(" array");
    }
    words
}

pub fn binary_operator_phrase(op: &str) -> &'static str {
    match op {
        "+" => "plus",
        "-" => "minus",
        "*" => "times",
        "/" => "divided by",
        "%" => "modulo",
        "==" => "equals",
        "!=" => "does not equal",
        "<" => "is less than",
        ">" => "is greater than",
        "<=" => "is less than or equal to",
        ">=" => "is greater than or equal to",
        "&&" => "and",
        "||" => "or",
        "&" => "bitwise and",
        "|" => "bitwise or",
        "^" => "xor",
        "<<" => "shifted left by",
        ">>" => "shifted right by",
        ">>>" => "unsigned shifted right by",
        _ => "operator",
    }
}

pub fn assign_operator_phrase(op: &str) -> &'static str {
    match op {
        "=" => "equals",
        "+=" => "is increased by",
        "-=" => "is decreased by",
        "*=" => "is multiplied by",
        "/=" => "is divided by",
        "%=" => "is reduced modulo",
        "&=" => "is bitwise anded with",
        "|=" => "is bitwise ored with",
        "^=" => "is xored with",
        "<<=" => "is shifted left by",
        ">>=" => "is shifted right by",
        ">>>=" => "is unsigned shifted right by",
        _ => "is assigned",
    }
}

fn numeric_text(text: &str, suffixes: &[char]) -> String {
    let is_hex = text.starts_with("0x") || text.starts_with("0X");
    let trimmed = if is_hex && !suffixes.contains(&'l') { text } else { text.trim_end_matches(suffixes) };
    trimmed.replace('_', "")
}

fn char_phrase(lexeme: &str) -> String {
    let value = unescape_literal(lexeme);
    let mut chars = value.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => match c {
            ' ' => "space".into(),
            '\n' => "newline".into(),
            '\t' => "tab".into(),
            '\r' => "carriage return".into(),
            '\0' => "null character".into(),
            '.' => "period".into(),
            '_' => "underscore".into(),
            c => c.to_string(),
        },
        _ => value,
    }
}

/// Quoted, lowercased string literal used in matcher positions.
pub fn quoted_literal(value: &str) -> String {
    format!("\"{}\"", value.to_lowercase())
}

/// Renders expressions against one file's symbols.
#[derive(Debug, Clone, Copy)]
pub struct Renderer<'a> {
    symbols: &'a SymbolTable,
    lexicon: &'a VerbLexicon,
    /// Source offset of the statement being rendered, for scoped lookups.
    offset: usize,
}

impl<'a> Renderer<'a> {
    pub fn new(symbols: &'a SymbolTable, lexicon: &'a VerbLexicon) -> Self {
        Renderer { symbols, lexicon, offset: usize::MAX }
    }

    pub fn at_offset(mut self, offset: usize) -> Self {
        self.offset = offset;
        self
    }

    pub fn symbols(&self) -> &'a SymbolTable {
        self.symbols
    }

    pub fn lexicon(&self) -> &'a VerbLexicon {
        self.lexicon
    }

    pub fn declared_type(&self, name: &str) -> Option<&'a str> {
        self.symbols.type_at(name, self.offset)
    }

    /// Renders `expr`, with string literals read as the word "string".
    pub fn render(&self, expr: &Expr) -> Phrase {
        let mut trace = Vec::new();
        let raw = self.phrase(expr, &mut trace);
        Phrase::finish(raw, trace)
    }

    /// Like [`Renderer::render`], but a top-level string literal is kept as
    /// a quoted lowercase literal.
    pub fn render_quoted(&self, expr: &Expr) -> Phrase {
        match expr.string_value() {
            Some(value) => Phrase::finish(quoted_literal(&value), vec!["string.quoted"]),
            None => self.render(expr),
        }
    }

    fn phrase(&self, expr: &Expr, trace: &mut Vec<&'static str>) -> String {
        match expr {
            Expr::ArrayAccess { name, index } => {
                trace.push("array_access");
                let index = self.phrase(index, trace);
                let name = self.phrase(name, trace);
                format!("index {index} of {name}")
            }
            Expr::ArrayCreation { elem_type, dims, initializer } => {
                trace.push("array_creation");
                let mut text = format!("new {}", type_phrase(elem_type));
                for _ in 0..dims.len().max(1) {
                    text.push_str(" array");
                }
                text.push_str(" is created");
                if let Some(init) = initializer {
                    text.push(' ');
                    text.push_str(&self.phrase(init, trace));
                }
                text
            }
            Expr::ArrayInitializer { values } => {
                trace.push("array_initializer");
                format!("initialized with {}", self.join(values, trace))
            }
            Expr::Assign { target, op, value } => {
                trace.push("assign");
                let target = self.phrase(target, trace);
                let value = self.phrase(value, trace);
                format!("{target} {} {value}", assign_operator_phrase(op))
            }
            Expr::Binary { left, op, right } => {
                trace.push("binary");
                let left = self.phrase(left, trace);
                let right = self.phrase(right, trace);
                format!("{left} {} {right}", binary_operator_phrase(op))
            }
            Expr::BooleanLiteral { value } => {
                trace.push("boolean_literal");
                value.to_string()
            }
            Expr::Cast { type_name, inner } => {
                trace.push("cast");
                let inner = self.phrase(inner, trace);
                format!("{inner} as {}", type_phrase(type_name))
            }
            Expr::CharLiteral { text } => {
                trace.push("char_literal");
                char_phrase(text)
            }
            Expr::ClassExpr { type_name } => {
                trace.push("class_expr");
                format!("{} class", type_phrase(type_name))
            }
            Expr::Conditional { cond, then, otherwise } => {
                trace.push("conditional");
                let cond = self.phrase(cond, trace);
                let then = self.phrase(then, trace);
                let otherwise = self.phrase(otherwise, trace);
                format!("{then} if {cond} otherwise {otherwise}")
            }
            Expr::DoubleLiteral { text } => {
                trace.push("double_literal");
                numeric_text(text, &['d', 'D', 'f', 'F'])
            }
            Expr::Enclosed { inner: Some(inner) } => {
                trace.push("enclosed");
                self.phrase(inner, trace)
            }
            Expr::Enclosed { inner: None } => {
                trace.push("enclosed.empty");
                "()".into()
            }
            Expr::FieldAccess { scope, field } => {
                trace.push("field_access");
                let scope = self.phrase(scope, trace);
                format!("{} of {scope}", split_phrase(field))
            }
            Expr::InstanceOf { expr, type_name } => {
                trace.push("instance_of");
                let subject = self.phrase(expr, trace);
                format!("{subject} is class {}", type_phrase(type_name))
            }
            Expr::IntegerLiteral { text } => {
                trace.push("integer_literal");
                numeric_text(text, &[])
            }
            Expr::Lambda { params, body, .. } => {
                trace.push("lambda");
                let names: Vec<String> = params.iter().map(|p| split_phrase(&p.name)).collect();
                let body = self.phrase(body, trace);
                match names.len() {
                    0 => format!("nothing becomes {body}"),
                    1 => format!("{} becomes {body}", names[0]),
                    _ => format!("{} become {body}", names.join(" and ")),
                }
            }
            Expr::LongLiteral { text } => {
                trace.push("long_literal");
                numeric_text(text, &['l', 'L'])
            }
            Expr::MethodCall { scope, name, args } => self.method_call(scope.as_deref(), name, args, trace),
            Expr::MethodReference { scope, identifier } => {
                trace.push("method_reference");
                let scope = match (qualified_name(scope), &**scope) {
                    (Some(dotted), _) => split_phrase(&dotted),
                    (None, Expr::TypeExpr { type_name }) => type_phrase(type_name),
                    (None, other) => self.phrase(other, trace),
                };
                if identifier == "new" {
                    format!("new {scope} is created")
                } else {
                    format!("{scope} {}", split_phrase(identifier))
                }
            }
            Expr::Name { identifier } => self.name(identifier, trace),
            Expr::NullLiteral => {
                trace.push("null_literal");
                "null".into()
            }
            Expr::ObjectCreation { type_name, args } => {
                trace.push("object_creation");
                let ty = type_phrase(type_name);
                if args.is_empty() {
                    format!("new {ty}")
                } else {
                    format!("new {ty} with {}", self.join(args, trace))
                }
            }
            Expr::StringLiteral { .. } => {
                trace.push("string_literal");
                "string".into()
            }
            Expr::SuperExpr { class_scope } => {
                trace.push("super");
                match class_scope {
                    Some(class) => format!("super of {}", split_phrase(class)),
                    None => "super".into(),
                }
            }
            Expr::ThisExpr { class_scope } => {
                trace.push("this");
                match class_scope {
                    Some(class) => format!("{} this", split_phrase(class)),
                    None => "this".into(),
                }
            }
            Expr::TypeExpr { type_name } => {
                trace.push("type_expr");
                if type_name.contains("boolean") {
                    String::new()
                } else {
                    format!("type {}", type_phrase(type_name))
                }
            }
            Expr::Unary { op, operand, prefix } => {
                trace.push("unary");
                let inner = self.phrase(operand, trace);
                match (op.as_str(), prefix) {
                    ("++", _) => format!("{inner} plus 1"),
                    ("--", _) => format!("{inner} minus 1"),
                    ("-", true) if operand.is_numeric_literal() => format!("-{inner}"),
                    ("-", true) => format!("negative {inner}"),
                    ("+", true) => format!("positive {inner}"),
                    ("!", true) => format!("not {inner}"),
                    ("~", true) => format!("bitwise complement of {inner}"),
                    _ => inner,
                }
            }
            Expr::VariableDeclaration { vars } => {
                trace.push("variable_declaration");
                let parts: Vec<String> = vars.iter().map(|v| self.declarator(v, trace)).collect();
                parts.join(" and ")
            }
        }
    }

    fn join(&self, exprs: &[Expr], trace: &mut Vec<&'static str>) -> String {
        exprs.iter().map(|e| self.phrase(e, trace)).collect::<Vec<_>>().join(" and ")
    }

    fn declarator(&self, var: &VarDeclarator, trace: &mut Vec<&'static str>) -> String {
        let ty = type_phrase(&var.type_name);
        let name = split_phrase(&var.name);
        match &var.init {
            Some(init) => format!("{ty} equals {}", self.phrase(init, trace)),
            None if ty == name => ty,
            None => format!("{ty} {name}"),
        }
    }

    fn name(&self, identifier: &str, trace: &mut Vec<&'static str>) -> String {
        let name_words = split_camel_case(identifier);
        let name_phrase = name_words.join(" ");
        let Some(declared) = self.declared_type(identifier) else {
            trace.push("name.untyped");
            return name_phrase;
        };
        let type_text = type_phrase(declared);
        let type_words: Vec<&str> = type_text.split(' ').collect();
        if type_text == "boolean" {
            trace.push("name.boolean");
            return name_phrase;
        }
        if NUMERIC_PRIMITIVES.contains(&type_text.as_str()) {
            trace.push("name.numeric");
            return format!("{type_text} {name_phrase}");
        }
        let contains_type = name_words.len() > type_words.len()
            && name_words.windows(type_words.len()).any(|w| w.iter().zip(&type_words).all(|(a, b)| a == b));
        if contains_type {
            trace.push("name.descriptive");
            return name_phrase;
        }
        trace.push("name.type");
        type_text
    }

    fn method_call(&self, scope: Option<&Expr>, name: &str, args: &[Expr], trace: &mut Vec<&'static str>) -> String {
        let slot = trace.len();
        trace.push("method.other");
        let words = split_camel_case(name);
        let caller = scope.map(|s| self.phrase(s, trace));
        let case = classify_method_name(&words, caller.as_deref(), self.lexicon);
        trace[slot] = case.rule_id();
        let with_caller = |text: String| match &caller {
            Some(c) => format!("{c} {text}"),
            None => text,
        };
        match case {
            MethodNameCase::Getter => {
                let rest = words[1..].join(" ");
                match &caller {
                    Some(c) => format!("{c} {rest}"),
                    None => format!("get {rest}"),
                }
            }
            MethodNameCase::SingleVerb => {
                let params: Vec<String> = args
                    .iter()
                    .map(|a| {
                        let p = self.phrase(a, trace);
                        if a.is_method_call() {
                            format!("({p})")
                        } else {
                            p
                        }
                    })
                    .collect();
                let mut text = words[0].clone();
                if !params.is_empty() {
                    text.push(' ');
                    text.push_str(&params.join(" and "));
                }
                with_caller(text)
            }
            MethodNameCase::ToString => {
                format!("{} as a string", caller.as_deref().unwrap_or("this"))
            }
            MethodNameCase::VerbNoun
            | MethodNameCase::VerbNounByCaller
            | MethodNameCase::VerbAdjectiveNoun
            | MethodNameCase::VerbAdjectiveNounByCaller
            | MethodNameCase::WithCaller
                if passive_shape(&words, self.lexicon).is_some() =>
            {
                let shape = passive_shape(&words, self.lexicon).expect("checked above");
                let mut text = match shape.adjective {
                    Some(adj) => format!("{adj} {} is {}", shape.noun, self.lexicon.past_tense(&shape.verb_lemma)),
                    None => format!("{} is {}", shape.noun, self.lexicon.past_tense(&shape.verb_lemma)),
                };
                for word in shape.rest {
                    text.push(' ');
                    text.push_str(word);
                }
                match (&caller, case) {
                    (Some(c), MethodNameCase::WithCaller) => format!("{text} {c}"),
                    (Some(c), _) => format!("{text} by {c}"),
                    (None, _) => text,
                }
            }
            MethodNameCase::IsVerb | MethodNameCase::WithCaller => with_caller(format!("is {}", words[1..].join(" "))),
            _ => with_caller(words.join(" ")),
        }
    }
}

/// Renders `expr` with the built-in lexicon.
pub fn render_expr(expr: &Expr, symbols: &SymbolTable) -> Phrase {
    Renderer::new(symbols, VerbLexicon::builtin()).render(expr)
}
