//! Per-file table of declared variable types.
//!
//! Resolution is single-file and purely syntactic: any `Type name` followed
//! by `=`, `;`, `,`, `)` or `:` counts as a declaration (locals, fields,
//! parameters, catch and for-each variables).

use std::collections::BTreeMap;
use std::path::Path;

use super::lexer::{tokenize_lenient, TokenKind};
use super::parser::parse_type_prefix;

pub const UNKNOWN_TYPE: &str = "unknown";

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolTable {
    /// name -> (byte offset of the declared name, type), in source order.
    entries: BTreeMap<String, Vec<(usize, String)>>,
    class_under_test: Option<String>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare(&mut self, name: impl Into<String>, type_name: impl Into<String>, offset: usize) {
        let decls = self.entries.entry(name.into()).or_default();
        decls.push((offset, type_name.into()));
        decls.sort_by_key(|(o, _)| *o);
    }

    pub fn with_class_under_test(mut self, class: Option<String>) -> Self {
        self.class_under_test = class;
        self
    }

    /// Declared type of `name`, or `"unknown"`.
    pub fn lookup(&self, name: &str) -> &str {
        self.type_of(name).unwrap_or(UNKNOWN_TYPE)
    }

    /// First declaration of `name` in the file.
    pub fn type_of(&self, name: &str) -> Option<&str> {
        self.entries.get(name)?.first().map(|(_, t)| t.as_str())
    }

    /// Nearest declaration at or before `offset`, falling back to the first
    /// later one (fields declared below the test method).
    pub fn type_at(&self, name: &str, offset: usize) -> Option<&str> {
        let decls = self.entries.get(name)?;
        decls.iter().rev().find(|(o, _)| *o <= offset).or_else(|| decls.first()).map(|(_, t)| t.as_str())
    }

    pub fn class_under_test(&self) -> Option<&str> {
        self.class_under_test.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

/// Builds the table for `source`, taking the test class name from the first
/// class declaration.
pub fn build_symbol_table(source: &str) -> SymbolTable {
    build_symbol_table_for_file(source, None)
}

/// Like [`build_symbol_table`], but prefers the file stem (when given) as
/// the test class name.
pub fn build_symbol_table_for_file(source: &str, file: Option<&Path>) -> SymbolTable {
    let tokens = tokenize_lenient(source);
    let mut table = SymbolTable::new();
    let mut first_class = None;
    for i in 0..tokens.len() {
        let tok = &tokens[i];
        if first_class.is_none()
            && tok.is_keyword("class")
            && !i.checked_sub(1).is_some_and(|p| tokens[p].is_punct("."))
        {
            if let Some(name) = tokens.get(i + 1).filter(|t| t.kind == TokenKind::Identifier) {
                first_class = Some(name.text.clone());
            }
        }
        let starts_type = tok.kind == TokenKind::Identifier
            || (tok.kind == TokenKind::Keyword && super::lexer::PRIMITIVE_TYPES.contains(&tok.text.as_str()));
        if !starts_type {
            continue;
        }
        if i > 0 && (tokens[i - 1].is_punct(".") || tokens[i - 1].is_op("::")) {
            continue;
        }
        let Some((type_name, width)) = parse_type_prefix(&tokens[i..]) else {
            continue;
        };
        let Some(name) = tokens.get(i + width).filter(|t| t.kind == TokenKind::Identifier) else {
            continue;
        };
        let terminated = tokens
            .get(i + width + 1)
            .is_some_and(|t| t.is_op("=") || t.is_op(":") || t.is_punct(";") || t.is_punct(",") || t.is_punct(")"));
        if terminated && type_name != "var" {
            table.declare(name.text.clone(), type_name, name.span.start);
        }
    }
    let test_class = file.and_then(|p| p.file_stem()).and_then(|s| s.to_str()).map(str::to_string).or(first_class);
    table.with_class_under_test(test_class.as_deref().and_then(class_under_test_from))
}

/// Strips a trailing `Tests`/`Test` or leading `Test` affix from a test
/// class name. `None` if no affix matched or nothing remains.
pub fn class_under_test_from(test_class: &str) -> Option<String> {
    let stripped = test_class.strip_suffix("Tests").or_else(|| test_class.strip_suffix("Test")).or_else(|| {
        test_class
            .strip_prefix("Tests")
            .or_else(|| test_class.strip_prefix("Test"))
            .filter(|rest| rest.starts_with(|c: char| c.is_uppercase()))
    })?;
    (!stripped.is_empty()).then(|| stripped.to_string())
}

/// Last segment of a qualified type with generics and array brackets removed:
/// `java.util.List<String>[]` -> `List`.
pub fn base_type_name(type_name: &str) -> &str {
    let no_generics = type_name.split('<').next().unwrap_or(type_name);
    let no_array = no_generics.split('[').next().unwrap_or(no_generics);
    no_array.rsplit('.').next().unwrap_or(no_array).trim()
}
