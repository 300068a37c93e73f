//! Source file in, converted assertions out.

use std::path::Path;

use crate::compose::{compose, ConvertedAssertion, RolePhrases, Status};
use crate::extract::{classify_condition, disambiguate_expected_actual, identify_params, AssertionCall, Condition};
use crate::java::lexer::{tokenize_lenient, TokenKind};
use crate::java::scan::{scan_assertions, ScannedAssertion, ASSERTION_NAMES};
use crate::java::symbols::{build_symbol_table_for_file, SymbolTable};
use crate::matcher::{parse_matcher, MatcherKind, MatcherRenderer};
use crate::phrase::lexicon::VerbLexicon;
use crate::phrase::render::Renderer;

/// 1-based line number of byte `offset` in `source`.
pub fn line_of(source: &str, offset: usize) -> usize {
    source.as_bytes()[..offset.min(source.len())].iter().filter(|&&b| b == b'\n').count() + 1
}

/// Best-effort condition of a statement that failed to parse.
fn condition_of(text: &str) -> Option<Condition> {
    tokenize_lenient(text)
        .iter()
        .find(|t| t.kind == TokenKind::Identifier && ASSERTION_NAMES.contains(&t.text.as_str()))
        .and_then(|t| classify_condition(&t.text).ok())
}

#[derive(Debug, Clone, Copy)]
pub struct Converter<'l> {
    lexicon: &'l VerbLexicon,
}

impl Default for Converter<'static> {
    fn default() -> Self {
        Converter { lexicon: VerbLexicon::builtin() }
    }
}

impl<'l> Converter<'l> {
    pub fn new(lexicon: &'l VerbLexicon) -> Self {
        Converter { lexicon }
    }

    /// Converts every assertion in `source`. `path` only feeds the
    /// class-under-test guess.
    pub fn convert_source(&self, source: &str, path: Option<&Path>) -> Vec<ConvertedAssertion> {
        let symbols = build_symbol_table_for_file(source, path);
        scan_assertions(source)
            .iter()
            .map(|s| self.convert_scanned(s, &symbols, line_of(source, s.span.start)))
            .collect()
    }

    pub fn convert_scanned(
        &self,
        scanned: &ScannedAssertion,
        symbols: &SymbolTable,
        line: usize,
    ) -> ConvertedAssertion {
        let mut trace = Vec::new();
        let result = self.try_convert(scanned, symbols, &mut trace);
        let (condition, sentence, status, diagnostic) = match result {
            Ok((condition, sentence)) => (Some(condition), sentence, Status::Converted, None),
            Err(reason) => (condition_of(&scanned.text), String::new(), Status::Unconvertible, Some(reason)),
        };
        ConvertedAssertion {
            span: scanned.span,
            line,
            raw_text: scanned.text.clone(),
            condition,
            sentence,
            status,
            diagnostic,
            rule_trace: trace,
        }
    }

    fn try_convert(
        &self,
        scanned: &ScannedAssertion,
        symbols: &SymbolTable,
        trace: &mut Vec<String>,
    ) -> Result<(Condition, String), String> {
        let call = AssertionCall::parse(scanned).map_err(|e| e.to_string())?;
        let condition = call.condition;
        trace.push(format!("condition.{}", condition.words().replace(' ', "_")));
        let mut params = identify_params(&call, symbols).map_err(|e| e.to_string())?;
        let offset = call.span.start;
        if params.expected.is_some() && params.actual.is_some() {
            let (expected, actual) = (params.expected.take().unwrap(), params.actual.take().unwrap());
            let (expected, actual, rule) = disambiguate_expected_actual(expected, actual, symbols, offset);
            trace.push(rule.rule_id().to_string());
            params.expected = Some(expected);
            params.actual = Some(actual);
        }
        let renderer = Renderer::new(symbols, self.lexicon).at_offset(offset);
        let mut record = |p: crate::phrase::render::Phrase| {
            trace.extend(p.trace.iter().map(|r| r.to_string()));
            p
        };
        let mut phrases = RolePhrases::default();
        if let Some(actual) = &params.actual {
            let p = if condition == Condition::That { renderer.render_quoted(actual) } else { renderer.render(actual) };
            phrases.actual = Some(record(p));
        }
        if let Some(expected) = &params.expected {
            phrases.expected = Some(record(renderer.render(expected)));
        }
        if let Some(matcher) = &params.matcher {
            let node = parse_matcher(matcher).map_err(|e| e.to_string())?;
            let matchers = MatcherRenderer::new(renderer);
            let top = node.effective();
            let p = if top.kind == MatcherKind::EveryItem {
                phrases.every_item = true;
                matchers.render(&top.nested[0])
            } else {
                matchers.render(&node)
            };
            phrases.matcher = Some(record(p));
        }
        if let Some(delta) = &params.delta {
            phrases.delta = Some(record(renderer.render(delta)));
        }
        let sentence = compose(condition, &phrases).map_err(|e| e.to_string())?;
        Ok((condition, sentence))
    }
}

/// Converts `source` with the built-in lexicon.
pub fn convert_source(source: &str, path: Option<&Path>) -> Vec<ConvertedAssertion> {
    Converter::default().convert_source(source, path)
}
