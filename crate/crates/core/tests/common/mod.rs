#![allow(dead_code)]

use assertconvert::java::{scan_assertions, ASSERTION_NAMES};
use assertconvert::MatcherKind;
use proptest::prelude::*;
use proptest::sample::select;

pub const CORPUS: &str = include_str!("../data/InvoiceTest.java");
pub const CORPUS_GOLDEN: &str = include_str!("../data/InvoiceTest.golden");

/// `(statement, sentence)` pairs of the frozen coverage snapshot.
pub fn corpus_golden() -> Vec<(&'static str, &'static str)> {
    CORPUS_GOLDEN.lines().map(|l| l.split_once('\t').expect("golden line has a tab")).collect()
}

// ---- brute-force assertion scanner ----

fn is_ident(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_' || c == b'$'
}

/// Blanks out comments, string, char and text-block literals, keeping
/// byte offsets and newlines.
pub fn mask(source: &str) -> Vec<u8> {
    let b = source.as_bytes();
    let mut out = b.to_vec();
    let mut i = 0;
    let blank = |out: &mut Vec<u8>, from: usize, to: usize| {
        for c in &mut out[from..to.min(b.len())] {
            if *c != b'\n' {
                *c = b' ';
            }
        }
    };
    while i < b.len() {
        let rest = &b[i..];
        let end = if rest.starts_with(b"//") {
            rest.iter().position(|&c| c == b'\n').map_or(b.len(), |p| i + p)
        } else if rest.starts_with(b"/*") {
            source[i + 2..].find("*/").map_or(b.len(), |p| i + 2 + p + 2)
        } else if rest.starts_with(b"\"\"\"") {
            source[i + 3..].find("\"\"\"").map_or(b.len(), |p| i + 3 + p + 3)
        } else if rest[0] == b'"' || rest[0] == b'\'' {
            let quote = rest[0];
            let mut j = i + 1;
            while j < b.len() && b[j] != quote && b[j] != b'\n' {
                j += if b[j] == b'\\' { 2 } else { 1 };
            }
            j + 1
        } else {
            i += 1;
            continue;
        };
        blank(&mut out, i, end);
        i = end;
    }
    out
}

/// Offsets of assertion method names that are followed by `(` outside
/// comments and literals.
pub fn scan_oracle(source: &str) -> Vec<usize> {
    let m = mask(source);
    let mut hits = Vec::new();
    for name in ASSERTION_NAMES {
        let n = name.as_bytes();
        for start in 0..m.len().saturating_sub(n.len() - 1) {
            if &m[start..start + n.len()] != n {
                continue;
            }
            if start > 0 && is_ident(m[start - 1]) {
                continue;
            }
            let mut j = start + n.len();
            if j < m.len() && is_ident(m[j]) {
                continue;
            }
            while j < m.len() && m[j].is_ascii_whitespace() {
                j += 1;
            }
            if j < m.len() && m[j] == b'(' {
                hits.push(start);
            }
        }
    }
    hits.sort();
    hits
}

/// Offsets of the method names in `scan_assertions` results.
pub fn scan_positions(source: &str) -> Vec<usize> {
    scan_assertions(source)
        .iter()
        .map(|s| {
            let head = s.text[..s.text.find('(').unwrap()].trim_end();
            let name_len = head.bytes().rev().take_while(|&c| is_ident(c)).count();
            s.span.start + head.len() - name_len
        })
        .collect()
}

fn scan_arg() -> impl Strategy<Value = String> {
    prop_oneof![
        select(vec!["x", "myNum", "a.b", "list.size()", "42", "'('", "')'", "'\"'", "null"]).prop_map(String::from),
        select(vec!["\"assertTrue(x)\"", "\"a\\\"b\"", "\")\"", "\"/* no */\"", "\"// no\""]).prop_map(String::from),
        select(vec!["f(g(1), 2)", "new int[] {1, 2}", "(a + b)", "is(equalTo(3))"]).prop_map(String::from),
    ]
}

fn scan_snippet() -> impl Strategy<Value = String> {
    let assertion = (
        select(vec!["", "Assert.", "Assertions.", "org.junit.Assert."]),
        select(ASSERTION_NAMES.to_vec()),
        select(vec!["", " ", "\n    "]),
        prop::collection::vec(scan_arg(), 1..4),
    )
        .prop_map(|(q, name, gap, args)| format!("{q}{name}{gap}({});", args.join(", ")));
    prop_oneof![
        4 => assertion,
        1 => select(ASSERTION_NAMES.to_vec()).prop_map(|n| format!("// {n}(x);")),
        1 => select(ASSERTION_NAMES.to_vec()).prop_map(|n| format!("/* {n}(x);\n  still comment */")),
        1 => select(ASSERTION_NAMES.to_vec()).prop_map(|n| format!("String s = \"{n}(a, b);\";")),
        1 => select(ASSERTION_NAMES.to_vec()).prop_map(|n| format!("String t = \"\"\"\n    {n}(x);\n    \"\"\";")),
        1 => select(ASSERTION_NAMES.to_vec()).prop_map(|n| format!("my{n}(x); {n}ish(y); helper.{n}Like(z);")),
        1 => Just("char c = '\\''; char d = '(';".to_string()),
        1 => Just("int total = compute(1, 2);".to_string()),
    ]
}

/// Small Java files mixing real assertions with look-alikes in comments,
/// literals and other identifiers.
pub fn java_file() -> impl Strategy<Value = String> {
    prop::collection::vec(scan_snippet(), 0..12).prop_map(|snippets| {
        let body: Vec<String> = snippets.iter().map(|s| format!("        {s}")).collect();
        format!("class GeneratedTest {{\n    @Test\n    void t() {{\n{}\n    }}\n}}\n", body.join("\n"))
    })
}

// ---- expression generators ----

const WORDS: &[&str] =
    &["my", "num", "user", "token", "count", "value", "list", "article", "editor", "result", "size", "name"];

fn camel(words: Vec<&str>, upper_first: bool) -> String {
    words
        .iter()
        .enumerate()
        .map(|(i, w)| {
            if i > 0 || upper_first {
                let mut c = w.chars();
                c.next().map_or(String::new(), |f| f.to_ascii_uppercase().to_string() + c.as_str())
            } else {
                w.to_string()
            }
        })
        .collect()
}

pub fn identifier() -> impl Strategy<Value = String> {
    prop::collection::vec(select(WORDS.to_vec()), 1..4).prop_map(|w| camel(w, false))
}

pub fn literal() -> impl Strategy<Value = String> {
    prop_oneof![
        (0i64..100_000).prop_map(|n| n.to_string()),
        (0i64..100_000).prop_map(|n| format!("{n}L")),
        (0u32..1000, 1u32..100).prop_map(|(a, b)| format!("{a}.{b}")),
        "[a-zA-Z ]{0,12}".prop_map(|s| format!("\"{s}\"")),
        any::<bool>().prop_map(|b| b.to_string()),
        "[a-z]".prop_map(|c| format!("'{c}'")),
        Just("null".to_string()),
        (1i64..1000).prop_map(|n| format!("-{n}")),
    ]
}

pub fn method_call() -> impl Strategy<Value = String> {
    let name_words = prop::collection::vec(
        select(vec![
            "get", "is", "publish", "compute", "to", "string", "user", "token", "new", "article", "size", "sent",
        ]),
        1..4,
    )
    .prop_filter("keyword method name", |w| w.as_slice() != ["new"]);
    let arg = prop_oneof![identifier(), (0u32..100).prop_map(|n| n.to_string())];
    (prop::option::of(prop::collection::vec(identifier(), 1..3)), name_words, prop::collection::vec(arg, 0..3))
        .prop_filter("unqualified matcher factory name", |(receiver, name, _)| {
            receiver.is_some() || MatcherKind::from_name(&camel(name.clone(), false)).is_none()
        })
        .prop_map(|(receiver, name, args)| {
            let scope = receiver.map_or(String::new(), |r| format!("{}.", r.join(".")));
            format!("{scope}{}({})", camel(name, false), args.join(", "))
        })
}

/// Words that never occur in identifiers, literals or templates.
pub const MESSAGE_WORDS: &[&str] = &["zephyr", "quokka", "xylem", "fjord", "glyph", "sphinx", "jinx", "vortex"];

pub fn message() -> impl Strategy<Value = Vec<&'static str>> {
    prop::collection::vec(select(MESSAGE_WORDS.to_vec()), 1..5)
}

/// Assertions that carry a message (or reason) argument.
pub fn assertion_with_message() -> impl Strategy<Value = (String, Vec<&'static str>)> {
    let value = prop_oneof![identifier(), method_call()];
    (message(), select(vec![0u8, 1, 2, 3, 4, 5]), value.clone(), value, (1u32..100)).prop_map(
        |(words, form, a, b, d)| {
            let m = format!("\"{}\"", words.join(" "));
            let stmt = match form {
                0 => format!("assertTrue({m}, {a});"),
                1 => format!("assertNotNull({m}, {a});"),
                2 => format!("assertEquals({m}, {a}, {b});"),
                3 => format!("assertNotSame({m}, {a}, {b});"),
                4 => format!("assertThat({m}, {a}, is({b}));"),
                _ => format!("assertEquals({m}, {a}, {b}, 0.{d});"),
            };
            (stmt, words)
        },
    )
}

pub fn phrase_text() -> impl Strategy<Value = String> {
    prop_oneof![
        "[a-zA-Z0-9_. ]{0,40}",
        prop::collection::vec(select(vec!["string", "a", "b", "x y", "1.5", "my_var"]), 1..9)
            .prop_map(|t| t.join(" plus ")),
        "[a-z .]{0,10}( plus [a-z]{1,3}){0,6}",
    ]
}

pub fn java_identifier() -> impl Strategy<Value = String> {
    "[A-Za-z_$][A-Za-z0-9_$]{0,20}"
}
