mod common;

use assertconvert::java::{parse_expression_str, scan_assertions, tokenize};
use assertconvert::phrase::{readability_pass, split_camel_case};
use assertconvert::{convert_source, Status};
use common::*;
use proptest::prelude::*;

fn sentence(stmt: &str) -> (Status, String) {
    let out = convert_source(stmt, None);
    assert_eq!(out.len(), 1, "{stmt}");
    (out[0].status, out[0].sentence.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn constant_and_call_swap(lit in literal(), call in method_call()) {
        let forward = sentence(&format!("assertEquals({lit}, {call});"));
        let swapped = sentence(&format!("assertEquals({call}, {lit});"));
        prop_assert_eq!(forward.0, Status::Converted);
        prop_assert_eq!(forward, swapped);
    }

    #[test]
    fn message_never_reaches_output((stmt, words) in assertion_with_message()) {
        let (status, text) = sentence(&stmt);
        prop_assert_eq!(status, Status::Converted, "{}", stmt);
        for w in words {
            prop_assert!(!text.contains(w), "{} -> {}", stmt, text);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn readability_is_idempotent(s in phrase_text()) {
        let once = readability_pass(&s);
        prop_assert_eq!(readability_pass(&once), once.clone());
        prop_assert!(!once.contains('_'));
        prop_assert!(!once.contains("  "));
    }

    #[test]
    fn camel_split_concatenates(id in java_identifier()) {
        let words = split_camel_case(&id);
        let expected: String = id.chars().filter(char::is_ascii_alphanumeric).collect::<String>().to_lowercase();
        prop_assert_eq!(words.concat(), expected);
        for w in &words {
            prop_assert!(!w.is_empty());
            prop_assert_eq!(w.to_lowercase(), w.clone());
        }
    }
}

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

#[test]
fn corpus_round_trips() {
    for scanned in scan_assertions(CORPUS) {
        let stmt = scanned.text.trim_end_matches(';');
        let expr = parse_expression_str(stmt).unwrap();
        assert_eq!(squash(&expr.to_string()), squash(stmt));
    }
}

#[test]
fn corpus_sentences_have_no_camel_case() {
    for c in convert_source(CORPUS, None) {
        let s = &c.sentence;
        assert!(!s.is_empty());
        assert!(!s.as_bytes().windows(2).any(|w| w[0].is_ascii_lowercase() && w[1].is_ascii_uppercase()), "{s}");
        assert!(!s.contains('_'));
    }
}

#[test]
fn tokens_reproduce_source() {
    for scanned in scan_assertions(CORPUS) {
        let tokens = tokenize(&scanned.text).unwrap();
        for pair in tokens.windows(2) {
            let gap = &scanned.text[pair[0].span.end..pair[1].span.start];
            assert!(gap.chars().all(char::is_whitespace));
        }
        for t in &tokens {
            assert_eq!(t.text, &scanned.text[t.span.start..t.span.end]);
            assert!(t.span.start < t.span.end);
        }
    }
}
