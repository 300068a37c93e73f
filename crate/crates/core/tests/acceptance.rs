//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test --test acceptance -- --nocapture` to see the report.

mod common;

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::fmt::Debug;
use std::time::{Duration, Instant};

use assertconvert::java::{build_symbol_table, parse_expression_str, scan_assertions};
use assertconvert::phrase::{readability_pass, split_camel_case};
use assertconvert::{
    convert_source, enumerate_signatures, identify_params, parse_matcher, render_expr, AssertionCall, Condition,
    MatcherRenderer, Renderer, Status, SymbolTable, VerbLexicon,
};
use common::*;
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

#[derive(Default)]
struct Report {
    rows: Vec<(String, bool, String)>,
}

impl Report {
    fn record(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.rows.push((name.to_string(), pass, detail.into()));
    }

    fn print(&self) {
        for (name, pass, detail) in &self.rows {
            println!("{} {name:<52} {detail}", if *pass { "PASS" } else { "FAIL" });
        }
    }
}

fn sentence(src: &str) -> String {
    convert_source(src, None).first().map(|c| c.sentence.clone()).unwrap_or_default()
}

fn phrase(decls: &str, expr: &str) -> String {
    let symbols = build_symbol_table(decls);
    render_expr(&parse_expression_str(expr).unwrap(), &symbols).text
}

fn matcher(expr: &str) -> String {
    let symbols = SymbolTable::new();
    let node = parse_matcher(&parse_expression_str(expr).unwrap()).unwrap();
    MatcherRenderer::new(Renderer::new(&symbols, VerbLexicon::builtin())).render(&node).text
}

/// Runs `check` on exactly `cases` deterministic samples and returns the
/// failing inputs.
fn sample<S>(cases: u32, strategy: S, check: impl Fn(&S::Value) -> bool) -> (u32, Vec<String>)
where
    S: Strategy,
    S::Value: Debug,
{
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let failures = RefCell::new(Vec::new());
    let seen = RefCell::new(0u32);
    runner
        .run(&strategy, |v| {
            *seen.borrow_mut() += 1;
            if !check(&v) {
                failures.borrow_mut().push(format!("{v:?}"));
            }
            Ok(())
        })
        .unwrap();
    (seen.into_inner(), failures.into_inner())
}

fn sample_row(report: &mut Report, name: &str, cases: u32, (seen, failures): (u32, Vec<String>)) {
    let detail = match failures.first() {
        None => format!("{seen}/{cases} cases"),
        Some(first) => format!("{} of {seen} failed, first: {first}", failures.len()),
    };
    report.record(name, seen == cases && failures.is_empty(), detail);
}

fn criterion_1(report: &mut Report) {
    let start = Instant::now();
    let goldens: Vec<(&str, String, &str)> = vec![
        ("assertNotNull(myNum)", sentence("assertNotNull(myNum);"), "my num is not null"),
        ("assertEquals(24, aNum)", sentence("assertEquals(24, aNum);"), "a num and 24 are equal"),
        ("assertNotSame(24, myNum)", sentence("assertNotSame(24, myNum);"), "my num is not identical to 24"),
        ("everyItem(startsWith(\"My\"))", matcher("everyItem(startsWith(\"My\"))"), "every item starts with \"my\""),
        ("everyItem(startWith(\"My\"))", matcher("everyItem(startWith(\"My\"))"), "every item starts with \"my\""),
        (
            "cause.getStatusCode()",
            phrase("HttpOperationFailedException cause = e;", "cause.getStatusCode()"),
            "http operation failed exception status code",
        ),
        ("myArray[0]", phrase("", "myArray[0]"), "index 0 of my array"),
        ("new String[]", phrase("", "new String[]"), "new string array is created"),
        ("new int[] {1,2}", phrase("", "new int[] {1,2}"), "new int array is created initialized with 1 and 2"),
        ("myInt = 5", phrase("", "myInt = 5"), "my int equals 5"),
        ("75 / 3", phrase("", "75 / 3"), "75 divided by 3"),
        ("(long) 15", phrase("", "(long) 15"), "15 as long"),
        ("'a'", phrase("", "'a'"), "a"),
        ("Object.class", phrase("", "Object.class"), "object class"),
        ("b==0?x:y", phrase("", "b==0?x:y"), "x if b equals 0 otherwise y"),
        ("23958D", phrase("", "23958D"), "23958"),
        ("(1 + 1)", phrase("", "(1 + 1)"), "1 plus 1"),
        ("user.loginPassword", phrase("", "user.loginPassword"), "login password of user"),
        (
            "auth instanceof AuthenticationManager",
            phrase("", "auth instanceof AuthenticationManager"),
            "auth is class authentication manager",
        ),
        ("2", phrase("", "2"), "2"),
        ("(a, b) -> a+b", phrase("", "(a, b) -> a+b"), "a and b become a plus b"),
        ("99999999L", phrase("", "99999999L"), "99999999"),
        ("getUserToken() [case 1]", phrase("", "getUserToken()"), "get user token"),
        ("publish(message,author) [case 2]", phrase("", "publish(message,author)"), "publish message and author"),
        (
            "responseCode.toString() [case 3]",
            phrase("int responseCode;", "responseCode.toString()"),
            "int response code as a string",
        ),
        ("publishArticle() [case 4]", phrase("", "publishArticle()"), "article is published"),
        ("editor.publishArticle() [case 5]", phrase("", "editor.publishArticle()"), "article is published by editor"),
        ("publishNewArticle() [case 6]", phrase("", "publishNewArticle()"), "new article is published"),
        (
            "editor.publishNewArticleWhenDone() [case 7]",
            phrase("", "editor.publishNewArticleWhenDone()"),
            "new article is published when done by editor",
        ),
        ("article.isSentToEditor() [case 8]", phrase("", "article.isSentToEditor()"), "article is sent to editor"),
        (
            "authman.checkCredentials(user,pass) [other]",
            phrase("AuthManager authman;", "authman.checkCredentials(user,pass)"),
            "auth manager check credentials",
        ),
        ("System.out::println", phrase("", "System.out::println"), "system out println"),
        ("boolean didItFail", phrase("boolean didItFail;", "didItFail"), "did it fail"),
        ("int response", phrase("int response;", "response"), "int response"),
        ("Token userToken", phrase("Token userToken;", "userToken"), "user token"),
        ("myVariable", phrase("", "myVariable"), "my variable"),
        ("World.super", phrase("", "World.super"), "super of world"),
        ("World.this.greet()", phrase("", "World.this.greet()"), "world this greet"),
        ("myVar++", phrase("int myVar;", "myVar++"), "int my var plus 1"),
        ("String string", phrase("", "String string"), "string"),
        ("AuthManager myAuth", phrase("", "AuthManager myAuth"), "auth manager my auth"),
        (
            "SessionManager sess = new SessionManager()",
            phrase("", "SessionManager sess = new SessionManager()"),
            "session manager equals new session manager",
        ),
        ("\"a\" + \"b\" + \"c\"", phrase("", "\"a\" + \"b\" + \"c\""), "string plus strings"),
        (
            "readability: string plus string plus string",
            readability_pass("string plus string plus string"),
            "string plus strings",
        ),
        ("readability: my_var", readability_pass("my_var"), "my var"),
    ];
    let elapsed = start.elapsed();
    let wrong: Vec<String> = goldens
        .iter()
        .filter(|(_, got, want)| got != want)
        .map(|(name, got, want)| format!("{name}: got {got:?}, want {want:?}"))
        .collect();
    let total = goldens.len();
    let detail = match wrong.first() {
        None => format!("{total}/{total} exact in {elapsed:?}"),
        Some(first) => format!("{}/{total} wrong, first: {first}", wrong.len()),
    };
    report.record("1  golden examples", wrong.is_empty() && elapsed < Duration::from_secs(1), detail);
}

fn criterion_2(report: &mut Report) {
    let start = Instant::now();
    let converted = convert_source(CORPUS, None);
    let elapsed = start.elapsed();
    let golden = corpus_golden();
    let all_converted = converted.iter().all(|c| c.status == Status::Converted);
    report.record(
        "2a coverage corpus: 45 assertions convert",
        converted.len() == 45 && all_converted,
        format!(
            "{}/{} converted in {elapsed:?}",
            converted.iter().filter(|c| c.status == Status::Converted).count(),
            converted.len()
        ),
    );
    let mismatches: Vec<String> = converted
        .iter()
        .zip(&golden)
        .filter(|(c, (stmt, want))| c.raw_text != *stmt || c.sentence != *want)
        .map(|(c, (_, want))| format!("{}: got {:?}, want {want:?}", c.raw_text, c.sentence))
        .collect();
    report.record(
        "2b coverage corpus: frozen sentences match",
        golden.len() == converted.len() && mismatches.is_empty() && elapsed < Duration::from_secs(2),
        mismatches.first().cloned().unwrap_or_else(|| format!("{}/{} byte-identical", golden.len(), golden.len())),
    );

    let symbols = SymbolTable::new();
    let mut families = BTreeSet::new();
    let mut signatures = BTreeSet::new();
    for scanned in scan_assertions(CORPUS) {
        let call = AssertionCall::parse(&scanned).unwrap();
        if call.condition == Condition::That {
            let params = identify_params(&call, &symbols).unwrap();
            signatures.insert(parse_matcher(params.matcher.as_ref().unwrap()).unwrap().signature);
        } else {
            families.insert(call.condition);
        }
    }
    let expected: BTreeSet<_> = enumerate_signatures().into_iter().collect();
    let missing: Vec<String> = expected.difference(&signatures).map(|s| s.to_string()).collect();
    report.record(
        "2c coverage corpus: all signatures and families",
        expected.len() == 37 && missing.is_empty() && families.len() == 8,
        format!("{}/37 signatures, {}/8 classic families {missing:?}", signatures.len(), families.len()),
    );
}

fn criterion_3(report: &mut Report) {
    let swap = sample(200, (literal(), method_call()), |(lit, call)| {
        let a = convert_source(&format!("assertEquals({lit}, {call});"), None);
        let b = convert_source(&format!("assertEquals({call}, {lit});"), None);
        a[0].status == Status::Converted && a[0].sentence == b[0].sentence
    });
    sample_row(report, "3a swap invariance (constant vs call)", 200, swap);

    let messages = sample(200, assertion_with_message(), |(stmt, words)| {
        let out = convert_source(stmt, None);
        out[0].status == Status::Converted && words.iter().all(|w| !out[0].sentence.contains(w))
    });
    sample_row(report, "3b message suppression", 200, messages);

    let idempotent = sample(500, phrase_text(), |s| {
        let once = readability_pass(s);
        readability_pass(&once) == once
    });
    sample_row(report, "3c readability pass idempotence", 500, idempotent);

    let camel = sample(500, java_identifier(), |id| {
        let words = split_camel_case(id);
        let expected = id.chars().filter(char::is_ascii_alphanumeric).collect::<String>().to_lowercase();
        words.concat() == expected && words.iter().all(|w| !w.is_empty() && w.to_lowercase() == *w)
    });
    sample_row(report, "3d camel split concatenation", 500, camel);

    let squash = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
    let mut total = 0;
    let mut broken = Vec::new();
    for scanned in scan_assertions(CORPUS) {
        let stmt = scanned.text.trim_end_matches(';');
        total += 1;
        match parse_expression_str(stmt) {
            Ok(e) if squash(&e.to_string()) == squash(stmt) => {}
            Ok(e) => broken.push(format!("{stmt} -> {e}")),
            Err(err) => broken.push(format!("{stmt}: {err}")),
        }
    }
    report.record(
        "3e parser round-trip on corpus",
        broken.is_empty() && total == 45,
        broken.first().cloned().unwrap_or_else(|| format!("{total}/{total} expressions")),
    );
}

fn criterion_4(report: &mut Report) {
    let result = sample(50, java_file(), |src| scan_positions(src) == scan_oracle(src));
    sample_row(report, "4  scanner vs masked brute-force oracle", 50, result);
}

#[test]
fn acceptance() {
    let mut report = Report::default();
    criterion_1(&mut report);
    criterion_2(&mut report);
    criterion_3(&mut report);
    criterion_4(&mut report);
    report.print();
    println!("SKIP 5  human rating study                                 needs human raters; not run");
    let failed: Vec<&str> = report.rows.iter().filter(|r| !r.1).map(|r| r.0.as_str()).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
