use assertconvert::java::{build_symbol_table_for_file, class_under_test_from};
use std::path::Path;

/// Test class names as they appear in common open-source projects, with the
/// production class each one exercises.
const LABELLED: &[(&str, Option<&str>)] = &[
    ("StringUtilsTest", Some("StringUtils")),
    ("TestStringUtils", Some("StringUtils")),
    ("ArrayListTests", Some("ArrayList")),
    ("HttpClientTest", Some("HttpClient")),
    ("JsonParserTest", Some("JsonParser")),
    ("TestJsonParser", Some("JsonParser")),
    ("UserServiceTests", Some("UserService")),
    ("MathTest", Some("Math")),
    ("ContestTest", Some("Contest")),
    ("LatestTest", Some("Latest")),
    ("AttestationTest", Some("Attestation")),
    ("TestsRunner", Some("Runner")),
    ("DateTimeFormatterTest", Some("DateTimeFormatter")),
    ("URLDecoderTest", Some("URLDecoder")),
    ("Test", None),
    ("Tests", None),
    ("Testing", None),
    ("Protest", None),
    ("Calculator", None),
    ("Testable", None),
];

#[test]
fn labelled_sample() {
    for (name, want) in LABELLED {
        assert_eq!(class_under_test_from(name).as_deref(), *want, "{name}");
    }
}

#[test]
fn file_name_wins_over_class_name() {
    let t = build_symbol_table_for_file("class Whatever {}", Some(Path::new("src/test/java/FooTest.java")));
    assert_eq!(t.class_under_test(), Some("Foo"));
    let t = build_symbol_table_for_file("class BarTest {}", None);
    assert_eq!(t.class_under_test(), Some("Bar"));
}

#[test]
fn declarations_of_every_kind() {
    let src = "class T { private HttpOperationFailedException cause = null; \
               void m(int response, List<String> names) { boolean didItFail; \
               for (Token userToken : tokens) {} var inferred = 1; } }";
    let t = build_symbol_table_for_file(src, None);
    assert_eq!(t.lookup("cause"), "HttpOperationFailedException");
    assert_eq!(t.lookup("response"), "int");
    assert_eq!(t.lookup("names"), "List<String>");
    assert_eq!(t.lookup("didItFail"), "boolean");
    assert_eq!(t.lookup("userToken"), "Token");
    assert_eq!(t.lookup("inferred"), "unknown");
    assert_eq!(t.lookup("nothing"), "unknown");
}
