/// Splits an identifier into lowercase words.
///
/// Breaks at lower-to-upper transitions, letter/digit transitions and any
/// non-alphanumeric character (`_`, `.`, `$`, ...). A run of capitals stays
/// together until the capital that starts a lowercase word, so `HTTPServer`
/// becomes `http server`.
pub fn split_camel_case(identifier: &str) -> Vec<String> {
    let chars: Vec<char> = identifier.chars().collect();
    let mut words = Vec::new();
    let mut current = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if !c.is_alphanumeric() {
            flush(&mut current, &mut words);
            continue;
        }
        if let Some(&prev) = i.checked_sub(1).and_then(|p| chars.get(p)) {
            let next = chars.get(i + 1).copied();
            let boundary = prev.is_alphanumeric()
                && ((prev.is_lowercase() && c.is_uppercase())
                    || (prev.is_alphabetic() && c.is_numeric())
                    || (prev.is_numeric() && c.is_alphabetic())
                    || (prev.is_uppercase() && c.is_uppercase() && next.is_some_and(char::is_lowercase)));
            if boundary {
                flush(&mut current, &mut words);
            }
        }
        current.extend(c.to_lowercase());
    }
    flush(&mut current, &mut words);
    words
}

fn flush(current: &mut String, words: &mut Vec<String>) {
    if !current.is_empty() {
        words.push(std::mem::take(current));
    }
}

/// `split_camel_case` joined with single spaces.
pub fn split_phrase(identifier: &str) -> String {
    split_camel_case(identifier).join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(s: &str) -> Vec<String> {
        split_camel_case(s)
    }

    #[test]
    fn lower_camel() {
        assert_eq!(split("myVariable"), ["my", "variable"]);
        assert_eq!(split("loginPassword"), ["login", "password"]);
        assert_eq!(split("x"), ["x"]);
    }

    #[test]
    fn acronyms_and_digits() {
        assert_eq!(split("HTTPServer"), ["http", "server"]);
        assert_eq!(split("getHTTP"), ["get", "http"]);
        assert_eq!(split("parseXMLFile2"), ["parse", "xml", "file", "2"]);
        assert_eq!(split("md5Hash"), ["md", "5", "hash"]);
    }

    #[test]
    fn separators() {
        assert_eq!(split("MAX_VALUE"), ["max", "value"]);
        assert_eq!(split("org.example.AuthManager"), ["org", "example", "auth", "manager"]);
        assert_eq!(split("__a__"), ["a"]);
        assert!(split("_").is_empty());
    }

    #[test]
    fn assertion_method_names() {
        assert_eq!(split("assertNotNull"), ["assert", "not", "null"]);
        assert_eq!(split("assertArrayEquals"), ["assert", "array", "equals"]);
    }
}
