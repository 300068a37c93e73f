//! Word classes used to read method names: a verb lexicon with past-tense
//! overrides, plus small closed lists of adjectives and function words.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use thiserror::Error;

const DEFAULT_VERBS: &str = include_str!("../../data/verbs.txt");

const ADJECTIVES: &[&str] = &[
    "active",
    "available",
    "big",
    "busy",
    "clean",
    "closed",
    "complete",
    "complex",
    "correct",
    "current",
    "custom",
    "dead",
    "deleted",
    "different",
    "dirty",
    "disabled",
    "duplicate",
    "dynamic",
    "early",
    "earliest",
    "empty",
    "enabled",
    "entire",
    "existing",
    "expired",
    "external",
    "fast",
    "final",
    "first",
    "fresh",
    "full",
    "generic",
    "global",
    "good",
    "bad",
    "hidden",
    "high",
    "idle",
    "inactive",
    "initial",
    "internal",
    "invalid",
    "large",
    "last",
    "latest",
    "live",
    "local",
    "long",
    "low",
    "main",
    "max",
    "maximum",
    "min",
    "minimum",
    "missing",
    "multiple",
    "new",
    "next",
    "null",
    "old",
    "open",
    "other",
    "partial",
    "pending",
    "previous",
    "primary",
    "private",
    "public",
    "random",
    "raw",
    "ready",
    "remote",
    "same",
    "secondary",
    "secure",
    "short",
    "simple",
    "single",
    "slow",
    "small",
    "special",
    "specific",
    "stale",
    "static",
    "temp",
    "temporary",
    "total",
    "unique",
    "unknown",
    "valid",
    "visible",
    "whole",
    "wrong",
];

const FUNCTION_WORDS: &[&str] = &[
    "a", "after", "again", "all", "already", "also", "an", "and", "any", "are", "as", "at", "be", "been", "before",
    "between", "but", "by", "can", "could", "did", "do", "does", "down", "each", "either", "every", "for", "from",
    "had", "has", "have", "if", "in", "into", "is", "it", "its", "just", "may", "might", "must", "neither", "no",
    "nor", "not", "now", "of", "off", "on", "once", "only", "onto", "or", "out", "over", "shall", "should", "so",
    "some", "still", "than", "that", "the", "then", "these", "this", "those", "to", "under", "until", "up", "upon",
    "via", "was", "were", "when", "where", "whether", "which", "while", "will", "with", "within", "without", "would",
    "yet",
];

/// Verbs that never take the passive "NOUN is VERBed" reading.
const AUXILIARIES: &[&str] = &["be", "can", "do", "have", "has", "may", "must", "shall", "should", "will"];

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read lexicon {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: malformed lexicon entry {entry:?}")]
    Malformed { line: usize, entry: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerbLexicon {
    verbs: BTreeSet<String>,
    irregular_past: BTreeMap<String, String>,
    /// Reverse map of `irregular_past`, for recognizing verbs already in
    /// past tense (`isSentToEditor`).
    past_forms: BTreeSet<String>,
}

impl VerbLexicon {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The built-in lexicon (shared, parsed once).
    pub fn builtin() -> &'static VerbLexicon {
        static BUILTIN: OnceLock<VerbLexicon> = OnceLock::new();
        BUILTIN.get_or_init(|| VerbLexicon::parse(DEFAULT_VERBS).expect("built-in verb list is well formed"))
    }

    /// Parses a word list: one `verb` or `verb,past` per line. Blank lines
    /// and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, LexiconError> {
        let mut lexicon = VerbLexicon::empty();
        lexicon.extend_from_str(text)?;
        Ok(lexicon)
    }

    pub fn load(path: &Path) -> Result<Self, LexiconError> {
        let text =
            fs::read_to_string(path).map_err(|source| LexiconError::Io { path: path.display().to_string(), source })?;
        Self::parse(&text)
    }

    pub fn extend_from_str(&mut self, text: &str) -> Result<(), LexiconError> {
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split(',').map(str::trim);
            let verb = parts.next().unwrap_or_default();
            let past = parts.next();
            let valid_word = |w: &str| !w.is_empty() && w.chars().all(|c| c.is_alphabetic());
            if !valid_word(verb) || parts.next().is_some() || past.is_some_and(|p| !valid_word(p)) {
                return Err(LexiconError::Malformed { line: idx + 1, entry: raw.to_string() });
            }
            self.insert(verb, past);
        }
        Ok(())
    }

    pub fn insert(&mut self, verb: &str, past: Option<&str>) {
        let verb = verb.to_lowercase();
        if let Some(past) = past {
            let past = past.to_lowercase();
            self.past_forms.insert(past.clone());
            self.irregular_past.insert(verb.clone(), past);
        }
        self.verbs.insert(verb);
    }

    pub fn merge(&mut self, other: &VerbLexicon) {
        self.verbs.extend(other.verbs.iter().cloned());
        self.past_forms.extend(other.past_forms.iter().cloned());
        for (verb, past) in &other.irregular_past {
            self.irregular_past.insert(verb.clone(), past.clone());
        }
    }

    pub fn len(&self) -> usize {
        self.verbs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verbs.is_empty()
    }

    pub fn contains(&self, verb: &str) -> bool {
        self.verbs.contains(verb)
    }

    pub fn irregular_past(&self, verb: &str) -> Option<&str> {
        self.irregular_past.get(verb).map(String::as_str)
    }

    /// Base form of `word` when it is a verb (`contains` -> `contain`,
    /// `applies` -> `apply`), including the `-ize`/`-ify` suffix fallback.
    pub fn verb_lemma(&self, word: &str) -> Option<String> {
        if self.verbs.contains(word) {
            return Some(word.to_string());
        }
        if matches!(word, "is" | "are" | "am") {
            return Some("be".to_string());
        }
        let candidates = [
            word.strip_suffix("ies").map(|s| format!("{s}y")),
            word.strip_suffix("es").map(str::to_string),
            word.strip_suffix('s').filter(|s| !s.ends_with('s')).map(str::to_string),
        ];
        if let Some(lemma) = candidates.into_iter().flatten().find(|c| self.verbs.contains(c)) {
            return Some(lemma);
        }
        let suffix_verb = ["ize", "ise", "ify"].iter().any(|s| word.len() > s.len() + 2 && word.ends_with(s));
        suffix_verb.then(|| word.to_string())
    }

    pub fn is_verb(&self, word: &str) -> bool {
        self.verb_lemma(word).is_some()
    }

    /// True for past-tense or past-participle forms of known verbs.
    pub fn is_past_form(&self, word: &str) -> bool {
        if self.past_forms.contains(word) {
            return true;
        }
        if let Some(stem) = word.strip_suffix("ed") {
            let candidates = [
                stem.to_string(),
                format!("{stem}e"),
                stem.strip_suffix('i').map(|s| format!("{s}y")).unwrap_or_default(),
                undouble(stem),
            ];
            return candidates.iter().any(|c| !c.is_empty() && self.verbs.contains(c));
        }
        false
    }

    /// Past tense of a base-form verb.
    pub fn past_tense(&self, verb: &str) -> String {
        if let Some(past) = self.irregular_past(verb) {
            return past.to_string();
        }
        regular_past(verb)
    }
}

fn undouble(stem: &str) -> String {
    let bytes = stem.as_bytes();
    if bytes.len() >= 2 && bytes[bytes.len() - 1] == bytes[bytes.len() - 2] {
        stem[..stem.len() - 1].to_string()
    } else {
        String::new()
    }
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn syllable_count(word: &str) -> usize {
    let mut count = 0;
    let mut prev_vowel = false;
    for c in word.chars() {
        let vowel = is_vowel(c);
        if vowel && !prev_vowel {
            count += 1;
        }
        prev_vowel = vowel;
    }
    count
}

/// Regular past-tense morphology: final-e takes `d`, consonant+y becomes
/// `ied`, a one-syllable consonant-vowel-consonant ending doubles its final
/// consonant (except w, x, y), everything else takes `ed`.
pub fn regular_past(verb: &str) -> String {
    let chars: Vec<char> = verb.chars().collect();
    let n = chars.len();
    if n == 0 {
        return String::new();
    }
    let last = chars[n - 1];
    if last == 'e' {
        return format!("{verb}d");
    }
    if last == 'y' && n >= 2 && !is_vowel(chars[n - 2]) {
        return format!("{}ied", &verb[..verb.len() - 1]);
    }
    if n >= 3
        && syllable_count(verb) == 1
        && !is_vowel(last)
        && !matches!(last, 'w' | 'x' | 'y')
        && is_vowel(chars[n - 2])
        && !is_vowel(chars[n - 3])
    {
        return format!("{verb}{last}ed");
    }
    format!("{verb}ed")
}

/// Past tense using the built-in lexicon.
pub fn past_tense(verb: &str) -> String {
    VerbLexicon::builtin().past_tense(verb)
}

pub fn is_adjective(word: &str) -> bool {
    ADJECTIVES.contains(&word)
}

pub fn is_function_word(word: &str) -> bool {
    FUNCTION_WORDS.contains(&word)
}

pub fn is_auxiliary(word: &str) -> bool {
    AUXILIARIES.contains(&word)
}

/// Crude plural test: a trailing `s` that is not part of `ss`, `us` or `is`.
pub fn looks_plural(word: &str) -> bool {
    word.len() > 2 && word.ends_with('s') && !word.ends_with("ss") && !word.ends_with("us") && !word.ends_with("is")
}

/// A word that can head the NOUN slot of a `VERB NOUN` method name:
/// alphabetic, not an adjective or function word, and singular.
pub fn is_singular_noun(word: &str) -> bool {
    !word.is_empty()
        && word.chars().all(|c| c.is_alphabetic())
        && !is_adjective(word)
        && !is_function_word(word)
        && !looks_plural(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_contains_required_verbs() {
        let lex = VerbLexicon::builtin();
        for verb in [
            "get", "is", "publish", "send", "check", "fail", "create", "set", "become", "start", "contain", "end",
            "has",
        ] {
            assert!(lex.is_verb(verb), "{verb}");
        }
        assert!(lex.len() > 600);
    }

    #[test]
    fn lemmas() {
        let lex = VerbLexicon::builtin();
        assert_eq!(lex.verb_lemma("contains").as_deref(), Some("contain"));
        assert_eq!(lex.verb_lemma("applies").as_deref(), Some("apply"));
        assert_eq!(lex.verb_lemma("pushes").as_deref(), Some("push"));
        assert_eq!(lex.verb_lemma("equals").as_deref(), Some("equal"));
        assert_eq!(lex.verb_lemma("tokenize").as_deref(), Some("tokenize"));
        assert_eq!(lex.verb_lemma("article"), None);
    }

    #[test]
    fn past_forms_are_recognized() {
        let lex = VerbLexicon::builtin();
        for word in ["sent", "published", "created", "stopped", "applied", "became"] {
            assert!(lex.is_past_form(word), "{word}");
        }
        assert!(!lex.is_past_form("editor"));
        assert!(!lex.is_past_form("empty"));
    }

    #[test]
    fn regular_rules() {
        assert_eq!(regular_past("create"), "created");
        assert_eq!(regular_past("copy"), "copied");
        assert_eq!(regular_past("deploy"), "deployed");
        assert_eq!(regular_past("stop"), "stopped");
        assert_eq!(regular_past("fix"), "fixed");
        assert_eq!(regular_past("check"), "checked");
        assert_eq!(regular_past("open"), "opened");
    }

    #[test]
    fn parse_wordlist() {
        let lex = VerbLexicon::parse("# comment\nfrobnicate\n\nyeet,yote\n").unwrap();
        assert!(lex.contains("frobnicate"));
        assert_eq!(lex.past_tense("yeet"), "yote");
        assert_eq!(lex.past_tense("frobnicate"), "frobnicated");
        assert!(matches!(VerbLexicon::parse("ok\nbad,past,extra\n"), Err(LexiconError::Malformed { line: 2, .. })));
        assert!(VerbLexicon::parse("two words").is_err());
    }

    #[test]
    fn noun_slot() {
        assert!(is_singular_noun("article"));
        assert!(is_singular_noun("status"));
        assert!(!is_singular_noun("credentials"));
        assert!(!is_singular_noun("new"));
        assert!(!is_singular_noun("to"));
    }
}
