//! Java expressions to English phrases.

pub mod camel;
pub mod lexicon;
pub mod readability;
pub mod render;

pub use camel::{split_camel_case, split_phrase};
pub use lexicon::{past_tense, LexiconError, VerbLexicon};
pub use readability::readability_pass;
pub use render::{classify_method_name, quoted_literal, render_expr, type_phrase, MethodNameCase, Phrase, Renderer};
