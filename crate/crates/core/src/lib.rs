//! Converts JUnit assertion statements into English sentences.
//!
//! ```
//! let out = assertconvert::convert_source("assertNotNull(myNum);", None);
//! assert_eq!(out[0].sentence, "my num is not null");
//! ```

pub mod compose;
pub mod extract;
pub mod java;
pub mod matcher;
pub mod phrase;
pub mod pipeline;

pub use compose::{compose, ComposeError, ConvertedAssertion, RolePhrases, Status};
pub use extract::{
    classify_condition, disambiguate_expected_actual, identify_params, AssertionCall, Condition, ExtractError,
    OrderRule, ParamAssignment,
};
pub use java::{build_symbol_table, SymbolTable};
pub use matcher::{
    enumerate_signatures, parse_matcher, MatcherError, MatcherKind, MatcherNode, MatcherRenderer, Signature,
};
pub use phrase::{render_expr, Phrase, Renderer, VerbLexicon};
pub use pipeline::{convert_source, line_of, Converter};
