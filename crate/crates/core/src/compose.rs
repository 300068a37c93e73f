//! Sentence templates per assertion condition.

use serde::Serialize;
use thiserror::Error;

use crate::extract::Condition;
use crate::java::lexer::Span;
use crate::phrase::render::Phrase;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Converted,
    Unconvertible,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Converted => "converted",
            Status::Unconvertible => "unconvertible",
        }
    }
}

/// One assertion after conversion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvertedAssertion {
    pub span: Span,
    /// 1-based line of the first character of the statement.
    pub line: usize,
    pub raw_text: String,
    pub condition: Option<Condition>,
    /// Empty unless `status` is `Converted`.
    pub sentence: String,
    pub status: Status,
    pub diagnostic: Option<String>,
    pub rule_trace: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComposeError {
    #[error("{condition} needs a non-empty {role} phrase")]
    MissingPhrase { condition: Condition, role: &'static str },
}

/// Rendered role phrases for one assertion. The message never gets a
/// phrase.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RolePhrases {
    pub actual: Option<Phrase>,
    pub expected: Option<Phrase>,
    pub delta: Option<Phrase>,
    pub matcher: Option<Phrase>,
    /// The matcher is `everyItem(m)` and `matcher` holds the phrase for
    /// `m`; the sentence subject becomes "every item of <actual>".
    pub every_item: bool,
}

fn required<'p>(phrase: Option<&'p Phrase>, condition: Condition, role: &'static str) -> Result<&'p str, ComposeError> {
    phrase.map(|p| p.text.as_str()).filter(|t| !t.is_empty()).ok_or(ComposeError::MissingPhrase { condition, role })
}

/// Builds the sentence for `condition`. No terminal period is added.
pub fn compose(condition: Condition, phrases: &RolePhrases) -> Result<String, ComposeError> {
    let actual = required(phrases.actual.as_ref(), condition, "actual")?;
    let expected = || required(phrases.expected.as_ref(), condition, "expected");
    let mut sentence = match condition {
        Condition::True | Condition::False | Condition::Null | Condition::NotNull => {
            format!("{actual} is {}", condition.words())
        }
        Condition::Equals | Condition::ArrayEquals => format!("{actual} and {} are equal", expected()?),
        Condition::NotEquals => format!("{actual} and {} are not equal", expected()?),
        Condition::Same => format!("{actual} is identical to {}", expected()?),
        Condition::NotSame => format!("{actual} is not identical to {}", expected()?),
        Condition::That => {
            let matcher = required(phrases.matcher.as_ref(), condition, "matcher")?;
            if phrases.every_item {
                format!("every item of {actual} {matcher}")
            } else {
                format!("{actual} {matcher}")
            }
        }
    };
    if let Some(delta) = phrases.delta.as_ref().filter(|d| !d.text.is_empty()) {
        sentence.push_str(" within a margin of ");
        sentence.push_str(&delta.text);
    }
    Ok(sentence)
}
