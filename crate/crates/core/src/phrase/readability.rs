//! Final cleanup applied to every phrase and sentence.

const PLUS: &str = " plus ";

/// Cleans up phrase text until it stops changing:
///
/// * `_` and `.` become spaces (a `.` between two digits is a decimal point
///   and stays);
/// * whitespace runs collapse to one space, ends are trimmed;
/// * three or more identical terms chained with "plus" collapse to
///   `X plus Xs`.
///
/// Each step only shrinks the text or its term count, so the loop ends and
/// the result is a fixed point.
pub fn readability_pass(text: &str) -> String {
    let mut current = text.to_string();
    loop {
        let next = collapse_repeated_plus(&squeeze(&replace_separators(&current)));
        if next == current {
            return current;
        }
        current = next;
    }
}

fn replace_separators(text: &str) -> String {
    let chars: Vec<char> = text.chars().collect();
    chars
        .iter()
        .enumerate()
        .map(|(i, &c)| match c {
            '_' => ' ',
            '.' => {
                let digit_before = i > 0 && chars[i - 1].is_ascii_digit();
                let digit_after = chars.get(i + 1).is_some_and(char::is_ascii_digit);
                if digit_before && digit_after {
                    '.'
                } else {
                    ' '
                }
            }
            other => other,
        })
        .collect()
}

fn squeeze(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn collapse_repeated_plus(text: &str) -> String {
    let terms: Vec<&str> = text.split(PLUS).collect();
    if terms.len() < 3 {
        return text.to_string();
    }
    let mut out: Vec<String> = Vec::with_capacity(terms.len());
    let mut i = 0;
    while i < terms.len() {
        let mut run = 1;
        while i + run < terms.len() && terms[i + run] == terms[i] {
            run += 1;
        }
        if run >= 3 && !terms[i].is_empty() {
            out.push(terms[i].to_string());
            out.push(format!("{}s", terms[i]));
        } else {
            out.extend(terms[i..i + run].iter().map(|t| t.to_string()));
        }
        i += run;
    }
    out.join(PLUS)
}
