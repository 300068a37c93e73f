use assertconvert::phrase::past_tense;

const ORACLE: &str = include_str!("data/past_tense_oracle.txt");

fn entries() -> impl Iterator<Item = (&'static str, &'static str)> {
    ORACLE.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).map(|l| {
        let mut parts = l.split_whitespace();
        (parts.next().unwrap(), parts.next().unwrap())
    })
}

#[test]
fn agrees_with_oracle_wordlist() {
    let wrong: Vec<String> = entries()
        .filter_map(|(verb, past)| {
            let got = past_tense(verb);
            (got != past).then(|| format!("{verb}: expected {past}, got {got}"))
        })
        .collect();
    assert!(wrong.is_empty(), "{wrong:#?}");
}

#[test]
fn oracle_has_fifty_regulars() {
    let regular = ORACLE.split("# regular").nth(1).unwrap();
    assert!(regular.lines().filter(|l| !l.trim().is_empty()).count() >= 50);
}
