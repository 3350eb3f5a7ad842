use super::Dfa;
use crate::error::{Error, Result};

/// Names accepted by [`builtin_language`].
pub const BUILTIN_LANGUAGES: [&str; 7] = [
    "BA2_LANG",
    "U_MINUS_LANG",
    "U_PLUS_LANG",
    "L5",
    "Z3_LANG",
    "S3_LANG",
    "CONTAINS_A",
];

fn build(alphabet: &str, states: usize, accepting: &[usize], rows: &[&[usize]]) -> Dfa {
    Dfa::new(
        alphabet.chars().collect(),
        states,
        0,
        accepting,
        rows.iter().map(|r| r.to_vec()).collect(),
    )
    .expect("built-in automata are valid")
}

/// The example languages.
///
/// * `BA2_LANG`: `(ab)*`, whose syntactic ordered monoid is the Brandt monoid `BA₂⁺`.
/// * `U_MINUS_LANG`: `(a∪b)*aa(a∪b)*`; `U_PLUS_LANG` is its complement.
/// * `L5`: the five-state language outside `Pol(Com)` (states 1..5 renumbered 0..4).
/// * `Z3_LANG`: `(aaa)*`.
/// * `S3_LANG`: letters act as the transpositions (0 1) and (0 2) of three states.
/// * `CONTAINS_A`: the shuffle ideal `Σ*aΣ*` over `{a, b}`.
pub fn builtin_language(name: &str) -> Result<Dfa> {
    Ok(match name {
        "BA2_LANG" => build("ab", 3, &[0], &[&[1, 2, 2], &[2, 0, 2]]),
        "U_MINUS_LANG" => build("ab", 3, &[2], &[&[1, 2, 2], &[0, 0, 2]]),
        "U_PLUS_LANG" => build("ab", 3, &[0, 1], &[&[1, 2, 2], &[0, 0, 2]]),
        "L5" => build("ab", 5, &[4], &[&[1, 4, 3, 2, 4], &[1, 2, 4, 0, 4]]),
        "Z3_LANG" => build("a", 3, &[0], &[&[1, 2, 0]]),
        "S3_LANG" => build("ab", 3, &[0], &[&[1, 0, 2], &[2, 1, 0]]),
        "CONTAINS_A" => build("ab", 2, &[1], &[&[1, 1], &[0, 1]]),
        _ => {
            return Err(Error::UnknownBuiltin {
                kind: "language",
                name: name.to_string(),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The reference word table, with states shifted to 0-based numbering.
    #[test]
    fn l5_reproduces_word_transition_table() {
        let d = builtin_language("L5").unwrap();
        let table: [(&str, [usize; 5]); 4] = [
            ("abab", [1, 5, 3, 5, 5]),
            ("abaaab", [1, 5, 5, 5, 5]),
            ("abbb", [5, 5, 3, 5, 5]),
            ("ababab", [3, 5, 1, 5, 5]),
        ];
        for (w, expected) in table {
            let got: Vec<usize> = d.word_map(w).unwrap().iter().map(|q| q + 1).collect();
            assert_eq!(got, expected, "{w}");
        }
        // appended b takes state 1 to 2
        assert_eq!(d.step(0, d.letter_index('b').unwrap()), 1);
        assert!(d.accepts_str("ababaa").unwrap());
        assert!(!d.accepts_str("bbaaaa").unwrap());
    }

    #[test]
    fn ba2_membership() {
        let d = builtin_language("BA2_LANG").unwrap();
        for (w, ok) in [
            ("", true),
            ("abab", true),
            ("aa", false),
            ("ba", false),
            ("ab", true),
        ] {
            assert_eq!(d.accepts_str(w).unwrap(), ok, "{w}");
        }
    }

    #[test]
    fn u_languages() {
        let minus = builtin_language("U_MINUS_LANG").unwrap();
        let plus = builtin_language("U_PLUS_LANG").unwrap();
        for w in ["", "a", "aa", "abab", "baab", "bbaab"] {
            assert_eq!(minus.accepts_str(w).unwrap(), w.contains("aa"));
            assert_eq!(plus.accepts_str(w).unwrap(), !w.contains("aa"));
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(
            builtin_language("NOPE"),
            Err(Error::UnknownBuiltin { .. })
        ));
    }
}
