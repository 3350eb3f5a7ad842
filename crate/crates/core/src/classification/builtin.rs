//! Named ordered monoids.

use crate::automata::builtin_language;
use crate::error::{Error, Result};
use crate::monoid::{
    syntactic_ordered_monoid, OrderedMonoid, TransitionMonoid, DEFAULT_ELEMENT_CAP,
};

/// Names accepted by [`builtin_monoid`]; `TQ_EXAMPLE` takes a parameter, as in `TQ_EXAMPLE(3)`.
pub const BUILTIN_MONOIDS: [&str; 7] = [
    "BA2_PLUS",
    "U_MINUS",
    "U_PLUS",
    "L5_MONOID",
    "Z3",
    "TQ_EXAMPLE(q)",
    "S3",
];

fn syntactic(language: &str) -> Result<OrderedMonoid> {
    Ok(syntactic_ordered_monoid(&builtin_language(language)?, DEFAULT_ELEMENT_CAP)?.ordered)
}

fn unknown(name: &str) -> Error {
    Error::UnknownBuiltin {
        kind: "monoid",
        name: name.to_string(),
    }
}

/// Looks up a named ordered monoid.
pub fn builtin_monoid(name: &str) -> Result<OrderedMonoid> {
    match name {
        "BA2_PLUS" => syntactic("BA2_LANG"),
        "U_MINUS" => syntactic("U_MINUS_LANG"),
        "U_PLUS" => syntactic("U_PLUS_LANG"),
        "L5_MONOID" => syntactic("L5"),
        "Z3" => syntactic("Z3_LANG"),
        "S3" => {
            let d = builtin_language("S3_LANG")?;
            let generators: Vec<Vec<usize>> = (0..d.alphabet().len())
                .map(|a| d.letter_map(a).to_vec())
                .collect();
            let tm = TransitionMonoid::generate(d.alphabet(), &generators, DEFAULT_ELEMENT_CAP)?;
            Ok(OrderedMonoid::unordered(tm.monoid))
        }
        _ => {
            let q = name
                .strip_prefix("TQ_EXAMPLE(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|q| q.trim().parse::<usize>().ok())
                .ok_or_else(|| unknown(name))?;
            tq_example(q)
        }
    }
}

/// Transformations `e`, `f` of the points `(i, A)`, `(i, B)` for `i` in `Z_q`:
/// `e` moves `(i, B)` to `(i, A)`, `f` moves `(i, A)` to `(i+1, B)`, and both
/// fix everything else. Point `(i, A)` is numbered `2i`, `(i, B)` is `2i + 1`.
pub fn tq_example(q: usize) -> Result<OrderedMonoid> {
    if q == 0 {
        return Err(Error::Precondition("TQ_EXAMPLE needs q ≥ 1".into()));
    }
    let e: Vec<usize> = (0..2 * q).map(|p| p & !1).collect();
    let f: Vec<usize> = (0..2 * q)
        .map(|p| {
            if p % 2 == 0 {
                (p / 2 + 1) % q * 2 + 1
            } else {
                p
            }
        })
        .collect();
    let tm = TransitionMonoid::generate(&['e', 'f'], &[e, f], DEFAULT_ELEMENT_CAP)?;
    Ok(OrderedMonoid::unordered(tm.monoid))
}
