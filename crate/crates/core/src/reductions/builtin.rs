//! The concrete reductions: PDISJ into `IP_q`, into shuffle monoids and into
//! `L5`; `IP_q` into non-commutative groups and `T_q` monoids; LT into any
//! non-commutative monoid.

use std::sync::Arc;

use super::{LocalReduction, Polarity, RectangularReduction, Reduction, Target};
use crate::automata::builtin_language;
use crate::classification::{builtin_monoid, is_shuffle};
use crate::commcc::{BuiltinKind, Pip2Variant};
use crate::error::{Error, Result};
use crate::monoid::{ideal_generated, Element, OrderedMonoid};
use crate::word::{show_word, PaddedWord};

/// Names accepted by [`builtin_reduction`].
pub const BUILTIN_REDUCTIONS: [&str; 7] = [
    "pdisj_to_ipq",
    "pdisj_to_shuffle",
    "ipq_to_group",
    "ipq_to_tq",
    "lt_to_noncommutative",
    "pip2_to_L5",
    "pip2_to_L5_PAPER_LITERAL",
];

fn side(msg: impl Into<String>) -> Error {
    Error::SideCondition(msg.into())
}

fn w(s: &str) -> PaddedWord {
    PaddedWord::from(s)
}

fn ideal_target(m: &OrderedMonoid, label: &str, gen: Element) -> Target {
    Target::Monoid {
        label: format!("{label} ⟨{}⟩", show_word(m.monoid.name(gen))),
        monoid: m.clone(),
        ideal: ideal_generated(m, &[gen]),
    }
}

/// Interleaves Alice's and Bob's per-bit slot words into one matrix row.
fn row(alice: &[&str], bob: &[&str]) -> Vec<PaddedWord> {
    alice
        .iter()
        .zip(bob)
        .flat_map(|(a, b)| [w(a), w(b)])
        .collect()
}

/// PDISJ into `IP_q`: each bit is copied and both players append `q` ones.
pub fn pdisj_to_ipq(q: usize) -> Result<Reduction> {
    if q < 2 {
        return Err(side("IP_q needs q ≥ 2"));
    }
    let ones = "1".repeat(q);
    Ok(Reduction::Local(LocalReduction::new(
        format!("pdisj_to_ipq(q={q})"),
        BuiltinKind::Pdisj,
        [row(&["0"], &["0"]), row(&["1"], &["1"])],
        (w(""), w("")),
        (w(&ones), w(&ones)),
        Target::InnerProduct { q },
        Polarity::AcceptIsOne,
    )?))
}

/// Splits `v` as `w1_1 w2_1 … w1_k w2_k` with `w1 = w1_1…w1_k` and
/// `w2 = w2_1…w2_k`, using the fewest blocks; ties go to the alignment
/// that takes letters from `w1` earliest.
pub fn shuffle_pieces(v: &str, w1: &str, w2: &str) -> Option<(Vec<String>, Vec<String>)> {
    const MAX_SHUFFLE_LEN: usize = 20;
    let (v, w1, w2): (Vec<char>, Vec<char>, Vec<char>) = (
        v.chars().collect(),
        w1.chars().collect(),
        w2.chars().collect(),
    );
    if v.len() != w1.len() + w2.len() || v.len() > MAX_SHUFFLE_LEN {
        return None;
    }
    fn blocks(labels: &[bool]) -> usize {
        // `false` takes from w1, `true` from w2
        let runs = 1 + labels.windows(2).filter(|p| p[0] != p[1]).count();
        let lead = usize::from(labels.first() == Some(&true));
        let tail = usize::from(labels.last() == Some(&false));
        (runs + lead + tail) / 2
    }
    fn search(
        v: &[char],
        w1: &[char],
        w2: &[char],
        labels: &mut Vec<bool>,
        best: &mut Option<(usize, Vec<bool>)>,
    ) {
        let (i, j) = (
            labels.iter().filter(|&&b| !b).count(),
            labels.iter().filter(|&&b| b).count(),
        );
        if labels.len() == v.len() {
            let k = blocks(labels);
            if best.as_ref().map_or(true, |(b, _)| k < *b) {
                *best = Some((k, labels.clone()));
            }
            return;
        }
        let c = v[labels.len()];
        for (from2, ok) in [
            (false, i < w1.len() && w1[i] == c),
            (true, j < w2.len() && w2[j] == c),
        ] {
            if ok {
                labels.push(from2);
                search(v, w1, w2, labels, best);
                labels.pop();
            }
        }
    }
    let mut best = None;
    search(&v, &w1, &w2, &mut Vec::new(), &mut best);
    let (k, labels) = best?;
    let (mut p1, mut p2) = (vec![String::new(); k], vec![String::new(); k]);
    let mut block = 0;
    for (idx, (&from2, &c)) in labels.iter().zip(&v).enumerate() {
        if idx > 0 && !from2 && labels[idx - 1] {
            block += 1;
        }
        if from2 {
            &mut p2[block]
        } else {
            &mut p1[block]
        }
        .push(c);
    }
    Some((p1, p2))
}

/// PDISJ into `(M, ⟨eval u⟩)` from `u = w1 w2` idempotent and a shuffle `v`
/// of `w1`, `w2` with `eval(uvu) ≰ eval(u)`.
pub fn pdisj_to_shuffle(
    m: &OrderedMonoid,
    label: &str,
    u: &str,
    w1: &str,
    w2: &str,
    v: &str,
) -> Result<Reduction> {
    if u.is_empty() {
        return Err(side("u must be nonempty"));
    }
    if format!("{w1}{w2}") != u {
        return Err(side(format!("u = {u} is not w1 w2 = {w1}{w2}")));
    }
    if !is_shuffle(v, w1, w2) {
        return Err(side(format!("{v} is not a shuffle of {w1} and {w2}")));
    }
    let (p1, p2) = shuffle_pieces(v, w1, w2).ok_or_else(|| side("shuffle is too long"))?;
    let mm = &m.monoid;
    let eu = mm.eval_str(u)?;
    if !mm.is_idempotent(eu) {
        return Err(side(format!("eval({u}) is not idempotent")));
    }
    if m.leq(mm.eval_str(&format!("{u}{v}{u}"))?, eu) {
        return Err(side(format!("eval(uvu) ≤ eval(u) for u = {u}, v = {v}")));
    }
    let k = p1.len();
    let eps = vec![""; k - 1];
    let p1: Vec<&str> = p1.iter().map(String::as_str).collect();
    let p2: Vec<&str> = p2.iter().map(String::as_str).collect();
    let a0: Vec<&str> = std::iter::once(w1)
        .chain(eps.iter().copied())
        .chain(eps.iter().copied())
        .collect();
    let b0: Vec<&str> = eps.iter().copied().chain(p2.iter().copied()).collect();
    let a1: Vec<&str> = p1.iter().copied().chain(eps.iter().copied()).collect();
    let b1: Vec<&str> = p2.iter().copied().chain(eps.iter().copied()).collect();
    let pad = PaddedWord::padding(u.chars().count());
    Ok(Reduction::Local(LocalReduction::new(
        format!("pdisj_to_shuffle({label}, u={u}, v={v})"),
        BuiltinKind::Pdisj,
        [row(&a0, &b0), row(&a1, &b1)],
        (w(u), pad.clone()),
        (pad, w(u)),
        ideal_target(m, label, eu),
        Polarity::AcceptIsOne,
    )?))
}

/// Least `k ≥ 1` with `x^k = 1`, if `x` is invertible.
fn group_order(m: &OrderedMonoid, x: Element) -> Option<usize> {
    let mm = &m.monoid;
    (1..=mm.size()).find(|&k| mm.pow(x, k) == mm.identity())
}

/// `IP_q` into a group through the commutator `[a, b]` of order `q`.
pub fn ipq_to_group(m: &OrderedMonoid, label: &str, a: &str, b: &str) -> Result<Reduction> {
    let mm = &m.monoid;
    let (ea, eb) = (mm.eval_str(a)?, mm.eval_str(b)?);
    let inverse = |x: Element, word: &str| {
        group_order(m, x)
            .map(|k| mm.pow(x, k - 1))
            .ok_or_else(|| side(format!("{} is not invertible", show_word(word))))
    };
    let (ia, ib) = (inverse(ea, a)?, inverse(eb, b)?);
    let c = mm.product([ia, ib, ea, eb]);
    let q = group_order(m, c).expect("products of units are units");
    if q < 2 {
        return Err(side(format!("{a} and {b} commute")));
    }
    let minimal: Vec<Element> = mm
        .elements()
        .filter(|&x| mm.elements().all(|y| y == x || !m.leq(y, x)))
        .collect();
    let bottom = if minimal.contains(&mm.identity()) {
        mm.identity()
    } else {
        *minimal
            .first()
            .ok_or_else(|| side("order has no minimal element"))?
    };
    let target = ideal_target(m, label, bottom);
    let name = |x: Element| mm.name(x).to_string();
    Ok(Reduction::Local(LocalReduction::new(
        format!("ipq_to_group({label}, a={a}, b={b})"),
        BuiltinKind::Ip(q),
        [
            row(&["", ""], &["", ""]),
            row(&[&name(ia), &name(ea)], &[&name(ib), &name(eb)]),
        ],
        (w(""), w("")),
        (w(mm.name(bottom)), w("")),
        target,
        Polarity::AcceptIsOne,
    )?))
}

/// `IP_q` into a `T_q` monoid from idempotents `e`, `f` with `(ef)^q e = e`.
pub fn ipq_to_tq(m: &OrderedMonoid, label: &str, e: &str, f: &str) -> Result<Reduction> {
    let mm = &m.monoid;
    let (ee, ef) = (mm.eval_str(e)?, mm.eval_str(f)?);
    for (x, word) in [(ee, e), (ef, f)] {
        if !mm.is_idempotent(x) {
            return Err(side(format!("{} is not idempotent", show_word(word))));
        }
    }
    let period = mm.mul(ee, ef);
    let q = (1..=mm.size())
        .find(|&r| mm.mul(mm.pow(period, r), ee) == ee)
        .ok_or_else(|| side("(ef)^r e never returns to e"))?;
    if q < 2 {
        return Err(side("efe = e, so the period is 1"));
    }
    let efq = format!("{e}{f}").repeat(q);
    Ok(Reduction::Local(LocalReduction::new(
        format!("ipq_to_tq({label}, e={e}, f={f})"),
        BuiltinKind::Ip(q),
        [
            row(&[&format!("{e}{efq}")], &[&format!("{efq}{e}")]),
            row(&[e], &[&format!("{f}{e}")]),
        ],
        (w(""), w("")),
        (w(""), w("")),
        ideal_target(m, label, ee),
        Polarity::AcceptIsOne,
    )?))
}

/// LT into `(M, ⟨ab⟩)` for `ab ≠ ba` and `ba ≰ ab`, with `2^n` positions.
pub fn lt_to_noncommutative(m: &OrderedMonoid, label: &str, a: &str, b: &str) -> Result<Reduction> {
    let mm = &m.monoid;
    let (ea, eb) = (mm.eval_str(a)?, mm.eval_str(b)?);
    let (ab, ba) = (mm.mul(ea, eb), mm.mul(eb, ea));
    if ab == ba {
        return Err(side(format!("{a} and {b} commute")));
    }
    if m.leq(ba, ab) {
        return Err(side("ba ≤ ab; swap a and b"));
    }
    let one = mm.identity();
    let place = move |x: Element| -> super::PositionMap {
        Arc::new(move |bits: &[bool]| {
            let pos = bits
                .iter()
                .fold(0usize, |acc, &bit| acc << 1 | usize::from(bit));
            let mut seq = vec![one; 1 << bits.len()];
            seq[pos] = x;
            seq
        })
    };
    Ok(Reduction::Rectangular(RectangularReduction {
        name: format!("lt_to_noncommutative({label}, a={a}, b={b})"),
        source: BuiltinKind::Lt,
        length: |n| 1 << n,
        length_label: "2^n",
        alice: place(ea),
        bob: place(eb),
        target: ideal_target(m, label, ab),
        polarity: Polarity::AcceptIsOne,
    }))
}

/// PIP₂ into `L5` with the fixed 2 × 8 matrix and a trailing `b` for Alice.
/// The consistent variant lands 1-inputs outside the language.
pub fn pip2_to_l5(variant: Pip2Variant) -> Result<Reduction> {
    let polarity = match variant {
        Pip2Variant::OracleConsistent => Polarity::AcceptIsZero,
        Pip2Variant::PaperLiteral => Polarity::AcceptIsOne,
    };
    let source = BuiltinKind::Pip2(variant);
    let entries = |s: &str| {
        s.split(' ')
            .map(|c| w(if c == "ε" { "" } else { c }))
            .collect::<Vec<_>>()
    };
    Ok(Reduction::Local(LocalReduction::new(
        format!("pip2_to_L5({})", source.name()),
        source,
        [entries("a ε ε b a b ε ε"), entries("a b ε a b a ε b")],
        (w(""), w("")),
        (w("b"), w("")),
        Target::Language {
            label: "L5".into(),
            dfa: builtin_language("L5")?,
        },
        polarity,
    )?))
}

/// Instantiates a named reduction on its default monoid. `q` selects the
/// modulus for `pdisj_to_ipq` (default 2) and `ipq_to_tq` (default 3).
pub fn builtin_reduction(name: &str, q: Option<usize>) -> Result<Reduction> {
    let is = |s: &str| name.eq_ignore_ascii_case(s);
    let r = if is("pdisj_to_ipq") {
        pdisj_to_ipq(q.unwrap_or(2))?
    } else if is("pdisj_to_shuffle") {
        pdisj_to_shuffle(
            &builtin_monoid("BA2_PLUS")?,
            "BA2_PLUS",
            "ab",
            "a",
            "b",
            "ba",
        )?
    } else if is("ipq_to_group") {
        ipq_to_group(&builtin_monoid("S3")?, "S3", "a", "b")?
    } else if is("ipq_to_tq") {
        let label = format!("TQ_EXAMPLE({})", q.unwrap_or(3));
        ipq_to_tq(&builtin_monoid(&label)?, &label, "e", "f")?
    } else if is("lt_to_noncommutative") {
        lt_to_noncommutative(&builtin_monoid("BA2_PLUS")?, "BA2_PLUS", "a", "b")?
    } else if is("pip2_to_L5") {
        pip2_to_l5(Pip2Variant::OracleConsistent)?
    } else if is("pip2_to_L5_PAPER_LITERAL") {
        pip2_to_l5(Pip2Variant::PaperLiteral)?
    } else {
        return Err(Error::UnknownBuiltin {
            kind: "reduction",
            name: name.to_string(),
        });
    };
    if let (Some(q), BuiltinKind::Ip(found)) = (q, r.source()) {
        if q != found {
            return Err(side(format!("{name} reduces from IP_{found}, not IP_{q}")));
        }
    }
    Ok(r)
}
