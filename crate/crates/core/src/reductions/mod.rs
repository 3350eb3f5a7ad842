//! Rectangular and local reductions, their exhaustive verification, the
//! monoid-to-language encoding, and the bounded non-existence search.

mod builtin;
mod encoding;
mod nonexistence;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

pub use builtin::{
    builtin_reduction, ipq_to_group, ipq_to_tq, lt_to_noncommutative, pdisj_to_ipq,
    pdisj_to_shuffle, pip2_to_l5, shuffle_pieces, BUILTIN_REDUCTIONS,
};
pub use encoding::{
    encode_monoid_as_language, monoid_encoding, EncodedInstance, MonoidEncoding, WitnessEntry,
    WitnessTable,
};
pub use nonexistence::{
    search_local_reduction_nonexistence, NonexistenceReport, SearchMode, SearchStatus, L5_BASES,
    MAX_S_MAX,
};

use crate::automata::Dfa;
use crate::commcc::BuiltinKind;
use crate::error::{Error, Result};
use crate::monoid::{Element, OrderIdeal, OrderedMonoid};
use crate::word::{PaddedWord, EPSILON};

/// Whether target membership encodes the source's 1-inputs or its 0-inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Polarity {
    #[serde(rename = "ACCEPT_IS_ONE")]
    AcceptIsOne,
    #[serde(rename = "ACCEPT_IS_ZERO")]
    AcceptIsZero,
}

impl Polarity {
    pub fn name(self) -> &'static str {
        match self {
            Polarity::AcceptIsOne => "ACCEPT_IS_ONE",
            Polarity::AcceptIsZero => "ACCEPT_IS_ZERO",
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Polarity::AcceptIsOne => Polarity::AcceptIsZero,
            Polarity::AcceptIsZero => Polarity::AcceptIsOne,
        }
    }

    /// Source value predicted by a membership outcome.
    pub fn predict(self, member: bool) -> bool {
        member == (self == Polarity::AcceptIsOne)
    }
}

/// Where a reduction lands.
#[derive(Debug, Clone)]
pub enum Target {
    /// Membership of the product in an order ideal; words are over the
    /// generator letters.
    Monoid {
        label: String,
        monoid: OrderedMonoid,
        ideal: OrderIdeal,
    },
    /// Membership of the interleaved word in a regular language.
    Language { label: String, dfa: Dfa },
    /// `IP_q` on the concatenated bit strings; slots hold `0`/`1` symbols.
    InnerProduct { q: usize },
}

impl Target {
    pub fn label(&self) -> String {
        match self {
            Target::Monoid { label, .. } | Target::Language { label, .. } => label.clone(),
            Target::InnerProduct { q } => format!("IP_{q}"),
        }
    }

    /// Membership of an instance.
    pub fn decide(&self, instance: &Instance) -> Result<bool> {
        match self {
            Target::Monoid { monoid, ideal, .. } => {
                let x = monoid.monoid.eval_str(&instance.word().unpadded())?;
                Ok(ideal.contains(x))
            }
            Target::Language { dfa, .. } => dfa.accepts(&instance.word()),
            Target::InnerProduct { q } => {
                let bits = |w: &PaddedWord| -> Result<Vec<bool>> {
                    w.symbols()
                        .iter()
                        .map(|&c| match c {
                            '0' | EPSILON => Ok(false),
                            '1' => Ok(true),
                            other => Err(Error::UnknownLetter(other)),
                        })
                        .collect()
                };
                let mut common = 0;
                for (a, b) in instance.alice.iter().zip(&instance.bob) {
                    let (a, b) = (bits(a)?, bits(b)?);
                    common += a.iter().zip(&b).filter(|(x, y)| **x && **y).count();
                }
                Ok(common % q == 0)
            }
        }
    }
}

/// A reduced input: Alice's and Bob's slot words. The target reads
/// `alice[0] bob[0] alice[1] bob[1] …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub alice: Vec<PaddedWord>,
    pub bob: Vec<PaddedWord>,
}

impl Instance {
    pub fn word(&self) -> PaddedWord {
        let mut out = PaddedWord::empty();
        for (a, b) in self.alice.iter().zip(&self.bob) {
            out.extend_from(a);
            out.extend_from(b);
        }
        out
    }
}

fn pad_all(words: &mut [PaddedWord]) {
    let len = words.iter().map(PaddedWord::len).max().unwrap_or(0);
    for w in words {
        *w = w.padded_to(len);
    }
}

/// A reduction applying one fixed `2 × 2s` matrix bitwise. Row `z` lists
/// `a(z)_1 b(z)_1 … a(z)_s b(z)_s`; Alice reads the `a` entries of row `x_i`
/// and Bob the `b` entries of row `y_i`.
#[derive(Debug, Clone)]
pub struct LocalReduction {
    pub name: String,
    pub source: BuiltinKind,
    pub matrix: [Vec<PaddedWord>; 2],
    pub alice_prefix: PaddedWord,
    pub bob_prefix: PaddedWord,
    pub alice_suffix: PaddedWord,
    pub bob_suffix: PaddedWord,
    pub target: Target,
    pub polarity: Polarity,
}

impl LocalReduction {
    /// Builds a local reduction, padding all matrix entries to one length and
    /// each prefix (suffix) pair to a common length.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        source: BuiltinKind,
        matrix: [Vec<PaddedWord>; 2],
        prefix: (PaddedWord, PaddedWord),
        suffix: (PaddedWord, PaddedWord),
        target: Target,
        polarity: Polarity,
    ) -> Result<Self> {
        let width = matrix[0].len();
        if width == 0 || width % 2 != 0 || matrix[1].len() != width {
            return Err(Error::Precondition(
                "local reduction matrix needs two rows of 2s entries".into(),
            ));
        }
        let [mut r0, mut r1] = matrix;
        let mut entries: Vec<PaddedWord> = r0.drain(..).chain(r1.drain(..)).collect();
        pad_all(&mut entries);
        let r1 = entries.split_off(width);
        let mut pre = [prefix.0, prefix.1];
        let mut suf = [suffix.0, suffix.1];
        pad_all(&mut pre);
        pad_all(&mut suf);
        let [alice_prefix, bob_prefix] = pre;
        let [alice_suffix, bob_suffix] = suf;
        Ok(LocalReduction {
            name: name.into(),
            source,
            matrix: [entries, r1],
            alice_prefix,
            bob_prefix,
            alice_suffix,
            bob_suffix,
            target,
            polarity,
        })
    }

    /// Number `s` of slots each player produces per input bit.
    pub fn width(&self) -> usize {
        self.matrix[0].len() / 2
    }

    fn apply(&self, x: &[bool], y: &[bool]) -> Instance {
        let s = self.width();
        let mut alice = vec![self.alice_prefix.clone()];
        let mut bob = vec![self.bob_prefix.clone()];
        for (&xi, &yi) in x.iter().zip(y) {
            for k in 0..s {
                alice.push(self.matrix[usize::from(xi)][2 * k].clone());
                bob.push(self.matrix[usize::from(yi)][2 * k + 1].clone());
            }
        }
        alice.push(self.alice_suffix.clone());
        bob.push(self.bob_suffix.clone());
        Instance { alice, bob }
    }
}

/// Per-player position functions producing a sequence of monoid elements.
pub type PositionMap = Arc<dyn Fn(&[bool]) -> Vec<Element> + Send + Sync>;

/// A general rectangular reduction into a monoid: Alice's input fixes the
/// odd positions and Bob's the even ones.
#[derive(Clone)]
pub struct RectangularReduction {
    pub name: String,
    pub source: BuiltinKind,
    /// Length `t` as a function of the input length.
    pub length: fn(usize) -> usize,
    pub length_label: &'static str,
    pub alice: PositionMap,
    pub bob: PositionMap,
    pub target: Target,
    pub polarity: Polarity,
}

impl fmt::Debug for RectangularReduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RectangularReduction")
            .field("name", &self.name)
            .field("source", &self.source)
            .field("length", &self.length_label)
            .field("target", &self.target.label())
            .field("polarity", &self.polarity)
            .finish()
    }
}

impl RectangularReduction {
    fn apply(&self, x: &[bool], y: &[bool]) -> Result<Instance> {
        let Target::Monoid { monoid, .. } = &self.target else {
            return Err(Error::Precondition(
                "rectangular reductions target monoids".into(),
            ));
        };
        let t = (self.length)(x.len());
        let (a, b) = ((self.alice)(x), (self.bob)(y));
        if a.len() != t || b.len() != t {
            return Err(Error::Precondition(format!(
                "position functions must produce {t} elements each"
            )));
        }
        let width = monoid
            .monoid
            .names()
            .iter()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(0);
        let word = |e: Element| PaddedWord::from(monoid.monoid.name(e)).padded_to(width);
        Ok(Instance {
            alice: a.into_iter().map(word).collect(),
            bob: b.into_iter().map(word).collect(),
        })
    }
}

/// Serializable summary of a reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Descriptor {
    pub name: String,
    pub source: String,
    pub target: String,
    pub polarity: Polarity,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prefix: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suffix: Option<Vec<String>>,
}

#[derive(Debug, Clone)]
pub enum Reduction {
    Local(LocalReduction),
    Rectangular(RectangularReduction),
}

impl Reduction {
    pub fn name(&self) -> &str {
        match self {
            Reduction::Local(r) => &r.name,
            Reduction::Rectangular(r) => &r.name,
        }
    }

    pub fn source(&self) -> BuiltinKind {
        match self {
            Reduction::Local(r) => r.source,
            Reduction::Rectangular(r) => r.source,
        }
    }

    pub fn target(&self) -> &Target {
        match self {
            Reduction::Local(r) => &r.target,
            Reduction::Rectangular(r) => &r.target,
        }
    }

    pub fn polarity(&self) -> Polarity {
        match self {
            Reduction::Local(r) => r.polarity,
            Reduction::Rectangular(r) => r.polarity,
        }
    }

    /// The same reduction claiming the opposite polarity.
    pub fn with_polarity(&self, polarity: Polarity) -> Reduction {
        let mut r = self.clone();
        match &mut r {
            Reduction::Local(l) => l.polarity = polarity,
            Reduction::Rectangular(l) => l.polarity = polarity,
        }
        r
    }

    fn source_label(&self) -> String {
        match self.source() {
            BuiltinKind::Ip(q) => format!("IP_{q}"),
            kind => kind.name().to_string(),
        }
    }

    pub fn descriptor_doc(&self) -> Descriptor {
        let show = |ws: &[PaddedWord]| {
            ws.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("/")
        };
        match self {
            Reduction::Local(r) => Descriptor {
                name: r.name.clone(),
                source: self.source_label(),
                target: r.target.label(),
                polarity: r.polarity,
                length: None,
                matrix: Some(vec![show(&r.matrix[0]), show(&r.matrix[1])]),
                prefix: Some(vec![r.alice_prefix.to_string(), r.bob_prefix.to_string()]),
                suffix: Some(vec![r.alice_suffix.to_string(), r.bob_suffix.to_string()]),
            },
            Reduction::Rectangular(r) => Descriptor {
                name: r.name.clone(),
                source: self.source_label(),
                target: r.target.label(),
                polarity: r.polarity,
                length: Some(r.length_label),
                matrix: None,
                prefix: None,
                suffix: None,
            },
        }
    }

    /// Structured text description.
    pub fn descriptor(&self) -> String {
        toml::to_string(&self.descriptor_doc()).expect("descriptor serializes")
    }
}

/// Transforms one in-domain input pair.
pub fn apply_reduction(r: &Reduction, x: &[bool], y: &[bool]) -> Result<Instance> {
    if x.len() != y.len() || x.is_empty() {
        return Err(Error::OutOfDomain(
            "inputs must be nonempty and of equal length".into(),
        ));
    }
    if r.source().value(x, y).is_none() {
        return Err(Error::OutOfDomain(format!(
            "({}, {}) is outside the promise of {}",
            bits(x),
            bits(y),
            r.source_label()
        )));
    }
    match r {
        Reduction::Local(l) => Ok(l.apply(x, y)),
        Reduction::Rectangular(l) => l.apply(x, y),
    }
}

fn bits(x: &[bool]) -> String {
    x.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub x: String,
    pub y: String,
    pub expected: u8,
    pub member: bool,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub polarity: Polarity,
    pub status: Status,
    pub n_range: [usize; 2],
    pub checked_pairs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn serialize(&self) -> String {
        toml::to_string(self).expect("report serializes")
    }
}

/// Checks every in-domain pair for `1 ≤ n ≤ n_max`, in order of `n`, then
/// `x`, then `y`, stopping at the first counterexample.
pub fn verify_reduction(r: &Reduction, n_max: usize) -> Result<VerificationReport> {
    const MAX_VERIFY_N: usize = 12;
    if n_max == 0 || n_max > MAX_VERIFY_N {
        return Err(Error::SizeCap {
            what: "verification input length",
            needed: n_max,
            cap: MAX_VERIFY_N,
        });
    }
    let mut report = VerificationReport {
        name: r.name().to_string(),
        polarity: r.polarity(),
        status: Status::Pass,
        n_range: [1, n_max],
        checked_pairs: 0,
        counterexample: None,
    };
    let source = r.source();
    for n in 1..=n_max {
        let to_bits =
            |v: usize| -> Vec<bool> { (0..n).map(|j| v >> (n - 1 - j) & 1 == 1).collect() };
        for xv in 0..1usize << n {
            let x = to_bits(xv);
            for yv in 0..1usize << n {
                let y = to_bits(yv);
                let Some(expected) = source.value(&x, &y) else {
                    continue;
                };
                let instance = apply_reduction(r, &x, &y)?;
                let member = r.target().decide(&instance)?;
                report.checked_pairs += 1;
                if r.polarity().predict(member) != expected {
                    report.status = Status::Fail;
                    report.counterexample = Some(Counterexample {
                        n,
                        x: bits(&x),
                        y: bits(&y),
                        expected: u8::from(expected),
                        member,
                        word: instance.word().to_string(),
                    });
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polarity_prediction() {
        assert!(Polarity::AcceptIsOne.predict(true));
        assert!(!Polarity::AcceptIsZero.predict(true));
        assert_eq!(Polarity::AcceptIsOne.flipped(), Polarity::AcceptIsZero);
    }

    #[test]
    fn local_matrix_is_padded() {
        let w = |s: &str| PaddedWord::from(s);
        let r = LocalReduction::new(
            "t",
            BuiltinKind::Pdisj,
            [vec![w("ab"), w("")], vec![w("a"), w("b")]],
            (w("ab"), w("")),
            (w(""), w("")),
            Target::InnerProduct { q: 2 },
            Polarity::AcceptIsOne,
        )
        .unwrap();
        assert!(r.matrix.iter().flatten().all(|e| e.len() == 2));
        assert_eq!(r.bob_prefix.len(), 2);
        assert_eq!(r.width(), 1);
        assert!(LocalReduction::new(
            "t",
            BuiltinKind::Pdisj,
            [vec![w("a")], vec![w("a")]],
            (w(""), w("")),
            (w(""), w("")),
            Target::InnerProduct { q: 2 },
            Polarity::AcceptIsOne,
        )
        .is_err());
    }

    #[test]
    fn instance_word_interleaves_slots() {
        let w = |s: &str| PaddedWord::from(s);
        let i = Instance {
            alice: vec![w("a"), w("c")],
            bob: vec![w("b"), w("d")],
        };
        assert_eq!(i.word().unpadded(), "abcd");
    }
}
