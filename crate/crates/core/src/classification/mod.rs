//! Sorting languages and ordered monoids into complexity tiers, with certificates.

mod builtin;
mod polcom;
mod shuffle;

pub use builtin::{builtin_monoid, tq_example, BUILTIN_MONOIDS};
pub use polcom::{find_polcom_exclusion_witness, PolComWitness};
pub use shuffle::{find_shuffle_witness, is_shuffle, shuffles, ShuffleWitness};

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::monoid::{
    divides, find_tq, maximal_subgroups, syntactic_ordered_monoid, DivisionCertificate, Element,
    OrderedMonoid, DEFAULT_ELEMENT_CAP,
};

pub const DEFAULT_MAX_WITNESS_LEN: usize = 6;
pub const MAX_WITNESS_LEN: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tier {
    /// Commutative: constant cost.
    Constant,
    /// Non-commutative with no linear certificate and no exclusion evidence.
    LogLower,
    /// A certificate for a linear lower bound was found.
    LinearLower,
    /// Non-commutative, outside the polynomial closure of commutative
    /// languages, yet no linear certificate within the search bounds.
    UnresolvedGap,
}

impl Tier {
    pub fn name(self) -> &'static str {
        match self {
            Tier::Constant => "CONSTANT",
            Tier::LogLower => "LOG_LOWER",
            Tier::LinearLower => "LINEAR_LOWER",
            Tier::UnresolvedGap => "UNRESOLVED_GAP",
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Commutative,
    /// `x·y ≰ y·x`.
    NonCommutingPair {
        x: Element,
        y: Element,
    },
    Tq {
        q: usize,
        e: Element,
        f: Element,
    },
    NonAbelianSubgroup {
        idempotent: Element,
        order: usize,
        g: Element,
        h: Element,
    },
    Division {
        divisor: &'static str,
        certificate: DivisionCertificate,
    },
    Shuffle(ShuffleWitness),
    PolComExclusion(PolComWitness),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Commutative => "commutative",
            Certificate::NonCommutingPair { .. } => "non-commuting-pair",
            Certificate::Tq { .. } => "tq",
            Certificate::NonAbelianSubgroup { .. } => "non-abelian-subgroup",
            Certificate::Division { .. } => "division",
            Certificate::Shuffle(_) => "shuffle",
            Certificate::PolComExclusion(_) => "polcom-exclusion",
        }
    }

    pub fn is_linear(&self) -> bool {
        matches!(
            self,
            Certificate::Tq { .. }
                | Certificate::NonAbelianSubgroup { .. }
                | Certificate::Division { .. }
                | Certificate::Shuffle(_)
        )
    }

    /// Re-checks the certificate against `m` by direct evaluation.
    pub fn replay(&self, m: &OrderedMonoid) -> bool {
        let mm = &m.monoid;
        let valid = |x: Element| x < mm.size();
        match self {
            Certificate::Commutative => mm.is_commutative(),
            &Certificate::NonCommutingPair { x, y } => {
                valid(x) && valid(y) && !m.leq(mm.mul(x, y), mm.mul(y, x))
            }
            &Certificate::Tq { q, e, f } => {
                if !(valid(e) && valid(f) && q > 1 && mm.is_idempotent(e) && mm.is_idempotent(f)) {
                    return false;
                }
                let ef = mm.mul(e, f);
                let orbit = |i| mm.mul(mm.pow(ef, i), e);
                orbit(q) == e && (1..q).all(|r| orbit(r) != e)
            }
            &Certificate::NonAbelianSubgroup {
                idempotent, g, h, ..
            } => {
                let e = idempotent;
                let in_group = |x: Element| {
                    mm.mul(mm.mul(e, x), e) == x
                        && mm
                            .elements()
                            .any(|y| mm.mul(x, y) == e && mm.mul(y, x) == e)
                };
                valid(e)
                    && valid(g)
                    && valid(h)
                    && mm.is_idempotent(e)
                    && in_group(g)
                    && in_group(h)
                    && mm.mul(g, h) != mm.mul(h, g)
            }
            Certificate::Division {
                divisor,
                certificate,
            } => builtin_monoid(divisor)
                .map(|n| certificate.verify(&n, m))
                .unwrap_or(false),
            Certificate::Shuffle(w) => w.replay(m),
            Certificate::PolComExclusion(w) => w.replay(m),
        }
    }

    /// Witness data as named strings; elements are shown by their names.
    pub fn witness(&self, m: &OrderedMonoid) -> BTreeMap<String, String> {
        let name = |x: Element| show(m.monoid.name(x));
        let mut out = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            out.insert(k.to_string(), v);
        };
        match self {
            Certificate::Commutative => {}
            &Certificate::NonCommutingPair { x, y } => {
                put("x", name(x));
                put("y", name(y));
                put("relation", "xy ≰ yx".into());
            }
            &Certificate::Tq { q, e, f } => {
                put("q", q.to_string());
                put("e", name(e));
                put("f", name(f));
            }
            &Certificate::NonAbelianSubgroup {
                idempotent,
                order,
                g,
                h,
            } => {
                put("idempotent", name(idempotent));
                put("order", order.to_string());
                put("g", name(g));
                put("h", name(h));
            }
            Certificate::Division {
                divisor,
                certificate,
            } => {
                put("divisor", divisor.to_string());
                for (c, x) in &certificate.preimages {
                    put(&format!("preimage.{c}"), name(*x));
                }
                put("submonoid_size", certificate.map.len().to_string());
            }
            Certificate::Shuffle(w) => {
                put("u", show(&w.u));
                put("w1", show(&w.w1));
                put("w2", show(&w.w2));
                put("v", show(&w.v));
            }
            Certificate::PolComExclusion(w) => {
                put("u", show(&w.u));
                put("v", show(&w.v));
            }
        }
        out
    }
}

fn show(w: &str) -> String {
    crate::word::show_word(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub max_witness_len: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_witness_len: DEFAULT_MAX_WITNESS_LEN,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub tier: Tier,
    pub certificates: Vec<Certificate>,
    pub bounds: SearchBounds,
    /// Checks that could not run, with the reason.
    pub skipped: Vec<String>,
    pub monoid: OrderedMonoid,
}

impl Classification {
    pub fn certificate(&self, kind: &str) -> Option<&Certificate> {
        self.certificates.iter().find(|c| c.kind() == kind)
    }

    pub fn report(&self) -> String {
        #[derive(Serialize)]
        struct Cert {
            kind: &'static str,
            replay: &'static str,
            witness: BTreeMap<String, String>,
        }
        #[derive(Serialize)]
        struct Report {
            tier: &'static str,
            monoid_size: usize,
            #[serde(skip_serializing_if = "Vec::is_empty")]
            skipped: Vec<String>,
            bounds: SearchBounds,
            certificates: Vec<Cert>,
        }
        let report = Report {
            tier: self.tier.name(),
            monoid_size: self.monoid.size(),
            skipped: self.skipped.clone(),
            bounds: self.bounds,
            certificates: self
                .certificates
                .iter()
                .map(|c| Cert {
                    kind: c.kind(),
                    replay: if c.replay(&self.monoid) {
                        "pass"
                    } else {
                        "fail"
                    },
                    witness: c.witness(&self.monoid),
                })
                .collect(),
        };
        toml::to_string(&report).expect("report serializes")
    }
}

/// Classifies the language of `d` through its syntactic ordered monoid.
pub fn classify_language(d: &Dfa, bounds: SearchBounds) -> Result<Classification> {
    let syntactic = syntactic_ordered_monoid(d, DEFAULT_ELEMENT_CAP)?;
    classify_nondet(&syntactic.ordered, bounds)
}

/// Runs every certificate search on `m` and assigns the tier they justify.
pub fn classify_nondet(m: &OrderedMonoid, bounds: SearchBounds) -> Result<Classification> {
    if bounds.max_witness_len > MAX_WITNESS_LEN {
        return Err(Error::SizeCap {
            what: "witness length",
            needed: bounds.max_witness_len,
            cap: MAX_WITNESS_LEN,
        });
    }
    let mm = &m.monoid;
    let mut certificates = Vec::new();
    let mut skipped = Vec::new();
    let finish = |tier, certificates, skipped| {
        Ok(Classification {
            tier,
            certificates,
            bounds,
            skipped,
            monoid: m.clone(),
        })
    };
    let Some((x, y)) = mm.commutativity_counterexample() else {
        return finish(Tier::Constant, vec![Certificate::Commutative], skipped);
    };
    // xy ≠ yx, so antisymmetry rules out both inequalities holding
    let (x, y) = if m.leq(mm.mul(x, y), mm.mul(y, x)) {
        (y, x)
    } else {
        (x, y)
    };
    certificates.push(Certificate::NonCommutingPair { x, y });

    if let Some(w) = find_tq(mm) {
        certificates.push(Certificate::Tq {
            q: w.q,
            e: w.e,
            f: w.f,
        });
    }
    if let Some((g, (a, b))) = maximal_subgroups(mm)
        .iter()
        .find_map(|g| g.noncommuting_pair(mm).map(|p| (g.clone(), p)))
    {
        certificates.push(Certificate::NonAbelianSubgroup {
            idempotent: g.idempotent,
            order: g.order(),
            g: a,
            h: b,
        });
    }
    for divisor in ["BA2_PLUS", "U_PLUS"] {
        let n = builtin_monoid(divisor)?;
        match divides(&n, m) {
            Ok(Some(certificate)) => certificates.push(Certificate::Division {
                divisor,
                certificate,
            }),
            Ok(None) => {}
            Err(e) => skipped.push(format!("division by {divisor}: {e}")),
        }
    }
    if let Some(w) = find_shuffle_witness(m, bounds.max_witness_len) {
        certificates.push(Certificate::Shuffle(w));
    }
    let linear = certificates.iter().any(Certificate::is_linear);
    let exclusion = find_polcom_exclusion_witness(m, bounds.max_witness_len);
    let excluded = exclusion.is_some();
    if let Some(w) = exclusion {
        certificates.push(Certificate::PolComExclusion(w));
    }
    let tier = match (linear, excluded) {
        (true, _) => Tier::LinearLower,
        (false, true) => Tier::UnresolvedGap,
        (false, false) => Tier::LogLower,
    };
    finish(tier, certificates, skipped)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::builtin_language;

    fn lang(name: &str) -> Classification {
        classify_language(&builtin_language(name).unwrap(), SearchBounds::default()).unwrap()
    }

    fn all_replay(c: &Classification) -> bool {
        c.certificates.iter().all(|cert| cert.replay(&c.monoid))
    }

    #[test]
    fn z3_is_constant() {
        let c = lang("Z3_LANG");
        assert_eq!(c.tier, Tier::Constant);
        assert!(all_replay(&c));
    }

    #[test]
    fn ba2_is_linear_with_shuffle() {
        let c = lang("BA2_LANG");
        assert_eq!(c.tier, Tier::LinearLower);
        match c.certificate("shuffle") {
            Some(Certificate::Shuffle(w)) => {
                assert_eq!((&*w.u, &*w.w1, &*w.w2, &*w.v), ("ab", "a", "b", "ba"))
            }
            other => panic!("{other:?}"),
        }
        assert!(all_replay(&c));
    }

    #[test]
    fn l5_is_in_the_gap() {
        let c = lang("L5");
        assert_eq!(c.tier, Tier::UnresolvedGap);
        assert!(c.certificates.iter().all(|x| !x.is_linear()));
        match c.certificate("polcom-exclusion") {
            Some(Certificate::PolComExclusion(w)) => assert_eq!((&*w.u, &*w.v), ("abab", "bbaa")),
            other => panic!("{other:?}"),
        }
        assert!(all_replay(&c));
    }

    #[test]
    fn u_minus_is_log() {
        let c = lang("U_MINUS_LANG");
        assert_eq!(c.tier, Tier::LogLower);
        assert!(all_replay(&c));
    }

    #[test]
    fn report_mentions_tier_and_replays() {
        let text = lang("BA2_LANG").report();
        assert!(text.contains("tier = \"LINEAR_LOWER\""));
        assert!(!text.contains("\"fail\""));
    }

    #[test]
    fn tampered_certificates_fail_replay() {
        let c = lang("BA2_LANG");
        let bad = Certificate::Shuffle(ShuffleWitness {
            u: "ab".into(),
            w1: "a".into(),
            w2: "b".into(),
            v: "ab".into(),
        });
        assert!(!bad.replay(&c.monoid));
        assert!(!Certificate::Commutative.replay(&c.monoid));
    }
}
