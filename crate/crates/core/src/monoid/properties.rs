//! Identities and named structural properties.

use std::fmt;
use std::str::FromStr;

use super::{Element, OrderedMonoid, Term};
use crate::error::{Error, Result};

const MAX_VARIABLES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityMode {
    Equals,
    Leq,
}

/// Outcome of an identity check; on failure, the first falsifying assignment
/// in lexicographic order of element tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub counterexample: Option<Vec<(char, Element)>>,
}

/// Checks `lhs = rhs` (or `lhs ≤ rhs`) under every assignment of the
/// variables to elements.
pub fn satisfies_identity(
    m: &OrderedMonoid,
    lhs: &Term,
    rhs: &Term,
    mode: IdentityMode,
) -> Result<IdentityCheck> {
    let mut vars = lhs.variables();
    for v in rhs.variables() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    if vars.len() > MAX_VARIABLES {
        return Err(Error::TooManyVariables(vars.len()));
    }
    let monoid = &m.monoid;
    let omega = monoid.exponent();
    let n = monoid.size();
    let mut values = vec![0; vars.len()];
    loop {
        let mut assign = |c: char| -> Result<Element> {
            Ok(values[vars
                .iter()
                .position(|&v| v == c)
                .expect("collected variable")])
        };
        let l = lhs.eval_with(monoid, omega, &mut assign)?;
        let r = rhs.eval_with(monoid, omega, &mut assign)?;
        let ok = match mode {
            IdentityMode::Equals => l == r,
            IdentityMode::Leq => m.leq(l, r),
        };
        if !ok {
            return Ok(IdentityCheck {
                holds: false,
                counterexample: Some(vars.iter().copied().zip(values.iter().copied()).collect()),
            });
        }
        // odometer, last variable fastest
        let mut i = values.len();
        loop {
            if i == 0 {
                return Ok(IdentityCheck {
                    holds: true,
                    counterexample: None,
                });
            }
            i -= 1;
            values[i] += 1;
            if values[i] < n {
                break;
            }
            values[i] = 0;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Property {
    Commutative,
    Aperiodic,
    Group,
    JTrivial,
    Idempotent,
    LocallyTrivial,
    IdentityIsMaximum,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::Commutative,
        Property::Aperiodic,
        Property::Group,
        Property::JTrivial,
        Property::Idempotent,
        Property::LocallyTrivial,
        Property::IdentityIsMaximum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Commutative => "commutative",
            Property::Aperiodic => "aperiodic",
            Property::Group => "group",
            Property::JTrivial => "j-trivial",
            Property::Idempotent => "idempotent",
            Property::LocallyTrivial => "locally-trivial",
            Property::IdentityIsMaximum => "identity-is-maximum",
        }
    }

    /// The defining identity, except for J-triviality which is checked on ideals.
    fn identity(self) -> Option<(&'static str, &'static str, IdentityMode)> {
        use IdentityMode::*;
        Some(match self {
            Property::Commutative => ("ab", "ba", Equals),
            Property::Aperiodic => ("a^ω", "a^(ω+1)", Equals),
            Property::Group => ("a^ω", "1", Equals),
            Property::Idempotent => ("aa", "a", Equals),
            Property::LocallyTrivial => ("a^ω b a^ω", "a^ω", Equals),
            Property::IdentityIsMaximum => ("a", "1", Leq),
            Property::JTrivial => return None,
        })
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Property::ALL
            .into_iter()
            .find(|p| p.name() == key)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub property: Property,
    pub holds: bool,
    /// Falsifying elements (one, two or three of them) when the property fails.
    pub witness: Vec<Element>,
}

pub fn check_property(m: &OrderedMonoid, prop: Property) -> PropertyCheck {
    let (holds, witness) = match prop.identity() {
        Some((lhs, rhs, mode)) => {
            let lhs: Term = lhs.parse().expect("builtin identity");
            let rhs: Term = rhs.parse().expect("builtin identity");
            let check = satisfies_identity(m, &lhs, &rhs, mode).expect("at most two variables");
            let witness = check
                .counterexample
                .map(|a| a.into_iter().map(|(_, x)| x).collect())
                .unwrap_or_default();
            (check.holds, witness)
        }
        None => match j_trivial_counterexample(m) {
            Some((x, y)) => (false, vec![x, y]),
            None => (true, Vec::new()),
        },
    };
    PropertyCheck {
        property: prop,
        holds,
        witness,
    }
}

/// Two distinct elements generating the same two-sided ideal.
fn j_trivial_counterexample(m: &OrderedMonoid) -> Option<(Element, Element)> {
    let monoid = &m.monoid;
    let ideals: Vec<Vec<bool>> = monoid
        .elements()
        .map(|x| {
            let mut members = vec![false; monoid.size()];
            for p in monoid.elements() {
                let px = monoid.mul(p, x);
                for q in monoid.elements() {
                    members[monoid.mul(px, q)] = true;
                }
            }
            members
        })
        .collect();
    for x in monoid.elements() {
        for y in x + 1..monoid.size() {
            if ideals[x] == ideals[y] {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{builtin_language, BUILTIN_LANGUAGES};
    use crate::monoid::{syntactic_ordered_monoid, FiniteMonoid, DEFAULT_ELEMENT_CAP};

    fn syn(name: &str) -> OrderedMonoid {
        syntactic_ordered_monoid(&builtin_language(name).unwrap(), DEFAULT_ELEMENT_CAP)
            .unwrap()
            .ordered
    }

    fn holds(m: &OrderedMonoid, p: Property) -> bool {
        check_property(m, p).holds
    }

    #[test]
    fn z3_is_a_commutative_group() {
        let z3 = OrderedMonoid::unordered(FiniteMonoid::cyclic_group(3));
        assert!(holds(&z3, Property::Commutative));
        assert!(holds(&z3, Property::Group));
        assert!(!holds(&z3, Property::Aperiodic));
        let ab: Term = "ab".parse().unwrap();
        let ba: Term = "ba".parse().unwrap();
        assert!(
            satisfies_identity(&z3, &ab, &ba, IdentityMode::Equals)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn ba2_not_commutative_with_generator_witness() {
        let m = syn("BA2_LANG");
        let c = check_property(&m, Property::Commutative);
        assert!(!c.holds);
        let (a, b) = (
            m.monoid.generator('a').unwrap(),
            m.monoid.generator('b').unwrap(),
        );
        assert_eq!(c.witness, vec![a, b]);
        assert!(holds(&m, Property::Aperiodic));
        assert!(!holds(&m, Property::JTrivial));
    }

    #[test]
    fn u_monoid_is_aperiodic() {
        let m = syn("U_PLUS_LANG");
        let lhs: Term = "a^ω".parse().unwrap();
        let rhs: Term = "a^(ω+1)".parse().unwrap();
        assert!(
            satisfies_identity(&m, &lhs, &rhs, IdentityMode::Equals)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn shuffle_ideal_has_identity_on_top() {
        let m = syn("CONTAINS_A");
        assert!(holds(&m, Property::IdentityIsMaximum));
        assert!(holds(&m, Property::JTrivial));
        assert!(holds(&m, Property::Idempotent));
        assert!(!holds(&syn("BA2_LANG"), Property::IdentityIsMaximum));
    }

    #[test]
    fn commutative_property_matches_identity_on_builtins() {
        let ab: Term = "ab".parse().unwrap();
        let ba: Term = "ba".parse().unwrap();
        for name in BUILTIN_LANGUAGES {
            let m = syn(name);
            let id = satisfies_identity(&m, &ab, &ba, IdentityMode::Equals)
                .unwrap()
                .holds;
            assert_eq!(id, holds(&m, Property::Commutative), "{name}");
            assert_eq!(id, m.monoid.is_commutative(), "{name}");
        }
    }

    #[test]
    fn locally_trivial_on_trivial_and_not_on_z3() {
        assert!(holds(
            &OrderedMonoid::unordered(FiniteMonoid::trivial()),
            Property::LocallyTrivial
        ));
        assert!(!holds(
            &OrderedMonoid::unordered(FiniteMonoid::cyclic_group(3)),
            Property::LocallyTrivial
        ));
    }

    #[test]
    fn variable_cap_and_unknown_property() {
        let m = OrderedMonoid::unordered(FiniteMonoid::trivial());
        let t: Term = "abcd".parse().unwrap();
        assert_eq!(
            satisfies_identity(&m, &t, &t, IdentityMode::Equals),
            Err(Error::TooManyVariables(4))
        );
        assert!("mystery".parse::<Property>().is_err());
        assert_eq!("J_TRIVIAL".parse::<Property>().unwrap(), Property::JTrivial);
    }
}
