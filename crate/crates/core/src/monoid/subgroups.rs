//! Maximal subgroups, one per idempotent.

use super::{Element, FiniteMonoid};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    pub idempotent: Element,
    /// Sorted element indices.
    pub elements: Vec<Element>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// A pair of non-commuting members, if any.
    pub fn noncommuting_pair(&self, m: &FiniteMonoid) -> Option<(Element, Element)> {
        for (i, &g) in self.elements.iter().enumerate() {
            for &h in &self.elements[i + 1..] {
                if m.mul(g, h) != m.mul(h, g) {
                    return Some((g, h));
                }
            }
        }
        None
    }

    pub fn is_abelian(&self, m: &FiniteMonoid) -> bool {
        self.noncommuting_pair(m).is_none()
    }
}

/// The group of units of `eMe` for every idempotent `e`, in index order of `e`.
pub fn maximal_subgroups(m: &FiniteMonoid) -> Vec<Subgroup> {
    m.idempotents()
        .into_iter()
        .map(|e| {
            let mut local: Vec<Element> = m.elements().map(|x| m.mul(m.mul(e, x), e)).collect();
            local.sort_unstable();
            local.dedup();
            let elements = local
                .iter()
                .copied()
                .filter(|&g| local.iter().any(|&h| m.mul(g, h) == e && m.mul(h, g) == e))
                .collect();
            Subgroup {
                idempotent: e,
                elements,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::builtin_language;
    use crate::monoid::{transition_monoid, DEFAULT_ELEMENT_CAP};

    fn tm(name: &str) -> FiniteMonoid {
        transition_monoid(&builtin_language(name).unwrap(), DEFAULT_ELEMENT_CAP)
            .unwrap()
            .monoid
    }

    #[test]
    fn group_has_one_maximal_subgroup() {
        let z = FiniteMonoid::cyclic_group(5);
        let gs = maximal_subgroups(&z);
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].order(), 5);
    }

    #[test]
    fn ba2_subgroups_are_trivial() {
        let m = tm("BA2_LANG");
        assert!(maximal_subgroups(&m).iter().all(|g| g.order() == 1));
    }

    #[test]
    fn s3_is_a_nonabelian_subgroup() {
        let m = tm("S3_LANG");
        let gs = maximal_subgroups(&m);
        assert!(gs.iter().any(|g| g.order() == 6 && !g.is_abelian(&m)));
    }
}
