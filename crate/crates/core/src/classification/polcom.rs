//! Evidence that a monoid lies outside the polynomial closure of commutative languages.

use crate::monoid::{commutative_quotient, OrderedMonoid};
use crate::word::shortlex_up_to;

/// Words `u`, `v` with equal images in the largest commutative quotient, an
/// idempotent image of `u` there, and `eval(u^ω v u^ω) ≰ eval(u^ω)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolComWitness {
    pub u: String,
    pub v: String,
}

impl PolComWitness {
    pub fn replay(&self, m: &OrderedMonoid) -> bool {
        let (Ok(u), Ok(v)) = (m.monoid.eval_str(&self.u), m.monoid.eval_str(&self.v)) else {
            return false;
        };
        let (q, proj) = commutative_quotient(&m.monoid);
        let uw = m.monoid.omega_power(u);
        proj.apply(u) == proj.apply(v)
            && q.is_idempotent(proj.apply(u))
            && !m.leq(m.monoid.product([uw, v, uw]), uw)
    }
}

/// First witness with `|u|, |v| ≤ max_len`.
///
/// Two passes, each ordered by `u` then `v` in shortlex order. The first pass
/// keeps only pairs where `eval(u)` is itself idempotent and `v` is a letter
/// permutation of `u`; both imply the quotient conditions. The second pass
/// accepts any pair meeting the quotient conditions, so a witness is missed
/// only if none exists within the bound.
pub fn find_polcom_exclusion_witness(m: &OrderedMonoid, max_len: usize) -> Option<PolComWitness> {
    let (q, proj) = commutative_quotient(&m.monoid);
    let mut letters = m.monoid.generator_letters();
    letters.sort_unstable();
    let words: Vec<(String, usize, Vec<char>)> = shortlex_up_to(&letters, max_len)
        .into_iter()
        .map(|w| {
            let e = m.monoid.eval_str(&w).expect("generator word");
            let mut content: Vec<char> = w.chars().collect();
            content.sort_unstable();
            (w, e, content)
        })
        .collect();
    let omega = m.monoid.exponent();
    for strict in [true, false] {
        for (u, eu, u_content) in &words {
            let image = proj.apply(*eu);
            if !q.is_idempotent(image) || (strict && !m.monoid.is_idempotent(*eu)) {
                continue;
            }
            let uw = m.monoid.pow(*eu, omega);
            for (v, ev, v_content) in &words {
                if strict && v_content != u_content {
                    continue;
                }
                if proj.apply(*ev) == image && !m.leq(m.monoid.product([uw, *ev, uw]), uw) {
                    return Some(PolComWitness {
                        u: u.clone(),
                        v: v.clone(),
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::builtin_monoid;

    #[test]
    fn l5_witness() {
        let m = builtin_monoid("L5_MONOID").unwrap();
        let w = find_polcom_exclusion_witness(&m, 6).unwrap();
        assert_eq!((w.u.as_str(), w.v.as_str()), ("abab", "bbaa"));
        assert!(w.replay(&m));
    }

    #[test]
    fn ba2_plus_pair_qualifies() {
        let m = builtin_monoid("BA2_PLUS").unwrap();
        let pair = PolComWitness {
            u: "ab".into(),
            v: "ba".into(),
        };
        assert!(pair.replay(&m));
        assert_eq!(find_polcom_exclusion_witness(&m, 4), Some(pair));
    }

    #[test]
    fn weak_pass_finds_non_idempotent_u() {
        // Only the quotient conditions hold: ab is not idempotent in L5 and
        // aaab is not a permutation of it, yet the pair still qualifies.
        let m = builtin_monoid("L5_MONOID").unwrap();
        let pair = PolComWitness {
            u: "ab".into(),
            v: "aaab".into(),
        };
        assert!(pair.replay(&m));
        assert!(!m.monoid.is_idempotent(m.monoid.eval_str("ab").unwrap()));
    }

    #[test]
    fn commutative_and_u_minus_have_none() {
        for name in ["Z3", "U_MINUS"] {
            assert_eq!(
                find_polcom_exclusion_witness(&builtin_monoid(name).unwrap(), 6),
                None,
                "{name}"
            );
        }
    }
}
