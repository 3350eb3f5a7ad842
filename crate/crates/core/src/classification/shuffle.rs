//! Shuffle witnesses.

use crate::monoid::OrderedMonoid;
use crate::word::shortlex_up_to;

/// Whether `v` interleaves `w1` and `w2`, keeping the letter order of each.
pub fn is_shuffle(v: &str, w1: &str, w2: &str) -> bool {
    let (v, w1, w2): (Vec<char>, Vec<char>, Vec<char>) = (
        v.chars().collect(),
        w1.chars().collect(),
        w2.chars().collect(),
    );
    if v.len() != w1.len() + w2.len() {
        return false;
    }
    // reach[j]: some interleaving of w1[..i] and w2[..j] spells v[..i+j]
    let mut reach = vec![false; w2.len() + 1];
    for i in 0..=w1.len() {
        for j in 0..=w2.len() {
            reach[j] = if i == 0 && j == 0 {
                true
            } else {
                let from_w1 = i > 0 && reach[j] && w1[i - 1] == v[i + j - 1];
                let from_w2 = j > 0 && reach[j - 1] && w2[j - 1] == v[i + j - 1];
                from_w1 || from_w2
            };
        }
    }
    reach[w2.len()]
}

/// All distinct interleavings of `w1` and `w2`, in lexicographic order.
pub fn shuffles(w1: &str, w2: &str) -> Vec<String> {
    fn go(a: &[char], b: &[char], cur: &mut String, out: &mut Vec<String>) {
        if a.is_empty() && b.is_empty() {
            out.push(cur.clone());
            return;
        }
        if let Some((&c, rest)) = a.split_first() {
            cur.push(c);
            go(rest, b, cur, out);
            cur.pop();
        }
        if let Some((&c, rest)) = b.split_first() {
            cur.push(c);
            go(a, rest, cur, out);
            cur.pop();
        }
    }
    let (a, b): (Vec<char>, Vec<char>) = (w1.chars().collect(), w2.chars().collect());
    let mut out = Vec::new();
    go(&a, &b, &mut String::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// `u = w1 w2` with `eval(u)` idempotent and `v` a shuffle of `w1`, `w2` such
/// that `eval(uvu) ≰ eval(u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleWitness {
    pub u: String,
    pub w1: String,
    pub w2: String,
    pub v: String,
}

impl ShuffleWitness {
    pub fn replay(&self, m: &OrderedMonoid) -> bool {
        let eval = |w: &str| m.monoid.eval_str(w).ok();
        let (Some(u), Some(v)) = (eval(&self.u), eval(&self.v)) else {
            return false;
        };
        let uvu = m.monoid.product([u, v, u]);
        format!("{}{}", self.w1, self.w2) == self.u
            && is_shuffle(&self.v, &self.w1, &self.w2)
            && m.monoid.is_idempotent(u)
            && !m.leq(uvu, u)
    }
}

/// First witness with `|u| ≤ max_len`: `u` in shortlex order, then split
/// position, then `v` in lexicographic order.
pub fn find_shuffle_witness(m: &OrderedMonoid, max_len: usize) -> Option<ShuffleWitness> {
    let mut letters = m.monoid.generator_letters();
    letters.sort_unstable();
    for u in shortlex_up_to(&letters, max_len) {
        let eu = m.monoid.eval_str(&u).expect("generator word");
        if !m.monoid.is_idempotent(eu) {
            continue;
        }
        for split in 0..=u.len() {
            let (w1, w2) = u.split_at(split);
            for v in shuffles(w1, w2) {
                let ev = m.monoid.eval_str(&v).expect("generator word");
                if !m.leq(m.monoid.product([eu, ev, eu]), eu) {
                    return Some(ShuffleWitness {
                        u: u.clone(),
                        w1: w1.to_string(),
                        w2: w2.to_string(),
                        v,
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
    use crate::monoid::FiniteMonoid;

    #[test]
    fn shuffle_examples() {
        assert!(is_shuffle("ba", "a", "b"));
        assert!(is_shuffle("ab", "ab", ""));
        assert!(is_shuffle("aabb", "ab", "ab"));
        assert!(!is_shuffle("bbaa", "ab", "ab"));
        assert!(!is_shuffle("abc", "ab", ""));
    }

    #[test]
    fn enumerated_shuffles_agree_with_the_test() {
        let all = shuffles("aba", "bb");
        assert_eq!(all.len(), {
            let mut v: Vec<_> = all.clone();
            v.dedup();
            v.len()
        });
        for w in crate::word::words_of_length(&['a', 'b'], 5) {
            assert_eq!(all.contains(&w), is_shuffle(&w, "aba", "bb"), "{w}");
        }
    }

    #[test]
    fn ba2_plus_witness() {
        let m = builtin_monoid("BA2_PLUS").unwrap();
        let w = find_shuffle_witness(&m, 6).unwrap();
        assert_eq!(
            (w.u.as_str(), w.w1.as_str(), w.w2.as_str(), w.v.as_str()),
            ("ab", "a", "b", "ba")
        );
        assert!(w.replay(&m));
    }

    #[test]
    fn u_plus_has_a_witness() {
        let m = builtin_monoid("U_PLUS").unwrap();
        let w = find_shuffle_witness(&m, 6).unwrap();
        assert!(w.replay(&m));
    }

    #[test]
    fn commutative_monoids_have_none() {
        let z3 = OrderedMonoid::unordered(FiniteMonoid::cyclic_group(3));
        assert_eq!(find_shuffle_witness(&z3, 6), None);
        assert_eq!(
            find_shuffle_witness(&builtin_monoid("Z3").unwrap(), 6),
            None
        );
    }
}
