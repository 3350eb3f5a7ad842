//! The largest commutative quotient.

use std::collections::VecDeque;

use petgraph::unionfind::UnionFind;

use super::{Element, FiniteMonoid, MonoidMorphism};

/// Quotient of `m` by the least congruence identifying every `xy` with `yx`.
///
/// Classes are numbered by their least member, so the identity class comes
/// first only when the identity has the smallest index of its class.
pub fn commutative_quotient(m: &FiniteMonoid) -> (FiniteMonoid, MonoidMorphism) {
    let n = m.size();
    let mut uf = UnionFind::<usize>::new(n);
    let mut queue = VecDeque::new();
    for x in m.elements() {
        for y in x + 1..n {
            queue.push_back((m.mul(x, y), m.mul(y, x)));
        }
    }
    while let Some((a, b)) = queue.pop_front() {
        if !uf.union(a, b) {
            continue;
        }
        for z in m.elements() {
            queue.push_back((m.mul(z, a), m.mul(z, b)));
            queue.push_back((m.mul(a, z), m.mul(b, z)));
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in m.elements() {
        let root = uf.find(x);
        if class_of[root] == usize::MAX {
            class_of[root] = reps.len();
            reps.push(x);
        }
        class_of[x] = class_of[root];
    }
    let k = reps.len();
    let table: Vec<Element> = reps
        .iter()
        .flat_map(|&x| reps.iter().map(move |&y| (x, y)))
        .map(|(x, y)| class_of[m.mul(x, y)])
        .collect();
    let generators: Vec<(char, Element)> = m
        .generators()
        .iter()
        .map(|&(c, g)| (c, class_of[g]))
        .collect();
    let rows = table.chunks(k).map(<[Element]>::to_vec).collect();
    let quotient = if generators.is_empty() {
        let names = reps.iter().map(|&x| m.name(x).to_string()).collect();
        FiniteMonoid::from_parts(table, class_of[m.identity()], names, generators)
    } else {
        FiniteMonoid::from_table(rows, class_of[m.identity()], generators)
            .expect("a congruence quotient is a monoid")
    };
    let projection = MonoidMorphism {
        map: class_of,
        target_size: k,
    };
    (quotient, projection)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::builtin_language;
    use crate::monoid::{transition_monoid, DEFAULT_ELEMENT_CAP};

    fn tm(name: &str) -> FiniteMonoid {
        transition_monoid(
            &builtin_language(name).unwrap().minimize(),
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap()
        .monoid
    }

    fn check(m: &FiniteMonoid) -> (FiniteMonoid, MonoidMorphism) {
        let (q, p) = commutative_quotient(m);
        assert!(q.is_commutative());
        assert!(p.is_morphism(m, &q));
        assert!(p.is_surjective());
        (q, p)
    }

    #[test]
    fn commutative_monoid_is_unchanged() {
        let z = FiniteMonoid::cyclic_group(4);
        let (q, p) = check(&z);
        assert_eq!(q.size(), 4);
        assert_eq!(p.map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn ba2_identifies_ab_and_ba() {
        let m = tm("BA2_LANG");
        let (_, p) = check(&m);
        let ab = m.eval_str("ab").unwrap();
        let ba = m.eval_str("ba").unwrap();
        assert_eq!(p.apply(ab), p.apply(ba));
    }

    #[test]
    fn u_and_l5_quotients_are_commutative() {
        for name in ["U_PLUS_LANG", "L5", "S3_LANG"] {
            let m = tm(name);
            let (_, p) = check(&m);
            assert_eq!(
                p.apply(m.eval_str("ab").unwrap()),
                p.apply(m.eval_str("ba").unwrap())
            );
        }
    }

    #[test]
    fn s3_abelianizes_to_z2() {
        let (q, _) = check(&tm("S3_LANG"));
        assert_eq!(q.size(), 2);
    }
}
