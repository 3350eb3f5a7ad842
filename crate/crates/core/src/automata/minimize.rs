//! Moore partition refinement.

use std::collections::{HashMap, VecDeque};

use super::Dfa;

/// Quotients `d` by `class_of` (which must be a congruence for the transitions)
/// and numbers the classes reachable from the initial class in BFS order.
pub(super) fn bfs_renumber(d: &Dfa, class_of: &[usize]) -> Dfa {
    let class_count = class_of.iter().max().map_or(0, |m| m + 1);
    // One representative state per class.
    let mut rep = vec![usize::MAX; class_count];
    for (q, &c) in class_of.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = q;
        }
    }
    let mut number = vec![usize::MAX; class_count];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let start = class_of[d.initial];
    number[start] = 0;
    order.push(start);
    queue.push_back(start);
    while let Some(c) = queue.pop_front() {
        for a in 0..d.alphabet.len() {
            let t = class_of[d.step(rep[c], a)];
            if number[t] == usize::MAX {
                number[t] = order.len();
                order.push(t);
                queue.push_back(t);
            }
        }
    }
    let transitions = (0..d.alphabet.len())
        .map(|a| {
            order
                .iter()
                .map(|&c| number[class_of[d.step(rep[c], a)]])
                .collect()
        })
        .collect();
    let accepting: Vec<usize> = order
        .iter()
        .enumerate()
        .filter(|(_, &c)| d.is_accepting(rep[c]))
        .map(|(i, _)| i)
        .collect();
    Dfa::new(d.alphabet.clone(), order.len(), 0, &accepting, transitions)
        .expect("quotient of a valid dfa is valid")
}

pub(super) fn moore(d: &Dfa) -> Dfa {
    // Restrict to the reachable part first so unreachable states cannot
    // influence the partition.
    let d = d.canonical();
    let n = d.state_count();
    let mut class: Vec<usize> = (0..n).map(|q| usize::from(d.is_accepting(q))).collect();
    let mut count = normalize(&mut class);
    loop {
        let mut signatures: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = Vec::with_capacity(n);
        for q in 0..n {
            let mut sig = Vec::with_capacity(d.alphabet.len() + 1);
            sig.push(class[q]);
            sig.extend((0..d.alphabet.len()).map(|a| class[d.step(q, a)]));
            let fresh = signatures.len();
            next.push(*signatures.entry(sig).or_insert(fresh));
        }
        let next_count = signatures.len();
        class = next;
        if next_count == count {
            break;
        }
        count = next_count;
    }
    bfs_renumber(&d, &class)
}

/// Renumbers class labels by first occurrence; returns the number of classes.
fn normalize(class: &mut [usize]) -> usize {
    let mut map = HashMap::new();
    for c in class.iter_mut() {
        let fresh = map.len();
        *c = *map.entry(*c).or_insert(fresh);
    }
    map.len()
}
