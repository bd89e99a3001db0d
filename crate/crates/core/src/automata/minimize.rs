use std::collections::{BTreeSet, HashMap};

use super::{bfs_order, Dfa};

/// Minimal complete DFA for the language of `d`, by iterated partition
/// refinement starting from the final/non-final split.
///
/// Unreachable states are dropped first. Blocks are numbered in
/// breadth-first order from the start block and labelled with their
/// lowest-numbered member.
pub fn minimize(d: &Dfa) -> Dfa {
    let reachable = bfs_order(d);
    let mut block: Vec<usize> = vec![usize::MAX; d.len()];
    for &q in &reachable {
        block[q] = usize::from(d.is_final(q));
    }
    let mut count = reachable.iter().map(|&q| block[q]).collect::<BTreeSet<_>>().len();

    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next = vec![usize::MAX; d.len()];
        for &q in &reachable {
            let sig = (block[q], d.trans[q].iter().map(|&t| block[t]).collect::<Vec<_>>());
            let fresh = ids.len();
            next[q] = *ids.entry(sig).or_insert(fresh);
        }
        let refined = ids.len();
        block = next;
        if refined == count {
            break;
        }
        count = refined;
    }

    // renumber blocks in BFS order of the quotient
    let mut number: HashMap<usize, usize> = HashMap::new();
    let mut reps: Vec<usize> = Vec::new();
    number.insert(block[d.start], 0);
    reps.push(d.start);
    let mut i = 0;
    while i < reps.len() {
        let q = reps[i];
        for &t in &d.trans[q] {
            if let std::collections::hash_map::Entry::Vacant(slot) = number.entry(block[t]) {
                slot.insert(reps.len());
                reps.push(t);
            }
        }
        i += 1;
    }
    // lowest member of each block as its representative label
    let mut lowest: HashMap<usize, usize> = HashMap::new();
    for &q in &reachable {
        let e = lowest.entry(block[q]).or_insert(q);
        *e = (*e).min(q);
    }

    let labels = reps.iter().map(|&q| d.labels[lowest[&block[q]]].clone()).collect();
    let trans = reps.iter().map(|&q| d.trans[q].iter().map(|&t| number[&block[t]]).collect()).collect();
    let finals = reps.iter().enumerate().filter(|(_, &q)| d.is_final(q)).map(|(i, _)| i).collect();
    let construction = if d.construction.ends_with("+min") {
        d.construction.clone()
    } else {
        format!("{}+min", d.construction)
    };
    Dfa::from_parts(d.alphabet.clone(), labels, 0, finals, trans, d.source.clone(), construction)
        .expect("quotient of a well-formed automaton is well-formed")
}
