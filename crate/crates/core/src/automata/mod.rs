//! Deterministic automata: the data model, the worklist constructions over
//! pres and derivatives, execution, minimization, isomorphism and export.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

use crate::syntax::{Pre, Regex};

mod build;
mod export;
mod minimize;

pub use build::{build_derivative_quotient_dfa, build_pointed_dfa, build_quotient_dfa};
pub use export::{export_dot, export_json, DfaExport, ExportState, ExportTransition, EXPORT_VERSION};
pub use minimize::minimize;

/// State budget used when a caller does not pick one.
pub const DEFAULT_MAX_STATES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomataError {
    #[error("state budget of {limit} exceeded")]
    StateBudgetExceeded { limit: usize },
    #[error("alphabets differ: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<char>, right: Vec<char> },
    #[error("malformed automaton: {0}")]
    Malformed(String),
}

/// What a state stands for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StateLabel {
    Pre(Pre),
    Deriv(Regex),
}

impl fmt::Display for StateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateLabel::Pre(p) => write!(f, "{p}"),
            StateLabel::Deriv(r) => write!(f, "{r}"),
        }
    }
}

/// A complete DFA over a sorted alphabet. States are dense indices; the
/// transition table has one row per state and one column per symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<char>,
    labels: Vec<StateLabel>,
    start: usize,
    finals: BTreeSet<usize>,
    trans: Vec<Vec<usize>>,
    source: String,
    construction: String,
}

impl Dfa {
    /// Assembles an automaton, checking that the table is total and every
    /// index is in range.
    pub fn from_parts(
        alphabet: Vec<char>,
        labels: Vec<StateLabel>,
        start: usize,
        finals: BTreeSet<usize>,
        trans: Vec<Vec<usize>>,
        source: impl Into<String>,
        construction: impl Into<String>,
    ) -> Result<Dfa, AutomataError> {
        let n = labels.len();
        let bad = |m: &str| Err(AutomataError::Malformed(m.to_string()));
        if !alphabet.windows(2).all(|w| w[0] < w[1]) {
            return bad("alphabet must be sorted and duplicate-free");
        }
        if start >= n {
            return bad("start state out of range");
        }
        if finals.iter().any(|&q| q >= n) {
            return bad("final state out of range");
        }
        if trans.len() != n || trans.iter().any(|row| row.len() != alphabet.len() || row.iter().any(|&q| q >= n)) {
            return bad("transition table is not total over states x alphabet");
        }
        Ok(Dfa { alphabet, labels, start, finals, trans, source: source.into(), construction: construction.into() })
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn labels(&self) -> &[StateLabel] {
        &self.labels
    }

    pub fn label(&self, q: usize) -> &StateLabel {
        &self.labels[q]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals.contains(&q)
    }

    /// Successor of `q` on the `i`-th alphabet symbol.
    pub fn next_index(&self, q: usize, i: usize) -> usize {
        self.trans[q][i]
    }

    /// Successor of `q` on `c`; `None` for symbols outside the alphabet.
    pub fn next(&self, q: usize, c: char) -> Option<usize> {
        self.alphabet.binary_search(&c).ok().map(|i| self.trans[q][i])
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.trans
    }

    /// Rendered source expression the automaton was built from.
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn construction(&self) -> &str {
        &self.construction
    }

    /// Whether every state is reachable from the start state.
    pub fn is_accessible(&self) -> bool {
        bfs_order(self).len() == self.len()
    }
}

/// Runs `w` from the start state. A symbol outside the alphabet rejects.
pub fn run_dfa(d: &Dfa, w: &str) -> bool {
    let mut q = d.start;
    for c in w.chars() {
        match d.next(q, c) {
            Some(next) => q = next,
            None => return false,
        }
    }
    d.is_final(q)
}

// States in breadth-first order from the start, symbols tried in alphabet
// order. Unreachable states are left out.
pub(crate) fn bfs_order(d: &Dfa) -> Vec<usize> {
    let mut seen = vec![false; d.len()];
    let mut order = vec![d.start];
    seen[d.start] = true;
    let mut i = 0;
    while i < order.len() {
        let q = order[i];
        for &next in &d.trans[q] {
            if !seen[next] {
                seen[next] = true;
                order.push(next);
            }
        }
        i += 1;
    }
    order
}

/// Whether a bijection between the reachable states preserves the start
/// state, finality and every transition.
pub fn isomorphic(d1: &Dfa, d2: &Dfa) -> Result<bool, AutomataError> {
    if d1.alphabet != d2.alphabet {
        return Err(AutomataError::AlphabetMismatch { left: d1.alphabet.clone(), right: d2.alphabet.clone() });
    }
    Ok(canonical_table(d1) == canonical_table(d2))
}

// Renumbers reachable states by BFS order; two deterministic automata are
// isomorphic exactly when these tables coincide.
fn canonical_table(d: &Dfa) -> (Vec<Vec<usize>>, Vec<bool>) {
    let order = bfs_order(d);
    let mut rank = vec![usize::MAX; d.len()];
    for (i, &q) in order.iter().enumerate() {
        rank[q] = i;
    }
    let table = order.iter().map(|&q| d.trans[q].iter().map(|&t| rank[t]).collect()).collect();
    let finals = order.iter().map(|&q| d.is_final(q)).collect();
    (table, finals)
}

/// Generic worklist construction shared by every automaton builder.
///
/// States are explored breadth-first from `start`. A successor whose `key`
/// matches an existing state is identified with it; otherwise it becomes a
/// new state and its own successors are explored later.
#[allow(clippy::too_many_arguments)]
pub(crate) fn explore<S, K>(
    source: &Regex,
    construction: &str,
    start: S,
    step: impl Fn(&S, char) -> S,
    key: impl Fn(&S) -> K,
    accepting: impl Fn(&S) -> bool,
    label: impl Fn(S) -> StateLabel,
    max_states: Option<usize>,
) -> Result<Dfa, AutomataError>
where
    K: Hash + Eq,
{
    let alphabet: Vec<char> = source.symbols().into_iter().collect();
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut reps: Vec<S> = Vec::new();
    let mut trans: Vec<Vec<usize>> = Vec::new();

    index.insert(key(&start), 0);
    reps.push(start);
    let mut queue = VecDeque::from([0usize]);

    while let Some(q) = queue.pop_front() {
        let mut row = Vec::with_capacity(alphabet.len());
        for &c in &alphabet {
            let next = step(&reps[q], c);
            let k = key(&next);
            let target = match index.get(&k) {
                Some(&t) => t,
                None => {
                    let t = reps.len();
                    if let Some(limit) = max_states {
                        if t >= limit {
                            return Err(AutomataError::StateBudgetExceeded { limit });
                        }
                    }
                    index.insert(k, t);
                    reps.push(next);
                    queue.push_back(t);
                    t
                }
            };
            row.push(target);
        }
        if trans.len() <= q {
            trans.resize(q + 1, Vec::new());
        }
        trans[q] = row;
    }

    let finals = reps.iter().enumerate().filter(|(_, s)| accepting(s)).map(|(i, _)| i).collect();
    let labels = reps.into_iter().map(label).collect();
    Dfa::from_parts(alphabet, labels, 0, finals, trans, source.to_string(), construction)
}
