//! Brzozowski derivatives: the independent second construction.

use crate::automata::{explore, AutomataError, Dfa, StateLabel};
use crate::readback::{canon, RegexSet};
use crate::syntax::Regex;

/// Syntactic derivative of `r` with respect to `a`, without simplification.
pub fn derive_char(r: &Regex, a: char) -> Regex {
    match r {
        Regex::Empty | Regex::Epsilon => Regex::Empty,
        Regex::Sym(c) => {
            if *c == a {
                Regex::Epsilon
            } else {
                Regex::Empty
            }
        }
        Regex::Sum(l, r) => Regex::sum(derive_char(l, a), derive_char(r, a)),
        Regex::Cat(l, r) => {
            let head = Regex::cat(derive_char(l, a), r.as_ref().clone());
            if l.nullable() {
                Regex::sum(head, derive_char(r, a))
            } else {
                head
            }
        }
        Regex::Star(body) => Regex::cat(derive_char(body, a), r.clone()),
    }
}

pub fn derive_word(r: &Regex, w: &str) -> Regex {
    w.chars().fold(r.clone(), |acc, a| derive_char(&acc, a))
}

pub fn derive_set(s: &RegexSet, a: char) -> RegexSet {
    s.iter().map(|r| derive_char(r, a)).collect()
}

/// Membership by repeated derivation, canonicalizing after every step.
pub fn derivative_match(r: &Regex, w: &str) -> bool {
    w.chars().fold(canon(r), |acc, a| canon(&derive_char(&acc, a))).nullable()
}

/// The derivative automaton: states are canonical forms of the derivatives
/// of `r`, final exactly when nullable.
pub fn build_derivative_dfa(r: &Regex, max_states: usize) -> Result<Dfa, AutomataError> {
    explore(
        r,
        "derivative",
        canon(r),
        |s, c| canon(&derive_char(s, c)),
        |s| s.clone(),
        Regex::nullable,
        StateLabel::Deriv,
        Some(max_states),
    )
}
