use crate::derivatives::derive_char;
use crate::pointed::{initial, move_pre};
use crate::readback::{canon, canon_set, nf_eps, readback_pre};
use crate::syntax::Regex;

use super::{explore, AutomataError, Dfa, StateLabel, DEFAULT_MAX_STATES};

/// The accessible part of the pointed automaton: states are pres over `r`,
/// identified up to syntactic equality.
pub fn build_pointed_dfa(r: &Regex) -> Dfa {
    explore(r, "pointed", initial(r), move_pre, |p| p.clone(), |p| p.fin, StateLabel::Pre, None)
        .expect("the pointed construction has no state budget")
}

/// The pointed automaton quotiented by equality of read-backs. Each class is
/// represented by the first pre found in it.
pub fn build_quotient_dfa(r: &Regex) -> Dfa {
    explore(
        r,
        "quotient",
        initial(r),
        move_pre,
        |p| canon_set(&readback_pre(p)),
        |p| p.fin,
        StateLabel::Pre,
        None,
    )
    .expect("the quotient construction has no state budget")
}

/// The derivative automaton quotiented by equality of look-ahead normal
/// forms. Representatives are kept in canonical form.
pub fn build_derivative_quotient_dfa(r: &Regex) -> Result<Dfa, AutomataError> {
    explore(
        r,
        "derivative-quotient",
        canon(r),
        |s, c| canon(&derive_char(s, c)),
        |s| canon_set(&nf_eps(s)),
        Regex::nullable,
        StateLabel::Deriv,
        Some(DEFAULT_MAX_STATES),
    )
}
