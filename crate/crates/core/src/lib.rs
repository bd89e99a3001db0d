//! Regular expressions compiled to deterministic automata through pointed
//! regular expressions, with Brzozowski derivatives as a second, independent
//! construction.
//!
//! A pointed regular expression marks, with points in front of symbol
//! occurrences, the positions reachable after reading some input. Such
//! expressions are directly the states of a DFA whose transition function is
//! [`pointed::move_pre`]. The [`readback`] module maps pointed expressions back
//! to sets of ordinary expressions, which is what relates this construction
//! to the derivative automaton built in [`derivatives`]: quotienting the
//! former by equal read-backs and the latter by equal look-ahead normal forms
//! yields the same automaton.
//!
//! ```
//! use pointed_regex::{automata, syntax};
//!
//! let r = syntax::parse("(ac+bc)*").unwrap();
//! let dfa = automata::build_pointed_dfa(&r);
//! assert_eq!(dfa.len(), 4);
//! assert!(automata::run_dfa(&dfa, "acbc"));
//! assert!(!automata::run_dfa(&dfa, "ab"));
//! ```

pub mod automata;
pub mod cli;
pub mod derivatives;
pub mod gen;
pub mod merge;
pub mod oracle;
pub mod pointed;
pub mod readback;
pub mod syntax;

pub use automata::{Dfa, StateLabel};
pub use readback::RegexSet;
pub use syntax::{parse, parse_item, parse_pre, Item, ParseError, Pre, Regex};
