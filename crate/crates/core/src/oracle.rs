//! Brute-force semantics of regular expressions.
//!
//! Everything here works directly from the set equations of `L(e)` and is
//! kept independent of the pointed and derivative machinery, so it can serve
//! as ground truth for both. It is deliberately naive.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::syntax::Regex;

/// Longest word length accepted by the enumeration helpers.
pub const MAX_ENUM_LEN: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("word length {requested} exceeds the limit of {limit}")]
    LengthLimit { requested: usize, limit: usize },
}

fn check_len(len: usize) -> Result<(), OracleError> {
    if len > MAX_ENUM_LEN {
        Err(OracleError::LengthLimit { requested: len, limit: MAX_ENUM_LEN })
    } else {
        Ok(())
    }
}

/// All words of a language up to a length bound, ordered by length and then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageSample {
    pub max_len: usize,
    pub words: Vec<String>,
}

impl LanguageSample {
    pub fn contains(&self, w: &str) -> bool {
        self.words.iter().any(|x| x == w)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

// Postorder arena: children always have smaller indices than their parent.
enum Node {
    Empty,
    Epsilon,
    Sym(char),
    Sum(usize, usize),
    Cat(usize, usize),
    Star(usize),
}

fn flatten(r: &Regex, arena: &mut Vec<Node>) -> usize {
    let node = match r {
        Regex::Empty => Node::Empty,
        Regex::Epsilon => Node::Epsilon,
        Regex::Sym(c) => Node::Sym(*c),
        Regex::Sum(l, r) => Node::Sum(flatten(l, arena), flatten(r, arena)),
        Regex::Cat(l, r) => Node::Cat(flatten(l, arena), flatten(r, arena)),
        Regex::Star(r) => Node::Star(flatten(r, arena)),
    };
    arena.push(node);
    arena.len() - 1
}

/// Membership of `w` in `L(r)`.
///
/// Fills, for every subterm and every substring `w[i..j]`, whether the
/// substring belongs to the subterm's language. A star splits off a
/// nonempty first factor, which keeps nullable bodies from looping.
pub fn member_oracle(r: &Regex, w: &str) -> bool {
    let word: Vec<char> = w.chars().collect();
    let n = word.len();
    let mut arena = Vec::new();
    let root = flatten(r, &mut arena);
    let idx = |i: usize, j: usize| i * (n + 1) + j;
    let mut tables: Vec<Vec<bool>> = Vec::with_capacity(arena.len());

    for node in &arena {
        let mut t = vec![false; (n + 1) * (n + 1)];
        match *node {
            Node::Empty => {}
            Node::Epsilon => {
                for i in 0..=n {
                    t[idx(i, i)] = true;
                }
            }
            Node::Sym(c) => {
                for i in 0..n {
                    if word[i] == c {
                        t[idx(i, i + 1)] = true;
                    }
                }
            }
            Node::Sum(l, r) => {
                for k in 0..t.len() {
                    t[k] = tables[l][k] || tables[r][k];
                }
            }
            Node::Cat(l, r) => {
                for i in 0..=n {
                    for j in i..=n {
                        t[idx(i, j)] = (i..=j).any(|k| tables[l][idx(i, k)] && tables[r][idx(k, j)]);
                    }
                }
            }
            Node::Star(body) => {
                // by increasing start from the right, so t[k..j] is known for k > i
                for i in (0..=n).rev() {
                    t[idx(i, i)] = true;
                    for j in i + 1..=n {
                        t[idx(i, j)] = (i + 1..=j).any(|k| tables[body][idx(i, k)] && t[idx(k, j)]);
                    }
                }
            }
        }
        tables.push(t);
    }
    tables[root][idx(0, n)]
}

/// Every word over `alphabet` of length at most `max_len`, in length-then-lex
/// order.
pub fn words_up_to(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * alphabet.len());
        for w in &frontier {
            for &c in alphabet {
                let mut x = w.clone();
                x.push(c);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn enumerate_over(r: &Regex, alphabet: &[char], max_len: usize) -> Result<LanguageSample, OracleError> {
    check_len(max_len)?;
    let words = words_up_to(alphabet, max_len)
        .into_iter()
        .filter(|w| member_oracle(r, w))
        .collect();
    Ok(LanguageSample { max_len, words })
}

/// The words of `L(r)` of length at most `max_len`, over the symbols of `r`.
pub fn enumerate_language(r: &Regex, max_len: usize) -> Result<LanguageSample, OracleError> {
    let alphabet: Vec<char> = r.symbols().into_iter().collect();
    enumerate_over(r, &alphabet, max_len)
}

/// Bounded language equality over the union of both symbol sets.
pub fn same_language_up_to(r1: &Regex, r2: &Regex, max_len: usize) -> Result<bool, OracleError> {
    let alphabet: BTreeSet<char> = r1.symbols().union(&r2.symbols()).copied().collect();
    let alphabet: Vec<char> = alphabet.into_iter().collect();
    Ok(enumerate_over(r1, &alphabet, max_len)? == enumerate_over(r2, &alphabet, max_len)?)
}
