//! Read-back of pointed expressions into sets of plain regular expressions,
//! the look-ahead normal forms, and canonical forms modulo ACI.
//!
//! Sets are read additively: a [`RegexSet`] denotes the union of the
//! languages of its elements.

use std::collections::BTreeSet;
use std::fmt;

use crate::oracle::{member_oracle, OracleError, MAX_ENUM_LEN};
use crate::syntax::{Item, Pre, Regex};

/// A duplicate-free set of regular expressions kept in structural order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegexSet(BTreeSet<Regex>);

impl RegexSet {
    pub fn new() -> RegexSet {
        RegexSet(BTreeSet::new())
    }

    pub fn singleton(r: Regex) -> RegexSet {
        RegexSet(BTreeSet::from([r]))
    }

    pub fn insert(&mut self, r: Regex) -> bool {
        self.0.insert(r)
    }

    pub fn contains(&self, r: &Regex) -> bool {
        self.0.contains(r)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Regex> {
        self.0.iter()
    }

    pub fn union(mut self, other: RegexSet) -> RegexSet {
        self.0.extend(other.0);
        self
    }

    /// The elements joined with `+`, or `∅` for the empty set.
    pub fn to_sum(&self) -> Regex {
        let mut it = self.0.iter().rev();
        match it.next() {
            None => Regex::Empty,
            Some(last) => it.fold(last.clone(), |acc, r| Regex::sum(r.clone(), acc)),
        }
    }
}

impl FromIterator<Regex> for RegexSet {
    fn from_iter<T: IntoIterator<Item = Regex>>(iter: T) -> Self {
        RegexSet(iter.into_iter().collect())
    }
}

impl IntoIterator for RegexSet {
    type Item = Regex;
    type IntoIter = std::collections::btree_set::IntoIter<Regex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a RegexSet {
    type Item = &'a Regex;
    type IntoIter = std::collections::btree_set::Iter<'a, Regex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for RegexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

fn eps_if(b: bool) -> RegexSet {
    if b {
        RegexSet::singleton(Regex::Epsilon)
    } else {
        RegexSet::new()
    }
}

/// `S r = { s r | s ∈ S }`
pub fn set_concat_right(s: &RegexSet, r: &Regex) -> RegexSet {
    s.iter().map(|x| Regex::cat(x.clone(), r.clone())).collect()
}

/// The set of regular expressions denoted by the points of an item.
pub fn readback(e: &Item) -> RegexSet {
    match e {
        Item::Empty | Item::Epsilon | Item::Sym(_) => RegexSet::new(),
        Item::Point(c) => RegexSet::singleton(Regex::Sym(*c)),
        Item::Sum(l, r) => readback(l).union(readback(r)),
        Item::Cat(l, r) => set_concat_right(&readback(l), &r.carrier()).union(readback(r)),
        Item::Star(body) => set_concat_right(&readback(body), &Regex::star(body.carrier())),
    }
}

pub fn readback_pre(p: &Pre) -> RegexSet {
    readback(&p.item).union(eps_if(p.fin))
}

/// Look-ahead normal form: expressions that each start by reading a symbol.
pub fn nf(r: &Regex) -> RegexSet {
    match r {
        Regex::Empty | Regex::Epsilon => RegexSet::new(),
        Regex::Sym(_) => RegexSet::singleton(r.clone()),
        Regex::Sum(l, r) => nf(l).union(nf(r)),
        Regex::Cat(l, r) => {
            let head = set_concat_right(&nf(l), r);
            if l.nullable() {
                head.union(nf(r))
            } else {
                head
            }
        }
        Regex::Star(body) => set_concat_right(&nf(body), r),
    }
}

/// [`nf`] plus `ε` when `r` is nullable.
pub fn nf_eps(r: &Regex) -> RegexSet {
    nf(r).union(eps_if(r.nullable()))
}

/// [`nf_eps`] lifted to sets by taking the union of the images.
pub fn nf_eps_set(s: &RegexSet) -> RegexSet {
    s.iter().fold(RegexSet::new(), |acc, r| acc.union(nf_eps(r)))
}

fn sum_operands(r: &Regex, out: &mut Vec<Regex>) {
    match r {
        Regex::Sum(l, r) => {
            sum_operands(l, out);
            sum_operands(r, out);
        }
        _ => out.push(canon(r)),
    }
}

fn cat_operands(r: &Regex, out: &mut Vec<Regex>) {
    match r {
        Regex::Cat(l, r) => {
            cat_operands(l, out);
            cat_operands(r, out);
        }
        _ => out.push(canon(r)),
    }
}

fn nest_right(parts: Vec<Regex>, join: fn(Regex, Regex) -> Regex) -> Regex {
    let mut it = parts.into_iter().rev();
    let last = it.next().expect("at least one operand");
    it.fold(last, |acc, r| join(r, acc))
}

/// Canonical form modulo associativity, commutativity and idempotence of `+`
/// and associativity of concatenation, at every depth.
///
/// Sums are flattened, sorted and deduplicated; both sums and concatenations
/// are rebuilt right-nested. No law involving `∅` or `ε` is applied.
pub fn canon(r: &Regex) -> Regex {
    match r {
        Regex::Empty | Regex::Epsilon | Regex::Sym(_) => r.clone(),
        Regex::Star(body) => Regex::star(canon(body)),
        Regex::Sum(..) => {
            let mut parts = Vec::new();
            sum_operands(r, &mut parts);
            parts.sort();
            parts.dedup();
            nest_right(parts, Regex::sum)
        }
        Regex::Cat(..) => {
            let mut parts = Vec::new();
            cat_operands(r, &mut parts);
            nest_right(parts, Regex::cat)
        }
    }
}

pub fn canon_set(s: &RegexSet) -> RegexSet {
    s.iter().map(canon).collect()
}

/// Membership of `w` in the language of a pre, through its read-back.
pub fn lp_member(p: &Pre, w: &str) -> Result<bool, OracleError> {
    let len = w.chars().count();
    if len > MAX_ENUM_LEN {
        return Err(OracleError::LengthLimit { requested: len, limit: MAX_ENUM_LEN });
    }
    Ok(readback_pre(p).iter().any(|r| member_oracle(r, w)))
}
