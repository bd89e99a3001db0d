//! Merging of pointed expressions over a common carrier: the union of their
//! points. It is the syntactic counterpart of the subset construction.

use thiserror::Error;

use crate::syntax::{Item, Pre};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error("cannot merge items with different carriers: {left} vs {right}")]
    CarrierMismatch { left: String, right: String },
}

fn zip(e1: &Item, e2: &Item) -> Option<Item> {
    Some(match (e1, e2) {
        (Item::Empty, Item::Empty) => Item::Empty,
        (Item::Epsilon, Item::Epsilon) => Item::Epsilon,
        (Item::Sym(a), Item::Sym(b)) if a == b => Item::Sym(*a),
        (Item::Point(a) | Item::Sym(a), Item::Point(b) | Item::Sym(b)) if a == b => Item::Point(*a),
        (Item::Sum(l1, r1), Item::Sum(l2, r2)) => Item::sum(zip(l1, l2)?, zip(r1, r2)?),
        (Item::Cat(l1, r1), Item::Cat(l2, r2)) => Item::cat(zip(l1, l2)?, zip(r1, r2)?),
        (Item::Star(b1), Item::Star(b2)) => Item::star(zip(b1, b2)?),
        _ => return None,
    })
}

/// A position is pointed in the result iff it is pointed in either input.
pub fn merge_items(e1: &Item, e2: &Item) -> Result<Item, MergeError> {
    zip(e1, e2).ok_or_else(|| MergeError::CarrierMismatch { left: e1.carrier().to_string(), right: e2.carrier().to_string() })
}

pub fn merge_pres(p1: &Pre, p2: &Pre) -> Result<Pre, MergeError> {
    Ok(Pre::new(merge_items(&p1.item, &p2.item)?, p1.fin || p2.fin))
}
