//! Broadcasting, the lifted constructors and the move transition on pointed
//! regular expressions.
//!
//! A pre `⟨e, b⟩` is a state of a deterministic automaton: the points in `e`
//! mark the positions reachable after the input read so far, and `b` records
//! that the end of the expression has been reached. [`broadcast`] pushes an
//! initial point into an expression (the syntactic ε-closure) and [`move_pre`]
//! consumes one symbol. Broadcasting is defined together with the lifted
//! constructors [`plus_lift`], [`cat_lift`] and [`star_lift`], which call
//! back into it whenever a trailing point has to be propagated further.

use crate::syntax::{Item, Pre, Regex};

/// A regular expression read as an item with no points.
pub fn embed(r: &Regex) -> Item {
    Item::from(r)
}

/// `⟨e1,b1⟩ ⊕ ⟨e2,b2⟩ = ⟨e1+e2, b1∨b2⟩`
pub fn plus_lift(p1: Pre, p2: Pre) -> Pre {
    Pre::new(Item::sum(p1.item, p2.item), p1.fin || p2.fin)
}

/// Concatenation of pres. A trailing point on the left operand is broadcast
/// into the right operand before the two are joined.
pub fn cat_lift(p1: Pre, p2: Pre) -> Pre {
    if p1.fin {
        let inner = broadcast(&p2.item);
        Pre::new(Item::cat(p1.item, inner.item), p2.fin || inner.fin)
    } else {
        Pre::new(Item::cat(p1.item, p2.item), p2.fin)
    }
}

/// Star of a pre. A trailing point re-enters the body, and the result keeps
/// its trailing point.
pub fn star_lift(p: Pre) -> Pre {
    if p.fin {
        let inner = broadcast(&p.item);
        Pre::new(Item::star(inner.item), true)
    } else {
        Pre::new(Item::star(p.item), false)
    }
}

/// Broadcasts a point placed in front of `e` through the whole item.
pub fn broadcast(e: &Item) -> Pre {
    match e {
        Item::Empty => Pre::new(Item::Empty, false),
        Item::Epsilon => Pre::new(Item::Epsilon, true),
        Item::Sym(c) | Item::Point(c) => Pre::new(Item::Point(*c), false),
        Item::Sum(l, r) => plus_lift(broadcast(l), broadcast(r)),
        Item::Cat(l, r) => cat_lift(broadcast(l), Pre::new(r.as_ref().clone(), false)),
        Item::Star(body) => Pre::new(Item::star(broadcast(body).item), true),
    }
}

pub fn broadcast_pre(p: &Pre) -> Pre {
    let b = broadcast(&p.item);
    Pre::new(b.item, p.fin || b.fin)
}

/// Consumes `a`: points in front of an `a` traverse it and are broadcast
/// onwards, every other point is erased.
pub fn move_item(e: &Item, a: char) -> Pre {
    match e {
        Item::Empty => Pre::new(Item::Empty, false),
        Item::Epsilon => Pre::new(Item::Epsilon, false),
        Item::Sym(c) => Pre::new(Item::Sym(*c), false),
        Item::Point(c) => Pre::new(Item::Sym(*c), *c == a),
        Item::Sum(l, r) => plus_lift(move_item(l, a), move_item(r, a)),
        Item::Cat(l, r) => cat_lift(move_item(l, a), move_item(r, a)),
        Item::Star(body) => star_lift(move_item(body, a)),
    }
}

/// The trailing point of `p` plays no role in a move.
pub fn move_pre(p: &Pre, a: char) -> Pre {
    move_item(&p.item, a)
}

pub fn move_star(p: &Pre, w: &str) -> Pre {
    w.chars().fold(p.clone(), |q, a| move_pre(&q, a))
}

pub fn is_final(p: &Pre) -> bool {
    p.fin
}

/// Initial state of the pointed automaton for `r`.
pub fn initial(r: &Regex) -> Pre {
    broadcast(&embed(r))
}

/// Membership via the pointed automaton, without building it.
pub fn pointed_match(r: &Regex, w: &str) -> bool {
    is_final(&move_star(&initial(r), w))
}
