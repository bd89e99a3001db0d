//! Regular expression and pointed-item ASTs, their concrete syntax, and the
//! structural utilities everything else builds on.
//!
//! Concrete grammar:
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor+
//! factor := atom '*'*
//! atom   := literal | '\0' | '\e' | '\' reserved | '^' literal | '(' expr ')'
//! ```
//!
//! Literals are ASCII alphanumerics; the reserved characters `( ) + * \ ^ |`
//! are available as symbols through `\x`. `\0` is the empty language and `\e`
//! the empty word. `^a` marks a pointed occurrence of `a`; a pre whose
//! trailing flag is set is written with the suffix `|•`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Characters with a syntactic role; they can only appear as symbols escaped.
pub const RESERVED: [char; 7] = ['(', ')', '+', '*', '\\', '^', '|'];

/// Suffix marking a pre with its trailing point set.
pub const TRAILING_POINT: &str = "|•";

/// Whether `c` belongs to the symbol universe of the artifact.
pub fn is_symbol(c: char) -> bool {
    c.is_ascii_alphanumeric() || RESERVED.contains(&c)
}

/// A plain regular expression.
///
/// The derived ordering is the structural order used for canonical sets:
/// constructor rank first (in declaration order), then symbol code, then the
/// children left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regex {
    Empty,
    Epsilon,
    Sym(char),
    Sum(Box<Regex>, Box<Regex>),
    Cat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn sym(c: char) -> Regex {
        Regex::Sym(c)
    }

    pub fn sum(l: Regex, r: Regex) -> Regex {
        Regex::Sum(Box::new(l), Box::new(r))
    }

    pub fn cat(l: Regex, r: Regex) -> Regex {
        Regex::Cat(Box::new(l), Box::new(r))
    }

    pub fn star(r: Regex) -> Regex {
        Regex::Star(Box::new(r))
    }

    /// Whether the empty word belongs to the language.
    pub fn nullable(&self) -> bool {
        match self {
            Regex::Empty | Regex::Sym(_) => false,
            Regex::Epsilon | Regex::Star(_) => true,
            Regex::Sum(l, r) => l.nullable() || r.nullable(),
            Regex::Cat(l, r) => l.nullable() && r.nullable(),
        }
    }

    /// Distinct symbols occurring in the expression, sorted.
    pub fn symbols(&self) -> BTreeSet<char> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<char>) {
        match self {
            Regex::Empty | Regex::Epsilon => {}
            Regex::Sym(c) => {
                out.insert(*c);
            }
            Regex::Sum(l, r) | Regex::Cat(l, r) => {
                l.collect_symbols(out);
                r.collect_symbols(out);
            }
            Regex::Star(r) => r.collect_symbols(out),
        }
    }

    /// Number of symbol occurrences (positions).
    pub fn symbol_count(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon => 0,
            Regex::Sym(_) => 1,
            Regex::Sum(l, r) | Regex::Cat(l, r) => l.symbol_count() + r.symbol_count(),
            Regex::Star(r) => r.symbol_count(),
        }
    }

    /// Number of atomic leaves (`∅`, `ε` and symbols).
    pub fn leaf_count(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Sym(_) => 1,
            Regex::Sum(l, r) | Regex::Cat(l, r) => l.leaf_count() + r.leaf_count(),
            Regex::Star(r) => r.leaf_count(),
        }
    }

    /// Total number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Sym(_) => 1,
            Regex::Sum(l, r) | Regex::Cat(l, r) => 1 + l.size() + r.size(),
            Regex::Star(r) => 1 + r.size(),
        }
    }
}

/// A regular expression whose symbol occurrences may carry a point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Item {
    Empty,
    Epsilon,
    Sym(char),
    /// `•a`: a point in front of this occurrence of `a`.
    Point(char),
    Sum(Box<Item>, Box<Item>),
    Cat(Box<Item>, Box<Item>),
    Star(Box<Item>),
}

impl Item {
    pub fn sum(l: Item, r: Item) -> Item {
        Item::Sum(Box::new(l), Box::new(r))
    }

    pub fn cat(l: Item, r: Item) -> Item {
        Item::Cat(Box::new(l), Box::new(r))
    }

    pub fn star(r: Item) -> Item {
        Item::Star(Box::new(r))
    }

    /// Erases every point.
    pub fn carrier(&self) -> Regex {
        match self {
            Item::Empty => Regex::Empty,
            Item::Epsilon => Regex::Epsilon,
            Item::Sym(c) | Item::Point(c) => Regex::Sym(*c),
            Item::Sum(l, r) => Regex::sum(l.carrier(), r.carrier()),
            Item::Cat(l, r) => Regex::cat(l.carrier(), r.carrier()),
            Item::Star(r) => Regex::star(r.carrier()),
        }
    }

    pub fn point_count(&self) -> usize {
        match self {
            Item::Empty | Item::Epsilon | Item::Sym(_) => 0,
            Item::Point(_) => 1,
            Item::Sum(l, r) | Item::Cat(l, r) => l.point_count() + r.point_count(),
            Item::Star(r) => r.point_count(),
        }
    }
}

impl From<&Regex> for Item {
    fn from(r: &Regex) -> Item {
        match r {
            Regex::Empty => Item::Empty,
            Regex::Epsilon => Item::Epsilon,
            Regex::Sym(c) => Item::Sym(*c),
            Regex::Sum(l, r) => Item::sum(l.as_ref().into(), r.as_ref().into()),
            Regex::Cat(l, r) => Item::cat(l.as_ref().into(), r.as_ref().into()),
            Regex::Star(r) => Item::star(r.as_ref().into()),
        }
    }
}

/// A pointed regular expression: an item plus the trailing-point flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pre {
    pub item: Item,
    pub fin: bool,
}

impl Pre {
    pub fn new(item: Item, fin: bool) -> Pre {
        Pre { item, fin }
    }

    pub fn carrier(&self) -> Regex {
        self.item.carrier()
    }
}

/// Erases every point of an item.
pub fn carrier(e: &Item) -> Regex {
    e.carrier()
}

pub fn carrier_pre(p: &Pre) -> Regex {
    p.item.carrier()
}

pub fn nullable(r: &Regex) -> bool {
    r.nullable()
}

/// Total structural order on regular expressions.
pub fn structural_compare(r1: &Regex, r2: &Regex) -> std::cmp::Ordering {
    r1.cmp(r2)
}

// ---------------------------------------------------------------------------
// Printing

enum Shape<'a, T> {
    Empty,
    Epsilon,
    Sym(char),
    Point(char),
    Sum(&'a T, &'a T),
    Cat(&'a T, &'a T),
    Star(&'a T),
}

trait Tree: Sized {
    fn shape(&self) -> Shape<'_, Self>;
}

impl Tree for Regex {
    fn shape(&self) -> Shape<'_, Self> {
        match self {
            Regex::Empty => Shape::Empty,
            Regex::Epsilon => Shape::Epsilon,
            Regex::Sym(c) => Shape::Sym(*c),
            Regex::Sum(l, r) => Shape::Sum(l, r),
            Regex::Cat(l, r) => Shape::Cat(l, r),
            Regex::Star(r) => Shape::Star(r),
        }
    }
}

impl Tree for Item {
    fn shape(&self) -> Shape<'_, Self> {
        match self {
            Item::Empty => Shape::Empty,
            Item::Epsilon => Shape::Epsilon,
            Item::Sym(c) => Shape::Sym(*c),
            Item::Point(c) => Shape::Point(*c),
            Item::Sum(l, r) => Shape::Sum(l, r),
            Item::Cat(l, r) => Shape::Cat(l, r),
            Item::Star(r) => Shape::Star(r),
        }
    }
}

const PREC_SUM: u8 = 0;
const PREC_CAT: u8 = 1;
const PREC_ATOM: u8 = 2;

fn write_symbol(f: &mut fmt::Formatter<'_>, c: char) -> fmt::Result {
    if RESERVED.contains(&c) {
        write!(f, "\\{c}")
    } else {
        write!(f, "{c}")
    }
}

// Sums and concatenations are left-associative in the grammar, so a right
// child of the same constructor needs parentheses to survive a round trip.
// A pointed symbol under a star is parenthesized for readability: `(^b)*`.
fn write_tree<T: Tree>(f: &mut fmt::Formatter<'_>, t: &T, min_prec: u8) -> fmt::Result {
    let prec = match t.shape() {
        Shape::Sum(..) => PREC_SUM,
        Shape::Cat(..) => PREC_CAT,
        _ => PREC_ATOM,
    };
    if prec < min_prec {
        f.write_str("(")?;
    }
    match t.shape() {
        Shape::Empty => f.write_str("\\0")?,
        Shape::Epsilon => f.write_str("\\e")?,
        Shape::Sym(c) => write_symbol(f, c)?,
        Shape::Point(c) => {
            f.write_str("^")?;
            write_symbol(f, c)?;
        }
        Shape::Sum(l, r) => {
            write_tree(f, l, PREC_SUM)?;
            f.write_str("+")?;
            write_tree(f, r, PREC_CAT)?;
        }
        Shape::Cat(l, r) => {
            write_tree(f, l, PREC_CAT)?;
            write_tree(f, r, PREC_ATOM)?;
        }
        Shape::Star(inner) => {
            if let Shape::Point(_) = inner.shape() {
                f.write_str("(")?;
                write_tree(f, inner, PREC_ATOM)?;
                f.write_str(")")?;
            } else {
                write_tree(f, inner, PREC_ATOM)?;
            }
            f.write_str("*")?;
        }
    }
    if prec < min_prec {
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tree(f, self, PREC_SUM)
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tree(f, self, PREC_SUM)
    }
}

impl fmt::Display for Pre {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tree(f, &self.item, PREC_SUM)?;
        if self.fin {
            f.write_str(TRAILING_POINT)?;
        }
        Ok(())
    }
}

pub fn render(r: &Regex) -> String {
    r.to_string()
}

pub fn render_item(e: &Item) -> String {
    e.to_string()
}

pub fn render_pre(p: &Pre) -> String {
    p.to_string()
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at byte {offset}")]
    Unexpected { offset: usize, found: char },
    #[error("unexpected end of input at byte {offset}")]
    UnexpectedEnd { offset: usize },
    #[error("unknown escape \\{found} at byte {offset}")]
    UnknownEscape { offset: usize, found: char },
    #[error("unbalanced parenthesis at byte {offset}")]
    Unbalanced { offset: usize },
    #[error("point marker at byte {offset} is not allowed in a plain regular expression")]
    PointNotAllowed { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match *self {
            ParseError::Unexpected { offset, .. }
            | ParseError::UnexpectedEnd { offset }
            | ParseError::UnknownEscape { offset, .. }
            | ParseError::Unbalanced { offset }
            | ParseError::PointNotAllowed { offset } => offset,
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    allow_points: bool,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expr(&mut self) -> Result<Item, ParseError> {
        let mut acc = self.term()?;
        while self.peek() == Some('+') {
            self.bump();
            let rhs = self.term()?;
            acc = Item::sum(acc, rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Item, ParseError> {
        let mut acc = self.factor()?;
        while let Some(c) = self.peek() {
            if c == '+' || c == ')' || c == '|' {
                break;
            }
            let rhs = self.factor()?;
            acc = Item::cat(acc, rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Item, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Some('*') {
            self.bump();
            acc = Item::star(acc);
        }
        Ok(acc)
    }

    // A literal symbol, possibly escaped; `\0` and `\e` come back as items.
    fn literal(&mut self) -> Result<Result<char, Item>, ParseError> {
        let offset = self.pos;
        match self.bump() {
            None => Err(ParseError::UnexpectedEnd { offset }),
            Some('\\') => match self.bump() {
                None => Err(ParseError::UnexpectedEnd { offset: self.pos }),
                Some('0') => Ok(Err(Item::Empty)),
                Some('e') => Ok(Err(Item::Epsilon)),
                Some(c) if RESERVED.contains(&c) => Ok(Ok(c)),
                Some(c) => Err(ParseError::UnknownEscape { offset, found: c }),
            },
            Some(c) if c.is_ascii_alphanumeric() => Ok(Ok(c)),
            Some(')') => Err(ParseError::Unbalanced { offset }),
            Some(c) => Err(ParseError::Unexpected { offset, found: c }),
        }
    }

    fn atom(&mut self) -> Result<Item, ParseError> {
        let offset = self.pos;
        match self.peek() {
            None => Err(ParseError::UnexpectedEnd { offset }),
            Some('(') => {
                self.bump();
                if self.peek().is_none() {
                    return Err(ParseError::Unbalanced { offset });
                }
                let inner = self.expr()?;
                match self.bump() {
                    Some(')') => Ok(inner),
                    None => Err(ParseError::Unbalanced { offset }),
                    Some(c) => Err(ParseError::Unexpected { offset: self.pos - c.len_utf8(), found: c }),
                }
            }
            Some('^') => {
                if !self.allow_points {
                    return Err(ParseError::PointNotAllowed { offset });
                }
                self.bump();
                let at = self.pos;
                match self.literal()? {
                    Ok(c) => Ok(Item::Point(c)),
                    // `^\0` and `^\e` point at nothing
                    Err(_) => Err(ParseError::Unexpected { offset: at, found: '\\' }),
                }
            }
            Some(_) => Ok(match self.literal()? {
                Ok(c) => Item::Sym(c),
                Err(item) => item,
            }),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(')') => Err(ParseError::Unbalanced { offset: self.pos }),
            Some(c) => Err(ParseError::Unexpected { offset: self.pos, found: c }),
        }
    }
}

fn parse_with(text: &str, allow_points: bool) -> Result<Item, ParseError> {
    let mut p = Parser { src: text, pos: 0, allow_points };
    let item = p.expr()?;
    p.finish()?;
    Ok(item)
}

/// Parses a plain regular expression.
pub fn parse(text: &str) -> Result<Regex, ParseError> {
    parse_with(text, false).map(|item| item.carrier())
}

/// Parses a pointed item; `^a` marks a pointed occurrence.
pub fn parse_item(text: &str) -> Result<Item, ParseError> {
    parse_with(text, true)
}

/// Parses a pre: a pointed item optionally followed by `|•`.
pub fn parse_pre(text: &str) -> Result<Pre, ParseError> {
    match text.strip_suffix(TRAILING_POINT) {
        Some(body) => parse_item(body).map(|item| Pre::new(item, true)),
        None => parse_item(text).map(|item| Pre::new(item, false)),
    }
}

impl std::str::FromStr for Regex {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl std::str::FromStr for Item {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_item(s)
    }
}

impl std::str::FromStr for Pre {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pre(s)
    }
}
