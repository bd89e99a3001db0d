//! Seeded pseudo-random regular expressions, items and pres, for the CLI
//! corpus generator and the property suites.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::syntax::{Item, Pre, Regex};

/// Shape parameters for random expressions.
#[derive(Debug, Clone)]
pub struct GenConfig {
    pub max_leaves: usize,
    pub alphabet: Vec<char>,
}

impl GenConfig {
    pub fn new(max_leaves: usize, alphabet: &str) -> GenConfig {
        GenConfig { max_leaves: max_leaves.max(1), alphabet: alphabet.chars().collect() }
    }
}

/// Deterministic RNG used everywhere a seed is accepted.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn leaf<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Regex {
    let roll = rng.gen_range(0..10);
    if roll == 0 || cfg.alphabet.is_empty() {
        if rng.gen_bool(0.5) {
            Regex::Empty
        } else {
            Regex::Epsilon
        }
    } else if roll <= 2 {
        Regex::Epsilon
    } else {
        Regex::Sym(cfg.alphabet[rng.gen_range(0..cfg.alphabet.len())])
    }
}

fn tree<R: Rng>(rng: &mut R, cfg: &GenConfig, leaves: usize, root: bool) -> Regex {
    let node = if leaves == 1 {
        leaf(rng, cfg)
    } else {
        let left = rng.gen_range(1..leaves);
        let l = tree(rng, cfg, left, false);
        let r = tree(rng, cfg, leaves - left, false);
        if rng.gen_bool(0.5) {
            Regex::sum(l, r)
        } else {
            Regex::cat(l, r)
        }
    };
    // a lone atom at the root stays an atom
    if (!root || leaves > 1) && rng.gen_range(0..5) == 0 {
        Regex::star(node)
    } else {
        node
    }
}

/// A random expression with between 1 and `cfg.max_leaves` atomic leaves.
pub fn random_regex<R: Rng>(rng: &mut R, cfg: &GenConfig) -> Regex {
    let leaves = rng.gen_range(1..=cfg.max_leaves);
    tree(rng, cfg, leaves, true)
}

/// Points each symbol occurrence of `r` independently with probability `p`.
pub fn random_pointing<R: Rng>(rng: &mut R, r: &Regex, p: f64) -> Item {
    match r {
        Regex::Empty => Item::Empty,
        Regex::Epsilon => Item::Epsilon,
        Regex::Sym(c) => {
            if rng.gen_bool(p) {
                Item::Point(*c)
            } else {
                Item::Sym(*c)
            }
        }
        Regex::Sum(l, r) => Item::sum(random_pointing(rng, l, p), random_pointing(rng, r, p)),
        Regex::Cat(l, r) => Item::cat(random_pointing(rng, l, p), random_pointing(rng, r, p)),
        Regex::Star(body) => Item::star(random_pointing(rng, body, p)),
    }
}

/// A random pre over the carrier `r`.
pub fn random_pre<R: Rng>(rng: &mut R, r: &Regex) -> Pre {
    let item = random_pointing(rng, r, 0.4);
    Pre::new(item, rng.gen_bool(0.5))
}

/// `count` expressions from `seed`, identical across runs.
pub fn corpus(seed: u64, count: usize, cfg: &GenConfig) -> Vec<Regex> {
    let mut rng = rng(seed);
    (0..count).map(|_| random_regex(&mut rng, cfg)).collect()
}
