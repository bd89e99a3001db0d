//! Seeded populations and helpers shared by the integration suites.
#![allow(dead_code)]

use pointed_regex::gen::{corpus, random_pre, rng, GenConfig};
use pointed_regex::syntax::{Pre, Regex};
use rand::seq::SliceRandom;
use rand::Rng;

pub const ALPHABET: &str = "abc";

pub fn population(seed: u64, count: usize) -> Vec<Regex> {
    corpus(seed, count, &GenConfig::new(8, ALPHABET))
}

pub fn alphabet() -> Vec<char> {
    ALPHABET.chars().collect()
}

/// Pairs of random pres sharing a random carrier.
pub fn pre_pairs(seed: u64, count: usize) -> Vec<(Pre, Pre)> {
    let mut g = rng(seed);
    population(seed ^ 0x9e37_79b9, count)
        .into_iter()
        .map(|r| (random_pre(&mut g, &r), random_pre(&mut g, &r)))
        .collect()
}

/// `count` pres over one carrier per entry.
pub fn pre_tuples(seed: u64, count: usize, width: usize) -> Vec<Vec<Pre>> {
    let mut g = rng(seed);
    population(seed ^ 0x51ed_270b, count)
        .into_iter()
        .map(|r| (0..width).map(|_| random_pre(&mut g, &r)).collect())
        .collect()
}

fn flatten_sum(r: &Regex, out: &mut Vec<Regex>) {
    match r {
        Regex::Sum(l, r) => {
            flatten_sum(l, out);
            flatten_sum(r, out);
        }
        _ => out.push(r.clone()),
    }
}

fn join_randomly<R: Rng>(g: &mut R, mut parts: Vec<Regex>) -> Regex {
    if parts.len() == 1 {
        return parts.pop().unwrap();
    }
    let split = g.gen_range(1..parts.len());
    let right = parts.split_off(split);
    Regex::sum(join_randomly(g, parts), join_randomly(g, right))
}

/// An expression equal to `r` modulo associativity, commutativity and
/// idempotence of `+`: summands permuted, regrouped and sometimes duplicated.
pub fn aci_reshuffle<R: Rng>(g: &mut R, r: &Regex) -> Regex {
    match r {
        Regex::Empty | Regex::Epsilon | Regex::Sym(_) => r.clone(),
        Regex::Star(b) => Regex::star(aci_reshuffle(g, b)),
        Regex::Cat(l, r) => Regex::cat(aci_reshuffle(g, l), aci_reshuffle(g, r)),
        Regex::Sum(..) => {
            let mut parts = Vec::new();
            flatten_sum(r, &mut parts);
            let mut parts: Vec<Regex> = parts.iter().map(|p| aci_reshuffle(g, p)).collect();
            parts.shuffle(g);
            if g.gen_bool(0.3) {
                let dup = parts[g.gen_range(0..parts.len())].clone();
                parts.push(dup);
            }
            join_randomly(g, parts)
        }
    }
}
