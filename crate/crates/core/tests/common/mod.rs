//! Independent oracles and seeded generators shared by the integration tests.
//!
//! Nothing here calls into the search code of the library: closures are
//! recomputed naively and extensions are found by trying every subset.

#![allow(dead_code)]

use std::collections::BTreeSet;

use deflog::bridges::ArgumentationFramework;
use deflog::{Sentence, Theory};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Modus-ponens closure by repeated passes until nothing changes.
pub fn naive_closure(base: &BTreeSet<Sentence>) -> BTreeSet<Sentence> {
    let mut out = base.clone();
    loop {
        let new: Vec<Sentence> = out
            .iter()
            .filter_map(|s| s.as_cond())
            .filter(|(a, _)| out.contains(*a))
            .map(|(_, c)| c.clone())
            .filter(|c| !out.contains(c))
            .collect();
        if new.is_empty() {
            return out;
        }
        out.extend(new);
    }
}

pub fn naive_conflict_free(closure: &BTreeSet<Sentence>) -> bool {
    !closure
        .iter()
        .any(|s| s.negated().is_some_and(|b| closure.contains(b)))
}

/// Specifying sets of all extensions, by trying every subset of the theory.
pub fn naive_extensions(delta: &Theory) -> Vec<BTreeSet<Sentence>> {
    let members: Vec<&Sentence> = delta.iter().collect();
    assert!(members.len() <= 20, "naive oracle is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1 << members.len()) {
        let j: BTreeSet<Sentence> = (0..members.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| members[i].clone())
            .collect();
        let closure = naive_closure(&j);
        if !naive_conflict_free(&closure) {
            continue;
        }
        let covers = members
            .iter()
            .filter(|s| !j.contains(**s))
            .all(|s| closure.contains(&Sentence::neg((*s).clone())));
        if covers {
            out.push(j);
        }
    }
    out.sort();
    out
}

pub const ATOMS: [&str; 3] = ["p", "q", "r"];

/// A random sentence over `atoms` with depth at most `depth`.
pub fn random_sentence(rng: &mut ChaCha8Rng, atoms: &[&str], depth: usize) -> Sentence {
    let roll = if depth == 0 { 0 } else { rng.gen_range(0..10) };
    match roll {
        0..=3 => Sentence::atom(atoms[rng.gen_range(0..atoms.len())]),
        4..=5 => Sentence::neg(random_sentence(rng, atoms, depth - 1)),
        6..=7 => {
            // attack form, the commonest shape in practice
            let a = random_sentence(rng, atoms, depth - 1);
            let b = random_sentence(rng, atoms, depth.saturating_sub(2));
            Sentence::attack(a, b)
        }
        _ => Sentence::cond(
            random_sentence(rng, atoms, depth - 1),
            random_sentence(rng, atoms, depth - 1),
        ),
    }
}

/// A random theory of at most `max_size` sentences (duplicates collapse).
pub fn random_theory(
    rng: &mut ChaCha8Rng,
    atoms: &[&str],
    max_size: usize,
    depth: usize,
) -> Theory {
    let n = rng.gen_range(0..=max_size);
    (0..n).map(|_| random_sentence(rng, atoms, depth)).collect()
}

/// Some atoms plus at most `max_attacks` attacks whose targets are atoms or
/// other attacks already drawn.
pub fn random_attack_theory(rng: &mut ChaCha8Rng, atoms: &[&str], max_attacks: usize) -> Theory {
    let mut t: Theory = atoms
        .iter()
        .filter(|_| rng.gen_bool(0.8))
        .map(Sentence::atom)
        .collect();
    let mut targets: Vec<Sentence> = atoms.iter().map(Sentence::atom).collect();
    for _ in 0..rng.gen_range(0..=max_attacks) {
        let from = Sentence::atom(atoms[rng.gen_range(0..atoms.len())]);
        let to = targets[rng.gen_range(0..targets.len())].clone();
        let attack = Sentence::attack(from, to);
        targets.push(attack.clone());
        t.insert(attack);
    }
    t
}

/// A random framework on `n` arguments `a0..`, each attack present with
/// probability `density`.
pub fn random_af(rng: &mut ChaCha8Rng, n: usize, density: f64) -> ArgumentationFramework {
    let args: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let mut attacks = Vec::new();
    for a in &args {
        for b in &args {
            if rng.gen_bool(density) {
                attacks.push((a.clone(), b.clone()));
            }
        }
    }
    ArgumentationFramework::new(args.clone(), attacks).unwrap()
}

/// The framework on `n` arguments whose attack relation is the bit pattern
/// `bits` over the `n * n` ordered pairs.
pub fn af_from_bits(n: usize, bits: u64) -> ArgumentationFramework {
    let args: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let attacks = (0..n * n)
        .filter(|k| bits >> k & 1 == 1)
        .map(|k| (args[k / n].clone(), args[k % n].clone()));
    ArgumentationFramework::new(args.clone(), attacks).unwrap()
}

/// `{p_i, p_{i+1} -> ~p_i | i < n}`.
pub fn chain(n: usize) -> Theory {
    let p = |i: usize| Sentence::atom(format!("p{i}"));
    (0..=n)
        .map(p)
        .chain((0..n).map(|i| Sentence::attack(p(i + 1), p(i))))
        .collect()
}

/// `{p_0..p_n} ∪ {p_j -> ~p_i | i < j}`.
pub fn tournament(n: usize) -> Theory {
    let p = |i: usize| Sentence::atom(format!("p{i}"));
    let mut t: Theory = (0..=n).map(p).collect();
    for j in 0..=n {
        for i in 0..j {
            t.insert(Sentence::attack(p(j), p(i)));
        }
    }
    t
}

/// `{~^i p | i <= n}`.
pub fn negation_tower(n: usize) -> Theory {
    (0..=n)
        .map(|i| Sentence::neg_n(Sentence::atom("p"), i))
        .collect()
}

pub fn th(text: &str) -> Theory {
    deflog::parse_theory(text).unwrap()
}

pub fn s(text: &str) -> Sentence {
    deflog::parse_sentence(text).unwrap()
}

pub fn set(xs: &[&str]) -> BTreeSet<Sentence> {
    xs.iter().map(|x| s(x)).collect()
}
