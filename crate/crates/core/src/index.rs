//! Dense indexing of a theory's subsentence closure.
//!
//! Every sentence that can ever be supported by a subset of the theory is a
//! subterm of one of its members, so closures are bitsets over this index.

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::sentence::{subsentence_closure, Sentence, Theory};

pub(crate) struct Universe {
    pub sentences: Vec<Sentence>,
    ids: HashMap<Sentence, usize>,
    /// `neg_of[x]` is the id of `~x` when it is in the universe.
    pub neg_of: Vec<Option<usize>>,
    /// `body_of[x]` is the id of `y` when `x` is `~y`.
    pub body_of: Vec<Option<usize>>,
    /// For each id, the conditionals having it as antecedent: `(cond, consequent)`.
    pub as_antecedent: Vec<Vec<(usize, usize)>>,
    /// For each id that is a conditional: `(antecedent, consequent)`.
    pub parts: Vec<Option<(usize, usize)>>,
    /// Universe ids of the theory's members, in canonical order.
    pub delta: Vec<usize>,
}

impl Universe {
    pub fn new(theory: &Theory) -> Self {
        let sentences: Vec<Sentence> = subsentence_closure(theory).into_iter().collect();
        let ids: HashMap<Sentence, usize> = sentences
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let n = sentences.len();
        let mut neg_of = vec![None; n];
        let mut body_of = vec![None; n];
        let mut as_antecedent = vec![Vec::new(); n];
        let mut parts = vec![None; n];
        for (i, s) in sentences.iter().enumerate() {
            match s {
                Sentence::Atom(_) => {}
                Sentence::Neg(b) => {
                    let b = ids[&**b];
                    neg_of[b] = Some(i);
                    body_of[i] = Some(b);
                }
                Sentence::Cond(a, c) => {
                    let (a, c) = (ids[&**a], ids[&**c]);
                    as_antecedent[a].push((i, c));
                    parts[i] = Some((a, c));
                }
            }
        }
        let delta = theory.iter().map(|s| ids[s]).collect();
        Universe {
            sentences,
            ids,
            neg_of,
            body_of,
            as_antecedent,
            parts,
            delta,
        }
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn id(&self, s: &Sentence) -> Option<usize> {
        self.ids.get(s).copied()
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.len())
    }

    /// Closure of the theory members selected by `mask` (bit `i` is the
    /// `i`-th member in canonical order).
    pub fn closure_of_mask(&self, mask: u64) -> FixedBitSet {
        let mut c = Closure::new(self);
        for (i, &id) in self.delta.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let _ = c.insert(id);
            }
        }
        c.member
    }

    pub fn is_conflicting(&self, set: &FixedBitSet) -> bool {
        set.ones()
            .any(|x| matches!(self.body_of[x], Some(b) if set.contains(b)))
    }

    pub fn to_sentences(&self, set: &FixedBitSet) -> BTreeSet<Sentence> {
        set.ones().map(|i| self.sentences[i].clone()).collect()
    }

    /// Sentences whose dialectical negation is in `set`.
    pub fn attacked_sentences(&self, set: &FixedBitSet) -> BTreeSet<Sentence> {
        set.ones()
            .filter_map(|i| self.body_of[i])
            .map(|b| self.sentences[b].clone())
            .collect()
    }

    /// Theory members (as a mask) contained in `set`.
    pub fn delta_mask_in(&self, set: &FixedBitSet) -> u64 {
        self.delta
            .iter()
            .enumerate()
            .filter(|(_, &id)| set.contains(id))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    /// Theory members (as a mask) whose negation is in `set`.
    pub fn delta_mask_attacked(&self, set: &FixedBitSet) -> u64 {
        self.delta
            .iter()
            .enumerate()
            .filter(|(_, &id)| matches!(self.neg_of[id], Some(n) if set.contains(n)))
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn mask_to_sentences(&self, mask: u64) -> BTreeSet<Sentence> {
        self.delta
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &id)| self.sentences[id].clone())
            .collect()
    }
}

/// A modus-ponens closed set that grows monotonically and can be rolled
/// back to an earlier mark.
pub(crate) struct Closure<'u> {
    uni: &'u Universe,
    pub member: FixedBitSet,
    trail: Vec<usize>,
    /// Ids that must never enter the set; reaching one is reported as a
    /// violation by [`Closure::insert`].
    forbidden: FixedBitSet,
    queue: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Violation {
    /// Both `x` and `~x` are supported.
    Conflict,
    /// A forbidden sentence became supported.
    Forbidden,
}

impl<'u> Closure<'u> {
    pub fn new(uni: &'u Universe) -> Self {
        Closure {
            uni,
            member: uni.empty_set(),
            trail: Vec::new(),
            forbidden: uni.empty_set(),
            queue: Vec::new(),
        }
    }

    pub fn contains(&self, id: usize) -> bool {
        self.member.contains(id)
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn rollback(&mut self, mark: usize) {
        for id in self.trail.drain(mark..) {
            self.member.set(id, false);
        }
    }

    pub fn forbid(&mut self, id: usize, on: bool) {
        self.forbidden.set(id, on);
    }

    /// Adds `id` and everything that follows by modus ponens. On a
    /// violation the set is left partially extended; callers roll back.
    pub fn insert(&mut self, id: usize) -> Result<(), Violation> {
        let mut violation = None;
        self.queue.clear();
        self.queue.push(id);
        while let Some(x) = self.queue.pop() {
            if self.member.contains(x) {
                continue;
            }
            self.member.insert(x);
            self.trail.push(x);
            if self.forbidden.contains(x) {
                violation.get_or_insert(Violation::Forbidden);
            }
            let clash = matches!(self.uni.neg_of[x], Some(n) if self.member.contains(n))
                || matches!(self.uni.body_of[x], Some(b) if self.member.contains(b));
            if clash {
                violation.get_or_insert(Violation::Conflict);
            }
            for &(cond, consequent) in &self.uni.as_antecedent[x] {
                if self.member.contains(cond) {
                    self.queue.push(consequent);
                }
            }
            if let Some((antecedent, consequent)) = self.uni.parts[x] {
                if self.member.contains(antecedent) {
                    self.queue.push(consequent);
                }
            }
        }
        match violation {
            Some(v) => Err(v),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_theory;

    #[test]
    fn incremental_closure_and_rollback() {
        let t = parse_theory("t\na\nt -> a -> s").unwrap();
        let u = Universe::new(&t);
        let mut c = Closure::new(&u);
        let s = u.id(&Sentence::atom("s")).unwrap();
        let cond = u
            .id(&crate::parser::parse_sentence("t -> a -> s").unwrap())
            .unwrap();
        c.insert(cond).unwrap();
        let m = c.mark();
        c.insert(u.id(&Sentence::atom("t")).unwrap()).unwrap();
        assert!(!c.contains(s));
        c.insert(u.id(&Sentence::atom("a")).unwrap()).unwrap();
        assert!(c.contains(s));
        c.rollback(m);
        assert!(!c.contains(s));
        assert_eq!(c.member.count_ones(..), 1);
    }

    #[test]
    fn conflict_and_forbidden_are_reported() {
        let t = parse_theory("p\nq\nq -> ~p").unwrap();
        let u = Universe::new(&t);
        let id = |x: &str| u.id(&crate::parser::parse_sentence(x).unwrap()).unwrap();
        let mut c = Closure::new(&u);
        c.insert(id("p")).unwrap();
        c.insert(id("q")).unwrap();
        assert_eq!(c.insert(id("q -> ~p")), Err(Violation::Conflict));

        let mut c = Closure::new(&u);
        c.forbid(id("q"), true);
        c.insert(id("q -> ~p")).unwrap();
        assert_eq!(c.insert(id("q")), Err(Violation::Forbidden));
    }
}
