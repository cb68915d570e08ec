//! Arguments, dialectical justification, contexts, and the existence and
//! count characterizations of extensions.
//!
//! A Δ-argument is *dialectically justifying* when it attacks every
//! Δ-argument incompatible with it. A theory has an extension iff some
//! Δ-argument is a *valid context*: every member of the theory is either
//! justifiable or defeasible in it, never both. The number of extensions is
//! the largest number of pairwise incompatible valid contexts.
//!
//! Queries go through [`Analysis`], which precomputes the minimal supporting
//! subsets of every sentence. Justification then only has to look at the
//! minimal incompatible arguments (`K \ C` for each minimal conflict `K`
//! meeting `C`), since attacking a premise of a minimal one attacks every
//! superset. [`lattice::LatticeOracle`] checks the same notions by brute
//! force over all subsets.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::error::{Error, Result};
use crate::index::Universe;
use crate::semantics::{supp, Limits, SupportSet};
use crate::sentence::{Sentence, Theory};
use crate::support_sets::{is_subset, Mask, SupportSets};

/// Masks are 64 bits wide, whatever the configured limit.
pub const MAX_ANALYSIS_SENTENCES: usize = 64;

/// A conflict-free set of sentences.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Argument {
    premises: BTreeSet<Sentence>,
}

impl Argument {
    pub fn new(premises: impl IntoIterator<Item = Sentence>) -> Result<Self> {
        let premises: BTreeSet<Sentence> = premises.into_iter().collect();
        if !supp(&premises).is_conflict_free() {
            return Err(Error::NotConflictFree);
        }
        Ok(Argument { premises })
    }

    pub fn empty() -> Self {
        Argument {
            premises: BTreeSet::new(),
        }
    }

    pub fn premises(&self) -> &BTreeSet<Sentence> {
        &self.premises
    }

    pub fn support(&self) -> SupportSet {
        supp(&self.premises)
    }

    pub fn conclusions(&self) -> BTreeSet<Sentence> {
        self.support().closure
    }

    pub fn supports(&self, phi: &Sentence) -> bool {
        self.support().supports(phi)
    }

    /// Sentences this argument argues against.
    pub fn defeats(&self) -> BTreeSet<Sentence> {
        self.support().attacked()
    }

    pub fn len(&self) -> usize {
        self.premises.len()
    }

    pub fn is_empty(&self) -> bool {
        self.premises.is_empty()
    }
}

/// `c` is conflict-free and contained in `delta`.
pub fn is_delta_argument(delta: &Theory, c: &BTreeSet<Sentence>) -> bool {
    delta.is_superset_of(c) && supp(c).is_conflict_free()
}

/// `c` attacks some premise of `c2`.
pub fn argument_attacks(c: &Argument, c2: &Argument) -> bool {
    let support = c.support();
    c2.premises.iter().any(|phi| support.attacks(phi))
}

pub fn compatible(c: &Argument, c2: &Argument) -> bool {
    compatible_all([c, c2])
}

/// The union of all premises is conflict-free.
pub fn compatible_all<'a>(args: impl IntoIterator<Item = &'a Argument>) -> bool {
    let union: BTreeSet<Sentence> = args
        .into_iter()
        .flat_map(|a| a.premises.iter().cloned())
        .collect();
    supp(&union).is_conflict_free()
}

/// Outcome of a justification query for a single sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JustificationVerdict {
    pub subject: Sentence,
    pub justifiable: bool,
    pub defeasible: bool,
    pub witness_for: Option<Argument>,
    pub witness_against: Option<Argument>,
}

impl JustificationVerdict {
    pub fn is_ambiguous(&self) -> bool {
        self.justifiable && self.defeasible
    }

    pub fn is_interpretable(&self) -> bool {
        self.justifiable || self.defeasible
    }
}

struct JustifyingArgument {
    mask: Mask,
    closure: FixedBitSet,
    supported: Mask,
    attacked: Mask,
}

/// Precomputed justification structure of one theory.
pub struct Analysis {
    delta: Theory,
    uni: Universe,
    sets: SupportSets,
    full: Mask,
    justifying: OnceLock<Vec<JustifyingArgument>>,
}

impl Analysis {
    pub fn new(delta: &Theory) -> Result<Self> {
        Self::with_limits(delta, Limits::default())
    }

    pub fn with_limits(delta: &Theory, limits: Limits) -> Result<Self> {
        limits.check(delta)?;
        if delta.len() > MAX_ANALYSIS_SENTENCES {
            return Err(Error::TheoryTooLarge {
                size: delta.len(),
                limit: MAX_ANALYSIS_SENTENCES,
            });
        }
        let uni = Universe::new(delta);
        let sets = SupportSets::new(&uni);
        let full = if delta.len() == 64 {
            Mask::MAX
        } else {
            (1 << delta.len()) - 1
        };
        Ok(Analysis {
            delta: delta.clone(),
            uni,
            sets,
            full,
            justifying: OnceLock::new(),
        })
    }

    pub fn theory(&self) -> &Theory {
        &self.delta
    }

    fn mask_of(&self, c: &BTreeSet<Sentence>) -> Result<Mask> {
        let mut mask = 0;
        for s in c {
            let i = self
                .delta
                .iter()
                .position(|d| d == s)
                .ok_or_else(|| Error::NotDeltaArgument(s.clone()))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }

    fn argument_mask(&self, c: &Argument) -> Result<Mask> {
        self.mask_of(&c.premises)
    }

    fn to_argument(&self, mask: Mask) -> Argument {
        Argument {
            premises: self.uni.mask_to_sentences(mask),
        }
    }

    /// Δ-arguments in canonical order: by size, then lexicographically.
    fn arguments_in_order(&self) -> impl Iterator<Item = Mask> + '_ {
        let n = self.delta.len();
        (0..=n)
            .flat_map(move |k| (0..n).combinations(k))
            .map(|idx| idx.into_iter().fold(0, |m: Mask, i| m | 1 << i))
            .filter(|&m| self.sets.is_conflict_free(m))
    }

    pub(crate) fn mask_is_justifying(&self, mask: Mask) -> bool {
        let attacked = self.sets.attacked(mask);
        self.sets
            .conflicts
            .iter()
            .filter(|&&k| k & mask != 0)
            .all(|&k| attacked & (k & !mask) != 0)
    }

    pub(crate) fn mask_is_admissible(&self, mask: Mask) -> bool {
        let attacked = self.sets.attacked(mask);
        (0..self.delta.len())
            .filter(|i| mask >> i & 1 == 1)
            .all(|i| {
                self.sets.attackers[i]
                    .iter()
                    .filter(|&&a| self.sets.is_conflict_free(a))
                    .all(|&a| attacked & a != 0)
            })
    }

    fn justifying(&self) -> &[JustifyingArgument] {
        self.justifying.get_or_init(|| {
            self.arguments_in_order()
                .filter(|&m| self.mask_is_justifying(m))
                .map(|mask| {
                    let closure = self.uni.closure_of_mask(mask);
                    JustifyingArgument {
                        mask,
                        supported: self.uni.delta_mask_in(&closure),
                        attacked: self.uni.delta_mask_attacked(&closure),
                        closure,
                    }
                })
                .collect()
        })
    }

    fn closure_supports(&self, closure: &FixedBitSet, phi: &Sentence) -> bool {
        self.uni.id(phi).is_some_and(|id| closure.contains(id))
    }

    fn require_argument(&self, c: &Argument) -> Result<Mask> {
        self.argument_mask(c)
    }

    /// Every dialectically justifying Δ-argument, smallest first.
    pub fn justifying_arguments(&self) -> Vec<Argument> {
        self.justifying()
            .iter()
            .map(|j| self.to_argument(j.mask))
            .collect()
    }

    /// Every Δ-argument, smallest first.
    pub fn arguments(&self) -> Vec<Argument> {
        self.arguments_in_order()
            .map(|m| self.to_argument(m))
            .collect()
    }

    pub fn is_dialectically_justifying(&self, c: &Argument) -> Result<bool> {
        Ok(self.mask_is_justifying(self.require_argument(c)?))
    }

    /// `c` attacks every Δ-argument that attacks it.
    pub fn is_admissible(&self, c: &Argument) -> Result<bool> {
        Ok(self.mask_is_admissible(self.require_argument(c)?))
    }

    /// The minimal Δ-arguments incompatible with `c`.
    pub fn minimal_incompatible(&self, c: &Argument) -> Result<Vec<Argument>> {
        let mask = self.require_argument(c)?;
        let mut out: Vec<Mask> = Vec::new();
        for &k in self.sets.conflicts.iter().filter(|&&k| k & mask != 0) {
            crate::support_sets::insert_minimal(&mut out, k & !mask);
        }
        out.sort_unstable_by_key(|m| (m.count_ones(), *m));
        Ok(out.into_iter().map(|m| self.to_argument(m)).collect())
    }

    /// First justifying argument, in canonical order, that contains
    /// `context` and supports `phi`.
    fn witness(&self, context: Mask, phi: &Sentence) -> Option<Mask> {
        self.justifying()
            .iter()
            .find(|j| is_subset(context, j.mask) && self.closure_supports(&j.closure, phi))
            .map(|j| j.mask)
    }

    pub fn verdict(&self, phi: &Sentence) -> JustificationVerdict {
        let for_ = self.witness(0, phi);
        let against = self.witness(0, &Sentence::neg(phi.clone()));
        JustificationVerdict {
            subject: phi.clone(),
            justifiable: for_.is_some(),
            defeasible: against.is_some(),
            witness_for: for_.map(|m| self.to_argument(m)),
            witness_against: against.map(|m| self.to_argument(m)),
        }
    }

    pub fn justifiable_in_context(&self, c: &Argument, phi: &Sentence) -> Result<bool> {
        let mask = self.require_argument(c)?;
        Ok(self.witness(mask, phi).is_some())
    }

    pub fn defeasible_in_context(&self, c: &Argument, phi: &Sentence) -> Result<bool> {
        self.justifiable_in_context(c, &Sentence::neg(phi.clone()))
    }

    pub(crate) fn mask_is_valid_context(&self, mask: Mask) -> bool {
        let (mut supported, mut attacked) = (0, 0);
        for j in self.justifying().iter().filter(|j| is_subset(mask, j.mask)) {
            supported |= j.supported;
            attacked |= j.attacked;
        }
        supported | attacked == self.full && supported & attacked == 0
    }

    /// Every member of the theory is justifiable or defeasible in the
    /// context `c`, and none is both.
    pub fn is_valid_context(&self, c: &Argument) -> Result<bool> {
        Ok(self.mask_is_valid_context(self.require_argument(c)?))
    }

    /// Every valid context, smallest first.
    pub fn valid_contexts(&self) -> Vec<Argument> {
        self.valid_context_masks()
            .into_iter()
            .map(|m| self.to_argument(m))
            .collect()
    }

    fn valid_context_masks(&self) -> Vec<Mask> {
        self.arguments_in_order()
            .filter(|&m| self.mask_is_valid_context(m))
            .collect()
    }

    pub fn has_extension(&self) -> bool {
        self.arguments_in_order()
            .any(|m| self.mask_is_valid_context(m))
    }

    /// Largest number of pairwise incompatible valid contexts.
    ///
    /// Enlarging a context only adds incompatibilities, so the search runs
    /// over the inclusion-maximal valid contexts.
    pub fn count_extensions(&self) -> usize {
        let mut valid = self.valid_context_masks();
        valid.sort_by_key(|m| std::cmp::Reverse(m.count_ones()));
        let mut maximal: Vec<Mask> = Vec::new();
        for m in valid {
            if !maximal.iter().any(|&x| is_subset(m, x)) {
                maximal.push(m);
            }
        }
        let n = maximal.len();
        let adjacency: Vec<FixedBitSet> = (0..n)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                for j in 0..n {
                    if i != j && !self.sets.is_conflict_free(maximal[i] | maximal[j]) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        max_clique(&adjacency, 0, all, FixedBitSet::with_capacity(n))
    }

    /// Checks admissibility against justification on every Δ-argument.
    pub fn admissible_matches_justifying(&self) -> bool {
        self.first_admissibility_mismatch().is_none()
    }

    /// First Δ-argument where admissibility and justification disagree.
    pub fn first_admissibility_mismatch(&self) -> Option<Argument> {
        self.admissibility_mismatches().next()
    }

    /// Δ-arguments where admissibility and justification disagree, in
    /// canonical order.
    fn admissibility_mismatches(&self) -> impl Iterator<Item = Argument> + '_ {
        self.arguments_in_order()
            .filter(|&m| self.mask_is_admissible(m) != self.mask_is_justifying(m))
            .map(|m| self.to_argument(m))
    }

    /// Number of Δ-arguments where admissibility and justification disagree.
    pub fn admissibility_mismatch_count(&self) -> usize {
        self.admissibility_mismatches().count()
    }
}

/// Bron–Kerbosch with pivoting; returns the size of a maximum clique.
fn max_clique(
    adj: &[FixedBitSet],
    size: usize,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
) -> usize {
    if candidates.is_clear() && excluded.is_clear() {
        return size;
    }
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| adj[u].intersection(&candidates).count())
        .unwrap();
    let mut best = size;
    let branch: Vec<usize> = candidates.difference(&adj[pivot]).collect();
    for v in branch {
        let mut next_c = candidates.clone();
        next_c.intersect_with(&adj[v]);
        let mut next_x = excluded.clone();
        next_x.intersect_with(&adj[v]);
        best = best.max(max_clique(adj, size + 1, next_c, next_x));
        candidates.set(v, false);
        excluded.insert(v);
    }
    best
}

pub fn is_dialectically_justifying(delta: &Theory, c: &Argument) -> Result<bool> {
    Analysis::new(delta)?.is_dialectically_justifying(c)
}

pub fn justification_verdict(delta: &Theory, phi: &Sentence) -> Result<JustificationVerdict> {
    Ok(Analysis::new(delta)?.verdict(phi))
}

pub fn justifiable_in_context(delta: &Theory, c: &Argument, phi: &Sentence) -> Result<bool> {
    Analysis::new(delta)?.justifiable_in_context(c, phi)
}

pub fn defeasible_in_context(delta: &Theory, c: &Argument, phi: &Sentence) -> Result<bool> {
    Analysis::new(delta)?.defeasible_in_context(c, phi)
}

pub fn is_valid_context(delta: &Theory, c: &Argument) -> Result<bool> {
    Analysis::new(delta)?.is_valid_context(c)
}

pub fn has_extension_oracle(delta: &Theory) -> Result<bool> {
    Ok(Analysis::new(delta)?.has_extension())
}

pub fn count_extensions_oracle(delta: &Theory) -> Result<usize> {
    Ok(Analysis::new(delta)?.count_extensions())
}

pub mod lattice {
    //! Brute-force versions of the justification notions: every subset of
    //! the theory is closed under modus ponens once and the definitions are
    //! evaluated literally over the full subset lattice.

    use super::*;

    pub struct LatticeOracle {
        n: usize,
        conflict_free: Vec<bool>,
        attacked: Vec<Mask>,
        delta: Vec<Sentence>,
    }

    impl LatticeOracle {
        /// Tables have `2^|delta|` entries; intended for small theories.
        pub fn new(delta: &Theory) -> Self {
            assert!(
                delta.len() <= 20,
                "lattice oracle is limited to 20 sentences"
            );
            let uni = Universe::new(delta);
            let n = delta.len();
            let mut conflict_free = Vec::with_capacity(1 << n);
            let mut attacked = Vec::with_capacity(1 << n);
            for mask in 0..(1u64 << n) {
                let closure = uni.closure_of_mask(mask);
                conflict_free.push(!uni.is_conflicting(&closure));
                attacked.push(uni.delta_mask_attacked(&closure));
            }
            LatticeOracle {
                n,
                conflict_free,
                attacked,
                delta: delta.iter().cloned().collect(),
            }
        }

        pub fn mask_of(&self, c: &BTreeSet<Sentence>) -> Option<Mask> {
            c.iter().try_fold(0, |m, s| {
                self.delta.iter().position(|d| d == s).map(|i| m | 1 << i)
            })
        }

        pub fn arguments(&self) -> impl Iterator<Item = Mask> + '_ {
            (0..1u64 << self.n).filter(|&m| self.conflict_free[m as usize])
        }

        pub fn sentences(&self, mask: Mask) -> BTreeSet<Sentence> {
            (0..self.n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.delta[i].clone())
                .collect()
        }

        pub fn is_argument(&self, mask: Mask) -> bool {
            self.conflict_free[mask as usize]
        }

        pub fn attacks(&self, c: Mask, c2: Mask) -> bool {
            self.attacked[c as usize] & c2 != 0
        }

        pub fn is_justifying(&self, c: Mask) -> bool {
            self.arguments()
                .filter(|&c2| !self.conflict_free[(c | c2) as usize])
                .all(|c2| self.attacks(c, c2))
        }

        pub fn is_admissible(&self, c: Mask) -> bool {
            self.arguments()
                .filter(|&c2| self.attacks(c2, c))
                .all(|c2| self.attacks(c, c2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_sentence, parse_theory};

    fn s(x: &str) -> Sentence {
        parse_sentence(x).unwrap()
    }
    fn th(text: &str) -> Theory {
        parse_theory(text).unwrap()
    }
    fn set(xs: &[&str]) -> BTreeSet<Sentence> {
        xs.iter().map(|x| s(x)).collect()
    }
    fn arg(xs: &[&str]) -> Argument {
        Argument::new(set(xs)).unwrap()
    }

    const REINSTATEMENT: &str = "p\nq\nr\nq -> ~p\nr -> ~q";
    const MUTUAL: &str = "p\nq\np -> ~q\nq -> ~p";

    #[test]
    fn delta_arguments() {
        let d = th("p\n~p");
        assert!(!is_delta_argument(&d, &set(&["p", "~p"])));
        assert!(is_delta_argument(&d, &set(&["~p"])));
        assert!(!is_delta_argument(&th("p"), &set(&["p", "q"])));
        assert!(matches!(
            Argument::new(set(&["p", "~p"])),
            Err(Error::NotConflictFree)
        ));
    }

    #[test]
    fn attacks_between_arguments() {
        assert!(argument_attacks(&arg(&["b", "b -> ~s"]), &arg(&["s", "t"])));
        assert!(!argument_attacks(&Argument::empty(), &arg(&["s"])));
        assert!(argument_attacks(
            &arg(&["r", "r -> ~q"]),
            &arg(&["q", "q -> ~p"])
        ));
        // attack must hit a premise, not a conclusion
        assert!(!argument_attacks(
            &arg(&["b", "b -> ~s"]),
            &arg(&["a", "a -> s"])
        ));
    }

    #[test]
    fn compatibility() {
        assert!(!compatible(&arg(&["p"]), &arg(&["q", "q -> ~p"])));
        assert!(compatible(&arg(&["p"]), &arg(&["p"])));
        assert!(compatible(&arg(&["a"]), &arg(&["b", "b -> ~s"])));
        assert!(!compatible_all([
            &arg(&["p"]),
            &arg(&["q"]),
            &arg(&["q -> ~p"])
        ]));
    }

    #[test]
    fn justifying_examples() {
        let d = th(REINSTATEMENT);
        assert!(is_dialectically_justifying(&d, &arg(&["p", "r", "r -> ~q"])).unwrap());
        assert!(!is_dialectically_justifying(&d, &arg(&["p"])).unwrap());
        let d2 = th("p1\np1 -> q\np2\np2 -> q -> ~q");
        assert!(is_dialectically_justifying(&d2, &Argument::empty()).unwrap());
        assert!(matches!(
            is_dialectically_justifying(&d, &arg(&["z"])),
            Err(Error::NotDeltaArgument(_))
        ));
    }

    #[test]
    fn minimal_incompatible_arguments() {
        let a = Analysis::new(&th(REINSTATEMENT)).unwrap();
        let got = a.minimal_incompatible(&arg(&["p"])).unwrap();
        assert_eq!(got, vec![arg(&["q", "q -> ~p"])]);
    }

    #[test]
    fn verdicts() {
        let v = justification_verdict(&th("p\np -> ~p"), &s("p")).unwrap();
        assert!(!v.justifiable && !v.defeasible && v.witness_for.is_none());
        let v = justification_verdict(&th(MUTUAL), &s("p")).unwrap();
        assert!(v.is_ambiguous());
        assert_eq!(v.witness_for.unwrap(), arg(&["p", "p -> ~q"]));
        assert_eq!(v.witness_against.unwrap(), arg(&["q", "q -> ~p"]));
        let v = justification_verdict(&th(REINSTATEMENT), &s("q")).unwrap();
        assert!(!v.justifiable && v.defeasible);
        assert_eq!(v.witness_against.unwrap(), arg(&["r", "r -> ~q"]));
        let v = justification_verdict(&th(REINSTATEMENT), &s("p")).unwrap();
        assert_eq!(v.witness_for.unwrap(), arg(&["p", "r", "r -> ~q"]));
    }

    #[test]
    fn verdict_for_sentence_outside_theory() {
        let v = justification_verdict(&th("a\na -> s"), &s("s")).unwrap();
        assert!(v.justifiable && !v.defeasible);
        let v = justification_verdict(&th("a"), &s("zzz")).unwrap();
        assert!(!v.is_interpretable());
    }

    #[test]
    fn contexts() {
        let d = th(MUTUAL);
        assert!(!justifiable_in_context(&d, &arg(&["p"]), &s("q")).unwrap());
        assert!(defeasible_in_context(&d, &arg(&["p"]), &s("q")).unwrap());
        assert!(justifiable_in_context(&th("p"), &Argument::empty(), &s("p")).unwrap());
        assert!(!justifiable_in_context(&th("p\np -> ~p"), &Argument::empty(), &s("p")).unwrap());

        assert!(is_valid_context(&d, &arg(&["p"])).unwrap());
        assert!(!is_valid_context(&d, &Argument::empty()).unwrap());
        assert!(!is_valid_context(&th("p\np -> ~p"), &Argument::empty()).unwrap());
    }

    #[test]
    fn oracles() {
        let counter = th("p\nq\np -> ~q\nq -> ~p\nr\nr -> ~r\ns\ns -> ~s\np -> ~r\nq -> ~s");
        assert!(!has_extension_oracle(&counter).unwrap());
        assert_eq!(count_extensions_oracle(&counter).unwrap(), 0);
        assert!(has_extension_oracle(&th(REINSTATEMENT)).unwrap());
        assert!(has_extension_oracle(&Theory::new()).unwrap());
        assert_eq!(count_extensions_oracle(&th(MUTUAL)).unwrap(), 2);
        assert_eq!(count_extensions_oracle(&th("p\np -> ~p")).unwrap(), 0);
        assert_eq!(count_extensions_oracle(&th("p")).unwrap(), 1);
        assert_eq!(count_extensions_oracle(&Theory::new()).unwrap(), 1);
    }

    #[test]
    fn defeats_set_of_witness() {
        let a = arg(&["q", "q -> ~p", "q -> ~s"]);
        assert_eq!(a.defeats(), set(&["p", "s"]));
    }

    #[test]
    fn max_clique_small_graphs() {
        let mk = |n: usize, edges: &[(usize, usize)]| {
            let mut adj = vec![FixedBitSet::with_capacity(n); n];
            for &(a, b) in edges {
                adj[a].insert(b);
                adj[b].insert(a);
            }
            let mut all = FixedBitSet::with_capacity(n);
            all.insert_range(..);
            max_clique(&adj, 0, all, FixedBitSet::with_capacity(n))
        };
        assert_eq!(mk(0, &[]), 0);
        assert_eq!(mk(3, &[]), 1);
        assert_eq!(mk(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]), 3);
    }

    #[test]
    fn lattice_oracle_agrees_on_examples() {
        for text in [
            REINSTATEMENT,
            MUTUAL,
            "p1\np1 -> q\np2\np2 -> q -> ~q",
            "p\n~p\n~~p",
        ] {
            let d = th(text);
            let fast = Analysis::new(&d).unwrap();
            let slow = lattice::LatticeOracle::new(&d);
            let fast_args: Vec<Mask> = fast.arguments_in_order().collect();
            assert_eq!(fast_args.len(), slow.arguments().count(), "{text}");
            for m in slow.arguments() {
                assert!(fast_args.contains(&m));
                assert_eq!(
                    fast.mask_is_justifying(m),
                    slow.is_justifying(m),
                    "{text} {m:b}"
                );
                assert_eq!(
                    fast.mask_is_admissible(m),
                    slow.is_admissible(m),
                    "{text} {m:b}"
                );
            }
        }
    }
}
