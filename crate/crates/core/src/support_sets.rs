//! Minimal supporting subsets of a theory, as bitmasks over its members.
//!
//! `labels[x]` holds the inclusion-minimal sets `A` of theory members such
//! that `A` supports universe sentence `x`. Supersets of a label support `x`
//! too, and every supporting set contains a label, so a theory's minimal
//! conflicts and minimal attackers can be read off directly.

use crate::index::Universe;

pub(crate) type Mask = u64;

pub(crate) fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Inserts `m` into an antichain, keeping only inclusion-minimal elements.
/// Returns whether the antichain changed.
pub(crate) fn insert_minimal(chain: &mut Vec<Mask>, m: Mask) -> bool {
    if chain.iter().any(|&c| is_subset(c, m)) {
        return false;
    }
    chain.retain(|&c| !is_subset(m, c));
    chain.push(m);
    true
}

pub(crate) struct SupportSets {
    /// Minimal non-conflict-free subsets of the theory.
    pub conflicts: Vec<Mask>,
    /// Per theory member (canonical index), minimal sets supporting its
    /// dialectical negation.
    pub attackers: Vec<Vec<Mask>>,
}

/// Minimal supporting sets of every sentence in the universe.
pub(crate) fn minimal_labels(uni: &Universe) -> Vec<Vec<Mask>> {
    let mut labels: Vec<Vec<Mask>> = vec![Vec::new(); uni.len()];
    for (i, &id) in uni.delta.iter().enumerate() {
        labels[id].push(1 << i);
    }
    let conds: Vec<(usize, usize, usize)> = uni
        .parts
        .iter()
        .enumerate()
        .filter_map(|(c, p)| p.map(|(a, k)| (c, a, k)))
        .collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(c, a, k) in &conds {
            if labels[c].is_empty() || labels[a].is_empty() {
                continue;
            }
            let combos: Vec<Mask> = labels[c]
                .iter()
                .flat_map(|&x| labels[a].iter().map(move |&y| x | y))
                .collect();
            for m in combos {
                changed |= insert_minimal(&mut labels[k], m);
            }
        }
    }
    labels
}

impl SupportSets {
    pub fn new(uni: &Universe) -> Self {
        let labels = minimal_labels(uni);
        let mut conflicts = Vec::new();
        for (x, neg) in uni.neg_of.iter().enumerate() {
            let Some(n) = *neg else { continue };
            for &a in &labels[x] {
                for &b in &labels[n] {
                    insert_minimal(&mut conflicts, a | b);
                }
            }
        }
        conflicts.sort_unstable();

        let attackers = uni
            .delta
            .iter()
            .map(|&id| {
                uni.neg_of[id]
                    .map(|n| labels[n].clone())
                    .unwrap_or_default()
            })
            .collect();

        SupportSets {
            conflicts,
            attackers,
        }
    }

    pub fn is_conflict_free(&self, mask: Mask) -> bool {
        !self.conflicts.iter().any(|&k| is_subset(k, mask))
    }

    /// Theory members attacked by `mask`, as a mask.
    pub fn attacked(&self, mask: Mask) -> Mask {
        self.attackers
            .iter()
            .enumerate()
            .filter(|(_, labels)| labels.iter().any(|&a| is_subset(a, mask)))
            .fold(0, |m, (i, _)| m | 1 << i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_sentence, parse_theory};

    #[test]
    fn antichain_keeps_minimal_sets() {
        let mut v = Vec::new();
        assert!(insert_minimal(&mut v, 0b110));
        assert!(!insert_minimal(&mut v, 0b111));
        assert!(insert_minimal(&mut v, 0b010));
        assert_eq!(v, vec![0b010]);
    }

    #[test]
    fn labels_of_derived_sentences() {
        // canonical order: a, t, t -> a -> s
        let t = parse_theory("t\na\nt -> a -> s").unwrap();
        let uni = Universe::new(&t);
        let labels = minimal_labels(&uni);
        let s = uni.id(&parse_sentence("s").unwrap()).unwrap();
        assert_eq!(labels[s], vec![0b111]);
        let as_ = uni.id(&parse_sentence("a -> s").unwrap()).unwrap();
        assert_eq!(labels[as_], vec![0b110]);
        assert!(SupportSets::new(&uni).conflicts.is_empty());
    }

    #[test]
    fn minimal_conflicts_and_attackers() {
        // canonical order: p, q, q -> ~p
        let t = parse_theory("p\nq\nq -> ~p").unwrap();
        let sets = SupportSets::new(&Universe::new(&t));
        assert_eq!(sets.conflicts, vec![0b111]);
        assert_eq!(sets.attackers[0], vec![0b110]);
        assert_eq!(sets.attacked(0b110), 0b001);
        assert!(sets.is_conflict_free(0b110));
        assert!(!sets.is_conflict_free(0b111));
    }
}
