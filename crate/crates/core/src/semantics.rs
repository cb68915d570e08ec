//! Support, attack, conflict-freeness and extension enumeration.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::index::{Closure, Universe};
use crate::sentence::{Sentence, Theory};

/// Resource guard for the exponential searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_sentences: usize,
}

impl Limits {
    pub const DEFAULT_MAX_SENTENCES: usize = 24;

    pub fn new(max_sentences: usize) -> Self {
        Limits { max_sentences }
    }

    pub(crate) fn check(&self, theory: &Theory) -> Result<()> {
        if theory.len() > self.max_sentences {
            return Err(Error::TheoryTooLarge {
                size: theory.len(),
                limit: self.max_sentences,
            });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::new(Self::DEFAULT_MAX_SENTENCES)
    }
}

/// A set of sentences together with everything it supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    pub base: BTreeSet<Sentence>,
    pub closure: BTreeSet<Sentence>,
}

impl SupportSet {
    pub fn supports(&self, phi: &Sentence) -> bool {
        self.closure.contains(phi)
    }

    pub fn attacks(&self, phi: &Sentence) -> bool {
        self.closure.contains(&Sentence::neg(phi.clone()))
    }

    /// Every sentence whose dialectical negation is supported.
    pub fn attacked(&self) -> BTreeSet<Sentence> {
        self.closure
            .iter()
            .filter_map(|s| s.negated().cloned())
            .collect()
    }

    pub fn is_conflict_free(&self) -> bool {
        !self
            .closure
            .iter()
            .any(|s| matches!(s.negated(), Some(b) if self.closure.contains(b)))
    }
}

/// Least superset of `t` closed under `->`-modus ponens.
pub fn supp<'a>(t: impl IntoIterator<Item = &'a Sentence>) -> SupportSet {
    let base: BTreeSet<Sentence> = t.into_iter().cloned().collect();
    let mut closure = base.clone();
    loop {
        let derived: Vec<Sentence> = closure
            .iter()
            .filter_map(Sentence::as_cond)
            .filter(|(a, c)| closure.contains(*a) && !closure.contains(*c))
            .map(|(_, c)| c.clone())
            .collect();
        if derived.is_empty() {
            break;
        }
        closure.extend(derived);
    }
    SupportSet { base, closure }
}

pub fn supports<'a>(t: impl IntoIterator<Item = &'a Sentence>, phi: &Sentence) -> bool {
    supp(t).supports(phi)
}

pub fn attacks<'a>(t: impl IntoIterator<Item = &'a Sentence>, phi: &Sentence) -> bool {
    supp(t).attacks(phi)
}

pub fn is_conflict_free<'a>(t: impl IntoIterator<Item = &'a Sentence>) -> bool {
    supp(t).is_conflict_free()
}

/// A dialectical interpretation of a theory, specified by the set of its
/// justified members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    specifier: BTreeSet<Sentence>,
    justified: BTreeSet<Sentence>,
    defeated: BTreeSet<Sentence>,
}

impl Extension {
    fn from_support(specifier: BTreeSet<Sentence>, support: SupportSet) -> Self {
        let defeated = support.attacked();
        Extension {
            specifier,
            justified: support.closure,
            defeated,
        }
    }

    /// The justified members of the theory (`J`).
    pub fn specifier(&self) -> &BTreeSet<Sentence> {
        &self.specifier
    }

    /// Every sentence supported by the specifier, members or not.
    pub fn justified(&self) -> &BTreeSet<Sentence> {
        &self.justified
    }

    /// Every sentence attacked by the specifier, members or not.
    pub fn defeated(&self) -> &BTreeSet<Sentence> {
        &self.defeated
    }

    pub fn justified_in(&self, delta: &Theory) -> BTreeSet<Sentence> {
        self.justified
            .intersection(delta.sentences())
            .cloned()
            .collect()
    }

    pub fn defeated_in(&self, delta: &Theory) -> BTreeSet<Sentence> {
        self.defeated
            .intersection(delta.sentences())
            .cloned()
            .collect()
    }

    /// Neither justified nor defeated.
    pub fn is_uninterpreted(&self, phi: &Sentence) -> bool {
        !self.justified.contains(phi) && !self.defeated.contains(phi)
    }
}

/// Checks whether `j` specifies an extension of `delta`: `j` must be
/// conflict-free and attack every other member of `delta`.
pub fn check_interpretation(delta: &Theory, j: &BTreeSet<Sentence>) -> Result<Option<Extension>> {
    if let Some(stray) = j.iter().find(|s| !delta.contains(s)) {
        return Err(Error::NotSubset(stray.clone()));
    }
    let support = supp(j);
    if !support.is_conflict_free() {
        return Ok(None);
    }
    if delta
        .iter()
        .filter(|d| !j.contains(*d))
        .any(|d| !support.attacks(d))
    {
        return Ok(None);
    }
    Ok(Some(Extension::from_support(j.clone(), support)))
}

/// All extensions of `delta`, sorted by specifier.
pub fn extensions(delta: &Theory) -> Result<Vec<Extension>> {
    extensions_with(delta, Limits::default())
}

pub fn extensions_with(delta: &Theory, limits: Limits) -> Result<Vec<Extension>> {
    limits.check(delta)?;
    let uni = Universe::new(delta);
    let mut search = Search {
        uni: &uni,
        closure: Closure::new(&uni),
        excluded: Vec::new(),
        found: Vec::new(),
    };
    search.descend(0);
    let mut out: Vec<Extension> = search
        .found
        .into_iter()
        .map(|member| Extension {
            specifier: delta
                .iter()
                .filter(|s| member.contains(uni.id(s).unwrap()))
                .cloned()
                .collect(),
            justified: uni.to_sentences(&member),
            defeated: uni.attacked_sentences(&member),
        })
        .collect();
    out.sort_by(|a, b| a.specifier.cmp(&b.specifier));
    Ok(out)
}

/// Depth-first assignment of each member to `J` or `D`.
///
/// A member already supported cannot go to `D` (it would need to be both
/// supported and attacked); a member that can never be attacked cannot go
/// to `D` either. Members in `D` are forbidden from becoming supported.
struct Search<'u> {
    uni: &'u Universe,
    closure: Closure<'u>,
    excluded: Vec<usize>,
    found: Vec<fixedbitset::FixedBitSet>,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize) {
        let Some(&id) = self.uni.delta.get(depth) else {
            let all_attacked = self
                .excluded
                .iter()
                .all(|&d| matches!(self.uni.neg_of[d], Some(n) if self.closure.contains(n)));
            if all_attacked {
                self.found.push(self.closure.member.clone());
            }
            return;
        };

        let mark = self.closure.mark();
        if self.closure.insert(id).is_ok() {
            self.descend(depth + 1);
        }
        self.closure.rollback(mark);

        if !self.closure.contains(id) && self.uni.neg_of[id].is_some() {
            self.closure.forbid(id, true);
            self.excluded.push(id);
            self.descend(depth + 1);
            self.excluded.pop();
            self.closure.forbid(id, false);
        }
    }
}
