//! The sentence language: atoms, dialectical negation and support.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A sentence built from atoms with the two connectives `~` (dialectical
/// negation) and `->` (support).
///
/// The derived ordering is the canonical order used for every listing the
/// engine produces: atoms first (by name), then negations, then conditionals,
/// each compared recursively.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sentence {
    Atom(Arc<str>),
    Neg(Arc<Sentence>),
    Cond(Arc<Sentence>, Arc<Sentence>),
}

impl Sentence {
    pub fn atom(name: impl AsRef<str>) -> Self {
        Sentence::Atom(Arc::from(name.as_ref()))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(body: Sentence) -> Self {
        Sentence::Neg(Arc::new(body))
    }

    pub fn cond(antecedent: Sentence, consequent: Sentence) -> Self {
        Sentence::Cond(Arc::new(antecedent), Arc::new(consequent))
    }

    /// `phi -x> psi`, i.e. `phi -> ~psi`.
    pub fn attack(phi: Sentence, psi: Sentence) -> Self {
        Sentence::cond(phi, Sentence::neg(psi))
    }

    /// Wraps `body` in `depth` dialectical negations.
    pub fn neg_n(body: Sentence, depth: usize) -> Self {
        (0..depth).fold(body, |s, _| Sentence::neg(s))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Sentence::Atom(_))
    }

    pub fn atom_name(&self) -> Option<&str> {
        match self {
            Sentence::Atom(name) => Some(name),
            _ => None,
        }
    }

    /// The body of a dialectical negation.
    pub fn negated(&self) -> Option<&Sentence> {
        match self {
            Sentence::Neg(body) => Some(body),
            _ => None,
        }
    }

    pub fn as_cond(&self) -> Option<(&Sentence, &Sentence)> {
        match self {
            Sentence::Cond(a, c) => Some((a, c)),
            _ => None,
        }
    }

    /// Number of nodes in the term.
    pub fn size(&self) -> usize {
        match self {
            Sentence::Atom(_) => 1,
            Sentence::Neg(b) => 1 + b.size(),
            Sentence::Cond(a, c) => 1 + a.size() + c.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Sentence::Atom(_) => 0,
            Sentence::Neg(b) => 1 + b.depth(),
            Sentence::Cond(a, c) => 1 + a.depth().max(c.depth()),
        }
    }

    /// Adds this sentence and all of its subterms to `out`.
    pub fn collect_subsentences(&self, out: &mut BTreeSet<Sentence>) {
        if !out.insert(self.clone()) {
            return;
        }
        match self {
            Sentence::Atom(_) => {}
            Sentence::Neg(b) => b.collect_subsentences(out),
            Sentence::Cond(a, c) => {
                a.collect_subsentences(out);
                c.collect_subsentences(out);
            }
        }
    }

    /// Atom names occurring in the sentence.
    pub fn atoms(&self) -> BTreeSet<&str> {
        fn walk<'a>(s: &'a Sentence, out: &mut BTreeSet<&'a str>) {
            match s {
                Sentence::Atom(n) => {
                    out.insert(n);
                }
                Sentence::Neg(b) => walk(b, out),
                Sentence::Cond(a, c) => {
                    walk(a, out);
                    walk(c, out);
                }
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut out);
        out
    }
}

/// Renders with minimal parentheses: `->` is right-associative and `~`
/// binds tightest, so only conditional antecedents and negated
/// conditionals need brackets.
impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sentence::Atom(name) => f.write_str(name),
            Sentence::Neg(body) => match **body {
                Sentence::Cond(..) => write!(f, "~({body})"),
                _ => write!(f, "~{body}"),
            },
            Sentence::Cond(a, c) => match **a {
                Sentence::Cond(..) => write!(f, "({a}) -> {c}"),
                _ => write!(f, "{a} -> {c}"),
            },
        }
    }
}

impl fmt::Debug for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

/// `phi -x> psi` as a plain conditional.
pub fn attack_sugar(phi: &Sentence, psi: &Sentence) -> Sentence {
    Sentence::attack(phi.clone(), psi.clone())
}

/// A finite, duplicate-free set of sentences, kept in canonical order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Theory {
    sentences: BTreeSet<Sentence>,
}

impl Theory {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, s: Sentence) -> bool {
        self.sentences.insert(s)
    }

    pub fn contains(&self, s: &Sentence) -> bool {
        self.sentences.contains(s)
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Sentence> + DoubleEndedIterator + '_ {
        self.sentences.iter()
    }

    pub fn sentences(&self) -> &BTreeSet<Sentence> {
        &self.sentences
    }

    pub fn into_sentences(self) -> BTreeSet<Sentence> {
        self.sentences
    }

    pub fn is_superset_of(&self, set: &BTreeSet<Sentence>) -> bool {
        set.is_subset(&self.sentences)
    }
}

impl FromIterator<Sentence> for Theory {
    fn from_iter<I: IntoIterator<Item = Sentence>>(iter: I) -> Self {
        Theory {
            sentences: iter.into_iter().collect(),
        }
    }
}

impl From<BTreeSet<Sentence>> for Theory {
    fn from(sentences: BTreeSet<Sentence>) -> Self {
        Theory { sentences }
    }
}

impl<'a> IntoIterator for &'a Theory {
    type Item = &'a Sentence;
    type IntoIter = std::collections::btree_set::Iter<'a, Sentence>;

    fn into_iter(self) -> Self::IntoIter {
        self.sentences.iter()
    }
}

impl IntoIterator for Theory {
    type Item = Sentence;
    type IntoIter = std::collections::btree_set::IntoIter<Sentence>;

    fn into_iter(self) -> Self::IntoIter {
        self.sentences.into_iter()
    }
}

impl fmt::Debug for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_set(&self.sentences))
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sentences {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Every subterm of every sentence in the theory, the sentences included.
pub fn subsentence_closure<'a>(
    sentences: impl IntoIterator<Item = &'a Sentence>,
) -> BTreeSet<Sentence> {
    let mut out = BTreeSet::new();
    for s in sentences {
        s.collect_subsentences(&mut out);
    }
    out
}

/// `{a, b -> c}` style rendering of a sentence set.
pub fn render_set<'a>(set: impl IntoIterator<Item = &'a Sentence>) -> String {
    let parts: Vec<String> = set.into_iter().map(|s| s.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}
