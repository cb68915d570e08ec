//! Connections to neighbouring formalisms: Dung argumentation frameworks,
//! admissibility, Reiter defaults and logic-program rules.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, ParseErrors, Result, SyntaxError};
use crate::justification::{Analysis, Argument};
use crate::parser::{is_identifier, parse_sentence, strip_comment};
use crate::semantics::{extensions_with, Limits};
use crate::sentence::{Sentence, Theory};

/// Largest framework the direct stable-extension search accepts.
pub const MAX_STABLE_ARGUMENTS: usize = 24;

/// An abstract argumentation framework: arguments and a binary attack
/// relation on them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArgumentationFramework {
    arguments: BTreeSet<String>,
    attacks: BTreeSet<(String, String)>,
}

impl ArgumentationFramework {
    pub fn new<A, S, T>(arguments: A, attacks: impl IntoIterator<Item = (S, T)>) -> Result<Self>
    where
        A: IntoIterator,
        A::Item: Into<String>,
        S: Into<String>,
        T: Into<String>,
    {
        let arguments: BTreeSet<String> = arguments.into_iter().map(Into::into).collect();
        let mut af = ArgumentationFramework {
            arguments,
            attacks: BTreeSet::new(),
        };
        for (a, b) in attacks {
            af.add_attack(a.into(), b.into())?;
        }
        Ok(af)
    }

    pub fn add_argument(&mut self, id: impl Into<String>) {
        self.arguments.insert(id.into());
    }

    pub fn add_attack(&mut self, a: String, b: String) -> Result<()> {
        for id in [&a, &b] {
            if !self.arguments.contains(id) {
                return Err(Error::UnknownArgument(id.clone()));
            }
        }
        self.attacks.insert((a, b));
        Ok(())
    }

    pub fn arguments(&self) -> &BTreeSet<String> {
        &self.arguments
    }

    pub fn attacks(&self) -> &BTreeSet<(String, String)> {
        &self.attacks
    }

    pub fn attacks_pair(&self, a: &str, b: &str) -> bool {
        self.attacks.contains(&(a.to_string(), b.to_string()))
    }
}

fn af_syntax_error(line: usize, column: usize, message: impl Into<String>) -> SyntaxError {
    SyntaxError {
        line,
        column,
        message: message.into(),
    }
}

fn check_id(id: &str, line: usize, column: usize) -> Result<(), SyntaxError> {
    if is_identifier(id) {
        Ok(())
    } else {
        Err(af_syntax_error(
            line,
            column,
            format!("`{id}` is not a valid argument identifier"),
        ))
    }
}

/// Parses the APX format: `arg(a).` and `att(a,b).`, one per line, with `%`
/// comments. Identifiers follow the atom syntax so that they can be used as
/// sentences directly.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework, Error> {
    let mut args = Vec::new();
    let mut atts = Vec::new();
    let mut errors = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw, '%');
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let column = content.len() - content.trim_start().len() + 1;
        match parse_apx_line(trimmed, line, column) {
            Ok(ApxLine::Arg(a)) => args.push(a),
            Ok(ApxLine::Att(a, b, col)) => atts.push((a, b, line, col)),
            Err(e) => errors.push(e),
        }
    }
    finish_af(args, atts, errors)
}

enum ApxLine {
    Arg(String),
    Att(String, String, usize),
}

fn parse_apx_line(s: &str, line: usize, column: usize) -> Result<ApxLine, SyntaxError> {
    let err = |m: &str| af_syntax_error(line, column, m);
    let body = s
        .strip_suffix('.')
        .ok_or_else(|| err("expected `.` at end of statement"))?
        .trim_end();
    let (head, rest) = body
        .split_once('(')
        .ok_or_else(|| err("expected `arg(...)` or `att(...)`"))?;
    let inner = rest.strip_suffix(')').ok_or_else(|| err("expected `)`"))?;
    let ids: Vec<&str> = inner.split(',').map(str::trim).collect();
    for id in &ids {
        check_id(id, line, column)?;
    }
    match (head.trim(), ids.as_slice()) {
        ("arg", [a]) => Ok(ApxLine::Arg(a.to_string())),
        ("att", [a, b]) => Ok(ApxLine::Att(a.to_string(), b.to_string(), column)),
        ("arg", _) => Err(err("`arg` takes one identifier")),
        ("att", _) => Err(err("`att` takes two identifiers")),
        (other, _) => Err(err(&format!("unknown statement `{other}`"))),
    }
}

/// Parses the plain pair-list format: a line with one identifier declares
/// an argument, a line with two declares an attack. `%` and `#` start
/// comments.
pub fn parse_pair_list(text: &str) -> Result<ArgumentationFramework, Error> {
    let mut args = Vec::new();
    let mut atts = Vec::new();
    let mut errors = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(strip_comment(raw, '%'), '#');
        let column = content.len() - content.trim_start().len() + 1;
        let ids: Vec<&str> = content.split_whitespace().collect();
        if let Some(bad) = ids.iter().find(|id| !is_identifier(id)) {
            errors.push(af_syntax_error(
                line,
                column,
                format!("`{bad}` is not a valid argument identifier"),
            ));
            continue;
        }
        match ids.as_slice() {
            [] => {}
            [a] => args.push(a.to_string()),
            [a, b] => atts.push((a.to_string(), b.to_string(), line, column)),
            _ => errors.push(af_syntax_error(
                line,
                column,
                "expected one or two identifiers",
            )),
        }
    }
    finish_af(args, atts, errors)
}

/// Parses either format; APX is recognized by its parentheses.
pub fn parse_af(text: &str) -> Result<ArgumentationFramework, Error> {
    let apx = text
        .lines()
        .map(|l| strip_comment(strip_comment(l, '%'), '#').trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.contains('('));
    if apx {
        parse_apx(text)
    } else {
        parse_pair_list(text)
    }
}

fn finish_af(
    args: Vec<String>,
    atts: Vec<(String, String, usize, usize)>,
    mut errors: Vec<SyntaxError>,
) -> Result<ArgumentationFramework, Error> {
    let mut af = ArgumentationFramework::default();
    for a in args {
        af.add_argument(a);
    }
    for (a, b, line, col) in atts {
        if let Err(Error::UnknownArgument(id)) = af.add_attack(a, b) {
            errors.push(af_syntax_error(
                line,
                col,
                format!("attack references unknown argument `{id}`"),
            ));
        }
    }
    if errors.is_empty() {
        Ok(af)
    } else {
        errors.sort_by_key(|e| (e.line, e.column));
        Err(ParseErrors(errors).into())
    }
}

/// Arguments become atoms and each attack `(A, B)` becomes `A -> ~B`.
pub fn af_to_theory(af: &ArgumentationFramework) -> Theory {
    af.arguments
        .iter()
        .map(Sentence::atom)
        .chain(
            af.attacks
                .iter()
                .map(|(a, b)| Sentence::attack(Sentence::atom(a), Sentence::atom(b))),
        )
        .collect()
}

/// Every sentence is an atom or `a -> ~b` with `a`, `b` atoms.
pub fn is_dung_theory(delta: &Theory) -> bool {
    first_non_dung_sentence(delta).is_none()
}

fn first_non_dung_sentence(delta: &Theory) -> Option<&Sentence> {
    delta.iter().find(|s| !is_dung_sentence(s))
}

fn is_dung_sentence(s: &Sentence) -> bool {
    match s {
        Sentence::Atom(_) => true,
        Sentence::Cond(a, c) => a.is_atom() && c.negated().is_some_and(Sentence::is_atom),
        Sentence::Neg(_) => false,
    }
}

/// Stable extensions by direct search over argument subsets: conflict-free
/// and attacking every argument left out. Sorted.
pub fn stable_extensions(af: &ArgumentationFramework) -> Result<Vec<BTreeSet<String>>> {
    let args: Vec<&String> = af.arguments.iter().collect();
    let n = args.len();
    if n > MAX_STABLE_ARGUMENTS {
        return Err(Error::TheoryTooLarge {
            size: n,
            limit: MAX_STABLE_ARGUMENTS,
        });
    }
    let index: BTreeMap<&str, usize> = args
        .iter()
        .enumerate()
        .map(|(i, a)| (a.as_str(), i))
        .collect();
    let mut attackers = vec![0u64; n];
    for (a, b) in &af.attacks {
        attackers[index[b.as_str()]] |= 1 << index[a.as_str()];
    }
    let mut out = Vec::new();
    for s in 0..(1u64 << n) {
        let member = |i: usize| s >> i & 1 == 1;
        let conflict_free = (0..n).filter(|&i| member(i)).all(|i| attackers[i] & s == 0);
        let covers = (0..n)
            .filter(|&i| !member(i))
            .all(|i| attackers[i] & s != 0);
        if conflict_free && covers {
            out.push(
                (0..n)
                    .filter(|&i| member(i))
                    .map(|i| args[i].clone())
                    .collect(),
            );
        }
    }
    out.sort();
    Ok(out)
}

/// Stable extensions of a framework side by side with the extensions of
/// its translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableCorrespondence {
    pub theory: Theory,
    pub stable: Vec<BTreeSet<String>>,
    /// Justified atoms of each extension of the translated theory.
    pub deflog: Vec<BTreeSet<String>>,
}

impl StableCorrespondence {
    pub fn matches(&self) -> bool {
        self.stable == self.deflog
    }
}

pub fn stable_correspondence(
    af: &ArgumentationFramework,
    limits: Limits,
) -> Result<StableCorrespondence> {
    let theory = af_to_theory(af);
    let stable = stable_extensions(af)?;
    let mut deflog: Vec<BTreeSet<String>> = extensions_with(&theory, limits)?
        .iter()
        .map(|e| {
            e.specifier()
                .iter()
                .filter_map(|s| s.atom_name().map(str::to_string))
                .collect()
        })
        .collect();
    deflog.sort();
    Ok(StableCorrespondence {
        theory,
        stable,
        deflog,
    })
}

/// `c` attacks every Δ-argument attacking it.
pub fn is_admissible(delta: &Theory, c: &Argument) -> Result<bool> {
    Analysis::new(delta)?.is_admissible(c)
}

/// On a Dung theory, admissibility and dialectical justification must
/// coincide on every Δ-argument.
pub fn admissible_equals_justifying_check(delta: &Theory) -> Result<bool> {
    admissible_equals_justifying_check_with(delta, Limits::default())
}

pub fn admissible_equals_justifying_check_with(delta: &Theory, limits: Limits) -> Result<bool> {
    if let Some(s) = first_non_dung_sentence(delta) {
        return Err(Error::NotDungTheory(s.clone()));
    }
    Ok(Analysis::with_limits(delta, limits)?.admissible_matches_justifying())
}

/// Admissible sets by direct search: conflict-free and attacking every
/// attacker of a member. Sorted.
pub fn dung_admissible_sets(af: &ArgumentationFramework) -> Result<Vec<BTreeSet<String>>> {
    let args: Vec<&String> = af.arguments.iter().collect();
    let n = args.len();
    if n > MAX_STABLE_ARGUMENTS {
        return Err(Error::TheoryTooLarge {
            size: n,
            limit: MAX_STABLE_ARGUMENTS,
        });
    }
    let mut out = Vec::new();
    for s in 0..(1u64 << n) {
        let set: BTreeSet<&str> = (0..n)
            .filter(|&i| s >> i & 1 == 1)
            .map(|i| args[i].as_str())
            .collect();
        let attacked_by_set = |x: &str| set.iter().any(|a| af.attacks_pair(a, x));
        let conflict_free = set.iter().all(|x| !attacked_by_set(x));
        let defended = af
            .attacks
            .iter()
            .filter(|(_, b)| set.contains(b.as_str()))
            .all(|(a, _)| attacked_by_set(a));
        if conflict_free && defended {
            out.push(set.into_iter().map(str::to_string).collect());
        }
    }
    out.sort();
    Ok(out)
}

/// Whether a set of arguments is admissible in the framework exactly when
/// its atoms together with all attack sentences form an admissible argument
/// of the translated theory, for every set of arguments.
pub fn admissible_correspondence(af: &ArgumentationFramework, limits: Limits) -> Result<bool> {
    let theory = af_to_theory(af);
    let analysis = Analysis::with_limits(&theory, limits)?;
    let dung: BTreeSet<BTreeSet<String>> = dung_admissible_sets(af)?.into_iter().collect();
    let attacks: Vec<Sentence> = theory.iter().filter(|s| !s.is_atom()).cloned().collect();
    let args: Vec<&String> = af.arguments.iter().collect();
    for s in 0..(1u64 << args.len()) {
        let set: BTreeSet<String> = (0..args.len())
            .filter(|&i| s >> i & 1 == 1)
            .map(|i| args[i].clone())
            .collect();
        let premises = set
            .iter()
            .map(Sentence::atom)
            .chain(attacks.iter().cloned());
        let deflog = match Argument::new(premises) {
            Ok(c) => analysis.is_admissible(&c)?,
            Err(Error::NotConflictFree) => false,
            Err(e) => return Err(e),
        };
        if deflog != dung.contains(&set) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A Reiter default `prerequisite : justification / consequent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefaultRule {
    pub prerequisite: Sentence,
    pub justification: Sentence,
    pub consequent: Sentence,
}

/// A program rule `head <- positive_body, not weakly_negated`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpRule {
    pub head: Sentence,
    pub positive_body: Sentence,
    pub weakly_negated: Sentence,
}

pub const CONTRARY_PREFIX: &str = "neg_";

/// Fresh-atom contrary of an atomic sentence: `q` ↔ `neg_q`. Classical
/// negation is not part of the language, so it is simulated by naming.
pub fn default_contrary(s: &Sentence) -> Option<Sentence> {
    let name = s.atom_name()?;
    Some(match name.strip_prefix(CONTRARY_PREFIX) {
        Some(base) if is_identifier(base) => Sentence::atom(base),
        _ => Sentence::atom(format!("{CONTRARY_PREFIX}{name}")),
    })
}

/// `(p -> r, contrary -> ~(p -> r))` for the default `p : q / r`, where
/// `contrary` stands for the contrary of the justification `q`.
pub fn default_to_sentences(d: &DefaultRule, contrary: &Sentence) -> (Sentence, Sentence) {
    let rule = Sentence::cond(d.prerequisite.clone(), d.consequent.clone());
    let blocker = Sentence::attack(contrary.clone(), rule.clone());
    (rule, blocker)
}

/// As [`default_to_sentences`] with the fresh-atom contrary.
pub fn default_to_sentences_atomic(d: &DefaultRule) -> Result<(Sentence, Sentence)> {
    let contrary = default_contrary(&d.justification)
        .ok_or_else(|| Error::NoContrary(d.justification.clone()))?;
    Ok(default_to_sentences(d, &contrary))
}

/// `(q -> p, r -> ~(q -> p))` for the rule `p <- q, not r`.
pub fn lp_rule_to_sentences(r: &LpRule) -> (Sentence, Sentence) {
    let rule = Sentence::cond(r.positive_body.clone(), r.head.clone());
    let blocker = Sentence::attack(r.weakly_negated.clone(), rule.clone());
    (rule, blocker)
}

/// Facts, defaults and program rules read from a `.dft` file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DefaultTheory {
    pub facts: Vec<Sentence>,
    pub defaults: Vec<DefaultRule>,
    pub rules: Vec<LpRule>,
}

impl DefaultTheory {
    pub fn to_theory(&self) -> Result<Theory> {
        let mut t: Theory = self.facts.iter().cloned().collect();
        for d in &self.defaults {
            let (a, b) = default_to_sentences_atomic(d)?;
            t.insert(a);
            t.insert(b);
        }
        for r in &self.rules {
            let (a, b) = lp_rule_to_sentences(r);
            t.insert(a);
            t.insert(b);
        }
        Ok(t)
    }
}

/// Parses a defaults file. Each non-blank line (after stripping `#`
/// comments) is one of
///
/// * `prerequisite : justification / consequent` — a default,
/// * `head <- body, not blocker` — a program rule,
/// * a sentence — a fact.
pub fn parse_default_theory(text: &str) -> Result<DefaultTheory, ParseErrors> {
    let mut out = DefaultTheory::default();
    let mut errors = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw, '#');
        if content.trim().is_empty() {
            continue;
        }
        let result = if let Some((lhs, rhs)) = content.split_once("<-") {
            parse_lp_rule(lhs, rhs, line).map(|r| out.rules.push(r))
        } else if let Some((pre, rest)) = content.split_once(':') {
            parse_default(pre, rest, line).map(|d| out.defaults.push(d))
        } else {
            sentence_at(content, line, 0).map(|s| out.facts.push(s))
        };
        if let Err(e) = result {
            errors.push(e);
        }
    }
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(ParseErrors(errors))
    }
}

/// Parses `text`, found at char offset `offset` of line `line`.
fn sentence_at(text: &str, line: usize, offset: usize) -> Result<Sentence, SyntaxError> {
    parse_sentence(text).map_err(|e| SyntaxError {
        line,
        column: e.column + offset,
        message: e.message,
    })
}

fn parse_default(pre: &str, rest: &str, line: usize) -> Result<DefaultRule, SyntaxError> {
    let rest_offset = pre.chars().count() + 1;
    let (just, cons) = rest.split_once('/').ok_or_else(|| {
        af_syntax_error(
            line,
            rest_offset + 1,
            "expected `justification / consequent`",
        )
    })?;
    Ok(DefaultRule {
        prerequisite: sentence_at(pre, line, 0)?,
        justification: sentence_at(just, line, rest_offset)?,
        consequent: sentence_at(cons, line, rest_offset + just.chars().count() + 1)?,
    })
}

fn parse_lp_rule(lhs: &str, rhs: &str, line: usize) -> Result<LpRule, SyntaxError> {
    let rhs_offset = lhs.chars().count() + 2;
    let (body, negated) = rhs
        .split_once(',')
        .ok_or_else(|| af_syntax_error(line, rhs_offset + 1, "expected `body, not atom`"))?;
    let neg_offset = rhs_offset + body.chars().count() + 1;
    let trimmed = negated.trim_start();
    let not_offset = neg_offset + negated.chars().count() - trimmed.chars().count();
    let negated = trimmed.strip_prefix("not ").ok_or_else(|| {
        af_syntax_error(
            line,
            not_offset + 1,
            "expected `not` before the blocking sentence",
        )
    })?;
    Ok(LpRule {
        head: sentence_at(lhs, line, 0)?,
        positive_body: sentence_at(body, line, rhs_offset)?,
        weakly_negated: sentence_at(negated, line, not_offset + 4)?,
    })
}
