//! Machine-readable run reports and their plain-text rendering.

use std::collections::BTreeSet;
use std::fmt::Write;

use deflog::{Extension, JustificationVerdict, Sentence, Theory};
use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    /// SHA-256 of the input file, hex encoded.
    pub input_digest: String,
    pub results: Results,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Results {
    Extensions(ExtensionsResult),
    Justify(JustifyResult),
    Theorems(TheoremsResult),
    FromAf(FromAfResult),
    FromDefaults(FromDefaultsResult),
    Dot(DotResult),
}

fn strings<'a>(set: impl IntoIterator<Item = &'a Sentence>) -> Vec<String> {
    set.into_iter().map(Sentence::to_string).collect()
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

#[derive(Debug, Serialize)]
pub struct ExtensionView {
    pub justified: Vec<String>,
    pub defeated: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub supported: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attacked: Option<Vec<String>>,
}

impl ExtensionView {
    pub fn new(delta: &Theory, e: &Extension, full: bool) -> Self {
        ExtensionView {
            justified: strings(&e.justified_in(delta)),
            defeated: strings(&e.defeated_in(delta)),
            supported: full.then(|| strings(e.justified())),
            attacked: full.then(|| strings(e.defeated())),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExtensionsResult {
    pub count: usize,
    pub extensions: Vec<ExtensionView>,
}

impl ExtensionsResult {
    pub fn new(delta: &Theory, exts: &[Extension], full: bool) -> Self {
        ExtensionsResult {
            count: exts.len(),
            extensions: exts
                .iter()
                .map(|e| ExtensionView::new(delta, e, full))
                .collect(),
        }
    }

    fn render(&self, out: &mut String) {
        for (i, e) in self.extensions.iter().enumerate() {
            let _ = writeln!(out, "extension {}", i + 1);
            let _ = writeln!(out, "  justified: {}", braces(&e.justified));
            let _ = writeln!(out, "  defeated: {}", braces(&e.defeated));
            if let (Some(s), Some(a)) = (&e.supported, &e.attacked) {
                let _ = writeln!(out, "  supported: {}", braces(s));
                let _ = writeln!(out, "  attacked: {}", braces(a));
            }
        }
        let _ = writeln!(out, "{}", plural(self.count, "extension"));
    }
}

#[derive(Debug, Serialize)]
pub struct JustifyResult {
    pub subject: String,
    pub verdict: &'static str,
    pub justifiable: bool,
    pub defeasible: bool,
    pub witness_for: Option<Vec<String>>,
    pub witness_against: Option<Vec<String>>,
}

impl JustifyResult {
    pub fn new(v: &JustificationVerdict) -> Self {
        let verdict = match (v.justifiable, v.defeasible) {
            (true, true) => "AMBIGUOUS",
            (true, false) => "JUSTIFIABLE",
            (false, true) => "DEFEASIBLE",
            (false, false) => "UNINTERPRETABLE",
        };
        JustifyResult {
            subject: v.subject.to_string(),
            verdict,
            justifiable: v.justifiable,
            defeasible: v.defeasible,
            witness_for: v.witness_for.as_ref().map(|a| strings(a.premises())),
            witness_against: v.witness_against.as_ref().map(|a| strings(a.premises())),
        }
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "{} {}", self.verdict, self.subject);
        if let Some(w) = &self.witness_for {
            let _ = writeln!(out, "  justified by: {}", braces(w));
        }
        if let Some(w) = &self.witness_against {
            let _ = writeln!(out, "  defeated by: {}", braces(w));
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TheoremsResult {
    pub direct_count: usize,
    pub oracle_existence: bool,
    pub oracle_count: usize,
    pub agree: bool,
}

impl TheoremsResult {
    fn render(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "direct enumeration: {}",
            plural(self.direct_count, "extension")
        );
        let _ = writeln!(out, "oracle existence: {}", self.oracle_existence);
        let _ = writeln!(out, "oracle count: {}", self.oracle_count);
        let _ = writeln!(out, "{}", if self.agree { "AGREE" } else { "DISAGREE" });
    }
}

#[derive(Debug, Serialize)]
pub struct FromAfResult {
    pub theory: Vec<String>,
    pub extensions: Vec<Vec<String>>,
    pub stable_extensions: Vec<Vec<String>>,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl FromAfResult {
    pub fn new(theory: &Theory, deflog: &[BTreeSet<String>], stable: &[BTreeSet<String>]) -> Self {
        let lists =
            |xs: &[BTreeSet<String>]| xs.iter().map(|x| x.iter().cloned().collect()).collect();
        FromAfResult {
            theory: strings(theory),
            extensions: lists(deflog),
            stable_extensions: lists(stable),
            matches: deflog == stable,
        }
    }

    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "theory:");
        for s in &self.theory {
            let _ = writeln!(out, "  {s}");
        }
        let _ = writeln!(out, "extensions (justified arguments):");
        for e in &self.extensions {
            let _ = writeln!(out, "  {}", braces(e));
        }
        let _ = writeln!(out, "stable extensions:");
        for e in &self.stable_extensions {
            let _ = writeln!(out, "  {}", braces(e));
        }
        let _ = writeln!(
            out,
            "{} = {}: {}",
            plural(self.stable_extensions.len(), "stable extension"),
            plural(self.extensions.len(), "extension"),
            if self.matches { "MATCH" } else { "MISMATCH" }
        );
    }
}

#[derive(Debug, Serialize)]
pub struct FromDefaultsResult {
    pub theory: Vec<String>,
    #[serde(flatten)]
    pub extensions: ExtensionsResult,
}

impl FromDefaultsResult {
    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "theory:");
        for s in &self.theory {
            let _ = writeln!(out, "  {s}");
        }
        self.extensions.render(out);
    }
}

#[derive(Debug, Serialize)]
pub struct DotResult {
    pub dot: String,
}

impl RunReport {
    /// Plain-text form; the timing, when present, is left to the caller.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.results {
            Results::Extensions(r) => r.render(&mut out),
            Results::Justify(r) => r.render(&mut out),
            Results::Theorems(r) => r.render(&mut out),
            Results::FromAf(r) => r.render(&mut out),
            Results::FromDefaults(r) => r.render(&mut out),
            Results::Dot(r) => out.push_str(&r.dot),
        }
        out
    }
}
