//! A reasoning engine for DEFLOG, a logic of dialectical argumentation.
//!
//! Sentences are built from atoms with two connectives: `~φ` states that φ
//! is defeated and `φ -> ψ` states that φ supports ψ. A theory is
//! interpreted by splitting it into justified and defeated members such that
//! the justified part is conflict-free and attacks every defeated member.
//!
//! ```
//! use deflog::{parse_theory, extensions};
//!
//! let theory = parse_theory("p\nq\nr\nq -> ~p\nr -> ~q").unwrap();
//! let exts = extensions(&theory).unwrap();
//! assert_eq!(exts.len(), 1);
//! ```

pub mod bridges;
pub mod dot;
mod error;
mod index;
pub mod justification;
pub mod parser;
pub mod semantics;
pub mod sentence;
mod support_sets;

pub use error::{Error, ParseErrors, Result, SyntaxError};
pub use justification::{Analysis, Argument, JustificationVerdict};
pub use parser::{parse_sentence, parse_theory, render};
pub use semantics::{extensions, extensions_with, Extension, Limits, SupportSet};
pub use sentence::{attack_sugar, subsentence_closure, Sentence, Theory};
