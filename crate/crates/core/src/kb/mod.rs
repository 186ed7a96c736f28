//! Knowledge-base documents: a line-oriented declarative format for
//! universes, fuzzy sets, linguistic credibility values, qualified
//! propositions, belief structures and queries.
//!
//! ```text
//! universe X = a, b, c
//! set A on X = a:0.6, b:1, c:0.8
//! ling low = 0:1, 0.1:1, 0.2:0.9, 0.3:0.5, 0.4:0.2
//! prop P1 : V is A cred low conorm max
//! query dist
//! ```

mod eval;
mod parse;
mod render;

use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;

use crate::belief::BeliefMethod;
use crate::discount::LinguisticCredibility;
use crate::possibility::{FuzzySet, Universe};
use crate::relative::Proposition;

pub use eval::{evaluate, AlphaReport, Payload, QueryResult, ResultKind, Type2Entry};
pub use parse::{parse_kb, ParseError, ParseErrorKind};
pub use render::{render, OutputFormat, RenderOptions, DEFAULT_PRECISION};

/// A validated knowledge-base document.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct KnowledgeBaseDoc {
    pub universes: IndexMap<String, Arc<Universe>>,
    pub proximities: Vec<ProximityDecl>,
    pub sets: IndexMap<String, FuzzySet>,
    /// User-declared granules; the built-in `unknown` is not listed here.
    pub granules: IndexMap<String, LinguisticCredibility>,
    pub propositions: Vec<PropositionDecl>,
    pub beliefs: IndexMap<String, BeliefDecl>,
    pub queries: Vec<Query>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProximityDecl {
    pub universe: String,
    pub left: String,
    pub right: String,
    pub value: f64,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropositionDecl {
    pub proposition: Proposition,
    /// Name of the set the proposition asserts.
    pub set: String,
    pub variable: String,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BeliefDecl {
    pub set: String,
    pub mass: f64,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Query {
    pub line: usize,
    pub kind: QueryKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum QueryKind {
    Poss(String),
    Cert(String),
    Entails(String),
    Dist,
    Pl {
        set: String,
        belief: String,
        method: BeliefMethod,
    },
    Bel {
        set: String,
        belief: String,
        method: BeliefMethod,
    },
}

impl fmt::Display for QueryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryKind::Poss(s) => write!(f, "poss {s}"),
            QueryKind::Cert(s) => write!(f, "cert {s}"),
            QueryKind::Entails(s) => write!(f, "entails {s}"),
            QueryKind::Dist => f.write_str("dist"),
            QueryKind::Pl {
                set,
                belief,
                method,
            } => {
                write!(f, "pl {set} under {belief} method {}", method.name())
            }
            QueryKind::Bel {
                set,
                belief,
                method,
            } => {
                write!(f, "bel {set} under {belief} method {}", method.name())
            }
        }
    }
}
