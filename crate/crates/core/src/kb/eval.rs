use std::sync::Arc;

use super::{KnowledgeBaseDoc, Query, QueryKind};
use crate::belief::SimpleSupport;
use crate::discount::{discount_linguistic, LinguisticCredibility, Type2FuzzySet};
use crate::error::{Error, Result};
use crate::possibility::{DiscountModel, FuzzySet, Universe};
use crate::relative::{adjudicate, resolve_granule, AdjudicationReport, Proposition, Qualifier};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResultKind {
    Poss,
    Cert,
    Entails,
    Dist,
    Pl,
    Bel,
    AlphaReport,
}

impl ResultKind {
    pub fn name(self) -> &'static str {
        match self {
            ResultKind::Poss => "poss",
            ResultKind::Cert => "cert",
            ResultKind::Entails => "entails",
            ResultKind::Dist => "dist",
            ResultKind::Pl => "pl",
            ResultKind::Bel => "bel",
            ResultKind::AlphaReport => "alpha_report",
        }
    }
}

/// Type-2 distribution induced by one linguistically qualified proposition.
#[derive(Debug, Clone, PartialEq)]
pub struct Type2Entry {
    pub id: String,
    pub granule: String,
    pub distribution: Type2FuzzySet,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaReport {
    pub adjudication: AdjudicationReport,
    pub type2: Vec<Type2Entry>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Poss(f64),
    Cert(f64),
    Entails(bool),
    Dist(FuzzySet),
    Pl(f64),
    Bel(f64),
    AlphaReport(Box<AlphaReport>),
}

impl Payload {
    pub fn kind(&self) -> ResultKind {
        match self {
            Payload::Poss(_) => ResultKind::Poss,
            Payload::Cert(_) => ResultKind::Cert,
            Payload::Entails(_) => ResultKind::Entails,
            Payload::Dist(_) => ResultKind::Dist,
            Payload::Pl(_) => ResultKind::Pl,
            Payload::Bel(_) => ResultKind::Bel,
            Payload::AlphaReport(_) => ResultKind::AlphaReport,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QueryResult {
    /// Canonical text of the query that produced this result.
    pub query: String,
    pub payload: Payload,
}

impl QueryResult {
    pub fn kind(&self) -> ResultKind {
        self.payload.kind()
    }
}

struct Knowledge {
    combined: FuzzySet,
    report: Option<AdjudicationReport>,
    type2: Vec<Type2Entry>,
}

fn reasoning_universe(doc: &KnowledgeBaseDoc) -> Option<&Arc<Universe>> {
    match doc.propositions.first() {
        Some(p) => Some(p.proposition.content.universe()),
        None if doc.universes.len() == 1 => doc.universes.values().next(),
        None => None,
    }
}

fn build_knowledge(doc: &KnowledgeBaseDoc, universe: &Arc<Universe>) -> Result<Knowledge> {
    if doc.propositions.is_empty() {
        return Ok(Knowledge {
            combined: FuzzySet::ones(universe),
            report: None,
            type2: Vec::new(),
        });
    }
    let default_model = DiscountModel::default();
    let props: Vec<Proposition> = doc
        .propositions
        .iter()
        .map(|d| d.proposition.clone())
        .collect();
    let report = adjudicate(&props, default_model, &doc.granules)?;

    let unknown = LinguisticCredibility::unknown();
    let mut type2 = Vec::new();
    for p in &props {
        if let Qualifier::Linguistic(name) = &p.qualifier {
            let granule = resolve_granule(&doc.granules, name, &unknown)?;
            type2.push(Type2Entry {
                id: p.id.clone(),
                granule: name.clone(),
                distribution: discount_linguistic(
                    &p.content,
                    granule,
                    p.model.unwrap_or(default_model),
                ),
            });
        }
    }
    Ok(Knowledge {
        combined: report.combined.clone(),
        report: Some(report),
        type2,
    })
}

fn lookup<'a>(doc: &'a KnowledgeBaseDoc, name: &str) -> Result<&'a FuzzySet> {
    doc.sets.get(name).ok_or_else(|| Error::UnknownReference {
        kind: "set",
        name: name.to_string(),
    })
}

fn support(doc: &KnowledgeBaseDoc, name: &str) -> Result<SimpleSupport> {
    let decl = doc
        .beliefs
        .get(name)
        .ok_or_else(|| Error::UnknownReference {
            kind: "belief",
            name: name.to_string(),
        })?;
    SimpleSupport::new(lookup(doc, &decl.set)?.clone(), decl.mass)
}

/// Adjudicates all propositions once, then answers the queries in order.
///
/// A `dist` query yields the combined distribution; when any proposition
/// carries a linguistic qualifier it is followed by an alpha report holding
/// the adjudication details and the type-2 distributions.
pub fn evaluate(doc: &KnowledgeBaseDoc) -> Result<Vec<QueryResult>> {
    if doc.queries.is_empty() {
        return Ok(Vec::new());
    }
    let knowledge = reasoning_universe(doc)
        .map(|u| build_knowledge(doc, u))
        .transpose()?;
    let needs_knowledge = || {
        knowledge.as_ref().ok_or_else(|| {
            Error::InvalidParameter(
                "query needs a reasoning universe: declare a proposition or exactly one universe"
                    .into(),
            )
        })
    };

    let mut results = Vec::with_capacity(doc.queries.len());
    for Query { kind, .. } in &doc.queries {
        let query = kind.to_string();
        let payload = match kind {
            QueryKind::Poss(set) => {
                Payload::Poss(lookup(doc, set)?.poss(&needs_knowledge()?.combined)?)
            }
            QueryKind::Cert(set) => {
                Payload::Cert(lookup(doc, set)?.cert(&needs_knowledge()?.combined)?)
            }
            QueryKind::Entails(set) => {
                Payload::Entails(needs_knowledge()?.combined.entails(lookup(doc, set)?)?)
            }
            QueryKind::Dist => {
                let k = needs_knowledge()?;
                results.push(QueryResult {
                    query: query.clone(),
                    payload: Payload::Dist(k.combined.clone()),
                });
                if let (Some(report), false) = (&k.report, k.type2.is_empty()) {
                    results.push(QueryResult {
                        query,
                        payload: Payload::AlphaReport(Box::new(AlphaReport {
                            adjudication: report.clone(),
                            type2: k.type2.clone(),
                        })),
                    });
                }
                continue;
            }
            QueryKind::Pl {
                set,
                belief,
                method,
            } => Payload::Pl(support(doc, belief)?.pl(lookup(doc, set)?, *method)?),
            QueryKind::Bel {
                set,
                belief,
                method,
            } => Payload::Bel(support(doc, belief)?.bel(lookup(doc, set)?, *method)?),
        };
        results.push(QueryResult { query, payload });
    }
    Ok(results)
}
