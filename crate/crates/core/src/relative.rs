//! Relative credibility and prioritized adjudication.
//!
//! A proposition's credibility may be measured by how compatible it is with
//! knowledge of higher priority: `α = g(Poss[E / K])`. Evidence that conflicts
//! with what is already established ends up nullified rather than negated.

use std::collections::{BTreeMap, HashMap, HashSet};

use indexmap::IndexMap;

use crate::discount::{discount, LinguisticCredibility};
use crate::error::{check_unit, Error, Result};
use crate::possibility::{ensure_same, DiscountModel, FuzzySet};

/// Monotone map from compatibility to credibility.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum GTransform {
    #[default]
    Identity,
    /// Constant credibility, independent of compatibility.
    Const(f64),
    /// `v^q`, `q > 0`.
    Power(f64),
    /// `min(c, v)`: even fully compatible evidence keeps at most `c`.
    Cap(f64),
}

impl GTransform {
    pub fn constant(a: f64) -> Result<Self> {
        check_unit("g constant", a)?;
        Ok(GTransform::Const(a))
    }

    pub fn power(q: f64) -> Result<Self> {
        if q.is_finite() && q > 0.0 {
            Ok(GTransform::Power(q))
        } else {
            Err(Error::InvalidParameter(format!(
                "g power exponent must be > 0, got {q}"
            )))
        }
    }

    pub fn cap(c: f64) -> Result<Self> {
        check_unit("g cap", c)?;
        Ok(GTransform::Cap(c))
    }

    pub fn apply(self, v: f64) -> Result<f64> {
        check_unit("compatibility", v)?;
        Ok(match self {
            GTransform::Identity => v,
            GTransform::Const(a) => a,
            GTransform::Power(q) => v.powf(q),
            GTransform::Cap(c) => c.min(v),
        })
    }
}

/// How the credibility of a proposition is determined.
#[derive(Debug, Clone, PartialEq)]
pub enum Qualifier {
    /// Fully credible.
    None,
    Scalar(f64),
    /// Name of a linguistic credibility value.
    Linguistic(String),
    Relative(GTransform),
}

/// "V is E", qualified, at a priority (1 = highest).
#[derive(Debug, Clone, PartialEq)]
pub struct Proposition {
    pub id: String,
    pub content: FuzzySet,
    pub qualifier: Qualifier,
    pub priority: u32,
    /// Falls back to the adjudication default when unset.
    pub model: Option<DiscountModel>,
}

impl Proposition {
    pub fn new(id: impl Into<String>, content: FuzzySet) -> Self {
        Self {
            id: id.into(),
            content,
            qualifier: Qualifier::None,
            priority: 1,
            model: None,
        }
    }

    pub fn with_qualifier(mut self, qualifier: Qualifier) -> Self {
        self.qualifier = qualifier;
        self
    }

    pub fn with_priority(mut self, priority: u32) -> Self {
        self.priority = priority;
        self
    }

    pub fn with_model(mut self, model: DiscountModel) -> Self {
        self.model = Some(model);
        self
    }
}

/// Lookup of linguistic credibility values by name.
pub trait GranuleTable {
    fn granule(&self, name: &str) -> Option<&LinguisticCredibility>;
}

impl GranuleTable for HashMap<String, LinguisticCredibility> {
    fn granule(&self, name: &str) -> Option<&LinguisticCredibility> {
        self.get(name)
    }
}

impl GranuleTable for IndexMap<String, LinguisticCredibility> {
    fn granule(&self, name: &str) -> Option<&LinguisticCredibility> {
        self.get(name)
    }
}

impl GranuleTable for [LinguisticCredibility] {
    fn granule(&self, name: &str) -> Option<&LinguisticCredibility> {
        self.iter().find(|g| g.name() == name)
    }
}

/// Relative credibility: `Poss[E / K]`.
pub fn relative_alpha(evidence: &FuzzySet, preeminent: &FuzzySet) -> Result<f64> {
    evidence.poss(preeminent)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropositionOutcome {
    pub id: String,
    pub priority: u32,
    /// `Poss[E / K]` for relative propositions.
    pub compatibility: Option<f64>,
    /// Credibility actually applied; `None` for unqualified propositions.
    pub alpha: Option<f64>,
    /// The discounted set F.
    pub effective: FuzzySet,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StratumOutcome {
    pub priority: u32,
    /// Normality of the preeminent knowledge this stratum was measured
    /// against; `None` for the first stratum.
    pub preeminent_normal: Option<bool>,
    /// Running conjunction after this stratum.
    pub combined: FuzzySet,
    pub normal: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdjudicationReport {
    /// Sorted by priority, then id.
    pub outcomes: Vec<PropositionOutcome>,
    pub strata: Vec<StratumOutcome>,
    /// K: pointwise minimum of all effective sets.
    pub combined: FuzzySet,
}

impl AdjudicationReport {
    pub fn outcome(&self, id: &str) -> Option<&PropositionOutcome> {
        self.outcomes.iter().find(|o| o.id == id)
    }
}

/// Reduces a linguistic credibility to a scalar for use inside adjudication.
pub fn linguistic_scalar(granule: &LinguisticCredibility) -> f64 {
    granule.center_of_maximum()
}

pub(crate) fn resolve_granule<'a, T: GranuleTable + ?Sized>(
    table: &'a T,
    name: &str,
    builtin: &'a LinguisticCredibility,
) -> Result<&'a LinguisticCredibility> {
    table
        .granule(name)
        .or_else(|| (name == builtin.name()).then_some(builtin))
        .ok_or_else(|| Error::UnknownGranule(name.to_string()))
}

/// Processes propositions stratum by stratum in increasing priority number.
///
/// Absolute qualifiers are applied directly. Every relative proposition in a
/// stratum is measured against the same running conjunction of all strictly
/// higher strata, then discounted with `α = g(Poss[E / K])`.
pub fn adjudicate<T: GranuleTable + ?Sized>(
    propositions: &[Proposition],
    default_model: DiscountModel,
    granules: &T,
) -> Result<AdjudicationReport> {
    let first = propositions
        .first()
        .ok_or(Error::EmptyInput("adjudication"))?;
    let mut ids = HashSet::new();
    let mut strata: BTreeMap<u32, Vec<&Proposition>> = BTreeMap::new();
    for p in propositions {
        ensure_same(&first.content, &p.content)?;
        if !ids.insert(p.id.as_str()) {
            return Err(Error::DuplicateProposition(p.id.clone()));
        }
        if p.priority == 0 {
            return Err(Error::InvalidParameter(format!(
                "priority of `{}` must be >= 1",
                p.id
            )));
        }
        strata.entry(p.priority).or_default().push(p);
    }

    let unknown = LinguisticCredibility::unknown();
    let mut running: Option<FuzzySet> = None;
    let mut outcomes = Vec::with_capacity(propositions.len());
    let mut stratum_reports = Vec::with_capacity(strata.len());

    for (priority, members) in strata {
        let mut effective_sets = Vec::with_capacity(members.len());
        for p in members {
            let model = p.model.unwrap_or(default_model);
            let (compatibility, alpha) = match &p.qualifier {
                Qualifier::None => (None, None),
                Qualifier::Scalar(a) => (None, Some(check_unit("credibility", *a)?)),
                Qualifier::Linguistic(name) => {
                    let granule = resolve_granule(granules, name, &unknown)?;
                    (None, Some(linguistic_scalar(granule)))
                }
                Qualifier::Relative(g) => {
                    let k = running
                        .as_ref()
                        .ok_or_else(|| Error::NoPreeminentKnowledge(p.id.clone()))?;
                    let compat = relative_alpha(&p.content, k)?;
                    (Some(compat), Some(g.apply(compat)?))
                }
            };
            let effective = match alpha {
                Some(a) => discount(&p.content, a, model)?,
                None => p.content.clone(),
            };
            effective_sets.push(effective.clone());
            outcomes.push(PropositionOutcome {
                id: p.id.clone(),
                priority,
                compatibility,
                alpha,
                effective,
            });
        }
        let layer = FuzzySet::conjoin(&effective_sets)?;
        let preeminent_normal = running.as_ref().map(FuzzySet::is_normal);
        let combined = match running.take() {
            Some(k) => FuzzySet::conjoin([&k, &layer])?,
            None => layer,
        };
        stratum_reports.push(StratumOutcome {
            priority,
            preeminent_normal,
            normal: combined.is_normal(),
            combined: combined.clone(),
        });
        running = Some(combined);
    }

    outcomes.sort_by(|a, b| (a.priority, &a.id).cmp(&(b.priority, &b.id)));
    Ok(AdjudicationReport {
        outcomes,
        strata: stratum_reports,
        combined: running.expect("at least one stratum"),
    })
}
