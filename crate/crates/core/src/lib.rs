//! Approximate reasoning with credibility-qualified fuzzy propositions.
//!
//! A proposition "V is A" over a finite universe is a possibility
//! distribution. When its source is not fully credible it is discounted into
//! a less specific proposition; with no credibility at all it says nothing.
//! Credibility can be a number, a linguistic value, a function of the element
//! or of proximity, or be derived from compatibility with higher-priority
//! knowledge. Queries are answered with possibility and certainty measures,
//! or with plausibility and belief of the equivalent simple support function.

pub mod belief;
pub mod discount;
pub mod error;
pub mod kb;
pub mod possibility;
pub mod relative;

pub use belief::{bel, contour, pl, simple_support, BeliefMethod, SimpleSupport};
pub use discount::{
    discount, discount_linguistic, discount_pointwise, discount_proximity, proximity_to_set,
    validate_profile, CapProfile, LinguisticCredibility, PowProfile, ProfileReport, ProximityMode,
    ProximityProfile, Type2FuzzySet,
};
pub use error::{Error, Result};
pub use possibility::{Conorm, DiscountModel, FuzzySet, Universe};
pub use relative::{
    adjudicate, relative_alpha, AdjudicationReport, GTransform, Proposition, Qualifier,
};
