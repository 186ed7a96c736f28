//! Credibility discounting.
//!
//! Qualifying "V is A" with credibility `α` yields the less specific "V is B"
//! with `B(x) = D(α, A(x))`. Zero credibility produces the whole universe
//! (nothing is known), never the complement of `A`.
//!
//! Besides a scalar `α` this module handles linguistic credibility (a fuzzy
//! subset of [0,1], giving a type-2 result), credibility that varies with the
//! element, and proximity-shaped discounting.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{check_unit, Error, Result};
use crate::possibility::{ensure_same, exp_discount, Conorm, DiscountModel, FuzzySet, Universe};

/// Grades closer than this many decimals are treated as one grade in a
/// type-2 membership list.
const MERGE_DECIMALS: i32 = 9;

/// Discounts `a` by scalar credibility `alpha`.
pub fn discount(a: &FuzzySet, alpha: f64, model: DiscountModel) -> Result<FuzzySet> {
    check_unit("credibility", alpha)?;
    Ok(a.map(|g| model.apply(alpha, g)))
}

/// A linguistic credibility value such as "low": a discrete fuzzy subset of
/// the unit interval.
#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticCredibility {
    name: String,
    points: Vec<(f64, f64)>,
}

impl LinguisticCredibility {
    /// `points` are `(y, grade)` pairs with `y` strictly increasing.
    pub fn new(name: impl Into<String>, points: Vec<(f64, f64)>) -> Result<Self> {
        let name = name.into();
        let invalid = |reason: String| Error::InvalidLinguistic {
            name: name.clone(),
            reason,
        };
        if points.is_empty() {
            return Err(invalid("no points".into()));
        }
        for &(y, g) in &points {
            check_unit("credibility value", y)?;
            check_unit("membership", g)?;
        }
        if let Some(w) = points.windows(2).find(|w| w[1].0 <= w[0].0) {
            return Err(invalid(format!(
                "credibility values must be strictly increasing ({} then {})",
                w[0].0, w[1].0
            )));
        }
        Ok(Self { name, points })
    }

    /// The built-in "unknown": every y on the 0.1 grid is fully compatible.
    pub fn unknown() -> Self {
        Self {
            name: "unknown".into(),
            points: (0..=10).map(|i| (f64::from(i) / 10.0, 1.0)).collect(),
        }
    }

    /// The fully credible singleton `{α₀ : 1}`.
    pub fn crisp(alpha: f64) -> Result<Self> {
        Self::new(format!("{alpha}"), vec![(alpha, 1.0)])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn height(&self) -> f64 {
        self.points.iter().map(|p| p.1).fold(0.0, f64::max)
    }

    pub fn is_normal(&self) -> bool {
        self.height() == 1.0
    }

    /// `ᾱ(y) = α(1 − y)`.
    pub fn antonym(&self) -> Self {
        Self {
            name: format!("ant({})", self.name),
            points: self
                .points
                .iter()
                .rev()
                .map(|&(y, g)| (1.0 - y, g))
                .collect(),
        }
    }

    /// Midpoint of the credibility values that reach the maximal grade.
    pub fn center_of_maximum(&self) -> f64 {
        let top = self.height();
        let mut peak = self.points.iter().filter(|p| p.1 == top).map(|p| p.0);
        let lo = peak.next().unwrap_or(0.0);
        let hi = peak.next_back().unwrap_or(lo);
        (lo + hi) / 2.0
    }
}

/// A fuzzy set whose membership grades are themselves fuzzy: for every
/// element, a list of `(grade, membership)` pairs sorted by grade.
#[derive(Debug, Clone, PartialEq)]
pub struct Type2FuzzySet {
    universe: Arc<Universe>,
    grades: Vec<Vec<(f64, f64)>>,
}

impl Type2FuzzySet {
    /// Lifts a type-1 set: each grade becomes the singleton `{g : 1}`.
    pub fn from_type1(set: &FuzzySet) -> Self {
        Self {
            universe: Arc::clone(set.universe()),
            grades: set.grades().iter().map(|&g| vec![(g, 1.0)]).collect(),
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn fuzzy_grades(&self) -> &[Vec<(f64, f64)>] {
        &self.grades
    }

    pub fn fuzzy_grade(&self, label: &str) -> Option<&[(f64, f64)]> {
        self.universe
            .position(label)
            .map(|i| self.grades[i].as_slice())
    }
}

impl fmt::Display for Type2FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, pairs) in self.universe.elements().iter().zip(&self.grades) {
            write!(f, "{label}: {{")?;
            for (i, (g, m)) in pairs.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{g}:{m}")?;
            }
            writeln!(f, "}}")?;
        }
        Ok(())
    }
}

/// Collects `(grade, membership)` contributions, merging grades that agree to
/// nine decimals by keeping the larger membership.
fn merge_contributions(contributions: impl IntoIterator<Item = (f64, f64)>) -> Vec<(f64, f64)> {
    let scale = 10f64.powi(MERGE_DECIMALS);
    let mut merged: BTreeMap<i64, (f64, f64)> = BTreeMap::new();
    for (grade, membership) in contributions {
        let key = (grade * scale).round() as i64;
        merged
            .entry(key)
            .and_modify(|e| e.1 = e.1.max(membership))
            .or_insert((grade, membership));
    }
    merged.into_values().collect()
}

/// Discounts `a` by a linguistic credibility through the extension principle.
///
/// With a conorm model each point `(z, m)` of the antonym contributes grade
/// `S(z, A(x))` with membership `m`; with the exponential model each point
/// `(y, m)` of `alpha` contributes `A(x)^y` with membership `m`.
pub fn discount_linguistic(
    a: &FuzzySet,
    alpha: &LinguisticCredibility,
    model: DiscountModel,
) -> Type2FuzzySet {
    let antonym = alpha.antonym();
    let grades = a
        .grades()
        .iter()
        .map(|&g| match model {
            DiscountModel::Conorm(s) => {
                merge_contributions(antonym.points.iter().map(|&(z, m)| (s.eval(z, g), m)))
            }
            DiscountModel::Exponential => {
                merge_contributions(alpha.points.iter().map(|&(y, m)| (exp_discount(g, y), m)))
            }
        })
        .collect();
    Type2FuzzySet {
        universe: Arc::clone(a.universe()),
        grades,
    }
}

/// Discounts with an element-dependent credibility `h(x)`:
/// `D(x) = S(1 − h(x), A(x))`.
pub fn discount_pointwise(a: &FuzzySet, h: &FuzzySet, s: Conorm) -> Result<FuzzySet> {
    ensure_same(a, h)?;
    a.zip_with(h, |g, cred| s.eval(1.0 - cred, g))
}

fn proximity_at(a: &FuzzySet, x: usize) -> Result<f64> {
    let universe = a.universe();
    if !universe.has_proximity() {
        return Err(Error::NoProximity(universe.name().to_string()));
    }
    Ok(a.grades()
        .iter()
        .enumerate()
        .map(|(y, &g)| g.min(universe.proximity(x, y).unwrap_or(0.0)))
        .fold(0.0, f64::max))
}

/// `p(x, A) = max_y min(A(y), p(x, y))`.
pub fn proximity_to_set(a: &FuzzySet, x: &str) -> Result<f64> {
    let universe = a.universe();
    let i = universe.position(x).ok_or_else(|| Error::UnknownElement {
        universe: universe.name().to_string(),
        label: x.to_string(),
    })?;
    proximity_at(a, i)
}

/// The proximity dilation of `a`: `A'(x) = p(x, A)` for every element.
pub fn proximity_dilation(a: &FuzzySet) -> Result<FuzzySet> {
    let grades = (0..a.len())
        .map(|x| proximity_at(a, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(FuzzySet::from_raw(a.universe(), grades))
}

/// How proximity shapes the discounted set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum ProximityMode {
    /// Credibility at `x` is `h(x) = f(α, p(x, A))`; result `S(1 − h(x), A(x))`.
    Literal,
    /// Discount the proximity dilation of `A` uniformly: `S(1 − α, p(x, A))`.
    #[default]
    Soften,
}

/// Credibility as a function of the scalar credibility and the proximity to
/// the stated value: `h = f(α, b)`.
///
/// An admissible profile satisfies `f(0,b) = 0`, `f(1,b) = 1`, is
/// nondecreasing in both arguments and continuous; see [`validate_profile`].
pub trait ProximityProfile {
    fn tag(&self) -> String;
    fn evaluate(&self, alpha: f64, proximity: f64) -> f64;
}

/// `f(α, b) = min(1, α(1 + κb))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapProfile {
    pub kappa: f64,
}

impl ProximityProfile for CapProfile {
    fn tag(&self) -> String {
        format!("cap({})", self.kappa)
    }

    fn evaluate(&self, alpha: f64, proximity: f64) -> f64 {
        (alpha * (1.0 + self.kappa * proximity)).min(1.0)
    }
}

/// `f(α, b) = 1 − (1 − α)^(1 + κb)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowProfile {
    pub kappa: f64,
}

impl Default for PowProfile {
    fn default() -> Self {
        Self { kappa: 3.0 }
    }
}

impl ProximityProfile for PowProfile {
    fn tag(&self) -> String {
        format!("pow({})", self.kappa)
    }

    fn evaluate(&self, alpha: f64, proximity: f64) -> f64 {
        1.0 - (1.0 - alpha).powf(1.0 + self.kappa * proximity)
    }
}

/// Wraps a closure as a profile.
pub struct FnProfile<F> {
    pub tag: String,
    pub f: F,
}

impl<F: Fn(f64, f64) -> f64> ProximityProfile for FnProfile<F> {
    fn tag(&self) -> String {
        self.tag.clone()
    }

    fn evaluate(&self, alpha: f64, proximity: f64) -> f64 {
        (self.f)(alpha, proximity)
    }
}

/// Builds the built-in profiles; `kappa` must be finite and nonnegative.
pub fn cap_profile(kappa: f64) -> Result<CapProfile> {
    check_kappa(kappa)?;
    Ok(CapProfile { kappa })
}

pub fn pow_profile(kappa: f64) -> Result<PowProfile> {
    check_kappa(kappa)?;
    Ok(PowProfile { kappa })
}

fn check_kappa(kappa: f64) -> Result<()> {
    if kappa.is_finite() && kappa >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "profile softness must be finite and >= 0, got {kappa}"
        )))
    }
}

/// Discounts `a` with credibility `alpha` shaped by the universe's proximity
/// relation.
pub fn discount_proximity(
    a: &FuzzySet,
    alpha: f64,
    profile: &dyn ProximityProfile,
    s: Conorm,
    mode: ProximityMode,
) -> Result<FuzzySet> {
    check_unit("credibility", alpha)?;
    let dilated = proximity_dilation(a)?;
    let grades = match mode {
        ProximityMode::Literal => a
            .grades()
            .iter()
            .zip(dilated.grades())
            .map(|(&g, &b)| {
                let h = profile.evaluate(alpha, b).clamp(0.0, 1.0);
                s.eval(1.0 - h, g)
            })
            .collect(),
        ProximityMode::Soften => dilated
            .grades()
            .iter()
            .map(|&b| s.eval(1.0 - alpha, b))
            .collect(),
    };
    Ok(FuzzySet::from_raw(a.universe(), grades))
}

pub const PROFILE_GRID: usize = 101;

/// Largest jump allowed between neighbouring grid points (spacing 0.01)
/// before a profile is reported as discontinuous.
pub const PROFILE_MAX_STEP: f64 = 0.25;

const PROFILE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileAxiom {
    Range,
    ZeroCredibility,
    FullCredibility,
    MonotoneInCredibility,
    MonotoneInProximity,
    Continuity,
}

impl fmt::Display for ProfileAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProfileAxiom::Range => "values in [0,1]",
            ProfileAxiom::ZeroCredibility => "f(0,b) = 0",
            ProfileAxiom::FullCredibility => "f(1,b) = 1",
            ProfileAxiom::MonotoneInCredibility => "nondecreasing in credibility",
            ProfileAxiom::MonotoneInProximity => "nondecreasing in proximity",
            ProfileAxiom::Continuity => "bounded grid increments",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileViolation {
    pub axiom: ProfileAxiom,
    pub alpha: f64,
    pub proximity: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileReport {
    pub tag: String,
    /// Every violated axiom, with the first grid point where it failed.
    pub violations: Vec<ProfileViolation>,
}

impl ProfileReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<&ProfileViolation> {
        self.violations.first()
    }

    pub fn violates(&self, axiom: ProfileAxiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

/// Checks the profile axioms on a 101×101 grid over `[0,1]²`.
pub fn validate_profile(profile: &dyn ProximityProfile) -> ProfileReport {
    let n = PROFILE_GRID;
    let at = |i: usize| i as f64 / (n - 1) as f64;
    let table: Vec<f64> = (0..n * n)
        .map(|k| profile.evaluate(at(k / n), at(k % n)))
        .collect();
    let value = |i: usize, j: usize| table[i * n + j];

    let mut violations: Vec<ProfileViolation> = Vec::new();
    let mut flag = |axiom: ProfileAxiom, i: usize, j: usize| {
        if !violations.iter().any(|v| v.axiom == axiom) {
            violations.push(ProfileViolation {
                axiom,
                alpha: at(i),
                proximity: at(j),
                value: value(i, j),
            });
        }
    };

    for i in 0..n {
        for j in 0..n {
            let v = value(i, j);
            if !(v.is_finite() && (-PROFILE_TOL..=1.0 + PROFILE_TOL).contains(&v)) {
                flag(ProfileAxiom::Range, i, j);
            }
            if i == 0 && v.abs() > PROFILE_TOL {
                flag(ProfileAxiom::ZeroCredibility, i, j);
            }
            if i == n - 1 && (v - 1.0).abs() > PROFILE_TOL {
                flag(ProfileAxiom::FullCredibility, i, j);
            }
            if i > 0 {
                let prev = value(i - 1, j);
                if v < prev - PROFILE_TOL {
                    flag(ProfileAxiom::MonotoneInCredibility, i, j);
                }
                if (v - prev).abs() > PROFILE_MAX_STEP {
                    flag(ProfileAxiom::Continuity, i, j);
                }
            }
            if j > 0 {
                let prev = value(i, j - 1);
                if v < prev - PROFILE_TOL {
                    flag(ProfileAxiom::MonotoneInProximity, i, j);
                }
                if (v - prev).abs() > PROFILE_MAX_STEP {
                    flag(ProfileAxiom::Continuity, i, j);
                }
            }
        }
    }
    ProfileReport {
        tag: profile.tag(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn xabc() -> Arc<Universe> {
        Arc::new(Universe::new("X", ["a", "b", "c"]).unwrap())
    }

    fn low() -> LinguisticCredibility {
        LinguisticCredibility::new(
            "low",
            vec![(0.0, 1.0), (0.1, 1.0), (0.2, 0.9), (0.3, 0.5), (0.4, 0.2)],
        )
        .unwrap()
    }

    fn assert_pairs(actual: &[(f64, f64)], expected: &[(f64, f64)]) {
        assert_eq!(actual.len(), expected.len(), "{actual:?} vs {expected:?}");
        for (a, e) in actual.iter().zip(expected) {
            assert!(
                (a.0 - e.0).abs() <= TOL && (a.1 - e.1).abs() <= TOL,
                "{actual:?} vs {expected:?}"
            );
        }
    }

    #[test]
    fn scalar_discount_examples() {
        let u = xabc();
        let a = FuzzySet::from_grades(&u, vec![0.6, 1.0, 0.8]).unwrap();
        let d = discount(&a, 0.2, DiscountModel::Conorm(Conorm::Max)).unwrap();
        assert!(d
            .grades()
            .iter()
            .zip([0.8, 1.0, 0.8])
            .all(|(x, y)| (x - y).abs() <= TOL));

        let single = FuzzySet::from_grades(&u, vec![0.8, 0.0, 0.0]).unwrap();
        let e = discount(&single, 0.5, DiscountModel::Exponential).unwrap();
        assert!((e.grades()[0] - 0.8f64.sqrt()).abs() <= TOL);
        assert!((e.grades()[0] - 0.894427191).abs() < 1e-9);
        // 0^0.5 = 0
        assert_eq!(e.grades()[1], 0.0);

        assert!(matches!(
            discount(&a, 1.5, DiscountModel::Exponential),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn antonym_examples() {
        assert_pairs(
            low().antonym().points(),
            &[(0.6, 0.2), (0.7, 0.5), (0.8, 0.9), (0.9, 1.0), (1.0, 1.0)],
        );
        let full = LinguisticCredibility::crisp(1.0).unwrap();
        assert_pairs(full.antonym().points(), &[(0.0, 1.0)]);
        assert_pairs(low().antonym().antonym().points(), low().points());
    }

    #[test]
    fn linguistic_validation() {
        assert!(LinguisticCredibility::new("e", vec![]).is_err());
        assert!(LinguisticCredibility::new("d", vec![(0.2, 1.0), (0.2, 0.5)]).is_err());
        assert!(LinguisticCredibility::new("r", vec![(0.3, 1.0), (0.2, 0.5)]).is_err());
        assert!(LinguisticCredibility::new("g", vec![(0.3, 1.2)]).is_err());
    }

    #[test]
    fn center_of_maximum() {
        assert!((low().center_of_maximum() - 0.05).abs() <= TOL);
        assert!((LinguisticCredibility::unknown().center_of_maximum() - 0.5).abs() <= TOL);
        assert_eq!(
            LinguisticCredibility::crisp(0.7)
                .unwrap()
                .center_of_maximum(),
            0.7
        );
    }

    #[test]
    fn linguistic_discount_worked_example() {
        let u = xabc();
        let a = FuzzySet::from_grades(&u, vec![0.6, 1.0, 0.8]).unwrap();
        let b = discount_linguistic(&a, &low(), DiscountModel::Conorm(Conorm::Max));
        assert_pairs(
            b.fuzzy_grade("a").unwrap(),
            &[(0.6, 0.2), (0.7, 0.5), (0.8, 0.9), (0.9, 1.0), (1.0, 1.0)],
        );
        assert_pairs(b.fuzzy_grade("b").unwrap(), &[(1.0, 1.0)]);
        assert_pairs(
            b.fuzzy_grade("c").unwrap(),
            &[(0.8, 0.9), (0.9, 1.0), (1.0, 1.0)],
        );
    }

    #[test]
    fn linguistic_exponential_uses_alpha_points() {
        let u = xabc();
        let a = FuzzySet::from_grades(&u, vec![0.25, 1.0, 0.0]).unwrap();
        let alpha = LinguisticCredibility::new("half", vec![(0.5, 0.4), (1.0, 1.0)]).unwrap();
        let b = discount_linguistic(&a, &alpha, DiscountModel::Exponential);
        assert_pairs(b.fuzzy_grade("a").unwrap(), &[(0.25, 1.0), (0.5, 0.4)]);
        assert_pairs(b.fuzzy_grade("b").unwrap(), &[(1.0, 1.0)]);
        assert_pairs(b.fuzzy_grade("c").unwrap(), &[(0.0, 1.0)]);
    }

    #[test]
    fn pointwise_examples() {
        let u = xabc();
        let a = FuzzySet::from_grades(&u, vec![1.0, 0.0, 0.0]).unwrap();
        let h = FuzzySet::from_grades(&u, vec![1.0, 0.5, 0.0]).unwrap();
        assert_eq!(
            discount_pointwise(&a, &h, Conorm::Max).unwrap().grades(),
            &[1.0, 0.5, 1.0]
        );
        assert_eq!(
            discount_pointwise(&a, &FuzzySet::ones(&u), Conorm::Max).unwrap(),
            a
        );
        let other = Arc::new(Universe::new("Y", ["a", "b", "c"]).unwrap());
        assert!(discount_pointwise(&a, &FuzzySet::ones(&other), Conorm::Max).is_err());
    }

    fn line5() -> Arc<Universe> {
        let labels = ["x1", "x2", "x3", "x4", "x5"];
        let mut pairs = Vec::new();
        for i in 0..5 {
            for j in (i + 1)..5 {
                pairs.push((labels[i], labels[j], 1.0 - (j - i) as f64 / 4.0));
            }
        }
        Arc::new(
            Universe::new("L", labels)
                .unwrap()
                .with_proximity(pairs)
                .unwrap(),
        )
    }

    #[test]
    fn proximity_to_set_examples() {
        let u = line5();
        let crisp = FuzzySet::crisp(&u, ["x3"]).unwrap();
        assert_eq!(proximity_to_set(&crisp, "x1").unwrap(), 0.5);
        assert_eq!(proximity_to_set(&crisp, "x3").unwrap(), 1.0);

        let v = Arc::new(
            Universe::new("V", ["x1", "x2", "x3"])
                .unwrap()
                .with_proximity([("x3", "x1", 0.9), ("x3", "x2", 0.2)])
                .unwrap(),
        );
        let a = FuzzySet::new(&v, [("x1", 0.5), ("x2", 1.0)]).unwrap();
        assert_eq!(proximity_to_set(&a, "x3").unwrap(), 0.5);

        let plain = xabc();
        assert!(matches!(
            proximity_to_set(&FuzzySet::ones(&plain), "a"),
            Err(Error::NoProximity(_))
        ));
    }

    #[test]
    fn proximity_discount_endpoints() {
        let u = line5();
        let a = FuzzySet::new(&u, [("x2", 0.4), ("x3", 1.0)]).unwrap();
        let f = PowProfile::default();
        for mode in [ProximityMode::Literal, ProximityMode::Soften] {
            let none = discount_proximity(&a, 0.0, &f, Conorm::Max, mode).unwrap();
            assert_eq!(none, FuzzySet::ones(&u));
        }
        let full_literal =
            discount_proximity(&a, 1.0, &f, Conorm::Max, ProximityMode::Literal).unwrap();
        assert_eq!(full_literal, a);
        let full_soft =
            discount_proximity(&a, 1.0, &f, Conorm::Max, ProximityMode::Soften).unwrap();
        assert_eq!(full_soft, proximity_dilation(&a).unwrap());
        assert!(discount_proximity(&a, -0.1, &f, Conorm::Max, ProximityMode::Soften).is_err());
    }

    #[test]
    fn built_in_profiles_pass_and_constant_fails() {
        assert!(validate_profile(&cap_profile(2.0).unwrap()).passed());
        assert!(validate_profile(&pow_profile(3.0).unwrap()).passed());
        let constant = FnProfile {
            tag: "const".into(),
            f: |_: f64, _: f64| 0.5,
        };
        let report = validate_profile(&constant);
        assert!(!report.passed());
        assert!(report.violates(ProfileAxiom::ZeroCredibility));
        assert!(report.violates(ProfileAxiom::FullCredibility));
        assert_eq!(
            report.first_violation().unwrap().axiom,
            ProfileAxiom::ZeroCredibility
        );
    }

    #[test]
    fn step_profile_fails_continuity() {
        let step = FnProfile {
            tag: "step".into(),
            f: |a: f64, _: f64| if a >= 0.5 { 1.0 } else { 0.0 },
        };
        let report = validate_profile(&step);
        assert!(report.violates(ProfileAxiom::Continuity));
        assert!(!report.violates(ProfileAxiom::MonotoneInCredibility));
    }

    #[test]
    fn negative_kappa_rejected() {
        assert!(cap_profile(-1.0).is_err());
        assert!(pow_profile(f64::NAN).is_err());
    }
}
