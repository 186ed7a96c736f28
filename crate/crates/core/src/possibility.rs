//! Finite universes, discrete fuzzy sets and the possibility/certainty
//! measures that answer queries against them.
//!
//! A proposition "V is A" is carried as a [`FuzzySet`]: one grade per element
//! of a [`Universe`], read as the possibility that `V` takes that value.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{check_unit, Error, Result};

/// Absolute tolerance used when a grade is compared against 1 (normality).
pub const GRADE_EPS: f64 = 1e-12;

/// A finite, ordered set of labelled elements with an optional proximity
/// relation `p: X × X → [0,1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Universe {
    name: String,
    elements: Vec<String>,
    index: HashMap<String, usize>,
    proximity: Option<Vec<f64>>,
}

impl Universe {
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        elements: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let name = name.into();
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(Error::EmptyUniverse(name));
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, label) in elements.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateElement {
                    universe: name,
                    label: label.clone(),
                });
            }
        }
        Ok(Self {
            name,
            elements,
            index,
            proximity: None,
        })
    }

    /// Attaches a proximity relation given as `(x, y, p(x,y))` triples.
    ///
    /// The symmetric closure is taken and `p(x,x) = 1` is implicit; pairs not
    /// mentioned get proximity 0. A pair stated twice with different values,
    /// or a diagonal entry other than 1, is rejected.
    pub fn with_proximity<'a>(
        mut self,
        pairs: impl IntoIterator<Item = (&'a str, &'a str, f64)>,
    ) -> Result<Self> {
        let n = self.len();
        let mut matrix = vec![0.0; n * n];
        let mut seen = vec![false; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1.0;
            seen[i * n + i] = true;
        }
        for (x, y, value) in pairs {
            let value = check_unit("proximity", value)?;
            let i = self.require(x)?;
            let j = self.require(y)?;
            if i == j {
                if value != 1.0 {
                    return Err(Error::InvalidProximity(format!(
                        "p({x},{x}) must be 1, got {value}"
                    )));
                }
                continue;
            }
            for (a, b) in [(i, j), (j, i)] {
                let slot = a * n + b;
                if seen[slot] && matrix[slot] != value {
                    return Err(Error::InvalidProximity(format!(
                        "conflicting values for p({x},{y}): {} and {value}",
                        matrix[slot]
                    )));
                }
                matrix[slot] = value;
                seen[slot] = true;
            }
        }
        self.proximity = Some(matrix);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn require(&self, label: &str) -> Result<usize> {
        self.position(label).ok_or_else(|| Error::UnknownElement {
            universe: self.name.clone(),
            label: label.to_string(),
        })
    }

    pub fn has_proximity(&self) -> bool {
        self.proximity.is_some()
    }

    /// Proximity between the elements at positions `i` and `j`.
    pub fn proximity(&self, i: usize, j: usize) -> Option<f64> {
        self.proximity.as_ref().map(|m| m[i * self.len() + j])
    }
}

fn same_universe(left: &Arc<Universe>, right: &Arc<Universe>) -> bool {
    Arc::ptr_eq(left, right) || left == right
}

pub(crate) fn ensure_same(left: &FuzzySet, right: &FuzzySet) -> Result<()> {
    if same_universe(&left.universe, &right.universe) {
        Ok(())
    } else {
        Err(Error::UniverseMismatch {
            left: left.universe.name.clone(),
            right: right.universe.name.clone(),
        })
    }
}

/// Membership grades in [0,1], one per element of a universe.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySet {
    universe: Arc<Universe>,
    grades: Vec<f64>,
}

impl FuzzySet {
    /// Builds a set from `element → grade` assignments; unassigned elements
    /// get grade 0.
    pub fn new<'a>(
        universe: &Arc<Universe>,
        assignments: impl IntoIterator<Item = (&'a str, f64)>,
    ) -> Result<Self> {
        let mut grades = vec![0.0; universe.len()];
        for (label, grade) in assignments {
            let i = universe.require(label)?;
            grades[i] = check_unit("grade", grade)?;
        }
        Ok(Self {
            universe: Arc::clone(universe),
            grades,
        })
    }

    pub fn from_grades(universe: &Arc<Universe>, grades: Vec<f64>) -> Result<Self> {
        if grades.len() != universe.len() {
            return Err(Error::InvalidParameter(format!(
                "expected {} grades for universe `{}`, got {}",
                universe.len(),
                universe.name,
                grades.len()
            )));
        }
        for &g in &grades {
            check_unit("grade", g)?;
        }
        Ok(Self {
            universe: Arc::clone(universe),
            grades,
        })
    }

    /// Internal constructor for grades already known to lie in [0,1].
    pub(crate) fn from_raw(universe: &Arc<Universe>, grades: Vec<f64>) -> Self {
        debug_assert_eq!(grades.len(), universe.len());
        debug_assert!(grades.iter().all(|g| (0.0..=1.0).contains(g)));
        Self {
            universe: Arc::clone(universe),
            grades,
        }
    }

    /// Moves the grades onto an equivalent universe (same elements in the
    /// same order), e.g. once a proximity relation has been attached.
    pub(crate) fn rebind(&self, universe: &Arc<Universe>) -> Self {
        debug_assert_eq!(self.universe.elements, universe.elements);
        Self::from_raw(universe, self.grades.clone())
    }

    pub fn constant(universe: &Arc<Universe>, grade: f64) -> Result<Self> {
        check_unit("grade", grade)?;
        Ok(Self::from_raw(universe, vec![grade; universe.len()]))
    }

    /// The whole universe, "V is X": total ignorance.
    pub fn ones(universe: &Arc<Universe>) -> Self {
        Self::from_raw(universe, vec![1.0; universe.len()])
    }

    pub fn zeros(universe: &Arc<Universe>) -> Self {
        Self::from_raw(universe, vec![0.0; universe.len()])
    }

    /// Crisp set containing exactly the listed elements.
    pub fn crisp<'a>(
        universe: &Arc<Universe>,
        members: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self> {
        Self::new(universe, members.into_iter().map(|m| (m, 1.0)))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn grades(&self) -> &[f64] {
        &self.grades
    }

    pub fn grade(&self, label: &str) -> Option<f64> {
        self.universe.position(label).map(|i| self.grades[i])
    }

    pub fn len(&self) -> usize {
        self.grades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grades.is_empty()
    }

    pub(crate) fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        Self::from_raw(&self.universe, self.grades.iter().map(|&g| f(g)).collect())
    }

    pub(crate) fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        ensure_same(self, other)?;
        Ok(Self::from_raw(
            &self.universe,
            self.grades
                .iter()
                .zip(&other.grades)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        ))
    }

    /// Pointwise `1 − A(x)`.
    pub fn complement(&self) -> Self {
        self.map(|g| 1.0 - g)
    }

    pub fn height(&self) -> f64 {
        self.grades.iter().copied().fold(0.0, f64::max)
    }

    pub fn is_normal(&self) -> bool {
        (self.height() - 1.0).abs() <= GRADE_EPS
    }

    /// Pointwise minimum of a nonempty list of sets over one universe.
    pub fn conjoin<'a>(sets: impl IntoIterator<Item = &'a FuzzySet>) -> Result<FuzzySet> {
        let mut iter = sets.into_iter();
        let first = iter.next().ok_or(Error::EmptyInput("conjunction"))?;
        iter.try_fold(first.clone(), |acc, next| acc.zip_with(next, f64::min))
    }

    /// `Poss[V is self / V is evidence] = max_x min(self(x), evidence(x))`.
    pub fn poss(&self, evidence: &FuzzySet) -> Result<f64> {
        ensure_same(self, evidence)?;
        Ok(self
            .grades
            .iter()
            .zip(&evidence.grades)
            .map(|(&b, &e)| b.min(e))
            .fold(0.0, f64::max))
    }

    /// `Cert[V is self / V is evidence] = 1 − Poss[not self / evidence]`.
    pub fn cert(&self, evidence: &FuzzySet) -> Result<f64> {
        Ok(1.0 - self.complement().poss(evidence)?)
    }

    /// True iff "V is `conclusion`" follows from "V is `self`", i.e. the
    /// conclusion dominates `self` pointwise.
    pub fn entails(&self, conclusion: &FuzzySet) -> Result<bool> {
        ensure_same(self, conclusion)?;
        Ok(self
            .grades
            .iter()
            .zip(&conclusion.grades)
            .all(|(&d, &b)| b >= d))
    }
}

impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (label, g)) in self.universe.elements.iter().zip(&self.grades).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}/{label}")?;
        }
        f.write_str("}")
    }
}

/// The t-conorms available for lifting a membership grade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Conorm {
    #[default]
    Max,
    /// Probabilistic sum `a + b − ab`.
    ProbSum,
    /// Bounded sum `min(1, a + b)`.
    Bounded,
}

impl Conorm {
    pub const ALL: [Conorm; 3] = [Conorm::Max, Conorm::ProbSum, Conorm::Bounded];

    pub fn apply(self, a: f64, b: f64) -> Result<f64> {
        check_unit("conorm argument", a)?;
        check_unit("conorm argument", b)?;
        Ok(self.eval(a, b))
    }

    // 0 and 1 are handled exactly so that endpoint laws hold bit-for-bit.
    pub(crate) fn eval(self, a: f64, b: f64) -> f64 {
        if a == 1.0 || b == 1.0 {
            return 1.0;
        }
        if a == 0.0 {
            return b;
        }
        if b == 0.0 {
            return a;
        }
        match self {
            Conorm::Max => a.max(b),
            Conorm::ProbSum => (a + b - a * b).clamp(0.0, 1.0),
            Conorm::Bounded => (a + b).min(1.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Conorm::Max => "max",
            Conorm::ProbSum => "probsum",
            Conorm::Bounded => "bounded",
        }
    }
}

/// How a credibility `α` discounts a grade `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiscountModel {
    /// `D(α, a) = S(1 − α, a)`.
    Conorm(Conorm),
    /// `D(α, a) = a^α`, with `0^0 = 1`.
    Exponential,
}

impl Default for DiscountModel {
    fn default() -> Self {
        DiscountModel::Conorm(Conorm::Max)
    }
}

impl DiscountModel {
    pub fn apply(self, alpha: f64, a: f64) -> f64 {
        match self {
            DiscountModel::Conorm(s) => s.eval(1.0 - alpha, a),
            DiscountModel::Exponential => exp_discount(a, alpha),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DiscountModel::Conorm(s) => s.name(),
            DiscountModel::Exponential => "exp",
        }
    }
}

pub(crate) fn exp_discount(a: f64, exponent: f64) -> f64 {
    if exponent == 0.0 {
        1.0
    } else {
        a.powf(exponent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn xabc() -> Arc<Universe> {
        Arc::new(Universe::new("X", ["a", "b", "c"]).unwrap())
    }

    fn set(u: &Arc<Universe>, g: [f64; 3]) -> FuzzySet {
        FuzzySet::from_grades(u, g.to_vec()).unwrap()
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= TOL)
    }

    #[test]
    fn make_fuzzy_set_examples() {
        let u = xabc();
        let a = FuzzySet::new(&u, [("a", 0.6), ("b", 1.0), ("c", 0.8)]).unwrap();
        assert_eq!(a.grades(), &[0.6, 1.0, 0.8]);
        let empty = FuzzySet::new(&u, []).unwrap();
        assert_eq!(empty.grades(), &[0.0, 0.0, 0.0]);
        let single = FuzzySet::new(&u, [("b", 1.0)]).unwrap();
        assert_eq!(single.grades(), &[0.0, 1.0, 0.0]);
    }

    #[test]
    fn make_fuzzy_set_errors() {
        let u = xabc();
        assert!(matches!(
            FuzzySet::new(&u, [("d", 0.5)]),
            Err(Error::UnknownElement { .. })
        ));
        assert!(matches!(
            FuzzySet::new(&u, [("a", 1.2)]),
            Err(Error::OutOfRange { .. })
        ));
        assert!(FuzzySet::new(&u, [("a", f64::NAN)]).is_err());
        assert!(FuzzySet::from_grades(&u, vec![0.1, 0.2]).is_err());
    }

    #[test]
    fn universe_validation() {
        assert!(matches!(
            Universe::new("E", Vec::<String>::new()),
            Err(Error::EmptyUniverse(_))
        ));
        assert!(matches!(
            Universe::new("D", ["a", "a"]),
            Err(Error::DuplicateElement { .. })
        ));
    }

    #[test]
    fn proximity_closure_and_conflicts() {
        let u = Universe::new("X", ["a", "b", "c"])
            .unwrap()
            .with_proximity([("a", "b", 0.4)])
            .unwrap();
        assert_eq!(u.proximity(0, 1), Some(0.4));
        assert_eq!(u.proximity(1, 0), Some(0.4));
        assert_eq!(u.proximity(2, 2), Some(1.0));
        assert_eq!(u.proximity(0, 2), Some(0.0));

        let conflict = Universe::new("X", ["a", "b"])
            .unwrap()
            .with_proximity([("a", "b", 0.4), ("b", "a", 0.5)]);
        assert!(matches!(conflict, Err(Error::InvalidProximity(_))));
        let same = Universe::new("X", ["a", "b"])
            .unwrap()
            .with_proximity([("a", "b", 0.4), ("b", "a", 0.4)]);
        assert!(same.is_ok());
        let diag = Universe::new("X", ["a"])
            .unwrap()
            .with_proximity([("a", "a", 0.3)]);
        assert!(matches!(diag, Err(Error::InvalidProximity(_))));
    }

    #[test]
    fn complement_examples() {
        let u = xabc();
        let a = set(&u, [0.6, 1.0, 0.8]);
        assert!(close(a.complement().grades(), &[0.4, 0.0, 0.2]));
        assert_eq!(FuzzySet::zeros(&u).complement(), FuzzySet::ones(&u));
        assert!(close(a.complement().complement().grades(), a.grades()));
    }

    #[test]
    fn conjoin_examples() {
        let u = xabc();
        let a = set(&u, [0.6, 1.0, 0.8]);
        let b = set(&u, [1.0, 0.5, 0.0]);
        assert_eq!(FuzzySet::conjoin([&a]).unwrap(), a);
        assert_eq!(
            FuzzySet::conjoin([&a, &b]).unwrap().grades(),
            &[0.6, 0.5, 0.0]
        );
        assert_eq!(FuzzySet::conjoin([&a, &FuzzySet::ones(&u)]).unwrap(), a);
        assert!(matches!(
            FuzzySet::conjoin(std::iter::empty()),
            Err(Error::EmptyInput(_))
        ));
        let other = Arc::new(Universe::new("Y", ["a", "b", "c"]).unwrap());
        let c = FuzzySet::ones(&other);
        assert!(matches!(
            FuzzySet::conjoin([&a, &c]),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn conorm_examples() {
        assert_eq!(Conorm::Max.apply(0.3, 0.8).unwrap(), 0.8);
        assert!((Conorm::ProbSum.apply(0.3, 0.8).unwrap() - 0.86).abs() <= TOL);
        assert_eq!(Conorm::Bounded.apply(0.5, 0.7).unwrap(), 1.0);
        assert!(Conorm::Max.apply(-0.1, 0.5).is_err());
        assert!(Conorm::ProbSum.apply(0.1, 1.5).is_err());
    }

    #[test]
    fn poss_examples() {
        let u = xabc();
        let a = set(&u, [0.6, 1.0, 0.8]);
        assert_eq!(a.poss(&a).unwrap(), 1.0);
        let left = set(&u, [1.0, 0.0, 0.0]);
        let right = set(&u, [0.0, 0.7, 0.3]);
        assert_eq!(left.poss(&right).unwrap(), 0.0);
        assert_eq!(a.poss(&set(&u, [1.0, 0.5, 0.0])).unwrap(), 0.6);
    }

    #[test]
    fn cert_examples() {
        let u = xabc();
        let a = set(&u, [0.6, 1.0, 0.8]);
        assert!((a.cert(&FuzzySet::ones(&u)).unwrap() - 0.6).abs() <= TOL);
        let crisp = set(&u, [1.0, 1.0, 0.0]);
        let inside = set(&u, [0.3, 1.0, 0.0]);
        assert_eq!(crisp.cert(&inside).unwrap(), 1.0);
        let b = set(&u, [1.0, 0.0, 0.0]);
        assert!((b.cert(&set(&u, [1.0, 0.5, 0.0])).unwrap() - 0.5).abs() <= TOL);
    }

    #[test]
    fn height_and_normality() {
        let u = xabc();
        let a = set(&u, [0.6, 1.0, 0.8]);
        assert_eq!(a.height(), 1.0);
        assert!(a.is_normal());
        let sub = set(&u, [0.6, 0.9, 0.8]);
        assert_eq!(sub.height(), 0.9);
        assert!(!sub.is_normal());
        assert_eq!(FuzzySet::zeros(&u).height(), 0.0);
    }

    #[test]
    fn entails_examples() {
        let u = xabc();
        let d = set(&u, [0.8, 1.0, 0.8]);
        assert!(d.entails(&FuzzySet::ones(&u)).unwrap());
        assert!(d.entails(&d).unwrap());
        assert!(!d.entails(&set(&u, [0.7, 1.0, 0.8])).unwrap());
    }

    #[test]
    fn exponential_zero_to_zero_is_one() {
        assert_eq!(DiscountModel::Exponential.apply(0.0, 0.0), 1.0);
        assert_eq!(DiscountModel::Exponential.apply(1.0, 0.0), 0.0);
    }
}
