//! Credibility as a simple support function: mass `α` on the focal set A and
//! `1 − α` on the whole universe.

use crate::error::{check_unit, Error, Result};
use crate::possibility::{ensure_same, FuzzySet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BeliefMethod {
    /// Mass-weighted possibility/certainty of the two focal elements.
    #[default]
    Weighted,
    /// Max-min against the contour function.
    Contour,
}

impl BeliefMethod {
    pub fn name(self) -> &'static str {
        match self {
            BeliefMethod::Weighted => "weighted",
            BeliefMethod::Contour => "contour",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimpleSupport {
    focal: FuzzySet,
    mass: f64,
}

impl SimpleSupport {
    /// `{A: α, X: 1 − α}`; `A` must be normal.
    pub fn new(focal: FuzzySet, mass: f64) -> Result<Self> {
        check_unit("mass", mass)?;
        if !focal.is_normal() {
            return Err(Error::SubnormalFocal(focal.height()));
        }
        Ok(Self { focal, mass })
    }

    pub fn focal(&self) -> &FuzzySet {
        &self.focal
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Mass carried by the whole universe.
    pub fn vacuous_mass(&self) -> f64 {
        1.0 - self.mass
    }

    /// `F(x) = Pl({x}) = α·A(x) + 1 − α`.
    pub fn contour(&self) -> FuzzySet {
        let alpha = self.mass;
        self.focal.map(|a| alpha * a + (1.0 - alpha))
    }

    pub fn pl(&self, b: &FuzzySet, method: BeliefMethod) -> Result<f64> {
        ensure_same(b, &self.focal)?;
        match method {
            // Poss[B / X] is the height of B.
            BeliefMethod::Weighted => {
                Ok(self.mass * b.poss(&self.focal)? + self.vacuous_mass() * b.height())
            }
            BeliefMethod::Contour => b.poss(&self.contour()),
        }
    }

    pub fn bel(&self, b: &FuzzySet, method: BeliefMethod) -> Result<f64> {
        ensure_same(b, &self.focal)?;
        match method {
            BeliefMethod::Weighted => {
                let whole = FuzzySet::ones(b.universe());
                Ok(self.mass * b.cert(&self.focal)? + self.vacuous_mass() * b.cert(&whole)?)
            }
            BeliefMethod::Contour => b.cert(&self.contour()),
        }
    }
}

pub fn simple_support(focal: &FuzzySet, alpha: f64) -> Result<SimpleSupport> {
    SimpleSupport::new(focal.clone(), alpha)
}

pub fn pl(b: &FuzzySet, ss: &SimpleSupport, method: BeliefMethod) -> Result<f64> {
    ss.pl(b, method)
}

pub fn bel(b: &FuzzySet, ss: &SimpleSupport, method: BeliefMethod) -> Result<f64> {
    ss.bel(b, method)
}

pub fn contour(ss: &SimpleSupport) -> FuzzySet {
    ss.contour()
}
