//! Fuzzy ideals with exact rational membership grades.
//!
//! A fuzzy subset μ : L → [0, 1] ∩ ℚ is a fuzzy ideal when it reverses the
//! order and is superadditive over ⊎:
//!   x ⪯ y ⟹ μ(x) ≥ μ(y)  and  μ(x ⊎ y) ≥ min(μ(x), μ(y)).
//! Several equivalent characterizations are implemented side by side; they
//! must agree on every input, and the test suite enforces that. Grades are
//! exact rationals throughout; no floating point is involved anywhere.

use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::bits::ElemSet;
use crate::ideal::ideal_closure;
use crate::residuated::{AlgebraId, FiniteResiduatedLattice};

/// Exact rational membership grade.
pub type Grade = Ratio<i64>;

pub fn grade(numer: i64, denom: i64) -> Grade {
    Ratio::new(numer, denom)
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FuzzyError {
    #[error("fuzzy subset must assign a grade to each of the {expected} elements, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("grade {grade} for element {element} is outside [0, 1]")]
    GradeOutOfRange { element: String, grade: String },
    #[error("two-level construction requires alpha > beta, got alpha={alpha} beta={beta}")]
    BadLevels { alpha: String, beta: String },
    #[error("fuzzy subset belongs to algebra {got}, expected {expected}")]
    AlgebraMismatch { expected: AlgebraId, got: AlgebraId },
}

/// A total map from the universe of one algebra into [0, 1] ∩ ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzySubset {
    grades: Vec<Grade>,
    algebra: AlgebraId,
}

impl FuzzySubset {
    pub fn new(l: &FiniteResiduatedLattice, grades: Vec<Grade>) -> Result<FuzzySubset, FuzzyError> {
        if grades.len() != l.n() {
            return Err(FuzzyError::WrongLength {
                expected: l.n(),
                got: grades.len(),
            });
        }
        for (i, g) in grades.iter().enumerate() {
            if *g < Grade::zero() || *g > Grade::one() {
                return Err(FuzzyError::GradeOutOfRange {
                    element: l.name(i).to_string(),
                    grade: g.to_string(),
                });
            }
        }
        Ok(FuzzySubset {
            grades,
            algebra: l.id(),
        })
    }

    pub fn constant(l: &FiniteResiduatedLattice, g: Grade) -> Result<FuzzySubset, FuzzyError> {
        FuzzySubset::new(l, vec![g; l.n()])
    }

    /// α on members of `s`, β elsewhere. Requires α > β; both in [0, 1].
    pub fn two_level(
        l: &FiniteResiduatedLattice,
        s: ElemSet,
        alpha: Grade,
        beta: Grade,
    ) -> Result<FuzzySubset, FuzzyError> {
        if alpha <= beta {
            return Err(FuzzyError::BadLevels {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
            });
        }
        let grades = (0..l.n())
            .map(|i| if s.contains(i) { alpha } else { beta })
            .collect();
        FuzzySubset::new(l, grades)
    }

    /// The indicator map of `s`: the two-level subset with α = 1, β = 0.
    pub fn characteristic(l: &FiniteResiduatedLattice, s: ElemSet) -> FuzzySubset {
        FuzzySubset::two_level(l, s, Grade::one(), Grade::zero())
            .expect("1 > 0 always satisfies the level constraint")
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    #[inline]
    pub fn get(&self, x: usize) -> Grade {
        self.grades[x]
    }

    /// Distinct grades in decreasing order.
    pub fn image(&self) -> Vec<Grade> {
        let mut img = self.grades.clone();
        img.sort_unstable();
        img.dedup();
        img.reverse();
        img
    }

    /// Pointwise containment: self(x) ≤ other(x) everywhere.
    pub fn le(&self, other: &FuzzySubset) -> bool {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch in le");
        self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b)
    }

    /// The level set {x : μ(x) ≥ t}.
    pub fn level_set(&self, t: Grade) -> ElemSet {
        ElemSet::from_indices(
            self.grades
                .iter()
                .enumerate()
                .filter(|(_, g)| **g >= t)
                .map(|(i, _)| i),
        )
    }
}

fn check_match(l: &FiniteResiduatedLattice, mu: &FuzzySubset) {
    assert_eq!(
        mu.algebra,
        l.id(),
        "fuzzy subset used with an algebra it does not belong to"
    );
}

/// Defining characterization: order reversal plus μ(x ⊎ y) ≥ min(μx, μy).
pub fn is_fuzzy_ideal(l: &FiniteResiduatedLattice, mu: &FuzzySubset) -> bool {
    check_match(l, mu);
    let n = l.n();
    for x in 0..n {
        for y in 0..n {
            if l.leq(x, y) && mu.get(x) < mu.get(y) {
                return false;
            }
            if mu.get(l.uplus(x, y)) < mu.get(x).min(mu.get(y)) {
                return false;
            }
        }
    }
    true
}

/// Residual characterization: μ(0) dominates, and
/// μ(y) ≥ min(μ(x), μ(x* ⊙ y)) for all x, y.
pub fn is_fuzzy_ideal_residual(l: &FiniteResiduatedLattice, mu: &FuzzySubset) -> bool {
    check_match(l, mu);
    let n = l.n();
    for x in 0..n {
        if mu.get(l.bottom()) < mu.get(x) {
            return false;
        }
        for y in 0..n {
            let r = l.prod(l.neg(x), y);
            if mu.get(y) < mu.get(x).min(mu.get(r)) {
                return false;
            }
        }
    }
    true
}

/// Variant of the residual characterization with the implication-shaped
/// argument (x* → y*)* in place of x* ⊙ y. Equivalent as a predicate.
pub fn is_fuzzy_ideal_residual_impl(l: &FiniteResiduatedLattice, mu: &FuzzySubset) -> bool {
    check_match(l, mu);
    let n = l.n();
    for x in 0..n {
        if mu.get(l.bottom()) < mu.get(x) {
            return false;
        }
        for y in 0..n {
            let r = l.neg(l.implies(l.neg(x), l.neg(y)));
            if mu.get(y) < mu.get(x).min(mu.get(r)) {
                return false;
            }
        }
    }
    true
}

/// ⊞-characterization: order reversal plus μ(x ⊞ y) ≥ min(μx, μy).
pub fn is_fuzzy_ideal_boxplus(l: &FiniteResiduatedLattice, mu: &FuzzySubset) -> bool {
    check_match(l, mu);
    let n = l.n();
    for x in 0..n {
        for y in 0..n {
            if l.leq(x, y) && mu.get(x) < mu.get(y) {
                return false;
            }
            if mu.get(l.boxplus(x, y)) < mu.get(x).min(mu.get(y)) {
                return false;
            }
        }
    }
    true
}

/// Bound characterization, unit form: whenever (x ⊞ y) ⊞ z* = 1,
/// μ(z) ≥ min(μ(x), μ(y)).
pub fn is_fuzzy_ideal_bound_unit(l: &FiniteResiduatedLattice, mu: &FuzzySubset) -> bool {
    check_match(l, mu);
    let n = l.n();
    for x in 0..n {
        for y in 0..n {
            let xy = l.boxplus(x, y);
            let floor = mu.get(x).min(mu.get(y));
            for z in 0..n {
                if l.boxplus(xy, l.neg(z)) == l.top() && mu.get(z) < floor {
                    return false;
                }
            }
        }
    }
    true
}

/// Bound characterization, order form: whenever z ⪯ x ⊞ y,
/// μ(z) ≥ min(μ(x), μ(y)). Equivalent to the unit form as a predicate.
pub fn is_fuzzy_ideal_bound_below(l: &FiniteResiduatedLattice, mu: &FuzzySubset) -> bool {
    check_match(l, mu);
    let n = l.n();
    for x in 0..n {
        for y in 0..n {
            let xy = l.boxplus(x, y);
            let floor = mu.get(x).min(mu.get(y));
            for z in 0..n {
                if l.leq(z, xy) && mu.get(z) < floor {
                    return false;
                }
            }
        }
    }
    true
}

/// The generated fuzzy ideal: the smallest fuzzy ideal containing μ. Computed
/// through level sets: μ̄(x) is the largest grade t in the image of μ whose
/// level set's ideal closure captures x, and 0 when none does.
pub fn fuzzy_closure(l: &FiniteResiduatedLattice, mu: &FuzzySubset) -> FuzzySubset {
    check_match(l, mu);
    let mut out = vec![Grade::zero(); l.n()];
    let mut assigned = vec![false; l.n()];
    for t in mu.image() {
        let closed = ideal_closure(l, mu.level_set(t))
            .expect("level sets live inside the universe")
            .members();
        for x in closed.iter() {
            if !assigned[x] {
                assigned[x] = true;
                out[x] = t;
            }
        }
    }
    FuzzySubset {
        grades: out,
        algebra: mu.algebra,
    }
}
