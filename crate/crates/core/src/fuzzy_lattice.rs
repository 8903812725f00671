//! The lattice of fuzzy ideals: meets, joins, the Brouwerian (meet over
//! arbitrary join) distributive law, and a relative pseudocomplement computed
//! over a finite grid of admissible grades.
//!
//! Meet is pointwise minimum. The join of a family is the fuzzy closure of
//! its pointwise supremum. Restricted to fuzzy ideals whose grades stay
//! inside a fixed finite [`ValueGrid`], the lattice is a Heyting algebra and
//! the arrow μ₁ ⇝ μ₂ is the join of every grid-valued fuzzy ideal μ with
//! fi_meet(μ₁, μ) ⊆ μ₂. All candidate enumeration is budget-guarded.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::fuzzy::{fuzzy_closure, is_fuzzy_ideal, FuzzyError, FuzzySubset, Grade};
use crate::residuated::FiniteResiduatedLattice;

/// Default cap on the candidate enumeration space |grid|^|L|.
pub const DEFAULT_ENUM_BUDGET: u64 = 1 << 20;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FuzzyLatticeError {
    #[error("value grid must contain 0")]
    GridMissingZero,
    #[error("value grid must contain 1")]
    GridMissingOne,
    #[error("grade {grade} in the grid is outside [0, 1]")]
    GridGradeOutOfRange { grade: String },
    #[error("enumeration space of {space} grid-valued maps exceeds the budget of {budget}")]
    BudgetExceeded { space: u128, budget: u64 },
    #[error("argument {which} is not a fuzzy ideal")]
    NotAFuzzyIdeal { which: &'static str },
    #[error("grade {grade} of element {element} lies outside the value grid")]
    GradeOffGrid { element: String, grade: String },
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

/// A finite ascending set of admissible grades; must contain 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueGrid {
    values: Vec<Grade>,
}

impl ValueGrid {
    pub fn new(mut values: Vec<Grade>) -> Result<ValueGrid, FuzzyLatticeError> {
        values.sort_unstable();
        values.dedup();
        for g in &values {
            if *g < Grade::zero() || *g > Grade::one() {
                return Err(FuzzyLatticeError::GridGradeOutOfRange {
                    grade: g.to_string(),
                });
            }
        }
        if values.first() != Some(&Grade::zero()) {
            return Err(FuzzyLatticeError::GridMissingZero);
        }
        if values.last() != Some(&Grade::one()) {
            return Err(FuzzyLatticeError::GridMissingOne);
        }
        Ok(ValueGrid { values })
    }

    /// The grid spanned by the grades of the given subsets together with 0
    /// and 1; the default grid for the arrow operation.
    pub fn spanning(subsets: &[&FuzzySubset]) -> ValueGrid {
        let mut values = vec![Grade::zero(), Grade::one()];
        for s in subsets {
            values.extend_from_slice(s.grades());
        }
        ValueGrid::new(values).expect("0 and 1 are present by construction")
    }

    pub fn values(&self) -> &[Grade] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, g: Grade) -> bool {
        self.values.binary_search(&g).is_ok()
    }

    fn covers(&self, mu: &FuzzySubset) -> Option<usize> {
        mu.grades().iter().position(|g| !self.contains(*g))
    }
}

fn check_owner(
    l: &FiniteResiduatedLattice,
    mu: &FuzzySubset,
) -> Result<(), FuzzyLatticeError> {
    if mu.algebra() != l.id() {
        return Err(FuzzyLatticeError::Fuzzy(FuzzyError::AlgebraMismatch {
            expected: l.id(),
            got: mu.algebra(),
        }));
    }
    Ok(())
}

/// Pointwise minimum. The meet of two fuzzy ideals is again a fuzzy ideal.
pub fn fi_meet(
    l: &FiniteResiduatedLattice,
    a: &FuzzySubset,
    b: &FuzzySubset,
) -> Result<FuzzySubset, FuzzyLatticeError> {
    check_owner(l, a)?;
    check_owner(l, b)?;
    let grades = a
        .grades()
        .iter()
        .zip(b.grades())
        .map(|(x, y)| *x.min(y))
        .collect();
    Ok(FuzzySubset::new(l, grades)?)
}

/// Join of a family of fuzzy ideals: the fuzzy closure of the pointwise
/// supremum. The empty family yields the constant-0 ideal, the bottom of the
/// fuzzy-ideal lattice; this is a deliberate convention (the unit of join),
/// relied on nowhere internally and documented here rather than hidden.
pub fn fi_join(
    l: &FiniteResiduatedLattice,
    family: &[&FuzzySubset],
) -> Result<FuzzySubset, FuzzyLatticeError> {
    for mu in family {
        check_owner(l, mu)?;
    }
    let mut grades = vec![Grade::zero(); l.n()];
    for mu in family {
        for (acc, g) in grades.iter_mut().zip(mu.grades()) {
            if g > acc {
                *acc = *g;
            }
        }
    }
    let sup = FuzzySubset::new(l, grades)?;
    Ok(fuzzy_closure(l, &sup))
}

/// Outcome of one Brouwerian distributivity check:
/// fi_meet(μ, ⊔F) against ⊔ { fi_meet(μ, ν) : ν ∈ F }.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrouwerianReport {
    pub lhs: FuzzySubset,
    pub rhs: FuzzySubset,
    /// First element where the two sides differ, with both grades.
    pub discrepancy: Option<(usize, Grade, Grade)>,
}

impl BrouwerianReport {
    pub fn holds(&self) -> bool {
        self.discrepancy.is_none()
    }
}

/// Checks μ ⊓ ⊔F = ⊔ { μ ⊓ ν : ν ∈ F } for one μ and one finite family F.
pub fn brouwerian_check(
    l: &FiniteResiduatedLattice,
    mu: &FuzzySubset,
    family: &[&FuzzySubset],
) -> Result<BrouwerianReport, FuzzyLatticeError> {
    let lhs = fi_meet(l, mu, &fi_join(l, family)?)?;
    let meets: Vec<FuzzySubset> = family
        .iter()
        .map(|nu| fi_meet(l, mu, nu))
        .collect::<Result<_, _>>()?;
    let refs: Vec<&FuzzySubset> = meets.iter().collect();
    let rhs = fi_join(l, &refs)?;
    let discrepancy = (0..l.n())
        .find(|&x| lhs.get(x) != rhs.get(x))
        .map(|x| (x, lhs.get(x), rhs.get(x)));
    Ok(BrouwerianReport {
        lhs,
        rhs,
        discrepancy,
    })
}

/// Every fuzzy ideal of `l` whose grades all lie in `grid`, in the
/// enumeration order of grade tuples (lexicographic over the grid). Guarded:
/// |grid|^|L| may not exceed `budget`.
pub fn enumerate_grid_fuzzy_ideals(
    l: &FiniteResiduatedLattice,
    grid: &ValueGrid,
    budget: u64,
) -> Result<Vec<FuzzySubset>, FuzzyLatticeError> {
    let n = l.n();
    let space = (grid.len() as u128).saturating_pow(n as u32);
    if space > budget as u128 {
        return Err(FuzzyLatticeError::BudgetExceeded {
            space,
            budget,
        });
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        let grades: Vec<Grade> = digits.iter().map(|&d| grid.values()[d]).collect();
        let mu = FuzzySubset::new(l, grades)?;
        if is_fuzzy_ideal(l, &mu) {
            out.push(mu);
        }
        // Mixed-radix increment, most significant digit last.
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < grid.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Relative pseudocomplement over a grid: the join of every grid-valued
/// fuzzy ideal μ with fi_meet(μ₁, μ) ⊆ μ₂. Both arguments must be fuzzy
/// ideals with grades inside the grid.
pub fn heyting_arrow(
    l: &FiniteResiduatedLattice,
    mu1: &FuzzySubset,
    mu2: &FuzzySubset,
    grid: &ValueGrid,
    budget: u64,
) -> Result<FuzzySubset, FuzzyLatticeError> {
    check_owner(l, mu1)?;
    check_owner(l, mu2)?;
    for (which, mu) in [("left", mu1), ("right", mu2)] {
        if !is_fuzzy_ideal(l, mu) {
            return Err(FuzzyLatticeError::NotAFuzzyIdeal { which });
        }
        if let Some(x) = grid.covers(mu) {
            return Err(FuzzyLatticeError::GradeOffGrid {
                element: l.name(x).to_string(),
                grade: mu.get(x).to_string(),
            });
        }
    }
    let candidates = enumerate_grid_fuzzy_ideals(l, grid, budget)?;
    let below: Vec<&FuzzySubset> = candidates
        .iter()
        .filter(|mu| {
            fi_meet(l, mu1, mu)
                .map(|m| m.le(mu2))
                .unwrap_or(false)
        })
        .collect();
    fi_join(l, &below)
}

/// Verdict for one law inside a [`HeytingReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub law: &'static str,
    pub ok: bool,
    pub witness: Option<String>,
}

/// Outcome of the exhaustive Heyting-algebra check over all grid-valued
/// fuzzy ideals of one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeytingReport {
    pub candidates: usize,
    pub laws: Vec<LawCheck>,
}

impl HeytingReport {
    pub fn ok(&self) -> bool {
        self.laws.iter().all(|c| c.ok)
    }

    /// Tab-separated machine form: law, PASS/FAIL, witness (or `-`).
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for c in &self.laws {
            out.push_str(c.law);
            out.push('\t');
            out.push_str(if c.ok { "PASS" } else { "FAIL" });
            out.push('\t');
            out.push_str(c.witness.as_deref().unwrap_or("-"));
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Display for HeytingReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "candidates: {}", self.candidates)?;
        for c in &self.laws {
            match (&c.ok, &c.witness) {
                (true, _) => writeln!(f, "PASS {}", c.law)?,
                (false, Some(w)) => writeln!(f, "FAIL {} at {}", c.law, w)?,
                (false, None) => writeln!(f, "FAIL {}", c.law)?,
            }
        }
        Ok(())
    }
}

fn grades_str(mu: &FuzzySubset) -> String {
    let parts: Vec<String> = mu.grades().iter().map(|g| g.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Exhaustively verifies the bounded distributive lattice laws and the
/// Heyting adjunction over every grid-valued fuzzy ideal of `l`. Intended for
/// small universes; the enumeration is budget-guarded like the arrow.
pub fn heyting_axioms_check(
    l: &FiniteResiduatedLattice,
    grid: &ValueGrid,
    budget: u64,
) -> Result<HeytingReport, FuzzyLatticeError> {
    let cands = enumerate_grid_fuzzy_ideals(l, grid, budget)?;
    let mut laws: Vec<LawCheck> = Vec::new();
    let mut push = |law: &'static str, witness: Option<String>| {
        laws.push(LawCheck {
            law,
            ok: witness.is_none(),
            witness,
        });
    };

    let member = |mu: &FuzzySubset| cands.iter().any(|c| c == mu);
    let bottom = FuzzySubset::constant(l, Grade::zero())?;
    let top = FuzzySubset::constant(l, Grade::one())?;
    push(
        "bottom-is-least",
        if member(&bottom) && cands.iter().all(|c| bottom.le(c)) {
            None
        } else {
            Some("constant 0".into())
        },
    );
    push(
        "top-is-greatest",
        if member(&top) && cands.iter().all(|c| c.le(&top)) {
            None
        } else {
            Some("constant 1".into())
        },
    );

    // Pairwise laws: closure of the candidate set plus commutativity and
    // absorption.
    let mut pair_witness: [Option<String>; 5] = Default::default();
    for a in &cands {
        for b in &cands {
            let m = fi_meet(l, a, b)?;
            let j = fi_join(l, &[a, b])?;
            let w = || Some(format!("a={} b={}", grades_str(a), grades_str(b)));
            if pair_witness[0].is_none() && !member(&m) {
                pair_witness[0] = w();
            }
            if pair_witness[1].is_none() && !member(&j) {
                pair_witness[1] = w();
            }
            if pair_witness[2].is_none() && m != fi_meet(l, b, a)? {
                pair_witness[2] = w();
            }
            if pair_witness[3].is_none() && fi_join(l, &[b, a])? != j {
                pair_witness[3] = w();
            }
            let absorbed =
                fi_meet(l, a, &j)? == *a && fi_join(l, &[a, &m])? == *a;
            if pair_witness[4].is_none() && !absorbed {
                pair_witness[4] = w();
            }
        }
    }
    let [mw, jw, mc, jc, ab] = pair_witness;
    push("meet-closure", mw);
    push("join-closure", jw);
    push("meet-commutativity", mc);
    push("join-commutativity", jc);
    push("absorption", ab);

    // Triple laws: associativity and distributivity.
    let mut assoc_meet = None;
    let mut assoc_join = None;
    let mut distrib = None;
    for a in &cands {
        for b in &cands {
            for c in &cands {
                let w = || {
                    Some(format!(
                        "a={} b={} c={}",
                        grades_str(a),
                        grades_str(b),
                        grades_str(c)
                    ))
                };
                if assoc_meet.is_none() {
                    let lhs = fi_meet(l, &fi_meet(l, a, b)?, c)?;
                    let rhs = fi_meet(l, a, &fi_meet(l, b, c)?)?;
                    if lhs != rhs {
                        assoc_meet = w();
                    }
                }
                if assoc_join.is_none() {
                    let lhs = fi_join(l, &[&fi_join(l, &[a, b])?, c])?;
                    let rhs = fi_join(l, &[a, &fi_join(l, &[b, c])?])?;
                    if lhs != rhs {
                        assoc_join = w();
                    }
                }
                if distrib.is_none() {
                    let lhs = fi_meet(l, a, &fi_join(l, &[b, c])?)?;
                    let rhs = fi_join(l, &[&fi_meet(l, a, b)?, &fi_meet(l, a, c)?])?;
                    if lhs != rhs {
                        distrib = w();
                    }
                }
            }
        }
    }
    push("meet-associativity", assoc_meet);
    push("join-associativity", assoc_join);
    push("meet-over-join-distributivity", distrib);

    // Adjunction: c ⊓ a ⊆ b ⟺ c ⊆ a ⇝ b, with the arrow computed by its
    // definition as a join over the same candidate set.
    let mut adjunction = None;
    'outer: for a in &cands {
        for b in &cands {
            let below: Vec<&FuzzySubset> = cands
                .iter()
                .filter(|mu| fi_meet(l, a, mu).map(|m| m.le(b)).unwrap_or(false))
                .collect();
            let arrow = fi_join(l, &below)?;
            for c in &cands {
                let meet_le = fi_meet(l, c, a)?.le(b);
                let le_arrow = c.le(&arrow);
                if meet_le != le_arrow {
                    adjunction = Some(format!(
                        "a={} b={} c={}",
                        grades_str(a),
                        grades_str(b),
                        grades_str(c)
                    ));
                    break 'outer;
                }
            }
        }
    }
    push("adjunction", adjunction);

    Ok(HeytingReport {
        candidates: cands.len(),
        laws,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::grade;
    use crate::wajsberg::product_wajsberg;

    fn square() -> FiniteResiduatedLattice {
        product_wajsberg(2).unwrap().to_residuated().unwrap()
    }

    #[test]
    fn grid_requires_bounds() {
        assert!(matches!(
            ValueGrid::new(vec![Grade::one()]),
            Err(FuzzyLatticeError::GridMissingZero)
        ));
        assert!(matches!(
            ValueGrid::new(vec![Grade::zero(), grade(1, 2)]),
            Err(FuzzyLatticeError::GridMissingOne)
        ));
        let g = ValueGrid::new(vec![Grade::one(), Grade::zero(), grade(1, 2), grade(1, 2)])
            .unwrap();
        assert_eq!(g.values(), &[Grade::zero(), grade(1, 2), Grade::one()]);
    }

    #[test]
    fn meet_is_pointwise_min() {
        let l = square();
        let a = FuzzySubset::new(&l, vec![Grade::one(), grade(1, 2), Grade::zero(), Grade::zero()])
            .unwrap();
        let b = FuzzySubset::new(&l, vec![grade(1, 3), Grade::one(), Grade::zero(), Grade::zero()])
            .unwrap();
        let m = fi_meet(&l, &a, &b).unwrap();
        assert_eq!(
            m.grades(),
            &[grade(1, 3), grade(1, 2), Grade::zero(), Grade::zero()]
        );
    }

    #[test]
    fn empty_join_is_bottom() {
        let l = square();
        let j = fi_join(&l, &[]).unwrap();
        assert_eq!(j, FuzzySubset::constant(&l, Grade::zero()).unwrap());
    }

    #[test]
    fn join_closes_the_pointwise_sup() {
        let l = square();
        // Characteristic maps of the two atoms' ideals: their pointwise sup
        // is not a fuzzy ideal, the join is the constant 1.
        let a = FuzzySubset::characteristic(&l, crate::bits::ElemSet::from_indices([0, 1]));
        let b = FuzzySubset::characteristic(&l, crate::bits::ElemSet::from_indices([0, 2]));
        let j = fi_join(&l, &[&a, &b]).unwrap();
        assert_eq!(j, FuzzySubset::constant(&l, Grade::one()).unwrap());
    }

    #[test]
    fn budget_guard_trips() {
        let l = square();
        let grid = ValueGrid::new(vec![Grade::zero(), grade(1, 2), Grade::one()]).unwrap();
        let err = enumerate_grid_fuzzy_ideals(&l, &grid, 16).unwrap_err();
        assert!(matches!(err, FuzzyLatticeError::BudgetExceeded { space: 81, .. }));
    }

    #[test]
    fn arrow_on_crisp_grid_matches_hand_computation() {
        let l = square();
        let grid = ValueGrid::new(vec![Grade::zero(), Grade::one()]).unwrap();
        let a = FuzzySubset::characteristic(&l, crate::bits::ElemSet::from_indices([0, 1]));
        let b = FuzzySubset::characteristic(&l, crate::bits::ElemSet::from_indices([0, 2]));
        let arrow = heyting_arrow(&l, &a, &b, &grid, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(arrow, b);
    }

    #[test]
    fn arrow_rejects_off_grid_grades(){
        let l = square();
        let grid = ValueGrid::new(vec![Grade::zero(), Grade::one()]).unwrap();
        let a = FuzzySubset::constant(&l, grade(1, 2)).unwrap();
        let b = FuzzySubset::constant(&l, Grade::zero()).unwrap();
        let err = heyting_arrow(&l, &a, &b, &grid, DEFAULT_ENUM_BUDGET).unwrap_err();
        assert!(matches!(err, FuzzyLatticeError::GradeOffGrid { .. }));
    }

    #[test]
    fn arrow_rejects_non_ideals() {
        let l = square();
        let grid = ValueGrid::new(vec![Grade::zero(), Grade::one()]).unwrap();
        // Indicator of a non-ideal: {00, 01, 10}.
        let bad = FuzzySubset::characteristic(&l, crate::bits::ElemSet::from_indices([0, 1, 2]));
        let b = FuzzySubset::constant(&l, Grade::zero()).unwrap();
        let err = heyting_arrow(&l, &bad, &b, &grid, DEFAULT_ENUM_BUDGET).unwrap_err();
        assert!(matches!(err, FuzzyLatticeError::NotAFuzzyIdeal { which: "left" }));
    }

    #[test]
    fn axioms_hold_on_the_square_with_three_grades() {
        let l = square();
        let grid = ValueGrid::new(vec![Grade::zero(), grade(1, 2), Grade::one()]).unwrap();
        let report = heyting_axioms_check(&l, &grid, DEFAULT_ENUM_BUDGET).unwrap();
        assert!(report.ok(), "{report}");
        assert!(report.candidates > 2);
        assert!(report.to_tsv().contains("adjunction\tPASS"));
    }

    #[test]
    fn brouwerian_identity_on_samples() {
        let l = square();
        let grid = ValueGrid::new(vec![Grade::zero(), grade(1, 2), Grade::one()]).unwrap();
        let cands = enumerate_grid_fuzzy_ideals(&l, &grid, DEFAULT_ENUM_BUDGET).unwrap();
        for mu in &cands {
            for pair in cands.windows(2) {
                let report =
                    brouwerian_check(&l, mu, &[&pair[0], &pair[1]]).unwrap();
                assert!(report.holds(), "mu={:?} pair={:?}", mu, pair);
            }
        }
    }
}
