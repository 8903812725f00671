//! Structure of the fuzzy-ideal lattice: meet and join really are the
//! greatest lower bound and least upper bound, distributivity over finite
//! joins, and the grid-restricted Heyting arrow's adjunction.

mod common;

use common::*;
use latcode::*;
use num_traits::{One, Zero};

/// Random fuzzy ideal obtained by closing a random subset.
fn random_ideal(
    l: &FiniteResiduatedLattice,
    rng: &mut XorShift,
    pool: &[Grade],
) -> FuzzySubset {
    fuzzy_closure(l, &random_fuzzy(l, rng, pool))
}

#[test]
fn meet_is_the_greatest_lower_bound() {
    let mut rng = XorShift::new(0x371a);
    let pool = grade_pool();
    for (name, l) in valid_lattices() {
        for _ in 0..30 {
            let a = random_ideal(&l, &mut rng, &pool);
            let b = random_ideal(&l, &mut rng, &pool);
            let m = fi_meet(&l, &a, &b).unwrap();
            assert!(is_fuzzy_ideal(&l, &m), "{name}: meet stays an ideal");
            assert!(m.le(&a) && m.le(&b), "{name}: meet is a lower bound");
            let c = random_ideal(&l, &mut rng, &pool);
            if c.le(&a) && c.le(&b) {
                assert!(c.le(&m), "{name}: meet dominates other lower bounds");
            }
        }
    }
}

#[test]
fn join_is_the_least_upper_bound() {
    let mut rng = XorShift::new(0x9b1d);
    let pool = grade_pool();
    for (name, l) in valid_lattices() {
        for _ in 0..30 {
            let a = random_ideal(&l, &mut rng, &pool);
            let b = random_ideal(&l, &mut rng, &pool);
            let j = fi_join(&l, &[&a, &b]).unwrap();
            assert!(is_fuzzy_ideal(&l, &j), "{name}: join stays an ideal");
            assert!(a.le(&j) && b.le(&j), "{name}: join is an upper bound");
            let c = random_ideal(&l, &mut rng, &pool);
            if a.le(&c) && b.le(&c) {
                assert!(j.le(&c), "{name}: join is below other upper bounds");
            }
        }
    }
}

#[test]
fn join_of_the_empty_family_is_the_bottom_ideal() {
    for (name, l) in fixture_lattices() {
        let j = fi_join(&l, &[]).unwrap();
        assert_eq!(
            j.grades(),
            FuzzySubset::constant(&l, Grade::zero()).unwrap().grades(),
            "{name}"
        );
    }
}

#[test]
fn meet_and_join_restrict_to_crisp_ideals() {
    // On indicator maps the lattice operations agree with set intersection
    // and with the crisp ideal generated by the union.
    for (name, l) in fixture_lattices() {
        let ideals = enumerate_ideals(&l);
        for i in &ideals {
            for j in &ideals {
                let a = FuzzySubset::characteristic(&l, i.members());
                let b = FuzzySubset::characteristic(&l, j.members());
                let meet = fi_meet(&l, &a, &b).unwrap();
                let inter = i.members().inter(j.members());
                assert_eq!(
                    meet.level_set(Grade::one()),
                    inter,
                    "{name}: crisp meet"
                );
                let join = fi_join(&l, &[&a, &b]).unwrap();
                let union_closure =
                    ideal_closure(&l, i.members().union(j.members())).unwrap();
                assert_eq!(
                    join.level_set(Grade::one()),
                    union_closure.members(),
                    "{name}: crisp join"
                );
            }
        }
    }
}

#[test]
fn finite_distributivity_holds_on_generated_families() {
    let mut rng = XorShift::new(0xd157);
    let pool = grade_pool();
    for (name, l) in valid_lattices() {
        for _ in 0..25 {
            let mu = random_ideal(&l, &mut rng, &pool);
            let family: Vec<FuzzySubset> = (0..(1 + rng.below(3) as usize))
                .map(|_| random_ideal(&l, &mut rng, &pool))
                .collect();
            let refs: Vec<&FuzzySubset> = family.iter().collect();
            let report = brouwerian_check(&l, &mu, &refs).unwrap();
            assert!(
                report.holds(),
                "{name}: distributivity discrepancy {:?}",
                report.discrepancy
            );
        }
    }
}

#[test]
fn heyting_arrow_satisfies_the_adjunction_on_small_grids() {
    // ν ⊆ (μ₁ → μ₂) iff μ₁ ⊓ ν ⊆ μ₂, for every grid-valued fuzzy ideal ν.
    let grid = ValueGrid::new(vec![Grade::zero(), grade(1, 2), Grade::one()]).unwrap();
    let cases = [
        ("order4", fixtures::order4().to_residuated().unwrap()),
        (
            "product2",
            product_wajsberg(2).unwrap().to_residuated().unwrap(),
        ),
        ("godel3", godel_chain(2)),
    ];
    for (name, l) in cases {
        let cands = enumerate_grid_fuzzy_ideals(&l, &grid, DEFAULT_ENUM_BUDGET).unwrap();
        for mu1 in &cands {
            for mu2 in &cands {
                let arrow = heyting_arrow(&l, mu1, mu2, &grid, DEFAULT_ENUM_BUDGET).unwrap();
                assert!(is_fuzzy_ideal(&l, &arrow), "{name}: arrow is an ideal");
                for nu in &cands {
                    let lhs = nu.le(&arrow);
                    let rhs = fi_meet(&l, mu1, nu).unwrap().le(mu2);
                    assert_eq!(
                        lhs, rhs,
                        "{name}: adjunction fails for ν={:?}, μ1={:?}, μ2={:?}",
                        nu.grades(),
                        mu1.grades(),
                        mu2.grades()
                    );
                }
            }
        }
    }
}

#[test]
fn heyting_axioms_pass_exhaustively_on_the_square() {
    let l = fixtures::order4().to_residuated().unwrap();
    for grid_values in [
        vec![Grade::zero(), Grade::one()],
        vec![Grade::zero(), grade(1, 2), Grade::one()],
    ] {
        let grid = ValueGrid::new(grid_values).unwrap();
        let report = heyting_axioms_check(&l, &grid, DEFAULT_ENUM_BUDGET).unwrap();
        assert!(report.ok(), "laws failed:\n{report}");
        assert!(report.candidates > 0);
        // the machine-readable form carries one verdict per law
        assert_eq!(report.to_tsv().lines().count(), report.laws.len());
    }
}

#[test]
fn enumeration_budget_is_enforced() {
    let l = fixtures::order8().to_residuated().unwrap();
    let grid = ValueGrid::new(vec![Grade::zero(), grade(1, 2), Grade::one()]).unwrap();
    // 3^8 = 6561 exceeds a budget of 1000
    let err = enumerate_grid_fuzzy_ideals(&l, &grid, 1000).unwrap_err();
    assert!(matches!(
        err,
        FuzzyLatticeError::BudgetExceeded { space: 6561, budget: 1000 }
    ));
}

#[test]
fn arrow_rejects_non_ideals_and_off_grid_arguments() {
    let l = fixtures::order4().to_residuated().unwrap();
    let grid = ValueGrid::new(vec![Grade::zero(), Grade::one()]).unwrap();
    let top = FuzzySubset::constant(&l, Grade::one()).unwrap();

    // not a fuzzy ideal: grade at the top exceeds the grade at the bottom
    let not_ideal = FuzzySubset::new(
        &l,
        vec![Grade::zero(), Grade::zero(), Grade::zero(), Grade::one()],
    )
    .unwrap();
    assert!(!is_fuzzy_ideal(&l, &not_ideal));
    let err = heyting_arrow(&l, &not_ideal, &top, &grid, DEFAULT_ENUM_BUDGET).unwrap_err();
    assert!(matches!(err, FuzzyLatticeError::NotAFuzzyIdeal { which: "left" }));

    // a fuzzy ideal whose grades are not on the grid
    let off_grid = FuzzySubset::constant(&l, grade(1, 3)).unwrap();
    assert!(is_fuzzy_ideal(&l, &off_grid));
    let err = heyting_arrow(&l, &off_grid, &top, &grid, DEFAULT_ENUM_BUDGET).unwrap_err();
    assert!(matches!(err, FuzzyLatticeError::GradeOffGrid { .. }));
}
