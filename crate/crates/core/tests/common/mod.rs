//! Shared helpers for the integration suites: reference implementations
//! (slow but definitional) used to cross-check the library's faster code
//! paths, plus small deterministic generators for test data.

#![allow(dead_code)]

use latcode::{
    grade, ElemSet, FiniteResiduatedLattice, FuzzySubset, Grade, WajsbergAlgebra,
};
use num_traits::Zero;

/// Tiny deterministic RNG for test-data generation. Not suitable for
/// statistics; perfectly suitable for spreading test cases around.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut s = self.0;
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        self.0 = s;
        s
    }

    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }
}

/// Bounded Lukasiewicz chain with m+1 elements 0 < 1 < ... < m, where the
/// monoid operation is the truncated sum shifted to the top element.
pub fn lukasiewicz_chain(m: usize) -> FiniteResiduatedLattice {
    assert!(m >= 1);
    let names: Vec<String> = (0..=m).map(|i| format!("c{i}")).collect();
    FiniteResiduatedLattice::from_fn(
        names,
        |x, y| x.max(y),
        |x, y| x.min(y),
        |x, y| (x + y).saturating_sub(m),
        |x, y| m.min(m - x + y),
        0,
        m,
    )
    .expect("chain tables are well formed")
}

/// Goedel chain with m+1 elements: product is min, implication is the
/// classical Goedel residuum.
pub fn godel_chain(m: usize) -> FiniteResiduatedLattice {
    assert!(m >= 1);
    let names: Vec<String> = (0..=m).map(|i| format!("g{i}")).collect();
    FiniteResiduatedLattice::from_fn(
        names,
        |x, y| x.max(y),
        |x, y| x.min(y),
        |x, y| x.min(y),
        |x, y| if x <= y { m } else { y },
        0,
        m,
    )
    .expect("chain tables are well formed")
}

/// Residuated lattices on which every validation law holds. Used to scope
/// law tests that are only claimed for well-formed algebras.
pub fn valid_lattices() -> Vec<(String, FiniteResiduatedLattice)> {
    let mut out = Vec::new();
    out.push(("order4".to_string(), latcode::fixtures::order4().to_residuated().unwrap()));
    out.push(("order8".to_string(), latcode::fixtures::order8().to_residuated().unwrap()));
    for n in 1..=4 {
        let w = latcode::product_wajsberg(n).unwrap();
        out.push((format!("product{n}"), w.to_residuated().unwrap()));
    }
    out.push(("lukasiewicz3".to_string(), lukasiewicz_chain(2)));
    out.push(("lukasiewicz5".to_string(), lukasiewicz_chain(4)));
    out.push(("godel3".to_string(), godel_chain(2)));
    out.push(("godel4".to_string(), godel_chain(3)));
    for (name, l) in &out {
        assert!(l.validate().ok(), "{name} should validate cleanly");
    }
    out
}

/// All three bundled example algebras as residuated lattices, including the
/// order-9 table that fails several axioms. Law tests over this list must
/// restrict themselves to properties that hold there as well.
pub fn fixture_lattices() -> Vec<(String, FiniteResiduatedLattice)> {
    vec![
        ("order4".to_string(), latcode::fixtures::order4().to_residuated().unwrap()),
        ("order8".to_string(), latcode::fixtures::order8().to_residuated().unwrap()),
        ("order9".to_string(), latcode::fixtures::order9().to_residuated().unwrap()),
    ]
}

pub fn fixture_wajsbergs() -> Vec<(String, WajsbergAlgebra)> {
    vec![
        ("order4".to_string(), latcode::fixtures::order4()),
        ("order8".to_string(), latcode::fixtures::order8()),
        ("order9".to_string(), latcode::fixtures::order9()),
    ]
}

/// Reference ideal enumeration: scan every subset mask and keep the ones the
/// membership test accepts. Only usable for small universes.
pub fn subset_scan_ideals(l: &FiniteResiduatedLattice) -> Vec<ElemSet> {
    let n = l.n();
    assert!(n <= 16, "subset scan is exponential; keep it small");
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let s = ElemSet(mask);
        if latcode::is_ideal(l, s).unwrap_or(false) {
            out.push(s);
        }
    }
    out.sort_by_key(|s| (s.card(), s.0));
    out
}

/// Reference fuzzy closure via bounded decompositions.
///
/// Walks every left-folded combination a1 + a2 + ... + ak (k <= |L|) of the
/// derived addition, carrying the running fold value and the minimum grade of
/// the chosen elements. The closure grade of x is the best minimum grade over
/// all folds that dominate x. States are memoized as (value, min-grade)
/// pairs, so the walk saturates quickly even though sequences are exponential.
pub fn closure_oracle(l: &FiniteResiduatedLattice, mu: &FuzzySubset) -> FuzzySubset {
    let n = l.n();
    let mut seen: Vec<(usize, Grade)> = Vec::new();
    let mut frontier: Vec<(usize, Grade)> = Vec::new();
    for a in 0..n {
        let state = (a, mu.get(a));
        if !seen.contains(&state) {
            seen.push(state);
            frontier.push(state);
        }
    }
    for _ in 1..n {
        let mut next = Vec::new();
        for &(v, g) in &frontier {
            for a in 0..n {
                let state = (l.boxplus(v, a), g.min(mu.get(a)));
                if !seen.contains(&state) {
                    seen.push(state);
                    next.push(state);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let mut out = vec![Grade::zero(); n];
    for &(v, g) in &seen {
        for (x, best) in out.iter_mut().enumerate() {
            if l.leq(x, v) && g > *best {
                *best = g;
            }
        }
    }
    FuzzySubset::new(l, out).expect("oracle grades stay in [0, 1]")
}

/// Random fuzzy subset whose grades are drawn from the given pool.
pub fn random_fuzzy(
    l: &FiniteResiduatedLattice,
    rng: &mut XorShift,
    pool: &[Grade],
) -> FuzzySubset {
    let grades: Vec<Grade> = (0..l.n())
        .map(|_| pool[rng.below(pool.len() as u64) as usize])
        .collect();
    FuzzySubset::new(l, grades).expect("pool grades are in range")
}

/// A convenient grade pool with a few distinct denominators.
pub fn grade_pool() -> Vec<Grade> {
    vec![
        grade(0, 1),
        grade(1, 6),
        grade(1, 3),
        grade(1, 2),
        grade(2, 3),
        grade(5, 6),
        grade(1, 1),
    ]
}

/// Random subset of the universe as an ElemSet (possibly empty).
pub fn random_subset(n: usize, rng: &mut XorShift) -> ElemSet {
    ElemSet(rng.next_u64() & ElemSet::full(n).0)
}
