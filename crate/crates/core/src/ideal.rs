//! Crisp ideals of finite residuated lattices, with the prime-ideal test on
//! the Wajsberg form.
//!
//! An ideal is a nonempty subset that is downward closed under ⪯ and closed
//! under ⊞. Every ideal contains the bottom element. Throughout this crate a
//! *proper* ideal is one that is neither the trivial ideal {0} nor the whole
//! algebra; this matches the ideal listings of the shipped fixtures.

use thiserror::Error;

use crate::bits::ElemSet;
use crate::residuated::{AlgebraId, FiniteResiduatedLattice};
use crate::wajsberg::{MvAlgebra, WajsbergAlgebra};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("the empty set is not eligible: ideals are nonempty by definition")]
    EmptySet,
    #[error("subset mentions an element index outside the universe")]
    OutOfUniverse,
    #[error("the given subset is not an ideal")]
    NotAnIdeal,
    #[error("ideal belongs to algebra {got}, expected {expected}")]
    AlgebraMismatch { expected: AlgebraId, got: AlgebraId },
}

/// A validated ideal, tagged with the algebra it lives in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdealSet {
    members: ElemSet,
    algebra: AlgebraId,
}

impl IdealSet {
    /// Validates `members` as an ideal of `l`.
    pub fn new(l: &FiniteResiduatedLattice, members: ElemSet) -> Result<IdealSet, IdealError> {
        if is_ideal(l, members)? {
            Ok(IdealSet {
                members,
                algebra: l.id(),
            })
        } else {
            Err(IdealError::NotAnIdeal)
        }
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn card(&self) -> usize {
        self.members.card()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// The trivial ideal {0}.
    pub fn is_trivial(&self, l: &FiniteResiduatedLattice) -> bool {
        self.members == ElemSet::singleton(l.bottom())
    }

    /// The improper ideal: the whole algebra.
    pub fn is_whole(&self, l: &FiniteResiduatedLattice) -> bool {
        self.members == ElemSet::full(l.n())
    }

    /// Indicator bit string in declared element order, leftmost first.
    pub fn to_bitstring(&self, l: &FiniteResiduatedLattice) -> String {
        (0..l.n())
            .map(|i| if self.members.contains(i) { '1' } else { '0' })
            .collect()
    }

    pub(crate) fn check_algebra(&self, id: AlgebraId) -> Result<(), IdealError> {
        if self.algebra == id {
            Ok(())
        } else {
            Err(IdealError::AlgebraMismatch {
                expected: id,
                got: self.algebra,
            })
        }
    }
}

fn check_universe(l: &FiniteResiduatedLattice, s: ElemSet) -> Result<(), IdealError> {
    if s.is_subset_of(ElemSet::full(l.n())) {
        Ok(())
    } else {
        Err(IdealError::OutOfUniverse)
    }
}

/// Decides whether `s` is an ideal: nonempty, downward closed, ⊞-closed.
/// The empty set is rejected as an error, not reported as `false`.
pub fn is_ideal(l: &FiniteResiduatedLattice, s: ElemSet) -> Result<bool, IdealError> {
    check_universe(l, s)?;
    if s.is_empty() {
        return Err(IdealError::EmptySet);
    }
    for i in s.iter() {
        for x in 0..l.n() {
            if l.leq(x, i) && !s.contains(x) {
                return Ok(false);
            }
        }
        for j in s.iter() {
            if !s.contains(l.boxplus(i, j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// MV-form ideal test on the same universe: θ ∈ I, downward closed in the
/// natural order, closed under ⊕. Agrees with [`is_ideal`] on the residuated
/// view of the same algebra.
pub fn is_mv_ideal(mv: &MvAlgebra, s: ElemSet) -> Result<bool, IdealError> {
    if !s.is_subset_of(ElemSet::full(mv.n())) {
        return Err(IdealError::OutOfUniverse);
    }
    if s.is_empty() {
        return Err(IdealError::EmptySet);
    }
    if !s.contains(mv.zero()) {
        return Ok(false);
    }
    let le = |x: usize, y: usize| mv.sum(mv.neg(x), y) == mv.one();
    for i in s.iter() {
        for x in 0..mv.n() {
            if le(x, i) && !s.contains(x) {
                return Ok(false);
            }
        }
        for j in s.iter() {
            if !s.contains(mv.sum(i, j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest ideal containing `seed`: saturates downward closure and ⊞ until
/// a fixpoint. The empty seed yields the trivial ideal {0}.
pub fn ideal_closure(l: &FiniteResiduatedLattice, seed: ElemSet) -> Result<IdealSet, IdealError> {
    check_universe(l, seed)?;
    let mut s = seed;
    s.insert(l.bottom());
    loop {
        let mut next = s;
        for i in s.iter() {
            next = next.union(l.downset(i));
        }
        for i in s.iter() {
            for j in s.iter() {
                next.insert(l.boxplus(i, j));
            }
        }
        if next == s {
            break;
        }
        s = next;
    }
    debug_assert_eq!(is_ideal(l, s), Ok(true));
    Ok(IdealSet {
        members: s,
        algebra: l.id(),
    })
}

/// All ideals of `l`, sorted by (cardinality, member bitmask). The listing
/// always starts at the trivial ideal and ends at the whole algebra.
pub fn enumerate_ideals(l: &FiniteResiduatedLattice) -> Vec<IdealSet> {
    let mut seen: Vec<ElemSet> = Vec::new();
    let mut queue: Vec<ElemSet> = Vec::new();
    let start = ideal_closure(l, ElemSet::EMPTY)
        .expect("closure of the empty seed always exists")
        .members;
    seen.push(start);
    queue.push(start);
    while let Some(s) = queue.pop() {
        for x in 0..l.n() {
            if s.contains(x) {
                continue;
            }
            let mut seed = s;
            seed.insert(x);
            let grown = ideal_closure(l, seed).expect("seed within universe").members;
            if !seen.contains(&grown) {
                seen.push(grown);
                queue.push(grown);
            }
        }
    }
    seen.sort_by_key(|s| (s.card(), s.0));
    seen.into_iter()
        .map(|members| IdealSet {
            members,
            algebra: l.id(),
        })
        .collect()
}

/// The proper ideals of `l`: every ideal except {0} and the whole algebra,
/// in the canonical (cardinality, bitmask) order.
pub fn proper_ideals(l: &FiniteResiduatedLattice) -> Vec<IdealSet> {
    enumerate_ideals(l)
        .into_iter()
        .filter(|i| !i.is_trivial(l) && !i.is_whole(l))
        .collect()
}

/// Prime-ideal test in Wajsberg form: every pair x, y drawn from P itself
/// satisfies (x ∘ y)‾ ∈ P or (y ∘ x)‾ ∈ P. Passing `over_whole_algebra`
/// switches to the conventional reading that quantifies x, y over all of W.
pub fn is_prime_ideal(
    w: &WajsbergAlgebra,
    ideal: &IdealSet,
    over_whole_algebra: bool,
) -> Result<bool, IdealError> {
    ideal.check_algebra(w.id())?;
    let range: Vec<usize> = if over_whole_algebra {
        (0..w.n()).collect()
    } else {
        ideal.members().iter().collect()
    };
    for &x in &range {
        for &y in &range {
            let xy = w.neg(w.circ(x, y));
            let yx = w.neg(w.circ(y, x));
            if !ideal.contains(xy) && !ideal.contains(yx) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Prime-ideal test in MV form: (x′ ⊕ y)′ ∈ P or (y′ ⊕ x)′ ∈ P for every
/// pair in P (or in the whole algebra with the flag). Must agree with
/// [`is_prime_ideal`] through the Wajsberg ↔ MV translation.
pub fn is_prime_ideal_mv(
    mv: &MvAlgebra,
    ideal: &IdealSet,
    over_whole_algebra: bool,
) -> Result<bool, IdealError> {
    ideal.check_algebra(mv.id())?;
    let range: Vec<usize> = if over_whole_algebra {
        (0..mv.n()).collect()
    } else {
        ideal.members().iter().collect()
    };
    for &x in &range {
        for &y in &range {
            let xy = mv.neg(mv.sum(mv.neg(x), y));
            let yx = mv.neg(mv.sum(mv.neg(y), x));
            if !ideal.contains(xy) && !ideal.contains(yx) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
