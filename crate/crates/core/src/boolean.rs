//! Boolean algebras and the Boolean rings they induce.
//!
//! A complemented distributive bounded lattice (B, ∨, ∧, ∂, 0, 1) turns into
//! a commutative ring with x + y = (x ∨ y) ∧ ∂(x ∧ y) and x · y = x ∧ y;
//! every element is additively self-inverse and multiplicatively idempotent.
//! The inverse construction recovers x ∨ y = x + y + xy, x ∧ y = xy and
//! ∂x = 1 + x, and the two are exact inverses. An MV-algebra whose sum is
//! idempotent carries a Boolean algebra with ∨ = ⊕, ∧ = ⊙ and ∂ = ′.

use thiserror::Error;

use crate::bits::ElemSet;
use crate::report::ValidationReport;
use crate::residuated::AlgebraId;
use crate::table::Table;
use crate::wajsberg::MvAlgebra;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BooleanError {
    #[error("sum is not idempotent at {element}; the MV-algebra is not Boolean")]
    NotIdempotent { element: String },
}

/// A finite Boolean algebra with dense tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanAlgebra {
    elements: Vec<String>,
    join: Table,
    meet: Table,
    compl: Vec<usize>,
    zero: usize,
    one: usize,
    id: AlgebraId,
}

impl BooleanAlgebra {
    /// Reads a Boolean algebra off an idempotent MV-algebra. Fails with the
    /// first witness when ⊕ is not idempotent; `validate` covers the
    /// remaining lattice laws.
    pub fn from_mv(mv: &MvAlgebra) -> Result<BooleanAlgebra, BooleanError> {
        let n = mv.n();
        if let Some(x) = (0..n).find(|&x| mv.sum(x, x) != x) {
            return Err(BooleanError::NotIdempotent {
                element: mv.name(x).to_string(),
            });
        }
        Ok(BooleanAlgebra {
            elements: mv.element_names().to_vec(),
            join: Table::from_fn(n, |x, y| mv.sum(x, y)),
            meet: Table::from_fn(n, |x, y| mv.prod(x, y)),
            compl: (0..n).map(|x| mv.neg(x)).collect(),
            zero: mv.zero(),
            one: mv.one(),
            id: mv.id(),
        })
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join.get(x, y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet.get(x, y)
    }

    #[inline]
    pub fn compl(&self, x: usize) -> usize {
        self.compl[x]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// Checks the bounded distributive lattice laws and the complement laws,
    /// recording the first witness per violated law.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.n();
        let w = |ids: &[usize]| ids.iter().map(|&i| self.elements[i].clone()).collect();

        for x in 0..n {
            if self.join(self.zero, x) != x {
                report.record("bottom-join-identity", w(&[x]));
            }
            if self.meet(self.one, x) != x {
                report.record("top-meet-identity", w(&[x]));
            }
            if self.join(x, self.compl(x)) != self.one {
                report.record("complement-join", w(&[x]));
            }
            if self.meet(x, self.compl(x)) != self.zero {
                report.record("complement-meet", w(&[x]));
            }
            for y in 0..n {
                if self.join(x, y) != self.join(y, x) {
                    report.record("join-commutativity", w(&[x, y]));
                }
                if self.meet(x, y) != self.meet(y, x) {
                    report.record("meet-commutativity", w(&[x, y]));
                }
                if self.join(x, self.meet(x, y)) != x {
                    report.record("absorption-join-over-meet", w(&[x, y]));
                }
                if self.meet(x, self.join(x, y)) != x {
                    report.record("absorption-meet-over-join", w(&[x, y]));
                }
                for z in 0..n {
                    if self.join(self.join(x, y), z) != self.join(x, self.join(y, z)) {
                        report.record("join-associativity", w(&[x, y, z]));
                    }
                    if self.meet(self.meet(x, y), z) != self.meet(x, self.meet(y, z)) {
                        report.record("meet-associativity", w(&[x, y, z]));
                    }
                    if self.meet(x, self.join(y, z))
                        != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        report.record("meet-over-join-distributivity", w(&[x, y, z]));
                    }
                    if self.join(x, self.meet(y, z))
                        != self.meet(self.join(x, y), self.join(x, z))
                    {
                        report.record("join-over-meet-distributivity", w(&[x, y, z]));
                    }
                }
            }
        }
        report
    }

    /// The induced Boolean ring: x + y = (x ∨ y) ∧ ∂(x ∧ y), x · y = x ∧ y.
    pub fn ring_view(&self) -> BooleanRingView {
        let n = self.n();
        BooleanRingView {
            elements: self.elements.clone(),
            add: Table::from_fn(n, |x, y| {
                self.meet(self.join(x, y), self.compl(self.meet(x, y)))
            }),
            mul: Table::from_fn(n, |x, y| self.meet(x, y)),
            zero: self.zero,
            one: self.one,
            id: self.id,
        }
    }
}

/// A finite commutative ring presented by dense tables; produced from a
/// Boolean algebra, where it is idempotent with characteristic 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanRingView {
    elements: Vec<String>,
    add: Table,
    mul: Table,
    zero: usize,
    one: usize,
    id: AlgebraId,
}

impl BooleanRingView {
    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add.get(x, y)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul.get(x, y)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// Checks the Boolean-ring laws: commutative group under + with x + x = 0,
    /// commutative monoid under ·, distributivity, and x · x = x.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.n();
        let w = |ids: &[usize]| ids.iter().map(|&i| self.elements[i].clone()).collect();

        for x in 0..n {
            if self.add(x, self.zero) != x {
                report.record("zero-unit", w(&[x]));
            }
            if self.add(x, x) != self.zero {
                report.record("self-inverse", w(&[x]));
            }
            if self.mul(x, self.one) != x {
                report.record("one-unit", w(&[x]));
            }
            if self.mul(x, x) != x {
                report.record("mul-idempotency", w(&[x]));
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) {
                    report.record("add-commutativity", w(&[x, y]));
                }
                if self.mul(x, y) != self.mul(y, x) {
                    report.record("mul-commutativity", w(&[x, y]));
                }
                for z in 0..n {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        report.record("add-associativity", w(&[x, y, z]));
                    }
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        report.record("mul-associativity", w(&[x, y, z]));
                    }
                    if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
                        report.record("distributivity", w(&[x, y, z]));
                    }
                }
            }
        }
        report
    }

    /// Recovers the Boolean algebra: x ∨ y = x + y + xy, x ∧ y = xy,
    /// ∂x = 1 + x. Exact inverse of [`BooleanAlgebra::ring_view`].
    pub fn to_boolean(&self) -> BooleanAlgebra {
        let n = self.n();
        BooleanAlgebra {
            elements: self.elements.clone(),
            join: Table::from_fn(n, |x, y| self.add(self.add(x, y), self.mul(x, y))),
            meet: Table::from_fn(n, |x, y| self.mul(x, y)),
            compl: (0..n).map(|x| self.add(self.one, x)).collect(),
            zero: self.zero,
            one: self.one,
            id: self.id,
        }
    }

    /// Ring-ideal test: 0 ∈ S, S closed under + and under multiplication by
    /// arbitrary ring elements.
    pub fn is_ring_ideal(&self, s: ElemSet) -> bool {
        if !s.contains(self.zero) {
            return false;
        }
        for x in s.iter() {
            for y in s.iter() {
                if !s.contains(self.add(x, y)) {
                    return false;
                }
            }
            for r in 0..self.n() {
                if !s.contains(self.mul(r, x)) {
                    return false;
                }
            }
        }
        true
    }
}
