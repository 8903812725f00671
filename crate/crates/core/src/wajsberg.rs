//! Wajsberg algebras, their MV-algebra form, and conversions into
//! residuated lattices.
//!
//! A Wajsberg algebra (W, ∘, ‾, 1) satisfies
//!   1 ∘ x = x,
//!   (x ∘ y) ∘ ((y ∘ z) ∘ (x ∘ z)) = 1,
//!   (x ∘ y) ∘ y = (y ∘ x) ∘ x,
//!   (x̄ ∘ ȳ) ∘ (y ∘ x) = 1,
//! and carries the natural order x ≤ y ⟺ x ∘ y = 1, which `validate`
//! additionally confirms to be a partial order.
//!
//! The same universe supports an MV-algebra structure with x ⊕ y = x̄ ∘ y and
//! back again with x ∘ y = x′ ⊕ y; both directions are exposed and are exact
//! inverses on valid algebras. When the natural order happens to be a lattice
//! order, `to_residuated` upgrades the algebra to a residuated lattice with
//! x ⊙ y = (x ∘ ȳ)‾ and x → y = x ∘ y.

use thiserror::Error;

use crate::report::ValidationReport;
use crate::residuated::{AlgebraId, FiniteResiduatedLattice};
use crate::table::{check_elements, check_unary, Fnv1a, StructureError, Table};

/// Raised when the natural order of a Wajsberg algebra is not a lattice.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum LatticeConversionError {
    #[error("elements {x} and {y} have no least upper bound in the natural order")]
    NoJoin { x: String, y: String },
    #[error("elements {x} and {y} have no greatest lower bound in the natural order")]
    NoMeet { x: String, y: String },
}

/// A finite Wajsberg algebra with named elements and a dense ∘ table.
/// The unit is located structurally as the unique identity row of ∘.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WajsbergAlgebra {
    elements: Vec<String>,
    circ: Table,
    neg: Vec<usize>,
    one: usize,
    id: AlgebraId,
}

impl WajsbergAlgebra {
    pub fn new(
        elements: Vec<String>,
        circ: Vec<Vec<usize>>,
        neg: Vec<usize>,
    ) -> Result<WajsbergAlgebra, StructureError> {
        check_elements(&elements)?;
        let n = elements.len();
        let circ = Table::from_rows("circ", n, &circ)?;
        check_unary("neg", n, &neg)?;
        let mut unit_rows = (0..n).filter(|&u| (0..n).all(|x| circ.get(u, x) == x));
        let one = unit_rows.next().ok_or(StructureError::NoUnit)?;
        if unit_rows.next().is_some() {
            return Err(StructureError::AmbiguousUnit);
        }
        let id = fingerprint(&elements, &circ, &neg);
        Ok(WajsbergAlgebra {
            elements,
            circ,
            neg,
            one,
            id,
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

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    #[inline]
    pub fn circ(&self, x: usize, y: usize) -> usize {
        self.circ.get(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// θ = 1̄, the least element of the natural order.
    pub fn zero(&self) -> usize {
        self.neg[self.one]
    }

    /// Natural order: x ≤ y ⟺ x ∘ y = 1.
    #[inline]
    pub fn natural_leq(&self, x: usize, y: usize) -> bool {
        self.circ.get(x, y) == self.one
    }

    /// MV sum x ⊕ y = x̄ ∘ y.
    #[inline]
    pub fn mv_sum(&self, x: usize, y: usize) -> usize {
        self.circ.get(self.neg[x], y)
    }

    /// MV product x ⊙ y = (x ∘ ȳ)‾.
    #[inline]
    pub fn mv_prod(&self, x: usize, y: usize) -> usize {
        self.neg[self.circ.get(x, self.neg[y])]
    }

    /// Checks the four defining axioms and that the natural order is a
    /// partial order, recording the first witness per violated law.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.n();
        let one = self.one;
        let w = |ids: &[usize]| ids.iter().map(|&i| self.elements[i].clone()).collect();

        for x in 0..n {
            if self.circ(one, x) != x {
                report.record("left-unit", w(&[x]));
            }
            if self.circ(x, x) != one {
                report.record("order-reflexivity", w(&[x]));
            }
            for y in 0..n {
                if self.circ(self.circ(x, y), y) != self.circ(self.circ(y, x), x) {
                    report.record("join-symmetry", w(&[x, y]));
                }
                if self.circ(self.circ(self.neg(x), self.neg(y)), self.circ(y, x)) != one {
                    report.record("contraposition", w(&[x, y]));
                }
                if x != y && self.circ(x, y) == one && self.circ(y, x) == one {
                    report.record("order-antisymmetry", w(&[x, y]));
                }
                for z in 0..n {
                    let chain = self.circ(self.circ(x, y), self.circ(self.circ(y, z), self.circ(x, z)));
                    if chain != one {
                        report.record("implication-chain", w(&[x, y, z]));
                    }
                    if self.natural_leq(x, y) && self.natural_leq(y, z) && !self.natural_leq(x, z) {
                        report.record("order-transitivity", w(&[x, y, z]));
                    }
                }
            }
        }
        report
    }

    /// The MV-algebra carried by the same universe. The view keeps this
    /// algebra's id.
    pub fn mv_view(&self) -> MvAlgebra {
        let n = self.n();
        MvAlgebra {
            elements: self.elements.clone(),
            sum: Table::from_fn(n, |x, y| self.mv_sum(x, y)),
            neg: self.neg.clone(),
            zero: self.zero(),
            id: self.id,
        }
    }

    /// Upgrades to a residuated lattice when the natural order is a lattice
    /// order: ∨/∧ from least upper and greatest lower bounds, ⊙ = MV product,
    /// → = ∘, bounds θ and 1. Fails with the first bound-free pair otherwise.
    pub fn to_residuated(&self) -> Result<FiniteResiduatedLattice, LatticeConversionError> {
        let n = self.n();
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                join[x][y] = self.bound(x, y, true).ok_or_else(|| {
                    LatticeConversionError::NoJoin {
                        x: self.elements[x].clone(),
                        y: self.elements[y].clone(),
                    }
                })?;
                meet[x][y] = self.bound(x, y, false).ok_or_else(|| {
                    LatticeConversionError::NoMeet {
                        x: self.elements[x].clone(),
                        y: self.elements[y].clone(),
                    }
                })?;
            }
        }
        let prod = (0..n)
            .map(|x| (0..n).map(|y| self.mv_prod(x, y)).collect())
            .collect();
        let imp = (0..n)
            .map(|x| (0..n).map(|y| self.circ(x, y)).collect())
            .collect();
        let lattice = FiniteResiduatedLattice::new(
            self.elements.clone(),
            join,
            meet,
            prod,
            imp,
            self.zero(),
            self.one,
        )
        .expect("tables built from a checked algebra are well-shaped");
        Ok(lattice.with_id(self.id))
    }

    /// Least upper (`upper = true`) or greatest lower bound of x and y in the
    /// natural order, if it exists.
    fn bound(&self, x: usize, y: usize, upper: bool) -> Option<usize> {
        let n = self.n();
        let le = |a: usize, b: usize| {
            if upper {
                self.natural_leq(a, b)
            } else {
                self.natural_leq(b, a)
            }
        };
        let bounds: Vec<usize> = (0..n).filter(|&z| le(x, z) && le(y, z)).collect();
        bounds
            .iter()
            .copied()
            .find(|&u| bounds.iter().all(|&z| le(u, z)))
    }
}

/// Reads a residuated lattice back as a Wajsberg algebra: ∘ = →, x̄ = x → 0,
/// 1 = top. The result keeps the lattice's id and need not satisfy the
/// Wajsberg axioms; run `validate` to find out.
pub fn residuated_to_wajsberg(l: &FiniteResiduatedLattice) -> Result<WajsbergAlgebra, StructureError> {
    let n = l.n();
    let circ = (0..n)
        .map(|x| (0..n).map(|y| l.implies(x, y)).collect())
        .collect();
    let neg = (0..n).map(|x| l.neg(x)).collect();
    let w = WajsbergAlgebra::new(l.element_names().to_vec(), circ, neg)?;
    Ok(WajsbergAlgebra { id: l.id(), ..w })
}

/// An MV-algebra (X, ⊕, ′, θ) with dense tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvAlgebra {
    elements: Vec<String>,
    sum: Table,
    neg: Vec<usize>,
    zero: usize,
    id: AlgebraId,
}

impl MvAlgebra {
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
    pub fn sum(&self, x: usize, y: usize) -> usize {
        self.sum.get(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.neg[self.zero]
    }

    /// x ⊙ y = (x′ ⊕ y′)′.
    #[inline]
    pub fn prod(&self, x: usize, y: usize) -> usize {
        self.neg[self.sum.get(self.neg[x], self.neg[y])]
    }

    /// Checks the monoid laws explicitly along with the three MV axioms,
    /// recording the first witness per violated law.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.n();
        let w = |ids: &[usize]| ids.iter().map(|&i| self.elements[i].clone()).collect();
        let one = self.one();

        for x in 0..n {
            if self.sum(x, self.zero) != x {
                report.record("zero-unit", w(&[x]));
            }
            if self.neg(self.neg(x)) != x {
                report.record("involution", w(&[x]));
            }
            if self.sum(x, one) != one {
                report.record("one-absorption", w(&[x]));
            }
            for y in 0..n {
                if self.sum(x, y) != self.sum(y, x) {
                    report.record("sum-commutativity", w(&[x, y]));
                }
                let lhs = self.sum(self.neg(self.sum(self.neg(x), y)), y);
                let rhs = self.sum(self.neg(self.sum(self.neg(y), x)), x);
                if lhs != rhs {
                    report.record("join-symmetry", w(&[x, y]));
                }
                for z in 0..n {
                    if self.sum(self.sum(x, y), z) != self.sum(x, self.sum(y, z)) {
                        report.record("sum-associativity", w(&[x, y, z]));
                    }
                }
            }
        }
        report
    }

    /// Back to a Wajsberg algebra via x ∘ y = x′ ⊕ y, 1 = θ′. Inverse of
    /// [`WajsbergAlgebra::mv_view`] on valid algebras, bit-exact on tables.
    pub fn to_wajsberg(&self) -> Result<WajsbergAlgebra, StructureError> {
        let n = self.n();
        let circ = (0..n)
            .map(|x| (0..n).map(|y| self.sum(self.neg[x], y)).collect())
            .collect();
        let w = WajsbergAlgebra::new(self.elements.clone(), circ, self.neg.clone())?;
        Ok(WajsbergAlgebra { id: self.id, ..w })
    }
}

/// The n-fold product of the 2-element Wajsberg algebra. The universe is the
/// set of n-bit tuples in lexicographic order (all-zero tuple first), each
/// named by its bit string; operations act componentwise with
/// 0∘0 = 0∘1 = 1∘1 = 1 and 1∘0 = 0 in each coordinate. Requires 1 ≤ n ≤ 6 so
/// the universe fits the 64-element cap.
pub fn product_wajsberg(n: usize) -> Result<WajsbergAlgebra, StructureError> {
    if n == 0 {
        return Err(StructureError::TooFewElements(1));
    }
    if n > 6 {
        return Err(StructureError::TooManyElements(1 << n));
    }
    let size = 1usize << n;
    let mask = size - 1;
    let elements: Vec<String> = (0..size)
        .map(|i| (0..n).map(|b| if i >> (n - 1 - b) & 1 == 1 { '1' } else { '0' }).collect())
        .collect();
    // Componentwise x ∘ y is material implication ¬x ∨ y on each bit.
    let circ = (0..size)
        .map(|x| (0..size).map(|y| (!x & mask) | y).collect())
        .collect();
    let neg = (0..size).map(|x| !x & mask).collect();
    WajsbergAlgebra::new(elements, circ, neg)
}

fn fingerprint(elements: &[String], circ: &Table, neg: &[usize]) -> AlgebraId {
    let mut h = Fnv1a::new();
    h.write(b"wajsberg");
    for e in elements {
        h.write(e.as_bytes());
        h.write(&[0]);
    }
    for &c in circ.cells() {
        h.write_usize(c);
    }
    for &v in neg {
        h.write_usize(v);
    }
    AlgebraId(h.finish())
}
