//! Finite residuated lattices presented by dense operation tables.
//!
//! A residuated lattice here is a bounded lattice (L, ∨, ∧, 0, 1) carrying a
//! commutative monoid (L, ⊙, 1) such that the adjunction
//! x ⊙ z ⪯ y  ⟺  x ⪯ z → y holds. The order is recoverable from → alone:
//! x ⪯ y exactly when x → y = 1, and `validate` checks that this coincides
//! with the lattice order.

use crate::bits::ElemSet;
use crate::report::ValidationReport;
use crate::table::{check_elements, Fnv1a, StructureError, Table};

/// Fingerprint of an algebra presentation. Derived structures (ideals, fuzzy
/// subsets, views obtained by conversion) carry the id of the algebra they
/// were built from, so cross-algebra mixups are caught at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraId(pub(crate) u64);

impl std::fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

/// A finite residuated lattice with named elements and dense tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteResiduatedLattice {
    elements: Vec<String>,
    join: Table,
    meet: Table,
    prod: Table,
    imp: Table,
    bottom: usize,
    top: usize,
    id: AlgebraId,
}

impl FiniteResiduatedLattice {
    /// Builds a lattice from explicit tables of element indices. Only the
    /// shape is checked here; run [`validate`](Self::validate) for the laws.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        elements: Vec<String>,
        join: Vec<Vec<usize>>,
        meet: Vec<Vec<usize>>,
        prod: Vec<Vec<usize>>,
        imp: Vec<Vec<usize>>,
        bottom: usize,
        top: usize,
    ) -> Result<FiniteResiduatedLattice, StructureError> {
        check_elements(&elements)?;
        let n = elements.len();
        let join = Table::from_rows("join", n, &join)?;
        let meet = Table::from_rows("meet", n, &meet)?;
        let prod = Table::from_rows("prod", n, &prod)?;
        let imp = Table::from_rows("impl", n, &imp)?;
        if bottom >= n {
            return Err(StructureError::BadConstant { name: "bottom" });
        }
        if top >= n {
            return Err(StructureError::BadConstant { name: "top" });
        }
        let id = fingerprint(&elements, [&join, &meet, &prod, &imp], bottom, top);
        Ok(FiniteResiduatedLattice {
            elements,
            join,
            meet,
            prod,
            imp,
            bottom,
            top,
            id,
        })
    }

    /// Builds a lattice from operation closures; convenient for programmatic
    /// constructions. Panics (via the table builder) on out-of-range values.
    pub fn from_fn(
        elements: Vec<String>,
        join: impl Fn(usize, usize) -> usize,
        meet: impl Fn(usize, usize) -> usize,
        prod: impl Fn(usize, usize) -> usize,
        imp: impl Fn(usize, usize) -> usize,
        bottom: usize,
        top: usize,
    ) -> Result<FiniteResiduatedLattice, StructureError> {
        check_elements(&elements)?;
        let n = elements.len();
        let rows = |f: &dyn Fn(usize, usize) -> usize| {
            (0..n)
                .map(|x| (0..n).map(|y| f(x, y)).collect())
                .collect::<Vec<Vec<usize>>>()
        };
        FiniteResiduatedLattice::new(
            elements.clone(),
            rows(&join),
            rows(&meet),
            rows(&prod),
            rows(&imp),
            bottom,
            top,
        )
    }

    /// Used by conversions that present another algebra's universe as a
    /// residuated lattice: the view keeps the source algebra's id.
    pub(crate) fn with_id(mut self, id: AlgebraId) -> FiniteResiduatedLattice {
        self.id = id;
        self
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

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
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
    pub fn prod(&self, x: usize, y: usize) -> usize {
        self.prod.get(x, y)
    }

    #[inline]
    pub fn implies(&self, x: usize, y: usize) -> usize {
        self.imp.get(x, y)
    }

    /// x ⪯ y, decided through the implication: x → y = 1.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.imp.get(x, y) == self.top
    }

    /// x* = x → 0.
    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.imp.get(x, self.bottom)
    }

    /// x ⊞ y = x* → y**. Commutative and associative.
    #[inline]
    pub fn boxplus(&self, x: usize, y: usize) -> usize {
        self.imp.get(self.neg(x), self.neg(self.neg(y)))
    }

    /// x ⊎ y = x* → y. Associative; commutativity is not guaranteed.
    #[inline]
    pub fn uplus(&self, x: usize, y: usize) -> usize {
        self.imp.get(self.neg(x), y)
    }

    /// {y : y ⪯ x}.
    pub fn downset(&self, x: usize) -> ElemSet {
        ElemSet::from_indices((0..self.n()).filter(|&y| self.leq(y, x)))
    }

    /// Renders a subset as `{e1, e2, ...}` in declared element order.
    pub fn set_to_string(&self, s: ElemSet) -> String {
        let names: Vec<&str> = s.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", names.join(", "))
    }

    /// Checks every law of a residuated lattice over the full universe,
    /// recording the first witness per violated law.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let n = self.n();
        let w = |ids: &[usize]| ids.iter().map(|&i| self.elements[i].clone()).collect();
        // Lattice order used below: x ⪯ y iff x ∨ y = y.
        let lleq = |x: usize, y: usize| self.join(x, y) == y;

        for x in 0..n {
            if self.join(self.bottom, x) != x {
                report.record("bottom-join-identity", w(&[x]));
            }
            if self.meet(self.top, x) != x {
                report.record("top-meet-identity", w(&[x]));
            }
            if self.prod(x, self.top) != x {
                report.record("monoid-unit", w(&[x]));
            }
            for y in 0..n {
                if self.join(x, y) != self.join(y, x) {
                    report.record("join-commutativity", w(&[x, y]));
                }
                if self.meet(x, y) != self.meet(y, x) {
                    report.record("meet-commutativity", w(&[x, y]));
                }
                if self.prod(x, y) != self.prod(y, x) {
                    report.record("prod-commutativity", w(&[x, y]));
                }
                if self.join(x, self.meet(x, y)) != x {
                    report.record("absorption-join-over-meet", w(&[x, y]));
                }
                if self.meet(x, self.join(x, y)) != x {
                    report.record("absorption-meet-over-join", w(&[x, y]));
                }
                if (self.implies(x, y) == self.top) != lleq(x, y) {
                    report.record("order-coincidence", w(&[x, y]));
                }
                for z in 0..n {
                    if self.join(self.join(x, y), z) != self.join(x, self.join(y, z)) {
                        report.record("join-associativity", w(&[x, y, z]));
                    }
                    if self.meet(self.meet(x, y), z) != self.meet(x, self.meet(y, z)) {
                        report.record("meet-associativity", w(&[x, y, z]));
                    }
                    if self.prod(self.prod(x, y), z) != self.prod(x, self.prod(y, z)) {
                        report.record("prod-associativity", w(&[x, y, z]));
                    }
                    if lleq(self.prod(x, z), y) != lleq(x, self.implies(z, y)) {
                        report.record("adjunction", w(&[x, y, z]));
                    }
                }
            }
        }
        report
    }
}

fn fingerprint(
    elements: &[String],
    tables: [&Table; 4],
    bottom: usize,
    top: usize,
) -> AlgebraId {
    let mut h = Fnv1a::new();
    h.write(b"residuated");
    for e in elements {
        h.write(e.as_bytes());
        h.write(&[0]);
    }
    for t in tables {
        for &c in t.cells() {
            h.write_usize(c);
        }
    }
    h.write_usize(bottom);
    h.write_usize(top);
    AlgebraId(h.finish())
}
