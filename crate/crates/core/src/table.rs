//! Dense operation tables over element indices, plus structural checks
//! shared by every algebra constructor.

use thiserror::Error;

/// Structural defects in a presented table. These are rejected at
/// construction time; law violations are a separate concern handled by
/// the validators.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("universe must have at least 2 elements, got {0}")]
    TooFewElements(usize),
    #[error("universe must have at most 64 elements, got {0}")]
    TooManyElements(usize),
    #[error("duplicate element name {0:?}")]
    DuplicateElement(String),
    #[error("table {table} must have {expected} rows, got {got}")]
    WrongRowCount {
        table: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("table {table} row {row} must have {expected} entries, got {got}")]
    WrongRowLength {
        table: &'static str,
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("table {table} row {row} holds an out-of-range element index")]
    IndexOutOfRange { table: &'static str, row: usize },
    #[error("constant {name} holds an out-of-range element index")]
    BadConstant { name: &'static str },
    #[error("no row of circ acts as the identity; the unit element cannot be located")]
    NoUnit,
    #[error("several rows of circ act as the identity; the unit element is ambiguous")]
    AmbiguousUnit,
}

/// A total binary operation on indices 0..n, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Table {
    n: usize,
    cells: Vec<usize>,
}

impl Table {
    pub(crate) fn from_rows(
        name: &'static str,
        n: usize,
        rows: &[Vec<usize>],
    ) -> Result<Table, StructureError> {
        if rows.len() != n {
            return Err(StructureError::WrongRowCount {
                table: name,
                expected: n,
                got: rows.len(),
            });
        }
        let mut cells = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(StructureError::WrongRowLength {
                    table: name,
                    row: r,
                    expected: n,
                    got: row.len(),
                });
            }
            if row.iter().any(|&v| v >= n) {
                return Err(StructureError::IndexOutOfRange { table: name, row: r });
            }
            cells.extend_from_slice(row);
        }
        Ok(Table { n, cells })
    }

    pub(crate) fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Table {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = f(x, y);
                assert!(v < n, "table closure returned out-of-range index");
                cells.push(v);
            }
        }
        Table { n, cells }
    }

    #[inline]
    pub(crate) fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    pub(crate) fn cells(&self) -> &[usize] {
        &self.cells
    }
}

/// Checks a declared element list: size bounds and uniqueness.
pub(crate) fn check_elements(elements: &[String]) -> Result<(), StructureError> {
    if elements.len() < 2 {
        return Err(StructureError::TooFewElements(elements.len()));
    }
    if elements.len() > 64 {
        return Err(StructureError::TooManyElements(elements.len()));
    }
    for (i, name) in elements.iter().enumerate() {
        if elements[..i].contains(name) {
            return Err(StructureError::DuplicateElement(name.clone()));
        }
    }
    Ok(())
}

/// Checks a unary table (one value per element).
pub(crate) fn check_unary(
    name: &'static str,
    n: usize,
    values: &[usize],
) -> Result<(), StructureError> {
    if values.len() != n {
        return Err(StructureError::WrongRowCount {
            table: name,
            expected: n,
            got: values.len(),
        });
    }
    if values.iter().any(|&v| v >= n) {
        return Err(StructureError::IndexOutOfRange { table: name, row: 0 });
    }
    Ok(())
}

/// FNV-1a over a byte stream; used to fingerprint algebra presentations.
pub(crate) struct Fnv1a(u64);

impl Fnv1a {
    pub(crate) fn new() -> Fnv1a {
        Fnv1a(0xcbf2_9ce4_8422_2325)
    }

    pub(crate) fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }

    pub(crate) fn write_usize(&mut self, v: usize) {
        self.write(&(v as u64).to_le_bytes());
    }

    pub(crate) fn finish(&self) -> u64 {
        self.0
    }
}
