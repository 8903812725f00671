//! Text formats: algebra files, fuzzy-subset files, and GF(2) matrices.
//!
//! Algebra files declare `elements:` and `kind:` first; a `wajsberg` file
//! continues with a `circ:` block of n rows and a `neg:` line, a `residuated`
//! file with `join:`, `meet:`, `prod:`, `impl:` blocks and `bottom:`/`top:`
//! lines. Table entries are element names, so files stay readable and the
//! declared order is explicit. Lines whose first non-blank character is `#`
//! are comments. Parsing is strict: unknown names, ragged rows, and trailing
//! content are errors, each reported with its line number.
//!
//! Fuzzy subsets are files of `element = p/q` lines (integers allowed) and
//! must assign every element exactly once. Matrices are lines of `0`/`1`
//! characters with no separators.

use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::bits::BitVec;
use crate::codes::BinaryCode;
use crate::fuzzy::{FuzzyError, FuzzySubset, Grade};
use crate::residuated::FiniteResiduatedLattice;
use crate::table::StructureError;
use crate::wajsberg::WajsbergAlgebra;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected `{expected}`")]
    ExpectedKeyword { line: usize, expected: &'static str },
    #[error("unexpected end of file: expected `{expected}`")]
    UnexpectedEof { expected: &'static str },
    #[error("line {line}: unknown element name {name:?}")]
    UnknownElement { line: usize, name: String },
    #[error("line {line}: row has {got} entries, expected {expected}")]
    RaggedRow {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: unknown kind {kind:?}, expected `wajsberg` or `residuated`")]
    BadKind { line: usize, kind: String },
    #[error("line {line}: trailing content after a complete definition")]
    TrailingContent { line: usize },
    #[error("line {line}: {ch:?} is not a matrix character (only `0` and `1` are)")]
    BadMatrixChar { line: usize, ch: char },
    #[error("matrix input contains no rows")]
    EmptyMatrix,
    #[error("line {line}: cannot read {text:?} as a rational p/q")]
    BadRational { line: usize, text: String },
    #[error("line {line}: grade {grade} is outside [0, 1]")]
    GradeOutOfRange { line: usize, grade: String },
    #[error("line {line}: element {element:?} is assigned twice")]
    DuplicateAssignment { line: usize, element: String },
    #[error("no grade assigned to element {element:?}")]
    MissingAssignment { element: String },
    #[error("line {line}: expected `element = grade`")]
    MissingEquals { line: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

/// A parsed algebra file, dispatched on its declared `kind:`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraFile {
    Wajsberg(WajsbergAlgebra),
    Residuated(FiniteResiduatedLattice),
}

/// Iterator over content lines: 1-based line numbers, blank lines and
/// `#` comments skipped.
struct Content<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Content<'a> {
    fn new(text: &'a str) -> Content<'a> {
        Content {
            lines: text.lines().enumerate(),
        }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.lines.by_ref() {
            let t = raw.trim();
            if !t.is_empty() && !t.starts_with('#') {
                return Some((i + 1, t));
            }
        }
        None
    }

    fn expect(&mut self, keyword: &'static str) -> Result<(usize, &'a str), ParseError> {
        let (line, text) = self
            .next()
            .ok_or(ParseError::UnexpectedEof { expected: keyword })?;
        match text.strip_prefix(keyword) {
            Some(rest) => Ok((line, rest.trim())),
            None => Err(ParseError::ExpectedKeyword {
                line,
                expected: keyword,
            }),
        }
    }
}

fn lookup(elements: &[String], line: usize, name: &str) -> Result<usize, ParseError> {
    elements
        .iter()
        .position(|e| e == name)
        .ok_or_else(|| ParseError::UnknownElement {
            line,
            name: name.to_string(),
        })
}

fn parse_row(elements: &[String], line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    let names: Vec<&str> = text.split_whitespace().collect();
    if names.len() != elements.len() {
        return Err(ParseError::RaggedRow {
            line,
            expected: elements.len(),
            got: names.len(),
        });
    }
    names.iter().map(|n| lookup(elements, line, n)).collect()
}

fn parse_block(
    content: &mut Content<'_>,
    elements: &[String],
    keyword: &'static str,
) -> Result<Vec<Vec<usize>>, ParseError> {
    let (line, rest) = content.expect(keyword)?;
    if !rest.is_empty() {
        return Err(ParseError::TrailingContent { line });
    }
    let mut rows = Vec::with_capacity(elements.len());
    for _ in 0..elements.len() {
        let (line, text) = content.next().ok_or(ParseError::UnexpectedEof {
            expected: "table row",
        })?;
        rows.push(parse_row(elements, line, text)?);
    }
    Ok(rows)
}

/// Parses one algebra file. The tables are shape-checked by the algebra
/// constructors; run `validate` separately for the axioms.
pub fn parse_algebra(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut content = Content::new(text);
    let (_, names) = content.expect("elements:")?;
    let elements: Vec<String> = names.split_whitespace().map(str::to_string).collect();
    let (kind_line, kind) = content.expect("kind:")?;
    let parsed = match kind {
        "wajsberg" => {
            let circ = parse_block(&mut content, &elements, "circ:")?;
            let (neg_line, neg_rest) = content.expect("neg:")?;
            let neg = parse_row(&elements, neg_line, neg_rest)?;
            AlgebraFile::Wajsberg(WajsbergAlgebra::new(elements, circ, neg)?)
        }
        "residuated" => {
            let join = parse_block(&mut content, &elements, "join:")?;
            let meet = parse_block(&mut content, &elements, "meet:")?;
            let prod = parse_block(&mut content, &elements, "prod:")?;
            let imp = parse_block(&mut content, &elements, "impl:")?;
            let (b_line, b_rest) = content.expect("bottom:")?;
            let bottom = lookup(&elements, b_line, b_rest)?;
            let (t_line, t_rest) = content.expect("top:")?;
            let top = lookup(&elements, t_line, t_rest)?;
            AlgebraFile::Residuated(FiniteResiduatedLattice::new(
                elements,
                join,
                meet,
                prod,
                imp,
                bottom,
                top,
            )?)
        }
        other => {
            return Err(ParseError::BadKind {
                line: kind_line,
                kind: other.to_string(),
            })
        }
    };
    if let Some((line, _)) = content.next() {
        return Err(ParseError::TrailingContent { line });
    }
    Ok(parsed)
}

/// Serializes a Wajsberg algebra in the file format; parsing the result
/// reproduces the algebra exactly.
pub fn serialize_wajsberg(w: &WajsbergAlgebra) -> String {
    let mut out = String::new();
    out.push_str("elements: ");
    out.push_str(&w.element_names().join(" "));
    out.push_str("\nkind: wajsberg\ncirc:\n");
    for x in 0..w.n() {
        let row: Vec<&str> = (0..w.n()).map(|y| w.name(w.circ(x, y))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.push_str("neg: ");
    let neg: Vec<&str> = (0..w.n()).map(|x| w.name(w.neg(x))).collect();
    out.push_str(&neg.join(" "));
    out.push('\n');
    out
}

/// Serializes a residuated lattice in the file format; parsing the result
/// reproduces the lattice exactly.
pub fn serialize_residuated(l: &FiniteResiduatedLattice) -> String {
    let mut out = String::new();
    out.push_str("elements: ");
    out.push_str(&l.element_names().join(" "));
    out.push_str("\nkind: residuated\n");
    type LatticeOp = fn(&FiniteResiduatedLattice, usize, usize) -> usize;
    let blocks: [(&str, LatticeOp); 4] = [
        ("join:", FiniteResiduatedLattice::join),
        ("meet:", FiniteResiduatedLattice::meet),
        ("prod:", FiniteResiduatedLattice::prod),
        ("impl:", FiniteResiduatedLattice::implies),
    ];
    for (name, op) in blocks {
        out.push_str(name);
        out.push('\n');
        for x in 0..l.n() {
            let row: Vec<&str> = (0..l.n()).map(|y| l.name(op(l, x, y))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out.push_str("bottom: ");
    out.push_str(l.name(l.bottom()));
    out.push_str("\ntop: ");
    out.push_str(l.name(l.top()));
    out.push('\n');
    out
}

/// Reads `p/q` or a plain integer as an exact rational.
pub fn parse_rational(line: usize, text: &str) -> Result<Grade, ParseError> {
    let bad = || ParseError::BadRational {
        line,
        text: text.to_string(),
    };
    match text.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(p, q))
        }
        None => {
            let p: i64 = text.trim().parse().map_err(|_| bad())?;
            Ok(Ratio::from_integer(p))
        }
    }
}

/// Parses a fuzzy-subset file: one `element = p/q` line per element, every
/// element assigned exactly once, grades inside [0, 1].
pub fn parse_fuzzy(
    l: &FiniteResiduatedLattice,
    text: &str,
) -> Result<FuzzySubset, ParseError> {
    let mut grades: Vec<Option<Grade>> = vec![None; l.n()];
    let mut content = Content::new(text);
    while let Some((line, t)) = content.next() {
        let (name, value) = t
            .split_once('=')
            .ok_or(ParseError::MissingEquals { line })?;
        let name = name.trim();
        let idx = l
            .index_of(name)
            .ok_or_else(|| ParseError::UnknownElement {
                line,
                name: name.to_string(),
            })?;
        if grades[idx].is_some() {
            return Err(ParseError::DuplicateAssignment {
                line,
                element: name.to_string(),
            });
        }
        let g = parse_rational(line, value.trim())?;
        if g < Grade::zero() || g > Grade::one() {
            return Err(ParseError::GradeOutOfRange {
                line,
                grade: g.to_string(),
            });
        }
        grades[idx] = Some(g);
    }
    let grades: Vec<Grade> = grades
        .into_iter()
        .enumerate()
        .map(|(i, g)| {
            g.ok_or_else(|| ParseError::MissingAssignment {
                element: l.name(i).to_string(),
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(FuzzySubset::new(l, grades)?)
}

/// Serializes a fuzzy subset as `element = grade` lines in declared order.
pub fn serialize_fuzzy(l: &FiniteResiduatedLattice, mu: &FuzzySubset) -> String {
    (0..l.n())
        .map(|i| format!("{} = {}\n", l.name(i), mu.get(i)))
        .collect()
}

/// Parses a matrix: one row of `0`/`1` characters per line, `#` comments and
/// blank lines ignored, all rows of equal length.
pub fn parse_matrix(text: &str) -> Result<BinaryCode, ParseError> {
    let mut rows: Vec<BitVec> = Vec::new();
    let mut width = 0usize;
    let mut content = Content::new(text);
    while let Some((line, t)) = content.next() {
        let mut bits = Vec::with_capacity(t.len());
        for ch in t.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => return Err(ParseError::BadMatrixChar { line, ch: other }),
            }
        }
        if rows.is_empty() {
            width = bits.len();
        } else if bits.len() != width {
            return Err(ParseError::RaggedRow {
                line,
                expected: width,
                got: bits.len(),
            });
        }
        rows.push(BitVec::from_bits(bits));
    }
    if rows.is_empty() {
        return Err(ParseError::EmptyMatrix);
    }
    Ok(BinaryCode::new(rows).expect("rows checked nonempty and rectangular"))
}

/// Serializes a matrix as bare `0`/`1` rows, the exact input format.
pub fn serialize_matrix(code: &BinaryCode) -> String {
    let mut out = String::new();
    for row in code.rows() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}
