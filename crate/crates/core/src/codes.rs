//! Binary codes generated by ideals of finite algebras.
//!
//! The codeword of an ideal is its indicator bit vector in declared element
//! order. Codewords of distinct ideals are linearly independent over GF(2),
//! so a family of distinct ideals yields a generator matrix; a rank drop is
//! a falsification witness and is reported loudly, never tolerated. On the
//! n-fold product of the 2-element algebra the ideals of cardinality 2^(n-1)
//! generate a Hadamard-type [2^n, n, 2^(n-1)] code, and that construction is
//! invertible: from the block-pattern matrix the algebra and its generating
//! ideals are rebuilt, reproducing the rows bit for bit.

use num_rational::Ratio;
use thiserror::Error;

use crate::bits::{BitVec, ElemSet};
use crate::ideal::{ideal_closure, proper_ideals, IdealError, IdealSet};
use crate::residuated::FiniteResiduatedLattice;
use crate::wajsberg::{product_wajsberg, WajsbergAlgebra};

/// Largest rank for which the exhaustive span walk of `code_params` runs.
pub const MAX_SPAN_RANK: usize = 24;
/// Largest rank for which the pairwise-distance cross-check runs.
pub const MAX_PAIRWISE_RANK: usize = 12;
/// Largest order accepted by `boolean_form_matrix`.
pub const MAX_BOOLEAN_FORM_ORDER: usize = 16;
/// Largest order accepted by the algebra-building constructions, bounded by
/// the 64-element universe cap.
pub const MAX_PRODUCT_ORDER: usize = 6;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("matrix must have at least one row")]
    EmptyMatrix,
    #[error("matrix row {row} has {got} columns, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("ideal list must be nonempty")]
    EmptyIdealList,
    #[error("ideals {i} and {j} in the list coincide")]
    DuplicateIdeals { i: usize, j: usize },
    #[error("generator construction supports at most 64 rows, got {got}")]
    TooManyRows { got: usize },
    #[error(
        "codewords of distinct ideals came out linearly dependent: rows {rows:?} \
         XOR to zero; this falsifies the expected independence and must be investigated"
    )]
    RankDeficient { rows: Vec<usize> },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("rank {k} exceeds the exhaustive-search cap {cap}")]
    RankTooLarge { k: usize, cap: usize },
    #[error("matrices have different shapes: {a_rows}x{a_cols} vs {b_rows}x{b_cols}")]
    ShapeMismatch {
        a_rows: usize,
        a_cols: usize,
        b_rows: usize,
        b_cols: usize,
    },
    #[error("a {rows}x{cols} matrix cannot enumerate all {rows}-bit columns; {expected} columns expected")]
    NotSquareExponent {
        rows: usize,
        cols: usize,
        expected: u128,
    },
    #[error("order must be at least 2, got {got}")]
    OrderTooSmall { got: usize },
    #[error("order {got} exceeds the supported cap {cap}")]
    OrderTooLarge { got: usize, cap: usize },
    #[error("row {row} does not follow the alternating block pattern")]
    NotBooleanForm { row: usize },
    #[error(
        "expected exactly {expected} ideals of cardinality {card}, found {got}; \
         this falsifies the product-ideal count and must be investigated"
    )]
    IdealCountMismatch {
        expected: usize,
        card: usize,
        got: usize,
    },
    #[error(
        "construction produced parameters {got} where {expected} were required; \
         this falsifies the expected code type and must be investigated"
    )]
    ParamsMismatch { expected: String, got: String },
    #[error(
        "rebuilt ideal codeword disagrees with matrix row {row}; this falsifies \
         the inverse construction and must be investigated"
    )]
    RowMismatch { row: usize },
    #[error("the algebra has no proper ideals")]
    NoProperIdeals,
    #[error("the construction needs an even number of proper ideals, got {got}")]
    OddIdealCount { got: usize },
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// A k x n matrix over GF(2), read as the generator of a binary code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    ncols: usize,
    rows: Vec<BitVec>,
}

impl BinaryCode {
    pub fn new(rows: Vec<BitVec>) -> Result<BinaryCode, CodeError> {
        let first = rows.first().ok_or(CodeError::EmptyMatrix)?;
        let ncols = first.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(CodeError::RaggedRow {
                    row: i,
                    expected: ncols,
                    got: r.len(),
                });
            }
        }
        Ok(BinaryCode { ncols, rows })
    }

    pub fn n(&self) -> usize {
        self.ncols
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }
}

/// Code parameters (n, k, d) with the information rate k/n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl CodeParams {
    pub fn rate(&self) -> Ratio<i64> {
        Ratio::new(self.k as i64, self.n as i64)
    }
}

impl std::fmt::Display for CodeParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{},{},{}]_2 rate={}",
            self.n,
            self.k,
            self.d,
            self.rate()
        )
    }
}

/// Indicator bit vector of a plain subset over a universe of size n.
pub fn indicator(n: usize, s: ElemSet) -> BitVec {
    BitVec::from_bits((0..n).map(|i| s.contains(i)))
}

/// The codeword of an ideal: its indicator vector in declared element order.
pub fn codeword(l: &FiniteResiduatedLattice, ideal: &IdealSet) -> Result<BitVec, CodeError> {
    ideal.check_algebra(l.id())?;
    Ok(indicator(l.n(), ideal.members()))
}

/// XOR law: the codeword of a symmetric difference is the XOR of codewords.
/// Stated over raw member sets because I Δ J is never itself an ideal.
pub fn xor_law_holds(
    l: &FiniteResiduatedLattice,
    i: &IdealSet,
    j: &IdealSet,
) -> Result<bool, CodeError> {
    let mut lhs = codeword(l, i)?;
    lhs.xor_assign(&codeword(l, j)?);
    let rhs = indicator(l.n(), i.members().symdiff(j.members()));
    Ok(lhs == rhs)
}

/// Pointwise identity for two sets: the indicator of A Δ B equals
/// mu_A + mu_B - 2 mu_A mu_B with integer arithmetic.
pub fn symdiff_indicator_identity(n: usize, a: ElemSet, b: ElemSet) -> bool {
    (0..n).all(|x| {
        let ma = i64::from(a.contains(x));
        let mb = i64::from(b.contains(x));
        let lhs = i64::from(a.symdiff(b).contains(x));
        lhs == ma + mb - 2 * ma * mb
    })
}

/// Pointwise identity for an n-ary symmetric difference: the alternating sum
/// over nonempty subfamilies T with coefficient (-1)^(|T|-1) 2^(|T|-1) of the
/// products of indicators. Families of up to 20 sets are supported.
pub fn symdiff_indicator_identity_nary(n: usize, sets: &[ElemSet]) -> bool {
    assert!(!sets.is_empty() && sets.len() <= 20, "family size out of range");
    let whole = {
        let mut acc = ElemSet::EMPTY;
        for s in sets {
            acc = acc.symdiff(*s);
        }
        acc
    };
    (0..n).all(|x| {
        let lhs = i64::from(whole.contains(x));
        let mut rhs = 0i64;
        for t in 1u32..(1 << sets.len()) {
            let size = t.count_ones() as i64;
            let product: i64 = (0..sets.len())
                .filter(|&i| t >> i & 1 == 1)
                .map(|i| i64::from(sets[i].contains(x)))
                .product();
            let sign = if size % 2 == 1 { 1 } else { -1 };
            rhs += sign * (1i64 << (size - 1)) * product;
        }
        lhs == rhs
    })
}

/// Sorts ideals into the canonical generator-row order: descending
/// cardinality, then ascending member bitmask.
pub fn canonical_generator_order(mut ideals: Vec<IdealSet>) -> Vec<IdealSet> {
    ideals.sort_by_key(|i| (std::cmp::Reverse(i.card()), i.members().0));
    ideals
}

/// Stacks the codewords of the given ideals, in the given order, into a
/// generator matrix. The ideals must be distinct; their codewords are then
/// expected to be independent, and any rank drop is reported as a
/// falsification witness naming the dependent rows.
pub fn generator_matrix(
    l: &FiniteResiduatedLattice,
    ideals: &[IdealSet],
) -> Result<BinaryCode, CodeError> {
    if ideals.is_empty() {
        return Err(CodeError::EmptyIdealList);
    }
    if ideals.len() > 64 {
        return Err(CodeError::TooManyRows { got: ideals.len() });
    }
    for (j, b) in ideals.iter().enumerate() {
        for (i, a) in ideals.iter().enumerate().take(j) {
            if a.members() == b.members() {
                return Err(CodeError::DuplicateIdeals { i, j });
            }
        }
    }
    let rows: Vec<BitVec> = ideals
        .iter()
        .map(|i| codeword(l, i))
        .collect::<Result<_, _>>()?;
    let code = BinaryCode::new(rows)?;
    if let Some(combination) = dependent_rows(&code) {
        return Err(CodeError::RankDeficient { rows: combination });
    }
    Ok(code)
}

/// Row-reduces a copy of the matrix. Pivoting is deterministic: columns are
/// scanned left to right and the lowest-index remaining row provides each
/// pivot. Returns the reduced rows and the rank.
fn reduced_rows(code: &BinaryCode) -> (Vec<BitVec>, usize) {
    let mut rows = code.rows.clone();
    let mut rank = 0;
    for col in 0..code.ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    (rows, rank)
}

pub fn rank(code: &BinaryCode) -> usize {
    reduced_rows(code).1
}

/// When the rows are dependent, returns the indices of an input-row subset
/// that XORs to zero; `None` when the matrix has full row rank.
fn dependent_rows(code: &BinaryCode) -> Option<Vec<usize>> {
    let mut rows = code.rows.clone();
    let mut combo: Vec<u64> = (0..rows.len()).map(|i| 1u64 << i).collect();
    let mut rank = 0;
    for col in 0..code.ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        combo.swap(rank, p);
        let pivot = rows[rank].clone();
        let pivot_combo = combo[rank];
        for i in 0..rows.len() {
            if i != rank && rows[i].get(col) {
                rows[i].xor_assign(&pivot);
                combo[i] ^= pivot_combo;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.iter()
        .zip(&combo)
        .find(|(row, _)| row.is_zero())
        .map(|(_, c)| (0..code.rows.len()).filter(|&i| c >> i & 1 == 1).collect())
}

/// Minimum weight over the 2^k - 1 nonzero combinations of a row basis,
/// walked in Gray-code order so each step is a single row XOR.
fn min_weight_of_span(basis: &[BitVec], ncols: usize) -> usize {
    let k = basis.len();
    let mut current = BitVec::zeros(ncols);
    let mut best = usize::MAX;
    for m in 1u64..(1u64 << k) {
        current.xor_assign(&basis[m.trailing_zeros() as usize]);
        best = best.min(current.weight());
    }
    best
}

/// Code parameters of a generator matrix: k is the GF(2) rank, d the minimum
/// weight over the full span. The all-zero matrix is rejected; ranks above
/// [`MAX_SPAN_RANK`] are refused rather than approximated.
pub fn code_params(code: &BinaryCode) -> Result<CodeParams, CodeError> {
    let (rows, k) = reduced_rows(code);
    if k == 0 {
        return Err(CodeError::ZeroCode);
    }
    if k > MAX_SPAN_RANK {
        return Err(CodeError::RankTooLarge {
            k,
            cap: MAX_SPAN_RANK,
        });
    }
    let d = min_weight_of_span(&rows[..k], code.ncols);
    Ok(CodeParams {
        n: code.ncols,
        k,
        d,
    })
}

/// Minimum distance by its definition: the least Hamming distance over all
/// pairs of distinct codewords. Exponentially slower than `code_params`;
/// kept as an independent cross-check for small ranks.
pub fn min_distance_pairwise(code: &BinaryCode) -> Result<usize, CodeError> {
    let (rows, k) = reduced_rows(code);
    if k == 0 {
        return Err(CodeError::ZeroCode);
    }
    if k > MAX_PAIRWISE_RANK {
        return Err(CodeError::RankTooLarge {
            k,
            cap: MAX_PAIRWISE_RANK,
        });
    }
    let mut words = Vec::with_capacity(1 << k);
    let mut current = BitVec::zeros(code.ncols);
    words.push(current.clone());
    for m in 1u64..(1u64 << k) {
        current.xor_assign(&rows[m.trailing_zeros() as usize]);
        words.push(current.clone());
    }
    let mut best = usize::MAX;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            best = best.min(words[i].distance(&words[j]));
        }
    }
    Ok(best)
}

/// Hadamard type: parameters of the shape [2^t, t, 2^(t-1)] with t >= 2.
pub fn is_hadamard_type(params: &CodeParams) -> bool {
    let t = params.k;
    t >= 2 && params.n == 1usize << t && params.d == 1usize << (t - 1)
}

/// The n x 2^n block-pattern matrix: row i (1-indexed) alternates blocks of
/// 2^(n-i) ones and zeros, starting with ones.
pub fn boolean_form_matrix(n: usize) -> Result<BinaryCode, CodeError> {
    if n < 2 {
        return Err(CodeError::OrderTooSmall { got: n });
    }
    if n > MAX_BOOLEAN_FORM_ORDER {
        return Err(CodeError::OrderTooLarge {
            got: n,
            cap: MAX_BOOLEAN_FORM_ORDER,
        });
    }
    let cols = 1usize << n;
    let rows = (0..n)
        .map(|r| BitVec::from_bits((0..cols).map(|j| j >> (n - 1 - r) & 1 == 0)))
        .collect();
    Ok(BinaryCode::new(rows).expect("rows are nonempty and of equal length"))
}

/// True when the two matrices have the same reduced row echelon form, hence
/// the same row space. Shapes must match exactly.
pub fn row_equivalent(a: &BinaryCode, b: &BinaryCode) -> Result<bool, CodeError> {
    if a.k() != b.k() || a.n() != b.n() {
        return Err(CodeError::ShapeMismatch {
            a_rows: a.k(),
            a_cols: a.n(),
            b_rows: b.k(),
            b_cols: b.n(),
        });
    }
    let (ra, ka) = reduced_rows(a);
    let (rb, kb) = reduced_rows(b);
    Ok(ka == kb && ra[..ka] == rb[..kb])
}

/// True when the columns of a t x 2^t matrix enumerate every t-bit vector
/// exactly once. Matrices of any other shape are rejected.
pub fn columns_all_bitvectors(code: &BinaryCode) -> Result<bool, CodeError> {
    let t = code.k();
    if t > MAX_SPAN_RANK {
        return Err(CodeError::RankTooLarge {
            k: t,
            cap: MAX_SPAN_RANK,
        });
    }
    let expected = 1u128 << t;
    if code.n() as u128 != expected {
        return Err(CodeError::NotSquareExponent {
            rows: t,
            cols: code.n(),
            expected,
        });
    }
    let mut counts = vec![0u32; 1 << t];
    for j in 0..code.n() {
        let mut v = 0usize;
        for i in 0..t {
            v = v << 1 | usize::from(code.row(i).get(j));
        }
        counts[v] += 1;
    }
    Ok(counts.iter().all(|&c| c == 1))
}

/// Product algebra, generating ideals, and Hadamard-type code built by
/// [`hadamard_from_boolean`].
#[derive(Clone, Debug)]
pub struct HadamardCode {
    pub algebra: WajsbergAlgebra,
    pub lattice: FiniteResiduatedLattice,
    pub ideals: Vec<IdealSet>,
    pub code: BinaryCode,
    pub params: CodeParams,
}

/// Builds the n-fold product of the 2-element algebra, collects its ideals
/// of cardinality 2^(n-1), and stacks their codewords. Exactly n such ideals
/// must exist and the parameters must come out [2^n, n, 2^(n-1)]; anything
/// else is reported as a falsification, never masked.
pub fn hadamard_from_boolean(n: usize) -> Result<HadamardCode, CodeError> {
    if n < 2 {
        return Err(CodeError::OrderTooSmall { got: n });
    }
    if n > MAX_PRODUCT_ORDER {
        return Err(CodeError::OrderTooLarge {
            got: n,
            cap: MAX_PRODUCT_ORDER,
        });
    }
    let algebra = product_wajsberg(n).expect("order within the checked range");
    let lattice = algebra
        .to_residuated()
        .expect("the product order is a lattice");
    let card = 1usize << (n - 1);
    let ideals: Vec<IdealSet> = crate::ideal::enumerate_ideals(&lattice)
        .into_iter()
        .filter(|i| i.card() == card)
        .collect();
    if ideals.len() != n {
        return Err(CodeError::IdealCountMismatch {
            expected: n,
            card,
            got: ideals.len(),
        });
    }
    let ideals = canonical_generator_order(ideals);
    let code = generator_matrix(&lattice, &ideals)?;
    let params = code_params(&code)?;
    let expected = CodeParams {
        n: 1 << n,
        k: n,
        d: card,
    };
    if params != expected {
        return Err(CodeError::ParamsMismatch {
            expected: expected.to_string(),
            got: params.to_string(),
        });
    }
    Ok(HadamardCode {
        algebra,
        lattice,
        ideals,
        code,
        params,
    })
}

/// Product algebra and ideals recovered from a block-pattern matrix by
/// [`boolean_from_matrix`].
#[derive(Clone, Debug)]
pub struct BooleanConstruction {
    pub algebra: WajsbergAlgebra,
    pub lattice: FiniteResiduatedLattice,
    pub ideals: Vec<IdealSet>,
}

/// Inverse construction: reads a k x 2^k block-pattern matrix, rebuilds the
/// k-fold product algebra, and generates each ideal from the maximal element
/// whose single zero sits in the row's coordinate. Each rebuilt ideal's
/// codeword must reproduce its matrix row bit for bit.
pub fn boolean_from_matrix(m: &BinaryCode) -> Result<BooleanConstruction, CodeError> {
    let k = m.k();
    if k < 2 {
        return Err(CodeError::OrderTooSmall { got: k });
    }
    if k > MAX_PRODUCT_ORDER {
        return Err(CodeError::OrderTooLarge {
            got: k,
            cap: MAX_PRODUCT_ORDER,
        });
    }
    let expected_cols = 1u128 << k;
    if m.n() as u128 != expected_cols {
        return Err(CodeError::NotSquareExponent {
            rows: k,
            cols: m.n(),
            expected: expected_cols,
        });
    }
    for r in 0..k {
        for j in 0..m.n() {
            if m.row(r).get(j) != (j >> (k - 1 - r) & 1 == 0) {
                return Err(CodeError::NotBooleanForm { row: r });
            }
        }
    }
    let algebra = product_wajsberg(k).expect("order within the checked range");
    let lattice = algebra
        .to_residuated()
        .expect("the product order is a lattice");
    let full = (1usize << k) - 1;
    let mut ideals = Vec::with_capacity(k);
    for r in 0..k {
        let maximal = full ^ (1 << (k - 1 - r));
        let ideal = ideal_closure(&lattice, ElemSet::singleton(maximal))?;
        if codeword(&lattice, &ideal)? != *m.row(r) {
            return Err(CodeError::RowMismatch { row: r });
        }
        ideals.push(ideal);
    }
    Ok(BooleanConstruction {
        algebra,
        lattice,
        ideals,
    })
}

/// Generator built from all proper ideals of an algebra that has an even
/// number of them. The d >= 3 observation is reported as a flag, never
/// asserted.
#[derive(Clone, Debug)]
pub struct EvenIdealCode {
    pub ideals: Vec<IdealSet>,
    pub code: BinaryCode,
    pub params: CodeParams,
    pub distance_at_least_3: bool,
}

pub fn even_ideal_code(l: &FiniteResiduatedLattice) -> Result<EvenIdealCode, CodeError> {
    let ideals = proper_ideals(l);
    if ideals.is_empty() {
        return Err(CodeError::NoProperIdeals);
    }
    if !ideals.len().is_multiple_of(2) {
        return Err(CodeError::OddIdealCount { got: ideals.len() });
    }
    let ideals = canonical_generator_order(ideals);
    let code = generator_matrix(l, &ideals)?;
    let params = code_params(&code)?;
    Ok(EvenIdealCode {
        ideals,
        code,
        params,
        distance_at_least_3: params.d >= 3,
    })
}
