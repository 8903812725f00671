//! Computational algebra for finite residuated lattices and the binary codes
//! their ideals generate.
//!
//! The crate covers three connected areas:
//!
//! * **Finite algebras by table.** [`FiniteResiduatedLattice`] and
//!   [`WajsbergAlgebra`] hold explicit operation tables over a universe of at
//!   most 64 named elements, validate their axioms exhaustively, and convert
//!   into each other and into MV, Boolean, and Boolean-ring views. Crisp
//!   ideals come with membership tests, closure, enumeration, and primality.
//!
//! * **Fuzzy ideals with exact rational grades.** [`FuzzySubset`] maps
//!   elements to rationals in [0, 1]; several equivalent fuzzy-ideal
//!   characterizations are implemented side by side and required to agree.
//!   Fuzzy ideals form a lattice with pointwise meet and closure-of-sup join;
//!   over a finite [`ValueGrid`] of grades the lattice is verified to be a
//!   Heyting algebra, with the relative pseudocomplement computed directly.
//!
//! * **Binary codes from ideals.** The indicator vectors of ideals are rows
//!   of GF(2) generator matrices. On products of the 2-element algebra this
//!   yields Hadamard-type codes, and the construction runs in both
//!   directions: algebra to matrix and matrix back to algebra, bit for bit.
//!   A binary symmetric channel with exact rational flip probability and
//!   exhaustive minimum-distance decoding rounds out the pipeline.
//!
//! Everything is deterministic: no floats, no hash-order dependence, and all
//! randomness (only in the channel simulation) is seeded ChaCha8.

#![forbid(unsafe_code)]

pub mod bits;
pub mod boolean;
pub mod channel;
pub mod codes;
pub mod fixtures;
pub mod format;
pub mod fuzzy;
pub mod fuzzy_lattice;
pub mod ideal;
pub mod report;
pub mod residuated;
mod table;
pub mod wajsberg;

pub use bits::{BitVec, ElemSet};
pub use boolean::{BooleanAlgebra, BooleanError, BooleanRingView};
pub use channel::{
    decode_min_distance, encode, run_channel, ChannelConfig, ChannelError, ChannelReport,
    DecodeOutcome,
};
pub use codes::{
    boolean_form_matrix, boolean_from_matrix, canonical_generator_order, code_params, codeword,
    columns_all_bitvectors, even_ideal_code, generator_matrix, hadamard_from_boolean, indicator,
    is_hadamard_type, min_distance_pairwise, rank, row_equivalent, symdiff_indicator_identity,
    symdiff_indicator_identity_nary, xor_law_holds, BinaryCode, BooleanConstruction, CodeError,
    CodeParams, EvenIdealCode, HadamardCode,
};
pub use format::{
    parse_algebra, parse_fuzzy, parse_matrix, parse_rational, serialize_fuzzy, serialize_matrix,
    serialize_residuated, serialize_wajsberg, AlgebraFile, ParseError,
};
pub use fuzzy::{
    fuzzy_closure, grade, is_fuzzy_ideal, is_fuzzy_ideal_bound_below, is_fuzzy_ideal_bound_unit,
    is_fuzzy_ideal_boxplus, is_fuzzy_ideal_residual, is_fuzzy_ideal_residual_impl, FuzzyError,
    FuzzySubset, Grade,
};
pub use fuzzy_lattice::{
    brouwerian_check, enumerate_grid_fuzzy_ideals, fi_join, fi_meet, heyting_arrow,
    heyting_axioms_check, BrouwerianReport, FuzzyLatticeError, HeytingReport, LawCheck, ValueGrid,
    DEFAULT_ENUM_BUDGET,
};
pub use ideal::{
    enumerate_ideals, ideal_closure, is_ideal, is_mv_ideal, is_prime_ideal, is_prime_ideal_mv,
    proper_ideals, IdealError, IdealSet,
};
pub use report::{ValidationReport, Violation};
pub use residuated::{AlgebraId, FiniteResiduatedLattice};
pub use table::StructureError;
pub use wajsberg::{
    product_wajsberg, residuated_to_wajsberg, LatticeConversionError, MvAlgebra, WajsbergAlgebra,
};
