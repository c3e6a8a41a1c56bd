//! The labeled second Jacobian matrix, its submatrices and their block
//! structure, symbolic determinants, maximal-minor enumeration, and the
//! structured-minor identity harness.

mod blocks;
mod det;
mod labels;
mod lemmas;
mod matrix;
mod minors;

pub use blocks::{
    block_triangularize, random_selection, BlockDecomposition, DiagonalBlock, HypothesisViolation,
};
pub use det::PolyMatrix;
pub use labels::{column_labels, row_labels, ColLabel, RowLabel};
pub use lemmas::{
    lemma_identity_check, random_case, run_lemma_suite, LemmaCase, LemmaCheck,
    LemmaHypothesisError, LemmaId, LemmaSuiteConfig, LemmaSuiteReport, LemmaTally,
};
pub use matrix::{build_jac2, symbolic_entries, Jacobian2Matrix, LabeledSubmatrix, SelectionError};
pub use minors::{
    enumerate_from_matrix, enumerate_maximal_minors, maximal_minors, MinorEnumeration, MinorRecord,
};
