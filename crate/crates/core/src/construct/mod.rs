//! Stabilizer matrices, class generators and the search for valid specs.

mod classes;
mod generators;
pub mod search;
mod spec;
mod stabilizer;
mod symmetrizer;

use thiserror::Error;

pub use classes::{class_partition_check, column_space, label_product, ClassReport, PartitionMethod, ENUMERATION_LIMIT};
pub use generators::{field_closure_check, generators, GeneratorSet, StandardForm};
pub use search::{search_b, search_b_general, search_specs, SearchError, SearchMode, SearchOutcome, EXHAUSTIVE_LIMIT};
pub use spec::{check_b, SetKind, SpecError, StabilizerSpec, MAX_QUBITS};
pub use stabilizer::{build_stabilizer, cyclicity_check, is_symplectic_matrix, poly_eval, stabilizer_powers, symplectic_form};
pub use symmetrizer::{
    admits_single_factorizable, find_a, find_symmetrizer, is_polynomial_in, symmetrizer_candidates, symmetrizer_space,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("generator {index} is {rows}x{cols}, expected {}x{m}", 2 * m)]
    GeneratorShape { index: usize, rows: usize, cols: usize, m: usize },
    #[error("generator {index} has no standard form")]
    NoStandardForm { index: usize },
    #[error("lower block of generator {index} is singular")]
    SingularLowerBlock { index: usize },
}
