//! Dense complex numerics used to check the symbolic layers: explicit Pauli
//! operators, class eigenbases, unbiasedness and Schmidt ranks.

mod mub;
mod pauli;

use num_complex::Complex64;
use serde_json::{json, Value};
use thiserror::Error;

pub use mub::{class_eigenbasis, verify_mub, MubCheck, MubSet};
pub use pauli::{pauli_matrix, symplectic_product, PauliLabel};

pub type ComplexMatrix = nalgebra::DMatrix<Complex64>;

/// Largest qubit count handled numerically (`d = 64`).
pub const MAX_NUMERIC_QUBITS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("m = {m} exceeds the numeric cap of {max} qubits")]
    TooLarge { m: usize, max: usize },
    #[error("generator has shape {rows}x{cols}, expected 2m x m")]
    Shape { rows: usize, cols: usize },
    #[error("generator columns are linearly dependent")]
    Dependent,
    #[error("generator labels do not commute")]
    NonCommuting,
}

/// Rank of `vector` reshaped as a matrix with rows indexed by the qubits in
/// `block` and columns by the rest; singular values above `tol` times the
/// largest are counted. Qubit 0 is the most significant index bit.
pub fn schmidt_rank(vector: &[Complex64], block: &[usize], tol: f64) -> usize {
    let d = vector.len();
    assert!(d.is_power_of_two() && d > 0, "vector length must be a power of two");
    let m = d.trailing_zeros() as usize;
    assert!(!block.is_empty() && block.iter().all(|&q| q < m), "block must be a nonempty set of qubits");
    let rest: Vec<usize> = (0..m).filter(|q| !block.contains(q)).collect();
    let gather = |idx: usize, qubits: &[usize]| {
        qubits.iter().fold(0usize, |acc, &q| acc << 1 | (idx >> (m - 1 - q) & 1))
    };
    let mut mat = ComplexMatrix::zeros(1 << block.len(), 1 << rest.len());
    for (idx, &v) in vector.iter().enumerate() {
        mat[(gather(idx, block), gather(idx, &rest))] = v;
    }
    let sv = mat.singular_values();
    let largest = sv.iter().copied().fold(0.0, f64::max);
    if largest == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * largest).count()
}

/// Basis as JSON: a list of columns, each a list of `[re, im]` pairs.
/// Numbers use the shortest representation that round-trips exactly.
pub fn basis_to_json(basis: &ComplexMatrix) -> Value {
    let cols: Vec<Value> = basis
        .column_iter()
        .map(|col| Value::Array(col.iter().map(|z| json!([z.re, z.im])).collect()))
        .collect();
    Value::Array(cols)
}
