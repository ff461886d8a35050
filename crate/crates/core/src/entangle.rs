//! Entanglement structure of the bases in a set.
//!
//! For a class in standard form `(M; I)` with `M` symmetric, a qubit subset
//! separates iff it is a union of connected components of the off-diagonal
//! graph of `M`, so each basis factorizes along those components.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{GeneratorSet, StandardForm};
use crate::gf2::offdiag_components;

/// Integer partition of `m`, parts in non-increasing order.
pub type Partition = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EntangleError {
    #[error("standard form matrix is not symmetric")]
    NotSymmetric,
}

/// All partitions of `m`, ascending by largest part then next-largest, so
/// `(1, …, 1)` comes first and `(m)` last.
pub fn partitions(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in 1..=max.min(rest) {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Partition of the qubits into tensor factors of the basis for `entry`.
pub fn partition_of(entry: &StandardForm, m: usize) -> Result<Partition, EntangleError> {
    match entry {
        StandardForm::ZBasis => Ok(vec![1; m]),
        StandardForm::Matrix(mat) => {
            if !mat.is_symmetric() {
                return Err(EntangleError::NotSymmetric);
            }
            let mut sizes: Vec<usize> = offdiag_components(mat).iter().map(Vec::len).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            Ok(sizes)
        }
    }
}

/// Histogram of basis partitions over a set, in [`partitions`] order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntanglementVector {
    #[serde(skip)]
    pub m: usize,
    pub partitions: Vec<Partition>,
    pub counts: Vec<u64>,
}

impl EntanglementVector {
    /// Number of completely factorizable bases.
    pub fn factorizable(&self) -> u64 {
        self.counts.first().copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

pub fn entanglement_vector(gens: &GeneratorSet) -> Result<EntanglementVector, EntangleError> {
    let m = gens.m();
    let parts = partitions(m);
    let per_class: Vec<Partition> = gens
        .standard_forms()
        .par_iter()
        .map(|f| partition_of(f, m))
        .collect::<Result<_, _>>()?;
    let mut counts = vec![0u64; parts.len()];
    for p in &per_class {
        let idx = parts.binary_search(p).expect("component sizes form a partition of m");
        counts[idx] += 1;
    }
    Ok(EntanglementVector { m, partitions: parts, counts })
}

pub fn count_factorizable(gens: &GeneratorSet) -> Result<u64, EntangleError> {
    entanglement_vector(gens).map(|v| v.factorizable())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{generators, StabilizerSpec};
    use crate::gf2::BitMatrix;

    #[test]
    fn partition_lists() {
        assert_eq!(partitions(1), vec![vec![1]]);
        assert_eq!(partitions(3), vec![vec![1, 1, 1], vec![2, 1], vec![3]]);
        assert_eq!(
            partitions(4),
            vec![vec![1, 1, 1, 1], vec![2, 1, 1], vec![2, 2], vec![3, 1], vec![4]]
        );
        let counts: Vec<usize> = (1..=8).map(|m| partitions(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn trivial_partitions() {
        assert_eq!(partition_of(&StandardForm::ZBasis, 3).unwrap(), vec![1, 1, 1]);
        assert_eq!(partition_of(&StandardForm::Matrix(BitMatrix::identity(3)), 3).unwrap(), vec![1, 1, 1]);
        let bad = BitMatrix::from_rows(&[[0u8, 1], [0, 0]]);
        assert_eq!(partition_of(&StandardForm::Matrix(bad), 2), Err(EntangleError::NotSymmetric));
    }

    #[test]
    fn path_graph_components() {
        let mat = BitMatrix::from_rows(&[[0u8, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]]);
        assert_eq!(partition_of(&StandardForm::Matrix(mat), 4).unwrap(), vec![2, 1, 1]);
    }

    #[test]
    fn small_field_vectors() {
        let one = generators(&StabilizerSpec::field(BitMatrix::identity(1)).unwrap()).unwrap();
        assert_eq!(entanglement_vector(&one).unwrap().counts, vec![3]);
        let b = BitMatrix::from_rows(&[[1u8, 1], [1, 0]]);
        let two = generators(&StabilizerSpec::field(b).unwrap()).unwrap();
        let v = entanglement_vector(&two).unwrap();
        assert_eq!(v.counts, vec![3, 2]);
        assert_eq!(v.total(), 5);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"partitions":[[1,1],[2]],"counts":[3,2]}"#
        );
    }
}
