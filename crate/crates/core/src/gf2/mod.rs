//! Exact linear algebra over the two-element field.

mod bitvec;
mod charpoly;
mod matrix;
mod solve;

use thiserror::Error;

pub use bitvec::BitVec;
pub use charpoly::char_poly;
pub use matrix::BitMatrix;
pub use solve::{in_span, nullspace, solve_affine, AffineSolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{op}: incompatible dimensions {lhs:?} and {rhs:?}")]
    DimensionMismatch { op: &'static str, lhs: (usize, usize), rhs: (usize, usize) },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible over F2")]
    NotInvertible,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix text: {0}")]
    Parse(String),
}

/// Connected components of the graph on `0..n` with an edge `{i, k}`
/// (`i != k`) whenever `a[i][k]` or `a[k][i]` is set. The diagonal is
/// ignored. Components are sorted internally and ordered by smallest member.
pub fn offdiag_components(a: &BitMatrix) -> Vec<Vec<usize>> {
    assert!(a.is_square(), "offdiag_components needs a square matrix");
    let n = a.rows();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for k in a.row(i).ones().filter(|&k| k != i) {
            let (ri, rk) = (find(&mut parent, i), find(&mut parent, k));
            if ri != rk {
                parent[ri.max(rk)] = ri.min(rk);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(i);
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_examples() {
        assert_eq!(offdiag_components(&BitMatrix::zeros(3, 3)), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(offdiag_components(&BitMatrix::from_rows(&[[0u8, 1], [1, 0]])), vec![vec![0, 1]]);
        assert_eq!(offdiag_components(&BitMatrix::identity(3)), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn components_use_either_direction() {
        let a = BitMatrix::from_rows(&[[0u8, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]]);
        assert_eq!(offdiag_components(&a), vec![vec![0, 2, 3], vec![1]]);
    }
}
