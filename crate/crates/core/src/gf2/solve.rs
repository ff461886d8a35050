use super::{BitMatrix, BitVec, LinalgError};

/// Complete solution set of `coeff · x = rhs` over F₂.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    /// The solution with every free variable set to zero.
    pub particular: BitVec,
    /// Basis of the null space of `coeff`, one vector per free column in
    /// ascending column order.
    pub nullspace_basis: Vec<BitVec>,
}

impl AffineSolution {
    pub fn nullity(&self) -> usize {
        self.nullspace_basis.len()
    }

    /// Every solution, `2^nullity` of them. Intended for small systems.
    pub fn enumerate(&self) -> Vec<BitVec> {
        let k = self.nullity();
        assert!(k < 24, "refusing to enumerate 2^{k} solutions");
        (0u32..1 << k)
            .map(|mask| {
                let mut x = self.particular.clone();
                for (i, v) in self.nullspace_basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        x.xor_assign(v);
                    }
                }
                x
            })
            .collect()
    }
}

/// Solves `coeff · x = rhs`, returning a particular solution and a null-space
/// basis, or [`LinalgError::NoSolution`] when `rhs` is outside the column
/// space.
pub fn solve_affine(coeff: &BitMatrix, rhs: &BitVec) -> Result<AffineSolution, LinalgError> {
    if coeff.rows() != rhs.len() {
        return Err(LinalgError::DimensionMismatch {
            op: "solve_affine",
            lhs: (coeff.rows(), coeff.cols()),
            rhs: (rhs.len(), 1),
        });
    }
    let n = coeff.cols();
    let rhs_col = BitMatrix::from_columns(std::slice::from_ref(rhs));
    let mut aug = coeff.hstack(&rhs_col)?;
    let pivots = aug.row_reduce(true);
    if pivots.last() == Some(&n) {
        return Err(LinalgError::NoSolution);
    }

    let mut particular = BitVec::zeros(n);
    for (r, &c) in pivots.iter().enumerate() {
        if aug.get(r, n) {
            particular.set(c, true);
        }
    }

    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let nullspace_basis = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitVec::unit(n, f);
            for (r, &c) in pivots.iter().enumerate() {
                if aug.get(r, f) {
                    v.set(c, true);
                }
            }
            v
        })
        .collect();
    Ok(AffineSolution { particular, nullspace_basis })
}

/// Basis of the null space of `coeff`.
pub fn nullspace(coeff: &BitMatrix) -> Vec<BitVec> {
    solve_affine(coeff, &BitVec::zeros(coeff.rows()))
        .expect("homogeneous systems are always solvable")
        .nullspace_basis
}

/// Whether `v` lies in the span of `vectors`.
pub fn in_span(vectors: &[BitVec], v: &BitVec) -> bool {
    if vectors.is_empty() {
        return v.is_zero();
    }
    solve_affine(&BitMatrix::from_columns(vectors), v).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_system() {
        let sol = solve_affine(&BitMatrix::identity(2), &BitVec::from_u8s(&[1, 0])).unwrap();
        assert_eq!(sol.particular, BitVec::from_u8s(&[1, 0]));
        assert!(sol.nullspace_basis.is_empty());
    }

    #[test]
    fn zero_system() {
        let sol = solve_affine(&BitMatrix::zeros(2, 2), &BitVec::zeros(2)).unwrap();
        assert_eq!(sol.particular, BitVec::zeros(2));
        assert_eq!(sol.nullspace_basis, vec![BitVec::unit(2, 0), BitVec::unit(2, 1)]);
    }

    #[test]
    fn single_equation() {
        let coeff = BitMatrix::from_rows(&[[1u8, 1]]);
        let sol = solve_affine(&coeff, &BitVec::from_u8s(&[1])).unwrap();
        assert_eq!(sol.particular, BitVec::from_u8s(&[1, 0]));
        assert_eq!(sol.nullspace_basis, vec![BitVec::from_u8s(&[1, 1])]);
    }

    #[test]
    fn inconsistent_system() {
        assert_eq!(
            solve_affine(&BitMatrix::zeros(2, 2), &BitVec::from_u8s(&[0, 1])),
            Err(LinalgError::NoSolution)
        );
    }

    #[test]
    fn rhs_length_checked() {
        assert!(matches!(
            solve_affine(&BitMatrix::identity(2), &BitVec::zeros(3)),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn span_membership() {
        let a = BitVec::from_u8s(&[1, 1, 0]);
        let b = BitVec::from_u8s(&[0, 1, 1]);
        assert!(in_span(&[a.clone(), b.clone()], &BitVec::from_u8s(&[1, 0, 1])));
        assert!(!in_span(&[a, b], &BitVec::from_u8s(&[1, 0, 0])));
        assert!(in_span(&[], &BitVec::zeros(3)));
    }
}
