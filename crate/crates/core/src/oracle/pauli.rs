use num_complex::Complex64;

use super::{ComplexMatrix, OracleError, MAX_NUMERIC_QUBITS};
use crate::gf2::BitVec;

/// Pauli label `a = (z; x)` on `m` qubits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliLabel {
    pub z: BitVec,
    pub x: BitVec,
}

impl PauliLabel {
    pub fn new(z: BitVec, x: BitVec) -> Self {
        assert_eq!(z.len(), x.len(), "z and x parts must have the same length");
        Self { z, x }
    }

    /// Splits a length-`2m` vector into its `z` (first `m`) and `x` halves.
    pub fn from_vector(a: &BitVec) -> Self {
        assert!(a.len().is_multiple_of(2), "label vector must have even length");
        let m = a.len() / 2;
        Self {
            z: BitVec::from_bits((0..m).map(|i| a.get(i))),
            x: BitVec::from_bits((m..2 * m).map(|i| a.get(i))),
        }
    }

    pub fn identity(m: usize) -> Self {
        Self { z: BitVec::zeros(m), x: BitVec::zeros(m) }
    }

    pub fn m(&self) -> usize {
        self.z.len()
    }

    pub fn to_vector(&self) -> BitVec {
        BitVec::from_bits(self.z.iter().chain(self.x.iter()))
    }

    pub(crate) fn monomial(&self) -> Monomial {
        let m = self.m();
        let mut xmask = 0usize;
        let mut zmask = 0usize;
        for k in 0..m {
            let bit = 1usize << (m - 1 - k);
            if self.x.get(k) {
                xmask |= bit;
            }
            if self.z.get(k) {
                zmask |= bit;
            }
        }
        Monomial { xmask, zmask, y_count: (xmask & zmask).count_ones() }
    }
}

/// `Σ_k (a^z_k b^x_k + a^x_k b^z_k) mod 2`.
pub fn symplectic_product(a: &PauliLabel, b: &PauliLabel) -> bool {
    assert_eq!(a.m(), b.m(), "labels on different qubit counts");
    a.z.dot(&b.x) ^ a.x.dot(&b.z)
}

/// A Pauli operator as a signed permutation: `P|b⟩ = phase(b)·|b ⊕ xmask⟩`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Monomial {
    xmask: usize,
    zmask: usize,
    y_count: u32,
}

const NEG_I_POWERS: [Complex64; 4] = [
    Complex64::new(1.0, 0.0),
    Complex64::new(0.0, -1.0),
    Complex64::new(-1.0, 0.0),
    Complex64::new(0.0, 1.0),
];

impl Monomial {
    /// Row index and coefficient of column `b`.
    #[inline]
    pub(crate) fn column(&self, b: usize) -> (usize, Complex64) {
        let row = b ^ self.xmask;
        let sign = (self.zmask & row).count_ones() & 1;
        (row, NEG_I_POWERS[((self.y_count + 2 * sign) % 4) as usize])
    }

    pub(crate) fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
        for (b, &val) in v.iter().enumerate() {
            let (row, c) = self.column(b);
            out[row] = c * val;
        }
        out
    }
}

/// Tensor product over sites of `(−i)^{z_k x_k} Z^{z_k} X^{x_k}`; site 0 is
/// the most significant factor.
pub fn pauli_matrix(a: &PauliLabel) -> Result<ComplexMatrix, OracleError> {
    let m = a.m();
    if m > MAX_NUMERIC_QUBITS {
        return Err(OracleError::TooLarge { m, max: MAX_NUMERIC_QUBITS });
    }
    let d = 1usize << m;
    let mono = a.monomial();
    let mut out = ComplexMatrix::zeros(d, d);
    for b in 0..d {
        let (row, c) = mono.column(b);
        out[(row, b)] = c;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(z: &[u8], x: &[u8]) -> PauliLabel {
        PauliLabel::new(BitVec::from_u8s(z), BitVec::from_u8s(x))
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_qubit_paulis() {
        let z = pauli_matrix(&label(&[1], &[0])).unwrap();
        assert_eq!(z, ComplexMatrix::from_row_slice(2, 2, &[c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]));
        let y = pauli_matrix(&label(&[1], &[1])).unwrap();
        assert_eq!(y, ComplexMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]));
        let x = pauli_matrix(&label(&[0], &[1])).unwrap();
        assert_eq!(x, ComplexMatrix::from_row_slice(2, 2, &[c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]));
        assert_eq!(pauli_matrix(&PauliLabel::identity(3)).unwrap(), ComplexMatrix::identity(8, 8));
    }

    #[test]
    fn site_zero_is_most_significant() {
        // Z on site 0 of two qubits = Z ⊗ I
        let p = pauli_matrix(&label(&[1, 0], &[0, 0])).unwrap();
        let diag: Vec<f64> = (0..4).map(|i| p[(i, i)].re).collect();
        assert_eq!(diag, vec![1.0, 1.0, -1.0, -1.0]);
    }

    #[test]
    fn products() {
        assert!(symplectic_product(&label(&[1], &[0]), &label(&[0], &[1])));
        let a = label(&[1, 0], &[0, 1]);
        assert!(!symplectic_product(&a, &a));
        assert!(!symplectic_product(&label(&[1, 0], &[0, 0]), &label(&[1, 0], &[0, 1])));
    }

    #[test]
    fn size_cap() {
        assert_eq!(
            pauli_matrix(&PauliLabel::identity(7)),
            Err(OracleError::TooLarge { m: 7, max: MAX_NUMERIC_QUBITS })
        );
    }

    #[test]
    fn vector_round_trip() {
        let a = BitVec::from_u8s(&[1, 0, 1, 0, 1, 1]);
        let l = PauliLabel::from_vector(&a);
        assert_eq!(l.z, BitVec::from_u8s(&[1, 0, 1]));
        assert_eq!(l.to_vector(), a);
    }
}
