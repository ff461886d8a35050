use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::pauli::{symplectic_product, Monomial, PauliLabel};
use super::{ComplexMatrix, OracleError, MAX_NUMERIC_QUBITS};
use crate::construct::GeneratorSet;
use crate::gf2::BitMatrix;

fn generator_labels(gen: &BitMatrix) -> Result<Vec<PauliLabel>, OracleError> {
    let m = gen.cols();
    if gen.rows() != 2 * m {
        return Err(OracleError::Shape { rows: gen.rows(), cols: gen.cols() });
    }
    if m > MAX_NUMERIC_QUBITS {
        return Err(OracleError::TooLarge { m, max: MAX_NUMERIC_QUBITS });
    }
    if gen.rank() != m {
        return Err(OracleError::Dependent);
    }
    let labels: Vec<PauliLabel> = (0..m).map(|j| PauliLabel::from_vector(&gen.column(j))).collect();
    for (i, a) in labels.iter().enumerate() {
        if labels[i + 1..].iter().any(|b| symplectic_product(a, b)) {
            return Err(OracleError::NonCommuting);
        }
    }
    Ok(labels)
}

/// Common eigenbasis of the class generated by the columns of `gen`.
///
/// Column `k` is the joint eigenvector with sign `+1` for generator `i`
/// when bit `m − 1 − i` of `k` is clear. Each column is read off the rank-1
/// projector `Π_i (I + s_i P_i)/2` at its largest-norm column, normalized,
/// with the first nonzero component made real positive.
pub fn class_eigenbasis(gen: &BitMatrix) -> Result<ComplexMatrix, OracleError> {
    let labels = generator_labels(gen)?;
    let m = labels.len();
    let d = 1usize << m;
    let monos: Vec<Monomial> = labels.iter().map(PauliLabel::monomial).collect();
    let mut out = ComplexMatrix::zeros(d, d);
    for k in 0..d {
        let signs: Vec<f64> = (0..m).map(|i| if k >> (m - 1 - i) & 1 == 0 { 1.0 } else { -1.0 }).collect();
        let mut best: Option<(f64, Vec<Complex64>)> = None;
        for c in 0..d {
            let mut v = vec![Complex64::new(0.0, 0.0); d];
            v[c] = Complex64::new(1.0, 0.0);
            for (mono, &s) in monos.iter().zip(&signs) {
                let pv = mono.apply(&v);
                for (vi, pi) in v.iter_mut().zip(pv) {
                    *vi = (*vi + pi * s) * 0.5;
                }
            }
            let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>();
            if best.as_ref().is_none_or(|(n, _)| norm > *n * (1.0 + 1e-12)) {
                best = Some((norm, v));
            }
        }
        let (norm, mut v) = best.expect("d >= 1");
        let scale = norm.sqrt();
        let first = v.iter().copied().find(|z| z.norm() > 1e-9 * scale).expect("projector is nonzero");
        let phase = first.conj() / first.norm();
        for (i, z) in v.iter_mut().enumerate() {
            let mut w = *z * phase / scale;
            if w.re == 0.0 {
                w.re = 0.0;
            }
            if w.im == 0.0 {
                w.im = 0.0;
            }
            out[(i, k)] = w;
        }
    }
    Ok(out)
}

/// The `d + 1` eigenbases of a set, one per class.
#[derive(Debug, Clone, PartialEq)]
pub struct MubSet {
    pub d: usize,
    pub bases: Vec<ComplexMatrix>,
}

impl MubSet {
    pub fn from_generators(gens: &GeneratorSet) -> Result<Self, OracleError> {
        let bases = gens.generators().par_iter().map(class_eigenbasis).collect::<Result<Vec<_>, _>>()?;
        Ok(Self { d: 1 << gens.m(), bases })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MubCheck {
    /// Largest `| |⟨ψ|φ⟩|² − 1/d |` over vectors from distinct bases.
    pub max_deviation: f64,
    /// Largest entry of `|BᴴB − I|` over the bases.
    pub max_unitarity_error: f64,
    pub pass: bool,
}

pub fn verify_mub(set: &MubSet, tol: f64) -> MubCheck {
    let inv_d = 1.0 / set.d as f64;
    let n = set.bases.len();
    let max_unitarity_error = set
        .bases
        .par_iter()
        .map(|b| {
            let g = b.adjoint() * b;
            let mut worst = 0.0f64;
            for i in 0..g.nrows() {
                for j in 0..g.ncols() {
                    let target = if i == j { 1.0 } else { 0.0 };
                    worst = worst.max((g[(i, j)] - Complex64::new(target, 0.0)).norm());
                }
            }
            worst
        })
        .reduce(|| 0.0, f64::max);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let max_deviation = pairs
        .par_iter()
        .map(|&(i, j)| {
            let g = set.bases[i].adjoint() * &set.bases[j];
            g.iter().map(|z| (z.norm_sqr() - inv_d).abs()).fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max);
    MubCheck { max_deviation, max_unitarity_error, pass: max_deviation <= tol && max_unitarity_error <= tol }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{generators, StabilizerSpec};

    fn gen(rows: &[[u8; 1]]) -> BitMatrix {
        BitMatrix::from_rows(rows)
    }

    #[test]
    fn single_qubit_bases() {
        let z = class_eigenbasis(&gen(&[[1], [0]])).unwrap();
        assert_eq!(z, ComplexMatrix::identity(2, 2));
        let x = class_eigenbasis(&gen(&[[0], [1]])).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for (i, j, want) in [(0, 0, h), (1, 0, h), (0, 1, h), (1, 1, -h)] {
            assert!((x[(i, j)] - Complex64::new(want, 0.0)).norm() < 1e-15);
        }
        let y = class_eigenbasis(&gen(&[[1], [1]])).unwrap();
        assert!((y[(1, 0)] - Complex64::new(0.0, h)).norm() < 1e-15);
        assert!((y[(1, 1)] - Complex64::new(0.0, -h)).norm() < 1e-15);
    }

    #[test]
    fn rejects_bad_generators() {
        let dep = BitMatrix::from_rows(&[[1u8, 1], [0, 0], [0, 0], [0, 0]]);
        assert_eq!(class_eigenbasis(&dep), Err(OracleError::Dependent));
        // Z1 and X1 anticommute
        let anti = BitMatrix::from_rows(&[[1u8, 0], [0, 0], [0, 1], [0, 0]]);
        assert_eq!(class_eigenbasis(&anti), Err(OracleError::NonCommuting));
    }

    #[test]
    fn single_qubit_set_is_unbiased() {
        let gens = generators(&StabilizerSpec::field(BitMatrix::identity(1)).unwrap()).unwrap();
        let set = MubSet::from_generators(&gens).unwrap();
        assert_eq!(set.bases.len(), 3);
        let check = verify_mub(&set, 1e-12);
        assert!(check.pass, "{check:?}");
    }

    #[test]
    fn duplicate_basis_fails() {
        let z = ComplexMatrix::identity(4, 4);
        let check = verify_mub(&MubSet { d: 4, bases: vec![z.clone(), z] }, 1e-10);
        assert!(!check.pass);
        assert!((check.max_deviation - 0.75).abs() < 1e-15);
    }

    #[test]
    fn two_qubit_field_set_is_unbiased() {
        let b = BitMatrix::from_rows(&[[1u8, 1], [1, 0]]);
        let gens = generators(&StabilizerSpec::field(b).unwrap()).unwrap();
        let check = verify_mub(&MubSet::from_generators(&gens).unwrap(), 1e-10);
        assert!(check.pass, "{check:?}");
    }
}
