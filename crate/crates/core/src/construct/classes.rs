use serde::Serialize;

use super::{is_symplectic_matrix, GeneratorSet};
use crate::gf2::BitMatrix;

/// Largest `m` for which the class partition is checked by enumerating all
/// `4^m` Pauli labels.
pub const ENUMERATION_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartitionMethod {
    /// Every label `G_j·c` was enumerated and counted.
    Enumeration,
    /// Pairwise trivial intersection of column spaces via standard forms.
    Pairwise,
    /// `G_j = C^j·G_0` for a symplectic `C`, so checking `G_0` against every
    /// other class suffices.
    Orbit,
}

/// Outcome of checking that the `d + 1` classes partition the nonidentity
/// Pauli labels into commuting subsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    /// Every generator has rank `m`.
    pub full_rank: bool,
    /// Labels within each class pairwise have symplectic product 0.
    pub isotropic: bool,
    /// Distinct classes share no nonzero label.
    pub disjoint: bool,
    /// Number of distinct nonzero labels covered (exact under enumeration,
    /// implied by `disjoint` otherwise).
    pub covered: u64,
    /// `4^m − 1`.
    pub expected: u64,
    pub method: PartitionMethod,
}

impl ClassReport {
    pub fn ok(&self) -> bool {
        self.full_rank && self.isotropic && self.disjoint && self.covered == self.expected
    }
}

/// Symplectic product of two labels packed as `z` bits `0..m`, `x` bits `m..2m`.
#[inline]
pub fn label_product(a: u64, b: u64, m: usize) -> bool {
    let mask = (1u64 << m) - 1;
    let (az, ax) = (a & mask, a >> m);
    let (bz, bx) = (b & mask, b >> m);
    ((az & bx) ^ (ax & bz)).count_ones() & 1 == 1
}

/// Canonical key of the column space of `g`: the reduced row echelon form of `gᵗ`.
pub fn column_space(g: &BitMatrix) -> BitMatrix {
    g.transpose().rref()
}

fn column_labels(g: &BitMatrix) -> Vec<u64> {
    (0..g.cols()).map(|j| g.column(j).to_u64()).collect()
}

/// Checks the class partition. For `m <= ENUMERATION_LIMIT` the labels are
/// enumerated; above it the orbit argument is used when the stabilizer is
/// supplied, and pairwise standard-form differences otherwise.
pub fn class_partition_check(gens: &GeneratorSet, stabilizer: Option<&BitMatrix>) -> ClassReport {
    let m = gens.m();
    let expected = (1u64 << (2 * m)) - 1;
    let full_rank = gens.generators().iter().all(|g| g.rank() == m);
    let isotropic = gens.generators().iter().all(|g| {
        let cols = column_labels(g);
        cols.iter().enumerate().all(|(i, &a)| cols[i + 1..].iter().all(|&b| !label_product(a, b, m)))
    });
    if !full_rank {
        return ClassReport { full_rank, isotropic, disjoint: false, covered: 0, expected, method: PartitionMethod::Pairwise };
    }

    if m <= ENUMERATION_LIMIT {
        let mut seen = vec![0u64; (1usize << (2 * m)).div_ceil(64)];
        let mut covered = 0u64;
        let mut disjoint = true;
        for g in gens.generators() {
            let cols = column_labels(g);
            let mut label = 0u64;
            for k in 1u64..(1 << m) {
                label ^= cols[k.trailing_zeros() as usize];
                let (w, b) = ((label / 64) as usize, label % 64);
                if seen[w] >> b & 1 == 1 {
                    disjoint = false;
                } else {
                    seen[w] |= 1 << b;
                    covered += 1;
                }
            }
        }
        return ClassReport { full_rank, isotropic, disjoint, covered, expected, method: PartitionMethod::Enumeration };
    }

    let forms = gens.standard_forms();
    let (disjoint, method) = match stabilizer {
        Some(c) => {
            let g0 = &gens.generators()[0];
            let orbit = is_symplectic_matrix(c)
                && gens.generators().windows(2).all(|w| (c * &w[0]) == w[1])
                && forms.first().is_some_and(|f| f.matrix().is_none())
                && forms[1..].iter().all(|f| f.matrix().is_some())
                && column_space(&(c * gens.generators().last().expect("nonempty"))) == column_space(g0);
            (orbit, PartitionMethod::Orbit)
        }
        None => {
            let mats: Vec<Option<&BitMatrix>> = forms.iter().map(|f| f.matrix()).collect();
            let z_count = mats.iter().filter(|m| m.is_none()).count();
            let ok = z_count <= 1
                && mats.iter().enumerate().all(|(i, a)| {
                    mats[i + 1..].iter().all(|b| match (a, b) {
                        (Some(a), Some(b)) => (*a + *b).is_invertible(),
                        _ => true,
                    })
                });
            (ok, PartitionMethod::Pairwise)
        }
    };
    let classes = gens.len() as u64;
    let covered = if disjoint { classes * ((1u64 << m) - 1) } else { 0 };
    ClassReport { full_rank, isotropic, disjoint, covered, expected, method }
}
