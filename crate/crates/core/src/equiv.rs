//! Symplectic maps between sets and the field-core equivalence.
//!
//! A group or semigroup spec `(B′, R, A)` with `R = s·sᵗ` is the image of the
//! field spec with `B = s⁻¹·B′·s` under `f = [[s, A·(sᵗ)⁻¹], [0, (sᵗ)⁻¹]]`.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::construct::{column_space, generators, is_symplectic_matrix, ConstructError, GeneratorSet, SetKind, SpecError, StabilizerSpec};
use crate::gf2::{nullspace, BitMatrix, BitVec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivError {
    #[error("symmetrizer is alternating (zero diagonal) and has no factorization R = s·sᵗ")]
    NotExpressible,
    #[error("matrix must be symmetric and invertible")]
    BadForm,
    #[error("qubit counts differ: {a} vs {b}")]
    Dimension { a: usize, b: usize },
    #[error("map is not symplectic")]
    NotSymplectic,
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Spec(#[from] SpecError),
}

/// `f = [[s, t], [u, v]]` acting on `F₂^{2m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticMap {
    pub s: BitMatrix,
    pub t: BitMatrix,
    pub u: BitMatrix,
    pub v: BitMatrix,
}

impl SymplecticMap {
    pub fn identity(m: usize) -> Self {
        let (i, z) = (BitMatrix::identity(m), BitMatrix::zeros(m, m));
        Self { s: i.clone(), t: z.clone(), u: z, v: i }
    }

    pub fn from_matrix(f: &BitMatrix) -> Self {
        let [s, t, u, v] = f.blocks();
        Self { s, t, u, v }
    }

    pub fn m(&self) -> usize {
        self.s.rows()
    }

    pub fn matrix(&self) -> BitMatrix {
        BitMatrix::from_blocks(&self.s, &self.t, &self.u, &self.v).expect("m x m blocks")
    }

    pub fn is_symplectic(&self) -> bool {
        is_symplectic_matrix(&self.matrix())
    }

    pub fn inverse(&self) -> Option<Self> {
        self.matrix().inverse().ok().map(|f| Self::from_matrix(&f))
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self::from_matrix(&(&self.matrix() * &other.matrix()))
    }
}

impl Serialize for SymplecticMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SymplecticMap", 4)?;
        st.serialize_field("s", &self.s.to_rows())?;
        st.serialize_field("t", &self.t.to_rows())?;
        st.serialize_field("u", &self.u.to_rows())?;
        st.serialize_field("v", &self.v.to_rows())?;
        st.end()
    }
}

fn form(r: &BitMatrix, a: &BitVec, b: &BitVec) -> bool {
    a.dot(&r.mul_vec(b))
}

/// Invertible `s` with `sᵗ·s = R` for a symmetric invertible `R`.
///
/// Builds a basis orthonormal for `⟨a, b⟩ = aᵗRb`. When the orthogonal
/// complement of the vectors found so far is alternating, its hyperbolic
/// pair `(u, w)` is merged with the last basis vector `c` into the
/// orthonormal triple `c + u, c + w, c + u + w`. Only a fully alternating
/// `R` (zero diagonal) has no such basis.
pub fn gram_factor(r: &BitMatrix) -> Result<BitMatrix, EquivError> {
    if !r.is_symmetric() || !r.is_invertible() {
        return Err(EquivError::BadForm);
    }
    let m = r.rows();
    let diag = r.diag();
    let mut basis: Vec<BitVec> = Vec::with_capacity(m);
    while basis.len() < m {
        let complement = if basis.is_empty() {
            (0..m).map(|i| BitVec::unit(m, i)).collect()
        } else {
            let rows: Vec<BitVec> = basis.iter().map(|b| r.mul_vec(b)).collect();
            nullspace(&BitMatrix::from_row_vecs(&rows))
        };
        if let Some(w) = complement.iter().find(|w| diag.dot(w)) {
            basis.push(w.clone());
            continue;
        }
        let Some(c) = basis.pop() else {
            return Err(EquivError::NotExpressible);
        };
        let u = complement[0].clone();
        let w = complement.iter().find(|w| form(r, &u, w)).expect("complement is nondegenerate").clone();
        let mut cu = c.clone();
        cu.xor_assign(&u);
        let mut cw = c.clone();
        cw.xor_assign(&w);
        let mut cuw = cu.clone();
        cuw.xor_assign(&w);
        basis.extend([cu, cw, cuw]);
    }
    let p = BitMatrix::from_row_vecs(&basis);
    debug_assert!((&(&p * r) * &p.transpose()).is_identity());
    let h = p.inverse().expect("orthonormal basis is independent");
    Ok(h.transpose())
}

/// Applies `f` to every generator and recomputes standard forms.
pub fn transport(f: &SymplecticMap, gens: &GeneratorSet) -> Result<GeneratorSet, EquivError> {
    if f.m() != gens.m() {
        return Err(EquivError::Dimension { a: f.m(), b: gens.m() });
    }
    if !f.is_symplectic() {
        return Err(EquivError::NotSymplectic);
    }
    let fm = f.matrix();
    let moved = gens.generators().iter().map(|g| &fm * g).collect();
    Ok(GeneratorSet::from_generators(gens.m(), moved)?)
}

/// Whether the two sets have the same classes, ignoring order.
pub fn classes_equal(a: &GeneratorSet, b: &GeneratorSet) -> bool {
    if a.m() != b.m() || a.len() != b.len() {
        return false;
    }
    let mut counts: HashMap<BitMatrix, i64> = HashMap::new();
    for g in a.generators() {
        *counts.entry(column_space(g)).or_default() += 1;
    }
    for g in b.generators() {
        *counts.entry(column_space(g)).or_default() -= 1;
    }
    counts.values().all(|&c| c == 0)
}

/// `f = [[s, A·(sᵗ)⁻¹], [0, (sᵗ)⁻¹]]` with `s·sᵗ = R`.
pub fn lemma5_map(r: &BitMatrix, a: &BitMatrix) -> Result<SymplecticMap, EquivError> {
    let s = gram_factor(r)?.transpose();
    let st_inv = s.transpose().inverse().expect("s is invertible");
    let m = r.rows();
    Ok(SymplecticMap { t: a * &st_inv, s, u: BitMatrix::zeros(m, m), v: st_inv })
}

/// The field spec whose set maps onto `spec`'s set under the returned map.
pub fn field_core(spec: &StabilizerSpec) -> Result<(StabilizerSpec, SymplecticMap), EquivError> {
    if spec.kind() == SetKind::Field {
        return Ok((spec.clone(), SymplecticMap::identity(spec.m())));
    }
    let f = lemma5_map(spec.r(), spec.a())?;
    let s_inv = f.s.inverse().expect("s is invertible");
    let core = &(&s_inv * spec.b()) * &f.s;
    Ok((StabilizerSpec::field(core)?, f))
}

/// Result of comparing two specs through their field cores.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivVerdict {
    pub equivalent: bool,
    /// Map taking the first set onto the second, when one was found.
    pub map: Option<SymplecticMap>,
    /// Whether both specs share the same field core `B`.
    pub same_core: bool,
}

/// Tries `f = f_b·f_a⁻¹`, where `f_x` maps the field core of `x` onto `x`.
pub fn compare_specs(a: &StabilizerSpec, b: &StabilizerSpec) -> Result<EquivVerdict, EquivError> {
    if a.m() != b.m() {
        return Err(EquivError::Dimension { a: a.m(), b: b.m() });
    }
    let (core_a, f_a) = field_core(a)?;
    let (core_b, f_b) = field_core(b)?;
    let f = f_b.compose(&f_a.inverse().expect("symplectic maps are invertible"));
    let moved = transport(&f, &generators(a)?)?;
    let equivalent = classes_equal(&moved, &generators(b)?);
    Ok(EquivVerdict { equivalent, map: equivalent.then_some(f), same_core: core_a.b() == core_b.b() })
}
