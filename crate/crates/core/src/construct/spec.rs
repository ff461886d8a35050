use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2::{char_poly, BitMatrix};
use crate::poly::{fibonacci_index, Poly2};

/// Largest supported qubit count.
pub const MAX_QUBITS: usize = 16;

/// Which of the three stabilizer families a spec belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Field,
    Group,
    Semigroup,
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetKind::Field => "field",
            SetKind::Group => "group",
            SetKind::Semigroup => "semigroup",
        })
    }
}

impl std::str::FromStr for SetKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "field" => Ok(SetKind::Field),
            "group" => Ok(SetKind::Group),
            "semigroup" => Ok(SetKind::Semigroup),
            other => Err(format!("unknown kind {other:?} (expected field, group or semigroup)")),
        }
    }
}

/// A violated spec condition. The message names the condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("malformed spec JSON: {0}")]
    Json(String),
    #[error("qubit count m = {0} outside 1..={MAX_QUBITS}")]
    QubitCount(usize),
    #[error("matrix {name} is {rows}x{cols}, expected {m}x{m}")]
    Shape { name: &'static str, rows: usize, cols: usize, m: usize },
    #[error("matrix {name} has an entry other than 0 or 1")]
    NotBinary { name: &'static str },
    #[error("matrix {name} is not symmetric")]
    NotSymmetric { name: &'static str },
    #[error("matrix {name} is not invertible")]
    NotInvertible { name: &'static str },
    #[error("B·R is not symmetric")]
    ProductNotSymmetric,
    #[error("characteristic polynomial of B ({poly}) is reducible")]
    ReducibleCharPoly { poly: Poly2 },
    #[error("characteristic polynomial of B ({poly}) has Fibonacci index {found}, expected d+1 = {expected}")]
    FibonacciIndex { poly: Poly2, found: u64, expected: u64 },
    #[error("{kind} specs fix {name} to {forced}, got a different matrix")]
    NotForced { kind: SetKind, name: &'static str, forced: &'static str },
}

/// The recipe for one complete cyclic set: the kind plus `B`, `R` and `A`.
///
/// Construction validates every condition of the kind, so a value of this
/// type always yields a cyclic stabilizer of order `2^m + 1`:
///
/// * `B` invertible, char poly irreducible with Fibonacci index `2^m + 1`;
///   `B` symmetric for field specs,
/// * `R` symmetric and invertible with `B·R` symmetric (`R = I` for field),
/// * `A` symmetric (`A = 0` unless semigroup).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StabilizerSpec {
    kind: SetKind,
    m: usize,
    b: BitMatrix,
    r: BitMatrix,
    a: BitMatrix,
}

impl fmt::Debug for StabilizerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StabilizerSpec")
            .field("kind", &self.kind)
            .field("m", &self.m)
            .field("b", &self.b)
            .field("r", &self.r)
            .field("a", &self.a)
            .finish()
    }
}

impl StabilizerSpec {
    pub fn field(b: BitMatrix) -> Result<Self, SpecError> {
        let m = b.rows();
        Self::new(SetKind::Field, b, BitMatrix::identity(m), BitMatrix::zeros(m, m))
    }

    pub fn group(b: BitMatrix, r: BitMatrix) -> Result<Self, SpecError> {
        let m = b.rows();
        Self::new(SetKind::Group, b, r, BitMatrix::zeros(m, m))
    }

    pub fn semigroup(b: BitMatrix, r: BitMatrix, a: BitMatrix) -> Result<Self, SpecError> {
        Self::new(SetKind::Semigroup, b, r, a)
    }

    /// Validates every condition for `kind` and builds the spec.
    pub fn new(kind: SetKind, b: BitMatrix, r: BitMatrix, a: BitMatrix) -> Result<Self, SpecError> {
        let m = b.rows();
        if m == 0 || m > MAX_QUBITS {
            return Err(SpecError::QubitCount(m));
        }
        for (name, x) in [("B", &b), ("R", &r), ("A", &a)] {
            if x.rows() != m || x.cols() != m {
                return Err(SpecError::Shape { name, rows: x.rows(), cols: x.cols(), m });
            }
        }
        match kind {
            SetKind::Field => {
                if !r.is_identity() {
                    return Err(SpecError::NotForced { kind, name: "R", forced: "the identity" });
                }
                if !a.is_zero() {
                    return Err(SpecError::NotForced { kind, name: "A", forced: "zero" });
                }
            }
            SetKind::Group => {
                if !a.is_zero() {
                    return Err(SpecError::NotForced { kind, name: "A", forced: "zero" });
                }
            }
            SetKind::Semigroup => {}
        }
        if kind == SetKind::Field && !b.is_symmetric() {
            return Err(SpecError::NotSymmetric { name: "B" });
        }
        check_b(&b)?;
        if !r.is_symmetric() {
            return Err(SpecError::NotSymmetric { name: "R" });
        }
        if !r.is_invertible() {
            return Err(SpecError::NotInvertible { name: "R" });
        }
        if !(&b * &r).is_symmetric() {
            return Err(SpecError::ProductNotSymmetric);
        }
        if !a.is_symmetric() {
            return Err(SpecError::NotSymmetric { name: "A" });
        }
        Ok(Self { kind, m, b, r, a })
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    /// Number of qubits.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Hilbert-space dimension `2^m`.
    pub fn d(&self) -> u64 {
        1 << self.m
    }

    pub fn b(&self) -> &BitMatrix {
        &self.b
    }

    pub fn r(&self) -> &BitMatrix {
        &self.r
    }

    pub fn a(&self) -> &BitMatrix {
        &self.a
    }

    /// Conjugates every matrix by `p` (`X → P·X·Pᵗ`); for a permutation `p`
    /// this relabels the qubits.
    pub fn relabeled(&self, p: &BitMatrix) -> Result<Self, SpecError> {
        let pt = p.transpose();
        let conj = |x: &BitMatrix| &(p * x) * &pt;
        Self::new(self.kind, conj(&self.b), conj(&self.r), conj(&self.a))
    }

    /// Canonical JSON (`{"m":..,"kind":..,"B":..[,"R":..][,"A":..]}`).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SpecJson::from(self)).expect("spec serialization cannot fail")
    }

    /// Parses and validates a JSON spec.
    pub fn from_json(text: &str) -> Result<Self, SpecError> {
        let raw: SpecJson = serde_json::from_str(text).map_err(|e| SpecError::Json(e.to_string()))?;
        Self::try_from(raw)
    }
}

/// Conditions on `B` shared by all kinds: invertible, irreducible char poly
/// with Fibonacci index `2^m + 1`.
pub fn check_b(b: &BitMatrix) -> Result<(), SpecError> {
    let m = b.rows();
    if !b.is_invertible() {
        return Err(SpecError::NotInvertible { name: "B" });
    }
    let poly = char_poly(b);
    if !poly.is_irreducible() {
        return Err(SpecError::ReducibleCharPoly { poly });
    }
    let expected = (1u64 << m) + 1;
    let found = fibonacci_index(&poly).expect("irreducible of degree <= 16");
    if found != expected {
        return Err(SpecError::FibonacciIndex { poly, found, expected });
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    m: usize,
    kind: SetKind,
    #[serde(rename = "B")]
    b: Vec<Vec<u8>>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    r: Option<Vec<Vec<u8>>>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    a: Option<Vec<Vec<u8>>>,
}

impl From<&StabilizerSpec> for SpecJson {
    fn from(s: &StabilizerSpec) -> Self {
        SpecJson {
            m: s.m,
            kind: s.kind,
            b: s.b.to_rows(),
            r: (s.kind != SetKind::Field).then(|| s.r.to_rows()),
            a: (s.kind == SetKind::Semigroup).then(|| s.a.to_rows()),
        }
    }
}

fn matrix_from_json(name: &'static str, rows: &[Vec<u8>], m: usize) -> Result<BitMatrix, SpecError> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.len() != m || rows.iter().any(|r| r.len() != m) {
        return Err(SpecError::Shape { name, rows: rows.len(), cols, m });
    }
    if rows.iter().flatten().any(|&v| v > 1) {
        return Err(SpecError::NotBinary { name });
    }
    Ok(BitMatrix::from_rows(rows))
}

impl TryFrom<SpecJson> for StabilizerSpec {
    type Error = SpecError;

    fn try_from(raw: SpecJson) -> Result<Self, SpecError> {
        let m = raw.m;
        if m == 0 || m > MAX_QUBITS {
            return Err(SpecError::QubitCount(m));
        }
        let b = matrix_from_json("B", &raw.b, m)?;
        let r = match &raw.r {
            Some(rows) => matrix_from_json("R", rows, m)?,
            None => BitMatrix::identity(m),
        };
        let a = match &raw.a {
            Some(rows) => matrix_from_json("A", rows, m)?,
            None => BitMatrix::zeros(m, m),
        };
        StabilizerSpec::new(raw.kind, b, r, a)
    }
}

impl Serialize for StabilizerSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SpecJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StabilizerSpec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SpecJson::deserialize(deserializer)?;
        StabilizerSpec::try_from(raw).map_err(serde::de::Error::custom)
    }
}
