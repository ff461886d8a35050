use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{build_stabilizer, ConstructError, StabilizerSpec};
use crate::gf2::BitMatrix;

/// Normalized representative of one class generator.
///
/// A generator `(U; L)` with invertible `L` is normalized to `(U·L⁻¹; I)` and
/// recorded by `M = U·L⁻¹`. A generator `(U; 0)` with invertible `U` spans
/// the same space as `(I; 0)`, the computational (all-Z) basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StandardForm {
    ZBasis,
    Matrix(BitMatrix),
}

impl StandardForm {
    /// Standard form of a `2m × m` generator, if it has one.
    pub fn of(generator: &BitMatrix) -> Option<Self> {
        let m = generator.cols();
        if generator.rows() != 2 * m {
            return None;
        }
        let upper = generator.submatrix(0, 0, m, m);
        let lower = generator.submatrix(m, 0, m, m);
        if let Ok(inv) = lower.inverse() {
            return Some(Self::Matrix(&upper * &inv));
        }
        (lower.is_zero() && upper.is_invertible()).then_some(Self::ZBasis)
    }

    pub fn matrix(&self) -> Option<&BitMatrix> {
        match self {
            Self::ZBasis => None,
            Self::Matrix(m) => Some(m),
        }
    }

    /// The normalized generator `(I; 0)` or `(M; I)`.
    pub fn generator(&self, m: usize) -> BitMatrix {
        match self {
            Self::ZBasis => BitMatrix::identity(m).vstack(&BitMatrix::zeros(m, m)),
            Self::Matrix(mat) => mat.vstack(&BitMatrix::identity(m)),
        }
        .expect("m x m blocks")
    }
}

/// The `d + 1` class generators `G_0..G_d` of a set, with their standard forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    m: usize,
    generators: Vec<BitMatrix>,
    standard_forms: Vec<StandardForm>,
}

impl GeneratorSet {
    /// Wraps arbitrary `2m × m` generators, computing their standard forms.
    pub fn from_generators(m: usize, generators: Vec<BitMatrix>) -> Result<Self, ConstructError> {
        let standard_forms = generators
            .iter()
            .enumerate()
            .map(|(index, g)| {
                if g.rows() != 2 * m || g.cols() != m {
                    return Err(ConstructError::GeneratorShape { index, rows: g.rows(), cols: g.cols(), m });
                }
                StandardForm::of(g).ok_or(ConstructError::NoStandardForm { index })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { m, generators, standard_forms })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> u64 {
        1 << self.m
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[BitMatrix] {
        &self.generators
    }

    pub fn standard_forms(&self) -> &[StandardForm] {
        &self.standard_forms
    }

    /// Every standard-form matrix is symmetric and all forms are distinct.
    pub fn standard_forms_valid(&self) -> bool {
        let symmetric = self.standard_forms.iter().all(|f| f.matrix().is_none_or(BitMatrix::is_symmetric));
        let distinct: HashSet<&StandardForm> = self.standard_forms.iter().collect();
        symmetric && distinct.len() == self.standard_forms.len()
    }
}

/// `G_j = C^j·G_0` for `j = 0..=d` with `G_0 = (I; 0)`.
///
/// For `1 ≤ j ≤ d` the lower block `R⁻¹·F_j(B)` is invertible for every valid
/// spec; a singular one is reported as an error.
pub fn generators(spec: &StabilizerSpec) -> Result<GeneratorSet, ConstructError> {
    let m = spec.m();
    let c = build_stabilizer(spec);
    let g0 = BitMatrix::identity(m).vstack(&BitMatrix::zeros(m, m)).expect("m x m blocks");
    let d = spec.d() as usize;
    let mut generators = Vec::with_capacity(d + 1);
    let mut standard_forms = Vec::with_capacity(d + 1);
    generators.push(g0);
    standard_forms.push(StandardForm::ZBasis);
    for j in 1..=d {
        let g = &c * &generators[j - 1];
        let upper = g.submatrix(0, 0, m, m);
        let lower = g.submatrix(m, 0, m, m);
        let inv = lower.inverse().map_err(|_| ConstructError::SingularLowerBlock { index: j })?;
        standard_forms.push(StandardForm::Matrix(&upper * &inv));
        generators.push(g);
    }
    Ok(GeneratorSet { m, generators, standard_forms })
}

/// Whether `{M_1, …, M_d}` is a copy of `GF(2^m)`: exactly `2^m` distinct
/// matrices containing `0` and `I`, closed under sum and product.
pub fn field_closure_check(gens: &GeneratorSet) -> bool {
    let Some(forms) = gens
        .standard_forms()
        .iter()
        .skip(1)
        .map(|f| f.matrix().cloned())
        .collect::<Option<Vec<BitMatrix>>>()
    else {
        return false;
    };
    let m = gens.m();
    let set: HashSet<&BitMatrix> = forms.iter().collect();
    if set.len() != 1 << m {
        return false;
    }
    if !set.contains(&BitMatrix::zeros(m, m)) || !set.contains(&BitMatrix::identity(m)) {
        return false;
    }
    forms.iter().all(|x| forms.iter().all(|y| set.contains(&(x + y)) && set.contains(&(x * y))))
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FormJson {
    Tag(String),
    Matrix(Vec<Vec<u8>>),
}

#[derive(Serialize, Deserialize)]
struct GeneratorSetJson {
    m: usize,
    generators: Vec<Vec<Vec<u8>>>,
    #[serde(default)]
    standard_forms: Option<Vec<FormJson>>,
}

impl Serialize for GeneratorSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GeneratorSetJson {
            m: self.m,
            generators: self.generators.iter().map(BitMatrix::to_rows).collect(),
            standard_forms: Some(
                self.standard_forms
                    .iter()
                    .map(|f| match f {
                        StandardForm::ZBasis => FormJson::Tag("z_basis".to_owned()),
                        StandardForm::Matrix(m) => FormJson::Matrix(m.to_rows()),
                    })
                    .collect(),
            ),
        }
        .serialize(serializer)
    }
}

/// Standard forms are recomputed from the generators; any provided in the
/// input must agree with them.
impl<'de> Deserialize<'de> for GeneratorSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = GeneratorSetJson::deserialize(deserializer)?;
        let gens = raw
            .generators
            .iter()
            .map(|rows| {
                if rows.iter().flatten().any(|&v| v > 1) {
                    return Err(D::Error::custom("generator entries must be 0 or 1"));
                }
                if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
                    return Err(D::Error::custom("ragged generator matrix"));
                }
                Ok(BitMatrix::from_rows(rows))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let set = GeneratorSet::from_generators(raw.m, gens).map_err(D::Error::custom)?;
        if let Some(forms) = raw.standard_forms {
            let given: Vec<StandardForm> = forms
                .into_iter()
                .map(|f| match f {
                    FormJson::Tag(t) if t == "z_basis" => Ok(StandardForm::ZBasis),
                    FormJson::Tag(t) => Err(D::Error::custom(format!("unknown standard form tag {t:?}"))),
                    FormJson::Matrix(rows) => Ok(StandardForm::Matrix(BitMatrix::from_rows(&rows))),
                })
                .collect::<Result<_, _>>()?;
            if given != set.standard_forms {
                return Err(D::Error::custom("standard forms disagree with generators"));
            }
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m2_b() -> BitMatrix {
        BitMatrix::from_rows(&[[1u8, 1], [1, 0]])
    }

    #[test]
    fn field_set_named_forms() {
        let gens = generators(&StabilizerSpec::field(m2_b()).unwrap()).unwrap();
        let d = 4;
        assert_eq!(gens.len(), d + 1);
        assert_eq!(gens.standard_forms()[0], StandardForm::ZBasis);
        assert_eq!(gens.standard_forms()[d / 2], StandardForm::Matrix(BitMatrix::identity(2)));
        assert_eq!(gens.standard_forms()[d], StandardForm::Matrix(BitMatrix::zeros(2, 2)));
        assert!(gens.standard_forms_valid());
    }

    #[test]
    fn two_qubit_field_forms_are_gf4() {
        let b = m2_b();
        let gens = generators(&StabilizerSpec::field(b.clone()).unwrap()).unwrap();
        let forms: HashSet<BitMatrix> = gens.standard_forms()[1..].iter().map(|f| f.matrix().unwrap().clone()).collect();
        let expected: HashSet<BitMatrix> =
            [BitMatrix::zeros(2, 2), BitMatrix::identity(2), b.clone(), &b + &BitMatrix::identity(2)].into();
        assert_eq!(forms, expected);
        assert!(field_closure_check(&gens));
    }

    #[test]
    fn single_qubit_closure() {
        let gens = generators(&StabilizerSpec::field(BitMatrix::identity(1)).unwrap()).unwrap();
        assert!(field_closure_check(&gens));
    }

    #[test]
    fn standard_form_of_special_generators() {
        let m = 2;
        let z = StandardForm::ZBasis.generator(m);
        assert_eq!(StandardForm::of(&z), Some(StandardForm::ZBasis));
        let s = BitMatrix::from_rows(&[[0u8, 1], [1, 1]]);
        let zs = s.vstack(&BitMatrix::zeros(2, 2)).unwrap();
        assert_eq!(StandardForm::of(&zs), Some(StandardForm::ZBasis));
        let bad = BitMatrix::from_rows(&[[1u8, 0], [0, 0], [1, 0], [0, 0]]);
        assert_eq!(StandardForm::of(&bad), None);
        assert!(matches!(
            GeneratorSet::from_generators(2, vec![bad]),
            Err(ConstructError::NoStandardForm { index: 0 })
        ));
    }

    #[test]
    fn json_round_trip() {
        let gens = generators(&StabilizerSpec::field(m2_b()).unwrap()).unwrap();
        let text = serde_json::to_string(&gens).unwrap();
        assert!(text.contains("\"z_basis\""));
        let back: GeneratorSet = serde_json::from_str(&text).unwrap();
        assert_eq!(back, gens);
    }
}
