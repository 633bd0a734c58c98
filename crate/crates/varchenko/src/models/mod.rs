//! Closed-form builders for the model catalogue: the cyclic family `C_n`,
//! the dihedral family `D_n`, the tetrahedron, cube and octahedron, and the
//! square/pentagonal pyramids. Each model bundles its q-Varchenko matrix,
//! the congruence pipeline that is claimed to diagonalize it over `Z[q]`,
//! the claimed diagonal, the region labelling, and exact arrangement
//! geometry for the oracle.

pub mod cyclic;
pub mod dihedral;
pub mod platonic;
pub mod pyramid;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::geometry::{Arrangement, GeometryError};
use crate::matrix::{MatrixError, PolyMat};
use crate::poly::PolyZ;

type Rat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("unknown model `{0}` (see `list`)")]
    UnknownModel(String),
    #[error("model `{0}` requires --n")]
    MissingN(String),
    #[error("model `{0}` does not take --n")]
    UnexpectedN(String),
    #[error("n must be at least 3 (got {0})")]
    NTooSmall(usize),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelId {
    Cyclic(usize),
    Dihedral(usize),
    Tetrahedron,
    Cube,
    Octahedron,
    Pyramid4,
    Pyramid5,
}

impl ModelId {
    pub fn parse(name: &str, n: Option<usize>) -> Result<Self, ModelError> {
        let fixed = |id: ModelId| {
            if n.is_some() {
                Err(ModelError::UnexpectedN(name.to_owned()))
            } else {
                Ok(id)
            }
        };
        match name.to_ascii_lowercase().as_str() {
            "cyclic" => Ok(ModelId::Cyclic(
                n.ok_or_else(|| ModelError::MissingN(name.to_owned()))?,
            )),
            "dihedral" => Ok(ModelId::Dihedral(
                n.ok_or_else(|| ModelError::MissingN(name.to_owned()))?,
            )),
            "tetrahedron" => fixed(ModelId::Tetrahedron),
            "cube" => fixed(ModelId::Cube),
            "octahedron" => fixed(ModelId::Octahedron),
            "pyramid4" => fixed(ModelId::Pyramid4),
            "pyramid5" => fixed(ModelId::Pyramid5),
            other => Err(ModelError::UnknownModel(other.to_owned())),
        }
    }

    /// The family names accepted by `ModelId::parse`.
    pub fn family_names() -> &'static [&'static str] {
        &[
            "cyclic",
            "dihedral",
            "tetrahedron",
            "cube",
            "octahedron",
            "pyramid4",
            "pyramid5",
        ]
    }

    /// Default instances exercised by `verify --all`.
    pub fn catalogue() -> Vec<ModelId> {
        let mut out = Vec::new();
        for n in 3..=8 {
            out.push(ModelId::Cyclic(n));
        }
        for n in 3..=6 {
            out.push(ModelId::Dihedral(n));
        }
        out.extend([
            ModelId::Tetrahedron,
            ModelId::Cube,
            ModelId::Octahedron,
            ModelId::Pyramid4,
            ModelId::Pyramid5,
        ]);
        out
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelId::Cyclic(n) => write!(f, "cyclic(n={n})"),
            ModelId::Dihedral(n) => write!(f, "dihedral(n={n})"),
            ModelId::Tetrahedron => write!(f, "tetrahedron"),
            ModelId::Cube => write!(f, "cube"),
            ModelId::Octahedron => write!(f, "octahedron"),
            ModelId::Pyramid4 => write!(f, "pyramid4"),
            ModelId::Pyramid5 => write!(f, "pyramid5"),
        }
    }
}

/// A fully assembled model: matrix, pipeline, claim, labelling, geometry.
#[derive(Debug, Clone)]
pub struct ModelSpec {
    pub id: ModelId,
    pub size: usize,
    pub varchenko: PolyMat,
    /// Left congruence factors, outermost first: the applied transform is
    /// `(L_1 ... L_k) V (R_1 ... R_m)`.
    pub left_pipeline: Vec<PolyMat>,
    pub right_pipeline: Vec<PolyMat>,
    pub claimed_snf: Vec<PolyZ>,
    /// Separating sets from the base region, 1-based hyperplane indices in
    /// the order of `arrangement.hyperplanes`.
    pub region_labels: Vec<BTreeSet<usize>>,
    pub arrangement: Arrangement,
    pub base_point: Vec<Rat>,
}

impl ModelSpec {
    pub fn build(id: ModelId) -> Result<ModelSpec, ModelError> {
        match id {
            ModelId::Cyclic(n) => cyclic::model(n),
            ModelId::Dihedral(n) => dihedral::model(n),
            ModelId::Tetrahedron => platonic::tetrahedron(),
            ModelId::Cube => platonic::cube(),
            ModelId::Octahedron => platonic::octahedron(),
            ModelId::Pyramid4 => pyramid::square(),
            ModelId::Pyramid5 => pyramid::pentagonal(),
        }
    }

    /// Region labels as 0-based index sets for the geometry oracle.
    pub fn labels_zero_based(&self) -> Vec<BTreeSet<usize>> {
        self.region_labels
            .iter()
            .map(|s| s.iter().map(|i| i - 1).collect())
            .collect()
    }

    /// Manifest: identity, size, and claimed diagonal as polynomial text.
    pub fn manifest(&self) -> Value {
        json!({
            "model": self.id.to_string(),
            "size": self.size,
            "hyperplanes": self.arrangement.hyperplanes.len(),
            "claimed_snf": self.claimed_snf.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// The structured exponent vectors used by the cyclic block words:
/// constant runs, arithmetic ascents/descents by steps of two, and the
/// symmetric "folded" vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuredVector {
    /// `(q^r, ..., q^r)` of the given length.
    Constant { exponent: i64, len: usize },
    /// `(q^r, q^{r-2}, q^{r-4}, ...)` of the given length.
    Descending { start: i64, len: usize },
    /// `(q^r, q^{r+2}, q^{r+4}, ...)` of the given length.
    Ascending { start: i64, len: usize },
    /// Palindrome of length `n - j + i + 1` (for `i <= j`): flanks step by
    /// two from `q^{j-i}` up to `q^{i+j-2}`, around a middle run of
    /// `q^{i+j}` of length `n + 1 - i - j`.
    Folded { i: usize, j: usize, n: usize },
}

impl StructuredVector {
    pub fn len(&self) -> usize {
        match *self {
            StructuredVector::Constant { len, .. }
            | StructuredVector::Descending { len, .. }
            | StructuredVector::Ascending { len, .. } => len,
            StructuredVector::Folded { i, j, n } => n - j + i + 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn exponents(&self) -> Vec<i64> {
        match *self {
            StructuredVector::Constant { exponent, len } => vec![exponent; len],
            StructuredVector::Descending { start, len } => {
                (0..len).map(|k| start - 2 * k as i64).collect()
            }
            StructuredVector::Ascending { start, len } => {
                (0..len).map(|k| start + 2 * k as i64).collect()
            }
            StructuredVector::Folded { i, j, n } => {
                let (i, j, n) = (i as i64, j as i64, n as i64);
                let mut out = Vec::new();
                let mut e = j - i;
                while e < i + j {
                    out.push(e);
                    e += 2;
                }
                out.extend(std::iter::repeat(i + j).take((n + 1 - i - j).max(0) as usize));
                let mut e = i + j - 2;
                while e >= j - i {
                    out.push(e);
                    e -= 2;
                }
                out
            }
        }
    }

    /// Monomial expansion; `None` when an exponent is negative.
    pub fn monomials(&self) -> Option<Vec<PolyZ>> {
        self.exponents()
            .iter()
            .map(|&e| usize::try_from(e).ok().map(PolyZ::q_pow))
            .collect()
    }
}

/// `q^k` as a matrix entry.
pub(crate) fn q(k: usize) -> PolyZ {
    PolyZ::q_pow(k)
}

/// `-q^k`.
pub(crate) fn neg_q(k: usize) -> PolyZ {
    PolyZ::monomial(-BigInt::one(), k)
}

/// `1 - q^2`.
pub(crate) fn t_unit() -> PolyZ {
    PolyZ::one_minus_q_sq()
}

/// Sparse polynomial literal from `(coefficient, degree)` pairs.
pub(crate) fn poly(pairs: &[(i64, usize)]) -> PolyZ {
    let deg = pairs.iter().map(|&(_, d)| d).max().unwrap_or(0);
    let mut coeffs = vec![0i64; deg + 1];
    for &(c, d) in pairs {
        coeffs[d] += c;
    }
    PolyZ::from_i64(&coeffs)
}

/// Rational unit directions in strict counter-clockwise order approximating
/// the vertex angles `2*pi*k/n` of a regular n-gon, with exactly antipodal
/// pairs when `n` is even. Only the cyclic order and the antipodal pairs
/// matter for the region combinatorics: the directions are exact points on
/// the unit circle, so no three tangent lines can ever meet.
pub(crate) fn polygon_directions(n: usize) -> Vec<(Rat, Rat)> {
    const DENOM: i64 = 10_000;
    let from_half_tangent = |t: Rat| -> (Rat, Rat) {
        let one = Rat::one();
        let t2 = &t * &t;
        let d = &one + &t2;
        ((&one - &t2) / d.clone(), (Rat::from(BigInt::from(2)) * t) / d)
    };
    let rounded = |k: usize| -> Rat {
        let theta_half = std::f64::consts::PI * k as f64 / n as f64;
        let t = theta_half.tan();
        Rat::new(BigInt::from((t * DENOM as f64).round() as i64), BigInt::from(DENOM))
    };
    if n % 2 == 0 {
        let half: Vec<(Rat, Rat)> = (0..n / 2).map(|k| from_half_tangent(rounded(k))).collect();
        let mut out = half.clone();
        out.extend(half.into_iter().map(|(x, y)| (-x, -y)));
        out
    } else {
        (0..n).map(|k| from_half_tangent(rounded(k))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_model_names() {
        assert_eq!(
            ModelId::parse("cyclic", Some(5)).unwrap(),
            ModelId::Cyclic(5)
        );
        assert_eq!(ModelId::parse("CUBE", None).unwrap(), ModelId::Cube);
        assert!(matches!(
            ModelId::parse("cyclic", None),
            Err(ModelError::MissingN(_))
        ));
        assert!(matches!(
            ModelId::parse("cube", Some(3)),
            Err(ModelError::UnexpectedN(_))
        ));
        assert!(matches!(
            ModelId::parse("icosahedron", None),
            Err(ModelError::UnknownModel(_))
        ));
    }

    #[test]
    fn structured_vector_lengths() {
        for n in 3..=9usize {
            let p = (n + 1) / 2;
            for i in 1..=p {
                for j in i..=p {
                    let sv = StructuredVector::Folded { i, j, n };
                    assert_eq!(sv.exponents().len(), n - j + i + 1, "n={n} i={i} j={j}");
                    assert!(sv.monomials().is_some());
                }
            }
        }
        assert_eq!(
            StructuredVector::Descending { start: 6, len: 3 }.exponents(),
            vec![6, 4, 2]
        );
        assert_eq!(
            StructuredVector::Ascending { start: 1, len: 3 }.exponents(),
            vec![1, 3, 5]
        );
        assert_eq!(
            StructuredVector::Constant { exponent: 4, len: 2 }.exponents(),
            vec![4, 4]
        );
        // descents can reach negative exponents; those have no monomial form
        let neg = StructuredVector::Descending { start: 1, len: 3 };
        assert_eq!(neg.exponents(), vec![1, -1, -3]);
        assert!(neg.monomials().is_none());
    }

    #[test]
    fn polygon_directions_are_unit_and_antipodal() {
        for n in 3..=12usize {
            let dirs = polygon_directions(n);
            assert_eq!(dirs.len(), n);
            for (x, y) in &dirs {
                assert!((x * x + y * y).is_one(), "direction off the circle");
            }
            if n % 2 == 0 {
                for k in 0..n / 2 {
                    let (x, y) = &dirs[k];
                    let (nx, ny) = &dirs[k + n / 2];
                    assert_eq!(&-x.clone(), nx);
                    assert_eq!(&-y.clone(), ny);
                }
            }
            // all distinct
            for a in 0..n {
                for b in a + 1..n {
                    assert_ne!(dirs[a], dirs[b]);
                }
            }
        }
    }
}
