//! The geometry oracle: exact rational hyperplane arrangements, region
//! enumeration by sign vectors with Fourier-Motzkin feasibility, separating
//! sets, distance enumerators, q-Varchenko matrices built from first
//! principles, and the intersection poset with its Moebius function.
//!
//! Everything here works over `BigRational`; no closed-form model data is
//! consulted, so these routines can cross-check the builders in `models`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::matrix::PolyMat;
use crate::poly::PolyZ;

type Rat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("hyperplane normal must not be the zero vector")]
    ZeroNormal,
    #[error("hyperplane {0} and {1} describe the same locus")]
    DuplicateHyperplanes(usize, usize),
    #[error("hyperplane dimension {found} does not match ambient dimension {expected}")]
    WrongDimension { expected: usize, found: usize },
    #[error("sign vectors have different lengths ({0} vs {1})")]
    SignLengthMismatch(usize, usize),
    #[error("point lies on hyperplane {0}; regions are open")]
    PointOnHyperplane(usize),
    #[error("label {{{0}}} does not match any region")]
    UnmatchedLabel(String),
    #[error("label {{{0}}} appears more than once")]
    DuplicateLabel(String),
    #[error("label list has {labels} entries but the arrangement has {regions} regions")]
    LabelCountMismatch { labels: usize, regions: usize },
    #[error("ordering is not a permutation of the region set")]
    NotAPermutation,
    #[error("too many hyperplanes for sign-vector enumeration ({0} > {1})")]
    TooManyHyperplanes(usize, usize),
    #[error("cannot parse arrangement: {0}")]
    Parse(String),
}

/// Hard cap on sign-vector enumeration.
pub const MAX_HYPERPLANES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rat>, offset: Rat) -> Result<Self, GeometryError> {
        if normal.iter().all(|c| c.is_zero()) {
            return Err(GeometryError::ZeroNormal);
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn from_i64(normal: &[i64], offset: i64) -> Self {
        Hyperplane {
            normal: normal.iter().map(|&c| Rat::from(BigInt::from(c))).collect(),
            offset: Rat::from(BigInt::from(offset)),
        }
    }

    /// `normal . x - offset`.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = -self.offset.clone();
        for (n, x) in self.normal.iter().zip(point) {
            acc += n * x;
        }
        acc
    }

    /// Scale-invariant key: primitive integer vector `(normal, -offset)`
    /// with positive leading entry. Two hyperplanes share a locus exactly
    /// when their keys match.
    fn canonical_key(&self) -> (Vec<BigInt>, BigInt) {
        let mut denom_lcm = BigInt::one();
        for c in self.normal.iter().chain(std::iter::once(&self.offset)) {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .normal
            .iter()
            .map(|c| (c * Rat::from(denom_lcm.clone())).to_integer())
            .collect();
        let off = (&self.offset * Rat::from(denom_lcm.clone())).to_integer();
        let mut g = off.abs();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            g = BigInt::one();
        }
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
        let mut off = off / &g;
        let flip = ints
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_negative());
        if flip {
            for c in ints.iter_mut() {
                *c = -&*c;
            }
            off = -off;
        }
        (ints, off)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

/// An open region, identified by its sign vector and carrying an exact
/// interior witness point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub sign_vector: Vec<Side>,
    pub witness: Vec<Rat>,
}

impl Region {
    /// Hamming distance of sign vectors: the number of separating
    /// hyperplanes.
    pub fn sep_count(&self, other: &Region) -> Result<usize, GeometryError> {
        if self.sign_vector.len() != other.sign_vector.len() {
            return Err(GeometryError::SignLengthMismatch(
                self.sign_vector.len(),
                other.sign_vector.len(),
            ));
        }
        Ok(self
            .sign_vector
            .iter()
            .zip(&other.sign_vector)
            .filter(|(a, b)| a != b)
            .count())
    }

    /// Indices where the sign vectors differ.
    pub fn sep_set(&self, other: &Region) -> Result<BTreeSet<usize>, GeometryError> {
        if self.sign_vector.len() != other.sign_vector.len() {
            return Err(GeometryError::SignLengthMismatch(
                self.sign_vector.len(),
                other.sign_vector.len(),
            ));
        }
        Ok(self
            .sign_vector
            .iter()
            .zip(&other.sign_vector)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, _)| i)
            .collect())
    }
}

#[derive(Debug, Clone)]
pub struct Arrangement {
    pub dim: usize,
    pub hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self, GeometryError> {
        let mut seen: HashMap<(Vec<BigInt>, BigInt), usize> = HashMap::new();
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.normal.len() != dim {
                return Err(GeometryError::WrongDimension {
                    expected: dim,
                    found: h.normal.len(),
                });
            }
            if h.normal.iter().all(|c| c.is_zero()) {
                return Err(GeometryError::ZeroNormal);
            }
            if let Some(&j) = seen.get(&h.canonical_key()) {
                return Err(GeometryError::DuplicateHyperplanes(j, i));
            }
            seen.insert(h.canonical_key(), i);
        }
        Ok(Arrangement { dim, hyperplanes })
    }

    /// Every nonempty open cell, one `Region` per feasible sign vector.
    /// Candidates are tested by exact Fourier-Motzkin elimination; the
    /// witness comes from midpoint back-substitution.
    pub fn regions(&self) -> Result<Vec<Region>, GeometryError> {
        let k = self.hyperplanes.len();
        if k > MAX_HYPERPLANES {
            return Err(GeometryError::TooManyHyperplanes(k, MAX_HYPERPLANES));
        }
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << k) {
            let signs: Vec<Side> = (0..k)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Side::Plus
                    } else {
                        Side::Minus
                    }
                })
                .collect();
            let constraints: Vec<Constraint> = self
                .hyperplanes
                .iter()
                .zip(&signs)
                .map(|(h, s)| {
                    let flip = matches!(s, Side::Minus);
                    let coeffs = h
                        .normal
                        .iter()
                        .map(|c| if flip { -c.clone() } else { c.clone() })
                        .collect();
                    let rhs = if flip {
                        -h.offset.clone()
                    } else {
                        h.offset.clone()
                    };
                    Constraint { coeffs, rhs }
                })
                .collect();
            if let Some(witness) = solve_strict(&constraints, self.dim) {
                debug_assert!(self
                    .hyperplanes
                    .iter()
                    .zip(&signs)
                    .all(|(h, s)| match s {
                        Side::Plus => h.eval(&witness).is_positive(),
                        Side::Minus => h.eval(&witness).is_negative(),
                    }));
                out.push(Region {
                    sign_vector: signs,
                    witness,
                });
            }
        }
        Ok(out)
    }

    /// Sign vector of the region containing `point` (must avoid every
    /// hyperplane).
    pub fn region_containing(&self, point: &[Rat]) -> Result<Region, GeometryError> {
        let mut signs = Vec::with_capacity(self.hyperplanes.len());
        for (i, h) in self.hyperplanes.iter().enumerate() {
            let v = h.eval(point);
            if v.is_zero() {
                return Err(GeometryError::PointOnHyperplane(i));
            }
            signs.push(if v.is_positive() {
                Side::Plus
            } else {
                Side::Minus
            });
        }
        Ok(Region {
            sign_vector: signs,
            witness: point.to_vec(),
        })
    }

    /// The q-Varchenko matrix `(q^{#sep(R_i, R_j)})` over the given region
    /// ordering, which must be a permutation of `regions()`.
    pub fn varchenko_matrix(&self, ordering: &[Region]) -> Result<PolyMat, GeometryError> {
        let all = self.regions()?;
        let canon =
            |r: &Region| -> Vec<Side> { r.sign_vector.clone() };
        let mut expected: HashSet<Vec<Side>> = all.iter().map(canon).collect();
        for r in ordering {
            if !expected.remove(&r.sign_vector) {
                return Err(GeometryError::NotAPermutation);
            }
        }
        if !expected.is_empty() {
            return Err(GeometryError::NotAPermutation);
        }
        let n = ordering.len();
        let mut m = PolyMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let d = ordering[i].sep_count(&ordering[j])?;
                m.set(i, j, PolyZ::q_pow(d));
            }
        }
        Ok(m)
    }

    /// Distance enumerator from `base`: the generating polynomial (in `t`)
    /// of sign-vector distances over all regions.
    pub fn distance_enumerator(&self, base: &Region) -> Result<PolyZ, GeometryError> {
        let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
        for r in self.regions()? {
            *counts.entry(base.sep_count(&r)?).or_insert(0) += 1;
        }
        let deg = counts.keys().max().copied().unwrap_or(0);
        let mut coeffs = vec![0i64; deg + 1];
        for (d, c) in counts {
            coeffs[d] = c;
        }
        Ok(PolyZ::from_i64(&coeffs))
    }

    /// Order the regions so that region `i` has separating set `labels[i]`
    /// (0-based hyperplane indices) from the region containing
    /// `base_point`. Every label must match exactly one region.
    pub fn match_ordering(
        &self,
        base_point: &[Rat],
        labels: &[BTreeSet<usize>],
    ) -> Result<Vec<Region>, GeometryError> {
        let base = self.region_containing(base_point)?;
        let regions = self.regions()?;
        if labels.len() != regions.len() {
            return Err(GeometryError::LabelCountMismatch {
                labels: labels.len(),
                regions: regions.len(),
            });
        }
        let mut by_sep: HashMap<Vec<usize>, Region> = regions
            .into_iter()
            .map(|r| {
                let key = base.sep_set(&r).expect("same arrangement").into_iter().collect();
                (key, r)
            })
            .collect();
        let mut out = Vec::with_capacity(labels.len());
        let mut used: HashSet<Vec<usize>> = HashSet::new();
        for label in labels {
            let key: Vec<usize> = label.iter().copied().collect();
            let text = || {
                label
                    .iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            if !used.insert(key.clone()) {
                return Err(GeometryError::DuplicateLabel(text()));
            }
            let region = by_sep
                .remove(&key)
                .ok_or_else(|| GeometryError::UnmatchedLabel(text()))?;
            out.push(region);
        }
        Ok(out)
    }

    /// Deleted arrangement: drop hyperplane `k`.
    pub fn deletion(&self, k: usize) -> Result<Arrangement, GeometryError> {
        let hs = self
            .hyperplanes
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, h)| h.clone())
            .collect();
        Arrangement::new(self.dim, hs)
    }

    /// Restricted arrangement: traces of the other hyperplanes inside
    /// hyperplane `k`, as an arrangement of the `(dim - 1)`-dimensional
    /// affine space, deduplicated.
    pub fn restriction(&self, k: usize) -> Result<Arrangement, GeometryError> {
        let h = &self.hyperplanes[k];
        let (point, basis) = affine_solution(&[h.clone()], self.dim)
            .expect("a hyperplane is nonempty");
        let mut traces: Vec<Hyperplane> = Vec::new();
        let mut seen: HashSet<(Vec<BigInt>, BigInt)> = HashSet::new();
        for (i, other) in self.hyperplanes.iter().enumerate() {
            if i == k {
                continue;
            }
            let coeffs: Vec<Rat> = basis
                .iter()
                .map(|b| dot(&other.normal, b))
                .collect();
            if coeffs.iter().all(|c| c.is_zero()) {
                // parallel (empty trace) since the loci differ
                continue;
            }
            let offset = &other.offset - dot(&other.normal, &point);
            let trace = Hyperplane {
                normal: coeffs,
                offset,
            };
            if seen.insert(trace.canonical_key()) {
                traces.push(trace);
            }
        }
        Arrangement::new(self.dim - 1, traces)
    }

    /// All distinct nonempty intersections of hyperplane subsets ordered by
    /// reverse containment, with Moebius values from the defining
    /// recursion.
    pub fn intersection_poset(&self) -> IntersectionPoset {
        let k = self.hyperplanes.len();
        // flats of codimension r come from subsets of size <= dim
        let mut flats: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        let mut stack: Vec<Vec<usize>> = vec![vec![]];
        while let Some(subset) = stack.pop() {
            let hs: Vec<Hyperplane> = subset
                .iter()
                .map(|&i| self.hyperplanes[i].clone())
                .collect();
            let Some((point, basis)) = affine_solution(&hs, self.dim) else {
                continue;
            };
            let codim = self.dim - basis.len();
            let closure: BTreeSet<usize> = (0..k)
                .filter(|&i| {
                    let h = &self.hyperplanes[i];
                    h.eval(&point).is_zero() && basis.iter().all(|b| dot(&h.normal, b).is_zero())
                })
                .collect();
            flats.entry(closure).or_insert(codim);
            if subset.len() < self.dim {
                let start = subset.last().map_or(0, |&l| l + 1);
                for next in start..k {
                    let mut bigger = subset.clone();
                    bigger.push(next);
                    stack.push(bigger);
                }
            }
        }
        let mut elements: Vec<Flat> = flats
            .into_iter()
            .map(|(closure, codim)| Flat {
                hyperplanes: closure,
                codim,
                mobius: 0,
            })
            .collect();
        elements.sort_by(|a, b| (a.codim, &a.hyperplanes).cmp(&(b.codim, &b.hyperplanes)));
        // mu(bottom) = 1, then sum over proper lower intervals
        for i in 0..elements.len() {
            let mut mu = if elements[i].hyperplanes.is_empty() { 1 } else { 0 };
            for j in 0..i {
                if elements[j].codim < elements[i].codim
                    && elements[j].hyperplanes.is_subset(&elements[i].hyperplanes)
                {
                    mu -= elements[j].mobius;
                }
            }
            if !elements[i].hyperplanes.is_empty() {
                elements[i].mobius = mu;
            } else {
                elements[i].mobius = 1;
            }
        }
        IntersectionPoset { flats: elements }
    }

    /// JSON form `{"dim": d, "hyperplanes": [{"normal": [...], "offset": "1"}]}`
    /// with rationals as strings.
    pub fn to_json(&self) -> Value {
        let hs: Vec<Value> = self
            .hyperplanes
            .iter()
            .map(|h| {
                json!({
                    "normal": h.normal.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "offset": h.offset.to_string(),
                })
            })
            .collect();
        json!({ "dim": self.dim, "hyperplanes": hs })
    }

    pub fn from_json(v: &Value) -> Result<Arrangement, GeometryError> {
        let obj = v
            .as_object()
            .ok_or_else(|| GeometryError::Parse("expected a JSON object".into()))?;
        let dim = obj
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| GeometryError::Parse("missing numeric `dim`".into()))? as usize;
        let hs = obj
            .get("hyperplanes")
            .and_then(Value::as_array)
            .ok_or_else(|| GeometryError::Parse("missing `hyperplanes` array".into()))?;
        let parse_rat = |s: &Value, what: &str| -> Result<Rat, GeometryError> {
            let text = match s {
                Value::String(t) => t.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(GeometryError::Parse(format!("{what} is not a rational"))),
            };
            text.parse::<Rat>()
                .map_err(|e| GeometryError::Parse(format!("{what}: {e}")))
        };
        let mut hyperplanes = Vec::with_capacity(hs.len());
        for (i, h) in hs.iter().enumerate() {
            let normal = h
                .get("normal")
                .and_then(Value::as_array)
                .ok_or_else(|| GeometryError::Parse(format!("hyperplane {i}: missing normal")))?
                .iter()
                .map(|c| parse_rat(c, &format!("hyperplane {i} normal entry")))
                .collect::<Result<Vec<_>, _>>()?;
            let offset = parse_rat(
                h.get("offset")
                    .ok_or_else(|| GeometryError::Parse(format!("hyperplane {i}: missing offset")))?,
                &format!("hyperplane {i} offset"),
            )?;
            hyperplanes.push(Hyperplane::new(normal, offset)?);
        }
        Arrangement::new(dim, hyperplanes)
    }
}

/// A flat of the intersection poset, identified by the set of hyperplanes
/// containing it.
#[derive(Debug, Clone)]
pub struct Flat {
    pub hyperplanes: BTreeSet<usize>,
    pub codim: usize,
    pub mobius: i64,
}

#[derive(Debug, Clone)]
pub struct IntersectionPoset {
    pub flats: Vec<Flat>,
}

impl IntersectionPoset {
    /// Coefficient of `t^i` is the i-th Betti number of the complexified
    /// complement: `sum |mu(x)| t^{codim(x)}`.
    pub fn poincare_polynomial(&self) -> PolyZ {
        let deg = self.flats.iter().map(|f| f.codim).max().unwrap_or(0);
        let mut coeffs = vec![0i64; deg + 1];
        for f in &self.flats {
            coeffs[f.codim] += f.mobius.abs();
        }
        PolyZ::from_i64(&coeffs)
    }
}

/// Strict constraint `coeffs . x > rhs`.
#[derive(Clone)]
struct Constraint {
    coeffs: Vec<Rat>,
    rhs: Rat,
}

impl Constraint {
    fn canonical(&self) -> (Vec<BigInt>, BigInt) {
        let mut denom_lcm = BigInt::one();
        for c in self.coeffs.iter().chain(std::iter::once(&self.rhs)) {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let scale = Rat::from(denom_lcm);
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * &scale).to_integer())
            .collect();
        let mut rhs = (&self.rhs * &scale).to_integer();
        let mut g = rhs.abs();
        for c in &ints {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in ints.iter_mut() {
                *c = &*c / &g;
            }
            rhs = rhs / &g;
        }
        (ints, rhs)
    }
}

/// Fourier-Motzkin elimination over exact rationals for strict systems.
/// Returns an interior witness on feasibility.
fn solve_strict(constraints: &[Constraint], dim: usize) -> Option<Vec<Rat>> {
    if dim == 0 {
        return constraints
            .iter()
            .all(|c| c.rhs.is_negative())
            .then(Vec::new);
    }
    let var = dim - 1;
    let mut zeros: Vec<Constraint> = Vec::new();
    // lower: x_var > (rhs - a.x') / c with c > 0; upper likewise with c < 0
    let mut lowers: Vec<Constraint> = Vec::new();
    let mut uppers: Vec<Constraint> = Vec::new();
    for c in constraints {
        let lead = &c.coeffs[var];
        if lead.is_zero() {
            zeros.push(Constraint {
                coeffs: c.coeffs[..var].to_vec(),
                rhs: c.rhs.clone(),
            });
        } else if lead.is_positive() {
            lowers.push(c.clone());
        } else {
            uppers.push(c.clone());
        }
    }
    let mut reduced = zeros;
    let mut seen: HashSet<(Vec<BigInt>, BigInt)> = reduced.iter().map(|c| c.canonical()).collect();
    for lo in &lowers {
        for up in &uppers {
            // (c_l a_u - c_u a_l) . x' > c_l b_u - c_u b_l
            let cl = &lo.coeffs[var];
            let cu = &up.coeffs[var];
            let coeffs: Vec<Rat> = (0..var)
                .map(|i| cl * &up.coeffs[i] - cu * &lo.coeffs[i])
                .collect();
            let rhs = cl * &up.rhs - cu * &lo.rhs;
            let derived = Constraint { coeffs, rhs };
            if derived.coeffs.iter().all(|c| c.is_zero()) {
                if !derived.rhs.is_negative() {
                    return None;
                }
                continue;
            }
            if seen.insert(derived.canonical()) {
                reduced.push(derived);
            }
        }
    }
    let partial = solve_strict(&reduced, var)?;
    let bound_at = |c: &Constraint| -> Rat {
        let mut acc = c.rhs.clone();
        for i in 0..var {
            acc -= &c.coeffs[i] * &partial[i];
        }
        acc / &c.coeffs[var]
    };
    let lower = lowers.iter().map(&bound_at).max();
    let upper = uppers.iter().map(&bound_at).min();
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let value = match (lower, upper) {
        (Some(lo), Some(up)) => {
            debug_assert!(lo < up, "elimination guarantees an open interval");
            (lo + up) / Rat::from(BigInt::from(2))
        }
        (Some(lo), None) => lo + half,
        (None, Some(up)) => up - half,
        (None, None) => Rat::zero(),
    };
    let mut witness = partial;
    witness.push(value);
    Some(witness)
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solve the affine system defined by a set of hyperplanes. Returns a
/// particular point plus a basis of the direction space, or `None` when the
/// intersection is empty.
fn affine_solution(hs: &[Hyperplane], dim: usize) -> Option<(Vec<Rat>, Vec<Vec<Rat>>)> {
    // Gauss-Jordan on [A | b]
    let mut rows: Vec<Vec<Rat>> = hs
        .iter()
        .map(|h| {
            let mut r = h.normal.clone();
            r.push(h.offset.clone());
            r
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..dim {
        let Some(sel) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = Rat::one() / rows[rank][col].clone();
        for v in rows[rank].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..=dim {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    // inconsistent row 0 = nonzero
    for r in rank..rows.len() {
        if !rows[r][dim].is_zero() {
            return None;
        }
    }
    let mut point = vec![Rat::zero(); dim];
    for (r, &col) in pivots.iter().enumerate() {
        point[col] = rows[r][dim].clone();
    }
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&fc| {
            let mut v = vec![Rat::zero(); dim];
            v[fc] = Rat::one();
            for (r, &col) in pivots.iter().enumerate() {
                v[col] = -rows[r][fc].clone();
            }
            v
        })
        .collect();
    Some((point, basis))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rat {
        Rat::from(BigInt::from(n))
    }

    fn line(a: i64, b: i64, c: i64) -> Hyperplane {
        Hyperplane::from_i64(&[a, b], c)
    }

    fn plane(a: i64, b: i64, c: i64, d: i64) -> Hyperplane {
        Hyperplane::from_i64(&[a, b, c], d)
    }

    fn tetrahedron() -> Arrangement {
        Arrangement::new(
            3,
            vec![
                plane(1, 1, 1, 1),
                plane(1, -1, -1, 1),
                plane(-1, 1, -1, 1),
                plane(-1, -1, 1, 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn one_hyperplane_two_regions() {
        let a = Arrangement::new(2, vec![line(1, 0, 1)]).unwrap();
        let regions = a.regions().unwrap();
        assert_eq!(regions.len(), 2);
        let v = a.varchenko_matrix(&regions).unwrap();
        assert_eq!(v.get(0, 0), &PolyZ::one());
        assert_eq!(v.get(0, 1), &PolyZ::q_pow(1));
        assert_eq!(v.get(1, 0), &PolyZ::q_pow(1));
        assert!(v.is_symmetric());
    }

    #[test]
    fn tetrahedron_has_15_regions() {
        let a = tetrahedron();
        let regions = a.regions().unwrap();
        assert_eq!(regions.len(), 15);
        let base = a.region_containing(&[rat(0), rat(0), rat(0)]).unwrap();
        let de = a.distance_enumerator(&base).unwrap();
        assert_eq!(de, PolyZ::from_i64(&[1, 4, 6, 4]));
    }

    #[test]
    fn duplicate_hyperplane_rejected() {
        // same locus at a different scale
        let err = Arrangement::new(2, vec![line(1, 0, 1), line(2, 0, 2)]);
        assert_eq!(err.unwrap_err(), GeometryError::DuplicateHyperplanes(0, 1));
        assert!(Arrangement::new(2, vec![line(0, 0, 1)]).is_err());
    }

    #[test]
    fn sep_count_is_reflexive_and_small_cases() {
        let a = Arrangement::new(2, vec![line(1, 0, 1)]).unwrap();
        let regions = a.regions().unwrap();
        assert_eq!(regions[0].sep_count(&regions[0]).unwrap(), 0);
        assert_eq!(regions[0].sep_count(&regions[1]).unwrap(), 1);
        let other = Region {
            sign_vector: vec![Side::Plus, Side::Plus],
            witness: vec![],
        };
        assert!(regions[0].sep_count(&other).is_err());
    }

    #[test]
    fn match_ordering_tetrahedron_labels() {
        let a = tetrahedron();
        let labels: Vec<BTreeSet<usize>> = [
            vec![],
            vec![1],
            vec![2],
            vec![3],
            vec![4],
            vec![1, 2],
            vec![2, 3],
            vec![3, 4],
            vec![1, 4],
            vec![1, 3],
            vec![2, 4],
            vec![1, 2, 3],
            vec![2, 3, 4],
            vec![3, 4, 1],
            vec![4, 1, 2],
        ]
        .iter()
        .map(|v| v.iter().map(|i| i - 1).collect())
        .collect();
        let base = [rat(0), rat(0), rat(0)];
        let ordered = a.match_ordering(&base, &labels).unwrap();
        assert_eq!(ordered.len(), 15);
        let base_region = a.region_containing(&base).unwrap();
        assert_eq!(base_region.sep_set(&ordered[0]).unwrap(), BTreeSet::new());
        assert_eq!(
            base_region.sep_set(&ordered[5]).unwrap(),
            BTreeSet::from([0, 1])
        );
        // an impossible label is reported
        let mut bad = labels.clone();
        bad[1] = BTreeSet::from([0, 1, 2, 3]);
        assert!(matches!(
            a.match_ordering(&base, &bad),
            Err(GeometryError::UnmatchedLabel(_))
        ));
    }

    #[test]
    fn poset_single_hyperplane() {
        let a = Arrangement::new(2, vec![line(1, 0, 1)]).unwrap();
        let poset = a.intersection_poset();
        assert_eq!(poset.flats.len(), 2);
        assert_eq!(poset.flats[0].mobius, 1);
        assert_eq!(poset.flats[1].mobius, -1);
        assert_eq!(poset.poincare_polynomial(), PolyZ::from_i64(&[1, 1]));
    }

    #[test]
    fn poset_empty_arrangement() {
        let a = Arrangement::new(2, vec![]).unwrap();
        assert_eq!(a.intersection_poset().poincare_polynomial(), PolyZ::one());
    }

    #[test]
    fn poset_triangle() {
        // three triangle lines: 1 bottom + 3 lines + 3 points
        let a = Arrangement::new(
            2,
            vec![line(0, 1, -1), line(1, -1, 1), line(-1, -1, 1)],
        )
        .unwrap();
        let poset = a.intersection_poset();
        assert_eq!(poset.flats.len(), 7);
        assert_eq!(poset.poincare_polynomial(), PolyZ::from_i64(&[1, 3, 3]));
        assert_eq!(a.regions().unwrap().len(), 7);
    }

    #[test]
    fn poset_tetrahedron() {
        let poset = tetrahedron().intersection_poset();
        let counts: BTreeMap<usize, usize> =
            poset
                .flats
                .iter()
                .fold(BTreeMap::new(), |mut acc, f| {
                    *acc.entry(f.codim).or_insert(0) += 1;
                    acc
                });
        assert_eq!(counts, BTreeMap::from([(0, 1), (1, 4), (2, 6), (3, 4)]));
        assert_eq!(
            poset.poincare_polynomial(),
            PolyZ::from_i64(&[1, 4, 6, 4])
        );
    }

    #[test]
    fn deletion_restriction_counts_tetrahedron() {
        let a = tetrahedron();
        let r = a.regions().unwrap().len();
        for k in 0..a.hyperplanes.len() {
            let deleted = a.deletion(k).unwrap().regions().unwrap().len();
            let restricted = a.restriction(k).unwrap().regions().unwrap().len();
            assert_eq!(r, deleted + restricted, "hyperplane {k}");
        }
    }

    #[test]
    fn arrangement_json_round_trip() {
        let a = Arrangement::new(
            2,
            vec![Hyperplane::new(
                vec![Rat::new(BigInt::from(1), BigInt::from(2)), rat(0)],
                rat(1),
            )
            .unwrap()],
        )
        .unwrap();
        let v = a.to_json();
        let back = Arrangement::from_json(&v).unwrap();
        assert_eq!(back.dim, 2);
        assert_eq!(back.hyperplanes, a.hyperplanes);
        assert!(Arrangement::from_json(&json!({"dim": 2})).is_err());
    }

    #[test]
    fn witness_points_are_interior() {
        let a = tetrahedron();
        for r in a.regions().unwrap() {
            for (h, s) in a.hyperplanes.iter().zip(&r.sign_vector) {
                let v = h.eval(&r.witness);
                match s {
                    Side::Plus => assert!(v.is_positive()),
                    Side::Minus => assert!(v.is_negative()),
                }
            }
        }
    }
}
