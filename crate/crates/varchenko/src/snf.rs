//! Verification engine: applies the congruence pipelines exactly over
//! `Z[q]`, computes an independent Smith normal form over the principal
//! ideal domain `Q[q]`, audits transition-factor unimodularity, and builds
//! `(q-1)`-valuation profiles for the Betti cross-check.
//!
//! There is no general Smith normal form algorithm over `Z[q]` (it is not
//! a PID), so the `Z[q]`-level claim is *verified* by applying the given
//! pipeline, never computed from scratch; the `Q[q]` elimination provides
//! the independent invariant-factor oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Value};
use thiserror::Error;

use crate::matrix::{apply_pipeline, PolyMat};
use crate::models::ModelSpec;
use crate::poly::{PolyQ, PolyZ};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SnfError {
    #[error("valuation of the zero polynomial is undefined (diagonal entry {0})")]
    ZeroDiagonalEntry(usize),
    #[error("valuation base must have degree 1, got {0}")]
    BadValuationBase(String),
}

/// `true` iff `m` is diagonal and its diagonal equals `diag` entry for
/// entry (strict `Z[q]` equality; the only units are +-1).
pub fn is_claimed_diagonal(m: &PolyMat, diag: &[PolyZ]) -> bool {
    m.is_square() && m.rows() == diag.len() && m.is_diagonal() && m.diagonal() == diag
}

/// Invariant factors of a matrix over `Q[q]`: monic `d_1 | d_2 | ... | d_r`
/// followed by zeros up to `min(rows, cols)`. Euclidean elimination with
/// minimum-degree pivoting; ties break on the smaller absolute leading
/// coefficient, then position, so the run is deterministic.
pub fn snf_over_field(m: &PolyMat) -> Vec<PolyQ> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<PolyQ>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j).to_rational()).collect())
        .collect();
    let bound = rows.min(cols);
    let mut out: Vec<PolyQ> = Vec::with_capacity(bound);

    for top in 0..bound {
        'restart: loop {
            let Some((pi, pj)) = pick_pivot(&a, top) else {
                break; // all remaining entries are zero
            };
            a.swap(top, pi);
            swap_cols(&mut a, top, pj);
            // clear the pivot column by division with remainder
            for i in top + 1..rows {
                if a[i][top].is_zero() {
                    continue;
                }
                let (quot, _) = a[i][top].div_rem(&a[top][top]).expect("pivot nonzero");
                for j in top..cols {
                    let delta = &quot * &a[top][j];
                    a[i][j] = &a[i][j] - &delta;
                }
                if !a[i][top].is_zero() {
                    continue 'restart; // remainder became the smaller pivot
                }
            }
            for j in top + 1..cols {
                if a[top][j].is_zero() {
                    continue;
                }
                let (quot, _) = a[top][j].div_rem(&a[top][top]).expect("pivot nonzero");
                for i in top..rows {
                    let delta = &quot * &a[i][top];
                    a[i][j] = &a[i][j] - &delta;
                }
                if !a[top][j].is_zero() {
                    continue 'restart;
                }
            }
            // pivot must divide the whole remaining block
            for i in top + 1..rows {
                for j in top + 1..cols {
                    if !a[i][j].is_zero() && !divides(&a[top][top], &a[i][j]) {
                        for j2 in top..cols {
                            let add = a[i][j2].clone();
                            a[top][j2] = &a[top][j2] + &add;
                        }
                        continue 'restart;
                    }
                }
            }
            break;
        }
        out.push(a[top][top].monic());
    }
    out
}

fn divides(d: &PolyQ, n: &PolyQ) -> bool {
    if d.is_zero() {
        return n.is_zero();
    }
    n.div_rem(d).map(|(_, r)| r.is_zero()).unwrap_or(false)
}

fn pick_pivot(a: &[Vec<PolyQ>], top: usize) -> Option<(usize, usize)> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut best: Option<(usize, BigRational, usize, usize)> = None;
    for i in top..rows {
        for j in top..cols {
            let entry = &a[i][j];
            let Some(deg) = entry.degree() else { continue };
            let lead = entry.leading_coeff().expect("nonzero").abs();
            let better = match &best {
                None => true,
                Some((bd, bl, _, _)) => deg < *bd || (deg == *bd && lead < *bl),
            };
            if better {
                best = Some((deg, lead, i, j));
            }
        }
    }
    best.map(|(_, _, i, j)| (i, j))
}

fn swap_cols(a: &mut [Vec<PolyQ>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

/// Determinant of every factor; a pipeline is a valid `Z[q]` congruence
/// only when each value is +-1.
pub fn unimodularity_audit(factors: &[&PolyMat]) -> Vec<PolyZ> {
    factors
        .iter()
        .map(|f| f.determinant().unwrap_or_else(|_| PolyZ::zero()))
        .collect()
}

fn is_unit(p: &PolyZ) -> bool {
    p.degree() == Some(0) && p.coeff(0).abs() == BigInt::from(1)
}

/// Exact multiplicity of the linear factor `base` in each diagonal entry,
/// returned as a histogram `valuation -> count`.
pub fn valuation_profile(
    diag: &[PolyZ],
    base: &PolyZ,
) -> Result<BTreeMap<usize, usize>, SnfError> {
    if base.degree() != Some(1) {
        return Err(SnfError::BadValuationBase(base.to_string()));
    }
    let base_q = base.to_rational();
    let mut histogram = BTreeMap::new();
    for (idx, entry) in diag.iter().enumerate() {
        if entry.is_zero() {
            return Err(SnfError::ZeroDiagonalEntry(idx));
        }
        let mut current = entry.to_rational();
        let mut val = 0usize;
        loop {
            let (quot, rem) = current.div_rem(&base_q).expect("base nonzero");
            if rem.is_zero() {
                val += 1;
                current = quot;
            } else {
                break;
            }
        }
        *histogram.entry(val).or_insert(0) += 1;
    }
    Ok(histogram)
}

/// Outcome of a full verification run. Discrepancies are report content,
/// never silent corrections.
#[derive(Debug, Clone)]
pub struct SnfReport {
    pub model_id: String,
    pub size: usize,
    pub pipeline_result: Option<PolyMat>,
    pub claimed_diag: Vec<PolyZ>,
    pub pipeline_matches_claim: bool,
    pub q_field_snf: Vec<PolyQ>,
    pub oracle_matches_claim: bool,
    pub unimodularity: Vec<PolyZ>,
    pub unimodular: bool,
    pub valuation_profile: BTreeMap<usize, usize>,
    pub valuation_profile_q_plus_one: BTreeMap<usize, usize>,
    pub betti: Vec<i64>,
    pub betti_matches: bool,
    pub geometry_matches: Option<bool>,
    pub notes: Vec<String>,
}

impl SnfReport {
    pub fn has_discrepancy(&self) -> bool {
        !self.pipeline_matches_claim
            || !self.oracle_matches_claim
            || !self.unimodular
            || !self.betti_matches
            || self.geometry_matches == Some(false)
    }

    pub fn to_json(&self) -> Value {
        let profile = |p: &BTreeMap<usize, usize>| -> Value {
            json!(p
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect::<BTreeMap<String, usize>>())
        };
        json!({
            "model": self.model_id,
            "size": self.size,
            "pipeline_result": self.pipeline_result.as_ref().map(|m| m.to_json()),
            "claimed_diag": self.claimed_diag.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "pipeline_matches_claim": self.pipeline_matches_claim,
            "q_field_snf": self.q_field_snf.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "oracle_matches_claim": self.oracle_matches_claim,
            "unimodularity": self.unimodularity.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "unimodular": self.unimodular,
            "valuation_profile_q_minus_1": profile(&self.valuation_profile),
            "valuation_profile_q_plus_1": profile(&self.valuation_profile_q_plus_one),
            "betti": self.betti,
            "betti_matches": self.betti_matches,
            "geometry_matches": self.geometry_matches,
            "notes": self.notes,
            "pass": !self.has_discrepancy(),
        })
    }

    /// Short human-readable summary, one line per check.
    pub fn summary(&self) -> String {
        let yes_no = |b: bool| if b { "ok" } else { "MISMATCH" };
        let mut out = format!("model {} (size {})\n", self.model_id, self.size);
        out.push_str(&format!(
            "  pipeline reaches claimed diagonal: {}\n",
            yes_no(self.pipeline_matches_claim)
        ));
        out.push_str(&format!(
            "  Q[q] invariant factors match claim: {}\n",
            yes_no(self.oracle_matches_claim)
        ));
        out.push_str(&format!(
            "  transition factors unimodular: {}\n",
            yes_no(self.unimodular)
        ));
        out.push_str(&format!(
            "  (q-1)-valuation profile matches Betti numbers: {}\n",
            yes_no(self.betti_matches)
        ));
        match self.geometry_matches {
            Some(ok) => out.push_str(&format!(
                "  geometry oracle matrix equality: {}\n",
                yes_no(ok)
            )),
            None => out.push_str("  geometry oracle matrix equality: skipped\n"),
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out.push_str(&format!(
            "  verdict: {}\n",
            if self.has_discrepancy() {
                "DISCREPANCY"
            } else {
                "pass"
            }
        ));
        out
    }
}

/// Oracle comparisons above this hyperplane count are skipped (the
/// sign-vector enumeration is exponential in the number of hyperplanes).
const ORACLE_HYPERPLANE_LIMIT: usize = 12;

/// Run every check on a model: pipeline application, claimed-diagonal
/// comparison, `Q[q]` invariant factors, unimodularity audit, valuation
/// profiles, Betti cross-check, and the geometry-oracle matrix comparison.
pub fn verify_model(spec: &ModelSpec) -> SnfReport {
    let mut notes = Vec::new();

    // 1. the printed pipeline, dropping outermost pairs that cannot act
    let mut lefts: &[PolyMat] = &spec.left_pipeline;
    let mut rights: &[PolyMat] = &spec.right_pipeline;
    let mut pipeline_result = None;
    loop {
        match apply_pipeline(&spec.varchenko, lefts, rights) {
            Ok(m) => {
                if lefts.len() != spec.left_pipeline.len() {
                    notes.push(format!(
                        "pipeline dimensions inconsistent: dropped {} outermost factor pair(s); \
                         the printed transform does not act on the {}x{} matrix",
                        spec.left_pipeline.len() - lefts.len(),
                        spec.varchenko.rows(),
                        spec.varchenko.cols(),
                    ));
                }
                pipeline_result = Some(m);
                break;
            }
            Err(_) if !lefts.is_empty() && !rights.is_empty() => {
                lefts = &lefts[1..];
                rights = &rights[..rights.len() - 1];
            }
            Err(e) => {
                notes.push(format!("pipeline could not be applied at all: {e}"));
                break;
            }
        }
    }

    // 2. claimed diagonal comparison
    let pipeline_matches_claim = match &pipeline_result {
        Some(m) => {
            if spec.claimed_snf.len() != spec.size {
                notes.push(format!(
                    "claimed diagonal has {} entries but the matrix is {}x{}",
                    spec.claimed_snf.len(),
                    spec.size,
                    spec.size
                ));
            }
            let ok = is_claimed_diagonal(m, &spec.claimed_snf);
            if !ok && m.rows() == spec.claimed_snf.len() {
                if let Some((i, j)) = first_mismatch(m, &spec.claimed_snf) {
                    notes.push(format!(
                        "pipeline result differs from claim at entry ({i}, {j}): \
                         found {}, claimed {}",
                        m.get(i, j),
                        diag_entry(&spec.claimed_snf, i, j),
                    ));
                }
            }
            ok
        }
        None => false,
    };

    // 3. independent Q[q] invariant factors of the original matrix
    let q_field_snf = snf_over_field(&spec.varchenko);
    let claimed_monic: Vec<PolyQ> = spec
        .claimed_snf
        .iter()
        .map(|p| p.to_rational().monic())
        .collect();
    let oracle_matches_claim = q_field_snf == claimed_monic;
    if !oracle_matches_claim {
        notes.push(format!(
            "Q[q] invariant factors ({} entries) differ from the claimed diagonal \
             ({} entries, monic-normalized)",
            q_field_snf.len(),
            claimed_monic.len()
        ));
    }

    // 4. unimodularity audit over both pipelines
    let factors: Vec<&PolyMat> = spec
        .left_pipeline
        .iter()
        .chain(spec.right_pipeline.iter())
        .collect();
    let unimodularity = unimodularity_audit(&factors);
    let unimodular = unimodularity.iter().all(is_unit);
    if !unimodular {
        notes.push("a transition factor has determinant other than +-1".into());
    }

    // 5. valuation profiles of the verified diagonal (claim when the
    // pipeline matched, otherwise the field oracle's factors)
    let verified_diag: Vec<PolyZ> = if pipeline_matches_claim {
        spec.claimed_snf.clone()
    } else {
        q_field_snf
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| integerize(p))
            .collect()
    };
    let q_minus_1 = PolyZ::from_i64(&[-1, 1]);
    let q_plus_1 = PolyZ::from_i64(&[1, 1]);
    let valuation = valuation_profile(&verified_diag, &q_minus_1).unwrap_or_default();
    let valuation_plus = valuation_profile(&verified_diag, &q_plus_1).unwrap_or_default();

    // 6. Betti numbers from the intersection poset
    let poincare = spec.arrangement.intersection_poset().poincare_polynomial();
    let betti: Vec<i64> = poincare
        .coeffs()
        .iter()
        .map(|c| i64::try_from(c).expect("Betti numbers are small"))
        .collect();
    let profile_vec: Vec<i64> = (0..betti.len().max(
        valuation.keys().max().map_or(0, |k| k + 1),
    ))
        .map(|k| *valuation.get(&k).unwrap_or(&0) as i64)
        .collect();
    let betti_matches = profile_vec == betti;
    if !betti_matches {
        notes.push(format!(
            "(q-1)-valuation profile {:?} differs from Betti numbers {:?}",
            profile_vec, betti
        ));
    }

    // 7. geometry oracle: region count, labelling, matrix equality
    let geometry_matches = if spec.arrangement.hyperplanes.len() > ORACLE_HYPERPLANE_LIMIT {
        notes.push(format!(
            "geometry oracle skipped: {} hyperplanes exceed the enumeration limit {}",
            spec.arrangement.hyperplanes.len(),
            ORACLE_HYPERPLANE_LIMIT
        ));
        None
    } else {
        match oracle_matrix(spec) {
            Ok(oracle) => {
                let same = oracle == spec.varchenko;
                if !same {
                    if let Some((i, j)) = first_entry_diff(&oracle, &spec.varchenko) {
                        notes.push(format!(
                            "geometry oracle disagrees with the closed form at entry \
                             ({i}, {j}): oracle {}, builder {}",
                            oracle.get(i, j),
                            spec.varchenko.get(i, j)
                        ));
                    } else {
                        notes.push("geometry oracle matrix has different dimensions".into());
                    }
                }
                Some(same)
            }
            Err(e) => {
                notes.push(format!("geometry oracle failed: {e}"));
                Some(false)
            }
        }
    };

    SnfReport {
        model_id: spec.id.to_string(),
        size: spec.size,
        pipeline_result,
        claimed_diag: spec.claimed_snf.clone(),
        pipeline_matches_claim,
        q_field_snf,
        oracle_matches_claim,
        unimodularity,
        unimodular,
        valuation_profile: valuation,
        valuation_profile_q_plus_one: valuation_plus,
        betti,
        betti_matches,
        geometry_matches,
        notes,
    }
}

/// The oracle's matrix under the model's printed region labelling.
pub fn oracle_matrix(spec: &ModelSpec) -> Result<PolyMat, crate::geometry::GeometryError> {
    let labels = spec.labels_zero_based();
    let ordering = spec.arrangement.match_ordering(&spec.base_point, &labels)?;
    spec.arrangement.varchenko_matrix(&ordering)
}

fn diag_entry(diag: &[PolyZ], i: usize, j: usize) -> PolyZ {
    if i == j {
        diag.get(i).cloned().unwrap_or_else(PolyZ::zero)
    } else {
        PolyZ::zero()
    }
}

fn first_mismatch(m: &PolyMat, diag: &[PolyZ]) -> Option<(usize, usize)> {
    if m.rows() != diag.len() || m.cols() != diag.len() {
        return Some((0, 0));
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if *m.get(i, j) != diag_entry(diag, i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

fn first_entry_diff(a: &PolyMat, b: &PolyMat) -> Option<(usize, usize)> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return None;
    }
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a.get(i, j) != b.get(i, j) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Clear denominators of a monic `Q[q]` polynomial into a primitive `Z[q]`
/// representative.
fn integerize(p: &PolyQ) -> PolyZ {
    use num_integer::Integer;
    let mut lcm = BigInt::from(1);
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let scale = BigRational::from(lcm);
    PolyZ::new(
        p.coeffs()
            .iter()
            .map(|c| (c * &scale).to_integer())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{self, ModelId};

    fn q(k: usize) -> PolyZ {
        PolyZ::q_pow(k)
    }

    #[test]
    fn claimed_diagonal_checks() {
        let id = PolyMat::identity(3);
        let ones = vec![PolyZ::one(); 3];
        assert!(is_claimed_diagonal(&id, &ones));
        // off-by-sign is not equal over Z[q]
        let mut neg = PolyMat::identity(2);
        neg.set(1, 1, PolyZ::constant(-1));
        assert!(!is_claimed_diagonal(&neg, &vec![PolyZ::one(); 2]));
        let mut nondiag = PolyMat::identity(2);
        nondiag.set(0, 1, q(1));
        assert!(!is_claimed_diagonal(&nondiag, &vec![PolyZ::one(); 2]));
    }

    #[test]
    fn field_snf_diagonal_reorders_by_divisibility() {
        let mut m = PolyMat::zeros(2, 2);
        m.set(0, 0, PolyZ::one_minus_q_pow(4));
        m.set(1, 1, PolyZ::one_minus_q_sq());
        let snf = snf_over_field(&m);
        assert_eq!(snf.len(), 2);
        assert_eq!(snf[0], PolyZ::one_minus_q_sq().to_rational().monic());
        assert_eq!(snf[1], PolyZ::one_minus_q_pow(4).to_rational().monic());
        assert!(snf[0].divides(&snf[1]));
    }

    #[test]
    fn field_snf_single_hyperplane() {
        let mut m = PolyMat::identity(2);
        m.set(0, 1, q(1));
        m.set(1, 0, q(1));
        let snf = snf_over_field(&m);
        assert!(snf[0].is_one());
        assert_eq!(snf[1], PolyZ::one_minus_q_sq().to_rational().monic());
    }

    #[test]
    fn field_snf_handles_rank_deficiency() {
        let mut m = PolyMat::zeros(2, 3);
        m.set(0, 0, q(1));
        m.set(1, 0, q(2));
        m.set(0, 1, q(2));
        m.set(1, 1, q(3));
        let snf = snf_over_field(&m);
        assert_eq!(snf.len(), 2);
        assert!(!snf[0].is_zero());
        assert!(snf[1].is_zero());
    }

    #[test]
    fn valuation_profiles() {
        let t = PolyZ::one_minus_q_sq();
        let entry = &(&t * &t) * &PolyZ::one_minus_q_pow(8);
        let profile = valuation_profile(&[entry], &PolyZ::from_i64(&[-1, 1])).unwrap();
        assert_eq!(profile, BTreeMap::from([(3, 1)]));
        let profile =
            valuation_profile(&[PolyZ::one()], &PolyZ::from_i64(&[-1, 1])).unwrap();
        assert_eq!(profile, BTreeMap::from([(0, 1)]));
        assert!(matches!(
            valuation_profile(&[PolyZ::zero()], &PolyZ::from_i64(&[-1, 1])),
            Err(SnfError::ZeroDiagonalEntry(0))
        ));
        assert!(matches!(
            valuation_profile(&[PolyZ::one()], &PolyZ::one()),
            Err(SnfError::BadValuationBase(_))
        ));
    }

    #[test]
    fn unimodularity_of_identity_and_shift() {
        let id = PolyMat::identity(4);
        let j = PolyMat::shift(4);
        let dets = unimodularity_audit(&[&id, &j]);
        assert!(dets.iter().all(is_unit));
    }

    #[test]
    fn congruence_invariance_of_invariant_factors() {
        // invariant factors survive the unimodular congruence
        let spec = models::ModelSpec::build(ModelId::Cyclic(3)).unwrap();
        let before = snf_over_field(&spec.varchenko);
        let after = snf_over_field(
            &apply_pipeline(&spec.varchenko, &spec.left_pipeline, &spec.right_pipeline).unwrap(),
        );
        assert_eq!(before, after);
    }

    #[test]
    fn verify_small_cyclic_model() {
        let spec = models::ModelSpec::build(ModelId::Cyclic(3)).unwrap();
        let report = verify_model(&spec);
        assert!(report.pipeline_matches_claim);
        assert!(report.oracle_matches_claim);
        assert!(report.unimodular);
        assert!(report.betti_matches);
        assert_eq!(report.geometry_matches, Some(true));
        assert!(!report.has_discrepancy());
        assert_eq!(
            report.valuation_profile,
            BTreeMap::from([(0, 1), (1, 3), (2, 3)])
        );
    }
}
