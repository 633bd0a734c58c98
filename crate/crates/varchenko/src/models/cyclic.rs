//! The cyclic family `C_n`: the line arrangement of a regular n-gon's
//! extended edges. The q-Varchenko matrix is `(1+np) x (1+np)` with
//! `p = floor((n+1)/2)`, built from circulant blocks, and the `S P`
//! congruence takes it to `diag(1, (1-q^2) I_n, (1-q^2)^2 I_{n(p-1)})`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::geometry::{Arrangement, Hyperplane};
use crate::matrix::{BlockLayout, PolyMat};
use crate::poly::PolyZ;

use super::{neg_q, polygon_directions, q, t_unit, ModelError, ModelId, ModelSpec, Rat, StructuredVector};

pub fn rings(n: usize) -> usize {
    (n + 1) / 2
}

fn check_n(n: usize) -> Result<(), ModelError> {
    if n < 3 {
        Err(ModelError::NTooSmall(n))
    } else {
        Ok(())
    }
}

/// First row of the circulant block `C_{ij}` (`1 <= i <= j <= p`): the
/// ascent `(q^{j-i})^i`, the constant run `q^{i+j}` of length `n+1-i-j`,
/// the descent `(q^{j-i+2(i-1)})_{i-1}`, and the constant run `q^{j-i}` of
/// length `j-i`.
pub fn block_word(n: usize, i: usize, j: usize) -> Vec<PolyZ> {
    debug_assert!(1 <= i && i <= j && i + j <= n + 1);
    let segments = [
        StructuredVector::Ascending {
            start: (j - i) as i64,
            len: i,
        },
        StructuredVector::Constant {
            exponent: (i + j) as i64,
            len: n + 1 - i - j,
        },
        StructuredVector::Descending {
            start: (j - i + 2 * (i - 1)) as i64,
            len: i - 1,
        },
        StructuredVector::Constant {
            exponent: (j - i) as i64,
            len: j - i,
        },
    ];
    let word: Vec<PolyZ> = segments
        .iter()
        .flat_map(|s| s.monomials().expect("cyclic words have nonnegative exponents"))
        .collect();
    debug_assert_eq!(word.len(), n);
    word
}

pub fn varchenko(n: usize) -> Result<PolyMat, ModelError> {
    check_n(n)?;
    let p = rings(n);
    let mut sizes = vec![1usize];
    sizes.extend(std::iter::repeat(n).take(p));
    let mut layout = BlockLayout::new(&sizes, &sizes);
    layout.set(0, 0, PolyMat::identity(1));
    for r in 1..=p {
        layout.set(0, r, PolyMat::row_of(&q(r), n));
        layout.set(r, 0, PolyMat::column_of(&q(r), n));
    }
    for i in 1..=p {
        for j in i..=p {
            let block = PolyMat::circulant(&block_word(n, i, j))?;
            if i != j {
                layout.set(j, i, block.transpose());
            }
            layout.set(i, j, block);
        }
    }
    Ok(PolyMat::from_blocks(&layout)?)
}

/// The congruence factors `P` (clears the border strips) and `S` (clears
/// the off-diagonal shift blocks); the full left transform is `S * P`.
pub fn transforms(n: usize) -> Result<(PolyMat, PolyMat), ModelError> {
    check_n(n)?;
    let p = rings(n);
    let mut sizes = vec![1usize];
    sizes.extend(std::iter::repeat(n).take(p));

    let mut pl = BlockLayout::new(&sizes, &sizes);
    pl.set(0, 0, PolyMat::identity(1));
    pl.set(1, 0, PolyMat::column_of(&neg_q(1), n));
    for b in 1..=p {
        pl.set(b, b, PolyMat::identity(n));
        if b >= 2 {
            pl.set(b, b - 1, PolyMat::identity(n).scale(&neg_q(1)));
        }
    }
    let p_mat = PolyMat::from_blocks(&pl)?;

    let shift = PolyMat::shift(n);
    let mut sl = BlockLayout::new(&sizes, &sizes);
    sl.set(0, 0, PolyMat::identity(1));
    for b in 1..=p {
        sl.set(b, b, PolyMat::identity(n));
        if b >= 2 {
            sl.set(b, b - 1, shift.scale(&neg_q(1)));
        }
    }
    let s_mat = PolyMat::from_blocks(&sl)?;
    Ok((p_mat, s_mat))
}

pub fn claimed_snf(n: usize) -> Result<Vec<PolyZ>, ModelError> {
    check_n(n)?;
    let p = rings(n);
    let t = t_unit();
    let mut out = vec![PolyZ::one()];
    out.extend(std::iter::repeat(t.clone()).take(n));
    out.extend(std::iter::repeat(&t * &t).take(n * (p - 1)));
    Ok(out)
}

/// Separating sets from the central region (1-based): ring `r` consists of
/// the `n` cyclic intervals of `r` consecutive edges.
pub fn region_labels(n: usize) -> Vec<BTreeSet<usize>> {
    let p = rings(n);
    let mut out = vec![BTreeSet::new()];
    for r in 1..=p {
        for x in 0..n {
            out.push((0..r).map(|k| (x + k) % n + 1).collect());
        }
    }
    out
}

/// Extended edge lines of a combinatorially regular n-gon: rational unit
/// normals in counter-clockwise order, every line tangent to the unit
/// circle.
pub fn arrangement(n: usize) -> Result<Arrangement, ModelError> {
    check_n(n)?;
    let hyperplanes = polygon_directions(n)
        .into_iter()
        .map(|(x, y)| Hyperplane::new(vec![x, y], num_traits::One::one()).expect("unit normal"))
        .collect();
    Ok(Arrangement::new(2, hyperplanes)?)
}

pub fn model(n: usize) -> Result<ModelSpec, ModelError> {
    let varchenko = varchenko(n)?;
    let (p_mat, s_mat) = transforms(n)?;
    let (pt, st) = (p_mat.transpose(), s_mat.transpose());
    Ok(ModelSpec {
        id: ModelId::Cyclic(n),
        size: varchenko.rows(),
        varchenko,
        left_pipeline: vec![s_mat, p_mat],
        right_pipeline: vec![pt, st],
        claimed_snf: claimed_snf(n)?,
        region_labels: region_labels(n),
        arrangement: arrangement(n)?,
        base_point: vec![Rat::zero(), Rat::zero()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::apply_pipeline;

    #[test]
    fn c3_block_c12_is_the_expected_circulant() {
        assert_eq!(block_word(3, 1, 2), vec![q(1), q(3), q(1)]);
        assert_eq!(block_word(5, 1, 1), vec![q(0), q(2), q(2), q(2), q(2)]);
        assert_eq!(block_word(5, 2, 3), vec![q(1), q(3), q(5), q(3), q(1)]);
    }

    #[test]
    fn word_lengths_cover_all_sizes() {
        for n in 3..=12 {
            let p = rings(n);
            for i in 1..=p {
                for j in i..=p {
                    assert_eq!(block_word(n, i, j).len(), n);
                }
            }
        }
    }

    #[test]
    fn corner_and_first_strip() {
        for n in [3usize, 4, 7, 8] {
            let v = varchenko(n).unwrap();
            assert_eq!(v.rows(), 1 + n * rings(n));
            assert!(v.is_symmetric());
            assert!(v.get(0, 0).is_one());
            for x in 1..=n {
                assert_eq!(v.get(0, x), &q(1));
            }
        }
    }

    #[test]
    fn rejects_small_n() {
        assert!(matches!(varchenko(2), Err(ModelError::NTooSmall(2))));
        assert!(matches!(transforms(1), Err(ModelError::NTooSmall(1))));
    }

    #[test]
    fn transforms_are_unit_triangular() {
        for n in [3usize, 4, 5] {
            let (p_mat, s_mat) = transforms(n).unwrap();
            assert!(p_mat.determinant().unwrap().is_one());
            assert!(s_mat.determinant().unwrap().is_one());
            // S * P stays lower triangular with unit diagonal
            let sp = s_mat.mat_mul(&p_mat).unwrap();
            for i in 0..sp.rows() {
                assert!(sp.get(i, i).is_one());
                for j in i + 1..sp.cols() {
                    assert!(sp.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn pipeline_reaches_claimed_diagonal_small() {
        for n in [3usize, 4, 5] {
            let m = model(n).unwrap();
            let result = apply_pipeline(&m.varchenko, &m.left_pipeline, &m.right_pipeline).unwrap();
            assert!(result.is_diagonal(), "n={n}");
            assert_eq!(result.diagonal(), m.claimed_snf, "n={n}");
        }
    }

    #[test]
    fn shift_conjugation_identity_on_blocks() {
        // transpose(C_ij) = J^{j-i} C_ij
        for n in 3..=8usize {
            let p = rings(n);
            let j_mat = PolyMat::shift(n);
            for i in 1..=p {
                for j in i..=p {
                    let c = PolyMat::circulant(&block_word(n, i, j)).unwrap();
                    let lhs = c.transpose();
                    let rhs = j_mat.pow(j - i).unwrap().mat_mul(&c).unwrap();
                    assert_eq!(lhs, rhs, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn oracle_region_counts() {
        for n in 3..=10usize {
            let a = arrangement(n).unwrap();
            assert_eq!(
                a.regions().unwrap().len(),
                1 + n * rings(n),
                "region count for n={n}"
            );
        }
    }
}
