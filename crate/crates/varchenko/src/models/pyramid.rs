//! Pyramid models: four or five slant planes through an apex over a
//! square/pentagonal base plus the base plane itself. The printed data
//! gives the deletion-restriction split `P V P^t = diag((1-q^2) V(C_n),
//! V(cone))`, so the full matrix is reconstructed as
//! `P^{-1} diag(...) P^{-t}` with the exact unit-triangular inverse, then
//! cross-checked against the geometry oracle.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::geometry::{Arrangement, Hyperplane};
use crate::matrix::{BlockLayout, PolyMat};
use crate::poly::PolyZ;

use super::cyclic;
use super::{neg_q, poly, polygon_directions, q, t_unit, ModelError, ModelId, ModelSpec, Rat};

fn monomials(word: &[usize]) -> Vec<PolyZ> {
    word.iter().map(|&k| q(k)).collect()
}

fn shift_sum(n: usize, e: &PolyZ, powers: &[usize]) -> PolyMat {
    let shift = PolyMat::shift(n);
    let mut acc = PolyMat::zeros(n, n);
    for &a in powers {
        acc = acc.add(&shift.pow(a).expect("square")).expect("same size");
    }
    acc.scale(e)
}

/// Row vector from `(coefficient, degree)` singletons; zero entries stay
/// zero.
fn row_from(entries: &[Option<(i64, usize)>]) -> PolyMat {
    PolyMat::from_fn(1, entries.len(), |_, j| match entries[j] {
        Some((c, d)) => PolyZ::monomial(BigInt::from(c), d),
        None => PolyZ::zero(),
    })
}

/// `P^{-1} diag((1-q^2) restriction, deleted) P^{-t}` for the border
/// block structure `P = (I_m, -q I_m, 0; 0, I_m, 0; 0, 0, I_r)`.
fn reconstruct_from_split(
    restriction: &PolyMat,
    deleted: &PolyMat,
) -> Result<PolyMat, ModelError> {
    let m = restriction.rows();
    let total = m + deleted.rows();
    let rest = total - 2 * m;
    let mut diag = BlockLayout::new(&[m, m + rest], &[m, m + rest]);
    diag.set(0, 0, restriction.scale(&t_unit()));
    diag.set(1, 1, deleted.clone());
    let diag = PolyMat::from_blocks(&diag)?;

    let mut inv = BlockLayout::new(&[m, m, rest], &[m, m, rest]);
    inv.set(0, 0, PolyMat::identity(m));
    inv.set(0, 1, PolyMat::identity(m).scale(&q(1)));
    inv.set(1, 1, PolyMat::identity(m));
    inv.set(2, 2, PolyMat::identity(rest));
    let p_inv = PolyMat::from_blocks(&inv)?;

    Ok(PolyMat::congruence(&p_inv, &diag)?)
}

/// The border elimination `P` of the deletion-restriction split.
fn split_transform(m: usize, rest: usize) -> Result<PolyMat, ModelError> {
    let mut pl = BlockLayout::new(&[m, m, rest], &[m, m, rest]);
    pl.set(0, 0, PolyMat::identity(m));
    pl.set(0, 1, PolyMat::identity(m).scale(&neg_q(1)));
    pl.set(1, 1, PolyMat::identity(m));
    pl.set(2, 2, PolyMat::identity(rest));
    Ok(PolyMat::from_blocks(&pl)?)
}

/// Slant planes through the apex `(0, 0, 2)` over the unit-circle-tangent
/// base edges, plus the base plane `z = 0` as the last hyperplane.
fn pyramid_arrangement(n: usize) -> Result<Arrangement, ModelError> {
    let half = Rat::new(BigInt::from(1), BigInt::from(2));
    let mut hyperplanes: Vec<Hyperplane> = polygon_directions(n)
        .into_iter()
        .map(|(x, y)| Hyperplane::new(vec![x, y, half.clone()], Rat::one()).expect("unit normal"))
        .collect();
    hyperplanes.push(Hyperplane::new(
        vec![Rat::zero(), Rat::zero(), Rat::one()],
        Rat::zero(),
    )?);
    Ok(Arrangement::new(3, hyperplanes)?)
}

/// Interval label `{x, x+1, ..., x+len-1}` on the n-cycle, 1-based.
fn interval(n: usize, x: usize, len: usize) -> BTreeSet<usize> {
    (0..len).map(|k| (x + k) % n + 1).collect()
}

/// Region labels in matrix order: first the below-base regions (cone label
/// plus the base index `n+1`) in restriction order, then the cone regions.
fn pyramid_labels(n: usize) -> Vec<BTreeSet<usize>> {
    let base = n + 1;
    let mut cone: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    for len in 1..n {
        for x in 0..n {
            cone.push(interval(n, x, len));
        }
    }
    cone.push((1..=n).collect());
    // restriction labels are the C_n labels: intervals of length <= p
    let below: Vec<BTreeSet<usize>> = cyclic::region_labels(n)
        .into_iter()
        .map(|mut s| {
            s.insert(base);
            s
        })
        .collect();
    let below_count = below.len();
    let mut out = below;
    // the first `below_count` cone labels pair with the below regions
    out.extend(cone.iter().take(below_count).cloned());
    out.extend(cone.into_iter().skip(below_count));
    out
}

pub fn square() -> Result<ModelSpec, ModelError> {
    // deleted arrangement (the cone over C_4), 14 regions:
    // 0 | 1 2 3 4 | 12 23 34 41 | 123 234 341 412 | 1234
    let deleted_exponents: [[u32; 14]; 14] = [
        [0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 4],
        [1, 0, 2, 2, 2, 1, 3, 3, 1, 2, 4, 2, 2, 3],
        [1, 2, 0, 2, 2, 1, 1, 3, 3, 2, 2, 4, 2, 3],
        [1, 2, 2, 0, 2, 3, 1, 1, 3, 2, 2, 2, 4, 3],
        [1, 2, 2, 2, 0, 3, 3, 1, 1, 4, 2, 2, 2, 3],
        [2, 1, 1, 3, 3, 0, 2, 4, 2, 1, 3, 3, 1, 2],
        [2, 3, 1, 1, 3, 2, 0, 2, 4, 1, 1, 3, 3, 2],
        [2, 3, 3, 1, 1, 4, 2, 0, 2, 3, 1, 1, 3, 2],
        [2, 1, 3, 3, 1, 2, 4, 2, 0, 3, 3, 1, 1, 2],
        [3, 2, 2, 2, 4, 1, 1, 3, 3, 0, 2, 2, 2, 1],
        [3, 4, 2, 2, 2, 3, 1, 1, 3, 2, 0, 2, 2, 1],
        [3, 2, 4, 2, 2, 3, 3, 1, 1, 2, 2, 0, 2, 1],
        [3, 2, 2, 4, 2, 1, 3, 3, 1, 2, 2, 2, 0, 1],
        [4, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 0],
    ];
    let grid: Vec<Vec<u32>> = deleted_exponents.iter().map(|r| r.to_vec()).collect();
    let deleted = PolyMat::from_exponents(&grid);
    let restriction = cyclic::varchenko(4)?;
    let varchenko = reconstruct_from_split(&restriction, &deleted)?;
    let p_mat = split_transform(9, 5)?;

    // T acts as the cyclic elimination on the below block and U2 U1 on the
    // cone block
    let j4 = PolyMat::shift(4);
    let u1 = {
        let sizes = [1usize, 4, 4, 4, 1];
        let mut l = BlockLayout::new(&sizes, &sizes);
        l.set(0, 0, PolyMat::identity(1));
        l.set(1, 0, PolyMat::column_of(&neg_q(1), 4));
        l.set(1, 1, PolyMat::identity(4));
        l.set(2, 0, PolyMat::column_of(&q(2), 4));
        l.set(2, 1, shift_sum(4, &neg_q(1), &[0, 1]));
        l.set(2, 2, PolyMat::identity(4));
        l.set(3, 1, j4.scale(&q(2)));
        l.set(3, 2, shift_sum(4, &neg_q(1), &[0, 1]));
        l.set(3, 3, PolyMat::identity(4));
        l.set(4, 0, PolyMat::row_of(&neg_q(4), 1));
        l.set(4, 1, row_from(&[Some((1, 3)), None, None, Some((1, 3))]));
        l.set(4, 2, row_from(&[None, Some((1, 2)), None, Some((-1, 2))]));
        l.set(4, 3, row_from(&[Some((-1, 1)), Some((-1, 1)), None, None]));
        l.set(4, 4, PolyMat::identity(1));
        PolyMat::from_blocks(&l)?
    };
    let u2 = {
        let sizes = [1usize, 4, 4, 2, 2, 1];
        let mut l = BlockLayout::new(&sizes, &sizes);
        for (b, &s) in sizes.iter().enumerate() {
            l.set(b, b, PolyMat::identity(s));
        }
        l.set(4, 3, PolyMat::identity(2).scale(&neg_q(2)));
        PolyMat::from_blocks(&l)?
    };
    let t_mat = {
        let sizes = [1usize, 4, 4, 14];
        let mut l = BlockLayout::new(&sizes, &sizes);
        l.set(0, 0, PolyMat::identity(1));
        l.set(1, 0, PolyMat::column_of(&neg_q(1), 4));
        l.set(1, 1, PolyMat::identity(4));
        l.set(2, 0, PolyMat::column_of(&q(2), 4));
        l.set(2, 1, shift_sum(4, &neg_q(1), &[0, 1]));
        l.set(2, 2, PolyMat::identity(4));
        l.set(3, 3, u2.mat_mul(&u1)?);
        PolyMat::from_blocks(&l)?
    };

    let two_bracket = poly(&[(1, 0), (1, 2)]);
    let l_mat = {
        let mut l = BlockLayout::new(&[20, 3], &[20, 3]);
        l.set(0, 0, PolyMat::identity(20));
        let mut l0 = PolyMat::identity(3);
        l0.set(0, 1, q(2));
        l0.set(0, 2, neg_q(1));
        l0.set(2, 0, neg_q(1));
        l0.set(2, 1, q(5));
        l0.set(2, 2, two_bracket.clone());
        l.set(1, 1, l0);
        PolyMat::from_blocks(&l)?
    };
    let r_mat = {
        let mut l = BlockLayout::new(&[20, 3], &[20, 3]);
        l.set(0, 0, PolyMat::identity(20));
        let mut r0 = PolyMat::identity(3);
        r0.set(0, 1, neg_q(4));
        r0.set(0, 2, q(5));
        r0.set(1, 2, neg_q(1));
        r0.set(2, 1, neg_q(1));
        r0.set(2, 2, two_bracket);
        l.set(1, 1, r0);
        PolyMat::from_blocks(&l)?
    };
    let w_mat = {
        let rows = [1usize, 1, 4, 4, 6, 4, 2, 1];
        let cols = [1usize, 4, 4, 1, 4, 6, 2, 1];
        let mut l = BlockLayout::new(&rows, &cols);
        l.set(0, 3, PolyMat::identity(1));
        l.set(1, 0, PolyMat::identity(1));
        l.set(2, 4, PolyMat::identity(4));
        l.set(3, 1, PolyMat::identity(4));
        l.set(4, 5, PolyMat::identity(6));
        l.set(5, 2, PolyMat::identity(4));
        l.set(6, 6, PolyMat::identity(2));
        l.set(7, 7, PolyMat::identity(1));
        PolyMat::from_blocks(&l)?
    };

    let t = t_unit();
    let t2 = &t * &t;
    let t3 = &t2 * &t;
    let last = &t2 * &PolyZ::one_minus_q_pow(8);
    let mut claimed = vec![PolyZ::one()];
    claimed.extend(std::iter::repeat(t).take(5));
    claimed.extend(std::iter::repeat(t2).take(10));
    claimed.extend(std::iter::repeat(t3).take(6));
    claimed.push(last);

    // the printed right transform is (T P)^t R W^t = P^t T^t R W^t
    let rights = vec![
        p_mat.transpose(),
        t_mat.transpose(),
        r_mat.clone(),
        w_mat.transpose(),
    ];
    Ok(ModelSpec {
        id: ModelId::Pyramid4,
        size: 23,
        varchenko,
        left_pipeline: vec![w_mat, l_mat, t_mat, p_mat],
        right_pipeline: rights,
        claimed_snf: claimed,
        region_labels: pyramid_labels(4),
        arrangement: pyramid_arrangement(4)?,
        base_point: vec![Rat::zero(), Rat::zero(), Rat::one()],
    })
}

pub fn pentagonal() -> Result<ModelSpec, ModelError> {
    // deleted arrangement (the cone over C_5), 22 regions:
    // 0 | 1..5 | 12 23 34 45 15 | 123 234 345 145 125
    //   | 1234 2345 1345 1245 1235 | 12345
    let deleted = {
        let sizes = [1usize, 5, 5, 5, 5, 1];
        let words: &[(usize, usize, &[usize])] = &[
            (1, 1, &[0, 2, 2, 2, 2]),
            (1, 2, &[1, 3, 3, 3, 1]),
            (1, 3, &[2, 4, 4, 2, 2]),
            (1, 4, &[3, 5, 3, 3, 3]),
            (2, 2, &[0, 2, 4, 4, 2]),
            (2, 3, &[1, 3, 5, 3, 1]),
            (2, 4, &[2, 4, 4, 2, 2]),
            (3, 3, &[0, 2, 4, 4, 2]),
            (3, 4, &[1, 3, 3, 3, 1]),
            (4, 4, &[0, 2, 2, 2, 2]),
        ];
        let mut layout = BlockLayout::new(&sizes, &sizes);
        layout.set(0, 0, PolyMat::identity(1));
        layout.set(5, 5, PolyMat::identity(1));
        layout.set(0, 5, PolyMat::row_of(&q(5), 1));
        layout.set(5, 0, PolyMat::row_of(&q(5), 1));
        for b in 1..=4 {
            layout.set(0, b, PolyMat::row_of(&q(b), 5));
            layout.set(b, 0, PolyMat::column_of(&q(b), 5));
            layout.set(b, 5, PolyMat::column_of(&q(5 - b), 5));
            layout.set(5, b, PolyMat::row_of(&q(5 - b), 5));
        }
        for &(i, j, word) in words {
            let block = PolyMat::circulant(&monomials(word))?;
            if i != j {
                layout.set(j, i, block.transpose());
            }
            layout.set(i, j, block);
        }
        PolyMat::from_blocks(&layout)?
    };
    let restriction = cyclic::varchenko(5)?;
    let varchenko = reconstruct_from_split(&restriction, &deleted)?;
    let p_mat = split_transform(16, 6)?;

    let j5 = PolyMat::shift(5);
    let u1 = {
        let sizes = [1usize, 5, 5, 5, 5, 1];
        let mut l = BlockLayout::new(&sizes, &sizes);
        l.set(0, 0, PolyMat::identity(1));
        l.set(1, 0, PolyMat::column_of(&neg_q(1), 5));
        l.set(1, 1, PolyMat::identity(5));
        l.set(2, 0, PolyMat::column_of(&q(2), 5));
        l.set(2, 1, shift_sum(5, &neg_q(1), &[0, 1]));
        l.set(2, 2, PolyMat::identity(5));
        l.set(3, 1, j5.scale(&q(2)));
        l.set(3, 2, shift_sum(5, &neg_q(1), &[0, 1]));
        l.set(3, 3, PolyMat::identity(5));
        l.set(4, 1, j5.transpose().scale(&neg_q(5)));
        l.set(
            4,
            2,
            j5.scale(&q(2))
                .add(&j5.pow(3)?.add(&j5.transpose())?.scale(&q(4)))
                .expect("5x5"),
        );
        l.set(
            4,
            3,
            shift_sum(5, &neg_q(1), &[0, 1])
                .sub(&j5.pow(3)?.scale(&q(3)))
                .expect("5x5"),
        );
        l.set(4, 4, PolyMat::identity(5));
        l.set(5, 0, PolyMat::row_of(&neg_q(5), 1));
        l.set(
            5,
            1,
            row_from(&[Some((1, 4)), None, None, None, Some((1, 4))]),
        );
        l.set(5, 2, row_from(&[None, None, None, None, Some((-1, 3))]));
        l.set(5, 3, row_from(&[None, Some((1, 2)), None, None, None]));
        l.set(
            5,
            4,
            row_from(&[Some((-1, 1)), Some((-1, 1)), None, None, None]),
        );
        l.set(5, 5, PolyMat::identity(1));
        PolyMat::from_blocks(&l)?
    };
    let u2 = {
        let sizes = [1usize, 5, 5, 5, 5, 1];
        let mut l = BlockLayout::new(&sizes, &sizes);
        for (b, &s) in sizes.iter().enumerate() {
            l.set(b, b, PolyMat::identity(s));
        }
        // u = -q^2 (1-q^2) at the last two slots
        let u_entry = &neg_q(2) * &PolyZ::one_minus_q_sq();
        let mut u = PolyMat::zeros(1, 5);
        u.set(0, 3, u_entry.clone());
        u.set(0, 4, u_entry);
        l.set(5, 3, u);
        PolyMat::from_blocks(&l)?
    };
    let t_mat = {
        let sizes = [1usize, 5, 5, 5, 22];
        let mut l = BlockLayout::new(&sizes, &sizes);
        l.set(0, 0, PolyMat::identity(1));
        l.set(1, 0, PolyMat::column_of(&neg_q(1), 5));
        l.set(1, 1, PolyMat::identity(5));
        l.set(2, 0, PolyMat::column_of(&q(2), 5));
        l.set(2, 1, shift_sum(5, &neg_q(1), &[0, 1]));
        l.set(2, 2, PolyMat::identity(5));
        l.set(3, 1, j5.pow(2)?.scale(&q(2)));
        l.set(3, 2, shift_sum(5, &neg_q(1), &[0, 1]));
        l.set(3, 3, PolyMat::identity(5));
        l.set(4, 4, u2.mat_mul(&u1)?);
        PolyMat::from_blocks(&l)?
    };

    let l0 = {
        let mut m = PolyMat::zeros(6, 6);
        let rows: [[&[(i64, usize)]; 6]; 6] = [
            [&[(1, 0)], &[], &[(-1, 0)], &[(-1, 2)], &[], &[]],
            [&[], &[(1, 0)], &[], &[], &[(-1, 0), (-1, 2)], &[]],
            [
                &[],
                &[(1, 2)],
                &[(1, 0)],
                &[(-1, 0), (-1, 4), (1, 8)],
                &[(-1, 2), (-1, 4)],
                &[(-1, 1), (1, 5)],
            ],
            [
                &[],
                &[(-1, 3)],
                &[(-1, 1)],
                &[(-1, 1), (1, 3), (1, 5), (-1, 9)],
                &[(1, 3), (1, 5)],
                &[(1, 0), (1, 2), (-1, 6)],
            ],
            [
                &[],
                &[(-1, 2), (-1, 4)],
                &[(-1, 2)],
                &[(1, 2), (-1, 8), (-1, 10)],
                &[(1, 0), (2, 2), (2, 4), (1, 6)],
                &[(-1, 5), (-1, 7)],
            ],
            [
                &[(-1, 2)],
                &[(-2, 2)],
                &[],
                &[(1, 0), (1, 2), (-1, 8)],
                &[(1, 0), (1, 2), (1, 4)],
                &[(-1, 1), (-1, 5)],
            ],
        ];
        for (i, row) in rows.iter().enumerate() {
            for (j, pairs) in row.iter().enumerate() {
                if !pairs.is_empty() {
                    m.set(i, j, poly(pairs));
                }
            }
        }
        m
    };
    let r0 = {
        let mut m = PolyMat::zeros(6, 6);
        let rows: [[&[(i64, usize)]; 6]; 6] = [
            [
                &[(1, 0)],
                &[(1, 4)],
                &[(1, 0), (1, 4), (1, 6), (1, 8)],
                &[
                    (2, 1),
                    (2, 5),
                    (3, 7),
                    (1, 9),
                    (2, 11),
                    (2, 13),
                    (1, 15),
                ],
                &[(-1, 0), (2, 2), (2, 8), (1, 10)],
                &[(1, 0), (-1, 2), (1, 6)],
            ],
            [
                &[],
                &[(1, 0)],
                &[(1, 2), (1, 4)],
                &[(2, 3), (1, 5), (1, 7), (2, 9), (1, 11)],
                &[(1, 0), (1, 2), (1, 4), (1, 6)],
                &[(-1, 2), (-1, 4)],
            ],
            [
                &[],
                &[],
                &[(1, 0)],
                &[(1, 1), (1, 7)],
                &[(-1, 0), (1, 4)],
                &[(1, 0), (1, 2)],
            ],
            [&[], &[], &[], &[], &[(-1, 0)], &[(1, 0), (1, 2)]],
            [
                &[],
                &[],
                &[],
                &[(-1, 1), (1, 3)],
                &[(1, 0), (-1, 2)],
                &[(1, 2)],
            ],
            [&[], &[], &[], &[(1, 0)], &[(1, 1)], &[(-2, 1), (-1, 3)]],
        ];
        for (i, row) in rows.iter().enumerate() {
            for (j, pairs) in row.iter().enumerate() {
                if !pairs.is_empty() {
                    m.set(i, j, poly(pairs));
                }
            }
        }
        m
    };
    let l_mat = {
        let mut l = BlockLayout::new(&[32, 6], &[32, 6]);
        l.set(0, 0, PolyMat::identity(32));
        l.set(1, 1, l0);
        PolyMat::from_blocks(&l)?
    };
    let r_mat = {
        let mut l = BlockLayout::new(&[32, 6], &[32, 6]);
        l.set(0, 0, PolyMat::identity(32));
        l.set(1, 1, r0);
        PolyMat::from_blocks(&l)?
    };
    // W as printed is 33-dimensional while every other factor acts on 38
    // coordinates; it is kept verbatim and the verifier reports the
    // mismatch rather than papering over it.
    let w_mat = {
        let rows = [1usize, 1, 5, 5, 10, 5, 3, 3];
        let cols = [1usize, 5, 5, 1, 5, 10, 3, 3];
        let mut l = BlockLayout::new(&rows, &cols);
        l.set(0, 3, PolyMat::identity(1));
        l.set(1, 0, PolyMat::identity(1));
        l.set(2, 4, PolyMat::identity(5));
        l.set(3, 1, PolyMat::identity(5));
        l.set(4, 5, PolyMat::identity(10));
        l.set(5, 2, PolyMat::identity(5));
        l.set(6, 6, PolyMat::identity(3));
        l.set(7, 7, PolyMat::identity(3));
        PolyMat::from_blocks(&l)?
    };

    let t = t_unit();
    let t2 = &t * &t;
    let t3 = &t2 * &t;
    let last = &t2 * &PolyZ::one_minus_q_pow(10);
    let mut claimed = vec![PolyZ::one()];
    claimed.extend(std::iter::repeat(t).take(6));
    claimed.extend(std::iter::repeat(t2).take(15));
    claimed.extend(std::iter::repeat(t3).take(8));
    claimed.extend(std::iter::repeat(last).take(3));

    let rights = vec![
        p_mat.transpose(),
        t_mat.transpose(),
        r_mat.clone(),
        w_mat.transpose(),
    ];
    Ok(ModelSpec {
        id: ModelId::Pyramid5,
        size: 38,
        varchenko,
        left_pipeline: vec![w_mat, l_mat, t_mat, p_mat],
        right_pipeline: rights,
        claimed_snf: claimed,
        region_labels: pyramid_labels(5),
        arrangement: pyramid_arrangement(5)?,
        base_point: vec![Rat::zero(), Rat::zero(), Rat::one()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::apply_pipeline;

    #[test]
    fn square_deleted_corner_row() {
        let m = square().unwrap();
        assert_eq!(m.varchenko.rows(), 23);
        assert!(m.varchenko.is_symmetric());
        // the deleted block occupies rows 9..23; its last row reads
        // (q^4, q^3 x4, q^2 x4, q x4, 1)
        let last: Vec<PolyZ> = (9..23).map(|j| m.varchenko.get(22, j).clone()).collect();
        let expected: Vec<PolyZ> =
            [4usize, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 0]
                .iter()
                .map(|&e| q(e))
                .collect();
        assert_eq!(last, expected);
    }

    #[test]
    fn square_split_identity_holds() {
        // P V P^t == diag((1-q^2) V(C_4), V(cone))
        let m = square().unwrap();
        let p = split_transform(9, 5).unwrap();
        let transformed = PolyMat::congruence(&p, &m.varchenko).unwrap();
        let c4 = cyclic::varchenko(4).unwrap().scale(&t_unit());
        for r in 0..9 {
            for c in 0..9 {
                assert_eq!(transformed.get(r, c), c4.get(r, c));
            }
            for c in 9..23 {
                assert!(transformed.get(r, c).is_zero());
                assert!(transformed.get(c, r).is_zero());
            }
        }
    }

    #[test]
    fn square_pipeline_reaches_claimed_diagonal() {
        let m = square().unwrap();
        let out = apply_pipeline(&m.varchenko, &m.left_pipeline, &m.right_pipeline).unwrap();
        assert!(out.is_diagonal());
        assert_eq!(out.diagonal(), m.claimed_snf);
    }

    #[test]
    fn square_oracle_region_count() {
        let m = square().unwrap();
        assert_eq!(m.arrangement.regions().unwrap().len(), 23);
        assert_eq!(m.region_labels.len(), 23);
    }

    #[test]
    fn pentagonal_dimensions_disagree_by_design() {
        let m = pentagonal().unwrap();
        assert_eq!(m.varchenko.rows(), 38);
        assert_eq!(m.claimed_snf.len(), 33);
        assert_eq!(m.left_pipeline[0].rows(), 33); // W
        assert_eq!(m.left_pipeline[1].rows(), 38); // L
        assert_eq!(m.region_labels.len(), 38);
        assert!(m.varchenko.is_symmetric());
    }

    #[test]
    fn pentagonal_oracle_region_count() {
        let m = pentagonal().unwrap();
        assert_eq!(m.arrangement.regions().unwrap().len(), 38);
    }

    #[test]
    fn pentagonal_corner_blocks_are_unimodular() {
        let m = pentagonal().unwrap();
        // L (index 1 in lefts) and R (index 2 in rights)
        let dl = m.left_pipeline[1].determinant().unwrap();
        let dr = m.right_pipeline[2].determinant().unwrap();
        assert_eq!(&dl * &dl, PolyZ::one());
        assert_eq!(&dr * &dr, PolyZ::one());
    }
}
