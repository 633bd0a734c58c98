//! The three Platonic models with printed data: tetrahedron (15 regions),
//! cube (27), octahedron (59). The tetrahedron matrix is stored whole; the
//! cube and octahedron matrices are stored as circulant words plus strip
//! layout so a transcription slip stays local and oracle-detectable.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::geometry::{Arrangement, Hyperplane};
use crate::matrix::{BlockLayout, PolyMat};
use crate::poly::PolyZ;

use super::{neg_q, poly, q, t_unit, ModelError, ModelId, ModelSpec, Rat};

fn labels(sets: &[&[usize]]) -> Vec<BTreeSet<usize>> {
    sets.iter().map(|s| s.iter().copied().collect()).collect()
}

fn monomials(word: &[usize]) -> Vec<PolyZ> {
    word.iter().map(|&k| q(k)).collect()
}

/// `q^e * (J^a + J^b + ...)` over the n-cycle shift.
fn shift_sum(n: usize, e: &PolyZ, powers: &[usize]) -> PolyMat {
    let shift = PolyMat::shift(n);
    let mut acc = PolyMat::zeros(n, n);
    for &a in powers {
        acc = acc.add(&shift.pow(a).expect("square")).expect("same size");
    }
    acc.scale(e)
}

fn claimed(blocks: &[(PolyZ, usize)]) -> Vec<PolyZ> {
    let mut out = Vec::new();
    for (entry, count) in blocks {
        out.extend(std::iter::repeat(entry.clone()).take(*count));
    }
    out
}

pub fn tetrahedron() -> Result<ModelSpec, ModelError> {
    // regions: 0 | 1 2 3 4 | 12 23 34 14 | 13 24 | 123 234 341 412
    let exponents: [[u32; 15]; 15] = [
        [0, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3],
        [1, 0, 2, 2, 2, 1, 3, 3, 1, 1, 3, 2, 4, 2, 2],
        [1, 2, 0, 2, 2, 1, 1, 3, 3, 3, 1, 2, 2, 4, 2],
        [1, 2, 2, 0, 2, 3, 1, 1, 3, 1, 3, 2, 2, 2, 4],
        [1, 2, 2, 2, 0, 3, 3, 1, 1, 3, 1, 4, 2, 2, 2],
        [2, 1, 1, 3, 3, 0, 2, 4, 2, 2, 2, 1, 3, 3, 1],
        [2, 3, 1, 1, 3, 2, 0, 2, 4, 2, 2, 1, 1, 3, 3],
        [2, 3, 3, 1, 1, 4, 2, 0, 2, 2, 2, 3, 1, 1, 3],
        [2, 1, 3, 3, 1, 2, 4, 2, 0, 2, 2, 3, 3, 1, 1],
        [2, 1, 3, 1, 3, 2, 2, 2, 2, 0, 4, 1, 3, 1, 3],
        [2, 3, 1, 3, 1, 2, 2, 2, 2, 4, 0, 3, 1, 3, 1],
        [3, 2, 2, 2, 4, 1, 1, 3, 3, 1, 3, 0, 2, 2, 2],
        [3, 4, 2, 2, 2, 3, 1, 1, 3, 3, 1, 2, 0, 2, 2],
        [3, 2, 4, 2, 2, 3, 3, 1, 1, 1, 3, 2, 2, 0, 2],
        [3, 2, 2, 4, 2, 1, 3, 3, 1, 3, 1, 2, 2, 2, 0],
    ];
    let grid: Vec<Vec<u32>> = exponents.iter().map(|r| r.to_vec()).collect();
    let varchenko = PolyMat::from_exponents(&grid);

    // strips 0 | singles | adjacent pairs | diagonal pairs | triples
    let sizes = [1usize, 4, 4, 2, 4];
    let paired = PolyMat::tiled_identity(2, 2); // (I_2 | I_2)
    let mut pl = BlockLayout::new(&sizes, &sizes);
    pl.set(0, 0, PolyMat::identity(1));
    pl.set(1, 0, PolyMat::column_of(&neg_q(1), 4));
    pl.set(1, 1, PolyMat::identity(4));
    pl.set(2, 0, PolyMat::column_of(&q(2), 4));
    pl.set(2, 1, shift_sum(4, &neg_q(1), &[0, 1]));
    pl.set(2, 2, PolyMat::identity(4));
    pl.set(3, 0, PolyMat::column_of(&q(2), 2));
    pl.set(3, 1, paired.scale(&neg_q(1)));
    pl.set(3, 3, PolyMat::identity(2));
    pl.set(4, 0, PolyMat::column_of(&neg_q(3), 4));
    pl.set(4, 1, shift_sum(4, &q(2), &[0, 1, 2]));
    pl.set(4, 2, shift_sum(4, &neg_q(1), &[0, 1]));
    pl.set(4, 3, paired.transpose().scale(&neg_q(1)));
    pl.set(4, 4, PolyMat::identity(4));
    let p_mat = PolyMat::from_blocks(&pl)?;

    let t = t_unit();
    let t2 = &t * &t;
    let t3 = &t2 * &t;
    let arrangement = Arrangement::new(
        3,
        vec![
            Hyperplane::from_i64(&[1, 1, 1], 1),
            Hyperplane::from_i64(&[1, -1, -1], 1),
            Hyperplane::from_i64(&[-1, 1, -1], 1),
            Hyperplane::from_i64(&[-1, -1, 1], 1),
        ],
    )?;
    Ok(ModelSpec {
        id: ModelId::Tetrahedron,
        size: 15,
        varchenko,
        right_pipeline: vec![p_mat.transpose()],
        left_pipeline: vec![p_mat],
        claimed_snf: claimed(&[(PolyZ::one(), 1), (t, 4), (t2, 6), (t3, 4)]),
        region_labels: labels(&[
            &[],
            &[1],
            &[2],
            &[3],
            &[4],
            &[1, 2],
            &[2, 3],
            &[3, 4],
            &[1, 4],
            &[1, 3],
            &[2, 4],
            &[1, 2, 3],
            &[2, 3, 4],
            &[3, 4, 1],
            &[4, 1, 2],
        ]),
        arrangement,
        base_point: vec![Rat::zero(), Rat::zero(), Rat::zero()],
    })
}

pub fn cube() -> Result<ModelSpec, ModelError> {
    // regions: 0 | 1..6 | 12 23 34 45 56 61 | 13 24 35 46 15 26
    //            | 123 234 345 456 561 612 | 135 246
    let sizes = [1usize, 6, 6, 6, 6, 2];
    let q_exp = [1usize, 2, 2, 3, 3];
    // upper circulant words (v_ij, 1 <= i <= j <= 5) with block shapes
    let words: &[(usize, usize, &[usize], (usize, usize))] = &[
        (1, 1, &[0, 2, 2, 2, 2, 2], (6, 6)),
        (1, 2, &[1, 3, 3, 3, 3, 1], (6, 6)),
        (1, 3, &[1, 3, 3, 3, 1, 3], (6, 6)),
        (1, 4, &[2, 4, 4, 4, 2, 2], (6, 6)),
        (1, 5, &[2, 4], (6, 2)),
        (2, 2, &[0, 2, 4, 4, 4, 2], (6, 6)),
        (2, 3, &[2, 2, 4, 4, 2, 2], (6, 6)),
        (2, 4, &[1, 3, 5, 5, 3, 1], (6, 6)),
        (2, 5, &[3, 3], (6, 2)),
        (3, 3, &[0, 4, 2, 4, 2, 4], (6, 6)),
        (3, 4, &[1, 3, 3, 5, 3, 3], (6, 6)),
        (3, 5, &[1, 5], (6, 2)),
        (4, 4, &[0, 2, 4, 6, 4, 2], (6, 6)),
        (4, 5, &[2, 4], (6, 2)),
        (5, 5, &[0, 6], (2, 2)),
    ];
    let mut layout = BlockLayout::new(&sizes, &sizes);
    layout.set(0, 0, PolyMat::identity(1));
    for (b, &e) in q_exp.iter().enumerate() {
        let width = sizes[b + 1];
        layout.set(0, b + 1, PolyMat::row_of(&q(e), width));
        layout.set(b + 1, 0, PolyMat::column_of(&q(e), width));
    }
    for &(i, j, word, (rows, cols)) in words {
        let block = PolyMat::circulant_block(&monomials(word), rows, cols)?;
        if i != j {
            layout.set(j, i, block.transpose());
        }
        layout.set(i, j, block);
    }
    let varchenko = PolyMat::from_blocks(&layout)?;

    let tiled = PolyMat::tiled_identity(2, 3); // (I_2 | I_2 | I_2)
    let mut ul = BlockLayout::new(&sizes, &sizes);
    ul.set(0, 0, PolyMat::identity(1));
    ul.set(1, 0, PolyMat::column_of(&neg_q(1), 6));
    ul.set(1, 1, PolyMat::identity(6));
    ul.set(2, 0, PolyMat::column_of(&q(2), 6));
    ul.set(2, 1, shift_sum(6, &neg_q(1), &[0, 1]));
    ul.set(2, 2, PolyMat::identity(6));
    ul.set(3, 0, PolyMat::column_of(&q(2), 6));
    ul.set(3, 1, shift_sum(6, &neg_q(1), &[0, 2]));
    ul.set(3, 3, PolyMat::identity(6));
    ul.set(4, 0, PolyMat::column_of(&neg_q(3), 6));
    ul.set(4, 1, shift_sum(6, &q(2), &[0, 1, 2]));
    ul.set(4, 2, shift_sum(6, &neg_q(1), &[0, 1]));
    ul.set(4, 3, PolyMat::identity(6).scale(&neg_q(1)));
    ul.set(4, 4, PolyMat::identity(6));
    ul.set(5, 0, PolyMat::column_of(&neg_q(3), 2));
    ul.set(5, 1, tiled.scale(&q(2)));
    ul.set(5, 3, tiled.scale(&neg_q(1)));
    ul.set(5, 5, PolyMat::identity(2));
    let u_mat = PolyMat::from_blocks(&ul)?;

    let t = t_unit();
    let t2 = &t * &t;
    let t3 = &t2 * &t;
    let arrangement = Arrangement::new(
        3,
        vec![
            Hyperplane::from_i64(&[1, 0, 0], 1),
            Hyperplane::from_i64(&[0, 1, 0], 1),
            Hyperplane::from_i64(&[0, 0, 1], 1),
            Hyperplane::from_i64(&[-1, 0, 0], 1),
            Hyperplane::from_i64(&[0, -1, 0], 1),
            Hyperplane::from_i64(&[0, 0, -1], 1),
        ],
    )?;
    Ok(ModelSpec {
        id: ModelId::Cube,
        size: 27,
        varchenko,
        right_pipeline: vec![u_mat.transpose()],
        left_pipeline: vec![u_mat],
        claimed_snf: claimed(&[(PolyZ::one(), 1), (t, 6), (t2, 12), (t3, 8)]),
        region_labels: labels(&[
            &[],
            &[1],
            &[2],
            &[3],
            &[4],
            &[5],
            &[6],
            &[1, 2],
            &[2, 3],
            &[3, 4],
            &[4, 5],
            &[5, 6],
            &[6, 1],
            &[1, 3],
            &[2, 4],
            &[3, 5],
            &[4, 6],
            &[1, 5],
            &[2, 6],
            &[1, 2, 3],
            &[2, 3, 4],
            &[3, 4, 5],
            &[4, 5, 6],
            &[5, 6, 1],
            &[6, 1, 2],
            &[1, 3, 5],
            &[2, 4, 6],
        ]),
        arrangement,
        base_point: vec![Rat::zero(), Rat::zero(), Rat::zero()],
    })
}

pub fn octahedron() -> Result<ModelSpec, ModelError> {
    // region strips:
    // 0 | 1..6 | 7 8 | 16 12 23 34 45 56 | 17 28 37 48 57 68
    //   | 167 128 237 348 457 568 | 157 268 137 248 357 468
    //   | 567 168 127 238 347 458 | 156 126 123 234 345 456
    //   | 1267 1238 2347 3458 4567 1568 | 1357 2468
    //   | 1567 1268 1237 2348 3457 4568
    let sizes = [1usize, 6, 2, 6, 6, 6, 6, 6, 6, 6, 2, 6];
    let q_exp = [1usize, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4];
    let words: &[(usize, usize, &[usize], (usize, usize))] = &[
        (1, 1, &[0, 2, 2, 2, 2, 2], (6, 6)),
        (1, 2, &[2, 2], (6, 2)),
        (1, 3, &[1, 1, 3, 3, 3, 3], (6, 6)),
        (1, 4, &[1, 3, 3, 3, 3, 3], (6, 6)),
        (1, 5, &[2, 2, 4, 4, 4, 4], (6, 6)),
        (1, 6, &[2, 4, 2, 4, 4, 4], (6, 6)),
        (1, 7, &[4, 2, 2, 4, 4, 4], (6, 6)),
        (1, 8, &[2, 2, 2, 4, 4, 4], (6, 6)),
        (1, 9, &[3, 3, 5, 5, 5, 3], (6, 6)),
        (1, 10, &[3, 5], (6, 2)),
        (1, 11, &[3, 3, 3, 5, 5, 5], (6, 6)),
        (2, 2, &[0, 2], (2, 2)),
        (2, 3, &[3, 3, 3, 3, 3, 3], (2, 6)),
        (2, 4, &[1, 3, 1, 3, 1, 3], (2, 6)),
        (2, 5, &[2, 4, 2, 4, 2, 4], (2, 6)),
        (2, 6, &[2, 4, 2, 4, 2, 4], (2, 6)),
        (2, 7, &[2, 4, 2, 4, 2, 4], (2, 6)),
        (2, 8, &[4, 4, 4, 4, 4, 4], (2, 6)),
        (2, 9, &[3, 5, 3, 5, 3, 5], (2, 6)),
        (2, 10, &[3, 5], (2, 2)),
        (2, 11, &[3, 5, 3, 5, 3, 5], (2, 6)),
        (3, 3, &[0, 2, 4, 4, 4, 2], (6, 6)),
        (3, 4, &[2, 4, 4, 4, 4, 2], (6, 6)),
        (3, 5, &[1, 3, 5, 5, 5, 3], (6, 6)),
        (3, 6, &[3, 3, 3, 5, 5, 3], (6, 6)),
        (3, 7, &[3, 1, 3, 5, 5, 5], (6, 6)),
        (3, 8, &[1, 1, 3, 5, 5, 3], (6, 6)),
        (3, 9, &[2, 4, 6, 6, 4, 2], (6, 6)),
        (3, 10, &[4, 4], (6, 2)),
        (3, 11, &[2, 2, 4, 6, 6, 4], (6, 6)),
        (4, 4, &[0, 4, 2, 4, 2, 4], (6, 6)),
        (4, 5, &[1, 3, 3, 5, 3, 5], (6, 6)),
        (4, 6, &[1, 5, 1, 5, 3, 5], (6, 6)),
        (4, 7, &[3, 3, 1, 5, 3, 5], (6, 6)),
        (4, 8, &[3, 3, 3, 5, 5, 5], (6, 6)),
        (4, 9, &[2, 4, 4, 6, 4, 4], (6, 6)),
        (4, 10, &[2, 6], (6, 2)),
        (4, 11, &[2, 4, 2, 6, 4, 6], (6, 6)),
        (5, 5, &[0, 4, 4, 6, 4, 4], (6, 6)),
        (5, 6, &[2, 4, 2, 6, 4, 4], (6, 6)),
        (5, 7, &[2, 2, 2, 6, 4, 6], (6, 6)),
        (5, 8, &[2, 2, 4, 6, 6, 4], (6, 6)),
        (5, 9, &[1, 5, 5, 7, 3, 3], (6, 6)),
        (5, 10, &[3, 5], (6, 2)),
        (5, 11, &[1, 3, 3, 7, 5, 5], (6, 6)),
        (6, 6, &[0, 6, 2, 6, 2, 6], (6, 6)),
        (6, 7, &[2, 4, 2, 6, 4, 4], (6, 6)),
        (6, 8, &[2, 4, 4, 6, 4, 4], (6, 6)),
        (6, 9, &[3, 5, 5, 5, 3, 3], (6, 6)),
        (6, 10, &[1, 7], (6, 2)),
        (6, 11, &[1, 5, 3, 7, 3, 5], (6, 6)),
        (7, 7, &[0, 4, 4, 6, 4, 4], (6, 6)),
        (7, 8, &[2, 4, 6, 6, 4, 2], (6, 6)),
        (7, 9, &[3, 7, 5, 5, 1, 3], (6, 6)),
        (7, 10, &[3, 5], (6, 2)),
        (7, 11, &[1, 5, 5, 7, 3, 3], (6, 6)),
        (8, 8, &[0, 2, 4, 6, 4, 2], (6, 6)),
        (8, 9, &[3, 5, 7, 5, 3, 1], (6, 6)),
        (8, 10, &[3, 5], (6, 2)),
        (8, 11, &[1, 3, 5, 7, 5, 3], (6, 6)),
        (9, 9, &[0, 4, 4, 8, 4, 4], (6, 6)),
        (9, 10, &[4, 4], (6, 2)),
        (9, 11, &[2, 2, 2, 6, 6, 6], (6, 6)),
        (10, 10, &[0, 2], (2, 2)),
        (10, 11, &[2, 6, 2, 6, 2, 6], (2, 6)),
        (11, 11, &[0, 4, 4, 8, 4, 4], (6, 6)),
    ];
    let mut layout = BlockLayout::new(&sizes, &sizes);
    layout.set(0, 0, PolyMat::identity(1));
    for (b, &e) in q_exp.iter().enumerate() {
        let width = sizes[b + 1];
        layout.set(0, b + 1, PolyMat::row_of(&q(e), width));
        layout.set(b + 1, 0, PolyMat::column_of(&q(e), width));
    }
    for &(i, j, word, (rows, cols)) in words {
        let block = PolyMat::circulant_block(&monomials(word), rows, cols)?;
        if i != j {
            layout.set(j, i, block.transpose());
        }
        layout.set(i, j, block);
    }
    let varchenko = PolyMat::from_blocks(&layout)?;

    let id6 = PolyMat::identity(6);
    let tiled = PolyMat::tiled_identity(2, 3); // bold I_2, 2x6
    let tiled_t = tiled.transpose();
    let j6 = PolyMat::shift(6);
    let u_mat = {
        let mut ul = BlockLayout::new(&sizes, &sizes);
        ul.set(0, 0, PolyMat::identity(1));
        ul.set(1, 0, PolyMat::column_of(&neg_q(1), 6));
        ul.set(1, 1, id6.clone());
        ul.set(2, 0, PolyMat::column_of(&neg_q(1), 2));
        ul.set(2, 2, PolyMat::identity(2));
        ul.set(3, 0, PolyMat::column_of(&q(2), 6));
        ul.set(3, 1, shift_sum(6, &neg_q(1), &[0, 5]));
        ul.set(3, 3, id6.clone());
        ul.set(4, 0, PolyMat::column_of(&q(2), 6));
        ul.set(4, 1, id6.scale(&neg_q(1)));
        ul.set(4, 2, tiled_t.scale(&neg_q(1)));
        ul.set(4, 4, id6.clone());
        ul.set(5, 1, id6.scale(&q(2)));
        ul.set(5, 3, id6.scale(&neg_q(1)));
        ul.set(5, 4, id6.scale(&neg_q(1)));
        ul.set(5, 5, id6.clone());
        ul.set(6, 2, tiled_t.scale(&q(2)));
        ul.set(6, 4, shift_sum(6, &neg_q(1), &[0, 4]));
        ul.set(6, 6, id6.clone());
        ul.set(
            7,
            1,
            id6.scale(&neg_q(4))
                .add(&j6.pow(4)?.scale(&q(2)))
                .expect("6x6"),
        );
        ul.set(
            7,
            3,
            id6.scale(&q(3)).sub(&j6.pow(5)?.scale(&q(1))).expect("6x6"),
        );
        ul.set(
            7,
            4,
            id6.scale(&q(3)).sub(&j6.pow(4)?.scale(&q(1))).expect("6x6"),
        );
        ul.set(7, 5, id6.scale(&neg_q(2)));
        ul.set(7, 7, id6.clone());
        ul.set(8, 1, j6.pow(5)?.scale(&q(2)));
        ul.set(8, 2, tiled_t.scale(&neg_q(4)));
        ul.set(8, 3, shift_sum(6, &neg_q(1), &[0, 5]));
        ul.set(8, 4, shift_sum(6, &q(3), &[0, 4]));
        ul.set(8, 6, id6.scale(&neg_q(2)));
        ul.set(8, 8, id6.clone());
        ul.set(9, 1, id6.scale(&neg_q(3)));
        ul.set(9, 3, shift_sum(6, &q(2), &[0, 1]));
        ul.set(9, 4, id6.scale(&q(2)));
        ul.set(9, 5, id6.scale(&neg_q(1)));
        ul.set(9, 7, j6.pow(2)?.scale(&neg_q(1)));
        ul.set(9, 8, j6.scale(&neg_q(1)));
        ul.set(9, 9, id6.clone());
        ul.set(10, 2, PolyMat::identity(2).scale(&neg_q(3)));
        ul.set(10, 4, tiled.scale(&q(2)));
        ul.set(10, 6, tiled.scale(&neg_q(1)));
        ul.set(10, 10, PolyMat::identity(2));
        ul.set(11, 0, PolyMat::column_of(&neg_q(4), 6));
        ul.set(11, 1, shift_sum(6, &q(3), &[4, 5]));
        ul.set(11, 3, j6.pow(5)?.scale(&neg_q(2)));
        ul.set(11, 4, id6.scale(&q(2)));
        ul.set(11, 5, id6.scale(&neg_q(1)));
        ul.set(11, 6, id6.scale(&neg_q(1)));
        ul.set(11, 11, id6.clone());
        PolyMat::from_blocks(&ul)?
    };

    // L and R act on the last five strips (coordinates 34..59)
    let tail = [33usize, 6, 6, 6, 2, 6];
    let two_bracket = poly(&[(1, 0), (1, 2)]); // 1 + q^2
    let l_mat = {
        let mut ll = BlockLayout::new(&tail, &tail);
        ll.set(0, 0, PolyMat::identity(33));
        ll.set(1, 1, id6.clone());
        ll.set(1, 2, id6.scale(&q(2)));
        ll.set(1, 5, id6.scale(&neg_q(1)));
        ll.set(2, 2, id6.clone());
        ll.set(3, 3, id6.clone());
        ll.set(4, 4, PolyMat::identity(2));
        ll.set(5, 1, id6.scale(&neg_q(1)));
        ll.set(5, 2, id6.scale(&q(5)));
        ll.set(5, 5, id6.scale(&two_bracket));
        PolyMat::from_blocks(&ll)?
    };
    let r_mat = {
        let mut rl = BlockLayout::new(&tail, &tail);
        rl.set(0, 0, PolyMat::identity(33));
        rl.set(1, 1, id6.clone());
        rl.set(1, 2, id6.scale(&neg_q(4)));
        rl.set(1, 5, id6.scale(&q(5)));
        rl.set(2, 2, id6.clone());
        rl.set(2, 5, id6.scale(&neg_q(1)));
        rl.set(3, 3, id6.clone());
        rl.set(4, 4, PolyMat::identity(2));
        rl.set(5, 2, id6.scale(&neg_q(1)));
        rl.set(5, 5, id6.scale(&two_bracket));
        PolyMat::from_blocks(&rl)?
    };

    let t = t_unit();
    let t2 = &t * &t;
    let t3 = &t2 * &t;
    let last = &t2 * &PolyZ::one_minus_q_pow(8);
    let arrangement = Arrangement::new(
        3,
        vec![
            Hyperplane::from_i64(&[1, 1, 1], 1),
            Hyperplane::from_i64(&[-1, 1, 1], 1),
            Hyperplane::from_i64(&[-1, -1, 1], 1),
            Hyperplane::from_i64(&[-1, -1, -1], 1),
            Hyperplane::from_i64(&[1, -1, -1], 1),
            Hyperplane::from_i64(&[1, 1, -1], 1),
            Hyperplane::from_i64(&[1, -1, 1], 1),
            Hyperplane::from_i64(&[-1, 1, -1], 1),
        ],
    )?;
    Ok(ModelSpec {
        id: ModelId::Octahedron,
        size: 59,
        varchenko,
        right_pipeline: vec![u_mat.transpose(), r_mat],
        left_pipeline: vec![l_mat, u_mat],
        claimed_snf: claimed(&[
            (PolyZ::one(), 1),
            (t, 8),
            (t2, 24),
            (t3, 20),
            (last, 6),
        ]),
        region_labels: labels(&[
            &[],
            &[1],
            &[2],
            &[3],
            &[4],
            &[5],
            &[6],
            &[7],
            &[8],
            &[1, 6],
            &[1, 2],
            &[2, 3],
            &[3, 4],
            &[4, 5],
            &[5, 6],
            &[1, 7],
            &[2, 8],
            &[3, 7],
            &[4, 8],
            &[5, 7],
            &[6, 8],
            &[1, 6, 7],
            &[1, 2, 8],
            &[2, 3, 7],
            &[3, 4, 8],
            &[4, 5, 7],
            &[5, 6, 8],
            &[1, 5, 7],
            &[2, 6, 8],
            &[1, 3, 7],
            &[2, 4, 8],
            &[3, 5, 7],
            &[4, 6, 8],
            &[5, 6, 7],
            &[1, 6, 8],
            &[1, 2, 7],
            &[2, 3, 8],
            &[3, 4, 7],
            &[4, 5, 8],
            &[1, 5, 6],
            &[1, 2, 6],
            &[1, 2, 3],
            &[2, 3, 4],
            &[3, 4, 5],
            &[4, 5, 6],
            &[1, 2, 6, 7],
            &[1, 2, 3, 8],
            &[2, 3, 4, 7],
            &[3, 4, 5, 8],
            &[4, 5, 6, 7],
            &[1, 5, 6, 8],
            &[1, 3, 5, 7],
            &[2, 4, 6, 8],
            &[1, 5, 6, 7],
            &[1, 2, 6, 8],
            &[1, 2, 3, 7],
            &[2, 3, 4, 8],
            &[3, 4, 5, 7],
            &[4, 5, 6, 8],
        ]),
        arrangement,
        base_point: vec![Rat::zero(), Rat::zero(), Rat::zero()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::apply_pipeline;

    #[test]
    fn tetrahedron_first_row_and_symmetry() {
        let m = tetrahedron().unwrap();
        assert_eq!(m.varchenko.rows(), 15);
        assert!(m.varchenko.is_symmetric());
        let first: Vec<PolyZ> = (0..15).map(|j| m.varchenko.get(0, j).clone()).collect();
        let expected: Vec<PolyZ> = [0usize, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3]
            .iter()
            .map(|&e| q(e))
            .collect();
        assert_eq!(first, expected);
    }

    #[test]
    fn tetrahedron_pipeline_diagonalizes() {
        let m = tetrahedron().unwrap();
        let out = apply_pipeline(&m.varchenko, &m.left_pipeline, &m.right_pipeline).unwrap();
        assert!(out.is_diagonal());
        assert_eq!(out.diagonal(), m.claimed_snf);
    }

    #[test]
    fn cube_blocks_match_printed_words() {
        let m = cube().unwrap();
        assert_eq!(m.varchenko.rows(), 27);
        assert!(m.varchenko.is_symmetric());
        // v_11 starts at region index 1
        let v11 = PolyMat::circulant(&monomials(&[0, 2, 2, 2, 2, 2])).unwrap();
        for r in 0..6 {
            for c in 0..6 {
                assert_eq!(m.varchenko.get(1 + r, 1 + c), v11.get(r, c));
            }
        }
        // v_15 block sits at rows 1..7, cols 25..27
        let v15 = PolyMat::circulant_block(&monomials(&[2, 4]), 6, 2).unwrap();
        for r in 0..6 {
            for c in 0..2 {
                assert_eq!(m.varchenko.get(1 + r, 25 + c), v15.get(r, c));
            }
        }
    }

    #[test]
    fn octahedron_v66_word() {
        let m = octahedron().unwrap();
        assert_eq!(m.varchenko.rows(), 59);
        assert!(m.varchenko.is_symmetric());
        // strip 6 (labels 167..568) starts at 1+6+2+6+6 = 21
        let v66 = PolyMat::circulant(&monomials(&[0, 6, 2, 6, 2, 6])).unwrap();
        for r in 0..6 {
            for c in 0..6 {
                assert_eq!(m.varchenko.get(21 + r, 21 + c), v66.get(r, c));
            }
        }
    }

    #[test]
    fn octahedron_l_and_r_are_unimodular() {
        let m = octahedron().unwrap();
        // left pipeline is [L, U], right is [U^t, R]
        for f in m.left_pipeline.iter().chain(&m.right_pipeline) {
            let d = f.determinant().unwrap();
            assert_eq!(&d * &d, PolyZ::one());
        }
    }

    #[test]
    fn label_counts_match_region_counts() {
        for m in [tetrahedron().unwrap(), cube().unwrap(), octahedron().unwrap()] {
            assert_eq!(m.region_labels.len(), m.size);
            assert_eq!(
                m.arrangement.regions().unwrap().len(),
                m.size,
                "{}",
                m.id
            );
        }
    }
}
