//! The dihedral family `D_n`: the cyclic arrangement raised to prisms in
//! three-space plus one horizontal plane cutting all of them. Regions come
//! in mirror pairs; the matrix is `2(np+1)`-square with doubled blocks
//! `(C_ij, qJ^{i-1}K C_ij; qJ^{i-1}K C_ij, C_ij)`, and the `R T S P`
//! congruence reaches `diag(1, t I_{n+1}, t^2 I_{np}, t^3 I_{n(p-1)})`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::geometry::{Arrangement, Hyperplane};
use crate::matrix::{BlockLayout, PolyMat};
use crate::poly::PolyZ;

use super::cyclic;
use super::{neg_q, polygon_directions, q, t_unit, ModelError, ModelId, ModelSpec, Rat};

fn check_n(n: usize) -> Result<(), ModelError> {
    if n < 3 {
        Err(ModelError::NTooSmall(n))
    } else {
        Ok(())
    }
}

/// Strip sizes: two scalar strips for the central mirror pair, then an
/// upper/lower pair of n-strips per ring.
fn strip_sizes(n: usize) -> Vec<usize> {
    let p = cyclic::rings(n);
    let mut sizes = vec![1usize, 1];
    sizes.extend(std::iter::repeat(n).take(2 * p));
    sizes
}

/// `q J^{i-1} K C_{ij}`, the reverse-circulant mirror block.
pub fn mirror_block(n: usize, i: usize, j: usize) -> Result<PolyMat, ModelError> {
    let c = PolyMat::circulant(&cyclic::block_word(n, i, j))?;
    let jk = PolyMat::shift(n)
        .pow(i - 1)?
        .mat_mul(&PolyMat::antidiag(n))?;
    Ok(jk.mat_mul(&c)?.scale(&q(1)))
}

pub fn varchenko(n: usize) -> Result<PolyMat, ModelError> {
    check_n(n)?;
    let p = cyclic::rings(n);
    let sizes = strip_sizes(n);
    let mut layout = BlockLayout::new(&sizes, &sizes);
    layout.set(0, 0, PolyMat::identity(1));
    layout.set(1, 1, PolyMat::identity(1));
    layout.set(0, 1, PolyMat::row_of(&q(1), 1));
    layout.set(1, 0, PolyMat::row_of(&q(1), 1));
    for r in 1..=p {
        let (upper, lower) = (2 * r, 2 * r + 1);
        layout.set(0, upper, PolyMat::row_of(&q(r), n));
        layout.set(0, lower, PolyMat::row_of(&q(r + 1), n));
        layout.set(1, upper, PolyMat::row_of(&q(r + 1), n));
        layout.set(1, lower, PolyMat::row_of(&q(r), n));
        layout.set(upper, 0, PolyMat::column_of(&q(r), n));
        layout.set(lower, 0, PolyMat::column_of(&q(r + 1), n));
        layout.set(upper, 1, PolyMat::column_of(&q(r + 1), n));
        layout.set(lower, 1, PolyMat::column_of(&q(r), n));
    }
    for i in 1..=p {
        for j in i..=p {
            let same = PolyMat::circulant(&cyclic::block_word(n, i, j))?;
            let cross = mirror_block(n, i, j)?;
            layout.set(2 * i, 2 * j, same.clone());
            layout.set(2 * i + 1, 2 * j + 1, same.clone());
            layout.set(2 * i, 2 * j + 1, cross.clone());
            layout.set(2 * i + 1, 2 * j, cross.clone());
            if i != j {
                // the mirror blocks are symmetric reverse circulants
                layout.set(2 * j, 2 * i, same.transpose());
                layout.set(2 * j + 1, 2 * i + 1, same.transpose());
                layout.set(2 * j, 2 * i + 1, cross.clone());
                layout.set(2 * j + 1, 2 * i, cross);
            }
        }
    }
    Ok(PolyMat::from_blocks(&layout)?)
}

/// The four congruence factors; the left transform is `R T S P`.
pub fn transforms(n: usize) -> Result<(PolyMat, PolyMat, PolyMat, PolyMat), ModelError> {
    check_n(n)?;
    let p = cyclic::rings(n);
    let sizes = strip_sizes(n);
    let id_n = PolyMat::identity(n);
    let shift = PolyMat::shift(n);
    let anti = PolyMat::antidiag(n);

    let mut pl = BlockLayout::new(&sizes, &sizes);
    pl.set(0, 0, PolyMat::identity(1));
    pl.set(1, 1, PolyMat::identity(1));
    pl.set(1, 0, PolyMat::row_of(&neg_q(1), 1));
    pl.set(2, 0, PolyMat::column_of(&neg_q(1), n));
    pl.set(3, 1, PolyMat::column_of(&neg_q(1), n));
    for r in 1..=p {
        pl.set(2 * r, 2 * r, id_n.clone());
        pl.set(2 * r + 1, 2 * r + 1, id_n.clone());
        if r >= 2 {
            pl.set(2 * r, 2 * r - 2, id_n.scale(&neg_q(1)));
            pl.set(2 * r + 1, 2 * r - 1, id_n.scale(&neg_q(1)));
        }
    }
    let p_mat = PolyMat::from_blocks(&pl)?;

    let mut sl = BlockLayout::new(&sizes, &sizes);
    sl.set(0, 0, PolyMat::identity(1));
    sl.set(1, 1, PolyMat::identity(1));
    for r in 1..=p {
        sl.set(2 * r, 2 * r, id_n.clone());
        sl.set(2 * r + 1, 2 * r + 1, id_n.clone());
        if r >= 2 {
            sl.set(2 * r, 2 * r - 2, shift.scale(&neg_q(1)));
            sl.set(2 * r + 1, 2 * r - 1, shift.scale(&neg_q(1)));
        }
    }
    let s_mat = PolyMat::from_blocks(&sl)?;

    let mut tl = BlockLayout::new(&sizes, &sizes);
    tl.set(0, 0, PolyMat::identity(1));
    tl.set(1, 1, PolyMat::identity(1));
    for r in 1..=p {
        tl.set(2 * r, 2 * r, id_n.clone());
        tl.set(2 * r + 1, 2 * r + 1, id_n.clone());
        let jk = shift.pow(r - 1)?.mat_mul(&anti)?;
        tl.set(2 * r + 1, 2 * r, jk.scale(&neg_q(1)));
    }
    let t_mat = PolyMat::from_blocks(&tl)?;

    // R gathers the doubled diagonal: identity on the first 2 + 2n
    // coordinates, then all upper strips of rings >= 2 before all lower
    // strips.
    let total = 2 * (n * p + 1);
    let strip_offset = |b: usize| -> usize {
        match b {
            0 => 0,
            1 => 1,
            _ => 2 + (b - 2) * n,
        }
    };
    let mut order: Vec<usize> = vec![0, 1, 2, 3];
    for r in 2..=p {
        order.push(2 * r);
    }
    for r in 2..=p {
        order.push(2 * r + 1);
    }
    let mut perm = Vec::with_capacity(total);
    for &b in &order {
        let base = strip_offset(b);
        let len = sizes[b];
        perm.extend(base..base + len);
    }
    let r_mat = PolyMat::permutation(&perm);

    Ok((p_mat, s_mat, t_mat, r_mat))
}

pub fn claimed_snf(n: usize) -> Result<Vec<PolyZ>, ModelError> {
    check_n(n)?;
    let p = cyclic::rings(n);
    let t = t_unit();
    let t2 = &t * &t;
    let t3 = &t2 * &t;
    let mut out = vec![PolyZ::one()];
    out.extend(std::iter::repeat(t).take(n + 1));
    out.extend(std::iter::repeat(t2).take(n * p));
    out.extend(std::iter::repeat(t3).take(n * (p - 1)));
    Ok(out)
}

/// Separating sets from the upper central region. The horizontal plane has
/// index `n + 1`; upper ring regions use ascending edge intervals, lower
/// ones descending intervals shifted by the mirror.
pub fn region_labels(n: usize) -> Vec<BTreeSet<usize>> {
    let p = cyclic::rings(n);
    let h = n + 1;
    let mut out: Vec<BTreeSet<usize>> = vec![BTreeSet::new(), BTreeSet::from([h])];
    for r in 1..=p {
        for x in 0..n {
            out.push((0..r).map(|k| (x + k) % n + 1).collect());
        }
        for x in 1..=n {
            let mut label: BTreeSet<usize> =
                (0..r).map(|k| (2 * n - x - k) % n + 1).collect();
            label.insert(h);
            out.push(label);
        }
    }
    out
}

/// Vertical prism planes over the n-gon edges plus the horizontal plane.
pub fn arrangement(n: usize) -> Result<Arrangement, ModelError> {
    check_n(n)?;
    let mut hyperplanes: Vec<Hyperplane> = polygon_directions(n)
        .into_iter()
        .map(|(x, y)| {
            Hyperplane::new(vec![x, y, Rat::zero()], Rat::one()).expect("unit normal")
        })
        .collect();
    hyperplanes.push(Hyperplane::new(
        vec![Rat::zero(), Rat::zero(), Rat::one()],
        Rat::zero(),
    )?);
    Ok(Arrangement::new(3, hyperplanes)?)
}

pub fn model(n: usize) -> Result<ModelSpec, ModelError> {
    let varchenko = varchenko(n)?;
    let (p_mat, s_mat, t_mat, r_mat) = transforms(n)?;
    let rights = vec![
        p_mat.transpose(),
        s_mat.transpose(),
        t_mat.transpose(),
        r_mat.transpose(),
    ];
    Ok(ModelSpec {
        id: ModelId::Dihedral(n),
        size: varchenko.rows(),
        varchenko,
        left_pipeline: vec![r_mat, t_mat, s_mat, p_mat],
        right_pipeline: rights,
        claimed_snf: claimed_snf(n)?,
        region_labels: region_labels(n),
        arrangement: arrangement(n)?,
        base_point: vec![Rat::zero(), Rat::zero(), Rat::one()],
    })
}
