//! Dense matrices over `Z[q]` with the structured constructors the model
//! pipelines need: circulants, reverse circulants, rectangular circulant
//! blocks, the cyclic shift `J`, the antidiagonal involution `K`, block
//! assembly, the congruence action `M -> T M T^t`, and exact determinants
//! by fraction-free (Bareiss) elimination.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::poly::PolyZ;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("a circulant needs a nonempty first row")]
    EmptyRow,
    #[error("inconsistent block layout: {0}")]
    BadBlocks(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("cannot parse matrix: {0}")]
    Parse(String),
}

/// Row-major dense matrix with `PolyZ` entries.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMat {
    rows: usize,
    cols: usize,
    entries: Vec<PolyZ>,
}

impl PolyMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMat {
            rows,
            cols,
            entries: vec![PolyZ::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, PolyZ::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> PolyZ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMat {
            rows,
            cols,
            entries,
        }
    }

    /// Matrix of monomials `q^e` from a grid of exponents.
    pub fn from_exponents(grid: &[Vec<u32>]) -> Self {
        let rows = grid.len();
        let cols = grid.first().map_or(0, |r| r.len());
        Self::from_fn(rows, cols, |i, j| PolyZ::q_pow(grid[i][j] as usize))
    }

    /// Permutation matrix with `P[i, perm[i]] = 1`, so `P * M` takes row
    /// `perm[i]` of `M` to row `i`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            m.set(i, j, PolyZ::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &PolyZ {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: PolyZ) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn transpose(&self) -> PolyMat {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<PolyZ> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn scale(&self, p: &PolyZ) -> PolyMat {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * p)
    }

    pub fn add(&self, other: &PolyMat) -> Result<PolyMat, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::DimensionMismatch(format!(
                "add {}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn sub(&self, other: &PolyMat) -> Result<PolyMat, MatrixError> {
        self.add(&other.scale(&PolyZ::constant(-1)))
    }

    pub fn mat_mul(&self, other: &PolyMat) -> Result<PolyMat, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "mul {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = PolyZ::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(k, j);
                if b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            acc
        }))
    }

    pub fn pow(&self, k: usize) -> Result<PolyMat, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mat_mul(self)?;
        }
        Ok(acc)
    }

    /// The congruence action `T * M * T^t`.
    pub fn congruence(t: &PolyMat, m: &PolyMat) -> Result<PolyMat, MatrixError> {
        if !m.is_square() {
            return Err(MatrixError::NotSquare {
                rows: m.rows,
                cols: m.cols,
            });
        }
        t.mat_mul(m)?.mat_mul(&t.transpose())
    }

    /// Circulant `C(a_1, ..., a_n)`: each row is the previous one shifted
    /// cyclically to the right.
    pub fn circulant(first_row: &[PolyZ]) -> Result<PolyMat, MatrixError> {
        let n = first_row.len();
        if n == 0 {
            return Err(MatrixError::EmptyRow);
        }
        Ok(Self::from_fn(n, n, |i, j| {
            first_row[(n + j - i) % n].clone()
        }))
    }

    /// Reverse circulant `RC(a_1, ..., a_n)`: each row is the previous one
    /// shifted cyclically to the left. Always symmetric.
    pub fn reverse_circulant(first_row: &[PolyZ]) -> Result<PolyMat, MatrixError> {
        let n = first_row.len();
        if n == 0 {
            return Err(MatrixError::EmptyRow);
        }
        Ok(Self::from_fn(n, n, |i, j| first_row[(i + j) % n].clone()))
    }

    /// Rectangular block of a circulant: entry `(r, c)` is
    /// `word[(c - r) mod word.len()]`. With `rows = cols = word.len()` this
    /// is the ordinary circulant; the model tables use `6x2` and `2x6`
    /// slabs of period-2 and period-6 words.
    pub fn circulant_block(
        word: &[PolyZ],
        rows: usize,
        cols: usize,
    ) -> Result<PolyMat, MatrixError> {
        let n = word.len();
        if n == 0 {
            return Err(MatrixError::EmptyRow);
        }
        Ok(Self::from_fn(rows, cols, |i, j| {
            word[(j % n + n - i % n) % n].clone()
        }))
    }

    /// Cyclic shift permutation `J` with `J[r, r+1 mod n] = 1`; `J^n = I`.
    pub fn shift(n: usize) -> PolyMat {
        Self::from_fn(n, n, |i, j| {
            if (i + 1) % n == j {
                PolyZ::one()
            } else {
                PolyZ::zero()
            }
        })
    }

    /// Antidiagonal involution `K`; `K^2 = I`.
    pub fn antidiag(n: usize) -> PolyMat {
        Self::from_fn(n, n, |i, j| {
            if i + j == n - 1 {
                PolyZ::one()
            } else {
                PolyZ::zero()
            }
        })
    }

    /// Column vector with every entry `p`.
    pub fn column_of(p: &PolyZ, rows: usize) -> PolyMat {
        Self::from_fn(rows, 1, |_, _| p.clone())
    }

    /// Row vector with every entry `p`.
    pub fn row_of(p: &PolyZ, cols: usize) -> PolyMat {
        Self::from_fn(1, cols, |_, _| p.clone())
    }

    /// `(I_b | I_b | ... | I_b)` with `copies` horizontal copies.
    pub fn tiled_identity(block: usize, copies: usize) -> PolyMat {
        Self::from_fn(block, block * copies, |i, j| {
            if j % block == i {
                PolyZ::one()
            } else {
                PolyZ::zero()
            }
        })
    }

    pub fn from_blocks(layout: &BlockLayout) -> Result<PolyMat, MatrixError> {
        layout.assemble()
    }

    /// Exact determinant. Triangular and permutation inputs take fast
    /// paths; everything else goes through fraction-free one-step Bareiss
    /// elimination, which stays in `Z[q]` (every division is exact).
    pub fn determinant(&self) -> Result<PolyZ, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(PolyZ::one());
        }
        if self.is_triangular() {
            let mut det = PolyZ::one();
            for i in 0..n {
                det = &det * self.get(i, i);
            }
            return Ok(det);
        }
        if let Some(sign) = self.permutation_sign() {
            return Ok(PolyZ::constant(sign));
        }

        let mut m: Vec<Vec<PolyZ>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = 1i64;
        let mut prev = PolyZ::one();
        for k in 0..n - 1 {
            // prefer the lowest-degree pivot to limit growth
            let pivot = (k..n)
                .filter(|&r| !m[r][k].is_zero())
                .min_by_key(|&r| m[r][k].degree().unwrap_or(0));
            let Some(pivot) = pivot else {
                return Ok(PolyZ::zero());
            };
            if pivot != k {
                m.swap(pivot, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss quotients divide exactly over an integral domain");
                }
                m[i][k] = PolyZ::zero();
            }
            prev = m[k][k].clone();
        }
        Ok(&m[n - 1][n - 1] * &PolyZ::constant(sign))
    }

    fn is_triangular(&self) -> bool {
        let lower = (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()));
        let upper = (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j).is_zero()));
        lower || upper
    }

    /// `Some(sign)` when this is a signed permutation matrix.
    fn permutation_sign(&self) -> Option<i64> {
        let n = self.rows;
        let mut perm = Vec::with_capacity(n);
        let mut negations = 0usize;
        for i in 0..n {
            let mut hit = None;
            for j in 0..n {
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                if hit.is_some() || e.degree() != Some(0) {
                    return None;
                }
                let c = e.coeff(0);
                if c.is_one() {
                    hit = Some(j);
                } else if (-&c).is_one() {
                    hit = Some(j);
                    negations += 1;
                } else {
                    return None;
                }
            }
            perm.push(hit?);
        }
        let mut seen = vec![false; n];
        for &j in &perm {
            if seen[j] {
                return None;
            }
            seen[j] = true;
        }
        // parity by counting inversions; n stays small here
        let mut inversions = 0usize;
        for a in 0..n {
            for b in a + 1..n {
                if perm[a] > perm[b] {
                    inversions += 1;
                }
            }
        }
        let mut sign = if inversions % 2 == 0 { 1 } else { -1 };
        if negations % 2 == 1 {
            sign = -sign;
        }
        Some(sign)
    }

    /// JSON form `{"rows": R, "cols": C, "entries": [[[c0, c1, ...], ...], ...]}`
    /// with ascending coefficient lists. Coefficients that do not fit `i64`
    /// are written as decimal strings.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = (0..self.rows)
            .map(|i| {
                let row: Vec<Value> = (0..self.cols)
                    .map(|j| {
                        let coeffs: Vec<Value> = self
                            .get(i, j)
                            .coeffs()
                            .iter()
                            .map(|c| match i64::try_from(c) {
                                Ok(v) => json!(v),
                                Err(_) => json!(c.to_string()),
                            })
                            .collect();
                        Value::Array(coeffs)
                    })
                    .collect();
                Value::Array(row)
            })
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": entries })
    }

    pub fn from_json(v: &Value) -> Result<PolyMat, MatrixError> {
        let obj = v
            .as_object()
            .ok_or_else(|| MatrixError::Parse("expected a JSON object".into()))?;
        let rows = obj
            .get("rows")
            .and_then(Value::as_u64)
            .ok_or_else(|| MatrixError::Parse("missing numeric `rows`".into()))?
            as usize;
        let cols = obj
            .get("cols")
            .and_then(Value::as_u64)
            .ok_or_else(|| MatrixError::Parse("missing numeric `cols`".into()))?
            as usize;
        let entries = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| MatrixError::Parse("missing `entries` array".into()))?;
        if entries.len() != rows {
            return Err(MatrixError::Parse(format!(
                "expected {rows} rows, found {}",
                entries.len()
            )));
        }
        let mut out = Vec::with_capacity(rows * cols);
        for (i, row) in entries.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| MatrixError::Parse(format!("row {i} is not an array")))?;
            if row.len() != cols {
                return Err(MatrixError::Parse(format!(
                    "row {i}: expected {cols} entries, found {}",
                    row.len()
                )));
            }
            for (j, entry) in row.iter().enumerate() {
                let coeffs = entry.as_array().ok_or_else(|| {
                    MatrixError::Parse(format!("entry ({i}, {j}) is not a coefficient list"))
                })?;
                let mut cs = Vec::with_capacity(coeffs.len());
                for (k, c) in coeffs.iter().enumerate() {
                    let big = match c {
                        Value::Number(n) => n
                            .as_i64()
                            .map(BigInt::from)
                            .or_else(|| n.as_u64().map(BigInt::from)),
                        Value::String(s) => s.parse::<BigInt>().ok(),
                        _ => None,
                    };
                    cs.push(big.ok_or_else(|| {
                        MatrixError::Parse(format!(
                            "entry ({i}, {j}) coefficient {k} is not an integer"
                        ))
                    })?);
                }
                out.push(PolyZ::new(cs));
            }
        }
        Ok(PolyMat {
            rows,
            cols,
            entries: out,
        })
    }

    /// One matrix row per line, entries rendered by the polynomial printer.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Aligned plain-text rendering.
    pub fn to_pretty(&self) -> String {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        let mut widths = vec![0usize; self.cols];
        for row in &cells {
            for (j, c) in row.iter().enumerate() {
                widths[j] = widths[j].max(c.len());
            }
        }
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, c)| format!("{c:>w$}", w = widths[j]))
                .collect();
            out.push_str(&line.join("  "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMat({}x{})\n{}", self.rows, self.cols, self.to_pretty())
    }
}

/// Grid of blocks with declared strip sizes; block `(i, j)` must be
/// `row_sizes[i] x col_sizes[j]`.
pub struct BlockLayout {
    pub row_sizes: Vec<usize>,
    pub col_sizes: Vec<usize>,
    pub blocks: Vec<Vec<PolyMat>>,
}

impl BlockLayout {
    /// All-zero blocks to start from; fill with [`BlockLayout::set`].
    pub fn new(row_sizes: &[usize], col_sizes: &[usize]) -> Self {
        let blocks = row_sizes
            .iter()
            .map(|&r| col_sizes.iter().map(|&c| PolyMat::zeros(r, c)).collect())
            .collect();
        BlockLayout {
            row_sizes: row_sizes.to_vec(),
            col_sizes: col_sizes.to_vec(),
            blocks,
        }
    }

    pub fn set(&mut self, i: usize, j: usize, block: PolyMat) -> &mut Self {
        self.blocks[i][j] = block;
        self
    }

    fn assemble(&self) -> Result<PolyMat, MatrixError> {
        for (i, row) in self.blocks.iter().enumerate() {
            if row.len() != self.col_sizes.len() {
                return Err(MatrixError::BadBlocks(format!(
                    "block row {i} has {} blocks, expected {}",
                    row.len(),
                    self.col_sizes.len()
                )));
            }
            for (j, b) in row.iter().enumerate() {
                if b.rows() != self.row_sizes[i] || b.cols() != self.col_sizes[j] {
                    return Err(MatrixError::BadBlocks(format!(
                        "block ({i}, {j}) is {}x{}, expected {}x{}",
                        b.rows(),
                        b.cols(),
                        self.row_sizes[i],
                        self.col_sizes[j]
                    )));
                }
            }
        }
        let total_rows: usize = self.row_sizes.iter().sum();
        let total_cols: usize = self.col_sizes.iter().sum();
        let mut out = PolyMat::zeros(total_rows, total_cols);
        let mut row_base = 0;
        for (i, row) in self.blocks.iter().enumerate() {
            let mut col_base = 0;
            for (j, b) in row.iter().enumerate() {
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        out.set(row_base + r, col_base + c, b.get(r, c).clone());
                    }
                }
                col_base += self.col_sizes[j];
            }
            row_base += self.row_sizes[i];
        }
        Ok(out)
    }
}

/// Apply a full congruence pipeline: `(L_1 ... L_k) * V * (R_1 ... R_m)`.
pub fn apply_pipeline(
    v: &PolyMat,
    lefts: &[PolyMat],
    rights: &[PolyMat],
) -> Result<PolyMat, MatrixError> {
    let mut out = v.clone();
    for l in lefts.iter().rev() {
        out = l.mat_mul(&out)?;
    }
    for r in rights {
        out = out.mat_mul(r)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: usize) -> PolyZ {
        PolyZ::q_pow(k)
    }

    #[test]
    fn circulant_small() {
        let c = PolyMat::circulant(&[PolyZ::one(), q(2), q(2)]).unwrap();
        assert_eq!(c.rows(), 3);
        assert_eq!(c.get(0, 0), &PolyZ::one());
        assert_eq!(c.get(1, 0), &q(2));
        assert_eq!(c.get(1, 1), &PolyZ::one());
        assert_eq!(c.get(2, 2), &PolyZ::one());
        assert_eq!(c.get(2, 0), &q(2));

        let single = PolyMat::circulant(&[q(4)]).unwrap();
        assert_eq!(single.rows(), 1);
        assert_eq!(single.get(0, 0), &q(4));

        assert_eq!(PolyMat::circulant(&[]), Err(MatrixError::EmptyRow));
    }

    #[test]
    fn reverse_circulant_is_symmetric() {
        let rc = PolyMat::reverse_circulant(&[q(3), q(3), q(3), q(3), q(1)]).unwrap();
        assert!(rc.is_symmetric());
        // row 2 is row 1 shifted left
        assert_eq!(rc.get(1, 0), &q(3));
        assert_eq!(rc.get(1, 3), &q(1));
        let two = PolyMat::reverse_circulant(&[q(1), q(2)]).unwrap();
        assert_eq!(two.get(0, 0), &q(1));
        assert_eq!(two.get(0, 1), &q(2));
        assert_eq!(two.get(1, 0), &q(2));
        assert_eq!(two.get(1, 1), &q(1));
    }

    #[test]
    fn circulant_block_readings_agree_for_periodic_words() {
        // period-2 word in a 6x2 slab: rows alternate
        let slab = PolyMat::circulant_block(&[q(2), q(4)], 6, 2).unwrap();
        for r in 0..6 {
            let (a, b) = if r % 2 == 0 { (2, 4) } else { (4, 2) };
            assert_eq!(slab.get(r, 0), &q(a));
            assert_eq!(slab.get(r, 1), &q(b));
        }
        // the alternative reading: first two columns of the 6x6 circulant
        // over the periodically extended word
        let word6: Vec<PolyZ> = (0..6).map(|k| if k % 2 == 0 { q(2) } else { q(4) }).collect();
        let full = PolyMat::circulant(&word6).unwrap();
        for r in 0..6 {
            for c in 0..2 {
                assert_eq!(slab.get(r, c), full.get(r, c));
            }
        }
        // square case degenerates to the ordinary circulant
        let w = [q(0), q(2), q(4)];
        assert_eq!(
            PolyMat::circulant_block(&w, 3, 3).unwrap(),
            PolyMat::circulant(&w).unwrap()
        );
        // 2x6 slab of a 6-letter word: first two rows of the circulant
        let c26 = PolyMat::circulant_block(&word6, 2, 6).unwrap();
        for r in 0..2 {
            for c in 0..6 {
                assert_eq!(c26.get(r, c), full.get(r, c));
            }
        }
    }

    #[test]
    fn shift_and_antidiag_relations() {
        let j5 = PolyMat::shift(5);
        assert_eq!(j5.pow(5).unwrap(), PolyMat::identity(5));
        let j2 = PolyMat::shift(2);
        assert_eq!(j2.get(0, 1), &PolyZ::one());
        assert_eq!(j2.get(1, 0), &PolyZ::one());
        let k6 = PolyMat::antidiag(6);
        assert_eq!(k6.pow(2).unwrap(), PolyMat::identity(6));
        let k3 = PolyMat::antidiag(3);
        assert_eq!(k3.get(0, 2), &PolyZ::one());
        assert_eq!(k3.get(1, 1), &PolyZ::one());
        assert_eq!(k3.get(2, 0), &PolyZ::one());
        // J^a K is an involution for every power
        for n in 2..=8usize {
            let j = PolyMat::shift(n);
            let k = PolyMat::antidiag(n);
            for a in 0..n {
                let jk = j.pow(a).unwrap().mat_mul(&k).unwrap();
                assert_eq!(jk.pow(2).unwrap(), PolyMat::identity(n), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn mul_identity_and_mismatch() {
        let m = PolyMat::circulant(&[q(1), q(3), q(1)]).unwrap();
        assert_eq!(PolyMat::identity(3).mat_mul(&m).unwrap(), m);
        assert!(m.mat_mul(&PolyMat::identity(4)).is_err());
    }

    #[test]
    fn congruence_identity() {
        let m = PolyMat::reverse_circulant(&[q(2), q(4), q(4)]).unwrap();
        assert_eq!(PolyMat::congruence(&PolyMat::identity(3), &m).unwrap(), m);
    }

    #[test]
    fn from_blocks_small_and_errors() {
        let mut layout = BlockLayout::new(&[1, 1], &[1, 1]);
        layout.set(0, 0, PolyMat::row_of(&q(1), 1));
        layout.set(1, 1, PolyMat::row_of(&q(2), 1));
        let m = PolyMat::from_blocks(&layout).unwrap();
        assert_eq!(m.get(0, 0), &q(1));
        assert_eq!(m.get(1, 1), &q(2));
        assert!(m.get(0, 1).is_zero());

        let mut bad = BlockLayout::new(&[1, 2], &[2]);
        bad.set(0, 0, PolyMat::zeros(2, 2));
        assert!(PolyMat::from_blocks(&bad).is_err());
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(
            PolyMat::identity(5).determinant().unwrap(),
            PolyZ::one()
        );
        // a signed permutation
        let mut p = PolyMat::zeros(3, 3);
        p.set(0, 1, PolyZ::one());
        p.set(1, 0, PolyZ::one());
        p.set(2, 2, PolyZ::constant(-1));
        assert_eq!(p.determinant().unwrap(), PolyZ::one());
        // dense 2x2 over Z[q]
        let mut m = PolyMat::zeros(2, 2);
        m.set(0, 0, PolyZ::one());
        m.set(0, 1, q(1));
        m.set(1, 0, q(1));
        m.set(1, 1, PolyZ::one());
        assert_eq!(m.determinant().unwrap(), PolyZ::one_minus_q_sq());
        assert!(PolyMat::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = PolyMat::from_fn(2, 3, |i, j| {
            &PolyZ::from_i64(&[i as i64, -(j as i64)]) + &PolyZ::one()
        });
        let v = m.to_json();
        let back = PolyMat::from_json(&v).unwrap();
        assert_eq!(back, m);
        assert!(PolyMat::from_json(&serde_json::json!({"rows": 1})).is_err());
    }

    #[test]
    fn csv_uses_polynomial_rendering() {
        let mut m = PolyMat::zeros(1, 2);
        m.set(0, 0, PolyZ::one_minus_q_sq());
        m.set(0, 1, q(3));
        assert_eq!(m.to_csv(), "1 - q^2,q^3\n");
    }

    mod properties {
        use super::*;
        use num_bigint::BigInt;
        use num_rational::BigRational;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = PolyZ> {
            prop::collection::vec(-4i64..=4, 0..=4).prop_map(|v| PolyZ::from_i64(&v))
        }

        fn arb_mat(n: usize) -> impl Strategy<Value = PolyMat> {
            prop::collection::vec(arb_poly(), n * n).prop_map(move |v| {
                let mut it = v.into_iter();
                PolyMat::from_fn(n, n, |_, _| it.next().unwrap())
            })
        }

        proptest! {
            #[test]
            fn transpose_involution_and_product(a in arb_mat(3), b in arb_mat(3)) {
                prop_assert_eq!(a.transpose().transpose(), a.clone());
                let ab = a.mat_mul(&b).unwrap();
                prop_assert_eq!(ab.transpose(), b.transpose().mat_mul(&a.transpose()).unwrap());
            }

            #[test]
            fn reverse_circulant_symmetry(word in prop::collection::vec(arb_poly(), 1..=7)) {
                prop_assert!(PolyMat::reverse_circulant(&word).unwrap().is_symmetric());
            }

            #[test]
            fn determinant_multiplicative_at_points(a in arb_mat(4), b in arb_mat(4)) {
                let da = a.determinant().unwrap();
                let db = b.determinant().unwrap();
                let dab = a.mat_mul(&b).unwrap().determinant().unwrap();
                for v in [2i64, 3, 5] {
                    let x = BigRational::from(BigInt::from(v));
                    prop_assert_eq!(dab.eval(&x), da.eval(&x) * db.eval(&x));
                }
            }
        }
    }
}
