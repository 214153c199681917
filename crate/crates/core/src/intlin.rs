//! Exact integer linear algebra.
//!
//! Dense matrices over arbitrary-precision integers, the Smith normal form
//! with both unimodular transforms (and their inverses), integer kernels,
//! integer solving, and an incremental row-Hermite reducer for building
//! lattice bases out of very many generating vectors.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A dense `rows × cols` integer matrix stored in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[BigInt]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Convenience constructor from small integer rows. All rows must have equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| BigInt::from(rows[i][j]))
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        assert!(
            columns.iter().all(|c| c.len() == rows),
            "column length mismatch"
        );
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &IntMatrix,
        f: impl Fn(&BigInt, &BigInt) -> BigInt,
    ) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} versus {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        }))
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of {} columns with {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        Self::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        Self::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    /// Kronecker product `self ⊗ other`, row index `(i, k) ↦ i·other.rows + k`.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            let (i, k) = (r / other.rows.max(1), r % other.rows.max(1));
            let (j, l) = (c / other.cols.max(1), c % other.cols.max(1));
            &self[(i, j)] * &other[(k, l)]
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * &a[(n - 1, n - 1)])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k · row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j];
            if !v.is_zero() {
                let add = v * k;
                self.data[dst * self.cols + j] += add;
            }
        }
    }

    /// col[dst] += k · col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src];
            if !v.is_zero() {
                let add = v * k;
                self.data[i * self.cols + dst] += add;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
            if i + 1 < self.rows {
                write!(f, ", ")?;
            }
        }
        write!(f, "]")
    }
}

/// `left · original · right = diag(d)`, with `left`, `right` unimodular.
///
/// The inverses of both transforms are tracked as well; they are needed to
/// move elements back out of the diagonalised coordinates.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    /// Nonzero diagonal entries first (positive, divisibility chain), then zeros,
    /// `min(rows, cols)` entries in total.
    pub d: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub left_inv: IntMatrix,
    pub right_inv: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.d.iter().take_while(|x| !x.is_zero()).count()
    }

    /// Solves `original · x = b` using the stored transforms.
    pub fn solve(&self, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        let rows = self.left.rows();
        let cols = self.right.rows();
        if b.len() != rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {rows} rows",
                b.len()
            )));
        }
        let lb = self.left.mul_vec(b)?;
        let rank = self.rank();
        let mut y = vec![BigInt::zero(); cols];
        for i in 0..rows {
            if i < rank {
                let (q, r) = lb[i].div_rem(&self.d[i]);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            } else if !lb[i].is_zero() {
                return Ok(None);
            }
        }
        Ok(Some(self.right.mul_vec(&y)?))
    }

    /// Columns of `right` beyond the rank: a basis of the integer kernel.
    pub fn kernel_basis(&self) -> IntMatrix {
        let rank = self.rank();
        let idx: Vec<usize> = (rank..self.right.cols()).collect();
        self.right.select_cols(&idx)
    }
}

/// `q` with `|a - q·b| ≤ |b| / 2`.
fn nearest_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if (&r + &r).abs() > b.abs() {
        q + 1
    } else {
        q
    }
}

fn find_min_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                let unit = abs.is_one();
                best = Some((i, j, abs));
                if unit {
                    let (i, j, _) = best.unwrap();
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

struct SnfState {
    a: IntMatrix,
    left: IntMatrix,
    left_inv: IntMatrix,
    right: IntMatrix,
    right_inv: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.left.swap_rows(i, j);
        self.left_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.right.swap_cols(i, j);
        self.right_inv.swap_rows(i, j);
    }

    /// row[dst] += k · row[src]
    fn row_op(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        self.left.add_row_multiple(dst, src, k);
        self.left_inv.add_col_multiple(src, dst, &-k);
    }

    /// col[dst] += k · col[src]
    fn col_op(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        self.right.add_col_multiple(dst, src, k);
        self.right_inv.add_row_multiple(src, dst, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.left.negate_row(i);
        self.left_inv.negate_col(i);
    }
}

/// Smith normal form with transforms. Total on every rectangular matrix.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = SnfState {
        a: m.clone(),
        left: IntMatrix::identity(rows),
        left_inv: IntMatrix::identity(rows),
        right: IntMatrix::identity(cols),
        right_inv: IntMatrix::identity(cols),
    };
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        let Some((pi, pj)) = find_min_nonzero(&s.a, t) else {
            break;
        };
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if s.a[(i, t)].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&s.a[(i, t)], &s.a[(t, t)]);
                s.row_op(i, t, &-q);
                if !s.a[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if s.a[(t, j)].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&s.a[(t, j)], &s.a[(t, t)]);
                s.col_op(j, t, &-q);
                if !s.a[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // Move the smallest remaining entry of row/column t onto the pivot.
                let mut best = (t, t, s.a[(t, t)].abs());
                for i in t + 1..rows {
                    let v = s.a[(i, t)].abs();
                    if !v.is_zero() && v < best.2 {
                        best = (i, t, v);
                    }
                }
                for j in t + 1..cols {
                    let v = s.a[(t, j)].abs();
                    if !v.is_zero() && v < best.2 {
                        best = (t, j, v);
                    }
                }
                s.swap_rows(t, best.0);
                s.swap_cols(t, best.1);
                continue;
            }
            // Pivot must divide every remaining entry.
            let pivot = s.a[(t, t)].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s.a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => s.row_op(t, i, &BigInt::one()),
                None => break,
            }
        }
        if s.a[(t, t)].is_negative() {
            s.negate_row(t);
        }
        t += 1;
    }
    let d = (0..n).map(|i| s.a[(i, i)].clone()).collect();
    SmithDecomposition {
        d,
        left: s.left,
        right: s.right,
        left_inv: s.left_inv,
        right_inv: s.right_inv,
    }
}

/// Basis (as columns) of the lattice `{x ∈ ℤ^cols : m·x = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    smith_normal_form(m).kernel_basis()
}

/// Some integer solution of `m·x = b`, or `None` when `b` is outside the column lattice.
pub fn solve(m: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            m.rows()
        )));
    }
    smith_normal_form(m).solve(b)
}

/// Incremental row-Hermite reduction of an integer lattice in `ℤ^dim`.
///
/// Vectors are inserted one at a time; the stored rows are always an
/// echelon basis of the lattice spanned so far. Once the lattice reaches
/// full rank with index `D`, it contains `D·ℤ^dim`, so all later entries
/// are reduced modulo `D` and stay bounded.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    dim: usize,
    pivots: Vec<Option<Vec<BigInt>>>,
    rank: usize,
    modulus: Option<BigInt>,
}

impl LatticeBasis {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            pivots: vec![None; dim],
            rank: 0,
            modulus: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn reduce_tail(&self, v: &mut [BigInt], from: usize) {
        if let Some(m) = &self.modulus {
            for x in &mut v[from..] {
                if !x.is_zero() {
                    *x = x.mod_floor(m);
                }
            }
        }
    }

    /// Adds `v` to the generating set. Returns `true` if the lattice grew.
    pub fn insert(&mut self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a lattice of dimension {}",
                v.len(),
                self.dim
            )));
        }
        let mut v = v.to_vec();
        self.reduce_tail(&mut v, 0);
        let mut changed = false;
        for col in 0..self.dim {
            if v[col].is_zero() {
                continue;
            }
            match self.pivots[col].take() {
                None => {
                    if v[col].is_negative() {
                        v.iter_mut().for_each(|x| *x = -std::mem::take(x));
                    }
                    self.reduce_tail(&mut v, col + 1);
                    self.pivots[col] = Some(v);
                    self.rank += 1;
                    self.refresh_modulus();
                    self.size_reduce();
                    return Ok(true);
                }
                Some(mut p) => {
                    let (a, b) = (p[col].clone(), v[col].clone());
                    if b.is_multiple_of(&a) {
                        let q = &b / &a;
                        for j in col..self.dim {
                            if !p[j].is_zero() {
                                let sub = &p[j] * &q;
                                v[j] -= sub;
                            }
                        }
                    } else {
                        let eg = a.extended_gcd(&b);
                        let (g, s, t) = (eg.gcd, eg.x, eg.y);
                        let (ag, bg) = (&a / &g, &b / &g);
                        for j in col..self.dim {
                            let (pj, vj) = (&p[j], &v[j]);
                            let np = &s * pj + &t * vj;
                            let nv = &ag * vj - &bg * pj;
                            p[j] = np;
                            v[j] = nv;
                        }
                        if p[col].is_negative() {
                            p.iter_mut().for_each(|x| *x = -std::mem::take(x));
                        }
                        changed = true;
                    }
                    self.reduce_tail(&mut p, col + 1);
                    self.reduce_tail(&mut v, col + 1);
                    self.pivots[col] = Some(p);
                }
            }
        }
        if changed {
            self.refresh_modulus();
            self.size_reduce();
        }
        Ok(changed)
    }

    /// Reduces each basis row against the pivots to its right, keeping entries small.
    fn size_reduce(&mut self) {
        let cols: Vec<usize> = (0..self.dim)
            .filter(|&c| self.pivots[c].is_some())
            .collect();
        for (k, &i) in cols.iter().enumerate() {
            let mut row = self.pivots[i].take().expect("pivot row");
            for &j in &cols[k + 1..] {
                let p = self.pivots[j].as_ref().expect("pivot row");
                if row[j].is_zero() {
                    continue;
                }
                let q = nearest_quotient(&row[j], &p[j]);
                if q.is_zero() {
                    continue;
                }
                for c in j..self.dim {
                    if !p[c].is_zero() {
                        let sub = &p[c] * &q;
                        row[c] -= sub;
                    }
                }
            }
            self.pivots[i] = Some(row);
        }
    }

    fn refresh_modulus(&mut self) {
        if self.rank < self.dim || self.dim == 0 {
            return;
        }
        let d: BigInt = self
            .pivots
            .iter()
            .map(|p| {
                p.as_ref().expect("full rank")[0..]
                    .iter()
                    .find(|x| !x.is_zero())
                    .cloned()
                    .unwrap()
            })
            .product();
        if self.modulus.as_ref() != Some(&d) {
            self.modulus = Some(d);
            let pivots = std::mem::take(&mut self.pivots);
            self.pivots = pivots
                .into_iter()
                .enumerate()
                .map(|(col, p)| {
                    p.map(|mut p| {
                        self.reduce_tail(&mut p, col + 1);
                        p
                    })
                })
                .collect();
        }
    }

    /// Basis vectors, in pivot order, as matrix rows.
    pub fn to_row_matrix(&self) -> IntMatrix {
        let rows: Vec<&Vec<BigInt>> = self.pivots.iter().flatten().collect();
        IntMatrix::from_fn(rows.len(), self.dim, |i, j| rows[i][j].clone())
    }

    /// Basis vectors as matrix columns.
    pub fn to_column_matrix(&self) -> IntMatrix {
        self.to_row_matrix().transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_decomposition(m: &IntMatrix, s: &SmithDecomposition) {
        let prod = s.left.mul(m).unwrap().mul(&s.right).unwrap();
        assert_eq!(prod, IntMatrix::diagonal(m.rows(), m.cols(), &s.d));
        assert_eq!(
            s.left.mul(&s.left_inv).unwrap(),
            IntMatrix::identity(m.rows())
        );
        assert_eq!(
            s.right.mul(&s.right_inv).unwrap(),
            IntMatrix::identity(m.cols())
        );
        let r = s.rank();
        assert!(s.d[r..].iter().all(Zero::is_zero));
        for w in s.d[..r].windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(s.d.iter().all(|x| !x.is_negative()));
    }

    fn sparse_random(rows: usize, cols: usize, seed: u64) -> IntMatrix {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(seed);
        IntMatrix::from_fn(rows, cols, |_, _| {
            let v: i64 = rng.gen_range(0..10);
            BigInt::from(if v < 7 { 0 } else { v - 8 })
        })
    }

    #[test]
    fn sparse_elimination_stays_small() {
        let m = sparse_random(40, 80, 7);
        let s = smith_normal_form(&m);
        check_decomposition(&m, &s);
        let k = s.kernel_basis();
        let mut lb = LatticeBasis::new(80);
        for j in 0..k.cols() {
            lb.insert(&k.column(j)).unwrap();
        }
        assert_eq!(lb.rank(), 80 - s.rank());
        let widest = lb
            .to_row_matrix()
            .entries()
            .iter()
            .map(|x| x.bits())
            .max()
            .unwrap();
        assert!(widest < 128, "{widest} bits");
    }

    #[test]
    fn nearest_quotient_centres_the_remainder() {
        for (a, b) in [
            (7, 3),
            (-7, 3),
            (7, -3),
            (-7, -3),
            (5, 2),
            (-5, 2),
            (6, 4),
            (0, 5),
        ] {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            let r = &a - nearest_quotient(&a, &b) * &b;
            assert!((&r + &r).abs() <= b.abs(), "{a} {b}");
        }
    }

    #[test]
    fn snf_identity() {
        let m = IntMatrix::identity(2);
        let s = smith_normal_form(&m);
        assert_eq!(s.d, big(&[1, 1]));
        check_decomposition(&m, &s);
    }

    #[test]
    fn snf_small_examples() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![4, 2]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.d, big(&[2, 6]));
        check_decomposition(&m, &s);

        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.d, big(&[1, 6]));
        check_decomposition(&m, &s);
    }

    #[test]
    fn snf_empty_dimensions() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let m = IntMatrix::zeros(r, c);
            let s = smith_normal_form(&m);
            assert!(s.d.is_empty());
            check_decomposition(&m, &s);
            assert_eq!(s.kernel_basis().cols(), c);
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&IntMatrix::zeros(2, 2)).cols(), 2);
        assert_eq!(kernel_basis(&IntMatrix::identity(2)).cols(), 0);
        let m = IntMatrix::from_rows(&[vec![2, -1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        let v = k.column(0);
        assert!(v == big(&[1, 2]) || v == big(&[-1, -2]));
    }

    #[test]
    fn solve_examples() {
        let b = big(&[5, -7]);
        assert_eq!(solve(&IntMatrix::identity(2), &b).unwrap(), Some(b.clone()));
        assert_eq!(
            solve(&IntMatrix::from_rows(&[vec![2]]), &big(&[3])).unwrap(),
            None
        );
        let m = IntMatrix::from_rows(&[vec![2, 3]]);
        let x = solve(&m, &big(&[1])).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), big(&[1]));
        assert!(matches!(
            solve(&m, &big(&[1, 2])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn det_bareiss() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![4, 2]]);
        assert_eq!(m.det().unwrap(), BigInt::from(-12));
        let m = IntMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]]);
        assert_eq!(m.det().unwrap(), BigInt::from(-5));
    }

    #[test]
    fn lattice_basis_matches_snf() {
        let vs = [vec![4, 6, 0], vec![2, 2, 2], vec![0, 4, 8], vec![6, 8, 2]];
        let mut lb = LatticeBasis::new(3);
        for v in &vs {
            lb.insert(&big(v)).unwrap();
        }
        let rows: Vec<Vec<i64>> = vs.to_vec();
        let direct = smith_normal_form(&IntMatrix::from_rows(&rows));
        let reduced = smith_normal_form(&lb.to_row_matrix());
        assert_eq!(direct.d[..direct.rank()], reduced.d[..reduced.rank()]);
    }

    #[test]
    fn lattice_basis_full_rank_modulus() {
        let vs = [
            vec![3, 1],
            vec![0, 4],
            vec![100, 1000],
            vec![6, 4002],
            vec![-9, 77],
        ];
        let mut lb = LatticeBasis::new(2);
        for v in &vs {
            lb.insert(&big(v)).unwrap();
        }
        let direct = smith_normal_form(&IntMatrix::from_rows(&vs));
        let index: BigInt = direct.d.iter().product();
        assert_eq!(lb.to_row_matrix().det().unwrap().abs(), index);
    }
}
