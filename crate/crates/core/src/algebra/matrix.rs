use std::ops::{Index, IndexMut};

use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Dense row-major matrix. Arithmetic goes through a [`Ring`] descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn zeros<R: Ring<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, ring.zero())
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m[(i, i)] = ring.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [E] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[E]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<T: Clone>(&self, f: impl FnMut(&E) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<E> Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(a.cols, b.rows, "inner dimensions differ");
    let mut out = Matrix::zeros(ring, a.rows, b.cols);
    for i in 0..a.rows {
        for k in 0..a.cols {
            let x = &a[(i, k)];
            if ring.is_zero(x) {
                continue;
            }
            let brow = b.row(k);
            let orow = out.row_mut(i);
            for (o, y) in orow.iter_mut().zip(brow) {
                if !ring.is_zero(y) {
                    ring.mul_add_assign(o, x, y);
                }
            }
        }
    }
    out
}

pub fn mat_vec<R: Ring>(ring: &R, a: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    assert_eq!(a.cols, v.len());
    a.rows_iter()
        .map(|row| {
            let mut acc = ring.zero();
            for (x, y) in row.iter().zip(v) {
                if !ring.is_zero(x) && !ring.is_zero(y) {
                    ring.mul_add_assign(&mut acc, x, y);
                }
            }
            acc
        })
        .collect()
}

pub fn mat_add<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Matrix {
        rows: a.rows,
        cols: a.cols,
        data: a
            .data
            .iter()
            .zip(&b.data)
            .map(|(x, y)| ring.add(x, y))
            .collect(),
    }
}

pub fn mat_scale<R: Ring>(ring: &R, a: &Matrix<R::Elem>, c: &R::Elem) -> Matrix<R::Elem> {
    a.map(|x| ring.mul(x, c))
}

pub fn trace<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> R::Elem {
    (0..a.rows.min(a.cols)).fold(ring.zero(), |acc, i| ring.add(&acc, &a[(i, i)]))
}

pub fn is_zero_matrix<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> bool {
    a.data.iter().all(|x| ring.is_zero(x))
}

pub(crate) fn check_domain<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<()> {
    match m.data.iter().find(|x| !ring.contains(x)) {
        Some(x) => Err(Error::MixedDomains(format!(
            "{x:?} is not an element of {}",
            ring.describe()
        ))),
        None => Ok(()),
    }
}

/// Reduced row echelon form: the nonzero rows, and the pivot column of each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<E> {
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl<E: Clone> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the right nullspace, one vector per free column (free entry 1).
    pub fn nullspace_basis<F: Field<Elem = E>>(&self, field: &F) -> Vec<Vec<E>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![field.zero(); self.cols];
                v[free] = field.one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = field.neg(&row[free]);
                }
                v
            })
            .collect()
    }
}

/// Gauss–Jordan elimination over a field. Pivot choice is the first nonzero
/// entry in the current column, scanning rows top to bottom, so the output is
/// the canonical rref of the row space.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Result<Echelon<F::Elem>> {
    check_domain(field, m)?;
    let mut reducer = RowReducer::new(field.clone(), m.ncols());
    for row in m.rows_iter() {
        reducer.insert(row.to_vec());
    }
    Ok(reducer.finish())
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Result<usize> {
    Ok(rref(field, m)?.rank())
}

/// Incremental elimination: rows are reduced against the pivots seen so far
/// and kept with a leading one. Memory is bounded by `rank * cols`.
#[derive(Clone, Debug)]
pub struct RowReducer<F: Field> {
    field: F,
    cols: usize,
    // pivot column -> row with a one there and zeros at every other pivot
    rows: std::collections::BTreeMap<usize, Vec<F::Elem>>,
}

impl<F: Field> RowReducer<F> {
    pub fn new(field: F, cols: usize) -> Self {
        RowReducer {
            field,
            cols,
            rows: Default::default(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduces `v` against the stored rows; returns what is left.
    pub fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        let f = &self.field;
        for (&p, row) in &self.rows {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = f.neg(&v[p]);
            for j in p..self.cols {
                if !f.is_zero(&row[j]) {
                    f.mul_add_assign(&mut v[j], &c, &row[j]);
                }
            }
        }
        v
    }

    pub fn is_member(&self, v: &[F::Elem]) -> bool {
        self.reduce(v.to_vec())
            .iter()
            .all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns true if the rank grew.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.cols, "row length");
        let f = &self.field;
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]).expect("nonzero pivot");
        let v: Vec<_> = v.iter().map(|x| f.mul(x, &inv)).collect();
        // rows with a later pivot are already zero at column p
        for (&q, row) in self.rows.iter_mut() {
            if q < p && !f.is_zero(&row[p]) {
                let c = f.neg(&row[p]);
                for j in p..self.cols {
                    if !f.is_zero(&v[j]) {
                        f.mul_add_assign(&mut row[j], &c, &v[j]);
                    }
                }
            }
        }
        self.rows.insert(p, v);
        true
    }

    pub fn finish(self) -> Echelon<F::Elem> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        Echelon {
            rows: self.rows.into_values().collect(),
            pivots,
            cols: self.cols,
        }
    }
}

/// Coefficients `c` with `Σ c_i v_i = target`, or `None` if `target` is not
/// in the span. The `v_i` need not be independent.
pub fn solve_combination<F: Field>(
    field: &F,
    vectors: &[Vec<F::Elem>],
    target: &[F::Elem],
) -> Option<Vec<F::Elem>> {
    let cols = target.len();
    let k = vectors.len();
    let mut reducer = RowReducer::new(field.clone(), cols + k);
    for (i, v) in vectors.iter().enumerate() {
        let mut row = v.clone();
        row.resize(cols + k, field.zero());
        row[cols + i] = field.one();
        reducer.insert(row);
    }
    let mut row = target.to_vec();
    row.resize(cols + k, field.zero());
    let left = reducer.reduce(row);
    if left[..cols].iter().any(|x| !field.is_zero(x)) {
        return None;
    }
    Some(left[cols..].iter().map(|x| field.neg(x)).collect())
}

/// Inverse of a square matrix over a field, `None` if singular.
pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = m.nrows();
    assert_eq!(n, m.ncols());
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            field.one()
        } else {
            field.zero()
        }
    });
    let e = rref(field, &aug).ok()?;
    if e.rank() < n || e.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| e.rows[i][n + j].clone()))
}
