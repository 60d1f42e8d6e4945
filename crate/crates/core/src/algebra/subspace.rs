use serde::Serialize;

use super::matrix::{check_domain, Echelon, Matrix, RowReducer};
use super::ring::Field;
use crate::error::{Error, Result};

/// A subspace of `F^n`, held as its canonical reduced row echelon basis.
/// Two subspaces are equal exactly when their bases are identical.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubspaceRelation {
    Equal,
    /// the first subspace is properly contained in the second
    UInV,
    /// the second subspace is properly contained in the first
    VInU,
    Incomparable,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        let vectors = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect::<Vec<_>>();
        Self::span(field, ambient, vectors)
    }

    /// Span of arbitrary vectors of length `ambient`.
    pub fn span(field: F, ambient: usize, vectors: impl IntoIterator<Item = Vec<F::Elem>>) -> Self {
        let mut reducer = RowReducer::new(field.clone(), ambient);
        for v in vectors {
            reducer.insert(v);
        }
        Self::from_echelon(field, reducer.finish())
    }

    pub fn row_space(field: F, m: &Matrix<F::Elem>) -> Result<Self> {
        check_domain(&field, m)?;
        Ok(Self::span(
            field,
            m.ncols(),
            m.rows_iter().map(<[_]>::to_vec),
        ))
    }

    pub fn from_echelon(field: F, e: Echelon<F::Elem>) -> Self {
        Subspace {
            field,
            ambient: e.cols,
            basis: e.rows,
            pivots: e.pivots,
        }
    }

    /// Null space of a reduced system, i.e. `{ v : m v = 0 }`.
    pub fn nullspace_of(field: F, e: &Echelon<F::Elem>) -> Self {
        let vectors = e.nullspace_basis(&field);
        Self::span(field, e.cols, vectors)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = f.neg(&v[p]);
            for j in p..self.ambient {
                if !f.is_zero(&row[j]) {
                    f.mul_add_assign(&mut v[j], &c, &row[j]);
                }
            }
        }
        v.iter().all(|x| f.is_zero(x))
    }

    pub fn contains_subspace(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains(v)))
    }

    pub fn compare(&self, other: &Self) -> Result<SubspaceRelation> {
        self.check_ambient(other)?;
        let u_in_v = other.contains_subspace(self)?;
        let v_in_u = self.contains_subspace(other)?;
        Ok(match (u_in_v, v_in_u) {
            (true, true) => SubspaceRelation::Equal,
            (true, false) => SubspaceRelation::UInV,
            (false, true) => SubspaceRelation::VInU,
            (false, false) => SubspaceRelation::Incomparable,
        })
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::span(
            self.field.clone(),
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        ))
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

/// The spec-level name for comparing two subspaces.
pub fn subspace_compare<F: Field>(u: &Subspace<F>, v: &Subspace<F>) -> Result<SubspaceRelation> {
    u.compare(v)
}
