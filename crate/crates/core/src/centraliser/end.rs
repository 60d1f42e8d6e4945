use crate::algebra::{mat_mul, mat_vec, Field, Matrix, RowReducer, Subspace};
use crate::hecke::min_coset_reps;
use crate::modules::{Block, BlockKind, ModuleRep};
use crate::partitions::Composition;

/// `End_Hec(P)`, stored blockwise: a basis of `Hom(B_i, B_j)` for every pair
/// of distinct blocks. With multiplicities `m_i` the full algebra is
/// `⊕ Mat(m_j × m_i) ⊗ Hom(B_i, B_j)`.
#[derive(Clone, Debug)]
pub struct EndAlgebra<F: Field> {
    field: F,
    dims: Vec<usize>,
    mults: Vec<usize>,
    // homs[i][j]: d_j × d_i matrices
    homs: Vec<Vec<Vec<Matrix<F::Elem>>>>,
}

/// How `Hom(B_i, B_j)` is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomRoute {
    /// Frobenius reciprocity when the source is a (signed) Young module,
    /// otherwise the generator system.
    Auto,
    /// `ρ_j(T_k) X = X ρ_i(T_k)` for the generators `T_1 .. T_{n-1}`.
    Generators,
    /// `ρ_j(T_w) X = X ρ_i(T_w)` for every `w`.
    AllElements,
}

impl<F: Field> EndAlgebra<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    /// Dimensions of the distinct blocks.
    pub fn block_dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.mults
    }

    /// Basis of `Hom(B_i, B_j)`.
    pub fn hom(&self, i: usize, j: usize) -> &[Matrix<F::Elem>] {
        &self.homs[i][j]
    }

    pub fn dim(&self) -> usize {
        let k = self.dims.len();
        (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .map(|(i, j)| self.mults[i] * self.mults[j] * self.homs[i][j].len())
            .sum()
    }

    /// Dimension of the module the algebra acts on.
    pub fn module_dim(&self) -> usize {
        self.dims.iter().zip(&self.mults).map(|(d, m)| d * m).sum()
    }

    fn offsets(&self) -> Vec<Vec<usize>> {
        let mut off = 0;
        self.dims
            .iter()
            .zip(&self.mults)
            .map(|(&d, &m)| {
                (0..m)
                    .map(|_| {
                        off += d;
                        off - d
                    })
                    .collect()
            })
            .collect()
    }

    /// The full basis as `d × d` matrices.
    pub fn basis_matrices(&self) -> Vec<Matrix<F::Elem>> {
        let f = &self.field;
        let d = self.module_dim();
        let offs = self.offsets();
        let mut out = Vec::with_capacity(self.dim());
        for (i, oi) in offs.iter().enumerate() {
            for (j, oj) in offs.iter().enumerate() {
                for &a in oi {
                    for &b in oj {
                        for phi in &self.homs[i][j] {
                            let mut m = Matrix::zeros(f, d, d);
                            for r in 0..phi.nrows() {
                                for c in 0..phi.ncols() {
                                    m[(b + r, a + c)] = phi[(r, c)].clone();
                                }
                            }
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }

    /// The span of `basis_matrices`, flattened row by row into `F^{d²}`.
    pub fn to_subspace(&self) -> Subspace<F> {
        let d = self.module_dim();
        Subspace::span(
            self.field.clone(),
            d * d,
            self.basis_matrices()
                .into_iter()
                .map(|m| m.entries().to_vec()),
        )
    }
}

/// `End_Hec(P)` by the default route.
pub fn end_algebra<F: Field>(p: &ModuleRep<F>) -> EndAlgebra<F> {
    end_algebra_by(p, HomRoute::Auto)
}

pub fn end_algebra_by<F: Field>(p: &ModuleRep<F>, route: HomRoute) -> EndAlgebra<F> {
    let blocks = p.blocks();
    let homs = blocks
        .iter()
        .map(|(src, _)| {
            blocks
                .iter()
                .map(|(dst, _)| hom_space(p, src, dst, route))
                .collect()
        })
        .collect();
    EndAlgebra {
        field: p.ring().clone(),
        dims: blocks.iter().map(|(b, _)| b.dim()).collect(),
        mults: blocks.iter().map(|(_, m)| *m).collect(),
        homs,
    }
}

fn hom_space<F: Field>(
    p: &ModuleRep<F>,
    src: &Block<F::Elem>,
    dst: &Block<F::Elem>,
    route: HomRoute,
) -> Vec<Matrix<F::Elem>> {
    let f = p.ring();
    match (route, src.kind()) {
        (HomRoute::Auto, BlockKind::Young(l)) => frobenius_homs(p, l, p.q().clone(), dst),
        (HomRoute::Auto, BlockKind::Signed(l)) => frobenius_homs(p, l, f.from_i64(-1), dst),
        (HomRoute::AllElements, _) => commuting_maps(
            f,
            (src.dim(), dst.dim()),
            p.block_actions(src),
            p.block_actions(dst),
        ),
        _ => commuting_maps(
            f,
            (src.dim(), dst.dim()),
            src.generators(),
            dst.generators(),
        ),
    }
}

/// `Hom(M(λ), N) ≅ { v ∈ N : T_k v = ε v, k ∈ J(λ) }`; the map for `v` sends
/// `T_d x(λ)` to `T_d v`.
fn frobenius_homs<F: Field>(
    p: &ModuleRep<F>,
    lambda: &crate::partitions::Partition,
    eps: F::Elem,
    dst: &Block<F::Elem>,
) -> Vec<Matrix<F::Elem>> {
    let f = p.ring();
    let d = dst.dim();
    let alpha = Composition::from(lambda);
    let mut system = RowReducer::new(f.clone(), d);
    for k in alpha.generator_indices() {
        let t = dst.generator(k);
        for r in 0..d {
            let mut row = t.row(r).to_vec();
            row[r] = f.sub(&row[r], &eps);
            system.insert(row);
        }
    }
    let vs = system.finish().nullspace_basis(f);
    let reps = min_coset_reps(&alpha);
    let acts = p.block_actions(dst);
    let group = p.group();
    vs.iter()
        .map(|v| {
            let cols: Vec<Vec<F::Elem>> = reps
                .iter()
                .map(|w| mat_vec(f, &acts[group.index_of(w)], v))
                .collect();
            Matrix::from_fn(d, reps.len(), |r, c| cols[c][r].clone())
        })
        .collect()
}

/// `{ X : B_k X = X A_k for all k }` with `X` of shape `db × da`.
pub fn commuting_maps<F: Field>(
    f: &F,
    (da, db): (usize, usize),
    a: &[Matrix<F::Elem>],
    b: &[Matrix<F::Elem>],
) -> Vec<Matrix<F::Elem>> {
    let unknowns = da * db;
    let mut system = RowReducer::new(f.clone(), unknowns);
    for (ak, bk) in a.iter().zip(b) {
        for r in 0..db {
            for c in 0..da {
                if system.rank() == unknowns {
                    break;
                }
                // (B X)[r][c] - (X A)[r][c]
                let mut row = vec![f.zero(); unknowns];
                for s in 0..db {
                    f.add_assign(&mut row[s * da + c], &bk[(r, s)]);
                }
                for s in 0..da {
                    let x = &mut row[r * da + s];
                    *x = f.sub(x, &ak[(s, c)]);
                }
                system.insert(row);
            }
        }
    }
    system
        .finish()
        .nullspace_basis(f)
        .into_iter()
        .map(|v| Matrix::from_fn(db, da, |r, c| v[r * da + c].clone()))
        .collect()
}

/// Whether the span of `basis` (square matrices) is closed under products.
pub fn is_closed_under_product<F: Field>(f: &F, basis: &[Matrix<F::Elem>]) -> bool {
    let Some(first) = basis.first() else {
        return true;
    };
    let d = first.nrows();
    let span = Subspace::span(f.clone(), d * d, basis.iter().map(|m| m.entries().to_vec()));
    basis.iter().all(|a| {
        basis
            .iter()
            .all(|b| span.contains(mat_mul(f, a, b).entries()))
    })
}
