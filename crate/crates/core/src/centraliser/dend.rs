use std::collections::BTreeMap;

use super::end::EndAlgebra;
use crate::algebra::{inverse, mat_mul, Field, Matrix, RowReducer, Subspace};
use crate::error::{Error, Result};
use crate::modules::ModuleRep;

/// Echelon rows over one block that remember how each row is written in
/// terms of the inserted (independent) vectors.
struct TrackedReducer<F: Field> {
    field: F,
    dim: usize,
    // pivot column -> (row, coefficients on the independent vectors)
    rows: BTreeMap<usize, (Vec<F::Elem>, Vec<F::Elem>)>,
    independent: usize,
}

enum Insert<E> {
    Independent,
    Dependent(Vec<E>),
}

impl<F: Field> TrackedReducer<F> {
    fn new(field: F, dim: usize) -> Self {
        TrackedReducer {
            field,
            dim,
            rows: BTreeMap::new(),
            independent: 0,
        }
    }

    fn full(&self) -> bool {
        self.independent == self.dim
    }

    fn reduce(&self, mut v: Vec<F::Elem>) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let f = &self.field;
        let mut comb = vec![f.zero(); self.dim];
        for (&p, (row, rc)) in &self.rows {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            let neg = f.neg(&c);
            for j in p..self.dim {
                if !f.is_zero(&row[j]) {
                    f.mul_add_assign(&mut v[j], &neg, &row[j]);
                }
            }
            for (k, x) in rc.iter().enumerate() {
                if !f.is_zero(x) {
                    f.mul_add_assign(&mut comb[k], &c, x);
                }
            }
        }
        (v, comb)
    }

    fn is_member(&self, v: Vec<F::Elem>) -> bool {
        self.reduce(v).0.iter().all(|x| self.field.is_zero(x))
    }

    fn insert(&mut self, v: Vec<F::Elem>) -> Insert<F::Elem> {
        let f = self.field.clone();
        let (res, comb) = self.reduce(v);
        let Some(p) = res.iter().position(|x| !f.is_zero(x)) else {
            return Insert::Dependent(comb);
        };
        let k = self.independent;
        self.independent += 1;
        let inv = f.inv(&res[p]).expect("nonzero pivot");
        let row = res.iter().map(|x| f.mul(x, &inv)).collect();
        let mut rc: Vec<F::Elem> = comb.iter().map(|x| f.neg(&f.mul(x, &inv))).collect();
        rc[k] = inv;
        self.rows.insert(p, (row, rc));
        Insert::Independent
    }
}

/// A vector `φ p_g`: hom number `hom` from the block of generator `gen` into `target`.
#[derive(Clone, Copy, Debug)]
struct Image {
    gen: usize,
    target: usize,
    hom: usize,
}

/// `P` presented as a left `End(P)`-module on generators drawn from the
/// standard basis of the distinct blocks.
struct Presentation<F: Field> {
    // (block, coordinate)
    gens: Vec<(usize, usize)>,
    // independent images per target block, in insertion order
    basis: Vec<Vec<Image>>,
    relations: Vec<(Image, Vec<F::Elem>)>,
}

impl<F: Field> Presentation<F> {
    fn new(end: &EndAlgebra<F>) -> Self {
        let f = end.field();
        let dims = end.block_dims();
        let k = dims.len();
        let mut reducers: Vec<TrackedReducer<F>> = dims
            .iter()
            .map(|&d| TrackedReducer::new(f.clone(), d))
            .collect();
        let mut pres = Presentation {
            gens: Vec::new(),
            basis: vec![Vec::new(); k],
            relations: Vec::new(),
        };
        for i in 0..k {
            for s in 0..dims[i] {
                if reducers[i].full() {
                    break;
                }
                let mut e = vec![f.zero(); dims[i]];
                e[s] = f.one();
                if reducers[i].is_member(e) {
                    continue;
                }
                let gen = pres.gens.len();
                pres.gens.push((i, s));
                for t in 0..k {
                    for (hom, phi) in end.hom(i, t).iter().enumerate() {
                        let img = Image {
                            gen,
                            target: t,
                            hom,
                        };
                        match reducers[t].insert(phi.column(s)) {
                            Insert::Independent => pres.basis[t].push(img),
                            Insert::Dependent(comb) => pres.relations.push((img, comb)),
                        }
                    }
                }
            }
        }
        debug_assert!(reducers.iter().all(TrackedReducer::full));
        pres
    }

    fn offsets(&self, dims: &[usize]) -> (Vec<usize>, usize) {
        let mut off = 0;
        let offs = self
            .gens
            .iter()
            .map(|&(b, _)| {
                off += dims[b];
                off - dims[b]
            })
            .collect();
        (offs, off)
    }

    /// Linear conditions on `(y_g)`, `y_g` in the block of `p_g`, for
    /// `p_g ↦ y_g` to extend to an `End(P)`-map. Feeds them to `sink` until it
    /// returns false.
    fn equations(&self, end: &EndAlgebra<F>, mut sink: impl FnMut(Vec<F::Elem>) -> bool) {
        let f = end.field();
        let dims = end.block_dims();
        let (offs, unknowns) = self.offsets(dims);
        for (img, comb) in &self.relations {
            let t = img.target;
            let src = |im: &Image| self.gens[im.gen].0;
            let phi = &end.hom(src(img), t)[img.hom];
            for r in 0..dims[t] {
                let mut row = vec![f.zero(); unknowns];
                let o = offs[img.gen];
                for s in 0..phi.ncols() {
                    row[o + s] = phi[(r, s)].clone();
                }
                for (k, c) in comb.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    let b = self.basis[t][k];
                    let psi = &end.hom(src(&b), t)[b.hom];
                    let o = offs[b.gen];
                    let neg = f.neg(c);
                    for s in 0..psi.ncols() {
                        f.mul_add_assign(&mut row[o + s], &neg, &psi[(r, s)]);
                    }
                }
                if !sink(row) {
                    return;
                }
            }
        }
    }
}

/// `dim DEnd(P)` from a presentation of `P` over `End(P)`. If `lower_bound`
/// is a known lower bound (the image of `Hec(n)`), elimination stops as soon
/// as the upper bound meets it.
pub fn double_end_dim<F: Field>(end: &EndAlgebra<F>, lower_bound: Option<usize>) -> usize {
    let pres = Presentation::new(end);
    let (_, unknowns) = pres.offsets(end.block_dims());
    let mut system = RowReducer::new(end.field().clone(), unknowns);
    let target = lower_bound.map(|b| unknowns.saturating_sub(b));
    if target == Some(0) {
        return unknowns;
    }
    pres.equations(end, |row| {
        system.insert(row);
        Some(system.rank()) != target
    });
    unknowns - system.rank()
}

/// `DEnd(P)` as a subspace of `d × d` matrices (flattened row by row).
pub fn double_end<F: Field>(p: &ModuleRep<F>, end: &EndAlgebra<F>) -> Result<Subspace<F>> {
    let dims: Vec<usize> = p.blocks().iter().map(|(b, _)| b.dim()).collect();
    let mults: Vec<usize> = p.blocks().iter().map(|(_, m)| *m).collect();
    if dims != end.block_dims() || mults != end.multiplicities() {
        return Err(Error::BasisMismatch);
    }
    let f = end.field();
    let pres = Presentation::new(end);
    let (offs, unknowns) = pres.offsets(&dims);
    let mut system = RowReducer::new(f.clone(), unknowns);
    pres.equations(end, |row| {
        system.insert(row);
        true
    });
    let solutions = system.finish().nullspace_basis(f);

    // σ on block t is Y_t B_t^{-1}, B_t the independent images as columns
    let src = |gen: usize| pres.gens[gen].0;
    let inverses: Vec<Matrix<F::Elem>> = (0..dims.len())
        .map(|t| {
            let cols: Vec<Vec<F::Elem>> = pres.basis[t]
                .iter()
                .map(|b| end.hom(src(b.gen), t)[b.hom].column(pres.gens[b.gen].1))
                .collect();
            let bt = Matrix::from_fn(dims[t], dims[t], |r, c| cols[c][r].clone());
            inverse(f, &bt).expect("independent images form a basis")
        })
        .collect();
    let d = p.dim();
    let vectors = solutions.iter().map(|y| {
        let mut sigma = Matrix::zeros(f, d, d);
        let mut off = 0;
        for t in 0..dims.len() {
            let cols: Vec<Vec<F::Elem>> = pres.basis[t]
                .iter()
                .map(|b| {
                    let o = offs[b.gen];
                    let yg = &y[o..o + dims[src(b.gen)]];
                    crate::algebra::mat_vec(f, &end.hom(src(b.gen), t)[b.hom], yg)
                })
                .collect();
            let yt = Matrix::from_fn(dims[t], dims[t], |r, c| cols[c][r].clone());
            let local = mat_mul(f, &yt, &inverses[t]);
            for _ in 0..mults[t] {
                for r in 0..dims[t] {
                    for c in 0..dims[t] {
                        sigma[(off + r, off + c)] = local[(r, c)].clone();
                    }
                }
                off += dims[t];
            }
        }
        sigma.entries().to_vec()
    });
    Ok(Subspace::span(
        f.clone(),
        d * d,
        vectors.collect::<Vec<_>>(),
    ))
}

/// The commutant `{ σ : σ φ = φ σ }` of a family of `d × d` matrices, by
/// solving for all `d²` entries directly.
pub fn commutant<F: Field>(f: &F, d: usize, family: &[Matrix<F::Elem>]) -> Subspace<F> {
    let unknowns = d * d;
    let mut system = RowReducer::new(f.clone(), unknowns);
    for phi in family {
        for r in 0..d {
            for c in 0..d {
                // (σ φ - φ σ)[r][c]
                let mut row = vec![f.zero(); unknowns];
                for s in 0..d {
                    f.add_assign(&mut row[r * d + s], &phi[(s, c)]);
                    let x = &mut row[s * d + c];
                    *x = f.sub(x, &phi[(r, s)]);
                }
                system.insert(row);
            }
        }
    }
    Subspace::nullspace_of(f.clone(), &system.finish())
}

/// The image of `Hec(n)` in `End_F(P)`, flattened like `double_end`.
pub fn image_subspace<F: Field>(p: &ModuleRep<F>) -> Subspace<F> {
    let d = p.dim();
    let vectors: Vec<Vec<F::Elem>> = p
        .group()
        .elements()
        .iter()
        .map(|w| p.action(w).entries().to_vec())
        .collect();
    Subspace::span(p.ring().clone(), d * d, vectors)
}

#[cfg(test)]
mod tests {
    use super::super::end::end_algebra;
    use super::*;
    use crate::algebra::{PrimeField, Rationals, Ring};
    use crate::modules::{young_sum, Summand};
    use crate::partitions::Partition;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn check<F: Field>(m: &ModuleRep<F>) -> usize {
        let end = end_algebra(m);
        let dend = double_end(m, &end).unwrap();
        let oracle = commutant(m.ring(), m.dim(), &end.basis_matrices());
        assert_eq!(dend, oracle, "{}", m.description());
        assert_eq!(double_end_dim(&end, None), dend.dim());
        assert!(dend.contains_subspace(&image_subspace(m)).unwrap());
        dend.dim()
    }

    #[test]
    fn presentation_matches_direct_commutant() {
        let f2 = PrimeField::new(2).unwrap();
        let s = [Summand::young(p(&[2, 2]))];
        let m = young_sum(f2, 4, 1, &s).unwrap();
        let image = 24 - super::super::ann::annihilator_dim(&m);
        assert!(check(&m) > image);
        let s = [
            Summand {
                partition: p(&[2, 1]),
                mult: 2,
                signed: false,
            },
            Summand::young(p(&[3])),
        ];
        let m = young_sum(Rationals, 3, Rationals.one(), &s).unwrap();
        check(&m);
        let s = [Summand::young(p(&[3, 1])), Summand::young(p(&[4]))];
        let m = young_sum(PrimeField::new(3).unwrap(), 4, 1, &s).unwrap();
        assert_eq!(check(&m), 10);
    }

    #[test]
    fn early_exit_agrees() {
        let s = [Summand::young(p(&[3, 1])), Summand::young(p(&[2, 1, 1]))];
        let m = young_sum(Rationals, 4, Rationals.one(), &s).unwrap();
        let end = end_algebra(&m);
        let full = double_end_dim(&end, None);
        let ann = super::super::ann::annihilator_dim(&m);
        assert_eq!(double_end_dim(&end, Some(24 - ann)), full);
    }
}
