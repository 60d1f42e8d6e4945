use serde_json::{json, Value};

use crate::algebra::{solve_combination, Field, Matrix, Ring, Subspace};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::modules::{BlockKind, ModuleRep};
use crate::partitions::{
    partitions_of, standard_tableaux, Composition, Partition, PartitionSet, StandardTableau,
};
use crate::perm::SymGroup;

/// Where the `∗` goes in `x_{st}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MurphyConvention {
    /// `T_{d(s)} x(λ) T_{d(t)}^*`, matching left cosets `d Σ(λ)`.
    Left,
    /// `T_{d(s)}^* x(λ) T_{d(t)}`.
    Right,
}

/// `x_{st} = T_{d(s)} x(λ) T_{d(t)}^*` for standard tableaux of one shape.
pub fn murphy_element<R: Ring>(
    alg: &HeckeAlgebra<R>,
    s: &StandardTableau,
    t: &StandardTableau,
) -> Result<HeckeElement<R::Elem>> {
    murphy_element_with(alg, s, t, MurphyConvention::Left)
}

pub fn murphy_element_with<R: Ring>(
    alg: &HeckeAlgebra<R>,
    s: &StandardTableau,
    t: &StandardTableau,
    convention: MurphyConvention,
) -> Result<HeckeElement<R::Elem>> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch(
            s.shape().to_string(),
            t.shape().to_string(),
        ));
    }
    let x = alg.x_element(&Composition::from(s.shape()))?;
    let (ds, dt) = (alg.basis(&s.d_permutation()), alg.basis(&t.d_permutation()));
    Ok(match convention {
        MurphyConvention::Left => alg.mul(&alg.mul(&ds, &x), &alg.star(&dt)),
        MurphyConvention::Right => alg.mul(&alg.mul(&alg.star(&ds), &x), &dt),
    })
}

/// The elements `C^λ_{st}` for one `λ`, indexed by standard `λ'`-tableaux.
#[derive(Clone, Debug)]
pub struct CellBlock<E> {
    pub lambda: Partition,
    pub tableaux: Vec<StandardTableau>,
    /// `x_{st}` for `s, t` of shape `λ'`
    pub murphy: Vec<Vec<HeckeElement<E>>>,
    /// `C^λ_{st} = (x_{st})^♯`
    pub elements: Vec<Vec<HeckeElement<E>>>,
}

/// The regular cell datum of `Hec(n)`: `C^λ_{st} = (x_{st})^♯` with
/// `s, t` running over standard `λ'`-tableaux.
#[derive(Clone, Debug)]
pub struct CellDatum<R: Ring> {
    alg: HeckeAlgebra<R>,
    group: SymGroup,
    blocks: Vec<CellBlock<R::Elem>>,
}

pub fn regular_cell_basis<R: Ring>(alg: &HeckeAlgebra<R>) -> Result<CellDatum<R>> {
    let n = alg.rank();
    let mut blocks = Vec::new();
    for lambda in partitions_of(n).iter() {
        let tableaux = standard_tableaux(&lambda.transpose());
        let murphy = tableaux
            .iter()
            .map(|s| {
                tableaux
                    .iter()
                    .map(|t| murphy_element(alg, s, t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let elements = murphy
            .iter()
            .map(|row| row.iter().map(|x| alg.sharp(x)).collect())
            .collect();
        blocks.push(CellBlock {
            lambda: lambda.clone(),
            tableaux,
            murphy,
            elements,
        });
    }
    Ok(CellDatum {
        alg: alg.clone(),
        group: SymGroup::new(n),
        blocks,
    })
}

impl<R: Ring> CellDatum<R> {
    pub fn algebra(&self) -> &HeckeAlgebra<R> {
        &self.alg
    }

    pub fn group(&self) -> &SymGroup {
        &self.group
    }

    pub fn blocks(&self) -> &[CellBlock<R::Elem>] {
        &self.blocks
    }

    pub fn block(&self, lambda: &Partition) -> Option<&CellBlock<R::Elem>> {
        self.blocks.iter().find(|b| &b.lambda == lambda)
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(|b| b.tableaux.len().pow(2)).sum()
    }

    /// Every `C^λ_{st}` in `T_w` coordinates.
    pub fn coordinate_rows(&self) -> Vec<Vec<R::Elem>> {
        self.blocks
            .iter()
            .flat_map(|b| b.elements.iter().flatten())
            .map(|c| self.alg.coordinates(&self.group, c))
            .collect()
    }

    /// `[{lambda, s, t, element}]` with elements as `{"[w]": "coefficient"}`.
    pub fn to_json(&self) -> Value {
        let mut out = Vec::new();
        for b in &self.blocks {
            for (i, s) in b.tableaux.iter().enumerate() {
                for (j, t) in b.tableaux.iter().enumerate() {
                    out.push(json!({
                        "lambda": b.lambda,
                        "s": s,
                        "t": t,
                        "element": self.alg.to_json(&b.elements[i][j]),
                    }));
                }
            }
        }
        Value::Array(out)
    }
}

/// `A(τ)`: the span of `C^λ_{st}` for `λ ∈ τ`, in `T_w` coordinates.
#[derive(Clone, Debug)]
pub struct CellIdeal<F: Field> {
    pub tau: PartitionSet,
    pub span: Subspace<F>,
}

pub fn cell_ideal<F: Field>(datum: &CellDatum<F>, tau: &PartitionSet) -> CellIdeal<F> {
    let alg = datum.algebra();
    let vectors: Vec<Vec<F::Elem>> = datum
        .blocks
        .iter()
        .filter(|b| tau.contains(&b.lambda))
        .flat_map(|b| b.elements.iter().flatten())
        .map(|c| alg.coordinates(&datum.group, c))
        .collect();
    CellIdeal {
        tau: tau.clone(),
        span: Subspace::span(alg.ring().clone(), datum.group.order(), vectors),
    }
}

/// The partitions strictly dominated by `λ`.
fn strictly_below(lambda: &Partition) -> PartitionSet {
    let n = lambda.degree();
    let below = partitions_of(n)
        .iter()
        .filter(|mu| *mu != lambda && mu.dominated_by(lambda).unwrap())
        .cloned()
        .collect::<Vec<_>>();
    PartitionSet::new(n, below).expect("partitions of n")
}

/// The cell module `W(λ)`: `T_i` acting on the classes of `C^λ_{u,v}` (fixed
/// `v` = tableau number `v_index`) modulo `A(<λ)`, the span for partitions
/// strictly dominated by `λ`. Fails with `HypothesisFails` if the span is not
/// stable modulo that ideal.
pub fn cell_module_with<F: Field>(
    datum: &CellDatum<F>,
    lambda: &Partition,
    v_index: usize,
) -> Result<ModuleRep<F>> {
    cell_module_modulo(datum, lambda, v_index, &strictly_below(lambda))
}

fn cell_module_modulo<F: Field>(
    datum: &CellDatum<F>,
    lambda: &Partition,
    v_index: usize,
    modulo: &PartitionSet,
) -> Result<ModuleRep<F>> {
    let alg = datum.algebra();
    let f = alg.ring();
    let n = alg.rank();
    let block = datum
        .block(lambda)
        .ok_or_else(|| Error::InvalidPartition(format!("{lambda} is not a partition of {n}")))?;
    let ideal = cell_ideal(datum, modulo);
    let k = block.tableaux.len();
    let column: Vec<&HeckeElement<F::Elem>> =
        block.elements.iter().map(|row| &row[v_index]).collect();
    let mut spanning: Vec<Vec<F::Elem>> = column
        .iter()
        .map(|c| alg.coordinates(&datum.group, c))
        .collect();
    spanning.extend(ideal.span.basis().iter().cloned());
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut m = Matrix::zeros(f, k, k);
        for (u, c) in column.iter().enumerate() {
            let image = alg.coordinates(&datum.group, &alg.left_generator(i, c));
            let coeffs = solve_combination(f, &spanning, &image).ok_or_else(|| {
                Error::HypothesisFails(format!("T_{i} C_(u,v) leaves the span modulo A({modulo})"))
            })?;
            for r in 0..k {
                m[(r, u)] = coeffs[r].clone();
            }
        }
        gens.push(m);
    }
    let labels = block.tableaux.iter().map(ToString::to_string).collect();
    ModuleRep::from_generators(
        f.clone(),
        n,
        alg.q().clone(),
        BlockKind::Other(format!("W{lambda}")),
        labels,
        gens,
    )
}

/// `W(λ)` with `v` the first tableau in canonical order.
pub fn cell_module<F: Field>(datum: &CellDatum<F>, lambda: &Partition) -> Result<ModuleRep<F>> {
    cell_module_with(datum, lambda, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rank, PrimeField, RationalFunctions, Rationals};
    use crate::perm::Perm;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn set(n: usize, parts: &[&[usize]]) -> PartitionSet {
        PartitionSet::new(n, parts.iter().map(|v| p(v))).unwrap()
    }

    #[test]
    fn murphy_corner_cases() {
        let alg = HeckeAlgebra::new(Rationals, 3, Rationals.from_i64(2)).unwrap();
        let lam = p(&[2, 1]);
        let top = StandardTableau::superstandard(&lam);
        assert_eq!(
            murphy_element(&alg, &top, &top).unwrap(),
            alg.x_element(&Composition::from(&lam)).unwrap()
        );
        let row = StandardTableau::superstandard(&p(&[3]));
        assert_eq!(
            murphy_element(&alg, &row, &row).unwrap(),
            alg.x_element(&Composition::from(&p(&[3]))).unwrap()
        );
        assert!(matches!(
            murphy_element(&alg, &top, &row),
            Err(Error::ShapeMismatch(..))
        ));
        // x_{st}^* = x_{ts}
        let all = standard_tableaux(&lam);
        for s in &all {
            for t in &all {
                assert_eq!(
                    alg.star(&murphy_element(&alg, s, t).unwrap()),
                    murphy_element(&alg, t, s).unwrap()
                );
            }
        }
    }

    #[test]
    fn murphy_elements_independent_n3() {
        let k = RationalFunctions::new(Rationals);
        let alg = HeckeAlgebra::new(k.clone(), 3, k.t()).unwrap();
        let g = SymGroup::new(3);
        let rows: Vec<Vec<_>> = partitions_of(3)
            .iter()
            .flat_map(|l| {
                let ts = standard_tableaux(l);
                ts.iter()
                    .flat_map(|s| ts.iter().map(|t| murphy_element(&alg, s, t).unwrap()))
                    .collect::<Vec<_>>()
            })
            .map(|x| alg.coordinates(&g, &x))
            .collect();
        assert_eq!(rows.len(), 6);
        assert_eq!(rank(&k, &Matrix::from_rows(rows)).unwrap(), 6);
    }

    #[test]
    fn ideals_n3() {
        let alg = HeckeAlgebra::new(Rationals, 3, Rationals.one()).unwrap();
        let datum = regular_cell_basis(&alg).unwrap();
        assert_eq!(datum.size(), 6);
        assert_eq!(cell_ideal(&datum, &PartitionSet::empty(3)).span.dim(), 0);
        assert_eq!(cell_ideal(&datum, &partitions_of(3)).span.dim(), 6);
        let sign = cell_ideal(&datum, &set(3, &[&[1, 1, 1]]));
        assert_eq!(sign.span.dim(), 1);
        let alternating: Vec<_> = datum
            .group()
            .elements()
            .iter()
            .map(|w| Rationals.from_i64(if w.length() % 2 == 0 { 1 } else { -1 }))
            .collect();
        assert!(sign.span.contains(&alternating));
        // the top cell alone is spanned by the identity, not an ideal
        let top = cell_ideal(&datum, &set(3, &[&[3]]));
        assert!(top
            .span
            .contains(&alg.coordinates(datum.group(), &alg.one())));
    }

    #[test]
    fn cell_modules_n3() {
        let f = PrimeField::new(5).unwrap();
        let alg = HeckeAlgebra::new(f, 3, 3).unwrap();
        let datum = regular_cell_basis(&alg).unwrap();
        let triv = cell_module(&datum, &p(&[3])).unwrap();
        assert_eq!(triv.dim(), 1);
        assert_eq!(triv.generator_matrix(1)[(0, 0)], 3);
        let sign = cell_module(&datum, &p(&[1, 1, 1])).unwrap();
        assert_eq!(sign.generator_matrix(2)[(0, 0)], f.from_i64(-1));
        let w = cell_module_with(&datum, &p(&[2, 1]), 0).unwrap();
        let w_last = cell_module_with(&datum, &p(&[2, 1]), 1).unwrap();
        assert_eq!(w.dim(), 2);
        assert!(w.verify_relations());
        for i in 1..3 {
            assert_eq!(w.generator_matrix(i), w_last.generator_matrix(i));
        }
    }

    #[test]
    fn quotient_by_higher_cells_is_not_stable() {
        let alg = HeckeAlgebra::new(Rationals, 3, Rationals.from_i64(2)).unwrap();
        let datum = regular_cell_basis(&alg).unwrap();
        let above = set(3, &[&[3]]);
        assert!(matches!(
            cell_module_modulo(&datum, &p(&[2, 1]), 0, &above),
            Err(Error::HypothesisFails(_))
        ));
    }

    #[test]
    fn standard_character_at_q_one() {
        let alg = HeckeAlgebra::new(Rationals, 3, Rationals.one()).unwrap();
        let datum = regular_cell_basis(&alg).unwrap();
        let w = cell_module(&datum, &p(&[2, 1])).unwrap();
        let chi = |x: &str| {
            crate::algebra::matrix::trace(&Rationals, &w.action(&Perm::parse(3, x).unwrap()))
        };
        assert_eq!(chi("[1,2,3]"), Rationals.from_i64(2));
        assert_eq!(chi("(12)"), Rationals.from_i64(0));
        assert_eq!(chi("(123)"), Rationals.from_i64(-1));
    }
}
