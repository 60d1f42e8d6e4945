use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::algebra::{mat_add, mat_mul, mat_scale, Matrix, Ring};
use crate::error::{Error, Result};
use crate::hecke::{coset_factorise, min_coset_reps, HeckeElement};
use crate::partitions::{Composition, Partition, PartitionSet};
use crate::perm::{Perm, SymGroup};

/// What a block of a module is, as far as the engine can exploit it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "partition", rename_all = "snake_case")]
pub enum BlockKind {
    /// `M(λ) = Hec(n) x(λ)` on the basis `T_d x(λ)`, `d ∈ D_λ`.
    Young(Partition),
    /// `M_s(λ) = Hec(n) y(λ)` on the basis `T_d y(λ)`, `d ∈ D_λ`.
    Signed(Partition),
    Other(String),
}

/// One indecomposable-by-construction piece: generator matrices plus a
/// lazily built table of `ρ(T_w)` for every `w`.
#[derive(Debug)]
pub struct Block<E> {
    kind: BlockKind,
    labels: Vec<String>,
    gens: Vec<Matrix<E>>,
    all: OnceLock<Vec<Matrix<E>>>,
}

impl<E: Clone> Block<E> {
    pub fn kind(&self) -> &BlockKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `ρ(T_i)`, 1-based `i`.
    pub fn generator(&self, i: usize) -> &Matrix<E> {
        &self.gens[i - 1]
    }

    pub fn generators(&self) -> &[Matrix<E>] {
        &self.gens
    }
}

/// A summand of a Young sum, as given in module specifications.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub partition: Partition,
    #[serde(default = "one")]
    pub mult: usize,
    #[serde(default)]
    pub signed: bool,
}

fn one() -> usize {
    1
}

impl Summand {
    pub fn young(partition: Partition) -> Self {
        Summand {
            partition,
            mult: 1,
            signed: false,
        }
    }

    pub fn signed(partition: Partition) -> Self {
        Summand {
            partition,
            mult: 1,
            signed: true,
        }
    }
}

/// A left `Hec(n)`-module given by action matrices, as a direct sum of blocks
/// with multiplicities. Column `j` of `ρ(h)` is `h` applied to basis vector `j`.
#[derive(Clone, Debug)]
pub struct ModuleRep<R: Ring> {
    ring: R,
    n: usize,
    q: R::Elem,
    group: Arc<SymGroup>,
    blocks: Vec<(Arc<Block<R::Elem>>, usize)>,
    description: String,
}

impl<R: Ring> ModuleRep<R> {
    /// A single block from explicit generator matrices `ρ(T_1), .., ρ(T_{n-1})`.
    pub fn from_generators(
        ring: R,
        n: usize,
        q: R::Elem,
        kind: BlockKind,
        labels: Vec<String>,
        gens: Vec<Matrix<R::Elem>>,
    ) -> Result<Self> {
        if ring.is_zero(&q) {
            return Err(Error::ZeroParameter);
        }
        let d = labels.len();
        if gens.len() != n.saturating_sub(1) {
            return Err(Error::DegreeMismatch(gens.len() + 1, n));
        }
        if gens.iter().any(|g| g.nrows() != d || g.ncols() != d) {
            return Err(Error::RangeError(format!(
                "generator matrices must be {d}x{d}"
            )));
        }
        let description = match &kind {
            BlockKind::Young(l) => format!("M{l}"),
            BlockKind::Signed(l) => format!("M_s{l}"),
            BlockKind::Other(s) => s.clone(),
        };
        let block = Block {
            kind,
            labels,
            gens,
            all: OnceLock::new(),
        };
        Ok(ModuleRep {
            ring,
            n,
            q,
            group: Arc::new(SymGroup::new(n)),
            blocks: vec![(Arc::new(block), 1)],
            description,
        })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &R::Elem {
        &self.q
    }

    pub fn group(&self) -> &SymGroup {
        &self.group
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|(b, m)| b.dim() * m).sum()
    }

    /// Distinct blocks with multiplicities, in input order.
    pub fn blocks(&self) -> &[(Arc<Block<R::Elem>>, usize)] {
        &self.blocks
    }

    /// Basis labels of the whole module, block by block.
    pub fn labels(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.dim());
        for (b, m) in &self.blocks {
            for copy in 0..*m {
                for l in &b.labels {
                    out.push(if *m > 1 {
                        format!("{l}#{}", copy + 1)
                    } else {
                        l.clone()
                    });
                }
            }
        }
        out
    }

    /// The Young summands, or `None` if some block is not a Young or signed
    /// Young module.
    pub fn summands(&self) -> Option<Vec<Summand>> {
        self.blocks
            .iter()
            .map(|(b, m)| match &b.kind {
                BlockKind::Young(l) => Some(Summand {
                    partition: l.clone(),
                    mult: *m,
                    signed: false,
                }),
                BlockKind::Signed(l) => Some(Summand {
                    partition: l.clone(),
                    mult: *m,
                    signed: true,
                }),
                BlockKind::Other(_) => None,
            })
            .collect()
    }

    /// `ρ(T_w)` for all `w` in group order, restricted to one block.
    pub fn block_actions<'a>(&self, block: &'a Block<R::Elem>) -> &'a [Matrix<R::Elem>] {
        block.all.get_or_init(|| {
            let g = &self.group;
            let mut all: Vec<Option<Matrix<R::Elem>>> = vec![None; g.order()];
            for (idx, w) in g.elements().iter().enumerate() {
                let m = if w.is_identity() {
                    Matrix::identity(&self.ring, block.dim())
                } else {
                    let i = (1..self.n).find(|&i| w.has_left_descent(i)).unwrap();
                    let shorter = g.index_of(&w.left_mul_simple(i));
                    mat_mul(
                        &self.ring,
                        &block.gens[i - 1],
                        all[shorter].as_ref().unwrap(),
                    )
                };
                all[idx] = Some(m);
            }
            all.into_iter().map(Option::unwrap).collect()
        })
    }

    /// Block-diagonal assembly of a per-block matrix family.
    fn assemble(&self, per_block: impl Fn(&Block<R::Elem>) -> Matrix<R::Elem>) -> Matrix<R::Elem> {
        let d = self.dim();
        let mut out = Matrix::zeros(&self.ring, d, d);
        let mut off = 0;
        for (b, m) in &self.blocks {
            let local = per_block(b);
            for _ in 0..*m {
                for i in 0..b.dim() {
                    for j in 0..b.dim() {
                        out[(off + i, off + j)] = local[(i, j)].clone();
                    }
                }
                off += b.dim();
            }
        }
        out
    }

    /// `ρ(T_i)` on the whole module.
    pub fn generator_matrix(&self, i: usize) -> Matrix<R::Elem> {
        self.assemble(|b| b.gens[i - 1].clone())
    }

    /// `ρ(T_w)` on the whole module.
    pub fn action(&self, w: &Perm) -> Matrix<R::Elem> {
        let idx = self.group.index_of(w);
        self.assemble(|b| self.block_actions(b)[idx].clone())
    }

    /// `ρ(h)` on one block.
    pub fn block_element_action(
        &self,
        block: &Block<R::Elem>,
        h: &HeckeElement<R::Elem>,
    ) -> Matrix<R::Elem> {
        let acts = self.block_actions(block);
        let mut out = Matrix::zeros(&self.ring, block.dim(), block.dim());
        for (w, c) in h.terms() {
            out = mat_add(
                &self.ring,
                &out,
                &mat_scale(&self.ring, &acts[self.group.index_of(w)], c),
            );
        }
        out
    }

    /// `ρ(h)` on the whole module.
    pub fn element_action(&self, h: &HeckeElement<R::Elem>) -> Matrix<R::Elem> {
        self.assemble(|b| self.block_element_action(b, h))
    }

    /// Checks the quadratic and braid relations on every block.
    pub fn verify_relations(&self) -> bool {
        let r = &self.ring;
        let qm1 = r.sub(&self.q, &r.one());
        self.blocks.iter().all(|(b, _)| {
            let id = Matrix::identity(r, b.dim());
            let quad = b.gens.iter().all(|t| {
                let lhs = mat_mul(r, t, t);
                let rhs = mat_add(r, &mat_scale(r, t, &qm1), &mat_scale(r, &id, &self.q));
                lhs == rhs
            });
            let braid = (1..b.gens.len()).all(|k| {
                let (s, t) = (&b.gens[k - 1], &b.gens[k]);
                mat_mul(r, &mat_mul(r, s, t), s) == mat_mul(r, &mat_mul(r, t, s), t)
            });
            let far = (0..b.gens.len()).all(|i| {
                (i + 2..b.gens.len()).all(|j| {
                    mat_mul(r, &b.gens[i], &b.gens[j]) == mat_mul(r, &b.gens[j], &b.gens[i])
                })
            });
            quad && braid && far
        })
    }

    /// The twist by `♯`: `T_i` acts as `-ρ(T_i) + (q - 1)`.
    pub fn sharp_twist(&self) -> Self {
        let r = &self.ring;
        let qm1 = r.sub(&self.q, &r.one());
        let blocks = self
            .blocks
            .iter()
            .map(|(b, m)| {
                let id = Matrix::identity(r, b.dim());
                let gens = b
                    .gens
                    .iter()
                    .map(|t| {
                        mat_add(
                            r,
                            &mat_scale(r, &id, &qm1),
                            &mat_scale(r, t, &r.from_i64(-1)),
                        )
                    })
                    .collect();
                let kind = BlockKind::Other(format!("{}^#", describe_kind(&b.kind)));
                (
                    Arc::new(Block {
                        kind,
                        labels: b.labels.clone(),
                        gens,
                        all: OnceLock::new(),
                    }),
                    *m,
                )
            })
            .collect();
        ModuleRep {
            blocks,
            description: format!("({})^#", self.description),
            ..self.clone()
        }
    }
}

fn describe_kind(k: &BlockKind) -> String {
    match k {
        BlockKind::Young(l) => format!("M{l}"),
        BlockKind::Signed(l) => format!("M_s{l}"),
        BlockKind::Other(s) => s.clone(),
    }
}

fn build_coset_module<R: Ring>(
    ring: R,
    lambda: &Partition,
    q: R::Elem,
    signed: bool,
) -> Result<ModuleRep<R>> {
    let n = lambda.degree();
    let alpha = Composition::from(lambda);
    let reps = min_coset_reps(&alpha);
    let index: std::collections::HashMap<&Perm, usize> =
        reps.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let d = reps.len();
    let qm1 = ring.sub(&q, &ring.one());
    // T_{d'v} x = q^{l(v)} T_{d'} x, and T_{d'v} y = (-1)^{l(v)} T_{d'} y
    let reduce = |w: &Perm| -> (usize, R::Elem) {
        let (dd, v) = coset_factorise(w, &alpha);
        let l = v.length() as u64;
        let c = if signed {
            if l.is_multiple_of(2) {
                ring.one()
            } else {
                ring.from_i64(-1)
            }
        } else {
            ring.pow(&q, l)
        };
        (index[&dd], c)
    };
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut m = Matrix::zeros(&ring, d, d);
        for (col, w) in reps.iter().enumerate() {
            let sw = w.left_mul_simple(i);
            let (row, c) = reduce(&sw);
            if w.has_left_descent(i) {
                ring.mul_add_assign(&mut m[(row, col)], &c, &q);
                ring.add_assign(&mut m[(col, col)], &qm1);
            } else {
                ring.add_assign(&mut m[(row, col)], &c);
            }
        }
        gens.push(m);
    }
    let labels = reps.iter().map(ToString::to_string).collect();
    let kind = if signed {
        BlockKind::Signed(lambda.clone())
    } else {
        BlockKind::Young(lambda.clone())
    };
    ModuleRep::from_generators(ring, n, q, kind, labels, gens)
}

/// `M(λ)` on the basis `T_d x(λ)`, `d ∈ D_λ` in (length, one-line) order.
pub fn build_young_module<R: Ring>(
    ring: R,
    lambda: &Partition,
    q: R::Elem,
) -> Result<ModuleRep<R>> {
    build_coset_module(ring, lambda, q, false)
}

/// `M_s(λ)` on the basis `T_d y(λ)`, `d ∈ D_λ`.
pub fn build_signed_module<R: Ring>(
    ring: R,
    lambda: &Partition,
    q: R::Elem,
) -> Result<ModuleRep<R>> {
    build_coset_module(ring, lambda, q, true)
}

/// Block direct sum; repeated blocks of the same Young kind merge their
/// multiplicities.
pub fn direct_sum<R: Ring>(parts: &[ModuleRep<R>]) -> Result<ModuleRep<R>> {
    let first = parts
        .first()
        .ok_or_else(|| Error::RangeError("empty direct sum".into()))?;
    if parts
        .iter()
        .any(|p| p.n != first.n || p.q != first.q || p.ring != first.ring)
    {
        return Err(Error::MixedParameters);
    }
    let mut blocks: Vec<(Arc<Block<R::Elem>>, usize)> = Vec::new();
    for p in parts {
        for (b, m) in &p.blocks {
            let same = blocks.iter_mut().find(|(c, _)| {
                Arc::ptr_eq(c, b) || (c.kind == b.kind && !matches!(c.kind, BlockKind::Other(_)))
            });
            match same {
                Some((_, mult)) => *mult += m,
                None => blocks.push((b.clone(), *m)),
            }
        }
    }
    let description = parts
        .iter()
        .map(|p| p.description.clone())
        .collect::<Vec<_>>()
        .join(" + ");
    Ok(ModuleRep {
        blocks,
        description,
        ..first.clone()
    })
}

/// Builds `⊕ M(λ)^{mult}` / `M_s(λ)^{mult}` from a summand list.
pub fn young_sum<R: Ring>(
    ring: R,
    n: usize,
    q: R::Elem,
    summands: &[Summand],
) -> Result<ModuleRep<R>> {
    let mut parts = Vec::new();
    for s in summands {
        if s.partition.degree() != n {
            return Err(Error::InvalidPartition(format!(
                "{} is not a partition of {n}",
                s.partition
            )));
        }
        if s.mult == 0 {
            continue;
        }
        let mut m = build_coset_module(ring.clone(), &s.partition, q.clone(), s.signed)?;
        m.blocks[0].1 = s.mult;
        if s.mult > 1 {
            m.description = format!("{}^{}", m.description, s.mult);
        }
        parts.push(m);
    }
    direct_sum(&parts)
}

/// `ζ(M)` and, for hook sums, the index: the least `a ≥ 1` with `M(a,1^b)` a summand.
pub fn zeta_and_index<R: Ring>(m: &ModuleRep<R>) -> Result<(PartitionSet, Option<usize>)> {
    let summands = m.summands().ok_or(Error::NotAYoungSum)?;
    if summands.iter().any(|s| s.signed) {
        return Err(Error::NotAYoungSum);
    }
    let zeta = PartitionSet::new(
        m.n,
        summands
            .iter()
            .filter(|s| s.mult > 0)
            .map(|s| s.partition.clone()),
    )?;
    Ok((zeta.clone(), index_of_hook_set(&zeta)))
}

/// `ζ_s(M)` for sums of signed Young modules.
pub fn zeta_signed<R: Ring>(m: &ModuleRep<R>) -> Result<PartitionSet> {
    let summands = m.summands().ok_or(Error::NotAYoungSum)?;
    if summands.iter().any(|s| !s.signed) {
        return Err(Error::NotAYoungSum);
    }
    PartitionSet::new(m.n, summands.into_iter().map(|s| s.partition))
}

/// Least first part over a set of hooks; `None` unless every member is a hook.
pub fn index_of_hook_set(zeta: &PartitionSet) -> Option<usize> {
    if zeta.is_empty() || !zeta.iter().all(Partition::is_hook) {
        return None;
    }
    zeta.iter().map(|l| l.first().max(1)).min()
}
