use serde::Serialize;

use super::datum::{cell_ideal, murphy_element_with, regular_cell_basis, MurphyConvention};
use crate::algebra::{Field, Ring, SubspaceRelation};
use crate::centraliser::annihilator;
use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;
use crate::modules::{young_sum, Summand};
use crate::partitions::{partitions_of, standard_tableaux, tableau_dominance, PartitionSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalEntry {
    pub lambda: String,
    pub s: String,
    pub t: String,
    pub value: String,
    /// the value is `sign * q^exponent`
    pub sign: i8,
    pub exponent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangularityReport {
    pub n: usize,
    pub pairings: usize,
    pub zeros: usize,
    pub diagonal: Vec<DiagonalEntry>,
}

/// `±q^N` with `0 <= N <= bound`, if `a` has that form.
fn unit_monomial<R: Ring>(r: &R, q: &R::Elem, a: &R::Elem, bound: usize) -> Option<(i8, usize)> {
    let mut power = r.one();
    for e in 0..=bound {
        if &power == a {
            return Some((1, e));
        }
        if r.neg(&power) == *a {
            return Some((-1, e));
        }
        power = r.mul(&power, q);
    }
    None
}

/// For every `λ` and standard `λ`-tableaux `s, t, u, v`:
/// `⟨x^♯_{s't'}, x_{uv}⟩ = 0` unless `u ⊴ s` and `v ⊴ t`, and the diagonal
/// value `⟨x^♯_{s't'}, x_{st}⟩` is `±q^N`. The first failure is returned as
/// an error carrying the witness.
pub fn triangularity_check<R: Ring>(alg: &HeckeAlgebra<R>) -> Result<TriangularityReport> {
    triangularity_check_with(alg, MurphyConvention::Left)
}

pub fn triangularity_check_with<R: Ring>(
    alg: &HeckeAlgebra<R>,
    convention: MurphyConvention,
) -> Result<TriangularityReport> {
    let r = alg.ring();
    let n = alg.rank();
    let bound = n * n.saturating_sub(1);
    let mut report = TriangularityReport {
        n,
        pairings: 0,
        zeros: 0,
        diagonal: Vec::new(),
    };
    for lambda in partitions_of(n).iter() {
        let tabs = standard_tableaux(lambda);
        let x = |s: &_, t: &_| murphy_element_with(alg, s, t, convention);
        let mut plain = Vec::with_capacity(tabs.len());
        for u in &tabs {
            plain.push(tabs.iter().map(|v| x(u, v)).collect::<Result<Vec<_>>>()?);
        }
        for s in &tabs {
            for t in &tabs {
                let (s2, t2) = (s.transpose(), t.transpose());
                let left = alg.sharp(&x(&s2, &t2)?);
                for (iu, u) in tabs.iter().enumerate() {
                    for (iv, v) in tabs.iter().enumerate() {
                        let value = alg.pairing(&left, &plain[iu][iv])?;
                        report.pairings += 1;
                        let witness = || Error::TriangularityViolation {
                            lambda: lambda.to_string(),
                            s: s.to_string(),
                            t: t.to_string(),
                            u: u.to_string(),
                            v: v.to_string(),
                        };
                        if u == s && v == t {
                            let (sign, exponent) =
                                unit_monomial(r, alg.q(), &value, bound).ok_or_else(witness)?;
                            report.diagonal.push(DiagonalEntry {
                                lambda: lambda.to_string(),
                                s: s.to_string(),
                                t: t.to_string(),
                                value: r.format(&value),
                                sign,
                                exponent,
                            });
                        } else if r.is_zero(&value) {
                            report.zeros += 1;
                        } else if !(tableau_dominance(u, s)? && tableau_dominance(v, t)?) {
                            return Err(witness());
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnCellVerdict {
    pub relation: SubspaceRelation,
    pub tau: PartitionSet,
    pub ann_dim: usize,
    pub ideal_dim: usize,
}

/// Compares `Ann(X)` for a Young sum `X` with the cell ideal `A(τ)`,
/// `τ = Par(n) ∖ ĥat ζ(X)`. Refuses unless the coarsening closure of `ζ(X)`
/// is closed upward under dominance.
pub fn ann_cell_verify<F: Field>(
    field: F,
    n: usize,
    q: F::Elem,
    summands: &[Summand],
) -> Result<AnnCellVerdict> {
    if summands.iter().any(|s| s.signed) {
        return Err(Error::NotAYoungSum);
    }
    let zeta = PartitionSet::new(
        n,
        summands
            .iter()
            .filter(|s| s.mult > 0)
            .map(|s| s.partition.clone()),
    )?;
    let closure = zeta.coarsening_closure();
    if !closure.is_cosaturated() {
        return Err(Error::HypothesisFails(format!(
            "coarsening closure {closure} is not closed upward under dominance"
        )));
    }
    let tau = closure.complement();
    let x = young_sum(field.clone(), n, q.clone(), summands)?;
    let ann = annihilator(&x)?;
    let alg = HeckeAlgebra::new(field, n, q)?;
    let datum = regular_cell_basis(&alg)?;
    let ideal = cell_ideal(&datum, &tau);
    Ok(AnnCellVerdict {
        relation: ann.compare(&ideal.span)?,
        ann_dim: ann.dim(),
        ideal_dim: ideal.span.dim(),
        tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, RationalFunctions, Rationals};
    use crate::partitions::Partition;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn triangular_n2_n3() {
        let k = RationalFunctions::new(Rationals);
        for n in 2..=3 {
            let alg = HeckeAlgebra::new(k.clone(), n, k.t()).unwrap();
            let rep = triangularity_check(&alg).unwrap();
            let count: usize = partitions_of(n)
                .iter()
                .map(|l| crate::partitions::spec_dimension(l).pow(4))
                .sum();
            assert_eq!(rep.pairings, count);
            assert_eq!(
                rep.diagonal.len(),
                partitions_of(n)
                    .iter()
                    .map(|l| crate::partitions::spec_dimension(l).pow(2))
                    .sum::<usize>()
            );
        }
    }

    #[test]
    fn the_other_convention_breaks_the_pattern() {
        let k = RationalFunctions::new(Rationals);
        let alg = HeckeAlgebra::new(k.clone(), 4, k.t()).unwrap();
        let err = triangularity_check_with(&alg, MurphyConvention::Right).unwrap_err();
        assert!(
            matches!(err, Error::TriangularityViolation { ref lambda, .. } if lambda == "(3,1)")
        );
    }

    #[test]
    fn small_verdicts() {
        let f3 = PrimeField::new(3).unwrap();
        let v = ann_cell_verify(f3, 3, 1, &[Summand::young(p(&[2, 1]))]).unwrap();
        assert_eq!(v.relation, SubspaceRelation::Equal);
        assert_eq!(v.tau.to_vec(), vec![p(&[1, 1, 1])]);
        assert_eq!(v.ann_dim, 1);
        let v = ann_cell_verify(
            Rationals,
            3,
            Rationals.from_i64(-1),
            &[Summand::young(p(&[2, 1]))],
        )
        .unwrap();
        assert_eq!(v.relation, SubspaceRelation::Equal);
        let err = ann_cell_verify(Rationals, 4, Rationals.one(), &[Summand::young(p(&[2, 2]))])
            .unwrap_err();
        assert!(matches!(err, Error::HypothesisFails(_)));
    }
}
