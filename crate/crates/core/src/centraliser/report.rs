use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::ann::annihilator_dim;
use super::dend::double_end_dim;
use super::end::end_algebra;
use super::integral::integral_annihilator_lattice;
use crate::algebra::{Field, Integers, SmithForm};
use crate::domain::{map_domains, run_over, Domain, FieldTask};
use crate::error::Result;
use crate::modules::{young_sum, ModuleRep, ModuleSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub ann: usize,
    pub end: usize,
    pub dend: usize,
    pub image: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentraliserReport {
    pub module: String,
    pub domain: String,
    pub q: String,
    pub dims: Dims,
    pub dc_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisors: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_primes: Option<Vec<u64>>,
}

impl CentraliserReport {
    /// Attaches invariant factors and failing primes from an integral computation.
    pub fn with_integral(mut self, snf: &SmithForm) -> Self {
        self.divisors = Some(snf.divisors.iter().map(ToString::to_string).collect());
        self.failing_primes = Some(snf.failing_primes());
        self
    }
}

/// Whether `ν: Hec(n) → DEnd(P)` is onto, with all four dimensions.
pub fn dc_check<F: Field>(p: &ModuleRep<F>) -> CentraliserReport {
    let f = p.ring();
    let ann = annihilator_dim(p);
    let image = p.group().order() - ann;
    let end = end_algebra(p);
    let dend = double_end_dim(&end, Some(image));
    CentraliserReport {
        module: p.description().to_string(),
        domain: f.describe(),
        q: f.format(p.q()),
        dims: Dims {
            ann,
            end: end.dim(),
            dend,
            image,
        },
        dc_holds: dend == image,
        divisors: None,
        failing_primes: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldDims {
    pub domain: String,
    pub q: String,
    pub ann: usize,
    pub end: usize,
    /// some dimension is larger than over the generic domain
    pub exceeds_generic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseChangeReport {
    pub module: String,
    pub generic: FieldDims,
    pub fields: Vec<FieldDims>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisors: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_primes: Option<Vec<u64>>,
}

struct DimsTask<'a>(&'a ModuleSpec);

impl FieldTask for DimsTask<'_> {
    type Output = FieldDims;
    fn run<F: Field>(self, field: F, q: F::Elem) -> Result<FieldDims> {
        let m = young_sum(field.clone(), self.0.n, q.clone(), &self.0.summands)?;
        Ok(FieldDims {
            domain: field.describe(),
            q: field.format(&q),
            ann: annihilator_dim(&m),
            end: end_algebra(&m).dim(),
            exceeds_generic: false,
        })
    }
}

/// Ann and End dimensions of one Young-sum specification over each listed
/// field, against the generic case (`Q` when `q = 1`, else `Q(t)`). For
/// `q = 1` the integral lattice supplies the failing primes.
pub fn base_change_report(spec: &ModuleSpec, fields: &[Domain]) -> Result<BaseChangeReport> {
    spec.validate()?;
    let q = spec.q.value_text();
    let at_one = q.trim() == "1";
    let generic = if at_one {
        run_over(Domain::Q, "1", DimsTask(spec))?
    } else {
        run_over(Domain::Qt, "t", DimsTask(spec))?
    };
    let out = map_domains(fields, |d| {
        let mut dims = run_over(d, &q, DimsTask(spec))?;
        dims.exceeds_generic = dims.ann > generic.ann || dims.end > generic.end;
        Ok(dims)
    })?;
    let (divisors, failing_primes) = if at_one {
        let snf = integral_annihilator_lattice(&young_sum(
            Integers,
            spec.n,
            BigInt::one(),
            &spec.summands,
        )?)?;
        (
            Some(snf.divisors.iter().map(ToString::to_string).collect()),
            Some(snf.failing_primes()),
        )
    } else {
        (None, None)
    };
    Ok(BaseChangeReport {
        module: spec.describe(),
        generic,
        fields: out,
        divisors,
        failing_primes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, Rationals, Ring};
    use crate::modules::{ScalarSpec, Summand};
    use crate::partitions::Partition;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counterexample_and_hook_sum() {
        let f2 = PrimeField::new(2).unwrap();
        let m22 = [Summand::young(p(&[2, 2]))];
        let r = dc_check(&young_sum(f2, 4, 1, &m22).unwrap());
        assert!(!r.dc_holds);
        assert!(r.dims.ann >= 11);
        let r = dc_check(&young_sum(Rationals, 4, Rationals.one(), &m22).unwrap());
        assert!(r.dc_holds);
        assert_eq!(
            r.dims,
            Dims {
                ann: 10,
                end: 3,
                dend: 14,
                image: 14
            }
        );
        let hooks = [Summand::young(p(&[3, 1])), Summand::young(p(&[4]))];
        let r = dc_check(&young_sum(f2, 4, 1, &hooks).unwrap());
        assert_eq!(
            r.dims,
            Dims {
                ann: 14,
                end: 5,
                dend: 10,
                image: 10
            }
        );
        assert!(r.dc_holds);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["dims"]["dend"], 10);
    }

    #[test]
    fn base_change_m22() {
        let spec = ModuleSpec {
            n: 4,
            q: ScalarSpec::new("Q", None, "1"),
            summands: vec![Summand::young(p(&[2, 2]))],
        };
        let r = base_change_report(&spec, &[Domain::Fp(2), Domain::Fp(3)]).unwrap();
        assert_eq!(r.generic.ann, 10);
        assert!(r.fields[0].exceeds_generic);
        assert!(!r.fields[1].exceeds_generic);
        assert_eq!(r.fields[0].end, r.generic.end);
        assert_eq!(r.failing_primes, Some(vec![2]));
    }
}
