use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::algebra::{Field, Integers};
use crate::centraliser::{
    dc_check, integral_annihilator_lattice, integral_annihilator_of_gset, CentraliserReport,
};
use crate::domain::{map_domains, run_over, Domain, FieldTask};
use crate::error::{Error, Result};
use crate::modules::{
    index_of_hook_set, tensor_index_closed_form, tensor_orbit_profile, tensor_space_module,
    tensor_zeta_closed_form, young_sum, GSetModule, Summand,
};
use crate::partitions::{capital_n, Partition, PartitionSet};
use crate::perm::factorial;

struct DcTask<'a> {
    n: usize,
    summands: &'a [Summand],
}

impl FieldTask for DcTask<'_> {
    type Output = CentraliserReport;
    fn run<F: Field>(self, field: F, q: F::Elem) -> Result<CentraliserReport> {
        Ok(dc_check(&young_sum(field, self.n, q, self.summands)?))
    }
}

/// `dc_check` of a Young sum over a runtime-chosen domain.
pub fn dc_check_spec(
    domain: Domain,
    q: &str,
    n: usize,
    summands: &[Summand],
) -> Result<CentraliserReport> {
    run_over(domain, q, DcTask { n, summands })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookReport {
    pub n: usize,
    pub domain: String,
    pub q: String,
    pub summands: String,
    pub idx: usize,
    pub n_idx: usize,
    pub ann: usize,
    pub dend: usize,
    pub dc_holds: bool,
    /// `dim Ann = n! - N_{n,idx}` and `dim DEnd = N_{n,idx}`
    pub matches_formula: bool,
}

/// For a sum of hook Young modules: the double centraliser property and the
/// dimensions `n! - N_{n,idx}`, `N_{n,idx}` over each field.
pub fn hook_report(
    n: usize,
    q: &str,
    summands: &[Summand],
    fields: &[Domain],
) -> Result<Vec<HookReport>> {
    if summands.iter().any(|s| s.signed || !s.partition.is_hook()) {
        return Err(Error::NotAHookSum);
    }
    let zeta = PartitionSet::new(
        n,
        summands
            .iter()
            .filter(|s| s.mult > 0)
            .map(|s| s.partition.clone()),
    )?;
    let idx = index_of_hook_set(&zeta).ok_or(Error::NotAHookSum)?;
    let n_idx = capital_n(n, idx)?;
    map_domains(fields, |d| {
        let r = dc_check_spec(d, q, n, summands)?;
        Ok(HookReport {
            n,
            domain: r.domain,
            q: r.q,
            summands: r.module,
            idx,
            n_idx,
            ann: r.dims.ann,
            dend: r.dims.dend,
            dc_holds: r.dc_holds,
            matches_formula: r.dims.ann == factorial(n) - n_idx && r.dims.dend == n_idx,
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub characteristic_two: CentraliserReport,
    pub rational: CentraliserReport,
    pub divisors: Vec<String>,
    pub failing_primes: Vec<u64>,
    pub ann_jumps: bool,
    pub dc_fails_in_char_two: bool,
    pub dc_holds_over_q: bool,
    pub two_fails: bool,
    pub all_hold: bool,
}

/// `M(2,2)` for `Hec(4)` at `q = 1`: over a field of characteristic 2 the
/// annihilator grows and the double centraliser property fails.
pub fn counterexample_report(domain: Domain) -> Result<CounterexampleReport> {
    if domain.characteristic() != 2 {
        return Err(Error::WrongCharacteristic(domain.to_string()));
    }
    let m22 = [Summand::young(Partition::new(vec![2, 2])?)];
    let char2 = dc_check_spec(domain, "1", 4, &m22)?;
    let rational = dc_check_spec(Domain::Q, "1", 4, &m22)?;
    let snf = integral_annihilator_lattice(&young_sum(Integers, 4, BigInt::one(), &m22)?)?;
    let failing_primes = snf.failing_primes();
    let ann_jumps = char2.dims.ann > rational.dims.ann;
    let dc_fails_in_char_two = !char2.dc_holds;
    let dc_holds_over_q = rational.dc_holds;
    let two_fails = failing_primes.contains(&2);
    Ok(CounterexampleReport {
        all_hold: ann_jumps && dc_fails_in_char_two && dc_holds_over_q && two_fails,
        characteristic_two: char2,
        rational,
        divisors: snf.divisors.iter().map(ToString::to_string).collect(),
        failing_primes,
        ann_jumps,
        dc_fails_in_char_two,
        dc_holds_over_q,
        two_fails,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorFieldDims {
    pub domain: String,
    pub ann: usize,
    pub dend: usize,
    pub image: usize,
    pub dc_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorReport {
    pub n: usize,
    pub r: usize,
    pub m: usize,
    pub points: usize,
    pub zeta: PartitionSet,
    pub zeta_matches_closed_form: bool,
    pub idx: usize,
    pub idx_matches_closed_form: bool,
    /// `m! - N_{m,idx}`
    pub expected_ann: usize,
    pub fields: Vec<TensorFieldDims>,
    pub integral_rank: usize,
    pub failing_primes: Vec<u64>,
    pub all_hold: bool,
}

struct GSetDc<'a>(&'a GSetModule);

impl FieldTask for GSetDc<'_> {
    type Output = CentraliserReport;
    fn run<F: Field>(self, field: F, _q: F::Elem) -> Result<CentraliserReport> {
        Ok(dc_check(&self.0.to_module(field)?))
    }
}

/// `I(n,r)` as a `Sym(m)`-set: orbit profile against the closed forms, the
/// double centraliser property over each field, and the integral lattice.
pub fn tensor_report(n: usize, r: usize, m: usize, fields: &[Domain]) -> Result<TensorReport> {
    let x = tensor_space_module(n, r, m)?;
    let (zeta, idx) = tensor_orbit_profile(n, r, m)?;
    let zeta_matches_closed_form = zeta == tensor_zeta_closed_form(n, r, m)?;
    let idx_matches_closed_form = idx == tensor_index_closed_form(n, r, m)?;
    let expected_ann = factorial(m) - capital_n(m, idx)?;
    let dims = map_domains(fields, |d| {
        let rep = run_over(d, "1", GSetDc(&x))?;
        Ok(TensorFieldDims {
            domain: rep.domain,
            ann: rep.dims.ann,
            dend: rep.dims.dend,
            image: rep.dims.image,
            dc_holds: rep.dc_holds,
        })
    })?;
    let snf = integral_annihilator_of_gset(&x)?;
    let integral_rank = snf.kernel.rank();
    let failing_primes = snf.failing_primes();
    let all_hold = zeta_matches_closed_form
        && idx_matches_closed_form
        && dims.iter().all(|f| f.dc_holds && f.ann == expected_ann)
        && integral_rank == expected_ann
        && failing_primes.is_empty();
    Ok(TensorReport {
        n,
        r,
        m,
        points: x.size(),
        zeta,
        zeta_matches_closed_form,
        idx,
        idx_matches_closed_form,
        expected_ann,
        fields: dims,
        integral_rank,
        failing_primes,
        all_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hook_examples() {
        let fields = [Domain::Q, Domain::Fp(2), Domain::Fp(3)];
        let s = [Summand::young(p(&[3, 1])), Summand::young(p(&[4]))];
        for h in hook_report(4, "1", &s, &fields).unwrap() {
            assert_eq!((h.ann, h.dend, h.idx), (14, 10, 3));
            assert!(h.dc_holds && h.matches_formula);
        }
        let h = &hook_report(4, "1", &[Summand::young(p(&[2, 1, 1]))], &[Domain::Q]).unwrap()[0];
        assert_eq!((h.idx, h.ann), (2, 1));
        let h = &hook_report(5, "1", &[Summand::young(p(&[5]))], &[Domain::Fp(2)]).unwrap()[0];
        assert_eq!(h.ann, 119);
        assert_eq!(
            hook_report(4, "1", &[Summand::young(p(&[2, 2]))], &fields).unwrap_err(),
            Error::NotAHookSum
        );
    }

    #[test]
    fn counterexample() {
        let r = counterexample_report(Domain::Fp(2)).unwrap();
        assert!(r.all_hold);
        assert_eq!(r.rational.dims.ann, 10);
        assert_eq!(r.failing_primes, vec![2]);
        assert!(matches!(
            counterexample_report(Domain::Fp(3)),
            Err(Error::WrongCharacteristic(_))
        ));
        assert!(matches!(
            counterexample_report(Domain::Q),
            Err(Error::WrongCharacteristic(_))
        ));
    }

    #[test]
    fn tensor_examples() {
        let f = [Domain::Q, Domain::Fp(2)];
        let t = tensor_report(4, 2, 3, &f).unwrap();
        assert_eq!(t.expected_ann, 0);
        assert!(t.all_hold, "{t:?}");
        let t = tensor_report(4, 1, 3, &f).unwrap();
        assert_eq!(t.expected_ann, 1);
        assert!(t.all_hold, "{t:?}");
        let t = tensor_report(4, 2, 4, &f).unwrap();
        assert_eq!(t.expected_ann, 1);
        assert!(t.all_hold, "{t:?}");
        assert!(matches!(
            tensor_report(3, 1, 4, &f),
            Err(Error::RangeError(_))
        ));
    }
}
