//! Runtime choice of coefficient field, for callers that only learn the
//! domain from input (the command line, JSON specifications, the browser demo).

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Field, PrimeField, RationalFunctions, Rationals, Ring};
use crate::error::{Error, Result};
use crate::modules::ScalarSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Q,
    Fp(u64),
    /// `Q(t)`
    Qt,
    /// `F_p(t)`
    Fpt(u64),
    /// `Z`; accepted by the integral routines only.
    Z,
}

impl Domain {
    pub fn characteristic(&self) -> u64 {
        match self {
            Domain::Fp(p) | Domain::Fpt(p) => *p,
            _ => 0,
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, Domain::Z)
    }

    /// Domain and parameter text from a module specification.
    pub fn from_scalar_spec(spec: &ScalarSpec) -> Result<(Domain, String)> {
        let need_p = || {
            spec.p
                .ok_or_else(|| Error::Parse(format!("domain {} needs a prime p", spec.domain)))
        };
        let domain = match spec.domain.as_str() {
            "Q" => Domain::Q,
            "Z" => Domain::Z,
            "Qt" | "Q(t)" => Domain::Qt,
            "Fp" => Domain::Fp(need_p()?),
            "Fpt" | "Fp(t)" => Domain::Fpt(need_p()?),
            other => other.parse()?,
        };
        Ok((domain, spec.value_text()))
    }
}

impl FromStr for Domain {
    type Err = Error;

    /// `Q`, `Z`, `Qt`, `Q(t)`, `Fp:5`, `F5`, `F_5`, `Fpt:5`, `F5(t)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "Q" => return Ok(Domain::Q),
            "Z" => return Ok(Domain::Z),
            "Qt" | "Q(t)" => return Ok(Domain::Qt),
            _ => {}
        }
        let bad = || Error::Parse(format!("unknown domain '{s}'"));
        let (body, generic) = if let Some(b) = s.strip_prefix("Fpt:") {
            (b, true)
        } else if let Some(b) = s.strip_prefix("Fp:") {
            (b, false)
        } else if let Some(b) = s.strip_prefix('F') {
            match b.strip_suffix("(t)") {
                Some(b) => (b.trim_start_matches('_'), true),
                None => (b.trim_start_matches('_'), false),
            }
        } else {
            return Err(bad());
        };
        let p: u64 = body.parse().map_err(|_| bad())?;
        PrimeField::new(p)?;
        Ok(if generic {
            Domain::Fpt(p)
        } else {
            Domain::Fp(p)
        })
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Q => write!(f, "Q"),
            Domain::Fp(p) => write!(f, "F_{p}"),
            Domain::Qt => write!(f, "Q(t)"),
            Domain::Fpt(p) => write!(f, "F_{p}(t)"),
            Domain::Z => write!(f, "Z"),
        }
    }
}

/// A computation generic over the coefficient field.
pub trait FieldTask {
    type Output;
    fn run<F: Field>(self, field: F, q: F::Elem) -> Result<Self::Output>;
}

/// Runs `task` over `domain` with parameter `q` (`"t"` for the generic
/// parameter over function fields).
pub fn run_over<T: FieldTask>(domain: Domain, q: &str, task: T) -> Result<T::Output> {
    let q = q.trim();
    match domain {
        Domain::Q => {
            let q = Rationals.parse(q)?;
            task.run(Rationals, q)
        }
        Domain::Fp(p) => {
            let f = PrimeField::new(p)?;
            let q = f.parse(q)?;
            task.run(f, q)
        }
        Domain::Qt => {
            let k = RationalFunctions::new(Rationals);
            let q = if q == "t" {
                k.t()
            } else {
                k.constant(Rationals.parse(q)?)
            };
            task.run(k, q)
        }
        Domain::Fpt(p) => {
            let f = PrimeField::new(p)?;
            let k = RationalFunctions::new(f);
            let q = if q == "t" {
                k.t()
            } else {
                k.constant(f.parse(q)?)
            };
            task.run(k, q)
        }
        Domain::Z => Err(Error::DomainNotField(domain.to_string())),
    }
}

/// Describes a parameter value as it will be used, e.g. `q=1 over F_2`.
pub fn describe_parameter<R: Ring>(ring: &R, q: &R::Elem) -> String {
    format!("q={} over {}", ring.format(q), ring.describe())
}

/// Runs `f` once per domain, in parallel where threads are available.
/// Results come back in the order of `domains`; the first error wins.
pub fn map_domains<T, F>(domains: &[Domain], f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Domain) -> Result<T> + Sync,
{
    if cfg!(target_arch = "wasm32") || domains.len() < 2 {
        return domains.iter().map(|&d| f(d)).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = domains
            .iter()
            .map(|&d| {
                let f = &f;
                scope.spawn(move || f(d))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("field worker panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Char;
    impl FieldTask for Char {
        type Output = (u64, String);
        fn run<F: Field>(self, field: F, q: F::Elem) -> Result<(u64, String)> {
            Ok((field.characteristic(), field.format(&q)))
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!("F_5".parse::<Domain>().unwrap(), Domain::Fp(5));
        assert_eq!("Fp:3".parse::<Domain>().unwrap(), Domain::Fp(3));
        assert_eq!("F2(t)".parse::<Domain>().unwrap(), Domain::Fpt(2));
        assert_eq!("Q(t)".parse::<Domain>().unwrap(), Domain::Qt);
        assert!("F4".parse::<Domain>().is_err());
        assert!("R".parse::<Domain>().is_err());
    }

    #[test]
    fn dispatch() {
        assert_eq!(
            run_over(Domain::Fp(3), "-1", Char).unwrap(),
            (3, "2".to_string())
        );
        assert_eq!(run_over(Domain::Qt, "t", Char).unwrap().0, 0);
        assert_eq!(
            run_over(Domain::Z, "1", Char).unwrap_err(),
            Error::DomainNotField("Z".into())
        );
        assert!(run_over(Domain::Q, "t", Char).is_err());
    }
}
