use super::poly;
use super::ratfunc::{RatFunc, RationalFunctions};
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// `t^low * (c_0 + c_1 t + ...)` with `c_0 != 0` and a nonzero top coefficient.
/// Zero has `coeffs` empty and `low == 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent<E> {
    low: i64,
    coeffs: Vec<E>,
}

impl<E> Laurent<E> {
    pub fn lowest_exponent(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }
    pub fn highest_exponent(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }
    pub fn coefficients(&self) -> &[E] {
        &self.coeffs
    }
}

/// Laurent polynomials `R[t, t^-1]` over a base ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolys<R: Ring> {
    base: R,
}

impl<R: Ring> LaurentPolys<R> {
    pub fn new(base: R) -> Self {
        LaurentPolys { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn monomial(&self, c: R::Elem, e: i64) -> Laurent<R::Elem> {
        self.from_parts(e, vec![c])
    }

    pub fn t(&self) -> Laurent<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    /// Normalises by stripping zero coefficients at both ends.
    pub fn from_parts(&self, low: i64, mut coeffs: Vec<R::Elem>) -> Laurent<R::Elem> {
        poly::trim(&self.base, &mut coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| self.base.is_zero(c)).count();
        if lead_zeros == coeffs.len() {
            return Laurent {
                low: 0,
                coeffs: Vec::new(),
            };
        }
        coeffs.drain(..lead_zeros);
        Laurent {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }
}

impl<F: Field> LaurentPolys<F> {
    pub fn specialize(&self, a: &Laurent<F::Elem>, at: &F::Elem) -> Result<F::Elem> {
        let f = &self.base;
        if f.is_zero(at) {
            return Err(Error::ZeroParameter);
        }
        let body = poly::eval(f, &a.coeffs, at);
        let shift = if a.low >= 0 {
            f.pow(at, a.low as u64)
        } else {
            f.pow(&f.inv(at).expect("nonzero"), a.low.unsigned_abs())
        };
        Ok(f.mul(&body, &shift))
    }

    pub fn to_rational_function(
        &self,
        k: &RationalFunctions<F>,
        a: &Laurent<F::Elem>,
    ) -> RatFunc<F::Elem> {
        let body = k.from_poly(a.coeffs.clone());
        let shift = if a.low >= 0 {
            k.pow(&k.t(), a.low as u64)
        } else {
            k.pow(&k.inv(&k.t()).expect("t is a unit"), a.low.unsigned_abs())
        };
        k.mul(&body, &shift)
    }
}

impl<R: Ring> Ring for LaurentPolys<R> {
    type Elem = Laurent<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Laurent {
            low: 0,
            coeffs: Vec::new(),
        }
    }
    fn one(&self) -> Self::Elem {
        self.monomial(self.base.one(), 0)
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.monomial(self.base.from_i64(n), 0)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.coeffs.is_empty() {
            return b.clone();
        }
        if b.coeffs.is_empty() {
            return a.clone();
        }
        let low = a.low.min(b.low);
        let high = a
            .highest_exponent()
            .unwrap()
            .max(b.highest_exponent().unwrap());
        let mut coeffs = vec![self.base.zero(); (high - low + 1) as usize];
        for x in [a, b] {
            let off = (x.low - low) as usize;
            for (i, c) in x.coeffs.iter().enumerate() {
                self.base.add_assign(&mut coeffs[off + i], c);
            }
        }
        self.from_parts(low, coeffs)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Laurent {
            low: a.low,
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero();
        }
        self.from_parts(a.low + b.low, poly::mul(&self.base, &a.coeffs, &b.coeffs))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }
    fn describe(&self) -> String {
        format!("{}[t,t^-1]", self.base.describe())
    }
    fn format(&self, a: &Self::Elem) -> String {
        poly::format(&self.base, &a.coeffs, "t", a.low)
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn contains(&self, a: &Self::Elem) -> bool {
        match (a.coeffs.first(), a.coeffs.last()) {
            (None, None) => a.low == 0,
            (Some(f), Some(l)) => {
                !self.base.is_zero(f)
                    && !self.base.is_zero(l)
                    && a.coeffs.iter().all(|c| self.base.contains(c))
            }
            _ => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, Rationals};

    #[test]
    fn normalises_lowest_power() {
        let l = LaurentPolys::new(Rationals);
        let z = Rationals.zero();
        let one = Rationals.one();
        let a = l.from_parts(-3, vec![z.clone(), z.clone(), one.clone(), z.clone()]);
        assert_eq!(a.lowest_exponent(), Some(-1));
        assert_eq!(a.highest_exponent(), Some(-1));
        assert!(l.contains(&a));
        assert_eq!(l.zero().lowest_exponent(), None);
    }

    #[test]
    fn t_inverse_specialises() {
        let f5 = PrimeField::new(5).unwrap();
        let l = LaurentPolys::new(f5);
        let tinv = l.monomial(1, -1);
        assert_eq!(l.specialize(&tinv, &2).unwrap(), 3);
        assert_eq!(l.specialize(&tinv, &0), Err(Error::ZeroParameter));
        assert!(l.is_one(&l.mul(&tinv, &l.t())));
    }

    #[test]
    fn agrees_with_rational_function_image() {
        let l = LaurentPolys::new(Rationals);
        let k = RationalFunctions::new(Rationals);
        let a = l.add(&l.monomial(Rationals.from_i64(3), -2), &l.t());
        let r = l.to_rational_function(&k, &a);
        let x = Rationals.from_i64(7);
        assert_eq!(l.specialize(&a, &x).unwrap(), k.specialize(&r, &x).unwrap());
    }
}
