use super::poly;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// A rational function `num / den` in the indeterminate `t`.
///
/// Always stored reduced: `gcd(num, den) = 1` and `den` monic. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc<E> {
    num: Vec<E>,
    den: Vec<E>,
}

impl<E> RatFunc<E> {
    pub fn numerator(&self) -> &[E] {
        &self.num
    }
    pub fn denominator(&self) -> &[E] {
        &self.den
    }
}

/// The rational function field `F(t)` over a base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunctions<F: Field> {
    base: F,
}

impl<F: Field> RationalFunctions<F> {
    pub fn new(base: F) -> Self {
        RationalFunctions { base }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    /// The indeterminate `t`.
    pub fn t(&self) -> RatFunc<F::Elem> {
        self.from_poly(vec![self.base.zero(), self.base.one()])
    }

    pub fn constant(&self, c: F::Elem) -> RatFunc<F::Elem> {
        self.from_poly(vec![c])
    }

    pub fn from_poly(&self, mut p: Vec<F::Elem>) -> RatFunc<F::Elem> {
        poly::trim(&self.base, &mut p);
        RatFunc {
            num: p,
            den: vec![self.base.one()],
        }
    }

    /// Builds `num / den`, reducing to canonical form. Fails on a zero denominator.
    pub fn fraction(&self, num: Vec<F::Elem>, den: Vec<F::Elem>) -> Result<RatFunc<F::Elem>> {
        let mut den = den;
        poly::trim(&self.base, &mut den);
        if den.is_empty() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(self.normalize(num, den))
    }

    fn normalize(&self, mut num: Vec<F::Elem>, den: Vec<F::Elem>) -> RatFunc<F::Elem> {
        let f = &self.base;
        poly::trim(f, &mut num);
        if num.is_empty() {
            return RatFunc {
                num,
                den: vec![f.one()],
            };
        }
        if poly::is_one(f, &den) {
            return RatFunc { num, den };
        }
        let g = poly::gcd(f, &num, &den);
        let (mut num, mut den) = if poly::is_one(f, &g) {
            (num, den)
        } else {
            (poly::divrem(f, &num, &g).0, poly::divrem(f, &den, &g).0)
        };
        let (lead, monic) = poly::make_monic(f, &den);
        if !f.is_one(&lead) {
            let inv = f.inv(&lead).expect("nonzero lead");
            num = poly::scale(f, &num, &inv);
        }
        den = monic;
        RatFunc { num, den }
    }

    /// Evaluates `t -> at`.
    pub fn specialize(&self, a: &RatFunc<F::Elem>, at: &F::Elem) -> Result<F::Elem> {
        let f = &self.base;
        if f.is_zero(at) {
            return Err(Error::ZeroParameter);
        }
        let d = poly::eval(f, &a.den, at);
        let n = poly::eval(f, &a.num, at);
        f.div(&n, &d).ok_or(Error::DenominatorVanishes)
    }

    /// If `a = c * t^e` with `e` possibly negative, returns `(c, e)`.
    pub fn as_monomial(&self, a: &RatFunc<F::Elem>) -> Option<(F::Elem, i64)> {
        let f = &self.base;
        let single = |p: &[F::Elem]| {
            let nz: Vec<usize> = (0..p.len()).filter(|&i| !f.is_zero(&p[i])).collect();
            (nz.len() == 1).then(|| nz[0])
        };
        let ne = single(&a.num)?;
        let de = single(&a.den)?;
        Some((a.num[ne].clone(), ne as i64 - de as i64))
    }
}

impl<F: Field> Ring for RationalFunctions<F> {
    type Elem = RatFunc<F::Elem>;

    fn zero(&self) -> Self::Elem {
        RatFunc {
            num: Vec::new(),
            den: vec![self.base.one()],
        }
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = &self.base;
        if a.den == b.den {
            let num = poly::add(f, &a.num, &b.num);
            return self.normalize(num, a.den.clone());
        }
        let num = poly::add(
            f,
            &poly::mul(f, &a.num, &b.den),
            &poly::mul(f, &b.num, &a.den),
        );
        self.normalize(num, poly::mul(f, &a.den, &b.den))
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        RatFunc {
            num: poly::neg(&self.base, &a.num),
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = &self.base;
        if a.num.is_empty() || b.num.is_empty() {
            return self.zero();
        }
        let num = poly::mul(f, &a.num, &b.num);
        if poly::is_one(f, &a.den) && poly::is_one(f, &b.den) {
            return RatFunc {
                num,
                den: a.den.clone(),
            };
        }
        self.normalize(num, poly::mul(f, &a.den, &b.den))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.num.is_empty()
    }
    fn describe(&self) -> String {
        format!("{}(t)", self.base.describe())
    }
    fn format(&self, a: &Self::Elem) -> String {
        let n = poly::format(&self.base, &a.num, "t", 0);
        if poly::is_one(&self.base, &a.den) {
            n
        } else {
            format!("({n})/({})", poly::format(&self.base, &a.den, "t", 0))
        }
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn contains(&self, a: &Self::Elem) -> bool {
        let f = &self.base;
        let trimmed = |p: &[F::Elem]| p.last().is_none_or(|c| !f.is_zero(c));
        let shaped = trimmed(&a.num)
            && trimmed(&a.den)
            && a.den.last().is_some_and(|c| f.is_one(c))
            && a.num.iter().chain(&a.den).all(|c| f.contains(c));
        if !shaped {
            return false;
        }
        if a.num.is_empty() {
            poly::is_one(f, &a.den)
        } else {
            poly::is_one(f, &poly::gcd(f, &a.num, &a.den))
        }
    }
}

impl<F: Field> Field for RationalFunctions<F> {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if a.num.is_empty() {
            return None;
        }
        Some(self.normalize(a.den.clone(), a.num.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PrimeField, Rationals};

    #[test]
    fn specialize_identity_substitution() {
        let k = RationalFunctions::new(Rationals);
        assert_eq!(
            k.specialize(&k.t(), &Rationals.one()).unwrap(),
            Rationals.one()
        );
    }

    #[test]
    fn specialize_reduces_before_evaluating() {
        let k = RationalFunctions::new(Rationals);
        let q = |v: &[i64]| v.iter().map(|&x| Rationals.from_i64(x)).collect::<Vec<_>>();
        let f = k.fraction(q(&[-1, 0, 1]), q(&[-1, 1])).unwrap();
        assert_eq!(f, k.from_poly(q(&[1, 1])));
        assert_eq!(
            k.specialize(&f, &Rationals.from_i64(3)).unwrap(),
            Rationals.from_i64(4)
        );
        // the removable singularity at t = 1 is gone after reduction
        assert_eq!(
            k.specialize(&f, &Rationals.one()).unwrap(),
            Rationals.from_i64(2)
        );
    }

    #[test]
    fn specialize_inverse_in_f5() {
        let f5 = PrimeField::new(5).unwrap();
        let k = RationalFunctions::new(f5);
        let tinv = k.inv(&k.t()).unwrap();
        assert_eq!(k.specialize(&tinv, &2).unwrap(), 3);
    }

    #[test]
    fn specialize_errors() {
        let k = RationalFunctions::new(Rationals);
        let q = |v: &[i64]| v.iter().map(|&x| Rationals.from_i64(x)).collect::<Vec<_>>();
        let pole = k.fraction(q(&[1]), q(&[-2, 1])).unwrap();
        assert_eq!(
            k.specialize(&pole, &Rationals.from_i64(2)),
            Err(Error::DenominatorVanishes)
        );
        assert_eq!(
            k.specialize(&k.t(), &Rationals.zero()),
            Err(Error::ZeroParameter)
        );
    }

    #[test]
    fn monic_denominator_invariant() {
        let k = RationalFunctions::new(Rationals);
        let q = |v: &[i64]| v.iter().map(|&x| Rationals.from_i64(x)).collect::<Vec<_>>();
        let f = k.fraction(q(&[2]), q(&[0, 4])).unwrap();
        assert_eq!(f.denominator(), &q(&[0, 1])[..]);
        assert!(k.contains(&f));
        assert_eq!(
            k.as_monomial(&f),
            Some((Rationals.parse("1/2").unwrap(), -1))
        );
    }
}
