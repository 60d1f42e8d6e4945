use std::fmt;

/// A commutative ring with identity, represented by a descriptor object that
/// performs arithmetic on plain element values.
///
/// Keeping the arithmetic on the descriptor lets runtime parameters (the prime
/// of a finite field, the base field of a function field) live in one place
/// instead of being copied into every element.
pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Short name of the domain, e.g. `Q`, `F_3`, `Q(t)`.
    fn describe(&self) -> String;
    fn format(&self, a: &Self::Elem) -> String;
    fn characteristic(&self) -> u64;

    /// Whether `a` is a valid, normalised member of this domain.
    fn contains(&self, _a: &Self::Elem) -> bool {
        true
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// `a += b * c`
    fn mul_add_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        let prod = self.mul(b, c);
        self.add_assign(a, &prod);
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}
