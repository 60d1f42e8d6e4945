use std::collections::BTreeMap;

use serde_json::{Map, Value};

use super::young::YoungSubgroup;
use crate::algebra::Ring;
use crate::error::{Error, Result};
use crate::partitions::Composition;
use crate::perm::{Perm, SymGroup};

/// An element of `Hec(n)` on the `T_w` basis. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement<E> {
    n: usize,
    q: E,
    terms: BTreeMap<Perm, E>,
}

impl<E: Clone + PartialEq> HeckeElement<E> {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn parameter(&self) -> &E {
        &self.q
    }

    pub fn terms(&self) -> &BTreeMap<Perm, E> {
        &self.terms
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `Hec(n)` over a ring with parameter `q`, where
/// `T_i T_w = T_{s_i w}` if `l(s_i w) > l(w)` and
/// `q T_{s_i w} + (q - 1) T_w` otherwise.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra<R: Ring> {
    ring: R,
    n: usize,
    q: R::Elem,
    q_minus_1: R::Elem,
}

impl<R: Ring> HeckeAlgebra<R> {
    pub fn new(ring: R, n: usize, q: R::Elem) -> Result<Self> {
        if ring.is_zero(&q) {
            return Err(Error::ZeroParameter);
        }
        let q_minus_1 = ring.sub(&q, &ring.one());
        Ok(HeckeAlgebra {
            ring,
            n,
            q,
            q_minus_1,
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

    pub fn zero(&self) -> HeckeElement<R::Elem> {
        HeckeElement {
            n: self.n,
            q: self.q.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> HeckeElement<R::Elem> {
        self.basis(&Perm::identity(self.n))
    }

    pub fn basis(&self, w: &Perm) -> HeckeElement<R::Elem> {
        assert_eq!(w.degree(), self.n);
        self.from_terms([(w.clone(), self.ring.one())])
    }

    /// `T_i`, 1-based.
    pub fn generator(&self, i: usize) -> HeckeElement<R::Elem> {
        self.basis(&Perm::simple(self.n, i))
    }

    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (Perm, R::Elem)>,
    ) -> HeckeElement<R::Elem> {
        let mut out = self.zero();
        for (w, c) in terms {
            self.accumulate(&mut out.terms, w, &c);
        }
        out
    }

    /// Element with the given coordinates in the order of `group`.
    pub fn from_coordinates(&self, group: &SymGroup, coords: &[R::Elem]) -> HeckeElement<R::Elem> {
        self.from_terms(group.elements().iter().cloned().zip(coords.iter().cloned()))
    }

    pub fn coordinates(&self, group: &SymGroup, a: &HeckeElement<R::Elem>) -> Vec<R::Elem> {
        let mut v = vec![self.ring.zero(); group.order()];
        for (w, c) in &a.terms {
            v[group.index_of(w)] = c.clone();
        }
        v
    }

    pub fn coefficient(&self, a: &HeckeElement<R::Elem>, w: &Perm) -> R::Elem {
        a.terms.get(w).cloned().unwrap_or_else(|| self.ring.zero())
    }

    fn accumulate(&self, terms: &mut BTreeMap<Perm, R::Elem>, w: Perm, c: &R::Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        match terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                self.ring.add_assign(e.get_mut(), c);
                if self.ring.is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    /// Rejects elements of another rank or parameter.
    pub fn check(&self, a: &HeckeElement<R::Elem>) -> Result<()> {
        if a.n != self.n {
            return Err(Error::RankMismatch(a.n, self.n));
        }
        if a.q != self.q || !a.terms.values().all(|c| self.ring.contains(c)) {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    pub fn add(
        &self,
        a: &HeckeElement<R::Elem>,
        b: &HeckeElement<R::Elem>,
    ) -> HeckeElement<R::Elem> {
        let mut out = a.clone();
        for (w, c) in &b.terms {
            self.accumulate(&mut out.terms, w.clone(), c);
        }
        out
    }

    pub fn neg(&self, a: &HeckeElement<R::Elem>) -> HeckeElement<R::Elem> {
        let terms = a
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), self.ring.neg(c)))
            .collect();
        HeckeElement {
            n: a.n,
            q: a.q.clone(),
            terms,
        }
    }

    pub fn sub(
        &self,
        a: &HeckeElement<R::Elem>,
        b: &HeckeElement<R::Elem>,
    ) -> HeckeElement<R::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &HeckeElement<R::Elem>, c: &R::Elem) -> HeckeElement<R::Elem> {
        self.from_terms(
            a.terms
                .iter()
                .map(|(w, x)| (w.clone(), self.ring.mul(c, x))),
        )
    }

    /// `T_i a`.
    pub fn left_generator(&self, i: usize, a: &HeckeElement<R::Elem>) -> HeckeElement<R::Elem> {
        let r = &self.ring;
        let mut out = BTreeMap::new();
        for (w, c) in &a.terms {
            let sw = w.left_mul_simple(i);
            if w.has_left_descent(i) {
                self.accumulate(&mut out, sw, &r.mul(c, &self.q));
                self.accumulate(&mut out, w.clone(), &r.mul(c, &self.q_minus_1));
            } else {
                self.accumulate(&mut out, sw, c);
            }
        }
        HeckeElement {
            n: self.n,
            q: self.q.clone(),
            terms: out,
        }
    }

    /// `a T_i`.
    pub fn right_generator(&self, a: &HeckeElement<R::Elem>, i: usize) -> HeckeElement<R::Elem> {
        let r = &self.ring;
        let mut out = BTreeMap::new();
        for (w, c) in &a.terms {
            let ws = w.right_mul_simple(i);
            if w.has_right_descent(i) {
                self.accumulate(&mut out, ws, &r.mul(c, &self.q));
                self.accumulate(&mut out, w.clone(), &r.mul(c, &self.q_minus_1));
            } else {
                self.accumulate(&mut out, ws, c);
            }
        }
        HeckeElement {
            n: self.n,
            q: self.q.clone(),
            terms: out,
        }
    }

    /// `T_w a`, applying the generators of a reduced word of `w` right to left.
    pub fn left_basis_mul(&self, w: &Perm, a: &HeckeElement<R::Elem>) -> HeckeElement<R::Elem> {
        w.reduced_word()
            .iter()
            .rev()
            .fold(a.clone(), |acc, &i| self.left_generator(i, &acc))
    }

    pub fn multiply(
        &self,
        a: &HeckeElement<R::Elem>,
        b: &HeckeElement<R::Elem>,
    ) -> Result<HeckeElement<R::Elem>> {
        if a.n != b.n {
            return Err(Error::RankMismatch(a.n, b.n));
        }
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// Unchecked product.
    pub fn mul(
        &self,
        a: &HeckeElement<R::Elem>,
        b: &HeckeElement<R::Elem>,
    ) -> HeckeElement<R::Elem> {
        let mut out = BTreeMap::new();
        for (u, c) in &a.terms {
            let prod = self.left_basis_mul(u, b);
            for (w, x) in prod.terms {
                self.accumulate(&mut out, w, &self.ring.mul(c, &x));
            }
        }
        HeckeElement {
            n: self.n,
            q: self.q.clone(),
            terms: out,
        }
    }

    /// The anti-automorphism `T_w ↦ T_{w^-1}`.
    pub fn star(&self, a: &HeckeElement<R::Elem>) -> HeckeElement<R::Elem> {
        let terms = a
            .terms
            .iter()
            .map(|(w, c)| (w.inverse(), c.clone()))
            .collect();
        HeckeElement {
            n: a.n,
            q: a.q.clone(),
            terms,
        }
    }

    /// `-T_i + (q - 1)`.
    fn sharp_generator_times(&self, x: &HeckeElement<R::Elem>, i: usize) -> HeckeElement<R::Elem> {
        let t = self.right_generator(x, i);
        self.sub(&self.scale(x, &self.q_minus_1), &t)
    }

    /// The automorphism with `T_i ↦ -T_i + (q - 1)`, evaluated along reduced words.
    pub fn sharp(&self, a: &HeckeElement<R::Elem>) -> HeckeElement<R::Elem> {
        let mut out = self.zero();
        for (w, c) in &a.terms {
            let img = w
                .reduced_word()
                .iter()
                .fold(self.one(), |x, &i| self.sharp_generator_times(&x, i));
            out = self.add(&out, &self.scale(&img, c));
        }
        out
    }

    /// The anti-automorphism with `T_i ↦ -T_i + (q - 1)`: images of the
    /// generators multiplied in reversed order.
    pub fn dagger(&self, a: &HeckeElement<R::Elem>) -> HeckeElement<R::Elem> {
        let mut out = self.zero();
        for (w, c) in &a.terms {
            let img = w
                .reduced_word()
                .iter()
                .rev()
                .fold(self.one(), |x, &i| self.sharp_generator_times(&x, i));
            out = self.add(&out, &self.scale(&img, c));
        }
        out
    }

    pub fn young_subgroup(&self, alpha: &Composition) -> Result<YoungSubgroup> {
        if alpha.degree() != self.n {
            return Err(Error::DegreeMismatch(alpha.degree(), self.n));
        }
        Ok(YoungSubgroup::new(alpha))
    }

    /// `x(α) = Σ_{w ∈ Σ(α)} T_w`.
    pub fn x_element(&self, alpha: &Composition) -> Result<HeckeElement<R::Elem>> {
        let y = self.young_subgroup(alpha)?;
        Ok(self.from_terms(y.elements().iter().map(|w| (w.clone(), self.ring.one()))))
    }

    /// `y(α) = Σ_{w ∈ Σ(α)} (-q)^{N - l(w)} T_w` with `N = n(n-1)/2`.
    pub fn y_element(&self, alpha: &Composition) -> Result<HeckeElement<R::Elem>> {
        let y = self.young_subgroup(alpha)?;
        let big_n = self.n * self.n.saturating_sub(1) / 2;
        let minus_q = self.ring.neg(&self.q);
        Ok(self.from_terms(y.elements().iter().map(|w| {
            (
                w.clone(),
                self.ring.pow(&minus_q, (big_n - w.length()) as u64),
            )
        })))
    }

    /// `⟨a, b⟩`, the coefficient of `T_e` in `a b^*`. Uses
    /// `coeff_e(T_u T_{v^-1}) = δ_{uv} q^{l(u)}`.
    pub fn pairing(&self, a: &HeckeElement<R::Elem>, b: &HeckeElement<R::Elem>) -> Result<R::Elem> {
        if a.n != b.n {
            return Err(Error::RankMismatch(a.n, b.n));
        }
        let r = &self.ring;
        let mut acc = r.zero();
        let (small, large) = if a.terms.len() <= b.terms.len() {
            (a, b)
        } else {
            (b, a)
        };
        for (u, c) in &small.terms {
            if let Some(d) = large.terms.get(u) {
                let term = r.mul(&r.mul(c, d), &r.pow(&self.q, u.length() as u64));
                r.add_assign(&mut acc, &term);
            }
        }
        Ok(acc)
    }

    /// `⟨a, b⟩` by forming the product `a b^*` in full.
    pub fn pairing_by_product(
        &self,
        a: &HeckeElement<R::Elem>,
        b: &HeckeElement<R::Elem>,
    ) -> Result<R::Elem> {
        let prod = self.multiply(a, &self.star(b))?;
        Ok(self.coefficient(&prod, &Perm::identity(self.n)))
    }

    /// `{"[1,2,3]": "coefficient"}`.
    pub fn to_json(&self, a: &HeckeElement<R::Elem>) -> Value {
        let map: Map<String, Value> = a
            .terms
            .iter()
            .map(|(w, c)| (w.to_string(), Value::String(self.ring.format(c))))
            .collect();
        Value::Object(map)
    }

    pub fn format(&self, a: &HeckeElement<R::Elem>) -> String {
        if a.terms.is_empty() {
            return "0".to_string();
        }
        a.terms
            .iter()
            .map(|(w, c)| format!("({})T{}", self.ring.format(c), w))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
