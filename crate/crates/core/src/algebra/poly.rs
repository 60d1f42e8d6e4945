//! Dense univariate polynomials in `t`, coefficients low degree first.
//!
//! These are free functions over a coefficient field rather than a ring type of
//! their own; they back [`RationalFunctions`](super::RationalFunctions) and
//! [`LaurentPolys`](super::LaurentPolys).

use super::ring::{Field, Ring};

pub fn trim<R: Ring>(ring: &R, p: &mut Vec<R::Elem>) {
    while p.last().is_some_and(|c| ring.is_zero(c)) {
        p.pop();
    }
}

pub fn degree<E>(p: &[E]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn add<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        ring.add_assign(o, s);
    }
    trim(ring, &mut out);
    out
}

pub fn neg<R: Ring>(ring: &R, a: &[R::Elem]) -> Vec<R::Elem> {
    a.iter().map(|c| ring.neg(c)).collect()
}

pub fn sub<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    add(ring, a, &neg(ring, b))
}

pub fn mul<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if ring.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            ring.mul_add_assign(&mut out[i + j], x, y);
        }
    }
    trim(ring, &mut out);
    out
}

pub fn scale<R: Ring>(ring: &R, a: &[R::Elem], c: &R::Elem) -> Vec<R::Elem> {
    let mut out: Vec<_> = a.iter().map(|x| ring.mul(x, c)).collect();
    trim(ring, &mut out);
    out
}

pub fn is_one<R: Ring>(ring: &R, a: &[R::Elem]) -> bool {
    a.len() == 1 && ring.is_one(&a[0])
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = field
        .inv(&b[db])
        .expect("trimmed polynomial has nonzero lead");
    let mut rem = a.to_vec();
    trim(field, &mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![field.zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = field.mul(rem.last().unwrap(), &lead_inv);
        for (i, bc) in b.iter().enumerate() {
            let prod = field.mul(&c, bc);
            rem[shift + i] = field.sub(&rem[shift + i], &prod);
        }
        quot[shift] = c;
        rem.pop();
        trim(field, &mut rem);
    }
    trim(field, &mut quot);
    (quot, rem)
}

/// Monic greatest common divisor (zero if both inputs vanish).
pub fn gcd<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(field, &mut x);
    trim(field, &mut y);
    while !y.is_empty() {
        let (_, r) = divrem(field, &x, &y);
        x = std::mem::replace(&mut y, r);
    }
    make_monic(field, &x).1
}

/// Splits `p` as `lead * monic`; the zero polynomial maps to `(0, [])`.
pub fn make_monic<F: Field>(field: &F, p: &[F::Elem]) -> (F::Elem, Vec<F::Elem>) {
    match p.last() {
        None => (field.zero(), Vec::new()),
        Some(lead) => {
            let inv = field.inv(lead).expect("nonzero lead");
            (lead.clone(), p.iter().map(|c| field.mul(c, &inv)).collect())
        }
    }
}

pub fn eval<R: Ring>(ring: &R, p: &[R::Elem], x: &R::Elem) -> R::Elem {
    p.iter()
        .rev()
        .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
}

pub fn format<R: Ring>(ring: &R, p: &[R::Elem], var: &str, low: i64) -> String {
    if p.is_empty() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (i, c) in p.iter().enumerate().rev() {
        if ring.is_zero(c) {
            continue;
        }
        let e = low + i as i64;
        let cs = ring.format(c);
        let term = match (e, cs.as_str()) {
            (0, _) => cs.clone(),
            (_, "1") => power(var, e),
            (_, "-1") => format!("-{}", power(var, e)),
            _ => format!("{}*{}", wrap(&cs), power(var, e)),
        };
        terms.push(term);
    }
    terms.join(" + ").replace("+ -", "- ")
}

fn power(var: &str, e: i64) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

fn wrap(c: &str) -> String {
    if c.contains('/') || c[1..].contains(['+', '-']) {
        format!("({c})")
    } else {
        c.to_string()
    }
}
