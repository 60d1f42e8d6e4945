//! Permutations of `{1..n}` in one-line notation.
//!
//! Composition is `(u * w)(i) = u(w(i))`. Internally points are 0-based;
//! everything user-facing (JSON, parsing, display) is 1-based.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "degree too large");
        Perm((0..n as u8).collect())
    }

    /// The adjacent transposition `s_i` swapping `i` and `i + 1` (1-based `i`).
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} not in Sym({n})");
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::Parse(format!("permutation degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        Ok(Perm(images.iter().map(|&x| (x - 1) as u8).collect()))
    }

    /// From 0-based images; the caller guarantees a bijection.
    pub(crate) fn from_images0(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x as usize)
        });
        Perm(images)
    }

    /// From disjoint cycles given 1-based, e.g. `[[1,3],[2,4]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut img: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n + 1];
        for c in cycles {
            for &x in c {
                if x == 0 || x > n || used[x] {
                    return Err(Error::Parse(format!("bad cycle {c:?} in Sym({n})")));
                }
                used[x] = true;
            }
            for k in 0..c.len() {
                img[c[k] - 1] = c[(k + 1) % c.len()];
            }
        }
        Self::from_one_line(&img)
    }

    /// Parses cycle notation like `(13)(24)` or `(1,3)(2,4)`, or a one-line
    /// list like `[3,4,1,2]`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(s.to_string()))?;
            let images = body
                .split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(s.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            if images.len() != n {
                return Err(Error::DegreeMismatch(images.len(), n));
            }
            return Self::from_one_line(&images);
        }
        let mut cycles = Vec::new();
        for chunk in s.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let body = chunk
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(s.to_string()))?;
            let points: Vec<usize> = if body.contains(',') {
                body.split(',')
                    .map(|x| x.trim().parse().map_err(|_| Error::Parse(s.to_string())))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(s.to_string()))
                    })
                    .collect::<Result<_>>()?
            };
            cycles.push(points);
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// 0-based image of a 0-based point.
    #[inline]
    pub fn apply0(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images0(&self) -> &[u8] {
        &self.0
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut l = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// `w(i) > w(i+1)`, i.e. `l(w s_i) < l(w)` (1-based `i`).
    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// `w^-1(i) > w^-1(i+1)`, i.e. `l(s_i w) < l(w)` (1-based `i`).
    pub fn has_left_descent(&self, i: usize) -> bool {
        let a = self.0.iter().position(|&x| x as usize == i - 1).unwrap();
        let b = self.0.iter().position(|&x| x as usize == i).unwrap();
        a > b
    }

    /// `s_i * w`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Perm {
        let (a, b) = ((i - 1) as u8, i as u8);
        Perm(
            self.0
                .iter()
                .map(|&x| {
                    if x == a {
                        b
                    } else if x == b {
                        a
                    } else {
                        x
                    }
                })
                .collect(),
        )
    }

    /// `w * s_i`: swaps the positions `i` and `i + 1`.
    pub fn right_mul_simple(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.0.swap(i - 1, i);
        p
    }

    /// A reduced word `[i_1, .., i_k]` with `w = s_{i_1} ... s_{i_k}`, found by
    /// bubble sorting the one-line notation.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = self.0.clone();
        let mut peeled = Vec::new();
        while let Some(i) = (1..cur.len()).find(|&i| cur[i - 1] > cur[i]) {
            cur.swap(i - 1, i);
            peeled.push(i);
        }
        peeled.reverse();
        peeled
    }

    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter()
            .fold(Perm::identity(n), |w, &i| w.right_mul_simple(i))
    }

    /// The order of the permutation.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Disjoint cycles of length at least two, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply0(start) == start {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x + 1);
                x = self.apply0(x);
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

/// `Sym(n)` listed by length, then lexicographically by one-line notation.
#[derive(Clone, Debug)]
pub struct SymGroup {
    n: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl SymGroup {
    pub fn new(n: usize) -> Self {
        let mut elements = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            elements.push(Perm(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        elements.sort_by_cached_key(|w| (w.length(), w.0.clone()));
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        SymGroup { n, elements, index }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &Perm) -> usize {
        self.index[w]
    }

    /// The longest element `w_0`.
    pub fn longest(&self) -> &Perm {
        self.elements.last().unwrap()
    }
}

/// Lexicographic successor in place; false once the last permutation is reached.
pub(crate) fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_convention() {
        let s1 = Perm::simple(3, 1);
        let s2 = Perm::simple(3, 2);
        // s1 * s2 applies s2 first: 3 -> 2 -> 1
        let w = s1.compose(&s2);
        assert_eq!(w.one_line(), vec![2, 3, 1]);
        assert_eq!(s1.left_mul_simple(2), s2.compose(&s1));
        assert_eq!(s1.right_mul_simple(2), s1.compose(&s2));
    }

    #[test]
    fn reduced_words_recover_the_element() {
        let g = SymGroup::new(4);
        for w in g.elements() {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(&Perm::from_word(4, &word), w);
        }
        assert_eq!(g.order(), 24);
        assert_eq!(g.longest().length(), 6);
    }

    #[test]
    fn descents_match_lengths() {
        for w in SymGroup::new(4).elements() {
            for i in 1..4 {
                assert_eq!(
                    w.has_left_descent(i),
                    w.left_mul_simple(i).length() < w.length()
                );
                assert_eq!(
                    w.has_right_descent(i),
                    w.right_mul_simple(i).length() < w.length()
                );
            }
        }
    }

    #[test]
    fn parse_forms() {
        let t = Perm::parse(4, "(13)(24)").unwrap();
        assert_eq!(t.one_line(), vec![3, 4, 1, 2]);
        assert_eq!(Perm::parse(4, "(1,3)(2,4)").unwrap(), t);
        assert_eq!(Perm::parse(4, "[3,4,1,2]").unwrap(), t);
        assert_eq!(t.order(), 2);
        assert_eq!(t.cycles(), vec![vec![1, 3], vec![2, 4]]);
        assert!(Perm::from_one_line(&[1, 1]).is_err());
    }

    #[test]
    fn json_is_one_based() {
        let t = Perm::simple(3, 2);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[1,3,2]");
        let back: Perm = serde_json::from_str("[1,3,2]").unwrap();
        assert_eq!(back, t);
    }
}
