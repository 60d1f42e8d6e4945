use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts.
///
/// `Ord` is the canonical reverse-lexicographic order, so `(4)` sorts before
/// `(3,1)` and sorted collections list the largest partition first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(a, 1^b)`; `(0, 1^b)` is read as `(1^b)`.
    pub fn hook(a: usize, b: usize) -> Self {
        let mut parts = Vec::with_capacity(b + 1);
        if a > 0 {
            parts.push(a);
        }
        parts.extend(std::iter::repeat_n(1, b));
        Self::from_unsorted(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// First part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// For a hook `(a, 1^b)` returns `(a, b)`.
    pub fn hook_shape(&self) -> Option<(usize, usize)> {
        self.is_hook()
            .then(|| (self.first(), self.len().saturating_sub(1)))
    }

    pub fn transpose(&self) -> Self {
        let cols = self.first();
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    fn prefix_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.parts.get(i).copied().unwrap_or(0);
                acc
            })
            .collect()
    }

    /// `self ⊴ other` in the dominance order.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let len = self.len().max(other.len());
        let a = self.prefix_sums(len);
        let b = other.prefix_sums(len);
        Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
    }

    /// `|Σ(λ)| = Π λ_i!`.
    pub fn young_order(&self) -> usize {
        self.parts
            .iter()
            .map(|&p| crate::perm::factorial(p))
            .product()
    }

    /// Hook lengths row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let t = self.transpose();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (t.parts[j] - i - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// Removable corners as row indices.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| i + 1 == self.len() || self.parts[i] > self.parts[i + 1])
            .collect()
    }

    /// The partition with one box removed from row `i` (which must be a corner).
    pub fn remove_box(&self, i: usize) -> Self {
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        if parts[i] == 0 {
            parts.pop();
        }
        Partition { parts }
    }
}

pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    lambda.dominated_by(mu)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1`, `(3,1)` or `[3,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'));
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::<usize>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// A composition of `n`; zero entries are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    entries: Vec<usize>,
}

impl Composition {
    pub fn new(entries: Vec<usize>) -> Self {
        Composition { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().sum()
    }

    /// 0-based position blocks, one per nonzero entry.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        let mut out = Vec::new();
        for &a in &self.entries {
            if a > 0 {
                out.push(start..start + a);
            }
            start += a;
        }
        out
    }

    /// `J(α)`: the 1-based `i` with `i` and `i + 1` in the same block.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.blocks()
            .into_iter()
            .flat_map(|b| b.start + 1..b.end)
            .collect()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.entries.clone())
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            entries: p.parts.clone(),
        }
    }
}

/// A set of partitions of a fixed `n`, iterated in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartitionSet {
    n: usize,
    members: BTreeSet<Partition>,
}

impl PartitionSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = Partition>) -> Result<Self> {
        let members: BTreeSet<Partition> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|p| p.degree() != n) {
            return Err(Error::DegreeMismatch(bad.degree(), n));
        }
        Ok(PartitionSet { n, members })
    }

    pub fn empty(n: usize) -> Self {
        PartitionSet {
            n,
            members: BTreeSet::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.members.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Partition> {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<Partition> {
        self.members.iter().cloned().collect()
    }

    pub fn insert(&mut self, p: Partition) -> Result<bool> {
        if p.degree() != self.n {
            return Err(Error::DegreeMismatch(p.degree(), self.n));
        }
        Ok(self.members.insert(p))
    }

    pub fn is_subset(&self, other: &PartitionSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &PartitionSet) -> Result<PartitionSet> {
        self.check_degree(other)?;
        Ok(PartitionSet {
            n: self.n,
            members: self.members.union(&other.members).cloned().collect(),
        })
    }

    /// `Par(n)` minus this set.
    pub fn complement(&self) -> PartitionSet {
        let all = partitions_of(self.n);
        PartitionSet {
            n: self.n,
            members: all.members.difference(&self.members).cloned().collect(),
        }
    }

    /// Closure under merging two parts, iterated.
    pub fn coarsening_closure(&self) -> PartitionSet {
        let mut seen = self.members.clone();
        let mut queue: VecDeque<Partition> = self.members.iter().cloned().collect();
        while let Some(p) = queue.pop_front() {
            let parts = p.parts();
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    let mut merged: Vec<usize> = parts.to_vec();
                    merged[i] += merged[j];
                    merged.remove(j);
                    let m = Partition::from_unsorted(merged);
                    if seen.insert(m.clone()) {
                        queue.push_back(m);
                    }
                }
            }
        }
        PartitionSet {
            n: self.n,
            members: seen,
        }
    }

    /// All partitions dominating some member.
    pub fn dominance_upward_closure(&self) -> PartitionSet {
        let members = partitions_of(self.n)
            .members
            .into_iter()
            .filter(|mu| self.members.iter().any(|l| l.dominated_by(mu).unwrap()))
            .collect();
        PartitionSet { n: self.n, members }
    }

    pub fn is_cosaturated(&self) -> bool {
        self.dominance_upward_closure() == *self
    }

    /// Closed downward under dominance.
    pub fn is_saturated(&self) -> bool {
        self.iter().all(|l| {
            partitions_of(self.n)
                .iter()
                .filter(|mu| mu.dominated_by(l).unwrap())
                .all(|mu| self.contains(mu))
        })
    }

    pub fn transpose(&self) -> PartitionSet {
        PartitionSet {
            n: self.n,
            members: self.members.iter().map(Partition::transpose).collect(),
        }
    }

    fn check_degree(&self, other: &PartitionSet) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        Ok(())
    }
}

impl fmt::Display for PartitionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for PartitionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for PartitionSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.members.iter())
    }
}

pub fn coarsening_closure(sigma: &PartitionSet) -> PartitionSet {
    sigma.coarsening_closure()
}

pub fn dominance_upward_closure(sigma: &PartitionSet) -> PartitionSet {
    sigma.dominance_upward_closure()
}

pub fn is_cosaturated(sigma: &PartitionSet) -> bool {
    sigma.is_cosaturated()
}

/// All partitions of `n` in canonical order.
pub fn partitions_of(n: usize) -> PartitionSet {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut BTreeSet<Partition>) {
        if rest == 0 {
            out.insert(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut members = BTreeSet::new();
    rec(n, n, &mut Vec::new(), &mut members);
    PartitionSet { n, members }
}
