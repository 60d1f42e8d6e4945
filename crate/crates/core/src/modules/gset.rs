use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::algebra::{Matrix, Ring};
use crate::error::{Error, Result};
use crate::modules::rep::{index_of_hook_set, BlockKind, ModuleRep};
use crate::partitions::{Partition, PartitionSet};
use crate::perm::{Perm, SymGroup};

/// A finite `Sym(m)`-set, given by the permutation each `s_i` induces on the points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSetModule {
    m: usize,
    labels: Vec<String>,
    // gens[i - 1][x] = s_i . x
    gens: Vec<Vec<usize>>,
    description: String,
}

impl GSetModule {
    pub fn new(
        m: usize,
        labels: Vec<String>,
        gens: Vec<Vec<usize>>,
        description: String,
    ) -> Result<Self> {
        if gens.len() != m.saturating_sub(1) {
            return Err(Error::DegreeMismatch(gens.len() + 1, m));
        }
        let size = labels.len();
        for g in &gens {
            let mut seen = vec![false; size];
            if g.len() != size
                || g.iter()
                    .any(|&y| y >= size || std::mem::replace(&mut seen[y], true))
            {
                return Err(Error::RangeError(
                    "generator does not act by a bijection".into(),
                ));
            }
        }
        Ok(GSetModule {
            m,
            labels,
            gens,
            description,
        })
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// Image of point `x` under `s_i`.
    pub fn simple_image(&self, i: usize, x: usize) -> usize {
        self.gens[i - 1][x]
    }

    /// Image of point `x` under `w`.
    pub fn act(&self, w: &Perm, x: usize) -> usize {
        w.reduced_word()
            .iter()
            .rev()
            .fold(x, |y, &i| self.gens[i - 1][y])
    }

    /// Orbits as sorted point lists, ordered by their least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                for g in &self.gens {
                    if !seen[g[x]] {
                        seen[g[x]] = true;
                        orbit.push(g[x]);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Point stabiliser by exhaustive search over `Sym(m)`.
    pub fn stabiliser(&self, x: usize) -> Vec<Perm> {
        SymGroup::new(self.m)
            .elements()
            .iter()
            .filter(|w| self.act(w, x) == x)
            .cloned()
            .collect()
    }

    /// `ζ(X)` and the index. Each stabiliser must be the full symmetric group
    /// on its own orbits in `{1..m}` (a conjugate of a Young subgroup), else
    /// the set is not a Young set.
    pub fn young_profile(&self) -> Result<(PartitionSet, Option<usize>)> {
        let mut zeta = PartitionSet::empty(self.m);
        for orbit in self.orbits() {
            let stab = self.stabiliser(orbit[0]);
            let shape = orbit_shape(self.m, &stab);
            if stab.len() != shape.young_order() {
                return Err(Error::NotAYoungSum);
            }
            zeta.insert(shape)?;
        }
        let idx = index_of_hook_set(&zeta);
        Ok((zeta, idx))
    }

    /// The permutation module at `q = 1`: `s_i` sends basis vector `x` to `s_i x`.
    pub fn to_module<R: Ring>(&self, ring: R) -> Result<ModuleRep<R>> {
        let d = self.size();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut mat = Matrix::zeros(&ring, d, d);
                for (x, &y) in g.iter().enumerate() {
                    mat[(y, x)] = ring.one();
                }
                mat
            })
            .collect();
        let q = ring.one();
        ModuleRep::from_generators(
            ring,
            self.m,
            q,
            BlockKind::Other(self.description.clone()),
            self.labels.clone(),
            gens,
        )
    }
}

/// Orbit partition of `{1..m}` under a group of permutations, as a partition.
fn orbit_shape(m: usize, group: &[Perm]) -> Partition {
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for w in group {
        for i in 0..m {
            let (a, b) = (find(&mut parent, i), find(&mut parent, w.apply0(i)));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..m {
        *sizes.entry(find(&mut parent, i)).or_default() += 1;
    }
    Partition::from_unsorted(sizes.into_values().collect())
}

/// Left cosets `Sym(m)/T` for `T` generated by the given permutations.
/// Each coset is labelled by its lexicographically least element; the points
/// are found by breadth-first closure from the identity coset and then sorted.
pub fn coset_space_module(m: usize, subgroup_gens: &[Perm]) -> Result<GSetModule> {
    if let Some(g) = subgroup_gens.iter().find(|g| g.degree() != m) {
        return Err(Error::DegreeMismatch(g.degree(), m));
    }
    let subgroup = closure(m, subgroup_gens);
    let canon = |g: &Perm| subgroup.iter().map(|t| g.compose(t)).min().unwrap();
    let start = canon(&Perm::identity(m));
    let mut seen: BTreeSet<Perm> = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(g) = queue.pop_front() {
        for i in 1..m {
            let h = canon(&g.left_mul_simple(i));
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    let points: Vec<Perm> = seen.into_iter().collect();
    let index: HashMap<&Perm, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let gens = (1..m)
        .map(|i| {
            points
                .iter()
                .map(|g| index[&canon(&g.left_mul_simple(i))])
                .collect()
        })
        .collect();
    let labels = points.iter().map(|p| format!("{p}T")).collect();
    let desc = format!(
        "Sym({m})/<{}>",
        subgroup_gens
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    GSetModule::new(m, labels, gens, desc)
}

/// The subgroup generated by `gens`.
pub fn closure(m: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut seen: BTreeSet<Perm> = BTreeSet::from([Perm::identity(m)]);
    let mut queue = VecDeque::from([Perm::identity(m)]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn check_tensor_range(n: usize, r: usize, m: usize) -> Result<()> {
    if n < 1 || r < 1 || m < 1 || m > n {
        return Err(Error::RangeError(format!(
            "need n, r >= 1 and 1 <= m <= n, got n={n}, r={r}, m={m}"
        )));
    }
    Ok(())
}

/// `I(n,r)`, all `r`-tuples over `{1..n}` in lexicographic order, with
/// `Sym(m) ⊆ Sym(n)` acting entrywise.
pub fn tensor_space_module(n: usize, r: usize, m: usize) -> Result<GSetModule> {
    check_tensor_range(n, r, m)?;
    let size = n
        .checked_pow(r as u32)
        .ok_or_else(|| Error::RangeError("n^r overflows".into()))?;
    let tuple = |mut x: usize| {
        let mut t = vec![0; r];
        for k in (0..r).rev() {
            t[k] = x % n;
            x /= n;
        }
        t
    };
    let encode = |t: &[usize]| t.iter().fold(0, |acc, &v| acc * n + v);
    let gens = (1..m)
        .map(|i| {
            (0..size)
                .map(|x| {
                    let t: Vec<usize> = tuple(x)
                        .into_iter()
                        .map(|v| {
                            if v == i - 1 {
                                i
                            } else if v == i {
                                i - 1
                            } else {
                                v
                            }
                        })
                        .collect();
                    encode(&t)
                })
                .collect()
        })
        .collect();
    let labels = (0..size)
        .map(|x| {
            format!(
                "({})",
                tuple(x)
                    .iter()
                    .map(|v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    GSetModule::new(m, labels, gens, format!("I({n},{r})|Sym({m})"))
}

/// `ζ` and the index of `I(n,r)` restricted to `Sym(m)`, by orbit and
/// stabiliser analysis.
pub fn tensor_orbit_profile(n: usize, r: usize, m: usize) -> Result<(PartitionSet, usize)> {
    let x = tensor_space_module(n, r, m)?;
    let (zeta, idx) = x.young_profile()?;
    Ok((zeta, idx.expect("tensor space is a hook set")))
}

/// Closed form for `ζ(I(n,r)|Sym(m))`: the hooks `(m-b, 1^b)` with
/// `1 <= b <= r` if `m = n` and `0 <= b <= r` if `m < n`.
pub fn tensor_zeta_closed_form(n: usize, r: usize, m: usize) -> Result<PartitionSet> {
    check_tensor_range(n, r, m)?;
    let low = if m == n { 1 } else { 0 };
    PartitionSet::new(m, (low..=r.min(m)).map(|b| Partition::hook(m - b, b)))
}

/// Closed form for the index, `m - min(r, m)`, clamped below by 1 since the
/// index is the least `a >= 1` (the hook `(0, 1^m)` is `(1, 1^{m-1})`).
pub fn tensor_index_closed_form(n: usize, r: usize, m: usize) -> Result<usize> {
    check_tensor_range(n, r, m)?;
    Ok((m - r.min(m)).max(1))
}
