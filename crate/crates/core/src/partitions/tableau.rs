use std::fmt;

use serde::{Serialize, Serializer};

use super::partition::{partitions_of, Partition};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// A standard tableau with entries `1..n`, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.degree();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Parse(format!(
                    "tableau {rows:?} does not hold 1..{n} once each"
                )));
            }
            seen[x] = true;
        }
        let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(lo, hi)| hi < lo));
        if !rows_ok || !cols_ok {
            return Err(Error::Parse(format!("tableau {rows:?} is not standard")));
        }
        Ok(StandardTableau { shape, rows })
    }

    /// The superstandard tableau `t^λ`, filled along rows.
    pub fn superstandard(shape: &Partition) -> Self {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let r: Vec<usize> = (next..next + len).collect();
                next += len;
                r
            })
            .collect();
        StandardTableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn degree(&self) -> usize {
        self.shape.degree()
    }

    /// Entries read along rows.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Row index of each entry, indexed by entry - 1.
    pub fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.degree()];
        for (i, r) in self.rows.iter().enumerate() {
            for &x in r {
                out[x - 1] = i;
            }
        }
        out
    }

    /// Shape of the subtableau holding the entries `1..=m`.
    pub fn restricted_shape(&self, m: usize) -> Partition {
        Partition::from_unsorted(
            self.rows
                .iter()
                .map(|r| r.iter().filter(|&&x| x <= m).count())
                .collect(),
        )
    }

    pub fn transpose(&self) -> Self {
        let shape = self.shape.transpose();
        let rows = (0..shape.len())
            .map(|j| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > j)
                    .map(|r| r[j])
                    .collect()
            })
            .collect();
        StandardTableau { shape, rows }
    }

    /// `d(s)`: sends each entry of `t^λ` to the entry of `s` in the same box,
    /// so `s = d(s) ∘ t^λ`. In one-line notation this is the reading word.
    pub fn d_permutation(&self) -> Perm {
        Perm::from_one_line(&self.reading_word()).expect("tableau entries form a permutation")
    }

    /// Applies `w` to every entry.
    pub fn act(&self, w: &Perm) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| w.apply0(x - 1) + 1).collect())
            .collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                format!(
                    "({})",
                    r.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "[{}]", rows.join(""))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// All standard tableaux of shape `λ`, starting with `t^λ`.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(
        k: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k > n {
            out.push(rows.clone());
            return;
        }
        for i in 0..shape.len() {
            let len = rows[i].len();
            if len < shape[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(k);
                rec(k + 1, n, shape, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    rec(1, shape.degree(), shape.parts(), &mut rows, &mut out);
    out.into_iter()
        .map(|rows| StandardTableau {
            shape: shape.clone(),
            rows,
        })
        .collect()
}

/// `s ⊴ t`: every restriction shape of `s` is dominated by that of `t`.
pub fn tableau_dominance(s: &StandardTableau, t: &StandardTableau) -> Result<bool> {
    if s.shape != t.shape {
        return Err(Error::ShapeMismatch(
            s.shape.to_string(),
            t.shape.to_string(),
        ));
    }
    Ok((1..=s.degree()).all(|m| {
        s.restricted_shape(m)
            .dominated_by(&t.restricted_shape(m))
            .unwrap()
    }))
}

pub fn d_permutation(s: &StandardTableau) -> Perm {
    s.d_permutation()
}

/// `dim(λ)`, the number of standard `λ`-tableaux. Counted by corner removal
/// and checked against the hook length formula.
pub fn spec_dimension(shape: &Partition) -> usize {
    let by_count = count_tableaux(shape);
    let by_hooks = hook_formula(shape);
    assert_eq!(
        by_count, by_hooks,
        "tableau count and hook formula disagree for {shape}"
    );
    by_count
}

fn count_tableaux(shape: &Partition) -> usize {
    if shape.is_empty() {
        return 1;
    }
    shape
        .corners()
        .into_iter()
        .map(|i| count_tableaux(&shape.remove_box(i)))
        .sum()
}

fn hook_formula(shape: &Partition) -> usize {
    let n = shape.degree();
    let hooks: u128 = shape
        .hook_lengths()
        .iter()
        .flatten()
        .map(|&h| h as u128)
        .product();
    let fact: u128 = (1..=n as u128).product();
    (fact / hooks) as usize
}

/// `N_{n,m} = Σ dim(λ)²` over `λ ⊢ n` with `λ_1 ≥ m`.
pub fn capital_n(n: usize, m: usize) -> Result<usize> {
    if m < 1 || m > n {
        return Err(Error::RangeError(format!(
            "N_{{n,m}} needs 1 <= m <= n, got n = {n}, m = {m}"
        )));
    }
    Ok(partitions_of(n)
        .iter()
        .filter(|l| l.first() >= m)
        .map(|l| spec_dimension(l).pow(2))
        .sum())
}
