//! Smith normal form over the integers and saturated integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;

/// A sublattice of `Z^n` given by generators in row Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    ambient: usize,
    generators: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    divisors: Vec<BigInt>,
    saturated: bool,
}

impl IntegerLattice {
    pub fn from_generators(ambient: usize, vectors: Vec<Vec<BigInt>>) -> Self {
        let (generators, pivots) = hermite_rows(ambient, vectors);
        IntegerLattice {
            ambient,
            generators,
            pivots,
            divisors: Vec::new(),
            saturated: false,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Generators in Hermite form: positive pivots, entries above each pivot
    /// reduced into `[0, pivot)`.
    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    /// Elementary divisors of the system this lattice is the kernel of (empty
    /// for lattices not built as kernels).
    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    /// True for kernel lattices, which are pure: `Z^n / L` is torsion free.
    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for (row, &p) in self.generators.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let (q, r) = v[p].div_rem(&row[p]);
            if !r.is_zero() {
                return false;
            }
            for j in p..self.ambient {
                v[j] -= &q * &row[j];
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Nonzero invariant factors, each dividing the next.
    pub divisors: Vec<BigInt>,
    /// The saturated right kernel `{ v in Z^n : m v = 0 }`.
    pub kernel: IntegerLattice,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    /// Rank of the matrix reduced modulo `p`.
    pub fn rank_mod(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.divisors
            .iter()
            .filter(|d| !d.is_multiple_of(&p))
            .count()
    }

    /// Primes dividing some invariant factor, i.e. where the rank drops.
    pub fn failing_primes(&self) -> Vec<u64> {
        let mut primes = Vec::new();
        for d in &self.divisors {
            for p in prime_factors(d) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
        primes.sort_unstable();
        primes
    }
}

fn prime_factors(d: &BigInt) -> Vec<u64> {
    let mut n = d.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= n {
        let bp = BigInt::from(p);
        if n.is_multiple_of(&bp) {
            out.push(p);
            while n.is_multiple_of(&bp) {
                n /= &bp;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(u64::try_from(n).expect("prime factor fits in u64"));
    }
    out
}

/// Smith normal form by repeated pivoting on the entry of least absolute
/// value. Column operations are tracked so the kernel comes out saturated.
pub fn smith_normal_form(m: &Matrix<BigInt>) -> SmithForm {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut a: Vec<Vec<BigInt>> = m.rows_iter().map(<[_]>::to_vec).collect();
    // columns of `v` track the column operations applied to `a`
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap(t, pi);
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
        }
        let pivot = a[t][t].clone();
        let mut clean = true;
        for i in t + 1..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&pivot);
            let (top, rest) = a.split_at_mut(i);
            for (x, y) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
                *x -= &q * y;
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&pivot);
            for row in a.iter_mut().skip(t) {
                let y = row[t].clone();
                row[j] -= &q * y;
            }
            for row in v.iter_mut() {
                let y = row[t].clone();
                row[j] -= &q * y;
            }
            clean &= a[t][j].is_zero();
        }
        if clean {
            t += 1;
        }
    }
    let rank = t;
    let divisors = invariant_factors((0..rank).map(|i| a[i][i].abs()).collect());
    let kernel_vectors = (rank..cols)
        .map(|j| v.iter().map(|row| row[j].clone()).collect())
        .collect();
    let mut kernel = IntegerLattice::from_generators(cols, kernel_vectors);
    kernel.divisors = divisors.clone();
    kernel.saturated = true;
    SmithForm { divisors, kernel }
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|b| ax < b.2) {
                let one = ax.is_one();
                best = Some((i, j, ax));
                if one {
                    return best.map(|b| (b.0, b.1));
                }
            }
        }
    }
    best.map(|b| (b.0, b.1))
}

/// Turns a diagonal into its divisor chain via gcd/lcm exchanges.
fn invariant_factors(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Row Hermite normal form of the given vectors, zero rows dropped.
fn hermite_rows(ambient: usize, vectors: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut rows: Vec<Vec<BigInt>> = vectors
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ambient {
        if r == rows.len() {
            break;
        }
        // Euclid down the column until a single nonzero entry remains
        loop {
            let nz: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz.iter().min_by_key(|&&i| rows[i][c].abs()).unwrap();
            rows.swap(r, best);
            if nz.len() == 1 {
                break;
            }
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (top, rest) = rows.split_at_mut(i);
                for (x, y) in rest[0].iter_mut().zip(&top[r]) {
                    *x -= &q * y;
                }
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            if q.is_zero() {
                continue;
            }
            let (top, rest) = rows.split_at_mut(r);
            for (x, y) in top[i].iter_mut().zip(&rest[0]) {
                *x -= &q * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zm(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn diagonal_case() {
        let s = smith_normal_form(&zm(&[&[2, 0], &[0, 6]]));
        assert_eq!(s.divisors, ints(&[2, 6]));
        assert_eq!(s.kernel.rank(), 0);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let s = smith_normal_form(&zm(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]));
        assert!(s.divisors.is_empty());
        assert_eq!(s.kernel.rank(), 3);
        assert!(s.kernel.contains(&ints(&[5, -7, 1])));
    }

    #[test]
    fn single_row_two_four() {
        let s = smith_normal_form(&zm(&[&[2, 4]]));
        assert_eq!(s.divisors, ints(&[2]));
        assert_eq!(s.kernel.generators(), &[ints(&[2, -1])]);
        assert!(!s.kernel.contains(&ints(&[1, 0])));
    }

    #[test]
    fn divisor_chain_is_normalised() {
        let s = smith_normal_form(&zm(&[&[6, 0], &[0, 4]]));
        assert_eq!(s.divisors, ints(&[2, 12]));
        assert_eq!(s.failing_primes(), vec![2, 3]);
        assert_eq!(s.rank_mod(2), 0);
        assert_eq!(s.rank_mod(3), 1);
        assert_eq!(s.rank_mod(5), 2);
    }
}
