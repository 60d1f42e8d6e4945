use crate::partitions::Composition;
use crate::perm::{next_permutation, Perm};

/// `Σ(α)` with its generator set `J(α)` and element list.
#[derive(Clone, Debug)]
pub struct YoungSubgroup {
    composition: Composition,
    generators: Vec<usize>,
    elements: Vec<Perm>,
}

impl YoungSubgroup {
    pub fn new(alpha: &Composition) -> Self {
        let n = alpha.degree();
        let blocks = alpha.blocks();
        let mut elements = vec![Perm::identity(n)];
        for b in &blocks {
            let mut local: Vec<u8> = (b.start as u8..b.end as u8).collect();
            let mut perms = Vec::new();
            loop {
                perms.push(local.clone());
                if !next_permutation(&mut local) {
                    break;
                }
            }
            elements = elements
                .iter()
                .flat_map(|w| {
                    perms.iter().map(move |p| {
                        let mut img = w.images0().to_vec();
                        img[b.clone()].copy_from_slice(p);
                        Perm::from_images0(img)
                    })
                })
                .collect();
        }
        elements.sort_by_cached_key(|w| (w.length(), w.images0().to_vec()));
        YoungSubgroup {
            composition: alpha.clone(),
            generators: alpha.generator_indices(),
            elements,
        }
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    /// `J(α)`, 1-based.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, w: &Perm) -> bool {
        self.composition
            .blocks()
            .iter()
            .all(|b| b.clone().all(|i| b.contains(&w.apply0(i))))
    }
}

/// Whether `w` is the minimal length element of `w Σ(α)`, i.e. its one-line
/// notation increases along each block.
pub fn is_min_coset_rep(w: &Perm, alpha: &Composition) -> bool {
    alpha
        .generator_indices()
        .iter()
        .all(|&i| !w.has_right_descent(i))
}

/// `D_α`, sorted by length then one-line notation.
pub fn min_coset_reps(alpha: &Composition) -> Vec<Perm> {
    let n = alpha.degree();
    let blocks = alpha.blocks();
    // choose which values go to each block, increasing within blocks
    fn rec(
        blocks: &[std::ops::Range<usize>],
        k: usize,
        free: &mut Vec<u8>,
        img: &mut Vec<u8>,
        out: &mut Vec<Perm>,
    ) {
        if k == blocks.len() {
            out.push(Perm::from_images0(img.clone()));
            return;
        }
        let size = blocks[k].len();
        let choices = subsets(free.len(), size);
        for choice in choices {
            let chosen: Vec<u8> = choice.iter().map(|&c| free[c]).collect();
            let rest: Vec<u8> = (0..free.len())
                .filter(|c| !choice.contains(c))
                .map(|c| free[c])
                .collect();
            img[blocks[k].clone()].copy_from_slice(&chosen);
            let saved = std::mem::replace(free, rest);
            rec(blocks, k + 1, free, img, out);
            *free = saved;
        }
    }
    let mut out = Vec::new();
    let mut free: Vec<u8> = (0..n as u8).collect();
    let mut img = vec![0u8; n];
    rec(&blocks, 0, &mut free, &mut img, &mut out);
    out.sort_by_cached_key(|w| (w.length(), w.images0().to_vec()));
    out
}

/// Increasing index subsets of `0..n` of the given size.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < size - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut cur, &mut out);
    out
}

/// `w = d v` with `d ∈ D_α`, `v ∈ Σ(α)` and `l(w) = l(d) + l(v)`.
pub fn coset_factorise(w: &Perm, alpha: &Composition) -> (Perm, Perm) {
    let mut img = w.images0().to_vec();
    for b in alpha.blocks() {
        img[b].sort_unstable();
    }
    let d = Perm::from_images0(img);
    let v = d.inverse().compose(w);
    (d, v)
}
