use std::collections::HashSet;

use num_bigint::BigInt;

use crate::algebra::{smith_normal_form, Integers, Matrix, Ring, SmithForm};
use crate::error::{Error, Result};
use crate::modules::{GSetModule, ModuleRep};

/// The action map `Z Sym(n) → End_Z(P)` as a matrix (one row per matrix
/// entry, one column per `w`) in Smith normal form. Its kernel is the
/// saturated lattice `Ann_Z(P)`; primes dividing an invariant factor are
/// exactly those where the rank drops modulo `p`.
pub fn integral_annihilator_lattice(p: &ModuleRep<Integers>) -> Result<SmithForm> {
    let z = Integers;
    if !z.is_one(p.q()) {
        return Err(Error::NonIntegralParameter(z.format(p.q())));
    }
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    let mut rows = Vec::new();
    for (block, _) in p.blocks() {
        let acts = p.block_actions(block);
        for a in 0..block.dim() {
            for b in 0..block.dim() {
                let row: Vec<BigInt> = acts.iter().map(|m| m[(a, b)].clone()).collect();
                if row.iter().any(|x| !z.is_zero(x)) && seen.insert(row.clone()) {
                    rows.push(row);
                }
            }
        }
    }
    let cols = p.group().order();
    let m = if rows.is_empty() {
        Matrix::zeros(&z, 0, cols)
    } else {
        Matrix::from_rows(rows)
    };
    Ok(smith_normal_form(&m))
}

pub fn integral_annihilator_of_gset(x: &GSetModule) -> Result<SmithForm> {
    integral_annihilator_lattice(&x.to_module(Integers)?)
}
