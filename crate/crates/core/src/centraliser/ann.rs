use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Field, RowReducer, Subspace};
use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;
use crate::modules::ModuleRep;

/// `Ann(P)` inside `Hec(n)`, in `T_w` coordinates (group order of the module).
///
/// The null space of `h ↦ ρ(h)`: one equation per matrix entry of each
/// distinct block, one unknown per `w`. The result is spot-checked to be a
/// two-sided ideal.
pub fn annihilator<F: Field>(p: &ModuleRep<F>) -> Result<Subspace<F>> {
    let reducer = action_row_space(p);
    let ann = Subspace::nullspace_of(p.ring().clone(), &reducer.finish());
    let alg = HeckeAlgebra::new(p.ring().clone(), p.rank(), p.q().clone())?;
    check_ideal(&alg, &ann, 5, 0x5eed)?;
    Ok(ann)
}

/// `dim Ann(P)` without forming the null space.
pub fn annihilator_dim<F: Field>(p: &ModuleRep<F>) -> usize {
    p.group().order() - action_row_space(p).rank()
}

/// Row space of the map `h ↦ ρ(h)`, stopping once it is everything.
fn action_row_space<F: Field>(p: &ModuleRep<F>) -> RowReducer<F> {
    let f = p.ring();
    let order = p.group().order();
    let mut reducer = RowReducer::new(f.clone(), order);
    'blocks: for (block, _) in p.blocks() {
        let acts = p.block_actions(block);
        let d = block.dim();
        for a in 0..d {
            for b in 0..d {
                if reducer.rank() == order {
                    break 'blocks;
                }
                let row: Vec<F::Elem> = acts.iter().map(|m| m[(a, b)].clone()).collect();
                if row.iter().any(|x| !f.is_zero(x)) {
                    reducer.insert(row);
                }
            }
        }
    }
    reducer
}

/// Spot check that `ann` is a two-sided ideal: products of `samples` random
/// basis elements with `samples` random `T_w` on both sides stay inside.
pub fn check_ideal<F: Field>(
    alg: &HeckeAlgebra<F>,
    ann: &Subspace<F>,
    samples: usize,
    seed: u64,
) -> Result<()> {
    if ann.dim() == 0 {
        return Ok(());
    }
    let group = crate::perm::SymGroup::new(alg.rank());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let v = ann.basis().choose(&mut rng).unwrap();
        let a = alg.from_coordinates(&group, v);
        for _ in 0..samples {
            let w = group.elements().choose(&mut rng).unwrap();
            let tw = alg.basis(w);
            for (side, prod) in [("left", alg.mul(&tw, &a)), ("right", alg.mul(&a, &tw))] {
                if !ann.contains(&alg.coordinates(&group, &prod)) {
                    return Err(Error::IdealCheckFailed(format!(
                        "{side} product with T_{w} leaves the subspace"
                    )));
                }
            }
        }
    }
    Ok(())
}
