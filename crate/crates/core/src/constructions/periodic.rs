use crate::actions::Homomorphism;
use crate::error::{Error, Result};
use crate::finite_model::FullGroupElement;
use crate::rational::Rational;

/// Result of [`periodic_truncate`].
#[derive(Clone, Debug)]
pub struct Truncation {
    pub hom: Homomorphism,
    /// Per generator, the mass of atoms whose image leaves their block.
    pub exit_mass: Vec<Rational>,
}

/// Cuts every generator along the level-`j` filtration blocks.
///
/// Inside a block, the maximal runs `y_0 → y_1 → … → y_k` of `α(s)` close
/// up into cycles: `β(s)` follows `α(s)` while the image stays in the block,
/// sends the last point of a run back to its first point, and fixes points
/// that enter and leave the block in one step. `β(s)` then differs from
/// `α(s)` exactly at the points whose image leaves their block.
pub fn periodic_truncate(hom: &Homomorphism, level: u32) -> Result<Truncation> {
    let space = hom.space();
    let top = space.filtration_levels().ok_or(Error::NoFiltration)?;
    if level > top {
        return Err(Error::BadLevel { level, top });
    }
    let block = |x: usize| x >> level;
    let n = hom.n_atoms();
    let mut gens = Vec::with_capacity(hom.rank());
    let mut exit_mass = Vec::with_capacity(hom.rank());
    for g in hom.gens() {
        let mut forward = vec![0; n];
        let mut exits = 0;
        for (x, image) in forward.iter_mut().enumerate() {
            let stays_forward = block(g.apply(x)) == block(x);
            *image = if stays_forward {
                g.apply(x)
            } else {
                exits += 1;
                // walk back to the start of the run
                let mut y = x;
                while block(g.apply_inverse(y)) == block(x) {
                    y = g.apply_inverse(y);
                }
                y
            };
        }
        gens.push(FullGroupElement::new(space, forward)?);
        exit_mass.push(space.measure(exits));
    }
    Ok(Truncation {
        hom: Homomorphism::new(space.clone(), gens)?,
        exit_mass,
    })
}

/// True when every orbit of `hom` lies in a single level-`j` block.
pub fn orbits_within_blocks(hom: &Homomorphism, level: u32) -> Result<bool> {
    let space = hom.space();
    for o in hom.orbits() {
        let b = space.block(level, o[0])?;
        for &x in &o {
            if space.block(level, x)? != b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
