use std::collections::HashSet;

use rayon::prelude::*;

use crate::actions::Homomorphism;
use crate::error::{Error, Result};
use crate::free_words::{letters, Letter, ReducedWord};
use crate::rational::{fraction, Rational};

struct TupleCodec {
    bits: u32,
    mask: u128,
    m: usize,
}

impl TupleCodec {
    fn new(n_atoms: usize, m: usize) -> Result<Self> {
        let bits = (usize::BITS - n_atoms.saturating_sub(1).leading_zeros()).max(1);
        if m as u32 * bits > 128 {
            return Err(Error::Precondition(format!(
                "{m}-tuples of {n_atoms} atoms do not fit in 128 bits"
            )));
        }
        Ok(TupleCodec {
            bits,
            mask: (1u128 << bits) - 1,
            m,
        })
    }

    fn pack(&self, xs: impl Iterator<Item = usize>) -> u128 {
        xs.enumerate()
            .fold(0, |acc, (i, x)| acc | ((x as u128) << (i as u32 * self.bits)))
    }

    fn act(&self, hom: &Homomorphism, l: Letter, t: u128) -> u128 {
        self.pack((0..self.m).map(|i| {
            let x = ((t >> (i as u32 * self.bits)) & self.mask) as usize;
            hom.apply_letter(l, x)
        }))
    }
}

/// Whether the tuple graph has a path of length at most `radius` from `src`
/// to `dst`. Every letter comes with its inverse, so both searches expand
/// along the same edges.
fn within(hom: &Homomorphism, codec: &TupleCodec, src: u128, dst: u128, radius: usize) -> bool {
    if src == dst {
        return true;
    }
    let alphabet = letters(hom.rank());
    let mut seen = [HashSet::from([src]), HashSet::from([dst])];
    let mut frontier = [vec![src], vec![dst]];
    let mut depth = 0;
    while depth < radius {
        let side = usize::from(frontier[1].len() < frontier[0].len());
        let mut next = Vec::new();
        for &t in &frontier[side] {
            for &l in &alphabet {
                let u = codec.act(hom, l, t);
                if seen[1 - side].contains(&u) {
                    return true;
                }
                if seen[side].insert(u) {
                    next.push(u);
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        frontier[side] = next;
        depth += 1;
    }
    false
}

fn check_tau(m: usize, tau: &[usize]) -> Result<()> {
    let mut seen = vec![false; m];
    if tau.len() != m || tau.iter().any(|&t| t >= m || std::mem::replace(&mut seen[t], true)) {
        return Err(Error::InvalidPermutation(format!("{tau:?} is not a permutation of 0..{m}")));
    }
    Ok(())
}

/// Fraction of atoms `x` for which some `γ` of length at most `radius` maps
/// `(σ^i x)_{i<m}` to `(σ^{τ(i)} x)_{i<m}`, with `σ = α(s1)`.
pub fn realizes_tau_fraction(hom: &Homomorphism, m: usize, tau: &[usize], radius: usize) -> Result<Rational> {
    if !hom.is_lean_aperiodic() {
        return Err(Error::Precondition("α(s1) must be a single cycle".into()));
    }
    if m == 0 {
        return Err(Error::Precondition("m must be positive".into()));
    }
    check_tau(m, tau)?;
    let n = hom.n_atoms();
    let codec = TupleCodec::new(n, m)?;
    let sigma = hom.gen(0);
    let hits = (0..n)
        .into_par_iter()
        .filter(|&x| {
            let mut points = Vec::with_capacity(m);
            let mut y = x;
            for _ in 0..m {
                points.push(y);
                y = sigma.apply(y);
            }
            let src = codec.pack(points.iter().copied());
            let dst = codec.pack(tau.iter().map(|&t| points[t]));
            within(hom, &codec, src, dst, radius)
        })
        .count();
    Ok(fraction(hits, n))
}

/// Mass of the orbits on which `α(g)` is the identity.
pub fn core_check(hom: &Homomorphism, g: &ReducedWord) -> Result<Rational> {
    if g.letters().is_empty() {
        return Err(Error::Precondition("core check needs a non-empty word".into()));
    }
    if g.rank() != hom.rank() {
        return Err(Error::RankMismatch {
            left: hom.rank(),
            right: g.rank(),
        });
    }
    let image = hom.word_image(g);
    let trivial: usize = hom
        .orbits()
        .iter()
        .filter(|o| o.iter().all(|&x| image.apply(x) == x))
        .map(Vec::len)
        .sum();
    Ok(fraction(trivial, hom.n_atoms()))
}
