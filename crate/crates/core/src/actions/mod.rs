//! Homomorphisms `F_r → [E]` and what they induce on atoms: word images,
//! orbits, stabilizer traces, Schreier balls and stabilizer distributions.

mod irs;
mod schreier;
mod trace;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

pub use irs::{empirical_irs, invariance_defect, EmpiricalIRS};
pub use schreier::{balls_isomorphic, explicit_isomorphism, schreier_ball, SchreierBall};
pub use trace::{stabilizer_trace, StabilizerTrace, Tracer};

use crate::error::{Error, Result};
use crate::finite_model::{uniform_metric, FiniteSpace, FullGroupElement, SpaceJson};
use crate::free_words::{Letter, ReducedWord};
use crate::rational::{self, Rational};

/// A point of `Hom(F_r, [E])`: generator `s_{i+1}` acts by `gens[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    space: FiniteSpace,
    gens: Vec<FullGroupElement>,
}

/// JSON layout of a homomorphism. `gens[i][x]` is the image of atom `x`
/// under `s_{i+1}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HomJson {
    pub n_atoms: usize,
    pub rank: usize,
    pub gens: Vec<Vec<usize>>,
    pub space: SpaceJson,
}

impl Homomorphism {
    pub fn new(space: FiniteSpace, gens: Vec<FullGroupElement>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Precondition("rank must be at least 1".into()));
        }
        for g in &gens {
            g.check_in(&space)?;
        }
        Ok(Homomorphism { space, gens })
    }

    /// Every generator acts trivially.
    pub fn trivial(space: FiniteSpace, rank: usize) -> Result<Self> {
        let gens = vec![FullGroupElement::identity(space.n_atoms()); rank];
        Self::new(space, gens)
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn n_atoms(&self) -> usize {
        self.space.n_atoms()
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[FullGroupElement] {
        &self.gens
    }

    /// `α(s_{index+1})`.
    pub fn gen(&self, index: usize) -> &FullGroupElement {
        &self.gens[index]
    }

    /// Copy with generator `index` replaced.
    pub fn with_generator(&self, index: usize, g: FullGroupElement) -> Result<Self> {
        if index >= self.rank() {
            return Err(Error::BadGenerator {
                index: index as i64 + 1,
                rank: self.rank(),
            });
        }
        g.check_in(&self.space)?;
        let mut gens = self.gens.clone();
        gens[index] = g;
        Ok(Homomorphism {
            space: self.space.clone(),
            gens,
        })
    }

    /// Lean aperiodic model: `α(s1)` is a single cycle through every atom.
    pub fn is_lean_aperiodic(&self) -> bool {
        self.gens[0].is_single_cycle()
    }

    #[inline]
    pub fn apply_letter(&self, l: Letter, x: usize) -> usize {
        let g = &self.gens[l.unsigned_abs() as usize - 1];
        if l > 0 {
            g.apply(x)
        } else {
            g.apply_inverse(x)
        }
    }

    /// `α(w)(x)`, applying the rightmost letter first.
    pub fn evaluate(&self, w: &ReducedWord, x: usize) -> usize {
        self.evaluate_letters(w.letters(), x)
    }

    /// Same as [`evaluate`](Self::evaluate) on a raw letter sequence.
    pub fn evaluate_letters(&self, letters: &[Letter], x: usize) -> usize {
        letters.iter().rev().fold(x, |y, &l| self.apply_letter(l, y))
    }

    /// The full-group element `α(w)`.
    pub fn word_image(&self, w: &ReducedWord) -> FullGroupElement {
        let forward = (0..self.n_atoms()).map(|x| self.evaluate(w, x)).collect();
        FullGroupElement::from_forward(forward).expect("word image is a bijection")
    }

    /// Atoms reachable from `x`, sorted.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n_atoms()];
        let mut out = self.orbit_into(x, &mut seen);
        out.sort_unstable();
        out
    }

    fn orbit_into(&self, x: usize, seen: &mut [bool]) -> Vec<usize> {
        let mut out = vec![x];
        seen[x] = true;
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for g in &self.gens {
                for z in [g.apply(y), g.apply_inverse(y)] {
                    if !seen[z] {
                        seen[z] = true;
                        out.push(z);
                        queue.push_back(z);
                    }
                }
            }
        }
        out
    }

    /// All orbits, each sorted, ordered by least atom.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n_atoms()];
        let mut out = Vec::new();
        for x in 0..self.n_atoms() {
            if !seen[x] {
                let mut o = self.orbit_into(x, &mut seen);
                o.sort_unstable();
                out.push(o);
            }
        }
        out
    }

    /// Orbit label for every atom (orbits numbered by least atom).
    pub fn orbit_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n_atoms()];
        for (id, o) in self.orbits().iter().enumerate() {
            for &x in o {
                labels[x] = id;
            }
        }
        labels
    }

    /// Orbit size `k` ↦ mass of atoms whose orbit has size `k`. The orbit
    /// size of `x` is the index of its stabilizer.
    pub fn index_distribution(&self) -> BTreeMap<usize, Rational> {
        let mut mass: BTreeMap<usize, usize> = BTreeMap::new();
        for o in self.orbits() {
            *mass.entry(o.len()).or_default() += o.len();
        }
        mass.into_iter()
            .map(|(k, m)| (k, rational::fraction(m, self.n_atoms())))
            .collect()
    }

    pub fn to_json(&self) -> HomJson {
        HomJson {
            n_atoms: self.n_atoms(),
            rank: self.rank(),
            gens: self.gens.iter().map(|g| g.forward().to_vec()).collect(),
            space: self.space.to_json(),
        }
    }

    pub fn from_json(json: &HomJson) -> Result<Self> {
        if json.gens.len() != json.rank {
            return Err(Error::Json(format!(
                "rank {} but {} generators",
                json.rank,
                json.gens.len()
            )));
        }
        if json.space.n_atoms != json.n_atoms {
            return Err(Error::SizeMismatch {
                left: json.n_atoms,
                right: json.space.n_atoms,
            });
        }
        let space = FiniteSpace::from_json(&json.space)?;
        let gens = json
            .gens
            .iter()
            .map(|g| FullGroupElement::new(&space, g.clone()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(space, gens)
    }
}

fn check_compatible(a: &Homomorphism, b: &Homomorphism) -> Result<()> {
    if a.n_atoms() != b.n_atoms() {
        return Err(Error::SizeMismatch {
            left: a.n_atoms(),
            right: b.n_atoms(),
        });
    }
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    Ok(())
}

/// `d_u(α, β) = max_i d_u(α(s_i), β(s_i))`.
pub fn hom_metric(a: &Homomorphism, b: &Homomorphism) -> Result<Rational> {
    check_compatible(a, b)?;
    a.gens
        .iter()
        .zip(&b.gens)
        .map(|(x, y)| uniform_metric(x, y))
        .try_fold(rational::zero(), |m, d| Ok(m.max(d?)))
}
