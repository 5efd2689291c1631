//! Finite probability spaces with an equivalence relation, dyadic
//! filtrations, and full-group elements.
//!
//! Atoms are `0..n` with uniform mass `1/n`. The equivalence relation `E` is
//! a partition of the atoms; its full group `[E]` is the set of permutations
//! that keep every atom inside its class.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Atoms, the partition defining `E`, and an optional dyadic filtration.
///
/// With `filtration_levels = Some(L)` the level-`j` partition (`0 <= j <= L`)
/// has blocks of `2^j` consecutive atoms, so the block of `x` is `x >> j`.
/// Level 0 is discrete and each level-`L` block sits inside one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    n_atoms: usize,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    filtration_levels: Option<u32>,
}

/// JSON layout of a space.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpaceJson {
    pub n_atoms: usize,
    pub classes: Vec<Vec<usize>>,
    pub filtration_log2_levels: Option<u32>,
}

impl FiniteSpace {
    /// Builds a space from a class label per atom. Labels are renumbered by
    /// first appearance so that class ids are canonical.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidPartition("no atoms".into()));
        }
        let mut renumber = BTreeMap::new();
        let mut class_of = Vec::with_capacity(labels.len());
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            let next = renumber.len();
            let id = *renumber.entry(l).or_insert(next);
            if id == classes.len() {
                classes.push(Vec::new());
            }
            classes[id].push(x);
            class_of.push(id);
        }
        Ok(FiniteSpace {
            n_atoms: labels.len(),
            class_of,
            classes,
            filtration_levels: None,
        })
    }

    /// Builds a space from explicit classes, which must partition `0..n`.
    pub fn from_classes(n_atoms: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n_atoms];
        for (id, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidPartition(format!("class {id} is empty")));
            }
            for &x in class {
                if x >= n_atoms {
                    return Err(Error::AtomOutOfRange { atom: x, n_atoms });
                }
                if labels[x] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("atom {x} in two classes")));
                }
                labels[x] = id;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidPartition(format!("atom {x} in no class")));
        }
        Self::from_labels(&labels)
    }

    /// One class holding every atom.
    pub fn single_class(n_atoms: usize) -> Result<Self> {
        Self::from_labels(&vec![0; n_atoms])
    }

    /// `2^log2` atoms in one class with the full dyadic filtration.
    pub fn dyadic(log2: u32) -> Result<Self> {
        Self::single_class(1usize << log2)?.with_filtration(log2)
    }

    /// `2^log2` atoms split into classes of `2^class_log2` consecutive atoms,
    /// filtered up to the class size.
    pub fn dyadic_blocks(log2: u32, class_log2: u32) -> Result<Self> {
        if class_log2 > log2 {
            return Err(Error::InvalidPartition(format!(
                "class size 2^{class_log2} exceeds space size 2^{log2}"
            )));
        }
        let labels: Vec<usize> = (0..1usize << log2).map(|x| x >> class_log2).collect();
        Self::from_labels(&labels)?.with_filtration(class_log2)
    }

    /// Attaches the dyadic filtration with levels `0..=levels`.
    pub fn with_filtration(mut self, levels: u32) -> Result<Self> {
        let block = 1usize
            .checked_shl(levels)
            .filter(|b| *b <= self.n_atoms)
            .ok_or_else(|| Error::InvalidFiltration(format!("2^{levels} exceeds atom count")))?;
        if !self.n_atoms.is_multiple_of(block) {
            return Err(Error::InvalidFiltration(format!(
                "{} atoms are not a multiple of block size {block}",
                self.n_atoms
            )));
        }
        for start in (0..self.n_atoms).step_by(block) {
            let c = self.class_of[start];
            if (start..start + block).any(|x| self.class_of[x] != c) {
                return Err(Error::InvalidFiltration(format!(
                    "top block at {start} crosses a class boundary"
                )));
            }
        }
        self.filtration_levels = Some(levels);
        Ok(self)
    }

    pub fn n_atoms(&self) -> usize {
        self.n_atoms
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn n_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn filtration_levels(&self) -> Option<u32> {
        self.filtration_levels
    }

    /// Measure of a set of `k` atoms.
    pub fn measure(&self, k: usize) -> Rational {
        rational::fraction(k, self.n_atoms)
    }

    /// Level-`j` filtration block containing `x`.
    pub fn block(&self, level: u32, x: usize) -> Result<usize> {
        let top = self.filtration_levels.ok_or(Error::NoFiltration)?;
        if level > top {
            return Err(Error::BadLevel { level, top });
        }
        Ok(x >> level)
    }

    pub fn to_json(&self) -> SpaceJson {
        SpaceJson {
            n_atoms: self.n_atoms,
            classes: self.classes.clone(),
            filtration_log2_levels: self.filtration_levels,
        }
    }

    pub fn from_json(json: &SpaceJson) -> Result<Self> {
        let space = Self::from_classes(json.n_atoms, &json.classes)?;
        match json.filtration_log2_levels {
            Some(l) => space.with_filtration(l),
            None => Ok(space),
        }
    }
}

/// A class-preserving bijection of the atoms, stored with its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FullGroupElement {
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

/// Cycle type of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleStructure {
    /// Cycle lengths in ascending order.
    pub lengths: Vec<usize>,
    pub is_single_cycle: bool,
    pub min_cycle_length: usize,
}

impl CycleStructure {
    /// Weak aperiodicity: every cycle has length at least `l`.
    pub fn all_cycles_at_least(&self, l: usize) -> bool {
        self.min_cycle_length >= l
    }
}

impl FullGroupElement {
    pub fn identity(n: usize) -> Self {
        let forward: Vec<usize> = (0..n).collect();
        FullGroupElement {
            inverse: forward.clone(),
            forward,
        }
    }

    /// Checks that `forward` is a bijection of `0..forward.len()`.
    pub fn from_forward(forward: Vec<usize>) -> Result<Self> {
        let n = forward.len();
        let mut inverse = vec![usize::MAX; n];
        for (x, &y) in forward.iter().enumerate() {
            if y >= n {
                return Err(Error::NotBijection(format!("image {y} of {x} out of range")));
            }
            if inverse[y] != usize::MAX {
                return Err(Error::NotBijection(format!("{y} has two preimages")));
            }
            inverse[y] = x;
        }
        Ok(FullGroupElement { forward, inverse })
    }

    /// Bijection that must also lie in the full group of `space`.
    pub fn new(space: &FiniteSpace, forward: Vec<usize>) -> Result<Self> {
        let g = Self::from_forward(forward)?;
        g.check_in(space)?;
        Ok(g)
    }

    /// Permutation from disjoint cycles, each listed in forward order.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut forward: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::AtomOutOfRange { atom: x, n_atoms: n });
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::NotBijection(format!("{x} appears in two cycles")));
                }
                forward[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_forward(forward)
    }

    /// The standard odometer `x -> x + 1 mod n`.
    pub fn odometer(n: usize) -> Self {
        Self::from_forward((0..n).map(|x| (x + 1) % n).collect()).expect("rotation is a bijection")
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut forward: Vec<usize> = (0..n).collect();
        forward.swap(a, b);
        Self::from_forward(forward).expect("transposition is a bijection")
    }

    /// Uniformly random element of `[E]`: an independent shuffle per class.
    pub fn random_in<R: Rng + ?Sized>(space: &FiniteSpace, rng: &mut R) -> Self {
        let mut forward = vec![0; space.n_atoms()];
        for class in space.classes() {
            let mut images = class.clone();
            images.shuffle(rng);
            for (&x, &y) in class.iter().zip(&images) {
                forward[x] = y;
            }
        }
        Self::from_forward(forward).expect("shuffle is a bijection")
    }

    pub fn check_in(&self, space: &FiniteSpace) -> Result<()> {
        if self.len() != space.n_atoms() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: space.n_atoms(),
            });
        }
        for (x, &y) in self.forward.iter().enumerate() {
            if space.class_of(x) != space.class_of(y) {
                return Err(Error::NotInFullGroup {
                    atom: x,
                    from_class: space.class_of(x),
                    to_class: space.class_of(y),
                });
            }
        }
        Ok(())
    }

    pub fn is_in(&self, space: &FiniteSpace) -> bool {
        self.check_in(space).is_ok()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.forward[x]
    }

    #[inline]
    pub fn apply_inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse_images(&self) -> &[usize] {
        &self.inverse
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        let forward = other.forward.iter().map(|&y| self.forward[y]).collect();
        let inverse = self.inverse.iter().map(|&y| other.inverse[y]).collect();
        FullGroupElement { forward, inverse }
    }

    pub fn inverse(&self) -> Self {
        FullGroupElement {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// `self^k` for any integer `k`, by walking cycles.
    pub fn pow(&self, k: i64) -> Self {
        let n = self.len();
        let mut forward = vec![0; n];
        for cycle in self.cycles() {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (i, &x) in cycle.iter().enumerate() {
                forward[x] = cycle[(i + shift) % cycle.len()];
            }
        }
        Self::from_forward(forward).expect("power of a bijection")
    }

    /// Atoms moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.forward[x] != x).collect()
    }

    /// Cycles, each starting at its least atom, ordered by that atom.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.forward[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable();
        CycleStructure {
            is_single_cycle: lengths.len() == 1,
            min_cycle_length: lengths.first().copied().unwrap_or(0),
            lengths,
        }
    }

    pub fn is_single_cycle(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let mut x = self.forward[0];
        let mut steps = 1;
        while x != 0 {
            x = self.forward[x];
            steps += 1;
        }
        steps == self.len()
    }
}

/// Normalized Hamming distance `|{x : φ(x) ≠ ψ(x)}| / n`.
pub fn uniform_metric(phi: &FullGroupElement, psi: &FullGroupElement) -> Result<Rational> {
    if phi.len() != psi.len() {
        return Err(Error::SizeMismatch {
            left: phi.len(),
            right: psi.len(),
        });
    }
    let differ = phi
        .forward
        .iter()
        .zip(&psi.forward)
        .filter(|(a, b)| a != b)
        .count();
    Ok(rational::fraction(differ, phi.len()))
}

/// Conjugator `c` with `c · π · c⁻¹ = odometer`, relabelling the cycle of
/// `π` through `0` as `0, 1, 2, ...`.
pub fn conjugate_to_standard_cycle(
    space: &FiniteSpace,
    pi: &FullGroupElement,
) -> Result<FullGroupElement> {
    if space.n_classes() != 1 {
        return Err(Error::NonTrivialRelation(space.n_classes()));
    }
    if pi.len() != space.n_atoms() {
        return Err(Error::SizeMismatch {
            left: pi.len(),
            right: space.n_atoms(),
        });
    }
    if !pi.is_single_cycle() {
        return Err(Error::NotSingleCycle(format!(
            "cycle type {:?}",
            pi.cycle_structure().lengths
        )));
    }
    let n = pi.len();
    let mut forward = vec![0; n];
    let mut x = 0;
    for label in 0..n {
        forward[x] = label;
        x = pi.apply(x);
    }
    FullGroupElement::new(space, forward)
}
