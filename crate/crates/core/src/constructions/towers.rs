//! Disjoint-support partitions, Rokhlin bases and first-return maps.

use crate::error::{Error, Result};
use crate::finite_model::FullGroupElement;
use crate::rational::Rational;

/// Partition of `∩ supp(T_i)` into parts `A_k` with `T_i(A_k) ∩ A_k = ∅`.
///
/// Greedy colouring, in atom order, of the graph joining `x` to `T_i(x)`
/// inside the common support. Degrees are at most `2n`, so at most
/// `2n + 1` parts are used. Parts are returned by colour.
pub fn disjoint_support_partition(maps: &[FullGroupElement]) -> Result<Vec<Vec<usize>>> {
    let n = match maps.first() {
        Some(t) => t.len(),
        None => return Ok(Vec::new()),
    };
    if let Some(t) = maps.iter().find(|t| t.len() != n) {
        return Err(Error::SizeMismatch { left: n, right: t.len() });
    }
    let in_support: Vec<bool> = (0..n)
        .map(|x| maps.iter().all(|t| t.apply(x) != x))
        .collect();
    let mut colour = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut used = Vec::with_capacity(2 * maps.len());
    for x in (0..n).filter(|&x| in_support[x]) {
        used.clear();
        for t in maps {
            for y in [t.apply(x), t.apply_inverse(x)] {
                if in_support[y] && colour[y] != usize::MAX {
                    used.push(colour[y]);
                }
            }
        }
        let c = (0..).find(|c| !used.contains(c)).unwrap();
        colour[x] = c;
        if c == parts.len() {
            parts.push(Vec::new());
        }
        parts[c].push(x);
    }
    Ok(parts)
}

/// Base `O` of a Rokhlin tower of height `height` for a single cycle `σ`:
/// `O, σO, …, σ^{height−1}O` are pairwise disjoint and `0 < μ(O) < bound`.
///
/// `O = {σ^{jk}(0) : 0 ≤ j < m}` where `m` is the largest count with
/// `m/N < bound` and `m·height ≤ N`, and the stride is `k = ⌊N/m⌋ ≥ height`.
pub fn rokhlin_base(sigma: &FullGroupElement, height: usize, bound: Rational) -> Result<Vec<usize>> {
    let n = sigma.len();
    if !sigma.is_single_cycle() {
        return Err(Error::NotSingleCycle(format!(
            "cycle type {:?}",
            sigma.cycle_structure().lengths
        )));
    }
    if height == 0 || height > n {
        return Err(Error::NoRokhlinBase(format!("height {height} on {n} atoms")));
    }
    // largest m with m < bound · n
    let scaled = bound * Rational::from_integer(n as i64);
    let below = if scaled <= Rational::from_integer(0) {
        0
    } else if scaled.is_integer() {
        scaled.to_integer() - 1
    } else {
        scaled.floor().to_integer()
    };
    let m = (below.max(0) as usize).min(n / height);
    if m == 0 {
        return Err(Error::NoRokhlinBase(format!(
            "no nonempty base of height {height} with measure below {bound} on {n} atoms"
        )));
    }
    let stride = n / m;
    let mut base = Vec::with_capacity(m);
    let mut x = 0;
    for step in 0..stride * m {
        if step % stride == 0 {
            base.push(x);
        }
        x = sigma.apply(x);
    }
    Ok(base)
}

/// First-return map of `σ` to `Y`, extended by the identity off `Y`.
pub fn first_return(sigma: &FullGroupElement, set: &[usize]) -> Result<FullGroupElement> {
    let n = sigma.len();
    let mut in_set = vec![false; n];
    for &y in set {
        if y >= n {
            return Err(Error::AtomOutOfRange { atom: y, n_atoms: n });
        }
        in_set[y] = true;
    }
    let mut forward: Vec<usize> = (0..n).collect();
    for cycle in sigma.cycles() {
        let hits: Vec<usize> = cycle.iter().copied().filter(|&x| in_set[x]).collect();
        for (i, &y) in hits.iter().enumerate() {
            forward[y] = hits[(i + 1) % hits.len()];
        }
    }
    FullGroupElement::from_forward(forward)
}
