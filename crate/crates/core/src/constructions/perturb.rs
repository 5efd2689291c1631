//! Small perturbations of lean aperiodic actions that plant a Følner set,
//! a prescribed permutation of reference points, or a non-trivial action of
//! a fixed word.

use crate::actions::Homomorphism;
use crate::error::{Error, Result};
use crate::finite_model::FullGroupElement;
use crate::free_words::{cyclic_reduce, ReducedWord};
use crate::rational::Rational;

use super::splice::{extend_partial, splice};
use super::towers::{first_return, rokhlin_base};

fn require_lean(hom: &Homomorphism) -> Result<()> {
    if !hom.is_lean_aperiodic() {
        return Err(Error::Precondition("α(s1) must be a single cycle".into()));
    }
    Ok(())
}

fn require_rank(hom: &Homomorphism, min: usize) -> Result<()> {
    if hom.rank() < min {
        return Err(Error::Precondition(format!(
            "rank {} below the required {min}",
            hom.rank()
        )));
    }
    Ok(())
}

/// The atoms `σ^k(0)` for `k = 0, 1, ...`, i.e. the cycle of `σ` through 0.
fn cycle_order(sigma: &FullGroupElement) -> Vec<usize> {
    let mut out = Vec::with_capacity(sigma.len());
    let mut x = 0;
    loop {
        out.push(x);
        x = sigma.apply(x);
        if x == 0 {
            return out;
        }
    }
}

/// Output of [`build_folner_perturbation`].
#[derive(Clone, Debug)]
pub struct FolnerConstruction {
    pub hom: Homomorphism,
    /// The classes of the planted finite relations, one per requested size,
    /// each in the cyclic order in which `β(s_r)` runs through it.
    pub classes: Vec<Vec<usize>>,
    /// Least atom of each class.
    pub transversal: Vec<usize>,
}

/// Plants one class of each requested size, generated by `β(s_r)`.
///
/// The classes fill a set `A` of consecutive points along `α(s1)` starting
/// at atom 0, with `μ(A) < ε/2r`. `β(s_r)` is `α(s_r)` spliced to cycle
/// each class; for `i < r`, `β(s_i)` is the first-return map of `α(s_i)` to
/// `X ∖ (A ∖ T)`, `T` the transversal, extended by the identity.
pub fn build_folner_perturbation(
    hom: &Homomorphism,
    epsilon: Rational,
    sizes: &[usize],
) -> Result<FolnerConstruction> {
    require_lean(hom)?;
    require_rank(hom, 2)?;
    if sizes.contains(&0) {
        return Err(Error::Precondition("class sizes must be positive".into()));
    }
    let n = hom.n_atoms();
    let r = hom.rank();
    let total: usize = sizes.iter().sum();
    let limit = epsilon / Rational::from_integer(2 * r as i64);
    if total > n || hom.space().measure(total) >= limit {
        return Err(Error::Infeasible(format!(
            "{total} planted atoms out of {n} do not fit below ε/2r = {limit}"
        )));
    }

    let order = cycle_order(hom.gen(0));
    let mut classes = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &size in sizes {
        classes.push(order[start..start + size].to_vec());
        start += size;
    }
    let planted: Vec<usize> = order[..total].to_vec();
    let transversal: Vec<usize> = classes.iter().map(|c| *c.iter().min().unwrap()).collect();

    let mut cycling = Vec::with_capacity(total);
    for c in &classes {
        for (i, &x) in c.iter().enumerate() {
            cycling.push((x, c[(i + 1) % c.len()]));
        }
    }
    let space = hom.space();
    let class_cycles = extend_partial(space, &cycling)?;
    let last = splice(space, hom.gen(r - 1), &planted, &class_cycles)?;

    let mut removed = vec![false; n];
    for &x in &planted {
        removed[x] = true;
    }
    for &t in &transversal {
        removed[t] = false;
    }
    let kept: Vec<usize> = (0..n).filter(|&x| !removed[x]).collect();
    let mut gens = Vec::with_capacity(r);
    for i in 0..r - 1 {
        gens.push(first_return(hom.gen(i), &kept)?);
    }
    gens.push(last);
    Ok(FolnerConstruction {
        hom: Homomorphism::new(space.clone(), gens)?,
        classes,
        transversal,
    })
}

/// Output of [`build_ht_perturbation`].
#[derive(Clone, Debug)]
pub struct HtConstruction {
    pub hom: Homomorphism,
    /// Rokhlin base `O` of height `m` for `σ = α(s1)`.
    pub base: Vec<usize>,
}

fn check_permutation(tau: &[usize]) -> Result<()> {
    let mut seen = vec![false; tau.len()];
    for &t in tau {
        if t >= tau.len() || std::mem::replace(&mut seen[t], true) {
            return Err(Error::InvalidPermutation(format!("{tau:?}")));
        }
    }
    Ok(())
}

/// Splices `α(s2)` so that `β(s2)(σ^i x) = σ^{τ(i)} x` for every `x` in a
/// Rokhlin base `O` of height `m` with `μ(O) < ε/2m`. Every atom `y` then
/// sees `τ` realized by `s1^{-n} s2 s1^{n}` where `n` is the first time
/// `σ^n y` hits `O`.
pub fn build_ht_perturbation(
    hom: &Homomorphism,
    m: usize,
    tau: &[usize],
    epsilon: Rational,
) -> Result<HtConstruction> {
    require_lean(hom)?;
    require_rank(hom, 2)?;
    if m < 1 {
        return Err(Error::Precondition("m must be at least 1".into()));
    }
    if tau.len() != m {
        return Err(Error::InvalidPermutation(format!("{tau:?} is not a permutation of 0..{m}")));
    }
    check_permutation(tau)?;
    let sigma = hom.gen(0);
    let base = rokhlin_base(sigma, m, epsilon / Rational::from_integer(2 * m as i64))?;
    let mut pairs = Vec::with_capacity(m * base.len());
    let mut tower = Vec::with_capacity(m * base.len());
    for &x in &base {
        let mut col = Vec::with_capacity(m);
        let mut y = x;
        for _ in 0..m {
            col.push(y);
            y = sigma.apply(y);
        }
        for i in 0..m {
            pairs.push((col[i], col[tau[i]]));
            tower.push(col[i]);
        }
    }
    let space = hom.space();
    let target = extend_partial(space, &pairs)?;
    let s2 = splice(space, hom.gen(1), &tower, &target)?;
    Ok(HtConstruction {
        hom: hom.with_generator(1, s2)?,
        base,
    })
}

/// Permutation `τ` of `{0..s}` for a cyclically reduced `g = w_s ⋯ w_1`
/// (written left to right, `w_1` rightmost) with `τ(i) = τ(i−1) + 1`
/// whenever `w_i = s1` and `τ(i) = τ(i−1) − 1` whenever `w_i = s1^-1`.
///
/// Positions linked by these constraints form runs, each forced to be a
/// ±1 progression. Runs are packed into consecutive intervals from 0,
/// longest first, ties by position.
pub fn tau_for_word(g: &ReducedWord) -> Result<Vec<usize>> {
    if !g.is_cyclically_reduced() {
        return Err(Error::Precondition(format!("{g} is not cyclically reduced")));
    }
    if g.is_power_of_first() {
        return Err(Error::Precondition(format!("{g} is a power of s1")));
    }
    let s = g.len();
    let letter = |i: usize| g.letters()[s - i];
    // runs of positions with their direction (+1, -1, or 0 for singletons)
    let mut runs: Vec<(usize, usize, i32)> = Vec::new();
    let mut start = 0;
    let mut dir = 0;
    for i in 1..=s {
        let w = letter(i);
        if w.abs() == 1 {
            debug_assert!(dir == 0 || dir == w.signum(), "reduced words keep one direction");
            dir = w.signum();
        } else {
            runs.push((start, i - start, dir));
            start = i;
            dir = 0;
        }
    }
    runs.push((start, s + 1 - start, dir));
    runs.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));

    let mut tau = vec![0; s + 1];
    let mut lo = 0;
    for (start, len, dir) in runs {
        for t in 0..len {
            tau[start + t] = if dir < 0 { lo + len - 1 - t } else { lo + t };
        }
        lo += len;
    }
    Ok(tau)
}

/// Output of [`build_corefree_perturbation`].
#[derive(Clone, Debug)]
pub struct CoreFreeConstruction {
    pub hom: Homomorphism,
    pub conjugator: ReducedWord,
    pub core: ReducedWord,
    pub tau: Vec<usize>,
    /// Rokhlin base `O` of height `s + 1`, `s` the core length.
    pub base: Vec<usize>,
}

/// Splices the generators so that the cyclic core of `g` carries
/// `σ^{τ(0)}O` onto `σ^{τ(s)}O`, making `β(g)` non-trivial on every orbit.
///
/// With `ξ` moving `σ^{τ(i-1)}O` to `σ^{τ(i)}O` along `σ`, each letter
/// `w_i ∉ {s1, s1^-1}` is prescribed `β(w_i) = ξ` on `σ^{τ(i-1)}O`; letters
/// `s1^{±1}` already agree with `ξ` there by the choice of `τ`.
/// `β(s1) = α(s1)`.
pub fn build_corefree_perturbation(
    hom: &Homomorphism,
    g: &ReducedWord,
    epsilon: Rational,
) -> Result<CoreFreeConstruction> {
    require_lean(hom)?;
    if g.rank() > hom.rank() {
        return Err(Error::RankMismatch { left: g.rank(), right: hom.rank() });
    }
    let (conjugator, core) = cyclic_reduce(g);
    let tau = tau_for_word(&core)?;
    let s = core.len();
    let sigma = hom.gen(0);
    let base = rokhlin_base(sigma, s + 1, epsilon / Rational::from_integer(2 * (s as i64 + 1)))?;

    let columns: Vec<Vec<usize>> = base
        .iter()
        .map(|&x| {
            let mut col = Vec::with_capacity(s + 1);
            let mut y = x;
            for _ in 0..=s {
                col.push(y);
                y = sigma.apply(y);
            }
            col
        })
        .collect();

    let mut prescribed: Vec<Vec<(usize, usize)>> = vec![Vec::new(); hom.rank()];
    for i in 1..=s {
        let w = core.letters()[s - i];
        for col in &columns {
            let from = col[tau[i - 1]];
            let to = col[tau[i]];
            match w {
                1 => debug_assert_eq!(sigma.apply(from), to),
                -1 => debug_assert_eq!(sigma.apply_inverse(from), to),
                w if w > 0 => prescribed[w as usize - 1].push((from, to)),
                w => prescribed[(-w) as usize - 1].push((to, from)),
            }
        }
    }

    let space = hom.space();
    let mut beta = hom.clone();
    for (j, pairs) in prescribed.iter().enumerate().skip(1) {
        if pairs.is_empty() {
            continue;
        }
        let target = extend_partial(space, pairs)?;
        let domain: Vec<usize> = pairs.iter().map(|&(x, _)| x).collect();
        let spliced = splice(space, hom.gen(j), &domain, &target)?;
        beta = beta.with_generator(j, spliced)?;
    }
    Ok(CoreFreeConstruction {
        hom: beta,
        conjugator,
        core,
        tau,
        base,
    })
}
