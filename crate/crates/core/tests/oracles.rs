//! Diagnostics against independent brute-force computations.

use std::collections::{BTreeMap, HashSet};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use irslab::actions::{hom_metric, Homomorphism};
use irslab::analysis::{
    ball_stability_check, boundary_ratio, folner_search, generates_classwise_symmetric, genericity_sweep,
    transitivity_degree, Property,
};
use irslab::finite_model::{FiniteSpace, FullGroupElement};
use irslab::rational::{fraction, Rational};

fn small_hom(seed: u64, n: usize, rank: usize, n_labels: usize) -> Homomorphism {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<usize> = (0..n).map(|x| (x * 7 + seed as usize) % n_labels).collect();
    let space = FiniteSpace::from_labels(&labels).unwrap();
    let gens = (0..rank).map(|_| FullGroupElement::random_in(&space, &mut rng)).collect();
    Homomorphism::new(space, gens).unwrap()
}

/// Minimum boundary ratio over all connected subsets of the orbit of `x`
/// with at most `max_size` atoms.
fn brute_folner_min(hom: &Homomorphism, x: usize, max_size: usize) -> Option<Rational> {
    let orbit = hom.orbit(x);
    let neighbours = |v: usize| -> Vec<usize> {
        hom.gens().iter().flat_map(|g| [g.apply(v), g.apply_inverse(v)]).collect()
    };
    let mut best: Option<Rational> = None;
    for mask in 1u32..(1 << orbit.len()) {
        let set: Vec<usize> = (0..orbit.len()).filter(|i| mask >> i & 1 == 1).map(|i| orbit[i]).collect();
        if set.len() > max_size {
            continue;
        }
        let members: HashSet<usize> = set.iter().copied().collect();
        let mut reached = HashSet::from([set[0]]);
        let mut stack = vec![set[0]];
        while let Some(v) = stack.pop() {
            for w in neighbours(v) {
                if members.contains(&w) && reached.insert(w) {
                    stack.push(w);
                }
            }
        }
        if reached.len() != set.len() {
            continue;
        }
        let r = boundary_ratio(hom, &set);
        if best.is_none_or(|b| r < b) {
            best = Some(r);
        }
    }
    best
}

/// The generated group, listed element by element through products of
/// generators.
fn group_elements(gens: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q: Vec<usize> = p.iter().map(|&y| g[y]).collect();
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.into_iter().collect()
}

fn degree_by_group(hom: &Homomorphism, x: usize, k_max: usize) -> usize {
    let orbit = hom.orbit(x);
    let pos: BTreeMap<usize, usize> = orbit.iter().enumerate().map(|(i, &y)| (y, i)).collect();
    let n = orbit.len();
    let gens: Vec<Vec<usize>> = hom
        .gens()
        .iter()
        .map(|g| orbit.iter().map(|&y| pos[&g.apply(y)]).collect())
        .collect();
    let group = group_elements(&gens, n);
    let mut degree = 1;
    for k in 1..=k_max {
        let images: HashSet<Vec<usize>> = group.iter().map(|p| p[..k].to_vec()).collect();
        let total: usize = (n - k + 1..=n).product();
        if images.len() == total {
            degree = k;
        } else {
            break;
        }
    }
    degree
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn folner_search_never_beats_brute_force(seed in any::<u64>(), n in 2usize..=12, rank in 1usize..=3, radius in 0usize..=3) {
        let hom = small_hom(seed, n, rank, 1);
        let res = folner_search(&hom, 0, 2, radius);
        let half = res.orbit_size / 2;
        let brute = brute_folner_min(&hom, 0, half.min(6));
        match (&res.best, brute) {
            (Some((set, ratio)), Some(min)) => {
                prop_assert!(*ratio >= min);
                prop_assert_eq!(boundary_ratio(&hom, set), *ratio);
                prop_assert!(set.len() <= half);
            }
            (None, None) => {}
            (got, want) => prop_assert!(false, "search {:?} vs brute {:?}", got, want),
        }
    }

    #[test]
    fn degree_matches_group_enumeration(seed in any::<u64>(), n in 1usize..=7, rank in 1usize..=3, labels in 1usize..=2) {
        let hom = small_hom(seed, n, rank, labels);
        for orbit in hom.orbits() {
            let k_max = orbit.len();
            prop_assert_eq!(transitivity_degree(&hom, orbit[0], k_max).unwrap(), degree_by_group(&hom, orbit[0], k_max));
        }
    }

    #[test]
    fn symmetric_matches_group_order(seed in any::<u64>(), n in 1usize..=6, rank in 1usize..=2) {
        let hom = small_hom(seed, n, rank, 1);
        let gens: Vec<Vec<usize>> = hom.gens().iter().map(|g| g.forward().to_vec()).collect();
        let order = group_elements(&gens, n).len();
        let factorial: usize = (1..=n).product();
        prop_assert_eq!(generates_classwise_symmetric(&hom).unwrap().symmetric, order == factorial);
    }

    #[test]
    fn index_matches_orbit_enumeration(seed in any::<u64>(), n in 1usize..=40, rank in 1usize..=3, labels in 1usize..=4) {
        let hom = small_hom(seed, n, rank, labels);
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for x in 0..n {
            *counts.entry(hom.orbit(x).len()).or_default() += 1;
        }
        let brute: BTreeMap<usize, Rational> = counts.into_iter().map(|(k, c)| (k, fraction(c, n))).collect();
        prop_assert_eq!(hom.index_distribution(), brute);
    }

    #[test]
    fn stability_bound_holds(seed in any::<u64>(), swaps in 1usize..=6, radius in 0usize..=2) {
        let alpha = small_hom(seed, 256, 2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let mut gens = alpha.gens().to_vec();
        for _ in 0..swaps {
            use rand::Rng;
            let g = rng.random_range(0..2);
            let (a, b) = (rng.random_range(0..256), rng.random_range(0..256));
            gens[g] = gens[g].compose(&FullGroupElement::transposition(256, a, b));
        }
        let beta = Homomorphism::new(alpha.space().clone(), gens).unwrap();
        let c = ball_stability_check(&alpha, &beta, radius).unwrap();
        prop_assert_eq!(c.delta, hom_metric(&alpha, &beta).unwrap());
        prop_assert!(c.holds);
    }
}

#[test]
fn sweep_of_constant_truth_is_one_at_every_epsilon() {
    let hom = small_hom(1, 32, 2, 1);
    for eps in [Rational::new(1, 8), Rational::new(1, 2), Rational::from_integer(1)] {
        assert_eq!(genericity_sweep(&hom, eps, 4, &Property::Constant(true), 0).unwrap(), Rational::from_integer(1));
    }
}
