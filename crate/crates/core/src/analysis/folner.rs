use std::collections::{BTreeSet, HashSet};

use crate::actions::{schreier_ball, Homomorphism};
use crate::finite_model::FullGroupElement;
use crate::rational::Rational;

/// `max_s |α(s)F Δ F| / |F|` over the generators. Zero for an empty set.
pub fn boundary_ratio(hom: &Homomorphism, set: &[usize]) -> Rational {
    if set.is_empty() {
        return Rational::from_integer(0);
    }
    let members: HashSet<usize> = set.iter().copied().collect();
    let worst = hom
        .gens()
        .iter()
        .map(|g| members.iter().filter(|&&x| !members.contains(&g.apply(x))).count())
        .max()
        .unwrap_or(0);
    // |gF Δ F| = 2 |F ∖ g⁻¹F|
    Rational::new(2 * worst as i64, members.len() as i64)
}

/// Outcome of [`folner_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FolnerSearch {
    pub orbit_size: usize,
    /// Best set found and its ratio; `None` when the orbit has no proper
    /// nonempty subset of at most half its size.
    pub best: Option<(Vec<usize>, Rational)>,
    /// Whether the best ratio is below `1/l`.
    pub success: bool,
}

/// Looks for a `1/l`-Følner set in the orbit of `x`.
///
/// Candidates are connected sets of at most half the orbit inside the
/// region formed by the radius-`R` Schreier ball and every `α(s_r)`-cycle
/// meeting it: each such cycle on its own, and the set grown greedily from
/// `x` by repeatedly adding the neighbour that keeps the ratio smallest.
pub fn folner_search(hom: &Homomorphism, x: usize, l: usize, radius: usize) -> FolnerSearch {
    let orbit = hom.orbit(x);
    let half = orbit.len() / 2;
    let threshold = Rational::new(1, l.max(1) as i64);
    if half == 0 {
        return FolnerSearch {
            orbit_size: orbit.len(),
            best: None,
            success: false,
        };
    }

    let n = hom.n_atoms();
    let ball = schreier_ball(hom, x, radius);
    let last = hom.gen(hom.rank() - 1);
    let mut region = vec![false; n];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for &v in &ball.vertices {
        if region[v] {
            continue;
        }
        let mut cycle = vec![v];
        let mut y = last.apply(v);
        while y != v {
            cycle.push(y);
            y = last.apply(y);
        }
        for &y in &cycle {
            region[y] = true;
        }
        cycles.push(cycle);
    }
    for &v in &ball.vertices {
        region[v] = true;
    }

    let mut best: Option<(Vec<usize>, Rational)> = None;
    let mut consider = |set: Vec<usize>, ratio: Rational| {
        if best.as_ref().is_none_or(|(_, b)| ratio < *b) {
            best = Some((set, ratio));
        }
    };
    for cycle in cycles {
        if cycle.len() <= half {
            let mut set = cycle;
            set.sort_unstable();
            let ratio = boundary_ratio(hom, &set);
            consider(set, ratio);
        }
    }
    let (mut grown, ratio) = grow_greedily(hom, x, &region, half);
    grown.sort_unstable();
    consider(grown, ratio);

    let success = best.as_ref().is_some_and(|(_, r)| *r < threshold);
    FolnerSearch {
        orbit_size: orbit.len(),
        best,
        success,
    }
}

/// Grows a connected set from `x` inside `region`, always adding the
/// frontier atom that keeps the worst out-count smallest, and returns the
/// best prefix of the growth order.
fn grow_greedily(hom: &Homomorphism, x: usize, region: &[bool], max_size: usize) -> (Vec<usize>, Rational) {
    let gens = hom.gens();
    let mut members = vec![false; hom.n_atoms()];
    members[x] = true;
    let mut order = vec![x];
    // out[g] = |{y ∈ F : g(y) ∉ F}|
    let mut out: Vec<usize> = gens.iter().map(|g| usize::from(g.apply(x) != x)).collect();
    let mut best = (1, Rational::from_integer(2 * *out.iter().max().unwrap_or(&0) as i64));
    let mut frontier = BTreeSet::new();
    let push_neighbours = |v: usize, members: &[bool], frontier: &mut BTreeSet<usize>| {
        for g in gens {
            for w in [g.apply(v), g.apply_inverse(v)] {
                if region[w] && !members[w] {
                    frontier.insert(w);
                }
            }
        }
    };
    push_neighbours(x, &members, &mut frontier);

    while order.len() < max_size {
        // every candidate yields the same size, so worst out-counts compare directly
        let mut pick: Option<(usize, usize)> = None;
        for &v in &frontier {
            let worst = gens
                .iter()
                .zip(&out)
                .map(|(g, &o)| o + gained(g, v, &members) - lost(g, v, &members))
                .max()
                .unwrap_or(0);
            if pick.is_none_or(|(_, w)| worst < w) {
                pick = Some((v, worst));
            }
        }
        let Some((v, worst)) = pick else { break };
        for (g, o) in gens.iter().zip(out.iter_mut()) {
            *o = *o + gained(g, v, &members) - lost(g, v, &members);
        }
        frontier.remove(&v);
        members[v] = true;
        order.push(v);
        push_neighbours(v, &members, &mut frontier);
        let ratio = Rational::new(2 * worst as i64, order.len() as i64);
        if ratio < best.1 {
            best = (order.len(), ratio);
        }
    }
    order.truncate(best.0);
    (order, best.1)
}

/// Change in `|{y ∈ F : g(y) ∉ F}|` from adding `v`: `v` itself may leave,
/// and its preimage stops leaving.
fn gained(g: &FullGroupElement, v: usize, members: &[bool]) -> usize {
    let w = g.apply(v);
    usize::from(w != v && !members[w])
}

fn lost(g: &FullGroupElement, v: usize, members: &[bool]) -> usize {
    let u = g.apply_inverse(v);
    usize::from(u != v && members[u])
}
