use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use super::trace::{bridge, StabilizerTrace, Tracer};
use super::Homomorphism;
use crate::error::Result;
use crate::free_words::{letters, Letter};

/// A rooted, generator-labelled ball of a Schreier graph.
///
/// Vertices are the points at word distance at most `radius` from the
/// root; edges are all labelled edges between two such vertices, so every
/// vertex strictly inside the ball carries one outgoing edge per signed
/// generator. Vertex labels are atoms for balls read off an action, and
/// ball-word indices for balls rebuilt from a trace code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierBall {
    pub root: usize,
    pub radius: usize,
    pub rank: usize,
    /// Vertices in breadth-first order from the root.
    pub vertices: Vec<usize>,
    pub distance: BTreeMap<usize, usize>,
    /// `(v, letter, v')` with `v' = letter · v`, for every signed letter.
    pub edges: Vec<(usize, Letter, usize)>,
}

impl SchreierBall {
    /// Ball around `x` read directly from the action.
    pub fn from_action(hom: &Homomorphism, x: usize, radius: usize) -> Self {
        let alphabet = letters(hom.rank());
        let mut distance = BTreeMap::from([(x, 0)]);
        let mut vertices = vec![x];
        let mut queue = VecDeque::from([x]);
        while let Some(v) = queue.pop_front() {
            let d = distance[&v];
            if d == radius {
                continue;
            }
            for &a in &alphabet {
                let w = hom.apply_letter(a, v);
                if let std::collections::btree_map::Entry::Vacant(e) = distance.entry(w) {
                    e.insert(d + 1);
                    vertices.push(w);
                    queue.push_back(w);
                }
            }
        }
        let mut edges = Vec::new();
        for &v in &vertices {
            for &a in &alphabet {
                let w = hom.apply_letter(a, v);
                if distance.contains_key(&w) {
                    edges.push((v, a, w));
                }
            }
        }
        SchreierBall {
            root: x,
            radius,
            rank: hom.rank(),
            vertices,
            distance,
            edges,
        }
    }

    /// Ball rebuilt from a trace at radius `2·radius + 1` alone.
    ///
    /// Words `u, v` of length ≤ `radius` reach the same vertex iff `v⁻¹u`
    /// fixes the root, and `u --a--> v` iff `v⁻¹ a u` does; both words have
    /// length at most `2·radius + 1`. Each vertex is labelled by the index of
    /// its first word in length-lex order.
    pub fn from_code(code: &StabilizerTrace, tracer: &Tracer, radius: usize) -> Self {
        let ball = tracer.ball();
        assert_eq!(code.radius(), 2 * radius + 1, "code must have radius 2R+1");
        assert_eq!(tracer.radius(), code.radius(), "tracer radius differs from code radius");
        let inner: Vec<usize> = (0..ball.len()).filter(|&i| ball.word(i).len() <= radius).collect();
        let mut reps: Vec<usize> = Vec::new();
        for &i in &inner {
            let u = ball.word(i);
            let known = reps
                .iter()
                .any(|&j| code.contains_word(ball, &ball.word(j).inverse().mul(u)));
            if !known {
                reps.push(i);
            }
        }
        let distance: BTreeMap<usize, usize> =
            reps.iter().map(|&i| (i, ball.word(i).len())).collect();
        let mut edges = Vec::new();
        for &i in &reps {
            let u = ball.word(i);
            for a in letters(ball.rank()) {
                let target = reps
                    .iter()
                    .copied()
                    .find(|&j| code.contains_word(ball, &bridge(u, a, ball.word(j))));
                if let Some(j) = target {
                    edges.push((i, a, j));
                }
            }
        }
        SchreierBall {
            root: 0,
            radius,
            rank: ball.rank(),
            vertices: reps,
            distance,
            edges,
        }
    }

    /// Every vertex at distance < radius has one outgoing edge per signed
    /// letter, and each edge has its reverse with the inverse label.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut out: HashMap<(usize, Letter), usize> = HashMap::new();
        for &(v, a, w) in &self.edges {
            if out.insert((v, a), w).is_some() {
                return Err(format!("two {a}-edges out of {v}"));
            }
        }
        for &(v, a, w) in &self.edges {
            if out.get(&(w, -a)) != Some(&v) {
                return Err(format!("edge {v} -{a}-> {w} has no reverse"));
            }
        }
        for &v in &self.vertices {
            if self.distance[&v] < self.radius {
                for a in letters(self.rank) {
                    if !out.contains_key(&(v, a)) {
                        return Err(format!("interior vertex {v} lacks a {a}-edge"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Graphviz text. Only positive generators are drawn; the inverse edge
    /// is the same arrow read backwards.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph schreier {\n");
        writeln!(out, "  {} [shape=doublecircle];", self.root).unwrap();
        for &v in &self.vertices {
            if v != self.root {
                writeln!(out, "  {v};").unwrap();
            }
        }
        for &(v, a, w) in &self.edges {
            if a > 0 {
                writeln!(out, "  {v} -> {w} [label=\"s{a}\"];").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Ball around `x` read from the action.
pub fn schreier_ball(hom: &Homomorphism, x: usize, radius: usize) -> SchreierBall {
    SchreierBall::from_action(hom, x, radius)
}

/// Radius-`R` balls at `(α, x)` and `(β, y)` agree as rooted labelled
/// graphs iff the stabilizer traces agree at radius `2R + 1`.
pub fn balls_isomorphic(
    a: &Homomorphism,
    x: usize,
    b: &Homomorphism,
    y: usize,
    radius: usize,
) -> Result<bool> {
    if a.rank() != b.rank() {
        return Err(crate::error::Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    let tracer = Tracer::new(a.rank(), 2 * radius + 1);
    Ok(tracer.trace(a, x) == tracer.trace(b, y))
}

/// Root- and label-preserving vertex bijection between two balls, found by
/// walking edges from the roots, or `None` when none exists.
pub fn explicit_isomorphism(p: &SchreierBall, q: &SchreierBall) -> Option<BTreeMap<usize, usize>> {
    if p.rank != q.rank || p.vertices.len() != q.vertices.len() || p.edges.len() != q.edges.len() {
        return None;
    }
    let out_p: HashMap<(usize, Letter), usize> = p.edges.iter().map(|&(v, a, w)| ((v, a), w)).collect();
    let out_q: HashMap<(usize, Letter), usize> = q.edges.iter().map(|&(v, a, w)| ((v, a), w)).collect();
    let mut map = BTreeMap::from([(p.root, q.root)]);
    let mut queue = VecDeque::from([p.root]);
    while let Some(v) = queue.pop_front() {
        let fv = map[&v];
        for a in letters(p.rank) {
            match (out_p.get(&(v, a)), out_q.get(&(fv, a))) {
                (None, None) => {}
                (Some(&w), Some(&fw)) => match map.get(&w) {
                    Some(&m) if m != fw => return None,
                    Some(_) => {}
                    None => {
                        map.insert(w, fw);
                        queue.push_back(w);
                    }
                },
                _ => return None,
            }
        }
    }
    let mut image: Vec<usize> = map.values().copied().collect();
    image.sort_unstable();
    image.dedup();
    if map.len() != p.vertices.len() || image.len() != map.len() {
        return None;
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_model::{FiniteSpace, FullGroupElement};

    fn rank1(g: FullGroupElement) -> Homomorphism {
        Homomorphism::new(FiniteSpace::single_class(g.len()).unwrap(), vec![g]).unwrap()
    }

    #[test]
    fn self_isomorphic() {
        let h = rank1(FullGroupElement::odometer(8));
        assert!(balls_isomorphic(&h, 3, &h, 3, 2).unwrap());
    }

    #[test]
    fn cycle_is_vertex_transitive() {
        let h = rank1(FullGroupElement::odometer(12));
        for r in 0..6 {
            assert!(balls_isomorphic(&h, 0, &h, 5, r).unwrap());
        }
    }

    #[test]
    fn eight_cycle_vs_two_four_cycles() {
        let a = rank1(FullGroupElement::odometer(8));
        let b = rank1(FullGroupElement::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]).unwrap());
        assert!(!balls_isomorphic(&a, 0, &b, 0, 2).unwrap());
        // s1^4 is the distinguishing word at radius 5
        let tracer = Tracer::new(1, 5);
        let s4 = crate::free_words::reduce(1, &[1, 1, 1, 1]).unwrap();
        assert!(!tracer.trace(&a, 0).contains_word(tracer.ball(), &s4));
        assert!(tracer.trace(&b, 0).contains_word(tracer.ball(), &s4));
        // the materialized radius-2 balls differ too: 5 vs 4 vertices
        assert_eq!(schreier_ball(&a, 0, 2).vertices.len(), 5);
        assert_eq!(schreier_ball(&b, 0, 2).vertices.len(), 4);
    }

    #[test]
    fn code_rebuilds_action_ball() {
        let mut r = crate::rng::derive(5, crate::rng::streams::TEST_FIXTURE, 0);
        let space = FiniteSpace::single_class(9).unwrap();
        let gens = (0..2).map(|_| FullGroupElement::random_in(&space, &mut r)).collect();
        let h = Homomorphism::new(space, gens).unwrap();
        for radius in 0..3 {
            let tracer = Tracer::new(2, 2 * radius + 1);
            for x in 0..9 {
                let direct = schreier_ball(&h, x, radius);
                direct.check_invariants().unwrap();
                let coded = SchreierBall::from_code(&tracer.trace(&h, x), &tracer, radius);
                coded.check_invariants().unwrap();
                assert!(explicit_isomorphism(&direct, &coded).is_some(), "x={x} R={radius}");
            }
        }
    }

    #[test]
    fn dot_omits_inverse_edges() {
        let h = rank1(FullGroupElement::odometer(4));
        let dot = schreier_ball(&h, 0, 1).to_dot();
        assert!(dot.contains("0 -> 1 [label=\"s1\"]"));
        assert!(dot.contains("3 -> 0 [label=\"s1\"]"));
        assert!(!dot.contains("s-1"));
        assert_eq!(dot.matches("->").count(), 2);
    }
}
