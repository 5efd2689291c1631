use std::fmt::Write as _;

use rayon::prelude::*;

use super::Homomorphism;
use crate::free_words::{reduce, Ball, ReducedWord};

/// The words of a ball that fix a given atom, as a bitset over the
/// length-lex ball enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StabilizerTrace {
    radius: usize,
    rank: usize,
    bits: Vec<u64>,
}

impl StabilizerTrace {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether ball word `index` fixes the atom.
    #[inline]
    pub fn contains(&self, index: usize) -> bool {
        self.bits[index / 64] >> (index % 64) & 1 == 1
    }

    pub fn contains_word(&self, ball: &Ball, w: &ReducedWord) -> bool {
        ball.index_of(w).is_some_and(|i| self.contains(i))
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Fixed words in canonical order.
    pub fn fixed_words(&self, ball: &Ball) -> Vec<ReducedWord> {
        (0..ball.len())
            .filter(|&i| self.contains(i))
            .map(|i| ball.word(i).clone())
            .collect()
    }

    /// Little-endian hex of the bitset: byte `k` holds words `8k..8k+7`,
    /// lowest bit first.
    pub fn to_hex(&self, ball_len: usize) -> String {
        let n_bytes = ball_len.div_ceil(8);
        let mut out = String::with_capacity(2 * n_bytes);
        for k in 0..n_bytes {
            let byte = (self.bits[k / 8] >> (8 * (k % 8))) as u8;
            write!(out, "{byte:02x}").unwrap();
        }
        out
    }

    /// Identity, inverse closure and partial product closure.
    pub fn check_invariants(&self, ball: &Ball) -> Result<(), String> {
        if !self.contains(0) {
            return Err("empty word missing".into());
        }
        let fixed = self.fixed_words(ball);
        for u in &fixed {
            if !self.contains_word(ball, &u.inverse()) {
                return Err(format!("inverse of {u} missing"));
            }
        }
        for u in &fixed {
            for v in &fixed {
                let uv = u.mul(v);
                if uv.len() <= self.radius && !self.contains_word(ball, &uv) {
                    return Err(format!("product {u} · {v} = {uv} missing"));
                }
            }
        }
        Ok(())
    }
}

/// Computes stabilizer traces for a fixed rank and radius.
#[derive(Clone, Debug)]
pub struct Tracer {
    ball: Ball,
}

impl Tracer {
    pub fn new(rank: usize, radius: usize) -> Self {
        Tracer {
            ball: Ball::new(rank, radius),
        }
    }

    pub fn ball(&self) -> &Ball {
        &self.ball
    }

    pub fn radius(&self) -> usize {
        self.ball.radius()
    }

    /// Images `α(w)(x)` of every ball word, in ball order.
    pub fn images_into(&self, hom: &Homomorphism, x: usize, images: &mut Vec<usize>) {
        assert_eq!(hom.rank(), self.ball.rank(), "tracer rank differs from homomorphism rank");
        images.clear();
        images.push(x);
        for i in 1..self.ball.len() {
            let y = images[self.ball.tail(i)];
            images.push(hom.apply_letter(self.ball.head(i), y));
        }
    }

    fn trace_with(&self, hom: &Homomorphism, x: usize, images: &mut Vec<usize>) -> StabilizerTrace {
        self.images_into(hom, x, images);
        let mut bits = vec![0u64; self.ball.len().div_ceil(64)];
        for (i, &y) in images.iter().enumerate() {
            if y == x {
                bits[i / 64] |= 1 << (i % 64);
            }
        }
        StabilizerTrace {
            radius: self.ball.radius(),
            rank: self.ball.rank(),
            bits,
        }
    }

    pub fn trace(&self, hom: &Homomorphism, x: usize) -> StabilizerTrace {
        self.trace_with(hom, x, &mut Vec::with_capacity(self.ball.len()))
    }

    /// Traces of all atoms, computed in parallel; the result is indexed by
    /// atom and does not depend on scheduling.
    pub fn trace_all(&self, hom: &Homomorphism) -> Vec<StabilizerTrace> {
        (0..hom.n_atoms())
            .into_par_iter()
            .map_init(
                || Vec::with_capacity(self.ball.len()),
                |buf, x| self.trace_with(hom, x, buf),
            )
            .collect()
    }

    /// Trace of `x` under conjugated words: `{w : α(a⁻¹ w a)(x) = x}`,
    /// evaluated letter by letter.
    pub fn conjugated_trace(
        &self,
        hom: &Homomorphism,
        letter: crate::free_words::Letter,
        x: usize,
        images: &mut Vec<usize>,
    ) -> StabilizerTrace {
        let y = hom.apply_letter(letter, x);
        self.images_into(hom, y, images);
        let mut bits = vec![0u64; self.ball.len().div_ceil(64)];
        for (i, &z) in images.iter().enumerate() {
            if hom.apply_letter(-letter, z) == x {
                bits[i / 64] |= 1 << (i % 64);
            }
        }
        StabilizerTrace {
            radius: self.ball.radius(),
            rank: self.ball.rank(),
            bits,
        }
    }
}

/// `{w ∈ B(R) : α(w)(x) = x}`.
pub fn stabilizer_trace(hom: &Homomorphism, x: usize, radius: usize) -> StabilizerTrace {
    Tracer::new(hom.rank(), radius).trace(hom, x)
}

/// Word `v⁻¹ · s · u` reduced, used to read adjacency out of a trace.
pub(crate) fn bridge(u: &ReducedWord, letter: i32, v: &ReducedWord) -> ReducedWord {
    let s = reduce(u.rank(), &[letter]).expect("letter within rank");
    v.inverse().mul(&s).mul(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_model::{FiniteSpace, FullGroupElement};
    use crate::free_words::ball;

    #[test]
    fn trivial_action_fixes_whole_ball() {
        let h = Homomorphism::trivial(FiniteSpace::single_class(5).unwrap(), 2).unwrap();
        let t = stabilizer_trace(&h, 3, 2);
        assert_eq!(t.count(), 17);
    }

    #[test]
    fn cycle_generator_moves_everything() {
        let space = FiniteSpace::single_class(4).unwrap();
        let h = Homomorphism::new(
            space,
            vec![FullGroupElement::odometer(4), FullGroupElement::identity(4)],
        )
        .unwrap();
        let tracer = Tracer::new(2, 1);
        let words: Vec<String> = tracer
            .trace(&h, 0)
            .fixed_words(tracer.ball())
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(words, ["e", "s2", "s2^-1"]);
    }

    /// Rank-2 action on 17 atoms that is the Cayley tree of radius 2 around
    /// atom 0, closed up by pairing leaves arbitrarily.
    fn tree_action() -> Homomorphism {
        let words = ball(2, 2);
        let n = words.len();
        let mut s = [vec![usize::MAX; n], vec![usize::MAX; n]];
        // edge u --a--> a·u for every word u of length ≤ 1
        for (i, u) in words.iter().enumerate() {
            if u.len() > 1 {
                continue;
            }
            for a in [1, -1, 2, -2] {
                let au = reduce(2, &[a]).unwrap().mul(u);
                let j = words.iter().position(|w| *w == au).unwrap();
                let g = (a.unsigned_abs() - 1) as usize;
                if a > 0 {
                    s[g][i] = j;
                } else {
                    s[g][j] = i;
                }
            }
        }
        // complete each partial map to a bijection in index order
        let gens = s
            .into_iter()
            .map(|mut f| {
                let mut free_targets: Vec<usize> =
                    (0..n).filter(|y| !f.contains(y)).collect::<Vec<_>>();
                free_targets.reverse();
                for slot in f.iter_mut() {
                    if *slot == usize::MAX {
                        *slot = free_targets.pop().unwrap();
                    }
                }
                FullGroupElement::from_forward(f).unwrap()
            })
            .collect();
        Homomorphism::new(FiniteSpace::single_class(n).unwrap(), gens).unwrap()
    }

    #[test]
    fn free_action_at_root_has_trivial_trace() {
        let h = tree_action();
        let t = stabilizer_trace(&h, 0, 2);
        assert_eq!(t.count(), 1);
        assert!(t.contains(0));
        // brute-force: distinct ball words reach distinct atoms
        let mut seen: Vec<usize> = ball(2, 2).iter().map(|w| h.evaluate(w, 0)).collect();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 17);
    }

    #[test]
    fn traces_satisfy_closure() {
        let mut r = crate::rng::derive(11, crate::rng::streams::TEST_FIXTURE, 0);
        let space = FiniteSpace::single_class(12).unwrap();
        let gens = (0..2).map(|_| FullGroupElement::random_in(&space, &mut r)).collect();
        let h = Homomorphism::new(space, gens).unwrap();
        let tracer = Tracer::new(2, 4);
        for t in tracer.trace_all(&h) {
            t.check_invariants(tracer.ball()).unwrap();
        }
    }

    #[test]
    fn hex_layout() {
        let h = Homomorphism::trivial(FiniteSpace::single_class(2).unwrap(), 2).unwrap();
        let t = stabilizer_trace(&h, 0, 1);
        assert_eq!(t.to_hex(5), "1f");
        let t = stabilizer_trace(&h, 0, 2);
        assert_eq!(t.to_hex(17), "ffff01");
    }
}
