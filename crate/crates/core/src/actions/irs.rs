use std::collections::BTreeMap;

use rayon::prelude::*;

use super::trace::{StabilizerTrace, Tracer};
use super::Homomorphism;
use crate::free_words::letters;
use crate::rational::{self, Rational};

/// Distribution of radius-`R` stabilizer traces over the atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmpiricalIRS {
    radius: usize,
    rank: usize,
    n_atoms: usize,
    counts: BTreeMap<StabilizerTrace, usize>,
}

impl EmpiricalIRS {
    pub fn from_traces(radius: usize, rank: usize, traces: &[StabilizerTrace]) -> Self {
        EmpiricalIRS {
            radius,
            rank,
            n_atoms: traces.len(),
            counts: histogram(traces),
        }
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn support_size(&self) -> usize {
        self.counts.len()
    }

    /// Atom counts per trace; weights are these over `n_atoms`.
    pub fn counts(&self) -> &BTreeMap<StabilizerTrace, usize> {
        &self.counts
    }

    pub fn weights(&self) -> BTreeMap<StabilizerTrace, Rational> {
        self.counts
            .iter()
            .map(|(t, &c)| (t.clone(), rational::fraction(c, self.n_atoms)))
            .collect()
    }

    pub fn weight(&self, trace: &StabilizerTrace) -> Rational {
        rational::fraction(self.counts.get(trace).copied().unwrap_or(0), self.n_atoms)
    }

    pub fn total_weight(&self) -> Rational {
        self.weights().values().sum()
    }

    /// Rows `trace_hex,weight_numerator,weight_denominator`.
    pub fn to_csv(&self) -> String {
        let ball_len = crate::free_words::ball_size(self.rank, self.radius);
        let mut out = String::from("trace_hex,weight_numerator,weight_denominator\n");
        for (t, w) in self.weights() {
            out.push_str(&format!("{},{},{}\n", t.to_hex(ball_len), w.numer(), w.denom()));
        }
        out
    }
}

fn histogram(traces: &[StabilizerTrace]) -> BTreeMap<StabilizerTrace, usize> {
    let mut counts = BTreeMap::new();
    for t in traces {
        *counts.entry(t.clone()).or_insert(0) += 1;
    }
    counts
}

/// Weight of a trace is the fraction of atoms producing it.
pub fn empirical_irs(hom: &Homomorphism, radius: usize) -> EmpiricalIRS {
    let tracer = Tracer::new(hom.rank(), radius);
    EmpiricalIRS::from_traces(radius, hom.rank(), &tracer.trace_all(hom))
}

/// Largest total-variation distance, over signed generators `a`, between
/// the law of `x ↦ trace_R(x)` and the law of
/// `x ↦ {w ∈ B(R) : α(a⁻¹ w a)(x) = x}`. Invariance of the stabilizer
/// distribution makes this zero for every action.
pub fn invariance_defect(hom: &Homomorphism, radius: usize) -> Rational {
    let tracer = Tracer::new(hom.rank(), radius);
    let plain = histogram(&tracer.trace_all(hom));
    let n = hom.n_atoms();
    letters(hom.rank())
        .into_iter()
        .map(|a| {
            let conjugated: Vec<StabilizerTrace> = (0..n)
                .into_par_iter()
                .map_init(Vec::new, |buf, x| tracer.conjugated_trace(hom, a, x, buf))
                .collect();
            let twisted = histogram(&conjugated);
            let mut keys: Vec<&StabilizerTrace> = plain.keys().chain(twisted.keys()).collect();
            keys.sort();
            keys.dedup();
            let l1: usize = keys
                .iter()
                .map(|t| {
                    let p = plain.get(*t).copied().unwrap_or(0);
                    let q = twisted.get(*t).copied().unwrap_or(0);
                    p.abs_diff(q)
                })
                .sum();
            rational::fraction(l1, 2 * n)
        })
        .max()
        .unwrap_or_else(rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_model::{FiniteSpace, FullGroupElement};

    #[test]
    fn trivial_action_is_point_mass_on_ball() {
        let h = Homomorphism::trivial(FiniteSpace::single_class(8).unwrap(), 2).unwrap();
        let irs = empirical_irs(&h, 2);
        assert_eq!(irs.support_size(), 1);
        let (t, &c) = irs.counts().iter().next().unwrap();
        assert_eq!(t.count(), 17);
        assert_eq!(c, 8);
        assert_eq!(invariance_defect(&h, 3), rational::zero());
    }

    #[test]
    fn free_action_is_point_mass_on_identity() {
        // a 20-cycle has no relation of length ≤ 3 at any point
        let g = FullGroupElement::odometer(20);
        let h = Homomorphism::new(FiniteSpace::single_class(20).unwrap(), vec![g]).unwrap();
        let irs = empirical_irs(&h, 3);
        assert_eq!(irs.support_size(), 1);
        assert_eq!(irs.counts().keys().next().unwrap().count(), 1);
    }

    #[test]
    fn two_orbit_example() {
        // s1 = (0 1)(2 3)(4 5), s2 = id. At radius 1 every atom fixes e, s2, s2^-1
        // and no atom fixes s1, so the law is a single trace.
        let space = FiniteSpace::single_class(6).unwrap();
        let s1 = FullGroupElement::from_cycles(6, &[vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let h = Homomorphism::new(space.clone(), vec![s1, FullGroupElement::identity(6)]).unwrap();
        let irs = empirical_irs(&h, 1);
        assert_eq!(irs.support_size(), 1);
        assert_eq!(irs.total_weight(), rational::one());
        // with s2 = (0 2) the atoms 0, 2 fix neither s2 nor its inverse
        let s2 = FullGroupElement::transposition(6, 0, 2);
        let h = h.with_generator(1, s2).unwrap();
        let irs = empirical_irs(&h, 1);
        let mut weights: Vec<Rational> = irs.weights().into_values().collect();
        weights.sort();
        assert_eq!(weights, vec![Rational::new(1, 3), Rational::new(2, 3)]);
        assert_eq!(irs.total_weight(), rational::one());
    }

    #[test]
    fn defect_zero_at_radius_zero() {
        let mut r = crate::rng::derive(9, crate::rng::streams::TEST_FIXTURE, 0);
        let space = FiniteSpace::single_class(33).unwrap();
        let gens = (0..3).map(|_| FullGroupElement::random_in(&space, &mut r)).collect();
        let h = Homomorphism::new(space, gens).unwrap();
        assert_eq!(invariance_defect(&h, 0), rational::zero());
        assert_eq!(invariance_defect(&h, 2), rational::zero());
    }

    #[test]
    fn csv_rows_sum_to_one() {
        let space = FiniteSpace::single_class(6).unwrap();
        let h = Homomorphism::new(
            space,
            vec![FullGroupElement::transposition(6, 0, 1), FullGroupElement::identity(6)],
        )
        .unwrap();
        let csv = empirical_irs(&h, 1).to_csv();
        let rows: Vec<&str> = csv.lines().skip(1).collect();
        assert_eq!(rows.len(), 2);
        let total: Rational = rows
            .iter()
            .map(|r| {
                let f: Vec<i64> = r.split(',').skip(1).map(|v| v.parse().unwrap()).collect();
                Rational::new(f[0], f[1])
            })
            .sum();
        assert_eq!(total, rational::one());
    }
}
