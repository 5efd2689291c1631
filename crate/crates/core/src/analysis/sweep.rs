use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;

use crate::actions::Homomorphism;
use crate::constructions::{orbits_within_blocks, splice};
use crate::error::{Error, Result};
use crate::finite_model::FullGroupElement;
use crate::free_words::ReducedWord;
use crate::rational::{fraction, Rational};
use crate::rng::{derive, streams};

use super::{core_check, folner_search, realizes_tau_fraction};

/// A predicate on homomorphisms tested by [`genericity_sweep`].
///
/// Text form: `folner:<l>:<R>`, `realizes:<m>:<τ comma list>:<R>`,
/// `corefree:<word>`, `periodic:<j>`, `always`, `never`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Property {
    /// Every orbit contains a `1/l`-Følner set found by [`folner_search`].
    Folner { l: usize, radius: usize },
    /// Every atom realizes `τ` within the radius.
    Realizes { m: usize, tau: Vec<usize>, radius: usize },
    /// The word acts non-trivially on every orbit.
    CoreFree { word: String },
    /// Every orbit lies in one level-`j` block.
    Periodic { level: u32 },
    Constant(bool),
}

impl Property {
    pub fn holds(&self, hom: &Homomorphism) -> Result<bool> {
        match self {
            Property::Folner { l, radius } => Ok(hom
                .orbits()
                .iter()
                .all(|o| folner_search(hom, o[0], *l, *radius).success)),
            Property::Realizes { m, tau, radius } => {
                Ok(realizes_tau_fraction(hom, *m, tau, *radius)? == Rational::from_integer(1))
            }
            Property::CoreFree { word } => {
                let g = ReducedWord::parse(hom.rank(), word)?;
                Ok(core_check(hom, &g)? == Rational::from_integer(0))
            }
            Property::Periodic { level } => orbits_within_blocks(hom, *level),
            Property::Constant(b) => Ok(*b),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Folner { l, radius } => write!(f, "folner:{l}:{radius}"),
            Property::Realizes { m, tau, radius } => {
                let tau: Vec<String> = tau.iter().map(|t| t.to_string()).collect();
                write!(f, "realizes:{m}:{}:{radius}", tau.join(","))
            }
            Property::CoreFree { word } => write!(f, "corefree:{word}"),
            Property::Periodic { level } => write!(f, "periodic:{level}"),
            Property::Constant(true) => write!(f, "always"),
            Property::Constant(false) => write!(f, "never"),
        }
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("unknown property {s:?}"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["always"] => Ok(Property::Constant(true)),
            ["never"] => Ok(Property::Constant(false)),
            ["folner", l, r] => Ok(Property::Folner { l: num(l)?, radius: num(r)? }),
            ["realizes", m, tau, r] => Ok(Property::Realizes {
                m: num(m)?,
                tau: tau.split(',').map(num).collect::<Result<_>>()?,
                radius: num(r)?,
            }),
            ["corefree", w] => Ok(Property::CoreFree { word: w.trim().to_string() }),
            ["periodic", j] => Ok(Property::Periodic {
                level: num(j)? as u32,
            }),
            _ => Err(bad()),
        }
    }
}

/// One draw from the perturbation ball around `α`: `β(s1) = α(s1)`, and
/// each other generator is spliced against a random element of `[E]` on a
/// random set of `⌊εN/2⌋` atoms, so `d(α, β) ≤ ε`.
pub fn sample_perturbation<R: Rng + ?Sized>(hom: &Homomorphism, epsilon: Rational, rng: &mut R) -> Result<Homomorphism> {
    let space = hom.space();
    let n = hom.n_atoms();
    let scaled = epsilon * Rational::from_integer(n as i64) / Rational::from_integer(2);
    let k = (scaled.floor().to_integer().max(0) as usize).min(n);
    let mut gens = vec![hom.gen(0).clone()];
    for g in &hom.gens()[1..] {
        let mut set = sample(rng, n, k).into_vec();
        set.sort_unstable();
        let target = FullGroupElement::random_in(space, rng);
        gens.push(splice(space, g, &set, &target)?);
    }
    Homomorphism::new(space.clone(), gens)
}

/// Fraction of `samples` perturbations of `α` within `ε` that satisfy the
/// property. Sample `i` draws from its own stream, so the result does not
/// depend on the worker count.
pub fn genericity_sweep(
    hom: &Homomorphism,
    epsilon: Rational,
    samples: usize,
    property: &Property,
    seed: u64,
) -> Result<Rational> {
    if samples == 0 {
        return Err(Error::Precondition("a sweep needs at least one sample".into()));
    }
    let outcomes: Vec<bool> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = derive(seed, streams::SWEEP, i as u64);
            property.holds(&sample_perturbation(hom, epsilon, &mut rng)?)
        })
        .collect::<Result<_>>()?;
    Ok(fraction(outcomes.iter().filter(|&&b| b).count(), samples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::hom_metric;
    use crate::finite_model::FiniteSpace;

    fn lean(log2: u32, rank: usize) -> Homomorphism {
        let space = FiniteSpace::dyadic(log2).unwrap();
        let n = space.n_atoms();
        let mut rng = derive(11, streams::TEST_FIXTURE, 0);
        let mut gens = vec![FullGroupElement::odometer(n)];
        gens.extend((1..rank).map(|_| FullGroupElement::random_in(&space, &mut rng)));
        Homomorphism::new(space, gens).unwrap()
    }

    #[test]
    fn constant_predicates() {
        let h = lean(5, 2);
        let eps = Rational::new(1, 4);
        assert_eq!(genericity_sweep(&h, eps, 5, &Property::Constant(true), 1).unwrap(), Rational::from_integer(1));
        assert_eq!(genericity_sweep(&h, eps, 5, &Property::Constant(false), 1).unwrap(), Rational::from_integer(0));
        assert!(genericity_sweep(&h, eps, 0, &Property::Constant(true), 1).is_err());
    }

    #[test]
    fn samples_stay_in_ball() {
        let h = lean(7, 3);
        for i in 0..20 {
            let eps = Rational::new(i + 1, 20);
            let mut rng = derive(4, streams::SWEEP, i as u64);
            let b = sample_perturbation(&h, eps, &mut rng).unwrap();
            assert_eq!(b.gen(0), h.gen(0));
            assert!(hom_metric(&h, &b).unwrap() <= eps);
        }
    }

    #[test]
    fn reproducible() {
        let h = lean(6, 2);
        let p: Property = "realizes:2:1,0:12".parse().unwrap();
        let eps = Rational::new(1, 2);
        let a = genericity_sweep(&h, eps, 8, &p, 99).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| genericity_sweep(&h, eps, 8, &p, 99)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn property_text_round_trip() {
        for s in ["folner:3:2", "realizes:3:2,0,1:40", "corefree:s1 s2^-1", "periodic:4", "always", "never"] {
            assert_eq!(s.parse::<Property>().unwrap().to_string(), s);
        }
        assert!("bogus:1".parse::<Property>().is_err());
    }
}
