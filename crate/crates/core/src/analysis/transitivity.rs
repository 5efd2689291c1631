//! Transitivity degree and symmetric-group detection through a
//! Schreier–Sims stabilizer chain on a single orbit.

use crate::actions::Homomorphism;
use crate::error::{Error, Result};

pub const TRANSITIVITY_GUARD: usize = 12;
pub const SYMMETRIC_GUARD: usize = 8;

type Perm = Vec<usize>;

fn mul(a: &Perm, b: &Perm) -> Perm {
    // a ∘ b
    b.iter().map(|&y| a[y]).collect()
}

fn inv(a: &Perm) -> Perm {
    let mut out = vec![0; a.len()];
    for (x, &y) in a.iter().enumerate() {
        out[y] = x;
    }
    out
}

fn is_id(a: &Perm) -> bool {
    a.iter().enumerate().all(|(x, &y)| x == y)
}

struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

/// Stabilizer chain of a permutation group of degree `n`.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators.iter().filter(|g| !is_id(g)) {
            chain.add(0, g.clone());
        }
        chain.complete();
        chain
    }

    fn sift(&self, start: usize, mut g: Perm) -> (Perm, usize) {
        for j in start..self.levels.len() {
            let level = &self.levels[j];
            match &level.transversal[g[level.base]] {
                Some(u) => g = mul(&inv(u), &g),
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    fn add(&mut self, j: usize, h: Perm) {
        if j == self.levels.len() {
            let base = (0..self.degree).find(|&x| h[x] != x).expect("non-identity");
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal: Vec::new(),
                orbit: Vec::new(),
            });
        }
        self.levels[j].gens.push(h);
    }

    fn rebuild(&mut self, j: usize) {
        let gens: Vec<Perm> = self.levels[j..].iter().flat_map(|l| l.gens.clone()).collect();
        let level = &mut self.levels[j];
        let mut transversal = vec![None; self.degree];
        transversal[level.base] = Some((0..self.degree).collect::<Perm>());
        let mut orbit = vec![level.base];
        let mut k = 0;
        while k < orbit.len() {
            let p = orbit[k];
            let u = transversal[p].clone().unwrap();
            for s in &gens {
                let q = s[p];
                if transversal[q].is_none() {
                    transversal[q] = Some(mul(s, &u));
                    orbit.push(q);
                }
            }
            k += 1;
        }
        level.transversal = transversal;
        level.orbit = orbit;
    }

    /// Adds sifted Schreier generators until every level is closed.
    fn complete(&mut self) {
        'restart: loop {
            for j in (0..self.levels.len()).rev() {
                self.rebuild(j);
                let gens: Vec<Perm> = self.levels[j..].iter().flat_map(|l| l.gens.clone()).collect();
                let orbit = self.levels[j].orbit.clone();
                for &p in &orbit {
                    let up = self.levels[j].transversal[p].clone().unwrap();
                    for s in &gens {
                        let q = s[p];
                        let uq = self.levels[j].transversal[q].clone().unwrap();
                        let schreier = mul(&inv(&uq), &mul(s, &up));
                        let (h, k) = self.sift(j + 1, schreier);
                        if !is_id(&h) {
                            self.add(k, h);
                            continue 'restart;
                        }
                    }
                }
            }
            return;
        }
    }

    /// Sizes of the basic orbits.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.orbit_sizes().iter().map(|&s| s as u128).product()
    }

    /// Whether the group is `k`-transitive, assuming it is transitive on
    /// `0..degree`.
    pub fn is_k_transitive(&self, k: usize) -> bool {
        let sizes = self.orbit_sizes();
        (0..k).all(|i| {
            let size = sizes.get(i).copied().unwrap_or(1);
            size == self.degree - i
        })
    }
}

/// Generators restricted to `orbit`, relabelled `0..orbit.len()`.
pub(crate) fn restricted_generators(hom: &Homomorphism, orbit: &[usize]) -> Vec<Perm> {
    let pos: std::collections::HashMap<usize, usize> =
        orbit.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    hom.gens()
        .iter()
        .map(|g| orbit.iter().map(|&x| pos[&g.apply(x)]).collect())
        .collect()
}

/// Largest `k ≤ k_max` such that the action on the orbit of `x` is
/// transitive on ordered `k`-tuples of distinct points.
pub fn transitivity_degree(hom: &Homomorphism, x: usize, k_max: usize) -> Result<usize> {
    let orbit = hom.orbit(x);
    let n = orbit.len();
    if n > TRANSITIVITY_GUARD {
        return Err(Error::OrbitTooLarge {
            size: n,
            guard: TRANSITIVITY_GUARD,
        });
    }
    if k_max == 0 || k_max > n {
        return Err(Error::Precondition(format!("k_max {k_max} outside 1..={n}")));
    }
    let chain = StabilizerChain::new(n, &restricted_generators(hom, &orbit));
    Ok((1..=k_max).take_while(|&k| chain.is_k_transitive(k)).last().unwrap_or(1))
}

/// Outcome of [`generates_classwise_symmetric`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClasswiseSymmetry {
    /// The generated group restricts to the full symmetric group on every class.
    pub symmetric: bool,
    /// When symmetric, every orbit has transitivity degree equal to its size.
    pub degrees_consistent: bool,
}

/// Whether the generators restricted to each class generate its full
/// symmetric group.
pub fn generates_classwise_symmetric(hom: &Homomorphism) -> Result<ClasswiseSymmetry> {
    let orbits = hom.orbits();
    if let Some(o) = orbits.iter().find(|o| o.len() > SYMMETRIC_GUARD) {
        return Err(Error::OrbitTooLarge {
            size: o.len(),
            guard: SYMMETRIC_GUARD,
        });
    }
    let labels = hom.orbit_labels();
    let space = hom.space();
    let mut symmetric = true;
    for class in space.classes() {
        if class.iter().any(|&x| labels[x] != labels[class[0]]) {
            symmetric = false;
            break;
        }
        let n = class.len();
        let chain = StabilizerChain::new(n, &restricted_generators(hom, class));
        let factorial: u128 = (1..=n as u128).product();
        if chain.order() != factorial {
            symmetric = false;
            break;
        }
    }
    let mut degrees_consistent = true;
    if symmetric {
        for o in &orbits {
            degrees_consistent &= transitivity_degree(hom, o[0], o.len())? == o.len();
        }
    }
    Ok(ClasswiseSymmetry {
        symmetric,
        degrees_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_model::{FiniteSpace, FullGroupElement};

    fn hom(n: usize, gens: Vec<FullGroupElement>) -> Homomorphism {
        Homomorphism::new(FiniteSpace::single_class(n).unwrap(), gens).unwrap()
    }

    fn sym(n: usize) -> Homomorphism {
        hom(n, vec![FullGroupElement::odometer(n), FullGroupElement::transposition(n, 0, 1)])
    }

    #[test]
    fn chain_orders() {
        for n in 2..=7 {
            let h = sym(n);
            let chain = StabilizerChain::new(n, &restricted_generators(&h, &h.orbit(0)));
            assert_eq!(chain.order(), (1..=n as u128).product::<u128>());
        }
        let c = hom(6, vec![FullGroupElement::odometer(6)]);
        assert_eq!(StabilizerChain::new(6, &restricted_generators(&c, &c.orbit(0))).order(), 6);
        // A5 = <(0 1 2 3 4), (0 1 2)>
        let a5 = hom(
            5,
            vec![
                FullGroupElement::odometer(5),
                FullGroupElement::from_cycles(5, &[vec![0, 1, 2]]).unwrap(),
            ],
        );
        let chain = StabilizerChain::new(5, &restricted_generators(&a5, &a5.orbit(0)));
        assert_eq!(chain.order(), 60);
        assert_eq!(transitivity_degree(&a5, 0, 5).unwrap(), 3);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(transitivity_degree(&sym(6), 0, 6).unwrap(), 6);
        assert_eq!(transitivity_degree(&sym(6), 0, 4).unwrap(), 4);
        let c = hom(5, vec![FullGroupElement::odometer(5)]);
        assert_eq!(transitivity_degree(&c, 2, 5).unwrap(), 1);
        let id = Homomorphism::trivial(FiniteSpace::single_class(3).unwrap(), 2).unwrap();
        assert_eq!(transitivity_degree(&id, 1, 1).unwrap(), 1);
        assert!(matches!(
            transitivity_degree(&sym(13), 0, 2),
            Err(Error::OrbitTooLarge { .. })
        ));
        assert!(transitivity_degree(&sym(4), 0, 5).is_err());
    }

    #[test]
    fn symmetric_examples() {
        let s3 = sym(3);
        let res = generates_classwise_symmetric(&s3).unwrap();
        assert!(res.symmetric && res.degrees_consistent);
        assert_eq!(transitivity_degree(&s3, 0, 3).unwrap(), 3);

        let c4 = hom(4, vec![FullGroupElement::odometer(4)]);
        assert!(!generates_classwise_symmetric(&c4).unwrap().symmetric);

        let singletons = Homomorphism::trivial(FiniteSpace::from_labels(&[0, 1, 2]).unwrap(), 1).unwrap();
        assert!(generates_classwise_symmetric(&singletons).unwrap().symmetric);

        // transitive on orbits but the class holds two orbits
        let split = hom(4, vec![FullGroupElement::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap()]);
        assert!(!generates_classwise_symmetric(&split).unwrap().symmetric);

        assert!(generates_classwise_symmetric(&sym(9)).is_err());
    }
}
