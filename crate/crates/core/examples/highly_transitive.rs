//! Rokhlin-tower surgery that makes `s2` realize every permutation of
//! three reference points, then a check that each atom sees it.

use irslab::actions::{hom_metric, Homomorphism};
use irslab::analysis::realizes_tau_fraction;
use irslab::constructions::build_ht_perturbation;
use irslab::finite_model::{FiniteSpace, FullGroupElement};
use irslab::rational::{to_text, Rational};
use irslab::rng::{derive, streams};

fn main() -> irslab::Result<()> {
    let space = FiniteSpace::dyadic(7)?;
    let n = space.n_atoms();
    let mut rng = derive(6, streams::TEST_FIXTURE, 0);
    let alpha = Homomorphism::new(
        space.clone(),
        vec![FullGroupElement::odometer(n), FullGroupElement::random_in(&space, &mut rng)],
    )?;
    let epsilon = Rational::from_integer(1);
    for tau in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        let before = realizes_tau_fraction(&alpha, 3, &tau, 6)?;
        let c = build_ht_perturbation(&alpha, 3, &tau, epsilon)?;
        let after = realizes_tau_fraction(&c.hom, 3, &tau, 2 * n)?;
        println!(
            "τ = {tau:?}: |O| = {:>2}, d = {:>6}, realized before (R=6) {:>7}, after {}",
            c.base.len(),
            to_text(&hom_metric(&alpha, &c.hom)?),
            to_text(&before),
            to_text(&after),
        );
    }
    Ok(())
}
