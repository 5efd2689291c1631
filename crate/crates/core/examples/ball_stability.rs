use irslab::actions::Homomorphism;
use irslab::analysis::ball_stability_check;
use irslab::finite_model::{FiniteSpace, FullGroupElement};
use irslab::rational::to_text;
use irslab::rng::{derive, streams};
use rand::Rng;

fn main() -> irslab::Result<()> {
    let space = FiniteSpace::dyadic(14)?;
    let n = space.n_atoms();
    let mut rng = derive(8, streams::TEST_FIXTURE, 0);
    let gens: Vec<_> = (0..2).map(|_| FullGroupElement::random_in(&space, &mut rng)).collect();
    let alpha = Homomorphism::new(space.clone(), gens.clone())?;

    for swaps in [1, 4, 16, 64] {
        let mut changed = gens.clone();
        for _ in 0..swaps {
            let (a, b) = (rng.random_range(0..n), rng.random_range(0..n));
            changed[1] = changed[1].compose(&FullGroupElement::transposition(n, a, b));
        }
        let beta = Homomorphism::new(space.clone(), changed)?;
        for radius in [1, 2] {
            let c = ball_stability_check(&alpha, &beta, radius)?;
            println!(
                "{swaps:>3} swaps, R = {radius}: δ = {:>9}  observed {:>9} ≤ bound {:>10}  {}",
                to_text(&c.delta),
                to_text(&c.observed),
                to_text(&c.bound),
                c.holds
            );
        }
    }
    Ok(())
}
