//! Empirical stabilizer distribution of a random action and its exact
//! conjugation invariance. Writes the distribution as CSV when given a path.

use std::env;
use std::fs;

use irslab::actions::{empirical_irs, invariance_defect, Homomorphism};
use irslab::finite_model::{FiniteSpace, FullGroupElement};
use irslab::rational::to_text;
use irslab::rng::{derive, streams};

fn main() -> irslab::Result<()> {
    let space = FiniteSpace::dyadic(10)?;
    let mut rng = derive(7, streams::TEST_FIXTURE, 0);
    let gens = (0..2).map(|_| FullGroupElement::random_in(&space, &mut rng)).collect();
    let alpha = Homomorphism::new(space, gens)?;

    for radius in 0..=3 {
        let irs = empirical_irs(&alpha, radius);
        let heaviest = irs.weights().into_values().max().unwrap();
        println!(
            "R = {radius}: {:>4} distinct traces, heaviest {:>7}, defect {}",
            irs.support_size(),
            to_text(&heaviest),
            to_text(&invariance_defect(&alpha, radius)),
        );
    }
    if let Some(path) = env::args().nth(1) {
        fs::write(&path, empirical_irs(&alpha, 2).to_csv())?;
        println!("wrote {path}");
    }
    Ok(())
}
