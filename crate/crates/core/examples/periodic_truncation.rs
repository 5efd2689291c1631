//! Cut the odometer along the dyadic filtration: each level-`j` block
//! becomes a cycle and the uniform distance is exactly `2^-j`.

use irslab::actions::Homomorphism;
use irslab::constructions::{orbits_within_blocks, periodic_truncate};
use irslab::finite_model::{uniform_metric, FiniteSpace, FullGroupElement};
use irslab::rational::to_text;

fn main() -> irslab::Result<()> {
    let space = FiniteSpace::dyadic(12)?;
    let alpha = Homomorphism::new(space, vec![FullGroupElement::odometer(1 << 12)])?;
    println!("{:>5} {:>10} {:>10} orbits in blocks", "level", "distance", "exit mass");
    for j in 0..=12 {
        let t = periodic_truncate(&alpha, j)?;
        let d = uniform_metric(alpha.gen(0), t.hom.gen(0))?;
        println!(
            "{j:>5} {:>10} {:>10} {}",
            to_text(&d),
            to_text(&t.exit_mass[0]),
            orbits_within_blocks(&t.hom, j)?
        );
    }
    Ok(())
}
