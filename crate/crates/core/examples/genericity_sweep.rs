//! Sample perturbations of a lean aperiodic action at growing radius and
//! count how many realize a swap or carry a Følner set.

use irslab::actions::Homomorphism;
use irslab::analysis::{genericity_sweep, Property};
use irslab::finite_model::{FiniteSpace, FullGroupElement};
use irslab::rational::{to_text, Rational};

fn main() -> irslab::Result<()> {
    let space = FiniteSpace::dyadic(7)?;
    let n = space.n_atoms();
    let alpha = Homomorphism::new(space, vec![FullGroupElement::odometer(n), FullGroupElement::identity(n)])?;
    let properties: Vec<Property> = ["realizes:2:1,0:12", "folner:4:2", "corefree:s2"]
        .iter()
        .map(|s| s.parse())
        .collect::<irslab::Result<_>>()?;

    print!("{:>6}", "ε");
    for p in &properties {
        print!(" {:>18}", p.to_string());
    }
    println!();
    for k in [0, 1, 2, 4, 8, 16] {
        let eps = Rational::new(k, 16);
        print!("{:>6}", to_text(&eps));
        for p in &properties {
            print!(" {:>18}", to_text(&genericity_sweep(&alpha, eps, 32, p, 42)?));
        }
        println!();
    }
    Ok(())
}
