use irslab::actions::{hom_metric, Homomorphism};
use irslab::analysis::core_check;
use irslab::constructions::{build_corefree_perturbation, tau_for_word};
use irslab::finite_model::{FiniteSpace, FullGroupElement};
use irslab::free_words::{cyclic_reduce, ReducedWord};
use irslab::rational::{to_text, Rational};

fn main() -> irslab::Result<()> {
    // s1 generates everything, s2 does nothing: every word in s2 alone is in the core
    let space = FiniteSpace::dyadic(10)?;
    let alpha = Homomorphism::new(
        space.clone(),
        vec![FullGroupElement::odometer(1024), FullGroupElement::identity(1024)],
    )?;
    let epsilon = Rational::new(1, 4);
    for text in ["s2", "s1 s2", "s2^2 s1^-1 s2", "s1^-1 s2 s1 s1 s2^-1", "s2 s1 s2 s1^-1"] {
        let g = ReducedWord::parse(2, text)?;
        let (_, core) = cyclic_reduce(&g);
        let c = build_corefree_perturbation(&alpha, &g, epsilon)?;
        println!(
            "{text:<22} τ = {:?}  trivial mass {} -> {}  d = {}",
            tau_for_word(&core)?,
            to_text(&core_check(&alpha, &g)?),
            to_text(&core_check(&c.hom, &g)?),
            to_text(&hom_metric(&alpha, &c.hom)?),
        );
    }
    match build_corefree_perturbation(&alpha, &ReducedWord::parse(2, "s2^-1 s1 s2")?, epsilon) {
        Err(e) => println!("s2^-1 s1 s2 rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
