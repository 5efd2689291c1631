use irslab::actions::{hom_metric, Homomorphism};
use irslab::analysis::{boundary_ratio, folner_search};
use irslab::constructions::build_folner_perturbation;
use irslab::finite_model::{FiniteSpace, FullGroupElement};
use irslab::rational::{to_text, Rational};
use irslab::rng::{derive, streams};

fn main() -> irslab::Result<()> {
    let space = FiniteSpace::dyadic(12)?;
    let n = space.n_atoms();
    let mut rng = derive(5, streams::TEST_FIXTURE, 0);
    let alpha = Homomorphism::new(
        space.clone(),
        vec![FullGroupElement::odometer(n), FullGroupElement::random_in(&space, &mut rng)],
    )?;
    let before = folner_search(&alpha, 0, 4, 2);
    println!("before: best ratio at atom 0 = {}", to_text(&before.best.unwrap().1));

    let epsilon = Rational::new(1, 8);
    let c = build_folner_perturbation(&alpha, epsilon, &[4, 8, 16, 32])?;
    println!("d(α, β) = {} ≤ {}", to_text(&hom_metric(&alpha, &c.hom)?), to_text(&epsilon));
    for (class, &t) in c.classes.iter().zip(&c.transversal) {
        let found = folner_search(&c.hom, t, class.len() / 2 - 1, 2);
        println!(
            "class of {:>2} from atom {t:>3}: ratio {:>5}, search finds {:>5} (success {})",
            class.len(),
            to_text(&boundary_ratio(&c.hom, class)),
            to_text(&found.best.unwrap().1),
            found.success,
        );
    }
    Ok(())
}
