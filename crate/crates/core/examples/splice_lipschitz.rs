//! Splice a random target into a generator and watch the word-Lipschitz
//! bound `d(α(γ), β(γ)) ≤ ℓ(γ)·d(α, β)` hold on the whole ball of radius 4.

use irslab::actions::{hom_metric, Homomorphism};
use irslab::constructions::splice;
use irslab::finite_model::{uniform_metric, FiniteSpace, FullGroupElement};
use irslab::free_words::ball;
use irslab::rational::{to_text, Rational};
use irslab::rng::{derive, streams};

fn main() -> irslab::Result<()> {
    let space = FiniteSpace::dyadic(10)?;
    let n = space.n_atoms();
    let mut rng = derive(2024, streams::TEST_FIXTURE, 0);
    let alpha = Homomorphism::new(
        space.clone(),
        vec![FullGroupElement::odometer(n), FullGroupElement::random_in(&space, &mut rng)],
    )?;

    let set: Vec<usize> = (0..n).step_by(64).collect();
    let target = FullGroupElement::random_in(&space, &mut rng);
    let spliced = splice(&space, alpha.gen(1), &set, &target)?;
    let beta = alpha.with_generator(1, spliced)?;

    let d = hom_metric(&alpha, &beta)?;
    println!("|A| = {}, d(α, β) = {} (at most {})", set.len(), to_text(&d), to_text(&space.measure(2 * set.len())));

    let mut worst = Rational::from_integer(0);
    for w in ball(2, 4).iter().filter(|w| !w.is_empty()) {
        let dw = uniform_metric(&alpha.word_image(w), &beta.word_image(w))?;
        let slack = dw / Rational::from_integer(w.len() as i64);
        assert!(slack <= d, "{w}: {dw}");
        worst = worst.max(slack);
    }
    println!("max over |γ| ≤ 4 of d(α(γ), β(γ)) / |γ| = {}", to_text(&worst));
    Ok(())
}
