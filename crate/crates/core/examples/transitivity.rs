use irslab::actions::Homomorphism;
use irslab::analysis::{generates_classwise_symmetric, transitivity_degree, StabilizerChain};
use irslab::finite_model::{FiniteSpace, FullGroupElement};

fn show(name: &str, n: usize, gens: Vec<FullGroupElement>) -> irslab::Result<()> {
    let hom = Homomorphism::new(FiniteSpace::single_class(n)?, gens)?;
    let perms: Vec<Vec<usize>> = hom.gens().iter().map(|g| g.forward().to_vec()).collect();
    let chain = StabilizerChain::new(n, &perms);
    println!(
        "{name:<12} order {:>6}  basic orbits {:?}  degree {}  symmetric {}",
        chain.order(),
        chain.orbit_sizes(),
        transitivity_degree(&hom, 0, n)?,
        generates_classwise_symmetric(&hom)?.symmetric,
    );
    Ok(())
}

fn main() -> irslab::Result<()> {
    show("C8", 8, vec![FullGroupElement::odometer(8)])?;
    show("D8", 8, vec![
        FullGroupElement::odometer(8),
        FullGroupElement::from_forward((0..8).map(|x| (8 - x) % 8).collect())?,
    ])?;
    show("A7", 7, vec![
        FullGroupElement::odometer(7),
        FullGroupElement::from_cycles(7, &[vec![0, 1, 2]])?,
    ])?;
    show("S8", 8, vec![FullGroupElement::odometer(8), FullGroupElement::transposition(8, 0, 1)])?;
    // PGL(2,7) on the projective line is 3-transitive of degree 8
    let inf = 7;
    let x_plus_1 = (0..8).map(|x| if x == inf { inf } else { (x + 1) % 7 }).collect();
    let minus_inv = (0..8)
        .map(|x| match x {
            0 => inf,
            x if x == inf => 0,
            x => (7 - (1..7).find(|y| (x * y) % 7 == 1).unwrap()) % 7,
        })
        .collect();
    let times_3 = (0..8).map(|x| if x == inf { inf } else { (3 * x) % 7 }).collect();
    show("PGL(2,7)", 8, vec![
        FullGroupElement::from_forward(x_plus_1)?,
        FullGroupElement::from_forward(minus_inv)?,
        FullGroupElement::from_forward(times_3)?,
    ])?;
    Ok(())
}
