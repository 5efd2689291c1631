//! Schreier balls of an action: DOT output, reconstruction from a
//! stabilizer trace, and an explicit isomorphism between two roots.

use irslab::actions::{balls_isomorphic, explicit_isomorphism, schreier_ball, stabilizer_trace, Homomorphism, SchreierBall, Tracer};
use irslab::finite_model::{FiniteSpace, FullGroupElement};

fn main() -> irslab::Result<()> {
    // two disjoint triangles swapped by s2
    let space = FiniteSpace::single_class(6)?;
    let s1 = FullGroupElement::from_cycles(6, &[vec![0, 1, 2], vec![3, 4, 5]])?;
    let s2 = FullGroupElement::from_cycles(6, &[vec![0, 3], vec![1, 4], vec![2, 5]])?;
    let hom = Homomorphism::new(space, vec![s1, s2])?;

    let ball = schreier_ball(&hom, 0, 2);
    print!("{}", ball.to_dot());

    let tracer = Tracer::new(2, 5);
    let rebuilt = SchreierBall::from_code(&stabilizer_trace(&hom, 0, 5), &tracer, 2);
    println!("ball from trace has {} vertices, action ball {}", rebuilt.vertices.len(), ball.vertices.len());

    println!("balls at 0 and 4 isomorphic: {}", balls_isomorphic(&hom, 0, &hom, 4, 2)?);
    if let Some(map) = explicit_isomorphism(&ball, &schreier_ball(&hom, 4, 2)) {
        println!("isomorphism: {map:?}");
    }
    Ok(())
}
