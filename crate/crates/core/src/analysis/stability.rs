use crate::actions::{hom_metric, Homomorphism, Tracer};
use crate::error::Result;
use crate::free_words::ball_size;
use crate::rational::{fraction, Rational};

/// Outcome of [`ball_stability_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityCheck {
    pub delta: Rational,
    /// Fraction of atoms whose radius-`R` balls under the two actions differ.
    pub observed: Rational,
    /// `δ·(2R+1)·|B(2R+1)|`.
    pub bound: Rational,
    pub holds: bool,
}

/// Compares radius-`R` Schreier balls of `α` and `β` at every atom against
/// the bound from the Lipschitz estimate on words of length `2R+1`.
pub fn ball_stability_check(alpha: &Homomorphism, beta: &Homomorphism, radius: usize) -> Result<StabilityCheck> {
    let delta = hom_metric(alpha, beta)?;
    let code_radius = 2 * radius + 1;
    let tracer = Tracer::new(alpha.rank(), code_radius);
    let a = tracer.trace_all(alpha);
    let b = tracer.trace_all(beta);
    let bad = a.iter().zip(&b).filter(|(x, y)| x != y).count();
    let observed = fraction(bad, alpha.n_atoms());
    let bound = delta * Rational::from_integer((code_radius * ball_size(alpha.rank(), code_radius)) as i64);
    Ok(StabilityCheck {
        delta,
        observed,
        bound,
        holds: observed <= bound,
    })
}
