use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::finite_model::{FiniteSpace, FullGroupElement};

/// Surgery on `σ` that agrees with `τ` on `A`.
///
/// The result is `τ` on `A`, `σ` off `A ∪ σ⁻¹τA`, and on the remainder
/// `σ⁻¹τA ∖ A` a class-preserving bijection `η` onto `σA ∖ τA`. It differs
/// from `σ` on at most `2|A|` atoms.
///
/// `η` exists iff the two sets have equal size inside every class. The
/// pairing is made class by class in increasing atom order; classes where
/// the sizes differ are reported in the error.
pub fn splice(
    space: &FiniteSpace,
    sigma: &FullGroupElement,
    set: &[usize],
    tau: &FullGroupElement,
) -> Result<FullGroupElement> {
    let n = space.n_atoms();
    sigma.check_in(space)?;
    tau.check_in(space)?;
    let mut in_set = vec![false; n];
    for &x in set {
        if x >= n {
            return Err(Error::AtomOutOfRange { atom: x, n_atoms: n });
        }
        in_set[x] = true;
    }
    let mut in_tau_image = vec![false; n];
    let mut in_domain = vec![false; n];
    for x in (0..n).filter(|&x| in_set[x]) {
        let y = tau.apply(x);
        in_tau_image[y] = true;
        in_domain[sigma.apply_inverse(y)] = true;
    }

    let mut forward = vec![usize::MAX; n];
    let mut leftover: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for x in 0..n {
        if in_set[x] {
            forward[x] = tau.apply(x);
            let y = sigma.apply(x);
            if !in_tau_image[y] {
                leftover.entry(space.class_of(y)).or_default().1.push(y);
            }
        } else if in_domain[x] {
            leftover.entry(space.class_of(x)).or_default().0.push(x);
        } else {
            forward[x] = sigma.apply(x);
        }
    }
    let bad: Vec<usize> = leftover
        .iter()
        .filter(|(_, (from, to))| from.len() != to.len())
        .map(|(&c, _)| c)
        .collect();
    if !bad.is_empty() {
        return Err(Error::SpliceInfeasible { classes: bad });
    }
    for (_, (mut from, mut to)) in leftover {
        from.sort_unstable();
        to.sort_unstable();
        for (x, y) in from.into_iter().zip(to) {
            forward[x] = y;
        }
    }
    FullGroupElement::new(space, forward)
}

/// Extends a partial injection (given as pairs) to an element of `[E]`,
/// matching leftover atoms to leftover images in increasing order inside
/// each class.
pub fn extend_partial(space: &FiniteSpace, pairs: &[(usize, usize)]) -> Result<FullGroupElement> {
    let n = space.n_atoms();
    let mut forward = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    for &(x, y) in pairs {
        if x >= n || y >= n {
            return Err(Error::AtomOutOfRange { atom: x.max(y), n_atoms: n });
        }
        if space.class_of(x) != space.class_of(y) {
            return Err(Error::NotInFullGroup {
                atom: x,
                from_class: space.class_of(x),
                to_class: space.class_of(y),
            });
        }
        if forward[x] != usize::MAX && forward[x] != y {
            return Err(Error::Precondition(format!("atom {x} prescribed two images")));
        }
        if forward[x] == usize::MAX && taken[y] {
            return Err(Error::Precondition(format!("atom {y} prescribed two preimages")));
        }
        forward[x] = y;
        taken[y] = true;
    }
    for class in space.classes() {
        let mut free = class.iter().copied().filter(|&y| !taken[y]);
        for &x in class {
            if forward[x] == usize::MAX {
                forward[x] = free.next().expect("class sizes balance");
            }
        }
    }
    FullGroupElement::new(space, forward)
}
