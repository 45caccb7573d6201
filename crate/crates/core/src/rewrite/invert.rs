use crate::coeff::Coefficient;
use crate::element::Element;
use crate::error::RewriteError;

use super::RuleSet;

/// What [`invert_perturbed`] needs from an algebra: ring operations and a
/// normal form. Implemented for plain elements under a rule set and for
/// tensor elements under a slot-wise rule set.
pub trait Algebra {
    type Elem: Clone;

    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RewriteError>;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RewriteError>;
    fn normalize(&self, a: &Self::Elem) -> Result<Self::Elem, RewriteError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn render(&self, a: &Self::Elem) -> String;
}

impl<K: Coefficient> Algebra for RuleSet<K> {
    type Elem = Element<K>;

    fn one(&self) -> Element<K> {
        Element::one(self.table())
    }

    fn add(&self, a: &Element<K>, b: &Element<K>) -> Result<Element<K>, RewriteError> {
        Ok(a.try_add(b)?)
    }

    fn neg(&self, a: &Element<K>) -> Element<K> {
        -a
    }

    fn mul(&self, a: &Element<K>, b: &Element<K>) -> Result<Element<K>, RewriteError> {
        Ok(a.try_mul(b)?)
    }

    fn normalize(&self, a: &Element<K>) -> Result<Element<K>, RewriteError> {
        RuleSet::normalize(self, a)
    }

    fn is_zero(&self, a: &Element<K>) -> bool {
        a.is_zero()
    }

    fn render(&self, a: &Element<K>) -> String {
        a.render(true)
    }
}

/// Longest Neumann series tried before giving up on nilpotency.
const MAX_SERIES: usize = 16;

/// Inverse of `x + n` given `x⁻¹`, for `x⁻¹·n` nilpotent:
/// `Σₖ (−x⁻¹n)ᵏ x⁻¹`, which is `x⁻¹ − x⁻¹·n·x⁻¹` when `(x⁻¹n)² = 0`.
///
/// Both `(x+n)·r = 1` and `r·(x+n) = 1` are verified in normal form before
/// returning.
pub fn invert_perturbed<A: Algebra>(
    alg: &A,
    x: &A::Elem,
    x_inv: &A::Elem,
    n: &A::Elem,
) -> Result<A::Elem, RewriteError> {
    let step = alg.normalize(&alg.neg(&alg.mul(x_inv, n)?))?;
    let mut term = alg.normalize(x_inv)?;
    let mut sum = term.clone();
    let mut converged = false;
    for _ in 0..MAX_SERIES {
        term = alg.normalize(&alg.mul(&step, &term)?)?;
        if alg.is_zero(&term) {
            converged = true;
            break;
        }
        sum = alg.add(&sum, &term)?;
    }
    if !converged {
        return Err(RewriteError::NotInvertible(format!(
            "perturbation `{}` is not nilpotent",
            alg.render(n)
        )));
    }
    let full = alg.add(x, n)?;
    let one = alg.one();
    for prod in [alg.mul(&full, &sum)?, alg.mul(&sum, &full)?] {
        let residual = alg.normalize(&alg.add(&prod, &alg.neg(&one))?)?;
        if !alg.is_zero(&residual) {
            return Err(RewriteError::NotInvertible(alg.render(&residual)));
        }
    }
    Ok(sum)
}
