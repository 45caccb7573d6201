//! Rational functions in `q`, the exact scalar type of the engine.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::coeff::Coefficient;
use crate::poly::Poly;

/// `num / den` with `den` monic and `gcd(num, den) = 1`; zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Coefficient> RatFunc<F> {
    /// Builds and normalizes `num / den`; `None` when `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalized(num, den))
    }

    fn normalized(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = den.constant_term().try_inv().expect("nonzero constant");
            return RatFunc {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_rem(&g).expect("gcd is nonzero").0,
                den.div_rem(&g).expect("gcd is nonzero").0,
            )
        };
        let lead_inv = den.leading().expect("nonzero").try_inv().expect("unit");
        if !lead_inv.is_one() {
            num = num.scale(&lead_inv);
            den = den.scale(&lead_inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(num: Poly<F>) -> Self {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn q() -> Self {
        Self::from_poly(Poly::q())
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    /// The constant value when the function does not involve `q`.
    pub fn as_constant(&self) -> Option<F> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.constant_term())
    }

    /// Value at `q = at`; `None` at a pole.
    pub fn eval(&self, at: &F) -> Option<F> {
        let d = self.den.eval(at);
        d.try_inv().map(|inv| self.num.eval(at) * inv)
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.try_inv().map(|inv| self.clone() * inv)
    }
}

impl<F: Coefficient> Zero for RatFunc<F> {
    fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Coefficient> One for RatFunc<F> {
    fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }
}

impl<F: Coefficient> Add for RatFunc<F> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num + rhs.num);
        }
        if self.den == rhs.den {
            return Self::normalized(self.num + rhs.num, self.den);
        }
        Self::normalized(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<F: Coefficient> Neg for RatFunc<F> {
    type Output = Self;

    fn neg(self) -> Self {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Coefficient> Sub for RatFunc<F> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Coefficient> Mul for RatFunc<F> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num * rhs.num);
        }
        Self::normalized(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<F: Coefficient> Coefficient for RatFunc<F> {
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }

    fn from_int(n: i64) -> Self {
        Self::constant(F::from_int(n))
    }

    fn is_q_free(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    fn looks_negative(&self) -> bool {
        self.num.leading().is_some_and(|c| c.looks_negative())
    }

    fn is_atomic(&self) -> bool {
        self.den.is_one() && self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
    }
}

impl<F: Coefficient> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let multi = |p: &Poly<F>| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if multi(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        let den_simple = !multi(&self.den) && self.den.leading().is_some_and(|c| c.is_one());
        if den_simple {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type R = RatFunc<BigRational>;

    fn int(n: i64) -> R {
        R::from_int(n)
    }

    #[test]
    fn q_minus_q_inverse() {
        // q - q^-1 = (q^2 - 1)/q
        let q = R::q();
        let lhs = q.clone() - q.try_inv().unwrap();
        let expect = R::new(
            Poly::new(vec![BigRational::from_int(-1), BigRational::zero(), BigRational::one()]),
            Poly::q(),
        )
        .unwrap();
        assert_eq!(lhs, expect);
        assert_eq!(lhs.to_string(), "(q^2 - 1)/q");
    }

    #[test]
    fn pole_cancels() {
        let qm1 = R::q() - int(1);
        assert_eq!(qm1.try_inv().unwrap() * qm1.clone(), R::one());
        assert_eq!(qm1.try_inv().unwrap().to_string(), "1/(q - 1)");
    }

    #[test]
    fn normalizes_constant_denominator() {
        // (2q - 2)/2 = q - 1
        let r = R::new(
            Poly::new(vec![BigRational::from_int(-2), BigRational::from_int(2)]),
            Poly::constant(BigRational::from_int(2)),
        )
        .unwrap();
        assert_eq!(r, R::q() - int(1));
        assert!(R::new(Poly::one(), Poly::zero()).is_none());
    }

    #[test]
    fn evaluation() {
        let r = (R::q() + int(1)).checked_div(&R::q()).unwrap();
        assert_eq!(r.eval(&BigRational::from_int(1)), Some(BigRational::from_int(2)));
        assert_eq!(r.eval(&BigRational::zero()), None);
    }
}
