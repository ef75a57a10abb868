//! The coefficient-carrier abstraction.
//!
//! Series, matrices, and determinant expansions in this crate are generic
//! over the ring their coefficients live in: plain [`Scalar`]s, enveloping
//! algebra elements, Yangian elements, or tensor squares thereof.  The trait
//! is deliberately minimal; multiplication is *not* assumed commutative.

use num::rational::BigRational;

use crate::scalar::Scalar;

pub trait Ring: Clone + PartialEq + Eq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Embed a commutative scalar.
    fn from_scalar(s: &Scalar) -> Self;
    /// Multiply by a commutative scalar (scalars are central in every carrier).
    fn scale(&self, s: &Scalar) -> Self;
    /// Some(q) iff the element is the rational constant q.
    fn try_rational(&self) -> Option<BigRational>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn from_int(n: i64) -> Self {
        Self::from_scalar(&Scalar::from_int(n))
    }

    fn scale_rat(&self, q: &BigRational) -> Self {
        self.scale(&Scalar::from_rational(q.clone()))
    }

    /// ab - ba.
    fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Scalar::add(self, rhs)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Scalar::mul(self, rhs)
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn scale(&self, s: &Scalar) -> Self {
        Scalar::mul(self, s)
    }
    fn try_rational(&self) -> Option<BigRational> {
        Scalar::try_rational(self)
    }
}
